#include "toric/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "toric/analysis.hpp"
#include "toric/builtins.hpp"
#include "toric/fan_io.hpp"
#include "toric/report.hpp"

namespace toric {

namespace {

namespace fs = std::filesystem;

// Local control-flow exceptions mapping to the documented exit codes.
struct ValidationExit {
  std::string rendered;  // printed to out; exit 1
};
struct UsageExit {
  std::string message;  // printed to err; exit 2
};

struct LoadedFan {
  Fan fan;
  std::string name;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageExit{"cannot read file '" + path + "'"};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string builtin_label(const std::string& name, std::optional<int> param) {
  return param ? name + "_" + std::to_string(*param) : name;
}

LoadedFan load_builtin(const std::string& name, std::optional<int> param) {
  return {builtin_fan(name, param), builtin_label(name, param)};
}

// A fan argument is a file path, or "builtin:<name>" / "builtin:<name>:<k>".
LoadedFan load_spec(const std::string& token, ReportFormat format) {
  if (token.rfind("builtin:", 0) == 0) {
    std::string rest = token.substr(8);
    std::optional<int> param;
    if (auto colon = rest.find(':'); colon != std::string::npos) {
      try {
        param = std::stoi(rest.substr(colon + 1));
      } catch (const std::exception&) {
        throw UsageExit{"bad builtin parameter in '" + token + "'"};
      }
      rest.erase(colon);
    }
    return load_builtin(rest, param);
  }
  FanDocument doc = parse_fan(read_file(token));
  doc.source = token;
  BuildResult built = build_document(doc);
  if (!built.fan) throw ValidationExit{render_validation(token, built.report, format).body};
  return {std::move(*built.fan), token};
}

struct FanArg {
  std::string positional;
  std::string builtin;
  int param = 0;
  bool has_param = false;

  void attach(CLI::App* sub) {
    sub->add_option("fan", positional, "fan file or builtin:<name>[:<k>]");
    sub->add_option("--builtin", builtin, "use a builtin fan instead of a file");
    sub->add_option("--param", param, "parameter for parametrized builtins")
        ->needs(sub->get_option("--builtin"));
    sub->callback([this, sub] {
      if (builtin.empty() && positional.empty())
        throw UsageExit{"subcommand '" + sub->get_name() +
                        "' needs a fan file or --builtin <name>"};
      if (!builtin.empty() && !positional.empty())
        throw UsageExit{"give either a fan file or --builtin, not both"};
      has_param = sub->count("--param") > 0;
    });
  }

  LoadedFan load(ReportFormat format) const {
    if (!builtin.empty())
      return load_builtin(builtin, has_param ? std::optional<int>(param) : std::nullopt);
    return load_spec(positional, format);
  }
};

std::vector<int> parse_cone_ids(const std::string& text) {
  std::vector<int> ids;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    try {
      ids.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageExit{"bad ray index '" + tok + "' in --cone"};
    }
  }
  if (ids.empty()) throw UsageExit{"--cone needs a comma-separated list of ray indices"};
  return ids;
}

void emit_fan(const Fan& fan, const std::string& name, const std::string& out_path,
              std::ostream& out) {
  FanDocument doc = document_from_fan(fan, name);
  doc.source = out_path.empty() ? "stdout" : out_path;
  const std::string text = serialize_fan(doc);
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageExit{"cannot write file '" + out_path + "'"};
  f << text;
  out << "wrote " << out_path << " (" << fan.num_rays() << " rays, "
      << fan.max_cones().size() << " maximal cones)\n";
}

int run_scan(const std::string& dir, ReportFormat format, std::ostream& out) {
  if (!fs::is_directory(dir)) throw UsageExit{"'" + dir + "' is not a directory"};
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".fan")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());

  int invalid = 0, errors = 0;
  std::ostringstream body;
  std::vector<std::pair<std::string, std::string>> summary;  // name, status

  for (const auto& path : files) {
    try {
      FanDocument doc = parse_fan(read_file(path));
      doc.source = path;
      BuildResult built = build_document(doc);
      if (!built.fan) {
        ++invalid;
        body << render_validation(path, built.report, format).body;
        if (format == ReportFormat::Human) body << "\n";
        summary.emplace_back(path, "invalid");
        continue;
      }
      AnalysisReport rep = summarize(*built.fan, path);
      if (format == ReportFormat::Machine) body << "file = " << path << "\n";
      body << render_report(rep, format).body;
      if (format == ReportFormat::Human) body << "\n";
      std::ostringstream status;
      status << "ok  n=" << rep.n << " rays=" << rep.num_rays << " rho=" << rep.rho
             << " projective=" << (rep.projective ? "yes" : "no")
             << " fano=" << (rep.fano ? "yes" : "no") << " components=" << rep.components.size();
      summary.emplace_back(path, status.str());
    } catch (const Error& e) {
      ++errors;
      body << (format == ReportFormat::Machine ? "file = " + path + "\nerror = " : path + ": ")
           << e.what() << "\n";
      summary.emplace_back(path, std::string("error: ") + e.what());
    } catch (const UsageExit& e) {
      ++errors;
      summary.emplace_back(path, e.message);
    }
  }

  out << body.str();
  if (format == ReportFormat::Machine) {
    out << "scanned = " << files.size() << "\n";
    out << "invalid = " << invalid << "\n";
    out << "errors = " << errors << "\n";
  } else {
    out << "== scan summary (" << files.size() << " files) ==\n";
    for (const auto& [name, status] : summary) out << "  " << name << ": " << status << "\n";
  }
  if (errors > 0) return 2;
  if (invalid > 0) return 1;
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"smooth complete toric fans: primitive collections, minimal rational "
               "components, projectivity and Fano tests",
               "toricfan"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --format appear after the subcommand
  std::string format_name = "human";
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();

  auto fmt = [&format_name] {
    return format_name == "machine" ? ReportFormat::Machine : ReportFormat::Human;
  };

  int exit_code = 0;

  FanArg validate_arg;
  auto* validate = app.add_subcommand("validate", "check smoothness, fan axioms, completeness");
  validate_arg.attach(validate);

  FanArg report_arg;
  auto* report = app.add_subcommand("report", "full analysis report");
  report_arg.attach(report);

  FanArg pc_arg;
  auto* pcs = app.add_subcommand("primitive-collections", "list all primitive collections");
  pc_arg.attach(pcs);

  FanArg mc_arg;
  auto* mcs = app.add_subcommand("minimal-components", "list zero-sum collections as components");
  mc_arg.attach(mcs);

  FanArg bounds_arg;
  auto* bounds = app.add_subcommand("check-bounds", "component-count bounds");
  bounds_arg.attach(bounds);

  FanArg conj_arg;
  auto* conj = app.add_subcommand("check-conjecture", "conjectured bound and Mukai bounds");
  conj_arg.attach(conj);

  FanArg degn_arg;
  auto* degn = app.add_subcommand("classify-degn", "classify a degree-n minimal component");
  degn_arg.attach(degn);

  FanArg blowup_arg;
  std::string blowup_cone, blowup_out;
  auto* blowup = app.add_subcommand("blowup", "star subdivision along a cone");
  blowup_arg.attach(blowup);
  blowup->add_option("--cone", blowup_cone, "comma-separated ray indices of the target cone")
      ->required();
  blowup->add_option("-o,--output", blowup_out, "write the subdivided fan to this file");

  std::vector<std::string> product_specs;
  std::string product_out;
  auto* prod = app.add_subcommand("product", "product of two fans");
  prod->add_option("fans", product_specs, "two fan files or builtin:<name>[:<k>] specs")
      ->expected(2);
  prod->add_option("-o,--output", product_out, "write the product fan to this file");

  auto* blist = app.add_subcommand("builtin-list", "list builtin fans");

  std::string scan_dir;
  auto* scan = app.add_subcommand("scan", "analyze every .fan file in a directory");
  scan->add_option("dir", scan_dir, "directory of fan files")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);

    if (*validate) {
      LoadedFan lf = validate_arg.load(fmt());
      out << render_validation(lf.name, ValidationReport{}, fmt()).body;
    } else if (*report) {
      LoadedFan lf = report_arg.load(fmt());
      out << render_report(summarize(lf.fan, lf.name), fmt()).body;
    } else if (*pcs) {
      LoadedFan lf = pc_arg.load(fmt());
      out << render_collections(summarize(lf.fan, lf.name), fmt()).body;
    } else if (*mcs) {
      LoadedFan lf = mc_arg.load(fmt());
      out << render_components(summarize(lf.fan, lf.name), fmt()).body;
    } else if (*bounds) {
      LoadedFan lf = bounds_arg.load(fmt());
      out << render_bounds(summarize(lf.fan, lf.name), fmt()).body;
    } else if (*conj) {
      LoadedFan lf = conj_arg.load(fmt());
      out << render_conjecture(summarize(lf.fan, lf.name), fmt()).body;
    } else if (*degn) {
      LoadedFan lf = degn_arg.load(fmt());
      out << render_classification(summarize(lf.fan, lf.name), fmt()).body;
    } else if (*blowup) {
      LoadedFan lf = blowup_arg.load(fmt());
      Fan result = star_subdivide(lf.fan, Cone::of(parse_cone_ids(blowup_cone)));
      emit_fan(result, lf.name + "_blowup", blowup_out, out);
    } else if (*prod) {
      LoadedFan a = load_spec(product_specs[0], fmt());
      LoadedFan b = load_spec(product_specs[1], fmt());
      emit_fan(product(a.fan, b.fan), a.name + "_x_" + b.name, product_out, out);
    } else if (*blist) {
      for (const auto& info : builtin_catalog())
        out << std::left << std::setw(18) << info.name
            << (info.takes_param ? "(takes --param)  " : "                 ")
            << info.description << "\n";
    } else if (*scan) {
      exit_code = run_scan(scan_dir, fmt(), out);
    }
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const ValidationExit& v) {
    out << v.rendered;
    return 1;
  } catch (const UsageExit& u) {
    err << "error: " << u.message << "\n";
    return 2;
  } catch (const toric::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace toric
