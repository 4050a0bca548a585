#include "toric/report.hpp"

#include <sstream>

namespace toric {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string ids_csv(const std::vector<int>& ids) {
  std::ostringstream os;
  for (size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
  return os.str();
}

std::string ints_csv(const std::vector<Int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string rats_csv(const RationalVector& v) {
  std::ostringstream os;
  for (int i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string np_summary(const std::map<int, int>& counts) {
  if (counts.empty()) return "-";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : counts) {
    os << (first ? "" : " ") << p << ':' << c;
    first = false;
  }
  return os.str();
}

void machine_header(std::ostringstream& os, const AnalysisReport& r) {
  os << "name = " << (r.name.empty() ? "-" : r.name) << "\n";
  os << "dim = " << r.n << "\n";
  os << "rays = " << r.num_rays << "\n";
  os << "picard_number = " << r.rho << "\n";
}

void machine_collections(std::ostringstream& os, const AnalysisReport& r) {
  os << "primitive_collections = " << r.collections.size() << "\n";
  for (size_t i = 0; i < r.collections.size(); ++i) {
    const auto& pc = r.collections[i];
    const std::string key = "pc." + std::to_string(i);
    os << key << ".rays = " << ids_csv(pc.ray_ids) << "\n";
    os << key << ".order = " << pc.order << "\n";
    os << key << ".sum = " << ints_csv(pc.sum.coords()) << "\n";
    os << key << ".relation_cone = "
       << (pc.relation_cone.is_zero() ? "-" : ids_csv(pc.relation_cone.ray_ids)) << "\n";
    os << key << ".relation_coeffs = "
       << (pc.relation_coeffs.empty() ? "-" : ints_csv(pc.relation_coeffs)) << "\n";
    os << key << ".degree = " << pc.degree << "\n";
  }
}

void machine_components(std::ostringstream& os, const AnalysisReport& r) {
  os << "minimal_components = " << r.components.size() << "\n";
  for (size_t i = 0; i < r.components.size(); ++i) {
    const auto& mc = r.components[i];
    const std::string key = "mc." + std::to_string(i);
    os << key << ".rays = " << ids_csv(mc.collection.ray_ids) << "\n";
    os << key << ".order = " << mc.order << "\n";
    os << key << ".degree = " << mc.degree << "\n";
    os << key << ".p = " << mc.p << "\n";
    os << key << ".vmrt_dim = " << mc.vmrt_dim << "\n";
    os << key << ".locus_dim = " << mc.locus_dim << "\n";
  }
}

void machine_bounds(std::ostringstream& os, const BoundsReport& b) {
  os << "bounds.lhs = " << b.bound_i_lhs << "\n";
  os << "bounds.rhs = " << b.bound_i_rhs << "\n";
  os << "bounds.n_p = " << np_summary(b.per_degree_counts) << "\n";
  os << "bounds.i_ok = " << bool_str(b.bound_i_ok) << "\n";
  os << "bounds.ii_ok = " << bool_str(b.bound_ii_ok) << "\n";
  os << "bounds.iii_ok = " << bool_str(b.bound_iii_ok) << "\n";
  os << "bounds.alarm = " << bool_str(b.alarm()) << "\n";
}

void machine_conjecture(std::ostringstream& os, const ConjectureReport& c) {
  os << "conjecture.applicable = " << bool_str(c.applicable) << "\n";
  os << "conjecture.rhs = " << c.rhs << "\n";
  os << "conjecture.mukai_rho_ok = " << (c.fano ? bool_str(c.mukai_rho_ok) : "n/a") << "\n";
  os << "conjecture.mukai_iota_ok = " << (c.fano ? bool_str(c.mukai_iota_ok) : "n/a") << "\n";
  for (size_t i = 0; i < c.per_component.size(); ++i) {
    const auto& cc = c.per_component[i];
    const std::string key = "conjecture.cmp." + std::to_string(i);
    os << key << ".p = " << cc.p << "\n";
    os << key << ".lhs = " << cc.lhs << "\n";
    os << key << ".ok = " << bool_str(cc.ok) << "\n";
    os << key << ".equality = " << bool_str(cc.equality) << "\n";
  }
  os << "counterexample_candidate = " << bool_str(c.counterexample_candidate) << "\n";
}

void machine_classification(std::ostringstream& os, const DegNClassification& c) {
  os << "classification = " << to_string(c.kind) << "\n";
  std::ostringstream ev;
  for (size_t i = 0; i < c.notes.size(); ++i) ev << (i ? "; " : "") << c.notes[i];
  for (const auto& a : c.alarms) ev << (ev.str().empty() ? "" : "; ") << "ALARM: " << a;
  os << "classification.evidence = " << (ev.str().empty() ? "-" : ev.str()) << "\n";
}

std::string human_collection_line(const PrimitiveCollection& pc) {
  std::ostringstream os;
  os << "  {" << ids_csv(pc.ray_ids) << "}  order " << pc.order << ", degree " << pc.degree;
  if (pc.zero_sum()) {
    os << ", sum 0";
  } else {
    os << ", sum " << pc.sum.str() << " = ";
    for (size_t i = 0; i < pc.relation_coeffs.size(); ++i)
      os << (i ? " + " : "") << pc.relation_coeffs[i] << "*r" << pc.relation_cone.ray_ids[i];
  }
  return os.str();
}

}  // namespace

RenderedReport render_report(const AnalysisReport& r, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Machine) {
    machine_header(os, r);
    os << "smooth = " << bool_str(r.validation.smooth_ok) << "\n";
    os << "axioms = " << bool_str(r.validation.axioms_ok) << "\n";
    os << "complete = " << bool_str(r.validation.complete_ok) << "\n";
    os << "valid = " << bool_str(r.validation.ok()) << "\n";
    os << "projective = " << bool_str(r.projective) << "\n";
    os << "ample_witness = " << (r.ample_witness ? rats_csv(*r.ample_witness) : "-") << "\n";
    os << "fano = " << bool_str(r.fano) << "\n";
    os << "pseudo_index = ";
    if (r.iota)
      os << *r.iota << "\n";
    else
      os << "n/a\n";
    machine_collections(os, r);
    machine_components(os, r);
    machine_bounds(os, r.bounds);
    machine_conjecture(os, r.conjecture);
    machine_classification(os, r.classification);
    return {format, os.str()};
  }

  os << "== " << (r.name.empty() ? "fan" : r.name) << " ==\n";
  os << "dimension " << r.n << ", " << r.num_rays << " rays, Picard number " << r.rho << "\n";
  os << "validated: smooth, fan axioms, complete\n";
  os << "projective: " << bool_str(r.projective);
  if (r.ample_witness) os << "  (ample divisor " << r.ample_witness->str() << ")";
  os << "\n";
  os << "Fano: " << bool_str(r.fano);
  if (r.iota) os << "  (pseudo-index " << *r.iota << ")";
  os << "\n";

  os << "\nprimitive collections (" << r.collections.size() << "):\n";
  for (const auto& pc : r.collections) os << human_collection_line(pc) << "\n";

  os << "\nminimal components <-> zero-sum primitive collections (" << r.components.size()
     << "):\n";
  for (const auto& mc : r.components)
    os << "  {" << ids_csv(mc.collection.ray_ids) << "}  order " << mc.order << ", degree "
       << mc.degree << ", VMRT dim " << mc.vmrt_dim << ", locus P^" << mc.locus_dim << "\n";

  os << "\ncomponent-count bounds:\n";
  os << "  sum n_p(p+2) = " << r.bounds.bound_i_lhs << " <= " << r.bounds.bound_i_rhs
     << " = n + rho: " << (r.bounds.bound_i_ok ? "ok" : "VIOLATED") << "\n";
  os << "  degree pairs p+q <= n-2: " << (r.bounds.bound_ii_ok ? "ok" : "VIOLATED") << "\n";
  os << "  n_p <= 1 for p >= (n-1)/2: " << (r.bounds.bound_iii_ok ? "ok" : "VIOLATED") << "\n";
  for (const auto& v : r.bounds.violations) os << "  ALARM: " << v << "\n";

  os << "\nconjectured bound rho*(p+1) <= n(n+1)/2:\n";
  if (!r.conjecture.applicable) {
    os << "  not applicable (needs Fano, n >= 3, and a minimal component)\n";
  } else {
    for (const auto& cc : r.conjecture.per_component) {
      os << "  p = " << cc.p << ": " << cc.lhs << " <= " << r.conjecture.rhs << ": "
         << (cc.ok ? (cc.equality ? "equality" : "ok") : "VIOLATED (counterexample candidate)")
         << "\n";
    }
  }
  if (r.conjecture.fano) {
    os << "  Mukai bounds: rho <= 2n " << (r.conjecture.mukai_rho_ok ? "ok" : "VIOLATED")
       << ", rho(iota-1) <= n " << (r.conjecture.mukai_iota_ok ? "ok" : "VIOLATED") << "\n";
  }

  os << "\ndegree-n classification: " << to_string(r.classification.kind) << "\n";
  for (const auto& nte : r.classification.notes) os << "  " << nte << "\n";
  for (const auto& a : r.classification.alarms) os << "  ALARM: " << a << "\n";
  return {format, os.str()};
}

RenderedReport render_validation(const std::string& name, const ValidationReport& rep,
                              ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Machine) {
    os << "name = " << (name.empty() ? "-" : name) << "\n";
    os << "smooth = " << bool_str(rep.smooth_ok) << "\n";
    os << "axioms = " << bool_str(rep.axioms_ok) << "\n";
    os << "complete = " << bool_str(rep.complete_ok) << "\n";
    os << "valid = " << bool_str(rep.ok()) << "\n";
    for (size_t i = 0; i < rep.failures.size(); ++i)
      os << "failure." << i << " = [" << to_string(rep.failures[i].kind) << "] "
         << rep.failures[i].message << "\n";
    return {format, os.str()};
  }
  os << "== " << (name.empty() ? "fan" : name) << " ==\n";
  if (rep.ok()) {
    os << "valid: smooth, fan axioms hold, complete\n";
  } else {
    os << "INVALID (smooth " << bool_str(rep.smooth_ok) << ", axioms " << bool_str(rep.axioms_ok)
       << ", complete " << bool_str(rep.complete_ok) << ")\n";
    for (const auto& f : rep.failures)
      os << "  [" << to_string(f.kind) << "] " << f.message << "\n";
  }
  return {format, os.str()};
}

RenderedReport render_collections(const AnalysisReport& r, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Machine) {
    machine_header(os, r);
    machine_collections(os, r);
    return {format, os.str()};
  }
  os << "== " << (r.name.empty() ? "fan" : r.name) << ": primitive collections ("
     << r.collections.size() << ") ==\n";
  for (const auto& pc : r.collections) os << human_collection_line(pc) << "\n";
  return {format, os.str()};
}

RenderedReport render_components(const AnalysisReport& r, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Machine) {
    machine_header(os, r);
    machine_components(os, r);
    return {format, os.str()};
  }
  os << "== " << (r.name.empty() ? "fan" : r.name) << ": minimal components ("
     << r.components.size() << ") ==\n";
  for (const auto& mc : r.components)
    os << "  {" << ids_csv(mc.collection.ray_ids) << "}  order " << mc.order << ", degree "
       << mc.degree << ", VMRT dim " << mc.vmrt_dim << ", locus P^" << mc.locus_dim << "\n";
  return {format, os.str()};
}

RenderedReport render_bounds(const AnalysisReport& r, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Machine) {
    machine_header(os, r);
    machine_bounds(os, r.bounds);
    return {format, os.str()};
  }
  os << "== " << (r.name.empty() ? "fan" : r.name) << ": component-count bounds ==\n";
  os << "  n_p by p: " << np_summary(r.bounds.per_degree_counts) << "\n";
  os << "  (i)   sum n_p(p+2) = " << r.bounds.bound_i_lhs << " <= " << r.bounds.bound_i_rhs
     << ": " << (r.bounds.bound_i_ok ? "ok" : "VIOLATED") << "\n";
  os << "  (ii)  p+q <= n-2 for distinct components: "
     << (r.bounds.bound_ii_ok ? "ok" : "VIOLATED") << "\n";
  os << "  (iii) n_p <= 1 for p >= (n-1)/2: " << (r.bounds.bound_iii_ok ? "ok" : "VIOLATED")
     << "\n";
  for (const auto& v : r.bounds.violations) os << "  ALARM: " << v << "\n";
  return {format, os.str()};
}

RenderedReport render_conjecture(const AnalysisReport& r, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Machine) {
    machine_header(os, r);
    os << "fano = " << bool_str(r.fano) << "\n";
    os << "pseudo_index = ";
    if (r.iota)
      os << *r.iota << "\n";
    else
      os << "n/a\n";
    machine_conjecture(os, r.conjecture);
    return {format, os.str()};
  }
  os << "== " << (r.name.empty() ? "fan" : r.name) << ": conjectured bound ==\n";
  if (!r.conjecture.applicable) {
    os << "  not applicable (needs Fano, n >= 3, and a minimal component)\n";
    return {format, os.str()};
  }
  for (const auto& cc : r.conjecture.per_component)
    os << "  p = " << cc.p << ": rho*(p+1) = " << cc.lhs << " <= " << r.conjecture.rhs << ": "
       << (cc.ok ? (cc.equality ? "equality" : "ok") : "VIOLATED (counterexample candidate)")
       << "\n";
  os << "  Mukai bounds: rho <= 2n " << (r.conjecture.mukai_rho_ok ? "ok" : "VIOLATED")
     << ", rho(iota-1) <= n " << (r.conjecture.mukai_iota_ok ? "ok" : "VIOLATED") << "\n";
  return {format, os.str()};
}

RenderedReport render_classification(const AnalysisReport& r, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Machine) {
    machine_header(os, r);
    machine_classification(os, r.classification);
    return {format, os.str()};
  }
  os << "== " << (r.name.empty() ? "fan" : r.name) << ": degree-n classification ==\n";
  os << "  " << to_string(r.classification.kind) << "\n";
  for (const auto& nte : r.classification.notes) os << "  " << nte << "\n";
  for (const auto& a : r.classification.alarms) os << "  ALARM: " << a << "\n";
  return {format, os.str()};
}

}  // namespace toric
