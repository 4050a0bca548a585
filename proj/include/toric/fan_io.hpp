#pragma once

#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

// Parsed fan file. The text format is:
//   dim: <n>
//   rays:
//   <n space-separated integers per line, one ray per line>
//   maxcones:
//   <space-separated zero-based ray indices per line, one cone per line>
// '#' starts a comment to end of line; blank lines are ignored.
struct FanDocument {
  int dim = 0;
  std::vector<std::vector<Int>> ray_rows;
  std::vector<std::vector<int>> cone_rows;
  std::string name;    // optional label, not part of the file format
  std::string source;  // file path or builtin tag
};

// Throws ParseError with line number and reason.
FanDocument parse_fan(const std::string& text);

// Canonical text; parse_fan(serialize_fan(d)) reproduces d's rows exactly.
std::string serialize_fan(const FanDocument& doc);

FanDocument document_from_fan(const Fan& fan, const std::string& name = "");

BuildResult build_document(const FanDocument& doc);

}  // namespace toric
