#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "lbw/workspace.hpp"

namespace lbw::cli {

enum Exit : int { kPass = 0, kFail = 1, kUsage = 2 };

using Args = std::vector<std::string>;

struct CheckSpec {
  std::string name;
  std::vector<std::size_t> arities;
  std::string usage;  // entity roles, e.g. "<bialgebra> <phi> <psi>"
  std::function<Report(const Workspace&, const Args&)> run;
};

// The entities to write plus the report that vetted them. Nothing is
// written unless `report.pass()`.
struct Built {
  Workspace out;
  Report report;
};

struct ConstructSpec {
  std::string name;
  std::vector<std::size_t> arities;
  std::string usage;
  std::function<Built(const Workspace&, const Args&, const std::string& id)> run;
};

const std::vector<CheckSpec>& checks();
const std::vector<ConstructSpec>& constructions();

// Full command line without the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace lbw::cli
