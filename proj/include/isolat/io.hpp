#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "isolat/asymptotics.hpp"
#include "isolat/exact.hpp"
#include "isolat/lattice.hpp"
#include "isolat/table.hpp"

namespace isolat::io {

struct Options {
  int t_max = 20;
  int n_max = 10;
  int radius = 2;
  std::uint64_t seed = 42;
  std::uint64_t budget = 0;  // 0 = library defaults
  int check_count = 500;
  std::string format;  // "", "json" or "csv"
  std::optional<std::pair<double, double>> ratio_band;
};

/// Parsed problem input: dimension, raw generator vectors and options.
/// Generators are validated by the command layer, not here.
struct ProblemSpec {
  int dim = 0;
  std::vector<LatticeVector> generators;
  Options options;
};

ProblemSpec parse_problem_spec(const nlohmann::json& j);
ProblemSpec load_problem_spec(const std::string& path);

nlohmann::json point_set_to_json(const PointSet& s);
PointSet point_set_from_json(int dim, const nlohmann::json& j);

nlohmann::json table_to_json(const BoundaryTable& table);

SearchLimits limits_from_options(const Options& opt);

}  // namespace isolat::io
