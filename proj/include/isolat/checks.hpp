#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "isolat/boundary.hpp"
#include "isolat/lattice.hpp"

namespace isolat {

struct PropertyResult {
  std::string name;
  int passed = 0;
  int total = 0;
  std::string failure_detail;  // seed + offending inputs, empty when ok

  bool ok() const { return passed == total; }
};

using BoundaryHook =
    std::function<BoundaryBreakdown(const PointSet&, const GeneratorSet&)>;

struct CheckConfig {
  std::uint64_t seed = 42;
  int num_sets = 500;
  int max_size = 40;
  int coord_range = 10;
  // Test seam: the degree-sandwich check reads boundaries through this hook
  // so a corrupted implementation can be injected as a negative control.
  BoundaryHook boundary_hook;
};

/// Seeded randomized and deterministic identity checks for one generator
/// set: degree sandwich, split identity, staged-push telescoping, push-word
/// order independence, translation invariance, component additivity, the
/// dilate recurrence, line-class counts on Z(t), and Ehrhart consistency.
std::vector<PropertyResult> run_property_suite(const GeneratorSet& u,
                                               const CheckConfig& config);

/// Deterministic uniform helpers shared by the randomized suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next();
  /// Uniform in [lo, hi] (inclusive).
  long uniform(long lo, long hi);

 private:
  std::uint64_t state_;
};

/// Random subset of the coordinate box [-coord_range, coord_range]^dim with
/// the requested size (deduped sampling).
PointSet random_point_set(Rng& rng, int dim, int size, int coord_range);

}  // namespace isolat
