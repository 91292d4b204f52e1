#pragma once

#include <cstdint>
#include <functional>

#include "isolat/lattice.hpp"
#include "isolat/table.hpp"

namespace isolat {

/// Budgets for the exhaustive searches. subset_budget caps the binomial
/// count C(box, n) of the box oracle; node_budget caps search-tree nodes of
/// the connected enumeration. The ISOLAT_BUDGET environment variable (read by
/// the CLI) overrides both.
struct SearchLimits {
  std::uint64_t node_budget = 50'000'000;
  std::uint64_t subset_budget = 100'000'000;
  int n_max = 10;
};

/// Streams every connected n-point subset of Z^d once up to translation, in
/// canonical form. Connectivity is with respect to +-U adjacency.
void enumerate_connected(const GeneratorSet& u, int n,
                         const SearchLimits& limits,
                         const std::function<void(const PointSet&)>& sink);

/// Convenience: collect the stream into a vector.
std::vector<PointSet> enumerate_connected(const GeneratorSet& u, int n,
                                          const SearchLimits& limits);

/// Exact optimum table for n = 1..N: minimum over connected candidates
/// combined with a subadditive split over smaller sizes (edge boundary is
/// additive across components). Witnesses are canonical; disconnected
/// witnesses are stored as far-apart unions.
BoundaryTable exact_table(const GeneratorSet& u, int n_top,
                          const SearchLimits& limits);

/// Independent ground truth: minimum edge boundary over all n-subsets of the
/// box [-radius, radius]^d that contain the origin (valid up to translation;
/// the caller picks radius large enough for an optimal translate to fit --
/// radius >= n * max generator norm always suffices).
Int brute_force_oracle(const GeneratorSet& u, int n, int radius,
                       const SearchLimits& limits);

}  // namespace isolat
