#pragma once

#include <map>

#include "isolat/lattice.hpp"

namespace isolat {

/// Exact minimum edge boundaries for small sizes, with optimal witnesses in
/// canonical form. Produced by the exact solver; consumed by lookups.
struct BoundaryTable {
  struct Entry {
    Int optimum;
    PointSet witness;
  };

  int dim = 0;
  std::map<int, Entry> entries;

  bool has(int n) const { return entries.count(n) != 0; }
  const Entry& at(int n) const;
  int max_n() const { return entries.empty() ? 0 : entries.rbegin()->first; }
};

}  // namespace isolat
