#pragma once

#include <string>
#include <vector>

#include "isolat/table.hpp"
#include "isolat/zonotope.hpp"

namespace isolat {

/// d * vol(Z)^(1/d) * n^(1-1/d): the asymptotic edge-isoperimetric scale.
Real edge_bound(const GeneratorSet& u, const Int& n);

/// d * vol(conv(U u {0}))^(1/d) * n^(1-1/d): the vertex-boundary scale.
Real vertex_bound(const GeneratorSet& u, const Int& n);

/// Exact volume of the convex hull of an integer point set (dim <= 3).
/// Facet enumeration by sidedness over d-subsets, then a fan triangulation
/// from a fixed vertex summing |det|/d!.
Rat hull_volume(int dim, const std::vector<LatticeVector>& pts);

struct CompareRow {
  Int t;
  Int n;            // |Z(t)|
  Int edge;         // d(Z(t))
  Int telescoped;   // |Z(t+1)| - |Z(t)|
  Real bound;       // edge_bound at n
  Real ratio;       // edge / bound
};

/// One row per t = 1..t_max. Enforces edge <= telescoped on every row.
std::vector<CompareRow> compare_report(const GeneratorSet& u, int t_max);

/// CSV with header "t,n,edge_boundary,telescoped,bound,ratio"; reals fixed
/// at 12 decimal places.
std::string compare_csv(const std::vector<CompareRow>& rows);

struct ProbeResult {
  Int t;
  Int n;
  Int zt_boundary;
  Int optimum;
  bool optimal;
};

/// Does Z(t) attain the exact optimum at its size? Requires |Z(t)| to be in
/// the table; experimental evidence only.
ProbeResult optimality_probe(const GeneratorSet& u, const BoundaryTable& table,
                             const Int& t);

}  // namespace isolat
