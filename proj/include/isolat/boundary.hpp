#pragma once

#include <utility>

#include "isolat/lattice.hpp"
#include "isolat/table.hpp"

namespace isolat {

/// Directional and total edge boundary together with the vertex boundary.
/// total is the number of directed edges leaving S; per_direction[i] counts
/// those labelled by generator i.
struct BoundaryBreakdown {
  std::vector<Int> per_direction;
  Int total;
  Int vertex;
};

BoundaryBreakdown edge_boundary(const PointSet& s, const GeneratorSet& u);

/// Boundary in a single direction: |{v in S : v + u_i not in S}|.
Int directional_boundary(const PointSet& s, std::size_t i,
                         const GeneratorSet& u);

/// F_i = {v in S : v + u_i not in S}; S + {0,u_i} = S u (F_i + u_i) disjointly.
PointSet frontier(const PointSet& s, std::size_t i, const GeneratorSet& u);

/// |S + (U u {0})| - |S|.
Int vertex_boundary(const PointSet& s, const GeneratorSet& u);

/// Number of distinct lines {v + t*u_i : t in Z} meeting S. Lines are integer
/// translation classes modulo u_i, so an imprimitive generator keeps the
/// residue classes of one real line apart.
Int line_classes(const PointSet& s, std::size_t i, const GeneratorSet& u);

/// For disjoint T, Tp and direction j, returns the boundary increment
/// d_j(T u Tp) - d_j(T) and its set-theoretic form
/// |Tp \ ((T u Tp) - u_j)| - |Tp n (T + u_j)|. The two are always equal.
std::pair<Int, Int> split_sides(const PointSet& t, const PointSet& tp,
                                std::size_t j, const GeneratorSet& u);

/// d(S) <= (1 + eps) * optimum(|S|), decided in exact rational arithmetic.
bool epsilon_close(const PointSet& s, const GeneratorSet& u, const Rat& eps,
                   const BoundaryTable& table);

}  // namespace isolat
