#include "isolat/boundary.hpp"

#include <algorithm>
#include <set>

namespace isolat {

namespace {

void require_compatible(const PointSet& s, const GeneratorSet& u) {
  if (s.dim != u.dim) {
    raise(Errc::dimension_mismatch, "set and generators differ in dimension");
  }
}

void require_index(std::size_t i, const GeneratorSet& u) {
  if (i >= u.k()) {
    raise(Errc::index_out_of_range,
          "generator index " + std::to_string(i) + " out of range");
  }
}

}  // namespace

const BoundaryTable::Entry& BoundaryTable::at(int n) const {
  auto it = entries.find(n);
  if (it == entries.end()) {
    raise(Errc::size_not_in_table,
          "no exact optimum stored for size " + std::to_string(n));
  }
  return it->second;
}

Int directional_boundary(const PointSet& s, std::size_t i,
                         const GeneratorSet& u) {
  require_compatible(s, u);
  require_index(i, u);
  Int count = 0;
  for (const auto& v : s.points) {
    if (!s.contains(vec_add(v, u.generators[i]))) ++count;
  }
  return count;
}

BoundaryBreakdown edge_boundary(const PointSet& s, const GeneratorSet& u) {
  require_compatible(s, u);
  BoundaryBreakdown b;
  b.per_direction.reserve(u.k());
  b.total = 0;
  for (std::size_t i = 0; i < u.k(); ++i) {
    Int di = directional_boundary(s, i, u);
    b.total += di;
    b.per_direction.push_back(std::move(di));
  }
  b.vertex = vertex_boundary(s, u);
  return b;
}

PointSet frontier(const PointSet& s, std::size_t i, const GeneratorSet& u) {
  require_compatible(s, u);
  require_index(i, u);
  std::vector<LatticeVector> pts;
  for (const auto& v : s.points) {
    if (!s.contains(vec_add(v, u.generators[i]))) pts.push_back(v);
  }
  return PointSet{s.dim, std::move(pts)};  // subsequence of sorted input
}

Int vertex_boundary(const PointSet& s, const GeneratorSet& u) {
  require_compatible(s, u);
  if (s.empty()) return 0;
  std::vector<LatticeVector> hood = u.generators;
  hood.push_back(zero_vector(u.dim));
  const PointSet grown = minkowski_sum(s, make_point_set(u.dim, std::move(hood)));
  return Int(grown.size()) - Int(s.size());
}

Int line_classes(const PointSet& s, std::size_t i, const GeneratorSet& u) {
  require_compatible(s, u);
  require_index(i, u);
  const LatticeVector& g = u.generators[i];
  std::size_t pivot = 0;
  while (g[pivot] == 0) ++pivot;  // generators are nonzero

  // Residue representative of the Z-line through v in direction g: reduce the
  // pivot coordinate into [0, |g_pivot|). Distinct residues on one real line
  // stay distinct, as required for imprimitive generators.
  std::set<LatticeVector> reps;
  for (const auto& v : s.points) {
    const Int steps = floor_div(v[pivot], g[pivot]);
    reps.insert(vec_sub(v, vec_scale(steps, g)));
  }
  return Int(reps.size());
}

std::pair<Int, Int> split_sides(const PointSet& t, const PointSet& tp,
                                std::size_t j, const GeneratorSet& u) {
  require_compatible(t, u);
  require_compatible(tp, u);
  require_index(j, u);
  for (const auto& v : tp.points) {
    if (t.contains(v)) raise(Errc::not_disjoint, "split parts share a point");
  }

  std::vector<LatticeVector> merged;
  merged.reserve(t.size() + tp.size());
  std::merge(t.points.begin(), t.points.end(), tp.points.begin(),
             tp.points.end(), std::back_inserter(merged));
  const PointSet whole{t.dim, std::move(merged)};

  const Int lhs = directional_boundary(whole, j, u) -
                  directional_boundary(t, j, u);

  const LatticeVector& g = u.generators[j];
  Int leaves = 0;   // |Tp \ ((T u Tp) - u_j)|
  Int covers = 0;   // |Tp n (T + u_j)|
  for (const auto& v : tp.points) {
    if (!whole.contains(vec_add(v, g))) ++leaves;
    if (t.contains(vec_sub(v, g))) ++covers;
  }
  return {lhs, leaves - covers};
}

bool epsilon_close(const PointSet& s, const GeneratorSet& u, const Rat& eps,
                   const BoundaryTable& table) {
  require_compatible(s, u);
  const auto& entry = table.at(static_cast<int>(s.size()));
  const Rat lhs(edge_boundary(s, u).total);
  return lhs <= (Rat(1) + eps) * Rat(entry.optimum);
}

}  // namespace isolat
