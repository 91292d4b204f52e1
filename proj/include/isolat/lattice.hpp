#pragma once

#include <cstddef>
#include <vector>

#include "isolat/error.hpp"
#include "isolat/numeric.hpp"

namespace isolat {

/// A point of Z^d. Coordinates are arbitrary-precision integers.
using LatticeVector = std::vector<Int>;

LatticeVector vec_add(const LatticeVector& a, const LatticeVector& b);
LatticeVector vec_sub(const LatticeVector& a, const LatticeVector& b);
LatticeVector vec_neg(const LatticeVector& a);
LatticeVector vec_scale(const Int& c, const LatticeVector& a);
Int dot(const LatticeVector& a, const LatticeVector& b);
bool is_zero(const LatticeVector& a);
LatticeVector zero_vector(int dim);

/// A validated generating set for the Cayley graph on Z^d. Construct through
/// validate_generators; fields are treated as immutable afterwards.
struct GeneratorSet {
  int dim = 0;
  std::vector<LatticeVector> generators;  // input order preserved

  std::size_t k() const { return generators.size(); }
};

/// Finite subset of Z^d. Points are kept sorted lexicographically with no
/// duplicates, which doubles as the canonical serialization order.
struct PointSet {
  int dim = 0;
  std::vector<LatticeVector> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  bool contains(const LatticeVector& v) const;

  bool operator==(const PointSet&) const = default;
};

/// Multiplicities per generator index for an order-free sequence of pushes.
struct PushWord {
  std::vector<Int> counts;
};

/// Normalizes (sorts, dedupes) and checks that all points have length dim.
PointSet make_point_set(int dim, std::vector<LatticeVector> pts);

/// The one-point set {0} in Z^dim.
PointSet origin_set(int dim);

/// Checks the generating-set conditions: nonzero vectors, no duplicates,
/// matching dimensions, and that the vectors generate Z^d as a group (gcd of
/// all maximal minors of the d x k matrix equals 1).
GeneratorSet validate_generators(int dim,
                                 const std::vector<LatticeVector>& vectors);

/// {a + b : a in A, b in B}.
PointSet minkowski_sum(const PointSet& a, const PointSet& b);

/// n-fold sumset; n = 0 gives {0}.
PointSet iterated_sumset(const PointSet& a, const Int& n);

/// S + {0, u_i}: S grown one step in the direction of generator i (0-based).
PointSet push(const PointSet& s, std::size_t i, const GeneratorSet& u);

/// S + sum_i counts[i] * {0, u_i}. Independent of any application order.
PointSet push_word(const PointSet& s, const PushWord& word,
                   const GeneratorSet& u);

PointSet translate(const PointSet& s, const LatticeVector& v);

/// Unique translate with per-coordinate minimum zero. Rejects the empty set.
PointSet canonical_form(const PointSet& s);

/// Partition of S into connected components under +-U adjacency, ordered by
/// their lexicographically least point.
std::vector<PointSet> components(const PointSet& s, const GeneratorSet& u);

/// Exact determinant of a square integer matrix (fraction-free elimination).
Int determinant(std::vector<std::vector<Int>> m);

}  // namespace isolat
