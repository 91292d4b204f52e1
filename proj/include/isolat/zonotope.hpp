#pragma once

#include <functional>
#include <vector>

#include "isolat/lattice.hpp"

namespace isolat {

/// One opposing pair of support hyperplanes: lower <= normal . x <= upper.
/// normal is primitive with its first nonzero entry positive.
struct Facet {
  LatticeVector normal;
  Int lower;
  Int upper;
};

/// The zonotope Z = sum of segments [0, u_i], as an exact facet description
/// plus its exact volume (sum of |det| over d-subsets of generators).
struct Zonotope {
  GeneratorSet generators;
  std::vector<Facet> facets;
  Rat volume;

  int dim() const { return generators.dim; }
};

/// The discrete cube Z_0 = {0,u_1} + ... + {0,u_k}.
PointSet z0(const GeneratorSet& u);

Zonotope build_zonotope(const GeneratorSet& u);

/// Integer membership test for v in t*Z via the facet inequalities.
bool contains(const Zonotope& z, const Int& t, const LatticeVector& v);

/// Z(t) = (t*Z) n Z^d. t = 0 gives {0}.
PointSet lattice_points(const Zonotope& z, const Int& t);

/// |Z(t)| without materializing the point set.
Int lattice_point_count(const Zonotope& z, const Int& t);

/// Degree-d counting polynomial: |Z(t)| = sum a_i t^i with a_d = vol(Z).
struct EhrhartPolynomial {
  std::vector<Rat> coefficients;  // a_0 .. a_d

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Rat evaluate(const Int& t) const;
};

/// Interpolates through t = 0..d and cross-checks the leading coefficient
/// against the zonotope volume (mismatch signals a geometry bug).
EhrhartPolynomial ehrhart(const Zonotope& z);

/// Verifies Z(t)+Z_0 = Z(t+1) and Z(t+1) = Z(1) + t*Z_0 as set identities.
bool recurrence_check(const GeneratorSet& u, const Int& t);

}  // namespace isolat
