#include "isolat/zonotope.hpp"

#include <algorithm>
#include <map>

namespace isolat {

namespace {

LatticeVector primitive_sign_normalized(LatticeVector v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0) return {};  // all zero: the subset was rank deficient
  for (Int& x : v) x /= g;
  for (const Int& x : v) {
    if (x != 0) {
      if (x < 0) {
        for (Int& y : v) y = -y;
      }
      break;
    }
  }
  return v;
}

// Generalized cross product: cofactor expansion along a virtual first row of
// the (d-1) x d matrix of the chosen generators. Zero when rank < d-1.
LatticeVector subset_normal(const std::vector<LatticeVector>& gens,
                            const std::vector<std::size_t>& idx, int dim) {
  const std::size_t d = static_cast<std::size_t>(dim);
  LatticeVector n(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<std::vector<Int>> minor(d - 1, std::vector<Int>(d - 1));
    for (std::size_t r = 0; r < d - 1; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < d; ++c) {
        if (c == j) continue;
        minor[r][cc++] = gens[idx[r]][c];
      }
    }
    Int cof = determinant(std::move(minor));
    n[j] = (j % 2 == 0) ? cof : -cof;
  }
  return n;
}

Facet facet_for_normal(const GeneratorSet& u, LatticeVector normal) {
  Int upper = 0, lower = 0;
  for (const auto& g : u.generators) {
    const Int p = dot(normal, g);
    if (p > 0) upper += p;
    if (p < 0) lower += p;
  }
  return Facet{std::move(normal), std::move(lower), std::move(upper)};
}

// Iterates the columns of the bounding box of t*Z: fn(prefix, lo, hi) is
// called once per nonempty segment of last-coordinate values.
template <typename Fn>
void scan_columns(const Zonotope& z, const Int& t, Fn&& fn) {
  const int d = z.dim();
  const auto& gens = z.generators.generators;

  // Axis-aligned support values of t*Z.
  std::vector<Int> axis_lo(d, Int(0)), axis_hi(d, Int(0));
  for (int j = 0; j < d; ++j) {
    for (const auto& g : gens) {
      if (g[j] > 0) axis_hi[j] += g[j];
      if (g[j] < 0) axis_lo[j] += g[j];
    }
    axis_lo[j] *= t;
    axis_hi[j] *= t;
  }

  LatticeVector prefix(d - 1 >= 0 ? d - 1 : 0);
  const auto column = [&]() {
    Int lo = axis_lo[d - 1];
    Int hi = axis_hi[d - 1];
    for (const Facet& f : z.facets) {
      Int partial = 0;
      for (int j = 0; j + 1 < d; ++j) partial += f.normal[j] * prefix[j];
      const Int low = t * f.lower - partial;
      const Int up = t * f.upper - partial;
      const Int& a = f.normal[d - 1];
      if (a == 0) {
        if (low > 0 || up < 0) return;  // whole column infeasible
      } else if (a > 0) {
        lo = std::max(lo, ceil_div(low, a));
        hi = std::min(hi, floor_div(up, a));
      } else {
        lo = std::max(lo, ceil_div(up, a));
        hi = std::min(hi, floor_div(low, a));
      }
      if (lo > hi) return;
    }
    fn(prefix, lo, hi);
  };

  // Odometer over the first d-1 coordinates.
  std::vector<Int> cur(axis_lo.begin(), axis_lo.end() - 1);
  while (true) {
    for (int j = 0; j + 1 < d; ++j) prefix[j] = cur[j];
    column();
    int j = d - 2;
    while (j >= 0) {
      if (++cur[j] <= axis_hi[j]) break;
      cur[j] = axis_lo[j];
      --j;
    }
    if (j < 0) break;
  }
}

}  // namespace

PointSet z0(const GeneratorSet& u) {
  PushWord all_ones{std::vector<Int>(u.k(), Int(1))};
  return push_word(origin_set(u.dim), all_ones, u);
}

Zonotope build_zonotope(const GeneratorSet& u) {
  const int d = u.dim;
  const std::size_t k = u.k();
  Zonotope z;
  z.generators = u;

  if (d == 1) {
    // No (d-1)-subsets exist; the body is the interval of support values.
    z.facets.push_back(facet_for_normal(u, LatticeVector{Int(1)}));
    Int vol = 0;
    for (const auto& g : u.generators) vol += abs(g[0]);
    z.volume = Rat(vol);
    return z;
  }

  std::map<LatticeVector, bool> seen;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d - 1));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  while (true) {
    LatticeVector n =
        primitive_sign_normalized(subset_normal(u.generators, idx, d));
    if (!n.empty() && !seen.count(n)) {
      seen[n] = true;
      z.facets.push_back(facet_for_normal(u, std::move(n)));
    }
    std::size_t i = idx.size();
    while (i > 0 && idx[i - 1] == k - idx.size() + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(z.facets.begin(), z.facets.end(),
            [](const Facet& a, const Facet& b) { return a.normal < b.normal; });

  // vol(Z) = sum over d-subsets of |det|.
  Int vol = 0;
  std::vector<std::size_t> vidx(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < vidx.size(); ++i) vidx[i] = i;
  if (k >= static_cast<std::size_t>(d)) {
    while (true) {
      std::vector<std::vector<Int>> m(d, std::vector<Int>(d));
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) m[r][c] = u.generators[vidx[c]][r];
      }
      vol += abs(determinant(std::move(m)));
      std::size_t i = vidx.size();
      while (i > 0 && vidx[i - 1] == k - vidx.size() + (i - 1)) --i;
      if (i == 0) break;
      ++vidx[i - 1];
      for (std::size_t j = i; j < vidx.size(); ++j) vidx[j] = vidx[j - 1] + 1;
    }
  }
  if (vol == 0) {
    raise(Errc::degenerate_dimension, "generators span rank < d");
  }
  z.volume = Rat(vol);
  return z;
}

bool contains(const Zonotope& z, const Int& t, const LatticeVector& v) {
  if (static_cast<int>(v.size()) != z.dim()) {
    raise(Errc::dimension_mismatch, "point has wrong dimension");
  }
  for (const Facet& f : z.facets) {
    const Int p = dot(f.normal, v);
    if (p < t * f.lower || p > t * f.upper) return false;
  }
  return true;
}

PointSet lattice_points(const Zonotope& z, const Int& t) {
  if (t < 0) raise(Errc::invalid_input, "scale factor must be >= 0");
  std::vector<LatticeVector> pts;
  // Columns arrive in lexicographic order, so the result is already sorted.
  scan_columns(z, t, [&](const LatticeVector& prefix, const Int& lo, const Int& hi) {
    for (Int x = lo; x <= hi; ++x) {
      LatticeVector p = prefix;
      p.push_back(x);
      pts.push_back(std::move(p));
    }
  });
  return PointSet{z.dim(), std::move(pts)};
}

Int lattice_point_count(const Zonotope& z, const Int& t) {
  if (t < 0) raise(Errc::invalid_input, "scale factor must be >= 0");
  Int count = 0;
  scan_columns(z, t, [&](const LatticeVector&, const Int& lo, const Int& hi) {
    count += hi - lo + 1;
  });
  return count;
}

Rat EhrhartPolynomial::evaluate(const Int& t) const {
  Rat acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * Rat(t) + *it;
  }
  return acc;
}

EhrhartPolynomial ehrhart(const Zonotope& z) {
  const int d = z.dim();

  std::vector<Rat> values;
  for (int t = 0; t <= d; ++t) {
    values.push_back(Rat(lattice_point_count(z, Int(t))));
  }

  // Lagrange interpolation through (t, |Z(t)|), t = 0..d.
  std::vector<Rat> coeffs(static_cast<std::size_t>(d) + 1, Rat(0));
  for (int i = 0; i <= d; ++i) {
    std::vector<Rat> basis{Rat(1)};  // polynomial, low-degree first
    Rat denom = 1;
    for (int j = 0; j <= d; ++j) {
      if (j == i) continue;
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (std::size_t c = 0; c < basis.size(); ++c) {
        next[c] += basis[c] * Rat(-j);
        next[c + 1] += basis[c];
      }
      basis = std::move(next);
      denom *= Rat(i - j);
    }
    const Rat scale = values[static_cast<std::size_t>(i)] / denom;
    for (std::size_t c = 0; c < basis.size(); ++c) {
      coeffs[c] += basis[c] * scale;
    }
  }

  if (coeffs.back() != z.volume) {
    raise(Errc::leading_coefficient_mismatch,
          "leading coefficient " + rat_to_string(coeffs.back()) +
              " does not equal the volume " + rat_to_string(z.volume));
  }
  return EhrhartPolynomial{std::move(coeffs)};
}

bool recurrence_check(const GeneratorSet& u, const Int& t) {
  if (t < 1) raise(Errc::invalid_input, "recurrence check needs t >= 1");
  const Zonotope z = build_zonotope(u);
  const PointSet cube = z0(u);
  const PointSet zt = lattice_points(z, t);
  const PointSet zt1 = lattice_points(z, t + 1);
  if (minkowski_sum(zt, cube) != zt1) return false;
  const PointSet base = lattice_points(z, Int(1));
  return minkowski_sum(base, iterated_sumset(cube, t)) == zt1;
}

}  // namespace isolat
