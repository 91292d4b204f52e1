#include "isolat/lattice.hpp"

#include <algorithm>
#include <set>

namespace isolat {

namespace {

void require_dim(const LatticeVector& v, int dim, const char* what) {
  if (static_cast<int>(v.size()) != dim) {
    raise(Errc::dimension_mismatch,
          std::string(what) + ": vector has length " +
              std::to_string(v.size()) + ", expected " + std::to_string(dim));
  }
}

// Sorted-unique union of `acc` and `other` (both sorted).
std::vector<LatticeVector> merge_union(const std::vector<LatticeVector>& acc,
                                       const std::vector<LatticeVector>& other) {
  std::vector<LatticeVector> out;
  out.reserve(acc.size() + other.size());
  std::merge(acc.begin(), acc.end(), other.begin(), other.end(),
             std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Translating every point by the same vector preserves lexicographic order.
std::vector<LatticeVector> shifted(const std::vector<LatticeVector>& pts,
                                   const LatticeVector& v) {
  std::vector<LatticeVector> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(vec_add(p, v));
  return out;
}

}  // namespace

LatticeVector vec_add(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticeVector vec_sub(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LatticeVector vec_neg(const LatticeVector& a) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

LatticeVector vec_scale(const Int& c, const LatticeVector& a) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Int dot(const LatticeVector& a, const LatticeVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const LatticeVector& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

LatticeVector zero_vector(int dim) {
  return LatticeVector(static_cast<std::size_t>(dim), Int(0));
}

bool PointSet::contains(const LatticeVector& v) const {
  return std::binary_search(points.begin(), points.end(), v);
}

PointSet make_point_set(int dim, std::vector<LatticeVector> pts) {
  if (dim < 1) raise(Errc::invalid_input, "dimension must be at least 1");
  for (const auto& p : pts) require_dim(p, dim, "point");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return PointSet{dim, std::move(pts)};
}

PointSet origin_set(int dim) {
  return PointSet{dim, {zero_vector(dim)}};
}

Int determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      sign = -sign;
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      for (std::size_t c = col + 1; c < n; ++c) {
        // Bareiss update: exact division by the previous pivot.
        m[r][c] = (m[col][col] * m[r][c] - m[r][col] * m[col][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[col][col];
  }
  return sign * m[n - 1][n - 1];
}

GeneratorSet validate_generators(int dim,
                                 const std::vector<LatticeVector>& vectors) {
  if (dim < 1) raise(Errc::invalid_input, "dimension must be at least 1");
  if (vectors.empty()) raise(Errc::invalid_input, "no generators given");

  for (const auto& v : vectors) {
    require_dim(v, dim, "generator");
    if (is_zero(v)) raise(Errc::zero_vector, "generator is the zero vector");
  }
  std::set<LatticeVector> seen;
  for (const auto& v : vectors) {
    if (!seen.insert(v).second) {
      raise(Errc::duplicate_vector, "duplicate generator");
    }
  }

  const std::size_t k = vectors.size();
  const std::size_t d = static_cast<std::size_t>(dim);
  if (k < d) {
    raise(Errc::not_generating,
          "fewer generators than the dimension; rank is deficient");
  }

  // gcd over all d x d minors of the d x k matrix, with early exit at 1.
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  Int g = 0;
  while (true) {
    std::vector<std::vector<Int>> m(d, std::vector<Int>(d));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) m[r][c] = vectors[idx[c]][r];
    }
    g = boost::multiprecision::gcd(g, determinant(std::move(m)));
    if (g == 1) break;

    // next combination
    std::size_t i = d;
    while (i > 0 && idx[i - 1] == k - d + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (g != 1) {
    raise(Errc::not_generating,
          g == 0 ? "generators do not span R^d"
                 : "generators span a proper sublattice (minor gcd " +
                       g.str() + ")");
  }

  return GeneratorSet{dim, vectors};
}

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
  if (a.dim != b.dim) {
    raise(Errc::dimension_mismatch, "sumset operands have different dimension");
  }
  if (a.empty() || b.empty()) return PointSet{a.dim, {}};

  // Accumulate translates of the larger set by points of the smaller one.
  const PointSet& big = a.size() >= b.size() ? a : b;
  const PointSet& small = a.size() >= b.size() ? b : a;
  std::vector<LatticeVector> acc;
  for (const auto& v : small.points) {
    acc = merge_union(acc, shifted(big.points, v));
  }
  return PointSet{a.dim, std::move(acc)};
}

PointSet iterated_sumset(const PointSet& a, const Int& n) {
  if (n < 0) raise(Errc::invalid_input, "sumset multiplicity must be >= 0");
  PointSet acc = origin_set(a.dim);
  for (Int i = 0; i < n; ++i) acc = minkowski_sum(acc, a);
  return acc;
}

PointSet push(const PointSet& s, std::size_t i, const GeneratorSet& u) {
  if (s.dim != u.dim) {
    raise(Errc::dimension_mismatch, "set and generators differ in dimension");
  }
  if (i >= u.k()) {
    raise(Errc::index_out_of_range,
          "generator index " + std::to_string(i) + " out of range");
  }
  return PointSet{s.dim, merge_union(s.points, shifted(s.points, u.generators[i]))};
}

PointSet push_word(const PointSet& s, const PushWord& word,
                   const GeneratorSet& u) {
  if (word.counts.size() != u.k()) {
    raise(Errc::index_out_of_range,
          "push word has " + std::to_string(word.counts.size()) +
              " counts for " + std::to_string(u.k()) + " generators");
  }
  for (const Int& c : word.counts) {
    if (c < 0) raise(Errc::invalid_input, "push counts must be >= 0");
  }
  PointSet acc = s;
  for (std::size_t i = 0; i < word.counts.size(); ++i) {
    // c-fold sum of {0, u_i} is the segment {0, u_i, ..., c*u_i}.
    for (Int step = 0; step < word.counts[i]; ++step) {
      acc = push(acc, i, u);
    }
  }
  return acc;
}

PointSet translate(const PointSet& s, const LatticeVector& v) {
  require_dim(v, s.dim, "translation");
  return PointSet{s.dim, shifted(s.points, v)};
}

PointSet canonical_form(const PointSet& s) {
  if (s.empty()) raise(Errc::empty_set, "canonical form of the empty set");
  LatticeVector mins = s.points.front();
  for (const auto& p : s.points) {
    for (std::size_t j = 0; j < mins.size(); ++j) {
      if (p[j] < mins[j]) mins[j] = p[j];
    }
  }
  return translate(s, vec_neg(mins));
}

std::vector<PointSet> components(const PointSet& s, const GeneratorSet& u) {
  if (s.dim != u.dim) {
    raise(Errc::dimension_mismatch, "set and generators differ in dimension");
  }
  const std::size_t n = s.size();
  std::vector<char> visited(n, 0);
  std::vector<PointSet> out;

  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> stack{start};
    visited[start] = 1;
    std::vector<LatticeVector> comp;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      comp.push_back(s.points[cur]);
      for (const auto& g : u.generators) {
        for (const LatticeVector& nb :
             {vec_add(s.points[cur], g), vec_sub(s.points[cur], g)}) {
          auto it = std::lower_bound(s.points.begin(), s.points.end(), nb);
          if (it != s.points.end() && *it == nb) {
            const std::size_t j =
                static_cast<std::size_t>(it - s.points.begin());
            if (!visited[j]) {
              visited[j] = 1;
              stack.push_back(j);
            }
          }
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(PointSet{s.dim, std::move(comp)});
  }
  return out;
}

}  // namespace isolat
