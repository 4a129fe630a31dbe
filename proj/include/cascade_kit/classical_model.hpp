#pragma once

#include "cascade_kit/errors.hpp"
#include "cascade_kit/linalg.hpp"
#include "cascade_kit/root_system.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <vector>

namespace ckit {

inline bool is_classical(SimpleType t) {
  return t.family == Family::A || t.family == Family::B || t.family == Family::C || t.family == Family::D;
}

inline void require_classical(SimpleType t) {
  if (!is_classical(t)) throw NotClassical(t.str() + " is not a classical type");
}

/// Number of ε-coordinates: n+1 for A_n, n otherwise.
inline std::size_t epsilon_dim(SimpleType t) {
  require_classical(t);
  return static_cast<std::size_t>(t.family == Family::A ? t.rank + 1 : t.rank);
}

/// Simple-root coordinates -> ε-coordinates.
/// A_n: α_i = ε_i − ε_{i+1}; B_n: α_n = ε_n; C_n: α_n = 2ε_n; D_n: α_n = ε_{n−1} + ε_n.
inline std::vector<Rational> to_epsilon(SimpleType t, std::span<const Rational> a) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  std::vector<Rational> e(epsilon_dim(t));
  auto at = [&](std::size_t k) -> Rational { return k < n ? a[k] : Rational(0); };
  switch (t.family) {
    case Family::A:
      for (std::size_t i = 0; i <= n; ++i) e[i] = at(i) - (i ? at(i - 1) : Rational(0));
      break;
    case Family::B:
      for (std::size_t i = 0; i < n; ++i) e[i] = a[i] - (i ? a[i - 1] : Rational(0));
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < n; ++i) e[i] = a[i] - (i ? a[i - 1] : Rational(0));
      e[n - 1] = 2 * a[n - 1] - a[n - 2];
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) e[i] = a[i] - (i ? a[i - 1] : Rational(0));
      e[n - 2] = a[n - 2] + a[n - 1] - a[n - 3];
      e[n - 1] = a[n - 1] - a[n - 2];
      break;
    default:
      break;
  }
  return e;
}

inline std::vector<Rational> to_epsilon(SimpleType t, std::span<const int> a) {
  std::vector<Rational> r(a.begin(), a.end());
  return to_epsilon(t, r);
}

/// ε-coordinates -> simple-root coordinates. For A_n the vector is first projected to Σ = 0.
inline WeightVector from_epsilon(SimpleType t, std::vector<Rational> e) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  WeightVector a(n);
  if (t.family == Family::A) {
    Rational mean = 0;
    for (const auto& c : e) mean += c;
    mean /= static_cast<long>(e.size());
    for (auto& c : e) c -= mean;
  }
  Rational run = 0;
  switch (t.family) {
    case Family::A:
    case Family::B:
      for (std::size_t k = 0; k < n; ++k) a[k] = run += e[k];
      break;
    case Family::C:
      for (std::size_t k = 0; k + 1 < n; ++k) a[k] = run += e[k];
      a[n - 1] = (run + e[n - 1]) / 2;
      break;
    case Family::D:
      for (std::size_t k = 0; k + 2 < n; ++k) a[k] = run += e[k];
      a[n - 2] = (run + e[n - 2] - e[n - 1]) / 2;
      a[n - 1] = (run + e[n - 2] + e[n - 1]) / 2;
      break;
    default:
      require_classical(t);
  }
  return a;
}

/// w(ε_i) = sign · ε_{|target_i| − 1}; targets are 1-based and signed.
using SignedPermutation = std::vector<int>;

inline SignedPermutation signed_permutation(const RootSystem& rs, const WeylElement& w) {
  const SimpleType t = rs.type();
  const std::size_t m = epsilon_dim(t);
  SignedPermutation out;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> e(m);
    e[i] = 1;
    auto img = to_epsilon(t, w.apply(from_epsilon(t, e)).coords());
    if (t.family == Family::A) {
      // projected images are ε_j − mean; recover j from the largest entry
      const auto it = std::max_element(img.begin(), img.end());
      out.push_back(static_cast<int>(it - img.begin()) + 1);
      continue;
    }
    int target = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (img[j] == 0) continue;
      if (target != 0 || (img[j] != 1 && img[j] != -1)) throw std::logic_error("not a signed permutation");
      target = (img[j] > 0 ? 1 : -1) * static_cast<int>(j + 1);
    }
    out.push_back(target);
  }
  return out;
}

/// Order of a signed permutation as a group element.
inline std::size_t signed_permutation_order(const SignedPermutation& p) {
  SignedPermutation cur = p;
  for (std::size_t k = 1;; ++k) {
    bool id = true;
    for (std::size_t i = 0; i < cur.size(); ++i) id = id && cur[i] == static_cast<int>(i + 1);
    if (id) return k;
    SignedPermutation next(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const int t = cur[i];
      const int u = p[static_cast<std::size_t>(std::abs(t) - 1)];
      next[i] = t > 0 ? u : -u;
    }
    cur = next;
    if (k > 100000) throw OrderOverflow("signed permutation order");
  }
}

/// Integer matrices of the defining representation.
using IntMatrix = std::vector<std::vector<long>>;

/// Size of the defining representation: sl_{n+1}, so_{2n+1}, sp_{2n}, so_{2n}.
inline std::size_t defining_dim(SimpleType t) {
  require_classical(t);
  switch (t.family) {
    case Family::A: return static_cast<std::size_t>(t.rank + 1);
    case Family::B: return static_cast<std::size_t>(2 * t.rank + 1);
    default: return static_cast<std::size_t>(2 * t.rank);
  }
}

/// Invariant bilinear form of the model: antidiagonal ones for so_N; for sp_{2n} +1 on the upper
/// and −1 on the lower antidiagonal block. Identity marks "none" for sl.
inline IntMatrix model_form(SimpleType t) {
  const std::size_t N = defining_dim(t);
  IntMatrix f(N, std::vector<long>(N, 0));
  for (std::size_t a = 0; a < N; ++a) {
    if (t.family == Family::A) continue;
    f[a][N - 1 - a] = (t.family == Family::C && a >= N / 2) ? -1 : 1;
  }
  return f;
}

/// Torus weight of basis vector k: ε-index (1-based, signed), 0 for the middle of so_{2n+1}.
inline int basis_weight(SimpleType t, std::size_t k) {
  const std::size_t N = defining_dim(t);
  if (t.family == Family::A) return static_cast<int>(k + 1);
  const std::size_t n = static_cast<std::size_t>(t.rank);
  if (k < n) return static_cast<int>(k + 1);
  if (t.family == Family::B && k == n) return 0;
  return -static_cast<int>(N - k);
}

/// Root vector e_γ of a positive root in the defining representation.
/// e_{ε_i−ε_j} = E_ij − E_{j'i'}, e_{ε_i+ε_j} = E_{ij'} ∓ E_{ji'}, e_{2ε_i} = E_{ii'}, e_{ε_i} = E_{im} − E_{mi'}.
inline IntMatrix root_vector(const RootSystem& rs, const Root& g) {
  const SimpleType t = rs.type();
  const std::size_t N = defining_dim(t);
  const auto e = to_epsilon(t, g.coords);
  IntMatrix m(N, std::vector<long>(N, 0));
  std::vector<std::pair<std::size_t, int>> nz;  // (ε index, coefficient)
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) nz.emplace_back(i, static_cast<int>(to_int64(e[i])));
  auto prime = [&](std::size_t a) { return N - 1 - a; };
  if (t.family == Family::A) {
    m[nz[0].first][nz[1].first] = 1;
    return m;
  }
  if (nz.size() == 1) {
    const std::size_t i = nz[0].first;
    if (nz[0].second == 2) {  // 2ε_i
      m[i][prime(i)] = 1;
    } else {  // ε_i, so_{2n+1}
      const std::size_t mid = static_cast<std::size_t>(t.rank);
      m[i][mid] = 1;
      m[mid][prime(i)] = -1;
    }
    return m;
  }
  const std::size_t i = nz[0].first, j = nz[1].first;
  if (nz[1].second < 0) {  // ε_i − ε_j
    m[i][j] = 1;
    m[prime(j)][prime(i)] = -1;
  } else {  // ε_i + ε_j
    m[i][prime(j)] = 1;
    m[j][prime(i)] = t.family == Family::C ? 1 : -1;
  }
  return m;
}

/// X lies in the algebra: trace zero for sl, Xᵀ F + F X = 0 otherwise.
inline bool in_algebra(SimpleType t, const IntMatrix& x) {
  const std::size_t N = x.size();
  if (t.family == Family::A) {
    long tr = 0;
    for (std::size_t a = 0; a < N; ++a) tr += x[a][a];
    return tr == 0;
  }
  const auto f = model_form(t);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      long s = 0;
      for (std::size_t k = 0; k < N; ++k) s += x[k][a] * f[k][b] + f[a][k] * x[k][b];
      if (s != 0) return false;
    }
  return true;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t N = a.size();
  IntMatrix out(N, std::vector<long>(N, 0));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < N; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline std::size_t int_rank(const IntMatrix& a) {
  RationalMatrix m(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a[i][j];
  return matrix_rank(m);
}

/// Jordan type of a nilpotent matrix from the ranks of its powers; also returns those ranks.
struct JordanData {
  std::vector<int> partition;     // non-increasing
  std::vector<std::size_t> ranks;  // rank(x^k), k = 0, 1, ... until zero
};

inline JordanData jordan_type(const IntMatrix& x) {
  JordanData d;
  IntMatrix p(x.size(), std::vector<long>(x.size(), 0));
  for (std::size_t i = 0; i < x.size(); ++i) p[i][i] = 1;
  d.ranks.push_back(x.size());
  while (d.ranks.back() != 0) {
    p = multiply(p, x);
    const std::size_t r = int_rank(p);
    if (r == d.ranks.back()) throw std::logic_error("matrix is not nilpotent");
    d.ranks.push_back(r);
  }
  // λ'_k = rank(x^{k−1}) − rank(x^k) counts blocks of size ≥ k
  std::vector<std::size_t> conj;
  for (std::size_t k = 1; k < d.ranks.size(); ++k) conj.push_back(d.ranks[k - 1] - d.ranks[k]);
  for (std::size_t size = conj.size(); size >= 1; --size) {
    const std::size_t at_least = conj[size - 1];
    const std::size_t bigger = size < conj.size() ? conj[size] : 0;
    for (std::size_t r = 0; r < at_least - bigger; ++r) d.partition.push_back(static_cast<int>(size));
  }
  return d;
}

/// Dimension of the nilpotent orbit with the given partition in sl_N, so_N or sp_N.
inline long orbit_dimension_from_partition(SimpleType t, const std::vector<int>& lambda) {
  const long N = static_cast<long>(defining_dim(t));
  std::vector<long> conj;
  for (int part : lambda)
    for (int k = 0; k < part; ++k) {
      if (conj.size() <= static_cast<std::size_t>(k)) conj.push_back(0);
      ++conj[static_cast<std::size_t>(k)];
    }
  long sq = 0;
  for (long c : conj) sq += c * c;
  const long odd = std::count_if(lambda.begin(), lambda.end(), [](int p) { return p % 2 == 1; });
  switch (t.family) {
    case Family::A: return N * N - sq;
    case Family::C: return N * (N + 1) / 2 - (sq + odd) / 2;
    default: return N * (N - 1) / 2 - (sq - odd) / 2;
  }
}

}  // namespace ckit
