#pragma once

// Reference computations that share no code with the library beyond the type enum and the
// rational number type: diagrams typed in again, roots by Weyl-orbit closure, the cascade by
// recursion on root sets, w_K by a walk with the opposite tie-break.

#include "cascade_kit/rational.hpp"
#include "cascade_kit/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using ckit::Family;
using ckit::Rational;
using ckit::SimpleType;
using Vec = std::vector<int>;

struct Diagram {
  int n = 0;
  std::vector<int> len2;                       // squared lengths scaled by 6: 6 long, 3 or 2 short
  std::vector<std::pair<int, int>> edges;      // 0-based
  std::vector<std::vector<int>> cartan;        // A[i][j] = <α_i, α_j^∨>
};

inline Diagram diagram(SimpleType t) {
  Diagram d;
  const int n = d.n = t.rank;
  d.len2.assign(static_cast<std::size_t>(n), 6);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.push_back({i, i + 1});
  };
  switch (t.family) {
    case Family::A: chain(n); break;
    case Family::B: chain(n); d.len2[n - 1] = 3; break;
    case Family::C:
      chain(n);
      for (int i = 0; i + 1 < n; ++i) d.len2[i] = 3;
      break;
    case Family::D:
      chain(n - 1);
      d.edges.push_back({n - 3, n - 1});
      break;
    case Family::E:
      chain(n - 1);
      d.edges.push_back({n == 6 ? 2 : n == 7 ? 3 : 4, n - 1});
      break;
    case Family::F: chain(4); d.len2[0] = d.len2[1] = 3; break;
    case Family::G: chain(2); d.len2[0] = 2; break;
  }
  d.cartan.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) d.cartan[i][i] = 2;
  for (auto [i, j] : d.edges) {
    const int li = d.len2[i], lj = d.len2[j];
    if (li == lj) {
      d.cartan[i][j] = d.cartan[j][i] = -1;
    } else if (li > lj) {
      d.cartan[i][j] = -(li / lj);
      d.cartan[j][i] = -1;
    } else {
      d.cartan[j][i] = -(lj / li);
      d.cartan[i][j] = -1;
    }
  }
  return d;
}

/// 6·(a, b): len2 holds 3|α|², and (α_i, α_j) = A_ij |α_j|² / 2.
inline long form6(const Diagram& d, const Vec& a, const Vec& b) {
  long s = 0;
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j) s += static_cast<long>(a[i]) * b[j] * d.cartan[i][j] * d.len2[j];
  return s;
}

inline int coroot_pairing(const Diagram& d, const Vec& beta, int i) {
  int s = 0;
  for (int j = 0; j < d.n; ++j) s += beta[j] * d.cartan[j][i];
  return s;
}

inline Vec reflect(const Diagram& d, Vec beta, int i) {
  beta[i] -= coroot_pairing(d, beta, i);
  return beta;
}

inline bool positive(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; }) &&
         std::any_of(v.begin(), v.end(), [](int x) { return x > 0; });
}

inline int height(const Vec& v) { return std::accumulate(v.begin(), v.end(), 0); }

/// Positive roots as the W-orbit of the simple roots.
inline std::set<Vec> positive_roots(const Diagram& d) {
  std::set<Vec> all;
  std::vector<Vec> todo;
  for (int i = 0; i < d.n; ++i) {
    Vec e(static_cast<std::size_t>(d.n), 0);
    e[i] = 1;
    todo.push_back(e);
    all.insert(e);
  }
  while (!todo.empty()) {
    Vec v = todo.back();
    todo.pop_back();
    for (int i = 0; i < d.n; ++i) {
      Vec r = reflect(d, v, i);
      if (all.insert(r).second) todo.push_back(r);
    }
  }
  std::set<Vec> pos;
  for (const auto& v : all)
    if (positive(v)) pos.insert(v);
  return pos;
}

inline Vec highest(const std::vector<Vec>& roots) {
  return *std::max_element(roots.begin(), roots.end(), [](const Vec& a, const Vec& b) { return height(a) < height(b); });
}

struct CascadeOracle {
  std::vector<Vec> beta;
  std::vector<std::optional<std::size_t>> parent;
  std::vector<std::size_t> component_size;  // #positive roots of the component
};

/// K(Δ) = {θ} ∪ K(Δ_θ), component by component, with components found through non-orthogonality.
inline CascadeOracle cascade(const Diagram& d) {
  CascadeOracle out;
  const auto pos = positive_roots(d);
  struct Item {
    std::vector<Vec> roots;
    std::optional<std::size_t> parent;
  };
  std::vector<Item> todo{{std::vector<Vec>(pos.begin(), pos.end()), std::nullopt}};
  while (!todo.empty()) {
    Item item = todo.front();
    todo.erase(todo.begin());
    // split into components
    std::vector<int> comp(item.roots.size(), -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < item.roots.size(); ++s) {
      if (comp[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        const std::size_t a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < item.roots.size(); ++b)
          if (comp[b] < 0 && form6(d, item.roots[a], item.roots[b]) != 0) {
            comp[b] = ncomp;
            stack.push_back(b);
          }
      }
      ++ncomp;
    }
    for (int k = 0; k < ncomp; ++k) {
      std::vector<Vec> part;
      for (std::size_t s = 0; s < item.roots.size(); ++s)
        if (comp[s] == k) part.push_back(item.roots[s]);
      const Vec top = highest(part);
      const std::size_t index = out.beta.size();
      out.beta.push_back(top);
      out.parent.push_back(item.parent);
      out.component_size.push_back(part.size());
      std::vector<Vec> rest;
      for (const auto& g : part)
        if (form6(d, g, top) == 0) rest.push_back(g);
      if (!rest.empty()) todo.push_back({rest, index});
    }
  }
  return out;
}

/// γ(x_K) = Σ (γ, β_j)/(β_j, β_j): K is orthogonal, so (β_j, x) = 1 solves diagonally.
inline std::map<Vec, Rational> spectrum(const Diagram& d, const std::vector<Vec>& k) {
  std::map<Vec, Rational> out;
  for (const auto& g : positive_roots(d)) {
    Rational v = 0;
    for (const auto& b : k) v += Rational(form6(d, g, b), form6(d, b, b));
    out[g] = v;
  }
  return out;
}

/// α_i(z) for z given by its values on the positive roots.
inline std::vector<Rational> simple_values(const Diagram& d, const std::map<Vec, Rational>& values) {
  std::vector<Rational> m;
  for (int i = 0; i < d.n; ++i) {
    Vec e(static_cast<std::size_t>(d.n), 0);
    e[i] = 1;
    m.push_back(values.at(e));
  }
  return m;
}

struct Walk {
  std::vector<int> word;  // reflections in the order applied
  std::vector<Rational> final_marks;
};

/// Reflect while some α_i(z) has the given sign, highest index first.
inline Walk walk(const Diagram& d, std::vector<Rational> m, int sign) {
  Walk w;
  while (true) {
    int pick = -1;
    for (int i = d.n - 1; i >= 0; --i)
      if ((sign > 0 && m[i] > 0) || (sign < 0 && m[i] < 0)) {
        pick = i;
        break;
      }
    if (pick < 0) break;
    const Rational mi = m[pick];
    for (int j = 0; j < d.n; ++j) m[j] -= d.cartan[j][pick] * mi;
    w.word.push_back(pick);
  }
  w.final_marks = m;
  return w;
}

/// w(v) for w = s_{word.back()} ⋯ s_{word.front()}.
inline Vec apply(const Diagram& d, const std::vector<int>& word, Vec v) {
  for (int i : word) v = reflect(d, v, i);
  return v;
}

inline std::vector<Vec> simple_images(const Diagram& d, const std::vector<int>& word) {
  std::vector<Vec> out;
  for (int i = 0; i < d.n; ++i) {
    Vec e(static_cast<std::size_t>(d.n), 0);
    e[i] = 1;
    out.push_back(apply(d, word, e));
  }
  return out;
}

inline std::size_t order(const Diagram& d, const std::vector<int>& word) {
  std::vector<int> power = word;
  const auto id = simple_images(d, {});
  for (std::size_t k = 1; k < 10000; ++k) {
    if (simple_images(d, power) == id) return k;
    power.insert(power.end(), word.begin(), word.end());
  }
  return 0;
}

/// Signed permutation of a classical w given by a word, read off from images of ε_i.
/// Reflections act on ε-vectors through the simple roots in ε-coordinates.
inline std::vector<int> signed_permutation(SimpleType t, const std::vector<int>& word) {
  const int n = t.rank;
  const int m = t.family == Family::A ? n + 1 : n;
  std::vector<std::vector<int>> simple;  // ε-coordinates of the simple roots, doubled for C
  for (int i = 0; i + 1 < (t.family == Family::A ? m : n); ++i) {
    std::vector<int> e(static_cast<std::size_t>(m), 0);
    e[i] = 1;
    e[i + 1] = -1;
    simple.push_back(e);
  }
  if (t.family != Family::A) {
    std::vector<int> e(static_cast<std::size_t>(m), 0);
    if (t.family == Family::B) e[n - 1] = 1;
    if (t.family == Family::C) e[n - 1] = 2;
    if (t.family == Family::D) e[n - 2] = e[n - 1] = 1;
    simple.push_back(e);
  }
  auto dot = [](const std::vector<int>& a, const std::vector<int>& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  std::vector<int> out;
  for (int k = 0; k < m; ++k) {
    std::vector<int> v(static_cast<std::size_t>(m), 0);
    v[k] = 1;
    for (int i : word) {
      const auto& a = simple[static_cast<std::size_t>(i)];
      const int c = 2 * dot(v, a) / dot(a, a);
      for (int j = 0; j < m; ++j) v[j] -= c * a[j];
    }
    for (int j = 0; j < m; ++j)
      if (v[j] != 0) out.push_back(v[j] * (j + 1));
  }
  return out;
}

/// Classical positive roots from their ε-descriptions, in simple-root coordinates.
inline std::set<Vec> classical_positive_roots(SimpleType t) {
  const int n = t.rank;
  std::set<Vec> out;
  // ε_i − ε_j (i < j) = α_i + … + α_{j−1}
  auto diff = [&](int i, int j) {
    Vec v(static_cast<std::size_t>(n), 0);
    for (int k = i; k < j; ++k) v[k] = 1;
    return v;
  };
  if (t.family == Family::A) {
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) out.insert(diff(i, j));
    return out;
  }
  // ε_i in simple coordinates, possibly half-integral for C and D: work doubled
  auto eps2 = [&](int i) {
    Vec v(static_cast<std::size_t>(n), 0);
    switch (t.family) {
      case Family::B:  // ε_i = α_i + … + α_n
        for (int k = i; k < n; ++k) v[k] = 2;
        break;
      case Family::C:  // ε_i = α_i + … + α_{n−1} + ½α_n
        for (int k = i; k < n - 1; ++k) v[k] = 2;
        v[n - 1] = 1;
        break;
      default:  // D: ε_i = α_i + … + α_{n−2} + ½(α_{n−1} + α_n), and ε_n = ½(α_n − α_{n−1})
        if (i == n - 1) {
          v[n - 2] = -1;
          v[n - 1] = 1;
        } else {
          for (int k = i; k < n - 2; ++k) v[k] = 2;
          v[n - 2] = v[n - 1] = 1;
        }
        break;
    }
    return v;
  };
  auto half = [](Vec v) {
    for (int& x : v) x /= 2;
    return v;
  };
  auto add = [](Vec a, const Vec& b, int s) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += s * b[k];
    return a;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.insert(half(add(eps2(i), eps2(j), -1)));
      out.insert(half(add(eps2(i), eps2(j), 1)));
    }
  for (int i = 0; i < n; ++i) {
    if (t.family == Family::B) out.insert(half(eps2(i)));
    if (t.family == Family::C) out.insert(eps2(i));
  }
  return out;
}

}  // namespace oracle
