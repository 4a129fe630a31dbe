#pragma once

// Reference data transcribed by hand from the published tables and diagrams. Used as test oracles and by
// `cascade-kit table --diff-fixtures`; nothing in the library computes from here.

#include "cascade_kit/classical_model.hpp"
#include "cascade_kit/rational.hpp"
#include "cascade_kit/root_system.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ckit::fixtures {

namespace detail {

inline std::vector<int> alpha_of_epsilon(SimpleType t, const std::vector<int>& eps) {
  std::vector<Rational> e(eps.begin(), eps.end());
  const WeightVector a = from_epsilon(t, e);
  std::vector<int> out;
  for (std::size_t i = 0; i < a.rank(); ++i) out.push_back(static_cast<int>(to_int64(a[i])));
  return out;
}

inline std::vector<int> eps(std::size_t dim, std::vector<std::pair<int, int>> terms) {
  std::vector<int> v(dim, 0);
  for (auto [index, coeff] : terms) v[static_cast<std::size_t>(index - 1)] += coeff;
  return v;
}

inline long choose2(long n) { return n * (n - 1) / 2; }

}  // namespace detail

/// Cascade elements in the published numbering, simple-root coordinates.
inline std::vector<std::vector<int>> cascade_list(SimpleType t) {
  const int n = t.rank;
  std::vector<std::vector<int>> out;
  switch (t.family) {
    case Family::A: {
      const std::size_t dim = static_cast<std::size_t>(n + 1);
      for (int i = 1; i <= (n + 1) / 2; ++i)
        out.push_back(detail::alpha_of_epsilon(t, detail::eps(dim, {{i, 1}, {n + 2 - i, -1}})));
      return out;
    }
    case Family::C:
      for (int i = 1; i <= n; ++i)
        out.push_back(detail::alpha_of_epsilon(t, detail::eps(static_cast<std::size_t>(n), {{i, 2}})));
      return out;
    case Family::B:
    case Family::D: {
      const std::size_t dim = static_cast<std::size_t>(n);
      for (int i = 1; 2 * i <= n; ++i) {
        out.push_back(detail::alpha_of_epsilon(t, detail::eps(dim, {{2 * i - 1, 1}, {2 * i, 1}})));
        out.push_back(detail::alpha_of_epsilon(t, detail::eps(dim, {{2 * i - 1, 1}, {2 * i, -1}})));
      }
      if (t.family == Family::B && n % 2 == 1) out.push_back(detail::alpha_of_epsilon(t, detail::eps(dim, {{n, 1}})));
      return out;
    }
    case Family::G:
      return {{3, 2}, {1, 0}};
    case Family::F:
      return {{2, 4, 3, 2}, {2, 2, 1, 0}, {0, 2, 1, 0}, {0, 0, 1, 0}};
    case Family::E:
      if (n == 6) return {{1, 2, 3, 2, 1, 2}, {1, 1, 1, 1, 1, 0}, {0, 1, 1, 1, 0, 0}, {0, 0, 1, 0, 0, 0}};
      if (n == 7)
        return {{1, 2, 3, 4, 3, 2, 2}, {1, 2, 2, 2, 1, 0, 1}, {1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 2, 1, 0, 1},
                {0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 1}};
      return {{2, 3, 4, 5, 6, 4, 2, 3}, {0, 1, 2, 3, 4, 3, 2, 2}, {0, 1, 2, 2, 2, 1, 0, 1}, {0, 1, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 1, 2, 1, 0, 1}, {0, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 1}};
  }
  return out;
}

inline std::vector<int> highest_root(SimpleType t) { return cascade_list(t).front(); }

inline std::size_t num_positive(SimpleType t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

inline std::size_t cascade_size(SimpleType t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return (n + 1) / 2;
    case Family::D: return 2 * (n / 2);
    case Family::E: return n == 6 ? 4 : n;
    default: return n;
  }
}

/// Simple marks α_i(x_K).
inline std::vector<Rational> simple_marks(SimpleType t) {
  const int n = t.rank;
  std::vector<Rational> m(static_cast<std::size_t>(n));
  auto alt = [&](int count) {
    for (int i = 0; i < count; ++i) m[static_cast<std::size_t>(i)] = i % 2 == 0 ? 1 : -1;
  };
  switch (t.family) {
    case Family::A:
      if (n % 2 == 0) {
        m[static_cast<std::size_t>(n / 2 - 1)] = Rational(1, 2);
        m[static_cast<std::size_t>(n / 2)] = Rational(1, 2);
      } else {
        m[static_cast<std::size_t>((n + 1) / 2 - 1)] = 1;
      }
      return m;
    case Family::C:
      m.back() = 1;
      return m;
    case Family::B:
      if (n == 2) {  // B2 = C2 read in the B numbering
        m[0] = 1;
        return m;
      }
      alt(n % 2 == 1 ? n : n - 1);
      return m;
    case Family::D:
      if (n % 2 == 0) {
        alt(n - 2);
        m[static_cast<std::size_t>(n - 2)] = m[static_cast<std::size_t>(n - 1)] = 1;
      } else {
        alt(n - 2);
      }
      return m;
    case Family::E:
      if (n == 6) return {0, 0, 1, 0, 0, -1};
      if (n == 7) return {1, -1, 1, -1, 1, -1, 1};
      return {-1, 1, -1, 1, -1, 1, -1, 1};
    case Family::F:
      return {0, 0, 1, -1};
    case Family::G:
      return {1, -1};
  }
  return m;
}

/// Types whose cascade element lies in the coroot lattice.
inline bool x_k_in_coroot_lattice(SimpleType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::B: return n >= 3 && (n % 4 == 3 || n % 4 == 0);
    case Family::D: return n % 4 == 0 || n % 4 == 1;
    case Family::E: return n != 7;
    case Family::F:
    case Family::G: return true;
    default: return false;
  }
}

inline bool theta_fundamental(SimpleType t) {
  return !(t.family == Family::A || t.family == Family::C || t == SimpleType{Family::B, 2});
}

/// Orders of w_K where they are stated outright.
inline std::optional<std::size_t> w_k_order(SimpleType t) {
  switch (t.family) {
    case Family::A: return t.rank % 2 == 1 ? std::optional<std::size_t>(2) : std::nullopt;
    case Family::C: return 2;
    case Family::F:
    case Family::G: return 3;
    case Family::E: return t.rank == 6 ? 3 : t.rank == 7 ? 18 : 5;
    default: return std::nullopt;
  }
}

/// w_K as a signed permutation of ε_1..ε_m (1-based targets), classical types except A_{2p}.
inline std::optional<SignedPermutation> w_k_signed_permutation(SimpleType t) {
  const int r = t.rank;
  SignedPermutation p(static_cast<std::size_t>(t.family == Family::A ? r + 1 : r));
  auto set = [&](int from, int to) { p[static_cast<std::size_t>(from - 1)] = to; };
  switch (t.family) {
    case Family::A: {
      if (r % 2 == 0) return std::nullopt;
      const int n = (r + 1) / 2;
      for (int i = 1; i <= n; ++i) {
        set(i, n + i);
        set(n + i, i);
      }
      return p;
    }
    case Family::C:
      for (int i = 1; i <= r; ++i) set(i, -(r + 1 - i));
      return p;
    case Family::B:
    case Family::D: {
      if (t == SimpleType{Family::B, 2}) {
        set(1, -1);
        set(2, 2);
        return p;
      }
      // D_{2n} array; B_{2n−1} drops its last column. D_{2n+1} array; B_{2n} drops its last column.
      const bool d_even_pattern = (t.family == Family::D) == (r % 2 == 0);
      const int n = d_even_pattern ? (t.family == Family::D ? r / 2 : (r + 1) / 2) : (t.family == Family::D ? (r - 1) / 2 : r / 2);
      for (int i = 1; i <= n; ++i) set(2 * i - 1, -(n + 1 - i));
      const int sign = n % 2 == 0 ? 1 : -1;
      if (d_even_pattern) {
        for (int i = 1; i < n; ++i) set(2 * i, n + i);
        if (t.family == Family::D) set(2 * n, sign * 2 * n);
      } else {
        for (int i = 1; i <= n; ++i) set(2 * i, n + i);
        if (t.family == Family::D) set(2 * n + 1, sign * (2 * n + 1));
      }
      return p;
    }
    default:
      return std::nullopt;
  }
}

/// w_K(α_i) for F4, E6, E7, E8; G2 is given as a word instead.
inline std::optional<std::vector<std::vector<int>>> w_k_images(SimpleType t) {
  switch (t.family) {
    case Family::F:
      return std::vector<std::vector<int>>{{1, 0, 0, 0}, {0, 1, 0, 0}, {-2, -4, -2, -1}, {2, 4, 3, 1}};
    case Family::E:
      if (t.rank == 6)
        return std::vector<std::vector<int>>{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {-1, -2, -2, -2, -1, -1},
                                             {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {1, 2, 3, 2, 1, 1}};
      if (t.rank == 7)
        return std::vector<std::vector<int>>{
            {-1, -2, -2, -2, -1, 0, -1}, {1, 2, 2, 2, 1, 1, 1},   {-1, -1, -2, -2, -1, -1, -1},
            {1, 1, 2, 2, 2, 1, 1},       {0, -1, -2, -2, -2, -1, -1}, {0, 1, 2, 3, 2, 1, 1},
            {-1, -1, -1, -2, -2, -1, -1}};
      return std::vector<std::vector<int>>{
          {0, 1, 2, 3, 4, 3, 1, 2},       {0, -1, -2, -3, -4, -2, -1, -2}, {1, 1, 2, 3, 4, 2, 1, 2},
          {-1, -1, -2, -3, -3, -2, -1, -2}, {1, 2, 2, 3, 3, 2, 1, 2},       {-1, -2, -2, -3, -3, -2, -1, -1},
          {1, 2, 3, 3, 3, 2, 1, 1},       {-1, -2, -2, -2, -3, -2, -1, -2}};
    default:
      return std::nullopt;
  }
}

/// G2: w_K = (r_{α2} r_{α1})², 0-based simple indices.
inline std::vector<std::size_t> g2_w_k_word() { return {1, 0, 1, 0}; }

/// Simple root α_j with w_K(θ) = −α_j (1-based).
inline std::optional<std::size_t> w_k_theta_image(SimpleType t) {
  switch (t.family) {
    case Family::A: return t.rank % 2 == 1 ? std::optional<std::size_t>((t.rank + 1) / 2) : std::nullopt;
    case Family::C: return static_cast<std::size_t>(t.rank);
    case Family::B: return t.rank == 2 ? 1 : static_cast<std::size_t>((t.rank + 1) / 2);
    case Family::D: return static_cast<std::size_t>(t.rank / 2);
    case Family::E: return static_cast<std::size_t>(t.rank == 6 ? 6 : 7);
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return std::nullopt;
}

struct OrbitRow {
  std::string name;  // orbit label (exceptional) or partition text
  long dim = 0;
  long g2 = 0;
  long g4 = 0;
  std::optional<std::vector<int>> partition;
  std::vector<int> wdd;
};

/// Orbit invariants per type: partition or orbit name, dimensions, weighted diagram.
inline OrbitRow orbit_row(SimpleType t) {
  const int r = t.rank;
  OrbitRow row;
  row.wdd.assign(static_cast<std::size_t>(r), 0);
  auto parts = [](int count, int value, int ones) {
    std::vector<int> p(static_cast<std::size_t>(count), value);
    p.insert(p.end(), static_cast<std::size_t>(ones), 1);
    return p;
  };
  auto set_row = [&](long dim, long g2, long g4, std::vector<int> p, std::size_t two_at) {
    row.dim = dim;
    row.g2 = g2;
    row.g4 = g4;
    row.partition = std::move(p);
    row.wdd[two_at - 1] = 2;
  };
  switch (t.family) {
    case Family::A: {
      const long j = (r + 1) / 2;
      if (r % 2 == 1) {
        set_row(2 * j * j, j * j, 0, parts(static_cast<int>(j), 2, 0), static_cast<std::size_t>(j));
      } else {
        const long jj = r / 2;
        row.dim = 2 * jj * jj + 2 * jj;
        row.g2 = jj * jj;
        row.partition = parts(static_cast<int>(jj), 2, 1);
        row.wdd[static_cast<std::size_t>(jj - 1)] = row.wdd[static_cast<std::size_t>(jj)] = 1;
      }
      break;
    }
    case Family::C: {
      const long j = r;
      set_row(j * j + j, j * (j + 1) / 2, 0, parts(r, 2, 0), static_cast<std::size_t>(j));
      break;
    }
    case Family::B: {
      const long j = (r + 1) / 2;
      if (r % 2 == 1)
        set_row(5 * j * j - 3 * j, 2 * j * j - j, detail::choose2(j), parts(static_cast<int>(j), 3, static_cast<int>(j - 1)),
                static_cast<std::size_t>(j));
      else
        set_row(5 * j * j + j, 2 * j * j + j, detail::choose2(j), parts(static_cast<int>(j), 3, static_cast<int>(j + 1)),
                static_cast<std::size_t>(j));
      break;
    }
    case Family::D: {
      const long j = r / 2;
      if (r % 2 == 0)
        set_row(5 * j * j - j, 2 * j * j, detail::choose2(j), parts(static_cast<int>(j), 3, static_cast<int>(j)),
                static_cast<std::size_t>(j));
      else
        set_row(5 * j * j + 3 * j, 2 * j * j + 2 * j, detail::choose2(j),
                parts(static_cast<int>(j), 3, static_cast<int>(j + 2)), static_cast<std::size_t>(j));
      break;
    }
    case Family::E:
      if (r == 6) row = {"A2", 42, 20, 1, std::nullopt, {0, 0, 0, 0, 0, 2}};
      if (r == 7) row = {"A2+3A1", 84, 35, 7, std::nullopt, {0, 0, 0, 0, 0, 0, 2}};
      if (r == 8) row = {"2A2", 156, 64, 14, std::nullopt, {0, 0, 0, 0, 0, 0, 2, 0}};
      return row;
    case Family::F:
      return {"A2", 30, 14, 1, std::nullopt, {0, 0, 0, 2}};
    case Family::G:
      return {"G2(a1)", 10, 4, 1, std::nullopt, {0, 2}};
  }
  if (row.partition) {
    std::string s = "(";
    for (std::size_t i = 0; i < row.partition->size(); ++i) s += (i ? "," : "") + std::to_string((*row.partition)[i]);
    row.name = s + ")";
  }
  return row;
}

/// Hasse diagram of the cascade poset: labels in figure notation and 0-based parents.
struct HasseFixture {
  std::vector<std::string> labels;
  std::vector<std::optional<std::size_t>> parents;
};

/// The diagrams instantiated for the types exercised by the test-suite.
inline std::optional<HasseFixture> hasse_fixture(SimpleType t) {
  using P = std::optional<std::size_t>;
  const std::string s = t.str();
  if (s == "A5") return HasseFixture{{"A5", "A3", "A1"}, {P{}, 0, 1}};
  if (s == "C4") return HasseFixture{{"C4", "C3", "C2", "C1"}, {P{}, 0, 1, 2}};
  if (s == "B7") return HasseFixture{{"B7", "A1", "B5", "A1", "B3", "A1", "Ã1"}, {P{}, 0, 0, 2, 2, 4, 4}};
  if (s == "D8") return HasseFixture{{"D8", "A1", "D6", "A1", "D4", "A1", "A1", "A1"}, {P{}, 0, 0, 2, 2, 4, 4, 4}};
  if (s == "D9") return HasseFixture{{"D9", "A1", "D7", "A1", "D5", "A1", "D3", "A1"}, {P{}, 0, 0, 2, 2, 4, 4, 6}};
  if (s == "E6") return HasseFixture{{"E6", "A5", "A3", "A1"}, {P{}, 0, 1, 2}};
  if (s == "E7") return HasseFixture{{"E7", "D6", "A1", "D4", "A1", "A1", "A1"}, {P{}, 0, 1, 1, 3, 3, 3}};
  if (s == "E8")
    return HasseFixture{{"E8", "E7", "D6", "A1", "D4", "A1", "A1", "A1"}, {P{}, 0, 1, 2, 2, 4, 4, 4}};
  if (s == "F4") return HasseFixture{{"F4", "C3", "C2", "C1"}, {P{}, 0, 1, 2}};
  if (s == "G2") return HasseFixture{{"G2", "Ã1"}, {P{}, 0}};
  return std::nullopt;
}

/// C1 and A1 are the same diagram; labels are compared after this identification.
inline std::string normalize_label(const std::string& label) { return label == "C1" ? "A1" : label; }

/// Dynkin–Bala–Carter names of the exceptional cascade orbits.
inline std::optional<std::string> exceptional_orbit_name(SimpleType t) {
  if (is_classical(t)) return std::nullopt;
  return orbit_row(t).name;
}

}  // namespace ckit::fixtures
