#pragma once

#include "cascade_kit/cascade.hpp"
#include "cascade_kit/cascade_element.hpp"
#include "cascade_kit/classical_model.hpp"
#include "cascade_kit/errors.hpp"
#include "cascade_kit/kostant_ideal.hpp"
#include "cascade_kit/root_system.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ckit {

struct OrbitData {
  std::vector<int> wdd;
  long dim_orbit = 0;
  long dim_g2 = 0;
  long dim_g4 = 0;
  int height = 0;
  bool spherical = false;
  std::optional<std::vector<int>> partition;
  std::string regular_subalgebra;
  long complexity = 0;
  std::size_t rank_orbit = 0;
};

inline bool is_a_even(SimpleType t) { return t.family == Family::A && t.rank % 2 == 0; }

struct WddResult {
  std::vector<int> labels;
  WeightVector dominant;          // dominant representative of W·x_K
  std::vector<std::size_t> word;  // walk from x_K to −dominant
  bool in_orbit = false;          // replaying the word and ω0 lands on the dominant vector
};

/// Weighted Dynkin diagram of the characteristic 2x_K.
inline WddResult characteristic_and_wdd(const RootSystem& rs, const Cascade& c) {
  const WeightVector x = cascade_element(rs, c);
  const auto walk = anti_dominantize(rs, x);
  WddResult r;
  r.word = walk.word;
  r.dominant = -walk.image;  // ω0(x_K) = −x_K, so −(anti-dominant rep) is the dominant rep
  for (const auto& m : rs.marks(Rational(2) * r.dominant)) r.labels.push_back(static_cast<int>(to_int64(m)));
  std::vector<std::size_t> rev(walk.word.rbegin(), walk.word.rend());
  const WeylElement replay = rs.from_word(rev);
  const WeylElement w0 = longest_element(rs, c);
  r.in_orbit = replay == walk.w && w0.apply(replay.apply(x)) == r.dominant;
  return r;
}

/// 2·max γ(x_K) over the roots.
inline int orbit_height(const RootSystem& rs, const Cascade& c) {
  return static_cast<int>(to_int64(2 * spectrum(rs, cascade_element(rs, c)).max()));
}

struct HeightWitness {
  std::vector<std::size_t> order;  // cascade node indices, θ is node 0
  std::vector<std::vector<int>> partial_sums;
  bool fifth_power_vanishes = false;
};

/// An ordering of {θ} ⊎ {β_i^{c_i}} whose partial sums from −θ+α̃ all stay in Δ.
inline HeightWitness height_witness(const RootSystem& rs, const Cascade& c, const TapData& tap) {
  std::vector<std::size_t> multiset{0};
  for (std::size_t k = 0; k < tap.J.size(); ++k)
    for (int r = 0; r < tap.c[k]; ++r) multiset.push_back(tap.J[k]);
  std::sort(multiset.begin(), multiset.end());
  std::vector<int> start(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) start[i] = rs.simple(tap.tap).coords[i] - rs.theta().coords[i];
  HeightWitness h;
  const Spectrum s = spectrum(rs, cascade_element(rs, c));
  h.fifth_power_vanishes = s.max() <= 2 && s.min() >= -2;
  do {
    std::vector<std::vector<int>> sums{start};
    bool ok = rs.is_root(start);
    for (std::size_t k : multiset) {
      if (!ok) break;
      std::vector<int> next = sums.back();
      for (std::size_t i = 0; i < rs.rank(); ++i) next[i] += rs.root(c[k].beta).coords[i];
      ok = rs.is_root(next);
      sums.push_back(next);
    }
    if (ok) {
      h.order = multiset;
      h.partial_sums = sums;
      return h;
    }
  } while (std::next_permutation(multiset.begin(), multiset.end()));
  throw NoChain("no ordering of the cascade multiset keeps partial sums in Δ");
}

struct OrbitDims {
  long dim_orbit = 0;
  long dim_g0 = 0;
  long dim_g1 = 0;
  long dim_g2 = 0;
  long dim_g4 = 0;
};

/// Grading of g by the eigenvalues of 2x_K.
inline OrbitDims orbit_dimension(const RootSystem& rs, const Cascade& c) {
  const Spectrum s = spectrum(rs, cascade_element(rs, c));
  OrbitDims d;
  long zero = 0, one = 0;
  for (const auto& v : s.values) {
    const Rational t = 2 * v;  // eigenvalue of 2x_K; negatives contribute −t
    if (t == 0) zero += 2;
    if (t == 1 || t == -1) one += 1;
    if (t == 2 || t == -2) d.dim_g2 += 1;
    if (t == 4 || t == -4) d.dim_g4 += 1;
  }
  d.dim_g0 = static_cast<long>(rs.rank()) + zero;
  d.dim_g1 = one;
  const long dim_g = 2 * static_cast<long>(rs.num_positive()) + static_cast<long>(rs.rank());
  d.dim_orbit = dim_g - d.dim_g0 - d.dim_g1;
  return d;
}

/// Closed-form Jordan type of e_K for classical types.
inline std::vector<int> classical_partition(SimpleType t) {
  if (!is_classical(t)) throw NotClassical(t.str() + " has no partition");
  const int n = t.rank;
  auto pattern = [](int twos_or_threes, int value, int ones) {
    std::vector<int> p(static_cast<std::size_t>(twos_or_threes), value);
    p.insert(p.end(), static_cast<std::size_t>(ones), 1);
    return p;
  };
  switch (t.family) {
    case Family::A: return pattern((n + 1) / 2, 2, n % 2 == 0 ? 1 : 0);
    case Family::C: return pattern(n, 2, 0);
    case Family::B: {
      const int j = (n + 1) / 2;
      return pattern(j, 3, n % 2 == 1 ? j - 1 : j + 1);
    }
    default: {
      const int j = n / 2;
      return pattern(j, 3, n % 2 == 0 ? j : j + 2);
    }
  }
}

struct PartitionOracle {
  std::vector<int> partition;
  std::vector<std::size_t> ranks;
  bool members_in_algebra = false;
};

/// e_K = Σ e_{β_i} in the defining representation, Jordan type from ranks of powers.
inline PartitionOracle partition_oracle(const RootSystem& rs, const Cascade& c) {
  require_classical(rs.type());
  const std::size_t N = defining_dim(rs.type());
  IntMatrix e(N, std::vector<long>(N, 0));
  PartitionOracle o;
  o.members_in_algebra = true;
  for (const auto& node : c.nodes()) {
    const IntMatrix m = root_vector(rs, rs.root(node.beta));
    o.members_in_algebra = o.members_in_algebra && in_algebra(rs.type(), m);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) e[i][j] += m[i][j];
  }
  const JordanData jd = jordan_type(e);
  o.partition = jd.partition;
  o.ranks = jd.ranks;
  return o;
}

/// mA1, or (m−1)A1+Ã1 when the cascade contains a short root.
inline std::string regular_subalgebra_label(const RootSystem& rs, const Cascade& c) {
  std::size_t shorts = 0;
  for (const auto& n : c.nodes())
    if (!rs.is_long(rs.root(n.beta))) ++shorts;
  const std::size_t longs = c.size() - shorts;
  std::string out;
  if (longs > 0) out = (longs > 1 ? std::to_string(longs) : std::string()) + "A1";
  for (std::size_t k = 0; k < shorts; ++k) out += (out.empty() ? "" : "+") + std::string("Ã1");
  return out;
}

inline OrbitData orbit_data(const RootSystem& rs, const Cascade& c) {
  OrbitData o;
  o.wdd = characteristic_and_wdd(rs, c).labels;
  const OrbitDims d = orbit_dimension(rs, c);
  o.dim_orbit = d.dim_orbit;
  o.dim_g2 = d.dim_g2;
  o.dim_g4 = d.dim_g4;
  o.height = orbit_height(rs, c);
  o.spherical = o.height <= 3;
  if (is_classical(rs.type())) o.partition = classical_partition(rs.type());
  o.regular_subalgebra = regular_subalgebra_label(rs, c);
  o.complexity = 2 * d.dim_g4;
  o.rank_orbit = c.size();
  return o;
}

}  // namespace ckit
