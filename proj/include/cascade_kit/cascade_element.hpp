#pragma once

#include "cascade_kit/cascade.hpp"
#include "cascade_kit/errors.hpp"
#include "cascade_kit/root_system.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace ckit {

/// x_K = ½ Σ β_i^∨
inline WeightVector cascade_element(const RootSystem& rs, const Cascade& c) {
  WeightVector x(rs.rank());
  for (const auto& n : c.nodes()) x += rs.coroot(rs.root(n.beta));
  return Rational(1, 2) * x;
}

/// Values of the positive roots on an element, indexed by root id.
struct Spectrum {
  std::vector<Rational> values;
  std::map<Rational, std::size_t> multiplicity;

  Rational max() const { return multiplicity.empty() ? Rational(0) : multiplicity.rbegin()->first; }
  Rational min() const { return multiplicity.empty() ? Rational(0) : multiplicity.begin()->first; }
  std::size_t count(const Rational& v) const {
    auto it = multiplicity.find(v);
    return it == multiplicity.end() ? 0 : it->second;
  }
};

inline Spectrum spectrum(const RootSystem& rs, const WeightVector& x) {
  Spectrum s;
  const auto m = rs.marks(x);
  for (const Root& a : rs.positive_roots()) {
    s.values.push_back(RootSystem::evaluate(a, m));
    ++s.multiplicity[s.values.back()];
  }
  return s;
}

inline std::vector<Rational> simple_marks(const RootSystem& rs, const Cascade& c) {
  return rs.marks(cascade_element(rs, c));
}

/// θ is a fundamental weight: a single simple root pairs with θ, with <θ, α^∨> = 1.
inline std::optional<std::size_t> theta_fundamental_node(const RootSystem& rs) {
  std::optional<std::size_t> node;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    const std::int64_t p = rs.pairing_scaled(rs.theta().coords, rs.simple(i).coords);
    if (p == 0) continue;
    if (node) return std::nullopt;
    // <θ, α_i^∨> = 2(θ,α_i)/(α_i,α_i)
    if (2 * p != rs.form_scaled(i, i)) return std::nullopt;
    node = i;
  }
  return node;
}

inline bool theta_fundamental(const RootSystem& rs) { return theta_fundamental_node(rs).has_value(); }

/// The simple root α̃ attached to the affine node, and the cascade roots it meets negatively.
struct TapData {
  std::size_t tap = 0;            // simple root index
  std::vector<std::size_t> J;     // cascade node indices with (α̃, β_i) < 0
  std::vector<int> c;             // c_i = (α̃,α̃)/(β_i,β_i), aligned with J
};

/// Throws DecompositionMismatch when α̃ ≠ ½(θ − Σ c_i β_i) or Σ c_i ≠ 3.
inline std::optional<TapData> tap_data(const RootSystem& rs, const Cascade& c) {
  auto node = theta_fundamental_node(rs);
  if (!node) return std::nullopt;
  TapData t;
  t.tap = *node;
  const Root& tap = rs.simple(t.tap);
  const auto tt = rs.pairing_scaled(tap.coords, tap.coords);
  WeightVector rest = rs.weight(rs.theta());
  int total = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Root& b = rs.root(c[i].beta);
    if (rs.pairing_scaled(tap.coords, b.coords) >= 0) continue;
    const auto bb = rs.pairing_scaled(b.coords, b.coords);
    const int ci = static_cast<int>(tt / bb);
    t.J.push_back(i);
    t.c.push_back(ci);
    total += ci;
    rest -= Rational(ci) * rs.weight(b);
  }
  if (total != 3 || !(Rational(1, 2) * rest == rs.weight(tap)))
    throw DecompositionMismatch("tap root is not ½(θ − Σ c_i β_i)");
  return t;
}

/// Pairs γ ↔ β_j − γ inside each Heisenberg subset, away from the cascade itself.
struct SymmetryReport {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // root ids
  bool values_sum_to_one = true;
  bool multiplicities_symmetric = true;
};

inline SymmetryReport symmetry_check(const RootSystem& rs, const Cascade& c, const WeightVector& x) {
  SymmetryReport r;
  const auto m = rs.marks(x);
  std::vector<char> in_k(rs.num_positive(), 0);
  for (const auto& n : c.nodes()) in_k[n.beta] = 1;
  std::map<Rational, long> balance;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const Root& b = rs.root(c[j].beta);
    const auto h = heisenberg_subset(rs, c, j);
    for (std::size_t id : h) {
      if (in_k[id]) continue;
      const Root& g = rs.root(id);
      std::vector<int> d(rs.rank());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = b.coords[i] - g.coords[i];
      const auto partner = rs.find(d);
      if (!partner || std::find(h.begin(), h.end(), *partner) == h.end()) {
        r.values_sum_to_one = false;
        continue;
      }
      r.pairs.emplace_back(id, *partner);
      const Rational v = RootSystem::evaluate(g, m);
      if (v + RootSystem::evaluate(rs.root(*partner), m) != 1) r.values_sum_to_one = false;
      ++balance[v];
      --balance[1 - v];
    }
  }
  for (const auto& [v, n] : balance)
    if (n != 0) r.multiplicities_symmetric = false;
  return r;
}

/// 2ρ = Σ (h*_j − 1) β_j and 2ρ^∨ = Σ (h_j − 1) β_j^∨, with subsystem Coxeter numbers.
struct RhoDecomposition {
  std::vector<int> rho_coeffs;      // h*_j − 1
  std::vector<int> rho_vee_coeffs;  // h_j − 1
};

inline RhoDecomposition rho_decompositions(const RootSystem& rs, const Cascade& c) {
  RhoDecomposition d;
  WeightVector two_rho(rs.rank()), two_rho_vee(rs.rank());
  for (const auto& n : c.nodes()) {
    const auto cx = rs.subsystem_coxeter_numbers(n.support);
    d.rho_coeffs.push_back(cx.h_dual - 1);
    d.rho_vee_coeffs.push_back(cx.h - 1);
    two_rho += Rational(cx.h_dual - 1) * rs.weight(rs.root(n.beta));
    two_rho_vee += Rational(cx.h - 1) * rs.coroot(rs.root(n.beta));
  }
  if (!(two_rho == Rational(2) * rs.rho())) throw DecompositionMismatch("2ρ is not Σ (h*_j − 1) β_j");
  if (!(two_rho_vee == Rational(2) * rs.rho_vee()))
    throw DecompositionMismatch("2ρ^∨ is not Σ (h_j − 1) β_j^∨");
  return d;
}

inline bool qvee_classification(const RootSystem& rs, const Cascade& c) {
  return rs.lattice_member(cascade_element(rs, c), Lattice::QVee);
}

/// The Frobenius-type multiset: #K zeros together with the spectrum of x_K.
struct FrobeniusReport {
  std::map<Rational, std::size_t> multiset;
  bool symmetric = false;          // about ½
  Rational trace;                  // sum of the multiset
  Rational half_dim_plus_k;        // ½ (#Δ⁺ + #K)
  Rational two_rho_on_x;           // 2ρ(x_K)
  long hdual_sum = 0;              // Σ (h*_j − 1)
  bool consistent() const { return symmetric && trace == half_dim_plus_k && trace == two_rho_on_x && trace == hdual_sum; }
};

inline FrobeniusReport frobenius_spectrum_check(const RootSystem& rs, const Cascade& c) {
  FrobeniusReport f;
  const WeightVector x = cascade_element(rs, c);
  const Spectrum s = spectrum(rs, x);
  f.multiset = s.multiplicity;
  f.multiset[Rational(0)] += c.size();
  f.symmetric = true;
  for (const auto& [v, n] : f.multiset) {
    auto it = f.multiset.find(1 - v);
    if (it == f.multiset.end() || it->second != n) f.symmetric = false;
    f.trace += v * n;
  }
  f.half_dim_plus_k = Rational(rs.num_positive() + c.size(), 2);
  f.two_rho_on_x = rs.pairing(Rational(2) * rs.rho(), x);
  for (const auto& n : c.nodes()) f.hdual_sum += rs.subsystem_coxeter_numbers(n.support).h_dual - 1;
  return f;
}

/// Expansion of ½(γ − ω0 γ) over K, nonzero coefficients only (node index, coefficient).
inline std::vector<std::pair<std::size_t, Rational>> symmetric_part_over_cascade(const RootSystem& rs, const Cascade& c,
                                                                                const WeylElement& w0, const Root& g) {
  WeightVector target = rs.weight(g) - WeightVector::from_coords(w0.apply(g.coords));
  target *= Rational(1, 2);
  std::vector<std::pair<std::size_t, Rational>> out;
  WeightVector check(rs.rank());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Root& b = rs.root(c[i].beta);
    const Rational k = rs.pairing(b, target) / rs.pairing(b, b);
    if (k == 0) continue;
    out.emplace_back(i, k);
    check += k * rs.weight(b);
  }
  if (!(check == target)) throw DecompositionMismatch("½(γ − ω0 γ) is not in the span of K");
  return out;
}

}  // namespace ckit
