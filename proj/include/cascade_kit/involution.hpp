#pragma once

#include "cascade_kit/cascade.hpp"
#include "cascade_kit/cascade_element.hpp"
#include "cascade_kit/kostant_ideal.hpp"
#include "cascade_kit/root_system.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ckit {

/// The Z₂-grading of g by the parity of the x_K-degree.
struct Z2Grading {
  std::vector<std::size_t> delta0;  // roots (ids over all of Δ) of even degree
  std::vector<std::size_t> delta1;  // odd degree
  long dim_g0 = 0;
  long dim_g1 = 0;
  std::map<std::pair<int, int>, std::size_t> count_table;  // (sign, degree) -> #Δ^sign_K(degree)
  long a = 0;                                             // #Δ⁺_K(2) = #Δ⁺_K(−1)
  long b = 0;                                             // #Δ⁺_K(1)

  std::size_t count(int sign, int degree) const {
    auto it = count_table.find({sign, degree});
    return it == count_table.end() ? 0 : it->second;
  }
};

/// Throws NotAdmissible for A_{2p}.
inline Z2Grading z2_grading(const RootSystem& rs, const Cascade& c) {
  const ZGrading g = grade(rs, cascade_element(rs, c));
  Z2Grading z;
  for (const Root& a : rs.positive_roots()) {
    const int d = g.degree[a.id];
    ++z.count_table[{1, d}];
    ++z.count_table[{-1, -d}];
    const bool even = d % 2 == 0;
    (even ? z.delta0 : z.delta1).push_back(a.id);
    (even ? z.delta0 : z.delta1).push_back(rs.negate(a.id));
  }
  for (int d = -2; d <= 2; ++d) {
    z.count_table.try_emplace({1, d}, 0);
    z.count_table.try_emplace({-1, d}, 0);
  }
  z.dim_g0 = static_cast<long>(rs.rank() + z.delta0.size());
  z.dim_g1 = static_cast<long>(z.delta1.size());
  z.a = static_cast<long>(z.count(1, 2));
  z.b = static_cast<long>(z.count(1, 1));
  return z;
}

/// The identities dim g₀ = dim b − #K, dim g₁ = dim u + #K and the (a, b) table shape.
inline bool z2_identities_hold(const RootSystem& rs, const Cascade& c, const Z2Grading& z) {
  const long np = static_cast<long>(rs.num_positive());
  const long k = static_cast<long>(c.size());
  const long dim_b = np + static_cast<long>(rs.rank());
  return z.dim_g0 + z.dim_g1 == 2 * np + static_cast<long>(rs.rank()) && z.dim_g0 == dim_b - k &&
         z.dim_g1 == np + k && z.count(1, -2) == 0 && static_cast<long>(z.count(1, -1)) == z.a &&
         static_cast<long>(z.count(1, 0)) == z.b - k;
}

struct RegularCertificate {
  WeightVector nu;  // Σ M^i β_i
  long base = 3;    // M
};

/// An element of span(K) on which no root vanishes.
inline RegularCertificate regular_certificate(const RootSystem& rs, const Cascade& c) {
  // every positive root pairs nontrivially with some cascade root
  for (const Root& g : rs.positive_roots()) {
    bool hit = false;
    for (const auto& n : c.nodes()) hit = hit || rs.pairing_scaled(g.coords, rs.root(n.beta).coords) != 0;
    if (!hit) throw std::logic_error("root orthogonal to the whole cascade");
  }
  for (long base = 3;; ++base) {
    RegularCertificate cert{WeightVector(rs.rank()), base};
    Rational power = 1;
    for (const auto& n : c.nodes()) {
      cert.nu += power * rs.weight(rs.root(n.beta));
      power *= base;
    }
    const auto m = rs.marks(cert.nu);
    bool regular = true;
    for (const Root& g : rs.positive_roots()) regular = regular && RootSystem::evaluate(g, m) != 0;
    if (regular) return cert;
    if (base > 1000) throw std::logic_error("no regular certificate found");
  }
}

/// Informational Kac-diagram description of the involution.
inline std::string kac_diagram_note(const RootSystem& rs, const WkTable& wk) {
  const Root& wt = rs.apply(wk.w, rs.theta());
  std::size_t j = 0;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (wt.coords[i] != 0) j = i;
  const std::string node = "α" + std::to_string(j + 1);
  if (theta_fundamental(rs)) return "Kac diagram determined by node " + node + " of the affine diagram";
  return "Kac diagram determined by node " + node + " together with the affine node";
}

}  // namespace ckit
