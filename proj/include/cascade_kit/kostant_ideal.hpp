#pragma once

#include "cascade_kit/cascade.hpp"
#include "cascade_kit/cascade_element.hpp"
#include "cascade_kit/errors.hpp"
#include "cascade_kit/root_system.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace ckit {

/// Δ⁺_z(i) for i ∈ {−1,0,1,2}.
struct ZGrading {
  WeightVector z;
  std::vector<int> degree;                      // per positive root id
  std::array<std::vector<std::size_t>, 4> parts;  // index i + 1

  const std::vector<std::size_t>& part(int i) const {
    if (i < -1 || i > 2) throw std::out_of_range("grading degree outside [-1, 2]");
    return parts[static_cast<std::size_t>(i + 1)];
  }
  /// Π ∩ Δ⁺_z(i), as simple root indices.
  std::vector<std::size_t> pi_part(const RootSystem& rs, int i) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < rs.rank(); ++k)
      if (degree[rs.simple(k).id] == i) out.push_back(k);
    return out;
  }
};

/// Throws NotAdmissible when some root takes a value outside {−1,0,1,2}.
inline ZGrading grade(const RootSystem& rs, const WeightVector& z) {
  ZGrading g;
  g.z = z;
  const auto m = rs.marks(z);
  g.degree.resize(rs.num_positive());
  for (const Root& a : rs.positive_roots()) {
    const Rational v = RootSystem::evaluate(a, m);
    if (!is_integer(v) || v < -1 || v > 2) throw NotAdmissible(rs.root_text(a), to_string(v));
    const int d = static_cast<int>(to_int64(v));
    g.degree[a.id] = d;
    g.parts[static_cast<std::size_t>(d + 1)].push_back(a.id);
  }
  return g;
}

/// Both Δ⁺_z(1) ∪ Δ⁺_z(2) and its complement are closed under root addition.
inline bool grading_closed(const RootSystem& rs, const ZGrading& g) {
  const std::size_t n = rs.num_positive();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const auto s = rs.positive_sum(a, b);
      if (!s) continue;
      const bool pa = g.degree[a] > 0, pb = g.degree[b] > 0, ps = g.degree[*s] > 0;
      if (pa == pb && ps != pa) return false;
    }
  return true;
}

struct AntiDominantWalk {
  WeylElement w;
  std::vector<std::size_t> word;  // simple reflections in the order applied; w = s_word.back() ⋯ s_word.front()
  WeightVector image;             // w(z)
};

/// Greedy walk to the anti-dominant chamber, lowest simple index first.
inline AntiDominantWalk anti_dominantize(const RootSystem& rs, const WeightVector& z) {
  const std::size_t n = rs.rank();
  std::vector<Rational> m = rs.marks(z);
  AntiDominantWalk out{WeylElement::identity(n), {}, z};
  std::vector<WeylElement> simple;
  for (std::size_t i = 0; i < n; ++i) simple.push_back(rs.simple_reflection(i));
  while (true) {
    std::size_t i = 0;
    while (i < n && m[i] <= 0) ++i;
    if (i == n) break;
    if (out.word.size() >= rs.num_positive()) throw std::logic_error("anti-dominant walk exceeded #Δ⁺ steps");
    const Rational mi = m[i];
    for (std::size_t j = 0; j < n; ++j)
      if (rs.cartan(j, i) != 0) m[j] -= mi * rs.cartan(j, i);
    out.w = simple[i].compose(out.w);
    out.word.push_back(i);
  }
  out.image = out.w.apply(z);
  return out;
}

/// N(w) equals {γ > 0 : γ(z) > 0}.
inline bool inversion_set_matches(const RootSystem& rs, const ZGrading& g, const WeylElement& w) {
  const auto inv = rs.inversion_set(w);
  std::vector<std::size_t> expected;
  for (std::size_t id = 0; id < rs.num_positive(); ++id)
    if (g.degree[id] > 0) expected.push_back(id);
  return inv == expected;
}

struct AbelianIdeal {
  std::vector<std::size_t> roots;  // sorted root ids
  WeylElement w;
  std::optional<int> d_threshold;
};

inline bool is_abelian(const RootSystem& rs, std::span<const std::size_t> ids) {
  for (std::size_t a : ids)
    for (std::size_t b : ids)
      if (rs.positive_sum(a, b)) return false;
  return true;
}

/// Δ(a_z) = w(Δ⁺_z(−1)) ⊔ w(−Δ⁺_z(2)); checked to be an abelian upper ideal of the right size.
inline AbelianIdeal abelian_ideal(const RootSystem& rs, const ZGrading& g, const WeylElement& w) {
  AbelianIdeal ideal;
  ideal.w = w;
  for (std::size_t id : g.part(-1)) ideal.roots.push_back(rs.apply(w, rs.root(id)).id);
  for (std::size_t id : g.part(2)) ideal.roots.push_back(rs.apply(w, rs.root(rs.negate(id))).id);
  std::sort(ideal.roots.begin(), ideal.roots.end());
  if (std::adjacent_find(ideal.roots.begin(), ideal.roots.end()) != ideal.roots.end())
    throw std::logic_error("ideal roots repeat");
  for (std::size_t id : ideal.roots)
    if (id >= rs.num_positive()) throw std::logic_error("ideal contains a negative root");
  if (!rs.is_upper_ideal(ideal.roots)) throw std::logic_error("ideal is not an upper ideal");
  if (!is_abelian(rs, ideal.roots)) throw std::logic_error("ideal is not abelian");
  return ideal;
}

/// Minimal elements of an upper ideal and maximal elements of its complement, by cover inspection.
struct IdealBoundary {
  std::vector<std::size_t> min_ideal;
  std::vector<std::size_t> max_complement;
};

inline IdealBoundary ideal_boundary(const RootSystem& rs, std::span<const std::size_t> ideal) {
  std::vector<char> in(rs.num_positive(), 0);
  for (std::size_t id : ideal) in[id] = 1;
  IdealBoundary b;
  for (const Root& g : rs.positive_roots()) {
    bool below_in = false, above_out = false;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      std::vector<int> down = g.coords, up = g.coords;
      down[i] -= 1;
      up[i] += 1;
      if (auto d = rs.find(down); d && *d < rs.num_positive() && in[*d]) below_in = true;
      if (auto u = rs.find(up); u && !in[*u]) above_out = true;
    }
    if (in[g.id] && !below_in) b.min_ideal.push_back(g.id);
    if (!in[g.id] && !above_out) b.max_complement.push_back(g.id);
  }
  return b;
}

struct MinMaxReport {
  IdealBoundary boundary;
  std::vector<std::size_t> predicted_min;  // w(Π(−1))
  std::vector<std::size_t> predicted_max;  // −w(Π(1))
  bool min_ok = false;
  bool max_ok = false;
};

inline MinMaxReport min_max_theorems(const RootSystem& rs, const ZGrading& g, const AbelianIdeal& ideal) {
  MinMaxReport r;
  r.boundary = ideal_boundary(rs, ideal.roots);
  for (std::size_t i : g.pi_part(rs, -1)) r.predicted_min.push_back(rs.apply(ideal.w, rs.simple(i)).id);
  for (std::size_t i : g.pi_part(rs, 1))
    r.predicted_max.push_back(rs.negate(rs.apply(ideal.w, rs.simple(i)).id));
  std::sort(r.predicted_min.begin(), r.predicted_min.end());
  std::sort(r.predicted_max.begin(), r.predicted_max.end());
  r.min_ok = r.predicted_min == r.boundary.min_ideal;
  r.max_ok = r.predicted_max == r.boundary.max_complement;
  return r;
}

struct ThresholdReport {
  int d_k = 0;
  bool height_filter = false;   // ideal = {ht ≥ d_K}
  bool boundary_heights = false;  // ht = d_K ⟺ w⁻¹γ ∈ Π(−1); ht = d_K−1 ⟺ −w⁻¹γ ∈ Π(1)
  bool coxeter_relation = false;  // d_K = h/2+1 iff Π(0) = ∅, else larger
};

inline ThresholdReport d_threshold(const RootSystem& rs, const ZGrading& g, AbelianIdeal& ideal) {
  ThresholdReport t;
  t.d_k = 1;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (g.degree[rs.simple(i).id] >= 0) t.d_k += rs.theta().coords[i];
  ideal.d_threshold = t.d_k;

  std::vector<std::size_t> filter;
  for (const Root& a : rs.positive_roots())
    if (a.height() >= t.d_k) filter.push_back(a.id);
  t.height_filter = filter == ideal.roots;

  // w⁻¹(γ) ∈ ±Π is tested through w applied to simple roots
  std::vector<char> top(rs.num_positive(), 0), next(rs.num_positive(), 0);
  for (std::size_t i : g.pi_part(rs, -1)) top[rs.apply(ideal.w, rs.simple(i)).id] = 1;
  for (std::size_t i : g.pi_part(rs, 1)) {
    const std::size_t neg = rs.apply(ideal.w, rs.simple(i)).id;  // w(α) < 0
    if (neg < rs.num_positive()) return t;
    next[rs.negate(neg)] = 1;
  }
  t.boundary_heights = true;
  for (const Root& a : rs.positive_roots()) {
    if ((a.height() == t.d_k) != static_cast<bool>(top[a.id])) t.boundary_heights = false;
    if ((a.height() == t.d_k - 1) != static_cast<bool>(next[a.id])) t.boundary_heights = false;
  }
  const int h = rs.coxeter_numbers().h;
  const bool no_zero = g.pi_part(rs, 0).empty();
  t.coxeter_relation = no_zero ? 2 * t.d_k == h + 2 : 2 * t.d_k > h + 2;
  return t;
}

/// Base of Δ_z(0) in Δ⁺_z(0): roots of degree zero that are not sums of two such roots.
inline std::vector<std::size_t> degree_zero_base(const RootSystem& rs, const ZGrading& g) {
  const auto& zero = g.part(0);
  std::vector<char> decomposable(rs.num_positive(), 0);
  for (std::size_t a : zero)
    for (std::size_t b : zero)
      if (auto s = rs.positive_sum(a, b); s && g.degree[*s] == 0) decomposable[*s] = 1;
  std::vector<std::size_t> base;
  for (std::size_t id : zero)
    if (!decomposable[id]) base.push_back(id);
  return base;
}

struct WInversePiReport {
  std::vector<std::size_t> preimage;  // w⁻¹(Π) as root ids, sorted
  std::vector<std::size_t> expected;  // base ∪ {−θ}, sorted
  std::size_t theta_image_simple = 0; // j with w(θ) = −α_j
  bool base_maps_to_simple = false;   // base of Δ_z(0) lands in Π
  bool theta_to_minus_simple = false; // w(θ) ∈ −Π
  bool coweight = false;              // −w(z) = ϖ_j^∨
  bool ok() const { return preimage == expected && base_maps_to_simple && theta_to_minus_simple && coweight; }
};

/// Requires rk Δ_z(0) = rank − 1 and θ(z) = 1.
inline WInversePiReport w_inverse_of_pi(const RootSystem& rs, const ZGrading& g, const WeylElement& w) {
  const auto base = degree_zero_base(rs, g);
  if (g.degree[rs.theta().id] != 1) throw PreconditionFailed("θ(z) ≠ 1");
  if (base.size() + 1 != rs.rank()) throw PreconditionFailed("rank of Δ_z(0) is not rank − 1");
  WInversePiReport r;
  r.expected = base;
  r.expected.push_back(rs.negate(rs.theta().id));
  std::sort(r.expected.begin(), r.expected.end());

  // w⁻¹(α_i) is the root that w sends to α_i
  std::vector<std::size_t> simple_ids;
  for (std::size_t i = 0; i < rs.rank(); ++i) simple_ids.push_back(rs.simple(i).id);
  for (const Root& a : rs.roots()) {
    const auto img = w.apply(a.coords);
    const auto id = rs.find(img);
    if (id && std::find(simple_ids.begin(), simple_ids.end(), *id) != simple_ids.end()) r.preimage.push_back(a.id);
  }
  std::sort(r.preimage.begin(), r.preimage.end());

  r.base_maps_to_simple = std::all_of(base.begin(), base.end(), [&](std::size_t id) {
    return rs.apply(w, rs.root(id)).height() == 1;
  });
  const Root& wt = rs.apply(w, rs.theta());
  r.theta_to_minus_simple = wt.height() == -1;
  if (r.theta_to_minus_simple) {
    for (std::size_t i = 0; i < rs.rank(); ++i)
      if (wt.coords[i] != 0) r.theta_image_simple = i;
    r.coweight = -w.apply(g.z) == rs.fundamental_coweight(r.theta_image_simple);
  }
  return r;
}

/// For z = x_K: w permutes Π(0) into itself.
inline bool preserves_degree_zero_simples(const RootSystem& rs, const ZGrading& g, const WeylElement& w) {
  for (std::size_t i : g.pi_part(rs, 0)) {
    const Root& img = rs.apply(w, rs.simple(i));
    if (img.height() != 1) return false;
    for (std::size_t k = 0; k < rs.rank(); ++k)
      if (img.coords[k] == 1 && g.degree[rs.simple(k).id] != 0) return false;
  }
  return true;
}

/// w_K together with the images of the simple roots and its order.
struct WkTable {
  WeylElement w;
  std::vector<std::vector<int>> images;  // w(α_i)
  std::size_t order = 0;
  std::vector<std::size_t> word;
};

inline WkTable w_k_table(const RootSystem& rs, const Cascade& c) {
  const WeightVector x = cascade_element(rs, c);
  grade(rs, x);  // throws NotAdmissible for A_{2p}
  const auto walk = anti_dominantize(rs, x);
  WkTable t;
  t.w = walk.w;
  t.word = walk.word;
  for (std::size_t i = 0; i < rs.rank(); ++i) t.images.push_back(walk.w.apply(rs.simple(i).coords));
  t.order = rs.order(walk.w);
  return t;
}

/// Random admissible z in the coweight basis with entries from {−1,0,1}, by rejection.
/// The density of nonzero entries is drawn per sample so that high ranks still get accepted draws.
class AdmissibleSampler {
 public:
  AdmissibleSampler(const RootSystem& rs, std::uint64_t seed) : rs_(&rs), rng_(seed) {}

  ZGrading next() {
    const std::size_t n = rs_->rank();
    for (int attempt = 0; attempt < 1000000; ++attempt) {
      const std::uint64_t density = rng_() % (n + 1);  // expected number of nonzero entries
      std::vector<Rational> marks(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (rng_() % (n == 0 ? 1 : n) >= density) continue;
        marks[i] = (rng_() & 1) ? 1 : -1;
      }
      try {
        return grade(*rs_, rs_->from_marks(marks));
      } catch (const NotAdmissible&) {
      }
    }
    throw std::logic_error("no admissible draw");
  }

 private:
  const RootSystem* rs_;
  std::mt19937_64 rng_;
};

}  // namespace ckit
