#pragma once

// Per-type invariant suite behind `cascade-kit verify`. Each check is named once; types of the
// form A_{2p} report the Kostant-construction and involution checks as n/a.

#include "cascade_kit/cascade.hpp"
#include "cascade_kit/cascade_element.hpp"
#include "cascade_kit/classical_model.hpp"
#include "cascade_kit/fixtures.hpp"
#include "cascade_kit/involution.hpp"
#include "cascade_kit/kostant_ideal.hpp"
#include "cascade_kit/orbit.hpp"
#include "cascade_kit/root_system.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ckit {

enum class CheckStatus { Pass, Fail, NotApplicable };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "?";
}

inline CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "n/a") return CheckStatus::NotApplicable;
  throw std::invalid_argument("unknown check status: " + s);
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerifyReport {
  std::string type;
  std::vector<CheckResult> checks;
  long elapsed_ms = 0;

  bool passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return &c;
    return nullptr;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t random_z = 100;
};

/// Classical families up to max_rank and every exceptional type.
inline std::vector<SimpleType> desk_types(int max_rank) {
  std::vector<SimpleType> out;
  for (SimpleType t : all_types(max_rank))
    if (is_classical(t)) out.push_back(t);
  for (SimpleType t : all_types(8))
    if (!is_classical(t)) out.push_back(t);
  return out;
}

namespace detail {

struct Outcome {
  bool ok = false;
  std::string detail;
};

inline Outcome outcome(bool ok, std::string detail = {}) { return {ok, std::move(detail)}; }

class Recorder {
 public:
  void run(const std::string& name, const std::function<Outcome()>& f) {
    CheckResult r{name, CheckStatus::Pass, {}};
    try {
      Outcome o = f();
      r.status = o.ok ? CheckStatus::Pass : CheckStatus::Fail;
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.detail = e.what();
    }
    checks.push_back(std::move(r));
  }
  void not_applicable(const std::string& name, std::string why) {
    checks.push_back({name, CheckStatus::NotApplicable, std::move(why)});
  }

  std::vector<CheckResult> checks;
};

inline std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

inline std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s;
}

inline const char* kAEven = "not applicable: type A_{2p}";

}  // namespace detail

inline VerifyReport verify_type(SimpleType t, const VerifyOptions& opt = {}) {
  using detail::outcome;
  using detail::Outcome;
  const auto start = std::chrono::steady_clock::now();
  detail::Recorder rec;
  const RootSystem rs = RootSystem::build(t);
  const Cascade c = compute_cascade(rs);
  const std::size_t np = rs.num_positive();
  const bool a_even = is_a_even(t);
  const WeightVector x = cascade_element(rs, c);
  const Spectrum spec = spectrum(rs, x);
  const auto marks = rs.marks(x);
  std::vector<char> in_k(np, 0);
  for (const auto& n : c.nodes()) in_k[n.beta] = 1;

  // --- roots
  rec.run("positive_root_count", [&] {
    return outcome(np == fixtures::num_positive(t), "#Δ⁺ = " + std::to_string(np));
  });
  rec.run("highest_root", [&] {
    return outcome(rs.theta().coords == fixtures::highest_root(t), "θ = " + rs.root_text(rs.theta()));
  });
  rec.run("simple_reflection_inversions", [&] {
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      const auto inv = rs.inversion_set(rs.simple_reflection(i));
      if (inv != std::vector<std::size_t>{rs.simple(i).id}) return outcome(false, "N(s" + std::to_string(i + 1) + ")");
    }
    return outcome(true);
  });
  rec.run("form_invariance", [&] {
    std::mt19937_64 rng(opt.seed);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::size_t> word(rng() % (2 * rs.rank() + 1));
      for (auto& s : word) s = rng() % rs.rank();
      const WeylElement w = rs.from_word(word);
      const Root& g = rs.root(rng() % rs.roots().size());
      const auto img = w.apply(g.coords);
      if (rs.pairing_scaled(img, img) != rs.pairing_scaled(g.coords, g.coords)) return outcome(false, rs.root_text(g));
    }
    return outcome(true, "100 random pairs");
  });
  rec.run("coroot_duality", [&] {
    for (const Root& g : rs.roots())
      if (rs.pairing(rs.coroot(g), rs.weight(g)) != 2) return outcome(false, rs.root_text(g));
    return outcome(true);
  });
  rec.run("coxeter_numbers", [&] {
    const auto cx = rs.coxeter_numbers();
    const bool ok = cx.h == 1 + rs.theta().height() &&
                    static_cast<std::size_t>(cx.h) * rs.rank() == 2 * np &&
                    rs.pairing(rs.rho(), rs.coroot(rs.theta())) + 1 == cx.h_dual;
    return outcome(ok, "h = " + std::to_string(cx.h) + ", h* = " + std::to_string(cx.h_dual));
  });

  // --- cascade
  rec.run("cascade_list", [&] {
    std::set<std::vector<int>> want, got;
    for (auto& v : fixtures::cascade_list(t)) want.insert(v);
    for (const auto& n : c.nodes()) got.insert(rs.root(n.beta).coords);
    return outcome(want == got && c[0].beta == rs.theta().id);
  });
  rec.run("cascade_size", [&] {
    const bool full = !((t.family == Family::A && t.rank >= 2) || (t.family == Family::D && t.rank % 2 == 1) ||
                        t == SimpleType{Family::E, 6});
    return outcome(c.size() == fixtures::cascade_size(t) && (c.size() == rs.rank()) == full,
                   "#K = " + std::to_string(c.size()));
  });
  rec.run("strong_orthogonality", [&] {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        const Root& a = rs.root(c[i].beta);
        const Root& b = rs.root(c[j].beta);
        if (rs.sum(a, b) || rs.sum(a, rs.root(rs.negate(b.id)))) return outcome(false, rs.root_text(a) + " " + rs.root_text(b));
      }
    return outcome(true);
  });
  rec.run("heisenberg_partition", [&] {
    heisenberg_owner(rs, c);
    std::size_t total = 0;
    for (std::size_t i = 0; i < c.size(); ++i) total += heisenberg_subset(rs, c, i).size();
    return outcome(total == np);
  });
  rec.run("cascade_order_is_root_order", [&] {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j)
        if (RootSystem::root_order_leq(rs.root(c[i].beta), rs.root(c[j].beta)) != c.descends_from(i, j))
          return outcome(false, "β" + std::to_string(i + 1) + " vs β" + std::to_string(j + 1));
    return outcome(true);
  });
  rec.run("unique_parent", [&] {
    std::vector<int> seen(c.size(), 0);
    for (const auto& n : c.nodes())
      for (std::size_t ch : n.children) ++seen[ch];
    if (c[0].parent || seen[0] != 0) return outcome(false, "root node");
    for (std::size_t i = 1; i < c.size(); ++i)
      if (!c[i].parent || seen[i] != 1 || *c[i].parent >= i) return outcome(false, "β" + std::to_string(i + 1));
    return outcome(true);
  });
  rec.run("interval_chain", [&] {
    for (std::size_t j = 0; j < c.size(); ++j) {
      std::vector<std::size_t> above;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (RootSystem::root_order_leq(rs.root(c[j].beta), rs.root(c[k].beta))) above.push_back(k);
      for (std::size_t a : above)
        for (std::size_t b : above)
          if (!RootSystem::root_order_leq(rs.root(c[a].beta), rs.root(c[b].beta)) &&
              !RootSystem::root_order_leq(rs.root(c[b].beta), rs.root(c[a].beta)))
            return outcome(false, "above β" + std::to_string(j + 1));
    }
    return outcome(true);
  });
  rec.run("children_supports", [&] {
    for (const auto& n : c.nodes()) {
      if (rs.subsystem_positive(n.support).back() != n.beta) return outcome(false, "β is not the highest root");
      const bool a_like = n.subtype.type.family == Family::A && n.subtype.type.rank >= 2;
      if (n.phi.size() > 2 || (n.phi.size() == 2) != a_like) return outcome(false, "#Φ = " + std::to_string(n.phi.size()));
      std::set<std::size_t> used;
      for (std::size_t ch : n.children)
        for (std::size_t s : c[ch].support) {
          if (!used.insert(s).second) return outcome(false, "overlapping child supports");
          if (std::find(n.support.begin(), n.support.end(), s) == n.support.end())
            return outcome(false, "child support escapes its parent");
        }
      if (used.size() >= n.support.size() && !n.children.empty()) return outcome(false, "child support not proper");
    }
    return outcome(true);
  });
  rec.run("phi_partition", [&] {
    const auto owner = phi_map(rs, c);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (owner[i] == c.size()) return outcome(false, "α" + std::to_string(i + 1) + " unassigned");
      for (std::size_t j = 0; j < c.size(); ++j) {
        const bool in_phi = std::find(c[j].phi.begin(), c[j].phi.end(), i) != c[j].phi.end();
        const bool positive = rs.pairing_scaled(rs.simple(i).coords, rs.root(c[j].beta).coords) > 0;
        if (in_phi != positive) return outcome(false, "α" + std::to_string(i + 1));
      }
    }
    return outcome(true);
  });
  rec.run("short_cascade_roots", [&] {
    std::vector<std::size_t> shorts;
    for (const auto& n : c.nodes())
      if (!rs.is_long(rs.root(n.beta))) shorts.push_back(n.beta);
    const bool expect = (t.family == Family::B && t.rank % 2 == 1) || t.family == Family::G;
    if (!expect) return outcome(shorts.empty(), std::to_string(shorts.size()) + " short");
    return outcome(shorts.size() == 1 && rs.root(shorts[0]).height() == 1, rs.root_text(rs.root(shorts[0])));
  });
  rec.run("longest_element", [&] {
    const auto w0 = longest_element_checked(rs, c, opt.seed, 3);
    if (!w0) return outcome(false, "order dependence or w0(Δ⁺) ⊄ Δ⁻");
    for (const auto& n : c.nodes())
      if (rs.apply(*w0, rs.root(n.beta)).id != rs.negate(n.beta)) return outcome(false, "w0(β) ≠ −β");
    return outcome(w0->is_minus_identity() == (c.size() == rs.rank()), "3 random factor orders");
  });
  if (auto h = fixtures::hasse_fixture(t)) {
    rec.run("hasse_diagram", [&] {
      std::vector<std::string> labels;
      for (const auto& l : h->labels) labels.push_back(fixtures::normalize_label(l));
      const std::string want = canonical_tree(labels, h->parents);
      const std::string got = canonical_tree(c);
      return outcome(want == got, got);
    });
  }

  // --- cascade element
  rec.run("cascade_roots_take_one", [&] {
    for (const auto& n : c.nodes())
      if (RootSystem::evaluate(rs.root(n.beta), marks) != 1) return outcome(false, rs.root_text(rs.root(n.beta)));
    return outcome(true);
  });
  rec.run("spectrum_integrality", [&] {
    bool half = true, integral = true;
    for (const auto& v : spec.values) {
      half = half && is_integer(2 * v);
      integral = integral && is_integer(v);
    }
    return outcome(half && integral == !a_even);
  });
  rec.run("spectrum_bounds", [&] {
    const bool ok = spec.min() >= -1 && spec.max() <= 2 && (spec.max() == 2) == theta_fundamental(rs);
    return outcome(ok, "[" + to_string(spec.min()) + ", " + to_string(spec.max()) + "]");
  });
  rec.run("spectrum_value_set", [&] {
    std::set<Rational> got;
    for (const auto& [v, n] : spec.multiplicity) got.insert(v);
    std::set<Rational> allowed;
    if (theta_fundamental(rs))
      allowed = {-1, 0, 1, 2};
    else if (a_even)
      allowed = {0, Rational(1, 2), 1};
    else
      allowed = {0, 1};
    const bool ok = std::includes(allowed.begin(), allowed.end(), got.begin(), got.end()) &&
                    (!theta_fundamental(rs) || got == allowed);
    std::string d;
    for (const auto& v : got) d += (d.empty() ? "" : " ") + to_string(v);
    return outcome(ok, "{" + d + "}");
  });
  rec.run("extreme_values_long", [&] {
    for (const Root& g : rs.positive_roots()) {
      const Rational v = spec.values[g.id];
      if ((v == -1 || v == 2) && !rs.is_long(g)) return outcome(false, rs.root_text(g));
    }
    return outcome(true);
  });
  rec.run("simple_marks", [&] {
    return outcome(marks == fixtures::simple_marks(t), detail::join(marks));
  });
  rec.run("marks_adjacency", [&] {
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      const auto& m = marks[i];
      if (!(m == -1 || m == 0 || m == Rational(1, 2) || m == 1)) return outcome(false, "mark " + to_string(m));
      if (m != -1) continue;
      for (std::size_t j = 0; j < rs.rank(); ++j)
        if (rs.adjacent(i, j) && (marks[j] != 1 || !in_k[rs.simple(j).id]))
          return outcome(false, "α" + std::to_string(j + 1));
    }
    return outcome(true);
  });
  rec.run("multiset_symmetry", [&] {
    const auto r = symmetry_check(rs, c, x);
    return outcome(r.values_sum_to_one && r.multiplicities_symmetric && r.pairs.size() == np - c.size(),
                   std::to_string(r.pairs.size()) + " pairs");
  });
  rec.run("tap_root", [&] {
    const auto tap = tap_data(rs, c);
    if (!theta_fundamental(rs)) {
      const bool dominant = std::all_of(marks.begin(), marks.end(), [](const Rational& m) { return m >= 0; });
      return outcome(!tap && dominant, "x_K dominant");
    }
    if (!tap) return outcome(false, "missing");
    const Root& a = rs.simple(tap->tap);
    std::vector<int> rest(rs.rank());
    for (std::size_t i = 0; i < rs.rank(); ++i) rest[i] = rs.theta().coords[i] - a.coords[i];
    const bool ok = std::find(tap->J.begin(), tap->J.end(), 0) == tap->J.end() && tap->J.size() <= 3 && rs.is_long(a) &&
                    rs.theta().coords[tap->tap] == 2 && spec.values[a.id] == -1 &&
                    spec.values[rs.root_at(rest).id] == 2;
    return outcome(ok, "α" + std::to_string(tap->tap + 1) + ", #J = " + std::to_string(tap->J.size()));
  });
  rec.run("symmetric_part_expansion", [&] {
    const WeylElement w0 = longest_element(rs, c);
    const bool all_long = std::all_of(c.nodes().begin(), c.nodes().end(),
                                      [&](const CascadeNode& n) { return rs.is_long(rs.root(n.beta)); });
    const bool exact_four = c.size() == rs.rank() && all_long;
    std::size_t widest = 0;
    for (const Root& g : rs.positive_roots()) {
      const auto e = symmetric_part_over_cascade(rs, c, w0, g);
      widest = std::max(widest, e.size());
      if (e.size() > 4) return outcome(false, rs.root_text(g));
      if (exact_four && !in_k[g.id] && rs.is_long(g) && e.size() != 4)
        return outcome(false, rs.root_text(g) + " has " + std::to_string(e.size()) + " terms");
    }
    return outcome(true, "at most " + std::to_string(widest) + " terms");
  });
  rec.run("coweight_lattice", [&] {
    return outcome(rs.lattice_member(x, Lattice::PVee) == !a_even);
  });
  rec.run("coroot_lattice", [&] {
    const bool in = qvee_classification(rs, c);
    bool parity = true;
    if (!a_even) parity = rs.lattice_member(rs.rho_vee() - x, Lattice::QVee);
    return outcome(in == fixtures::x_k_in_coroot_lattice(t) && parity, in ? "x_K ∈ Q∨" : "x_K ∉ Q∨");
  });
  rec.run("rho_decompositions", [&] {
    const auto d = rho_decompositions(rs, c);
    std::vector<int> h(d.rho_coeffs.begin(), d.rho_coeffs.end());
    return outcome(true, "2ρ coefficients " + detail::join(h));
  });
  rec.run("frobenius_trace", [&] {
    const auto f = frobenius_spectrum_check(rs, c);
    return outcome(f.consistent(), "trace " + to_string(f.trace));
  });

  // --- Kostant construction at x_K
  static const char* kostant_checks[] = {"inversion_set", "grading_closure", "abelian_ideal", "ideal_minimal_roots",
                                         "complement_maximal_roots", "height_threshold", "w_inverse_of_pi",
                                         "degree_zero_simples_preserved", "ord_wK", "w_k_golden", "w_k_theta_image"};
  if (a_even) {
    for (const char* name : kostant_checks) rec.not_applicable(name, detail::kAEven);
  } else {
    const ZGrading g = grade(rs, x);
    const WkTable wk = w_k_table(rs, c);
    rec.run("inversion_set", [&] { return outcome(inversion_set_matches(rs, g, wk.w)); });
    rec.run("grading_closure", [&] { return outcome(grading_closed(rs, g)); });
    AbelianIdeal ideal;
    rec.run("abelian_ideal", [&] {
      ideal = abelian_ideal(rs, g, wk.w);
      return outcome(ideal.roots.size() == g.part(-1).size() + g.part(2).size(),
                     "dim a_K = " + std::to_string(ideal.roots.size()));
    });
    const MinMaxReport mm = min_max_theorems(rs, g, ideal);
    rec.run("ideal_minimal_roots", [&] { return outcome(mm.min_ok, std::to_string(mm.boundary.min_ideal.size()) + " minimal"); });
    rec.run("complement_maximal_roots", [&] {
      return outcome(mm.max_ok, std::to_string(mm.boundary.max_complement.size()) + " maximal");
    });
    rec.run("height_threshold", [&] {
      const auto th = d_threshold(rs, g, ideal);
      return outcome(th.height_filter && th.boundary_heights && th.coxeter_relation, "d_K = " + std::to_string(th.d_k));
    });
    rec.run("w_inverse_of_pi", [&] {
      const auto r = w_inverse_of_pi(rs, g, wk.w);
      return outcome(r.ok(), "w_K(θ) = −α" + std::to_string(r.theta_image_simple + 1));
    });
    rec.run("degree_zero_simples_preserved", [&] { return outcome(preserves_degree_zero_simples(rs, g, wk.w)); });

    std::optional<std::size_t> expected_order = fixtures::w_k_order(t);
    const auto sp = fixtures::w_k_signed_permutation(t);
    if (!expected_order && sp) expected_order = signed_permutation_order(*sp);
    rec.run("ord_wK == " + (expected_order ? std::to_string(*expected_order) : std::string("?")), [&] {
      return outcome(expected_order && wk.order == *expected_order, "ord(w_K) = " + std::to_string(wk.order));
    });
    rec.run("w_k_golden", [&] {
      if (sp) {
        const auto got = signed_permutation(rs, wk.w);
        return outcome(got == *sp, "signed permutation " + detail::join(got));
      }
      if (auto im = fixtures::w_k_images(t)) return outcome(*im == wk.images, "images of simple roots");
      if (t.family == Family::G) return outcome(rs.from_word(fixtures::g2_w_k_word()) == wk.w, "(r2 r1)^2");
      return outcome(false, "no reference data");
    });
    rec.run("w_k_theta_image", [&] {
      const auto j = fixtures::w_k_theta_image(t);
      const Root& img = rs.apply(wk.w, rs.theta());
      return outcome(j && img.id == rs.negate(rs.simple(*j - 1).id), "−" + rs.root_text(rs.root(rs.negate(img.id))));
    });
  }

  rec.run("random_admissible_z", [&] {
    AdmissibleSampler sampler(rs, opt.seed);
    for (std::size_t k = 0; k < opt.random_z; ++k) {
      const ZGrading g = sampler.next();
      const auto walk = anti_dominantize(rs, g.z);
      if (!inversion_set_matches(rs, g, walk.w)) return outcome(false, "N(w_z), draw " + std::to_string(k));
      if (!grading_closed(rs, g)) return outcome(false, "closure, draw " + std::to_string(k));
      abelian_ideal(rs, g, walk.w);
      for (std::size_t id : degree_zero_base(rs, g))
        if (rs.apply(walk.w, rs.root(id)).height() != 1) return outcome(false, "base image, draw " + std::to_string(k));
    }
    return outcome(true, std::to_string(opt.random_z) + " draws");
  });

  // --- involution
  if (a_even) {
    rec.not_applicable("z2_dimensions", detail::kAEven);
    rec.not_applicable("z2_count_table", detail::kAEven);
  } else {
    const Z2Grading z = z2_grading(rs, c);
    rec.run("z2_dimensions", [&] {
      const long k = static_cast<long>(c.size());
      const long n = static_cast<long>(np), r = static_cast<long>(rs.rank());
      return outcome(z.dim_g0 == n + r - k && z.dim_g1 == n + k,
                     "dim g0 = " + std::to_string(z.dim_g0) + ", dim g1 = " + std::to_string(z.dim_g1));
    });
    rec.run("z2_count_table", [&] {
      return outcome(z2_identities_hold(rs, c, z), "a = " + std::to_string(z.a) + ", b = " + std::to_string(z.b));
    });
  }
  rec.run("regular_certificate", [&] {
    const auto cert = regular_certificate(rs, c);
    return outcome(true, "M = " + std::to_string(cert.base));
  });
  rec.run("cascade_roots_orthogonal", [&] {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (rs.pairing_scaled(rs.root(c[i].beta).coords, rs.root(c[j].beta).coords) != 0) return outcome(false);
    return outcome(true);
  });

  // --- orbit
  const OrbitData od = orbit_data(rs, c);
  const fixtures::OrbitRow row = fixtures::orbit_row(t);
  rec.run("weighted_dynkin_diagram", [&] {
    const auto w = characteristic_and_wdd(rs, c);
    bool ok = w.in_orbit && w.labels == row.wdd;
    if (!a_even) {
      const Root& img = rs.apply(w_k_table(rs, c).w, rs.theta());
      std::size_t j = 0;
      for (std::size_t i = 0; i < rs.rank(); ++i)
        if (img.coords[i] != 0) j = i;
      for (std::size_t i = 0; i < rs.rank(); ++i) ok = ok && w.labels[i] == (i == j ? 2 : 0);
    }
    return outcome(ok, detail::join(w.labels));
  });
  rec.run("orbit_dimensions", [&] {
    const bool ok = od.dim_orbit == row.dim && od.dim_g2 == row.g2 && od.dim_g4 == row.g4 &&
                    od.complexity == 2 * od.dim_g4 && od.rank_orbit == c.size();
    return outcome(ok, "dim " + std::to_string(od.dim_orbit) + ", g(2) " + std::to_string(od.dim_g2) + ", g(4) " +
                           std::to_string(od.dim_g4));
  });
  if (a_even) {
    rec.not_applicable("ideal_twice_g4", detail::kAEven);
  } else {
    rec.run("ideal_twice_g4", [&] {
      const WkTable wk = w_k_table(rs, c);
      const auto ideal = abelian_ideal(rs, grade(rs, x), wk.w);
      return outcome(static_cast<long>(ideal.roots.size()) == 2 * od.dim_g4);
    });
  }
  rec.run("orbit_height", [&] {
    if (!theta_fundamental(rs)) return outcome(od.height == 2, "height 2");
    const auto tap = tap_data(rs, c);
    const auto witness = height_witness(rs, c, *tap);
    return outcome(od.height == 4 && witness.fifth_power_vanishes, "height 4, chain of " + std::to_string(witness.order.size()));
  });
  rec.run("sphericity", [&] {
    // B2 is C2
    const bool ac = t.family == Family::A || t.family == Family::C || t == SimpleType{Family::B, 2};
    return outcome(od.spherical == ac && od.spherical == (od.height <= 3), od.spherical ? "spherical" : "not spherical");
  });
  rec.run("regular_subalgebra", [&] {
    const std::size_t m = c.size();
    const bool one_short = (t.family == Family::B && t.rank % 2 == 1) || t.family == Family::G;
    std::string want = one_short ? (m > 2 ? std::to_string(m - 1) : std::string()) + "A1+Ã1"
                                 : (m > 1 ? std::to_string(m) : std::string()) + "A1";
    return outcome(od.regular_subalgebra == want, od.regular_subalgebra);
  });
  if (is_classical(t)) {
    rec.run("partition", [&] {
      return outcome(od.partition && od.partition == row.partition, row.name);
    });
    rec.run("partition_oracle", [&] {
      const auto po = partition_oracle(rs, c);
      return outcome(po.members_in_algebra && po.partition == classical_partition(t), detail::join(po.partition));
    });
    rec.run("dimension_from_partition", [&] {
      const long d = orbit_dimension_from_partition(t, classical_partition(t));
      return outcome(d == od.dim_orbit, std::to_string(d));
    });
  }

  VerifyReport report;
  report.type = t.str();
  report.checks = std::move(rec.checks);
  report.elapsed_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return report;
}

}  // namespace ckit
