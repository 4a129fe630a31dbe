// cascade-kit: per-type reports, verification harness and regenerated tables.
//
// exit codes: 0 ok, 1 verification failure, 2 usage error, 3 not applicable

#include "cascade_kit.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ckit;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kNotApplicable = 3;

const std::vector<std::string> kTopics = {"roots", "cascade", "xk", "wk", "ideal", "involution", "orbit"};

struct Args {
  std::string command;
  std::string type;  // positional or --type
  std::string topic;
  std::string table;
  bool json = false;
  std::string hasse;
  int max_rank = 12;
  std::uint64_t seed = 1;
  bool diff_fixtures = false;
  bool all = false;
};

std::string rationals(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string simple_list(const std::vector<std::size_t>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? ", " : "") + std::string("α") + std::to_string(ids[i] + 1);
  return s + "}";
}

void show_roots(const RootSystem& rs, std::ostream& out) {
  const auto cx = rs.coxeter_numbers();
  out << rs.type().str() << ": " << rs.num_positive() << " positive roots, θ = " << rs.root_text(rs.theta())
      << ", h = " << cx.h << ", h* = " << cx.h_dual << "\n";
  int height = 0;
  for (const Root& a : rs.positive_roots()) {
    if (a.height() != height) {
      height = a.height();
      out << "\nheight " << height << ":";
    }
    out << " " << rs.root_text(a);
  }
  out << "\n";
}

void show_cascade(const RootSystem& rs, const Cascade& c, const std::string& hasse, std::ostream& out) {
  if (hasse == "dot") {
    out << hasse_diagram(rs, c, HasseFormat::Dot);
    return;
  }
  if (hasse == "text") {
    out << hasse_diagram(rs, c, HasseFormat::Text);
    return;
  }
  out << rs.type().str() << ": #K = " << c.size() << "\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& n = c[i];
    out << "β" << i + 1 << " = " << rs.root_text(rs.root(n.beta)) << "  {" << n.label << "}  Φ = " << simple_list(n.phi);
    if (n.parent) out << "  parent β" << *n.parent + 1;
    out << "\n";
  }
  out << "\n" << hasse_diagram(rs, c, HasseFormat::Text);
}

void show_xk(const RootSystem& rs, const Cascade& c, std::ostream& out) {
  const WeightVector x = cascade_element(rs, c);
  const Spectrum s = spectrum(rs, x);
  out << "x_K = " << rationals(x.coords()) << " over the simple roots\n";
  out << "marks α_i(x_K) = " << rationals(rs.marks(x)) << "\n";
  out << "spectrum on Δ⁺:";
  for (const auto& [v, n] : s.multiplicity) out << "  " << to_string(v) << " ×" << n;
  out << "\n";
  out << "x_K ∈ P∨: " << (rs.lattice_member(x, Lattice::PVee) ? "yes" : "no")
      << ", x_K ∈ Q∨: " << (qvee_classification(rs, c) ? "yes" : "no") << "\n";
  if (auto tap = tap_data(rs, c)) {
    out << "α̃ = α" << tap->tap + 1 << ", J = {";
    for (std::size_t k = 0; k < tap->J.size(); ++k)
      out << (k ? ", " : "") << "β" << tap->J[k] + 1 << (tap->c[k] > 1 ? "^" + std::to_string(tap->c[k]) : "");
    out << "}\n";
  } else {
    out << "θ is not fundamental; x_K is dominant\n";
  }
  const auto f = frobenius_spectrum_check(rs, c);
  out << "trace on b_K = " << to_string(f.trace) << " (symmetric about 1/2: " << (f.symmetric ? "yes" : "no") << ")\n";
}

void show_wk(const RootSystem& rs, const Cascade& c, std::ostream& out) {
  const WkTable wk = w_k_table(rs, c);
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    const Root& img = rs.root_at(wk.images[i]);
    out << "w_K(α" << i + 1 << ") = " << (img.positive() ? "" : "−")
        << rs.root_text(img.positive() ? img : rs.root(rs.negate(img.id))) << "\n";
  }
  const Root& t = rs.apply(wk.w, rs.theta());
  out << "w_K(θ) = −" << rs.root_text(rs.root(rs.negate(t.id))) << "\n";
  if (is_classical(rs.type())) {
    out << "signed permutation:";
    const auto sp = signed_permutation(rs, wk.w);
    for (std::size_t i = 0; i < sp.size(); ++i)
      out << "  ε" << i + 1 << "→" << (sp[i] < 0 ? "−" : "") << "ε" << std::abs(sp[i]);
    out << "\n";
  }
  out << "ord(w_K) = " << wk.order << "\n";
}

void show_ideal(const RootSystem& rs, const Cascade& c, std::ostream& out) {
  const WeightVector x = cascade_element(rs, c);
  const ZGrading g = grade(rs, x);
  const WkTable wk = w_k_table(rs, c);
  AbelianIdeal ideal = abelian_ideal(rs, g, wk.w);
  const auto th = d_threshold(rs, g, ideal);
  const auto mm = min_max_theorems(rs, g, ideal);
  out << "dim a_K = " << ideal.roots.size() << ", d_K = " << th.d_k << "\n";
  for (int d = -1; d <= 2; ++d) out << "Π_K(" << d << ") = " << simple_list(g.pi_part(rs, d)) << "\n";
  out << "minimal roots:";
  for (std::size_t id : mm.boundary.min_ideal) out << " " << rs.root_text(rs.root(id));
  out << "\nroots:";
  for (std::size_t id : ideal.roots) out << " " << rs.root_text(rs.root(id));
  out << "\n";
}

void show_involution(const RootSystem& rs, const Cascade& c, std::ostream& out) {
  const Z2Grading z = z2_grading(rs, c);
  const auto cert = regular_certificate(rs, c);
  out << "dim g0 = " << z.dim_g0 << ", dim g1 = " << z.dim_g1 << "\n";
  out << "#Δ⁺_K(i):";
  for (int d = -1; d <= 2; ++d) out << "  " << d << ": " << z.count(1, d);
  out << "\n";
  out << "regular element Σ M^i β_i with M = " << cert.base << "\n";
  out << "rank of G/G0 = " << c.size() << " (reported, not verified)\n";
  out << kac_diagram_note(rs, w_k_table(rs, c)) << "\n";
}

void show_orbit(const RootSystem& rs, const Cascade& c, std::ostream& out) {
  const OrbitData od = orbit_data(rs, c);
  out << "weighted Dynkin diagram:";
  for (int v : od.wdd) out << " " << v;
  out << "\n";
  out << "dim O_K = " << od.dim_orbit << ", dim g(2) = " << od.dim_g2 << ", dim g(4) = " << od.dim_g4 << "\n";
  out << "height " << od.height << ", " << (od.spherical ? "spherical" : "not spherical") << "\n";
  if (od.partition) {
    out << "partition (";
    for (std::size_t i = 0; i < od.partition->size(); ++i) out << (i ? "," : "") << (*od.partition)[i];
    out << ")\n";
  } else {
    out << "orbit " << fixtures::orbit_row(rs.type()).name << "\n";
  }
  out << "regular subalgebra " << od.regular_subalgebra << ", complexity " << od.complexity << ", rank "
      << od.rank_orbit << "\n";
}

Json topic_json(const TypeReport& r, const std::string& topic) {
  Json full = r;
  if (topic.empty()) return full;
  Json out = {{"type", r.type}, {"rank", r.rank}};
  if (topic == "roots") {
    out["positive_roots"] = full["positive_roots"];
    out["theta"] = full["theta"];
  } else if (topic == "xk") {
    out["x_k"] = full["x_k"];
    out["marks"] = full["marks"];
    out["spectrum"] = full["spectrum"];
  } else if (topic == "wk") {
    out["w_k"] = full["w_k"];
  } else {
    out[topic] = full[topic];
  }
  return out;
}

int cmd_show(const Args& a) {
  const SimpleType t = parse_type(a.type);
  const bool needs_kostant = a.topic == "wk" || a.topic == "ideal" || a.topic == "involution";
  if (needs_kostant && is_a_even(t)) {
    std::cerr << "not applicable: type A_{2p} (" << t.str() << ")\n";
    return kNotApplicable;
  }
  if (a.json) {
    std::cout << topic_json(make_type_report(t), a.topic).dump(2) << "\n";
    return kOk;
  }
  const RootSystem rs = RootSystem::build(t);
  const Cascade c = compute_cascade(rs);
  // --hasse alone means just the diagram, so DOT output can be piped
  std::string topic_arg = a.topic;
  if (topic_arg.empty() && !a.hasse.empty()) topic_arg = "cascade";
  const std::vector<std::string> topics = topic_arg.empty() ? kTopics : std::vector<std::string>{topic_arg};
  bool first = true;
  for (const auto& topic : topics) {
    if (!first) std::cout << "\n";
    first = false;
    if (topics.size() > 1) std::cout << "== " << topic << "\n";
    if (topic == "roots") show_roots(rs, std::cout);
    if (topic == "cascade") show_cascade(rs, c, a.hasse, std::cout);
    if (topic == "xk") show_xk(rs, c, std::cout);
    if (topic == "orbit") show_orbit(rs, c, std::cout);
    if (topic == "wk" || topic == "ideal" || topic == "involution") {
      if (is_a_even(t)) {
        std::cout << "not applicable: type A_{2p}\n";
        continue;
      }
      if (topic == "wk") show_wk(rs, c, std::cout);
      if (topic == "ideal") show_ideal(rs, c, std::cout);
      if (topic == "involution") show_involution(rs, c, std::cout);
    }
  }
  return kOk;
}

int cmd_verify(const Args& a) {
  std::vector<SimpleType> types;
  if (a.all) {
    types = desk_types(a.max_rank);
  } else {
    if (a.type.empty()) throw CLI::ValidationError("verify", "give a type or --all");
    types = {parse_type(a.type)};
  }
  VerifyOptions opt;
  opt.seed = a.seed;
  std::vector<VerifyReport> reports;
  for (SimpleType t : types) reports.push_back(verify_type(t, opt));

  const CheckResult* first_fail = nullptr;
  std::string first_fail_type;
  for (const auto& r : reports)
    if (!first_fail && r.first_failure()) {
      first_fail = r.first_failure();
      first_fail_type = r.type;
    }

  if (a.json) {
    Json j = reports.size() == 1 && !a.all ? Json(reports.front()) : Json(reports);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      if (a.all) {
        std::size_t pass = 0, na = 0;
        for (const auto& ch : r.checks) {
          pass += ch.status == CheckStatus::Pass;
          na += ch.status == CheckStatus::NotApplicable;
        }
        std::cout << r.type << ": " << (r.passed() ? "pass" : "FAIL") << " (" << pass << " pass, " << na << " n/a, "
                  << r.elapsed_ms << " ms)\n";
        for (const auto& ch : r.checks)
          if (ch.status == CheckStatus::Fail) std::cout << "  " << ch.name << ": fail  " << ch.detail << "\n";
        continue;
      }
      std::cout << r.type << "\n";
      for (const auto& ch : r.checks) {
        std::cout << "  " << ch.name << ": " << to_string(ch.status);
        if (!ch.detail.empty()) std::cout << "  " << ch.detail;
        std::cout << "\n";
      }
    }
  }
  if (first_fail) {
    std::cerr << "first failing check: " << first_fail_type << " " << first_fail->name << "\n";
    return kFailed;
  }
  return kOk;
}

int cmd_table(const Args& a) {
  const auto kind = parse_table_kind(a.table);
  if (!kind) throw CLI::ValidationError("table", "unknown table " + a.table);
  std::vector<SimpleType> types;
  if (!a.type.empty()) {
    const SimpleType t = parse_type(a.type);
    if (*kind == TableKind::OrbitsClassical && !is_classical(t)) {
      std::cerr << t.str() << " is not classical\n";
      return kUsage;
    }
    if (*kind == TableKind::OrbitsExceptional && is_classical(t)) {
      std::cerr << t.str() << " is not exceptional\n";
      return kUsage;
    }
    types = {t};
  } else {
    types = table_types(*kind, a.max_rank);
  }
  const Table table = make_table(*kind, types);
  std::vector<std::string> diffs;
  if (a.diff_fixtures) diffs = diff_tables(table, fixture_table(*kind, types));
  if (a.json) {
    Json j = table;
    if (a.diff_fixtures) j["discrepancies"] = diffs;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render_table(table);
    if (a.diff_fixtures) {
      std::cout << "\n" << (diffs.empty() ? "no discrepancies against reference data" : "discrepancies:") << "\n";
      for (const auto& d : diffs) std::cout << "  " << d << "\n";
    }
  }
  return diffs.empty() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kostant cascade toolkit: cascades, cascade elements, w_K, abelian ideals and cascade orbits"};
  app.require_subcommand(1);
  Args a;
  std::string type_flag;
  std::vector<std::string> show_words;

  auto* show = app.add_subcommand("show", "report on one type");
  show->add_option("ARGS", show_words, "type such as E7, then roots | cascade | xk | wk | ideal | involution | orbit")
      ->expected(0, 2)
      ->type_name("TYPE [TOPIC]");
  show->add_option("--type", type_flag, "type, as an alternative to the positional");
  show->add_flag("--json", a.json, "emit JSON");
  show->add_option("--hasse", a.hasse, "cascade diagram format")->check(CLI::IsMember({"dot", "text"}));

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("TYPE", a.type, "type such as E8");
  verify->add_option("--type", type_flag, "type, as an alternative to the positional");
  verify->add_flag("--all", a.all, "every classical type up to --max-rank and every exceptional type");
  verify->add_option("--max-rank", a.max_rank, "largest classical rank for --all")->check(CLI::Range(1, 64));
  verify->add_option("--seed", a.seed, "seed for the random admissible elements");
  verify->add_flag("--json", a.json, "emit JSON");

  auto* table = app.add_subcommand("table", "regenerate a table from computation");
  table->add_option("TABLE", a.table, "orbits-classical | orbits-exceptional | marks | cascade-lists")->required();
  table->add_option("--type", type_flag, "restrict to one type");
  table->add_option("--max-rank", a.max_rank, "largest classical rank")->check(CLI::Range(1, 64));
  table->add_flag("--diff-fixtures", a.diff_fixtures, "compare against the transcribed reference data");
  table->add_flag("--json", a.json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  // show E7 wk, or show --type E7 wk
  if (*show) {
    std::size_t next = 0;
    if (type_flag.empty() && next < show_words.size()) a.type = show_words[next++];
    if (next < show_words.size()) a.topic = show_words[next++];
    if (next < show_words.size()) {
      std::cerr << "unexpected argument " << show_words[next] << "\n";
      return kUsage;
    }
    if (!a.topic.empty() && std::find(kTopics.begin(), kTopics.end(), a.topic) == kTopics.end()) {
      std::cerr << "TOPIC: " << a.topic << " not in {roots,cascade,xk,wk,ideal,involution,orbit}\n";
      return kUsage;
    }
  }

  if (!type_flag.empty()) {
    if (!a.type.empty() && a.type != type_flag) {
      std::cerr << "conflicting types " << a.type << " and " << type_flag << "\n";
      return kUsage;
    }
    a.type = type_flag;
  }

  try {
    if (*show) {
      if (a.type.empty()) {
        std::cerr << "show needs a type\n";
        return kUsage;
      }
      return cmd_show(a);
    }
    if (*verify) return cmd_verify(a);
    if (*table) return cmd_table(a);
  } catch (const InvalidType& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const InvalidRank& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const NotAdmissible& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return kNotApplicable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
