#pragma once

// Plain-data reports and their JSON form. Rationals travel as "p/q" strings.

#include "cascade_kit/cascade.hpp"
#include "cascade_kit/cascade_element.hpp"
#include "cascade_kit/involution.hpp"
#include "cascade_kit/kostant_ideal.hpp"
#include "cascade_kit/orbit.hpp"
#include "cascade_kit/root_system.hpp"
#include "cascade_kit/verify.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ckit {

using Json = nlohmann::ordered_json;

struct CascadeEntry {
  int index = 0;  // 1-based
  std::vector<int> root;
  std::optional<int> parent;  // 1-based
  std::string subtype;
  std::vector<int> phi;  // 1-based simple indices
  int level = 1;
  friend bool operator==(const CascadeEntry&, const CascadeEntry&) = default;
};

struct SpectrumEntry {
  std::map<std::string, long> multiplicity;  // value -> count
  std::string min;
  std::string max;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct WkEntry {
  std::vector<std::vector<long>> matrix;
  std::size_t order = 0;
  std::map<std::string, std::vector<int>> images;  // "α1" -> w_K(α1)
  std::vector<int> word;                           // 1-based simple reflections, applied left to right
  std::optional<std::vector<int>> signed_permutation;
  friend bool operator==(const WkEntry&, const WkEntry&) = default;
};

struct IdealEntry {
  std::vector<std::vector<int>> roots;
  int d_k = 0;
  friend bool operator==(const IdealEntry&, const IdealEntry&) = default;
};

struct InvolutionEntry {
  long dim_g0 = 0;
  long dim_g1 = 0;
  long a = 0;
  long b = 0;
  long certificate_base = 0;
  std::string kac_note;
  friend bool operator==(const InvolutionEntry&, const InvolutionEntry&) = default;
};

struct OrbitEntry {
  std::vector<int> wdd;
  long dim = 0;
  long g2 = 0;
  long g4 = 0;
  std::optional<std::vector<int>> partition;
  int height = 0;
  bool spherical = false;
  std::string regular_subalgebra;
  long complexity = 0;
  std::size_t rank = 0;
  friend bool operator==(const OrbitEntry&, const OrbitEntry&) = default;
};

struct TypeReport {
  std::string type;
  int rank = 0;
  std::vector<std::vector<int>> positive_roots;
  std::vector<int> theta;
  std::vector<CascadeEntry> cascade;
  std::vector<std::string> x_k;    // simple-root coordinates
  std::vector<std::string> marks;  // α_i(x_K)
  SpectrumEntry spectrum;
  std::optional<WkEntry> w_k;
  std::optional<IdealEntry> ideal;
  std::optional<InvolutionEntry> involution;
  OrbitEntry orbit;
  friend bool operator==(const TypeReport&, const TypeReport&) = default;
};

inline TypeReport make_type_report(SimpleType t) {
  const RootSystem rs = RootSystem::build(t);
  const Cascade c = compute_cascade(rs);
  const WeightVector x = cascade_element(rs, c);
  TypeReport r;
  r.type = t.str();
  r.rank = t.rank;
  for (const Root& a : rs.positive_roots()) r.positive_roots.push_back(a.coords);
  r.theta = rs.theta().coords;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& n = c[i];
    CascadeEntry e;
    e.index = static_cast<int>(i + 1);
    e.root = rs.root(n.beta).coords;
    if (n.parent) e.parent = static_cast<int>(*n.parent + 1);
    e.subtype = n.label;
    for (std::size_t p : n.phi) e.phi.push_back(static_cast<int>(p + 1));
    e.level = static_cast<int>(n.level);
    r.cascade.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < x.rank(); ++i) r.x_k.push_back(to_string(x[i]));
  for (const auto& m : rs.marks(x)) r.marks.push_back(to_string(m));
  const Spectrum s = spectrum(rs, x);
  for (const auto& [v, n] : s.multiplicity) r.spectrum.multiplicity[to_string(v)] = static_cast<long>(n);
  r.spectrum.min = to_string(s.min());
  r.spectrum.max = to_string(s.max());

  if (!is_a_even(t)) {
    const WkTable wk = w_k_table(rs, c);
    WkEntry w;
    for (const auto& row : wk.w.rows()) w.matrix.emplace_back(row.begin(), row.end());
    w.order = wk.order;
    for (std::size_t i = 0; i < rs.rank(); ++i) w.images["α" + std::to_string(i + 1)] = wk.images[i];
    for (std::size_t k : wk.word) w.word.push_back(static_cast<int>(k + 1));
    if (is_classical(t)) w.signed_permutation = signed_permutation(rs, wk.w);
    r.w_k = std::move(w);

    const ZGrading g = grade(rs, x);
    AbelianIdeal ideal = abelian_ideal(rs, g, wk.w);
    IdealEntry ie;
    ie.d_k = d_threshold(rs, g, ideal).d_k;
    for (std::size_t id : ideal.roots) ie.roots.push_back(rs.root(id).coords);
    r.ideal = std::move(ie);

    const Z2Grading z = z2_grading(rs, c);
    r.involution = InvolutionEntry{z.dim_g0, z.dim_g1, z.a, z.b, regular_certificate(rs, c).base, kac_diagram_note(rs, wk)};
  }

  const OrbitData od = orbit_data(rs, c);
  r.orbit = OrbitEntry{od.wdd,    od.dim_orbit, od.dim_g2, od.dim_g4,   od.partition, od.height,
                       od.spherical, od.regular_subalgebra, od.complexity, od.rank_orbit};
  return r;
}

namespace detail {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace detail

inline void to_json(Json& j, const CascadeEntry& e) {
  j = Json{{"index", e.index},     {"root", e.root}, {"parent", detail::optional_json(e.parent)},
           {"subtype", e.subtype}, {"phi", e.phi},   {"level", e.level}};
}
inline void from_json(const Json& j, CascadeEntry& e) {
  e.index = j.at("index").get<int>();
  e.root = j.at("root").get<std::vector<int>>();
  e.parent = detail::optional_from<int>(j.at("parent"));
  e.subtype = j.at("subtype").get<std::string>();
  e.phi = j.at("phi").get<std::vector<int>>();
  e.level = j.at("level").get<int>();
}

inline void to_json(Json& j, const SpectrumEntry& s) {
  j = Json{{"multiplicity", s.multiplicity}, {"min", s.min}, {"max", s.max}};
}
inline void from_json(const Json& j, SpectrumEntry& s) {
  s.multiplicity = j.at("multiplicity").get<std::map<std::string, long>>();
  s.min = j.at("min").get<std::string>();
  s.max = j.at("max").get<std::string>();
}

inline void to_json(Json& j, const WkEntry& w) {
  j = Json{{"matrix", w.matrix},
           {"order", w.order},
           {"images", w.images},
           {"word", w.word},
           {"signed_permutation", detail::optional_json(w.signed_permutation)}};
}
inline void from_json(const Json& j, WkEntry& w) {
  w.matrix = j.at("matrix").get<std::vector<std::vector<long>>>();
  w.order = j.at("order").get<std::size_t>();
  w.images = j.at("images").get<std::map<std::string, std::vector<int>>>();
  w.word = j.at("word").get<std::vector<int>>();
  w.signed_permutation = detail::optional_from<std::vector<int>>(j.at("signed_permutation"));
}

inline void to_json(Json& j, const IdealEntry& i) { j = Json{{"roots", i.roots}, {"d_k", i.d_k}}; }
inline void from_json(const Json& j, IdealEntry& i) {
  i.roots = j.at("roots").get<std::vector<std::vector<int>>>();
  i.d_k = j.at("d_k").get<int>();
}

inline void to_json(Json& j, const InvolutionEntry& v) {
  j = Json{{"dim_g0", v.dim_g0}, {"dim_g1", v.dim_g1}, {"a", v.a}, {"b", v.b},
           {"certificate_base", v.certificate_base}, {"kac_note", v.kac_note}};
}
inline void from_json(const Json& j, InvolutionEntry& v) {
  v.dim_g0 = j.at("dim_g0").get<long>();
  v.dim_g1 = j.at("dim_g1").get<long>();
  v.a = j.at("a").get<long>();
  v.b = j.at("b").get<long>();
  v.certificate_base = j.at("certificate_base").get<long>();
  v.kac_note = j.at("kac_note").get<std::string>();
}

inline void to_json(Json& j, const OrbitEntry& o) {
  j = Json{{"wdd", o.wdd},
           {"dim", o.dim},
           {"g2", o.g2},
           {"g4", o.g4},
           {"partition", detail::optional_json(o.partition)},
           {"height", o.height},
           {"spherical", o.spherical},
           {"regular_subalgebra", o.regular_subalgebra},
           {"complexity", o.complexity},
           {"rank", o.rank}};
}
inline void from_json(const Json& j, OrbitEntry& o) {
  o.wdd = j.at("wdd").get<std::vector<int>>();
  o.dim = j.at("dim").get<long>();
  o.g2 = j.at("g2").get<long>();
  o.g4 = j.at("g4").get<long>();
  o.partition = detail::optional_from<std::vector<int>>(j.at("partition"));
  o.height = j.at("height").get<int>();
  o.spherical = j.at("spherical").get<bool>();
  o.regular_subalgebra = j.at("regular_subalgebra").get<std::string>();
  o.complexity = j.at("complexity").get<long>();
  o.rank = j.at("rank").get<std::size_t>();
}

inline void to_json(Json& j, const TypeReport& r) {
  j = Json{{"type", r.type},
           {"rank", r.rank},
           {"positive_roots", r.positive_roots},
           {"theta", r.theta},
           {"cascade", r.cascade},
           {"x_k", r.x_k},
           {"marks", r.marks},
           {"spectrum", r.spectrum},
           {"w_k", detail::optional_json(r.w_k)},
           {"ideal", detail::optional_json(r.ideal)},
           {"involution", detail::optional_json(r.involution)},
           {"orbit", r.orbit}};
}
inline void from_json(const Json& j, TypeReport& r) {
  r.type = j.at("type").get<std::string>();
  r.rank = j.at("rank").get<int>();
  r.positive_roots = j.at("positive_roots").get<std::vector<std::vector<int>>>();
  r.theta = j.at("theta").get<std::vector<int>>();
  r.cascade = j.at("cascade").get<std::vector<CascadeEntry>>();
  r.x_k = j.at("x_k").get<std::vector<std::string>>();
  r.marks = j.at("marks").get<std::vector<std::string>>();
  r.spectrum = j.at("spectrum").get<SpectrumEntry>();
  r.w_k = detail::optional_from<WkEntry>(j.at("w_k"));
  r.ideal = detail::optional_from<IdealEntry>(j.at("ideal"));
  r.involution = detail::optional_from<InvolutionEntry>(j.at("involution"));
  r.orbit = j.at("orbit").get<OrbitEntry>();
}

inline void to_json(Json& j, const CheckResult& c) {
  j = Json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}};
}
inline void from_json(const Json& j, CheckResult& c) {
  c.name = j.at("name").get<std::string>();
  c.status = parse_status(j.at("status").get<std::string>());
  c.detail = j.at("detail").get<std::string>();
}

inline void to_json(Json& j, const VerifyReport& r) {
  j = Json{{"type", r.type}, {"checks", r.checks}, {"elapsed_ms", r.elapsed_ms}};
}
inline void from_json(const Json& j, VerifyReport& r) {
  r.type = j.at("type").get<std::string>();
  r.checks = j.at("checks").get<std::vector<CheckResult>>();
  r.elapsed_ms = j.at("elapsed_ms").get<long>();
}

/// A regenerated table: column names and string cells, one row per type.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  friend bool operator==(const Table&, const Table&) = default;
};

inline void to_json(Json& j, const Table& t) { j = Json{{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}}; }
inline void from_json(const Json& j, Table& t) {
  t.name = j.at("name").get<std::string>();
  t.columns = j.at("columns").get<std::vector<std::string>>();
  t.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
}

}  // namespace ckit
