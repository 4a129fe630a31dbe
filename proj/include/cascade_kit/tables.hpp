#pragma once

// `cascade-kit table`: orbit tables, simple marks and cascade lists, recomputed per type.
// The fixture variant lays the reference data out in the same shape so the two can be diffed.

#include "cascade_kit/cascade.hpp"
#include "cascade_kit/cascade_element.hpp"
#include "cascade_kit/fixtures.hpp"
#include "cascade_kit/orbit.hpp"
#include "cascade_kit/report.hpp"
#include "cascade_kit/root_system.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckit {

enum class TableKind { OrbitsClassical, OrbitsExceptional, Marks, CascadeLists };

inline std::optional<TableKind> parse_table_kind(const std::string& s) {
  if (s == "orbits-classical") return TableKind::OrbitsClassical;
  if (s == "orbits-exceptional") return TableKind::OrbitsExceptional;
  if (s == "marks") return TableKind::Marks;
  if (s == "cascade-lists") return TableKind::CascadeLists;
  return std::nullopt;
}

inline std::string table_name(TableKind k) {
  switch (k) {
    case TableKind::OrbitsClassical: return "orbits-classical";
    case TableKind::OrbitsExceptional: return "orbits-exceptional";
    case TableKind::Marks: return "marks";
    case TableKind::CascadeLists: return "cascade-lists";
  }
  return "";
}

/// Types a table covers when no single type is requested.
inline std::vector<SimpleType> table_types(TableKind k, int max_rank) {
  std::vector<SimpleType> out;
  for (SimpleType t : desk_types(max_rank)) {
    if (k == TableKind::OrbitsClassical && !is_classical(t)) continue;
    if (k == TableKind::OrbitsExceptional && is_classical(t)) continue;
    out.push_back(t);
  }
  return out;
}

namespace detail {

inline std::string spaced(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

inline std::string partition_text(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

inline std::string list_text(const std::vector<std::vector<int>>& roots) {
  std::string s;
  for (std::size_t i = 0; i < roots.size(); ++i) s += (i ? " " : "") + format_coords(roots[i]);
  return s;
}

inline std::vector<std::string> headers(TableKind k) {
  switch (k) {
    case TableKind::OrbitsClassical: return {"type", "partition", "dim", "g(2)", "g(4)", "wdd"};
    case TableKind::OrbitsExceptional: return {"type", "orbit", "dim", "g(2)", "g(4)", "wdd"};
    case TableKind::Marks: return {"type", "marks"};
    case TableKind::CascadeLists: return {"type", "cascade"};
  }
  return {};
}

}  // namespace detail

inline Table make_table(TableKind k, const std::vector<SimpleType>& types) {
  Table t{table_name(k), detail::headers(k), {}};
  for (SimpleType st : types) {
    if (k == TableKind::OrbitsClassical && !is_classical(st)) throw NotClassical(st.str() + " is not classical");
    if (k == TableKind::OrbitsExceptional && is_classical(st)) throw InvalidType(st.str() + " is not exceptional");
    const RootSystem rs = RootSystem::build(st);
    const Cascade c = compute_cascade(rs);
    switch (k) {
      case TableKind::OrbitsClassical:
      case TableKind::OrbitsExceptional: {
        const OrbitData od = orbit_data(rs, c);
        // orbit names are labels, not computed
        const std::string name = k == TableKind::OrbitsClassical ? detail::partition_text(*od.partition)
                                                                 : fixtures::orbit_row(st).name;
        t.rows.push_back({st.str(), name, std::to_string(od.dim_orbit), std::to_string(od.dim_g2),
                          std::to_string(od.dim_g4), detail::spaced(od.wdd)});
        break;
      }
      case TableKind::Marks: {
        std::string s;
        for (const auto& m : simple_marks(rs, c)) s += (s.empty() ? "" : " ") + to_string(m);
        t.rows.push_back({st.str(), s});
        break;
      }
      case TableKind::CascadeLists: {
        std::vector<std::vector<int>> roots;
        for (const auto& n : c.nodes()) roots.push_back(rs.root(n.beta).coords);
        t.rows.push_back({st.str(), detail::list_text(roots)});
        break;
      }
    }
  }
  return t;
}

/// The same table built from the transcribed reference data.
inline Table fixture_table(TableKind k, const std::vector<SimpleType>& types) {
  Table t{table_name(k), detail::headers(k), {}};
  for (SimpleType st : types) {
    switch (k) {
      case TableKind::OrbitsClassical:
      case TableKind::OrbitsExceptional: {
        const auto row = fixtures::orbit_row(st);
        t.rows.push_back({st.str(), row.name, std::to_string(row.dim), std::to_string(row.g2), std::to_string(row.g4),
                          detail::spaced(row.wdd)});
        break;
      }
      case TableKind::Marks: {
        std::string s;
        for (const auto& m : fixtures::simple_marks(st)) s += (s.empty() ? "" : " ") + to_string(m);
        t.rows.push_back({st.str(), s});
        break;
      }
      case TableKind::CascadeLists:
        t.rows.push_back({st.str(), detail::list_text(fixtures::cascade_list(st))});
        break;
    }
  }
  return t;
}

/// Cell-by-cell differences. Cascade lists are compared as sets since sibling order is a convention.
inline std::vector<std::string> diff_tables(const Table& computed, const Table& reference) {
  std::vector<std::string> out;
  if (computed.rows.size() != reference.rows.size()) {
    out.push_back("row count " + std::to_string(computed.rows.size()) + " vs " + std::to_string(reference.rows.size()));
    return out;
  }
  for (std::size_t r = 0; r < computed.rows.size(); ++r)
    for (std::size_t col = 1; col < computed.columns.size(); ++col) {
      std::string a = computed.rows[r][col], b = reference.rows[r][col];
      if (computed.name == "cascade-lists") {
        auto sorted_words = [](const std::string& s) {
          std::vector<std::string> w;
          std::size_t pos = 0;
          while (pos < s.size()) {
            const std::size_t next = s.find(' ', pos);
            w.push_back(s.substr(pos, next - pos));
            pos = next == std::string::npos ? s.size() : next + 1;
          }
          std::sort(w.begin(), w.end());
          return w;
        };
        if (sorted_words(a) == sorted_words(b)) continue;
      }
      if (a != b)
        out.push_back(computed.rows[r][0] + " " + computed.columns[col] + ": computed " + a + ", reference " + b);
    }
  return out;
}

inline std::string render_table(const Table& t) {
  std::vector<std::size_t> width(t.columns.size(), 0);
  auto cells = [](const std::string& s) {
    // display width: count code points, not bytes
    std::size_t n = 0;
    for (unsigned char ch : s) n += (ch & 0xC0) != 0x80;
    return n;
  };
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = cells(t.columns[i]);
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], cells(row[i]));
  std::string out;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += row[i];
      if (i + 1 < row.size()) out += std::string(width[i] - cells(row[i]) + 2, ' ');
    }
    out += '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
  return out;
}

}  // namespace ckit
