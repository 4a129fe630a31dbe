#pragma once

#include "cascade_kit/errors.hpp"
#include "cascade_kit/root_system.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ckit {

/// Isomorphism type of a connected piece of the Dynkin diagram.
/// For rank one, short_root marks a short simple root (written Ã1).
struct Subtype {
  SimpleType type;
  bool short_root = false;
  friend bool operator==(const Subtype&, const Subtype&) = default;
};

/// Classifies the subdiagram on a connected set of simple roots.
inline Subtype classify_subdiagram(const RootSystem& rs, std::span<const std::size_t> support) {
  const std::size_t n = support.size();
  if (n == 0) throw std::invalid_argument("empty support");
  if (n == 1) return {{Family::A, 1}, !rs.is_long(rs.simple(support[0]))};

  std::vector<std::vector<std::size_t>> nbr(n);
  std::size_t edges = 0;
  int max_bond = 1;
  std::size_t shorts = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (rs.form_scaled(support[a], support[a]) != 2 * RootSystem::kFormScale) ++shorts;
    for (std::size_t b = a + 1; b < n; ++b) {
      const int bond = rs.bond(support[a], support[b]);
      if (bond == 0) continue;
      nbr[a].push_back(b);
      nbr[b].push_back(a);
      ++edges;
      max_bond = std::max(max_bond, bond);
    }
  }
  if (edges + 1 != n) throw std::logic_error("support is not a tree");
  const int r = static_cast<int>(n);
  if (max_bond == 3) return {{Family::G, 2}};
  if (max_bond == 2) {
    if (n == 2) return {{Family::C, 2}};
    // two short and two long nodes only happens for F4
    if (n == 4 && shorts == 2) return {{Family::F, 4}};
    if (shorts == 1) return {{Family::B, r}};
    if (shorts + 1 == n) return {{Family::C, r}};
    throw std::logic_error("unexpected doubly laced subdiagram");
  }
  // simply laced
  std::size_t branch = n;
  for (std::size_t a = 0; a < n; ++a)
    if (nbr[a].size() == 3) branch = a;
  if (branch == n) return {{Family::A, r}};
  std::vector<int> arms;
  for (std::size_t start : nbr[branch]) {
    int len = 1;
    std::size_t prev = branch, cur = start;
    while (nbr[cur].size() == 2) {
      const std::size_t nxt = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {{Family::D, r}};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {{Family::E, r}};
  throw std::logic_error("unexpected simply laced subdiagram");
}

/// Cartan label of a subdiagram written in the convention of the ambient series:
/// rank-one pieces are A1 or Ã1, doubly laced rank two is B2 inside B and C2 elsewhere,
/// and the three-node fork end of a D diagram is D3.
inline std::string cartan_label(const RootSystem& rs, std::span<const std::size_t> support, const Subtype& st) {
  const Family ambient = rs.type().family;
  if (st.type.rank == 1) return st.short_root ? "Ã1" : "A1";
  if (st.type == SimpleType{Family::C, 2}) return ambient == Family::B ? "B2" : "C2";
  if (st.type == SimpleType{Family::A, 3} && ambient == Family::D) {
    const std::size_t n = rs.rank();
    const bool has_fork = std::find(support.begin(), support.end(), n - 1) != support.end() &&
                          std::find(support.begin(), support.end(), n - 2) != support.end();
    if (has_fork) return "D3";
  }
  return st.type.str();
}

/// Splits a set of simple roots into connected components, each sorted; components ordered by
/// their smallest index.
inline std::vector<std::vector<std::size_t>> components(const RootSystem& rs, std::vector<std::size_t> nodes) {
  std::sort(nodes.begin(), nodes.end());
  std::vector<char> seen(nodes.size(), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      comp.push_back(nodes[a]);
      for (std::size_t b = 0; b < nodes.size(); ++b)
        if (!seen[b] && rs.adjacent(nodes[a], nodes[b])) {
          seen[b] = 1;
          stack.push_back(b);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace ckit
