#pragma once

#include "cascade_kit/dynkin.hpp"
#include "cascade_kit/root_system.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace ckit {

struct CascadeNode {
  std::size_t beta = 0;  // root id
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  std::vector<std::size_t> support;  // simple roots of the component this node is the highest root of
  Subtype subtype;
  std::string label;
  std::vector<std::size_t> phi;  // simple roots in the Heisenberg subset of this node
  std::size_t level = 1;
};

/// The cascade as a rooted tree. Node 0 is θ; numbering is breadth first with siblings
/// ordered by the smallest simple root of their support, so parents precede children.
class Cascade {
 public:
  Cascade() = default;
  explicit Cascade(std::vector<CascadeNode> nodes) : nodes_(std::move(nodes)) {}

  std::size_t size() const { return nodes_.size(); }
  const CascadeNode& operator[](std::size_t i) const { return nodes_.at(i); }
  std::span<const CascadeNode> nodes() const { return nodes_; }

  std::vector<std::size_t> beta_ids() const {
    std::vector<std::size_t> out;
    for (const auto& n : nodes_) out.push_back(n.beta);
    return out;
  }

  /// Is a in the subtree rooted at b (a == b allowed)?
  bool descends_from(std::size_t a, std::size_t b) const {
    for (std::optional<std::size_t> cur = a; cur; cur = nodes_[*cur].parent)
      if (*cur == b) return true;
    return false;
  }

 private:
  std::vector<CascadeNode> nodes_;
};

inline Cascade compute_cascade(const RootSystem& rs) {
  std::vector<CascadeNode> nodes;
  std::vector<std::size_t> all(rs.rank());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  struct Pending {
    std::vector<std::size_t> support;
    std::optional<std::size_t> parent;
    std::size_t level;
  };
  std::deque<Pending> queue{{all, std::nullopt, 1}};
  while (!queue.empty()) {
    Pending p = std::move(queue.front());
    queue.pop_front();
    CascadeNode node;
    node.beta = rs.subsystem_positive(p.support).back();
    node.parent = p.parent;
    node.level = p.level;
    node.support = p.support;
    node.subtype = classify_subdiagram(rs, p.support);
    node.label = cartan_label(rs, p.support, node.subtype);
    const Root& beta = rs.root(node.beta);
    std::vector<std::size_t> orth;
    for (std::size_t i : p.support) {
      const auto v = rs.pairing_scaled(rs.simple(i).coords, beta.coords);
      if (v == 0)
        orth.push_back(i);
      else if (v > 0)
        node.phi.push_back(i);
    }
    const std::size_t index = nodes.size();
    if (p.parent) nodes[*p.parent].children.push_back(index);
    nodes.push_back(std::move(node));
    for (auto& comp : components(rs, orth)) queue.push_back({std::move(comp), index, p.level + 1});
  }
  return Cascade(std::move(nodes));
}

/// H_β for node i: positive roots γ of the component of node i with (γ, β_i) > 0.
inline std::vector<std::size_t> heisenberg_subset(const RootSystem& rs, const Cascade& c, std::size_t i) {
  const auto& node = c[i];
  const Root& beta = rs.root(node.beta);
  std::vector<std::size_t> out;
  for (std::size_t id : rs.subsystem_positive(node.support))
    if (rs.pairing_scaled(rs.root(id).coords, beta.coords) > 0) out.push_back(id);
  return out;
}

/// For each positive root, the cascade node whose Heisenberg subset contains it.
inline std::vector<std::size_t> heisenberg_owner(const RootSystem& rs, const Cascade& c) {
  std::vector<std::size_t> owner(rs.num_positive(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t id : heisenberg_subset(rs, c, i)) {
      if (owner[id] != c.size()) throw std::logic_error("Heisenberg subsets overlap");
      owner[id] = i;
    }
  for (std::size_t o : owner)
    if (o == c.size()) throw std::logic_error("Heisenberg subsets do not cover the positive roots");
  return owner;
}

/// Simple root i -> the cascade node whose Φ contains it.
inline std::vector<std::size_t> phi_map(const RootSystem& rs, const Cascade& c) {
  std::vector<std::size_t> out(rs.rank(), c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t i : c[j].phi) out[i] = j;
  return out;
}

/// Product of the reflections in the cascade roots, taken in the given order
/// (cascade order when empty).
inline WeylElement longest_element(const RootSystem& rs, const Cascade& c, std::span<const std::size_t> order = {}) {
  std::vector<std::size_t> seq(order.begin(), order.end());
  if (seq.empty())
    for (std::size_t i = 0; i < c.size(); ++i) seq.push_back(i);
  WeylElement w = WeylElement::identity(rs.rank());
  for (std::size_t i : seq) w = w.compose(rs.reflection(rs.root(c[i].beta)));
  return w;
}

/// Checks the longest element under several random factor orders; returns the common product.
inline std::optional<WeylElement> longest_element_checked(const RootSystem& rs, const Cascade& c, std::uint64_t seed,
                                                          int trials = 3) {
  const WeylElement w0 = longest_element(rs, c);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(c.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (int t = 0; t < trials; ++t) {
    std::shuffle(order.begin(), order.end(), rng);
    if (!(longest_element(rs, c, order) == w0)) return std::nullopt;
  }
  for (const Root& a : rs.positive_roots()) {
    const auto img = w0.apply(a.coords);
    if (rs.root_at(img).positive()) return std::nullopt;
  }
  return w0;
}

enum class HasseFormat { Text, Dot };

inline std::string hasse_diagram(const RootSystem& rs, const Cascade& c, HasseFormat fmt) {
  std::ostringstream out;
  if (fmt == HasseFormat::Dot) {
    out << "digraph cascade {\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < c.size(); ++i)
      out << "  b" << i + 1 << " [label=\"β" << i + 1 << " {" << c[i].label << "}\"];\n";
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t ch : c[i].children) out << "  b" << i + 1 << " -> b" << ch + 1 << ";\n";
    out << "}\n";
    return out.str();
  }
  auto walk = [&](auto&& self, std::size_t i, int depth) -> void {
    out << std::string(2 * depth, ' ') << "β" << i + 1 << " {" << c[i].label << "} "
        << rs.root_text(rs.root(c[i].beta)) << "\n";
    for (std::size_t ch : c[i].children) self(self, ch, depth + 1);
  };
  walk(walk, 0, 0);
  return out.str();
}

/// Canonical form of a labelled rooted tree, insensitive to sibling order.
inline std::string canonical_tree(std::span<const std::string> labels, std::span<const std::optional<std::size_t>> parents) {
  const std::size_t n = labels.size();
  std::vector<std::vector<std::size_t>> kids(n);
  std::size_t root = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (parents[i])
      kids[*parents[i]].push_back(i);
    else
      root = i;
  }
  auto enc = [&](auto&& self, std::size_t i) -> std::string {
    std::vector<std::string> parts;
    for (std::size_t k : kids[i]) parts.push_back(self(self, k));
    std::sort(parts.begin(), parts.end());
    std::string s = labels[i] + "(";
    for (const auto& p : parts) s += p;
    return s + ")";
  };
  return root == n ? std::string() : enc(enc, root);
}

inline std::string canonical_tree(const Cascade& c) {
  std::vector<std::string> labels;
  std::vector<std::optional<std::size_t>> parents;
  for (const auto& n : c.nodes()) {
    labels.push_back(n.label);
    parents.push_back(n.parent);
  }
  return canonical_tree(labels, parents);
}

}  // namespace ckit
