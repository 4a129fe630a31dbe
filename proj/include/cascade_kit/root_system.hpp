#pragma once

#include "cascade_kit/errors.hpp"
#include "cascade_kit/linalg.hpp"
#include "cascade_kit/rational.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ckit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

  std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

namespace detail {

inline std::optional<std::string> alias_of(Family f, int n) {
  switch (f) {
    case Family::B:
      if (n == 1) return "A1";
      break;
    case Family::C:
      if (n == 1) return "A1";
      break;
    case Family::D:
      if (n == 1) return "a torus (not simple)";
      if (n == 2) return "A1+A1 (not simple)";
      if (n == 3) return "A3";
      break;
    default:
      break;
  }
  return std::nullopt;
}

}  // namespace detail

/// Throws InvalidRank unless (family, rank) is a canonical simple type.
inline void validate(SimpleType t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (ok) return;
  if (auto canon = detail::alias_of(t.family, n))
    throw InvalidRank(t.str() + " is not a canonical label; it is " + *canon);
  throw InvalidRank("no simple type " + t.str());
}

/// Case-insensitive: "e8", "D9", "g2".
inline SimpleType parse_type(std::string_view text) {
  if (text.size() < 2) throw InvalidType("cannot parse type '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (std::string_view("ABCDEFG").find(letter) == std::string_view::npos)
    throw InvalidType("unknown family in '" + std::string(text) + "'");
  int n = 0;
  for (char ch : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || n > 100000)
      throw InvalidType("cannot parse rank in '" + std::string(text) + "'");
    n = n * 10 + (ch - '0');
  }
  SimpleType t{static_cast<Family>(letter), n};
  validate(t);
  return t;
}

/// Every simple type of rank at most max_rank, families in alphabetical order.
inline std::vector<SimpleType> all_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Family::E, n});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

/// A root, in coordinates over the simple roots. Ids are dense indices into RootSystem::roots().
struct Root {
  std::size_t id = 0;
  std::vector<int> coords;

  bool positive() const {
    for (int c : coords)
      if (c != 0) return c > 0;
    return false;
  }
  int height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

  friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
};

inline std::string format_coords(std::span<const int> coords) {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords[i]);
  }
  return s + ")";
}

/// Element of the rational span of the roots, in simple-root coordinates.
/// Elements of the Cartan subalgebra are carried through the normalized form.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::size_t rank) : coords_(rank) {}
  explicit WeightVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static WeightVector from_coords(std::span<const int> coords) {
    WeightVector v(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) v.coords_[i] = coords[i];
    return v;
  }

  std::size_t rank() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r == 0; });
  }
  bool is_integral() const { return std::all_of(coords_.begin(), coords_.end(), is_integer); }

  WeightVector& operator+=(const WeightVector& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  WeightVector& operator-=(const WeightVector& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  WeightVector& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator*(const Rational& s, WeightVector a) { return a *= s; }
  friend WeightVector operator-(WeightVector a) { return a *= Rational(-1); }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ',';
      s += to_string(coords_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<Rational> coords_;
};

/// Weyl group element as an integer matrix acting on simple-root coordinates.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(std::size_t rank, std::vector<std::int64_t> row_major) : rank_(rank), m_(std::move(row_major)) {}

  static WeylElement identity(std::size_t rank) {
    WeylElement w(rank, std::vector<std::int64_t>(rank * rank, 0));
    for (std::size_t i = 0; i < rank; ++i) w.m_[i * rank + i] = 1;
    return w;
  }

  std::size_t rank() const { return rank_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return m_[r * rank_ + c]; }

  std::vector<int> apply(std::span<const int> x) const {
    std::vector<int> out(rank_, 0);
    for (std::size_t r = 0; r < rank_; ++r) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < rank_; ++c) s += m_[r * rank_ + c] * x[c];
      out[r] = static_cast<int>(s);
    }
    return out;
  }

  WeightVector apply(const WeightVector& x) const {
    WeightVector out(rank_);
    for (std::size_t r = 0; r < rank_; ++r)
      for (std::size_t c = 0; c < rank_; ++c)
        if (m_[r * rank_ + c] != 0) out[r] += Rational(m_[r * rank_ + c]) * x[c];
    return out;
  }

  /// this ∘ rhs
  WeylElement compose(const WeylElement& rhs) const {
    WeylElement out(rank_, std::vector<std::int64_t>(rank_ * rank_, 0));
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t k = 0; k < rank_; ++k) {
        const std::int64_t a = m_[i * rank_ + k];
        if (a == 0) continue;
        for (std::size_t j = 0; j < rank_; ++j) out.m_[i * rank_ + j] += a * rhs.m_[k * rank_ + j];
      }
    return out;
  }

  bool is_identity() const { return *this == identity(rank_); }
  bool is_minus_identity() const {
    for (std::size_t r = 0; r < rank_; ++r)
      for (std::size_t c = 0; c < rank_; ++c)
        if (m_[r * rank_ + c] != (r == c ? -1 : 0)) return false;
    return true;
  }

  std::vector<std::vector<std::int64_t>> rows() const {
    std::vector<std::vector<std::int64_t>> out(rank_);
    for (std::size_t r = 0; r < rank_; ++r) out[r].assign(m_.begin() + r * rank_, m_.begin() + (r + 1) * rank_);
    return out;
  }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<std::int64_t> m_;
};

enum class Lattice { Q, QVee, P, PVee };

struct CoxeterNumbers {
  int h = 0;
  int h_dual = 0;
  friend bool operator==(const CoxeterNumbers&, const CoxeterNumbers&) = default;
};

/// Immutable root data of a simple type. The invariant form is normalized so that (θ,θ) = 2;
/// it is held internally multiplied by kFormScale so that every entry is an integer.
class RootSystem {
 public:
  static constexpr std::int64_t kFormScale = 6;

  static RootSystem build(SimpleType t) {
    validate(t);
    RootSystem rs;
    rs.type_ = t;
    rs.init_diagram();
    rs.generate_roots();
    return rs;
  }

  SimpleType type() const { return type_; }
  std::size_t rank() const { return rank_; }
  std::size_t num_positive() const { return n_pos_; }

  std::span<const Root> roots() const { return roots_; }
  std::span<const Root> positive_roots() const { return std::span<const Root>(roots_).first(n_pos_); }
  const Root& root(std::size_t id) const { return roots_.at(id); }
  const Root& simple(std::size_t i) const { return roots_[simple_ids_.at(i)]; }
  const Root& theta() const { return roots_[n_pos_ - 1]; }
  std::size_t negate(std::size_t id) const { return id < n_pos_ ? id + n_pos_ : id - n_pos_; }

  std::optional<std::size_t> find(std::span<const int> coords) const {
    auto it = index_.find(std::vector<int>(coords.begin(), coords.end()));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  const Root& root_at(std::span<const int> coords) const {
    auto id = find(coords);
    if (!id) throw std::logic_error("not a root: " + format_coords(coords));
    return roots_[*id];
  }
  bool is_root(std::span<const int> coords) const { return find(coords).has_value(); }

  /// Id of a + b for positive roots a, b when it is a root.
  std::optional<std::size_t> positive_sum(std::size_t a, std::size_t b) const {
    const int s = sum_table_[a * n_pos_ + b];
    if (s < 0) return std::nullopt;
    return static_cast<std::size_t>(s);
  }

  std::optional<std::size_t> sum(const Root& a, const Root& b) const {
    std::vector<int> c(rank_);
    for (std::size_t i = 0; i < rank_; ++i) c[i] = a.coords[i] + b.coords[i];
    return find(c);
  }

  // Diagram data.
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i * rank_ + j]; }  // <α_i, α_j^∨>
  int bond(std::size_t i, std::size_t j) const { return i == j ? 0 : cartan(i, j) * cartan(j, i); }
  bool adjacent(std::size_t i, std::size_t j) const { return bond(i, j) != 0; }
  Rational form(std::size_t i, std::size_t j) const { return Rational(form6_[i * rank_ + j], kFormScale); }
  std::int64_t form_scaled(std::size_t i, std::size_t j) const { return form6_[i * rank_ + j]; }

  // Pairings.
  std::int64_t pairing_scaled(std::span<const int> a, std::span<const int> b) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
      if (a[i] == 0) continue;
      std::int64_t t = 0;
      for (std::size_t j = 0; j < rank_; ++j) t += form6_[i * rank_ + j] * b[j];
      s += a[i] * t;
    }
    return s;
  }
  Rational pairing(const Root& a, const Root& b) const {
    return Rational(pairing_scaled(a.coords, b.coords), kFormScale);
  }
  Rational pairing(const Root& a, const WeightVector& x) const {
    Rational s = 0;
    const auto m = marks(x);
    for (std::size_t i = 0; i < rank_; ++i)
      if (a.coords[i] != 0) s += a.coords[i] * m[i];
    return s;
  }
  Rational pairing(const WeightVector& x, const WeightVector& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
      if (x[i] == 0) continue;
      Rational t = 0;
      for (std::size_t j = 0; j < rank_; ++j)
        if (form6_[i * rank_ + j] != 0) t += form6_[i * rank_ + j] * y[j];
      s += x[i] * t;
    }
    return s / kFormScale;
  }
  bool is_long(const Root& a) const { return pairing_scaled(a.coords, a.coords) == 2 * kFormScale; }

  /// The simple marks (α_i, x).
  std::vector<Rational> marks(const WeightVector& x) const {
    std::vector<Rational> out(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
      Rational t = 0;
      for (std::size_t j = 0; j < rank_; ++j)
        if (form6_[i * rank_ + j] != 0) t += form6_[i * rank_ + j] * x[j];
      out[i] = t / kFormScale;
    }
    return out;
  }

  /// Value of a root on x given its simple marks.
  static Rational evaluate(const Root& a, std::span<const Rational> marks) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
      if (a.coords[i] != 0) s += a.coords[i] * marks[i];
    return s;
  }

  /// The element x with (α_i, x) = marks_i.
  WeightVector from_marks(std::span<const Rational> m) const {
    WeightVector x(rank_);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) x[i] += gram_inv_(i, j) * m[j];
    return x;
  }

  WeightVector weight(const Root& a) const { return WeightVector::from_coords(a.coords); }

  WeightVector coroot(const Root& a) const {
    WeightVector v = weight(a);
    v *= Rational(2 * kFormScale, pairing_scaled(a.coords, a.coords));
    return v;
  }

  /// ρ, half the sum of positive roots.
  WeightVector rho() const {
    WeightVector v(rank_);
    for (const Root& a : positive_roots()) v += weight(a);
    return Rational(1, 2) * v;
  }
  WeightVector rho_vee() const {
    WeightVector v(rank_);
    for (const Root& a : positive_roots()) v += coroot(a);
    return Rational(1, 2) * v;
  }
  /// ϖ_j^∨, dual to the simple roots: (α_i, ϖ_j^∨) = δ_ij.
  WeightVector fundamental_coweight(std::size_t j) const {
    std::vector<Rational> m(rank_);
    m[j] = 1;
    return from_marks(m);
  }
  /// ϖ_j, with <ϖ_j, α_i^∨> = δ_ij.
  WeightVector fundamental_weight(std::size_t j) const {
    WeightVector v = fundamental_coweight(j);
    return form(j, j) / 2 * v;
  }

  // Weyl group.
  WeylElement reflection(const Root& a) const {
    const std::int64_t aa = pairing_scaled(a.coords, a.coords);
    std::vector<std::int64_t> m(rank_ * rank_, 0);
    for (std::size_t j = 0; j < rank_; ++j) {
      std::int64_t ja = 0;
      for (std::size_t k = 0; k < rank_; ++k) ja += form6_[j * rank_ + k] * a.coords[k];
      const std::int64_t coeff = 2 * ja / aa;  // <α_j, a^∨>
      for (std::size_t r = 0; r < rank_; ++r) m[r * rank_ + j] = (r == j ? 1 : 0) - coeff * a.coords[r];
    }
    return WeylElement(rank_, std::move(m));
  }
  WeylElement simple_reflection(std::size_t i) const { return reflection(simple(i)); }

  WeylElement from_word(std::span<const std::size_t> word) const {
    WeylElement w = WeylElement::identity(rank_);
    for (std::size_t i : word) w = w.compose(simple_reflection(i));
    return w;
  }

  const Root& apply(const WeylElement& w, const Root& a) const { return root_at(w.apply(a.coords)); }

  /// N(w) = {γ > 0 : w(γ) < 0}, as root ids.
  std::vector<std::size_t> inversion_set(const WeylElement& w) const {
    std::vector<std::size_t> out;
    for (const Root& a : positive_roots()) {
      const auto img = w.apply(a.coords);
      if (std::any_of(img.begin(), img.end(), [](int c) { return c < 0; })) out.push_back(a.id);
    }
    return out;
  }

  std::size_t order(const WeylElement& w, std::size_t bound = 100000) const {
    WeylElement p = w;
    std::size_t k = 1;
    while (!p.is_identity()) {
      if (++k > bound) throw OrderOverflow("order exceeds " + std::to_string(bound));
      p = p.compose(w);
    }
    return k;
  }

  /// Partial order: b - a is a non-negative combination of simple roots.
  static bool root_order_leq(const Root& a, const Root& b) {
    for (std::size_t i = 0; i < a.coords.size(); ++i)
      if (a.coords[i] > b.coords[i]) return false;
    return true;
  }

  /// Upper ideal in (Δ⁺, ≼): closed under adding simple roots.
  bool is_upper_ideal(std::span<const std::size_t> ids) const {
    std::vector<char> in(n_pos_, 0);
    for (std::size_t id : ids) {
      if (id >= n_pos_) return false;
      in[id] = 1;
    }
    for (std::size_t id : ids)
      for (std::size_t i = 0; i < rank_; ++i)
        if (auto s = positive_sum(id, simple_ids_[i]); s && !in[*s]) return false;
    return true;
  }

  bool lattice_member(const WeightVector& v, Lattice l) const {
    switch (l) {
      case Lattice::Q:
        return v.is_integral();
      case Lattice::QVee:
        // v = Σ c_i α_i^∨ with c_i = v_i (α_i,α_i)/2
        for (std::size_t i = 0; i < rank_; ++i)
          if (!is_integer(v[i] * form(i, i) / 2)) return false;
        return true;
      case Lattice::P: {
        const auto m = marks(v);
        for (std::size_t i = 0; i < rank_; ++i)
          if (!is_integer(2 * m[i] / form(i, i))) return false;
        return true;
      }
      case Lattice::PVee: {
        const auto m = marks(v);
        return std::all_of(m.begin(), m.end(), is_integer);
      }
    }
    return false;
  }

  CoxeterNumbers coxeter_numbers() const {
    std::vector<std::size_t> all(rank_);
    std::iota(all.begin(), all.end(), 0);
    return subsystem_coxeter_numbers(all);
  }

  /// Coxeter numbers of the irreducible subsystem spanned by a connected set of simple roots.
  CoxeterNumbers subsystem_coxeter_numbers(std::span<const std::size_t> support) const {
    const auto sub = subsystem_positive(support);
    const Root& top = roots_[sub.back()];
    const std::int64_t tt = pairing_scaled(top.coords, top.coords);
    std::int64_t acc = 0;
    for (std::size_t id : sub) acc += pairing_scaled(roots_[id].coords, top.coords);
    // (ρ, β^∨) = Σ (γ, β) / (β, β)
    return CoxeterNumbers{1 + top.height(), static_cast<int>(acc / tt) + 1};
  }

  /// Positive roots supported on the given simple roots, in id order (highest root last).
  std::vector<std::size_t> subsystem_positive(std::span<const std::size_t> support) const {
    std::vector<char> allowed(rank_, 0);
    for (std::size_t i : support) allowed[i] = 1;
    std::vector<std::size_t> out;
    for (const Root& a : positive_roots()) {
      bool ok = true;
      for (std::size_t i = 0; i < rank_ && ok; ++i) ok = a.coords[i] == 0 || allowed[i];
      if (ok) out.push_back(a.id);
    }
    return out;
  }

  /// Simple-root labels as used in the diagrams: 1-based indices.
  std::string root_text(const Root& a) const { return format_coords(a.coords); }

 private:
  void init_diagram() {
    const int n = type_.rank;
    rank_ = static_cast<std::size_t>(n);
    // squared lengths in units of kFormScale, long roots have length 2
    std::vector<std::int64_t> len(rank_, 2 * kFormScale);
    std::vector<std::pair<int, int>> edges;
    auto chain = [&](int from, int to) {
      for (int i = from; i < to; ++i) edges.emplace_back(i, i + 1);
    };
    switch (type_.family) {
      case Family::A:
        chain(0, n - 1);
        break;
      case Family::B:
        chain(0, n - 1);
        len[rank_ - 1] = kFormScale;
        break;
      case Family::C:
        chain(0, n - 1);
        for (std::size_t i = 0; i + 1 < rank_; ++i) len[i] = kFormScale;
        break;
      case Family::D:
        chain(0, n - 2);
        edges.emplace_back(n - 3, n - 1);
        break;
      case Family::E:
        chain(0, n - 2);
        edges.emplace_back(n == 6 ? 2 : n == 7 ? 3 : 4, n - 1);
        break;
      case Family::F:
        chain(0, 3);
        len[0] = len[1] = kFormScale;
        break;
      case Family::G:
        edges.emplace_back(0, 1);
        len[0] = 2 * kFormScale / 3;
        break;
    }
    form6_.assign(rank_ * rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i) form6_[i * rank_ + i] = len[i];
    for (auto [a, b] : edges) {
      const std::int64_t v = -std::max(len[a], len[b]) / 2;
      form6_[a * rank_ + b] = form6_[b * rank_ + a] = v;
    }
    cartan_.assign(rank_ * rank_, 0);
    RationalMatrix gram(rank_, rank_);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) {
        cartan_[i * rank_ + j] = static_cast<int>(2 * form6_[i * rank_ + j] / form6_[j * rank_ + j]);
        gram(i, j) = form(i, j);
      }
    gram_inv_ = *inverse(gram);
  }

  void generate_roots() {
    std::map<std::vector<int>, int> known;
    std::vector<std::vector<int>> layer;
    for (std::size_t i = 0; i < rank_; ++i) {
      std::vector<int> e(rank_, 0);
      e[i] = 1;
      layer.push_back(e);
      known.emplace(e, 1);
    }
    std::vector<std::vector<int>> positive;
    while (!layer.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& g : layer) {
        positive.push_back(g);
        for (std::size_t i = 0; i < rank_; ++i) {
          // α_i-string through g: p steps down, q = p - <g, α_i^∨> steps up
          int p = 0;
          std::vector<int> down = g;
          while (true) {
            down[i] -= 1;
            if (!known.count(down)) break;
            ++p;
          }
          int pair = 0;
          for (std::size_t j = 0; j < rank_; ++j) pair += g[j] * cartan_[j * rank_ + i];
          if (p - pair > 0) {
            std::vector<int> up = g;
            up[i] += 1;
            if (known.emplace(up, 1).second) next.push_back(up);
          }
        }
      }
      layer = std::move(next);
    }
    std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
      const int ha = std::accumulate(a.begin(), a.end(), 0);
      const int hb = std::accumulate(b.begin(), b.end(), 0);
      return ha != hb ? ha < hb : a < b;
    });
    n_pos_ = positive.size();
    roots_.clear();
    for (std::size_t k = 0; k < n_pos_; ++k) roots_.push_back(Root{k, positive[k]});
    for (std::size_t k = 0; k < n_pos_; ++k) {
      std::vector<int> neg = positive[k];
      for (int& c : neg) c = -c;
      roots_.push_back(Root{n_pos_ + k, std::move(neg)});
    }
    for (const Root& a : roots_) index_.emplace(a.coords, a.id);
    simple_ids_.assign(rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i) {
      std::vector<int> e(rank_, 0);
      e[i] = 1;
      simple_ids_[i] = index_.at(e);
    }
    sum_table_.assign(n_pos_ * n_pos_, -1);
    for (std::size_t a = 0; a < n_pos_; ++a)
      for (std::size_t b = 0; b < n_pos_; ++b)
        if (auto s = sum(roots_[a], roots_[b])) sum_table_[a * n_pos_ + b] = static_cast<int>(*s);
  }

  SimpleType type_;
  std::size_t rank_ = 0;
  std::size_t n_pos_ = 0;
  std::vector<std::int64_t> form6_;
  std::vector<int> cartan_;
  RationalMatrix gram_inv_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::size_t> simple_ids_;
  std::vector<int> sum_table_;
};

}  // namespace ckit
