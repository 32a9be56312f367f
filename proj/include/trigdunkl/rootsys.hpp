#pragma once

// Root systems in their standard Bourbaki realizations: roots, coroots,
// fundamental weights, Weyl-group actions on weights, and the two partial
// orders used to index Laurent monomials.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coeff.hpp"
#include "errors.hpp"

namespace trigdunkl {

enum class Family { A, B, C, D, E, F, G, BC };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;

  std::string name() const { return family_name(family) + std::to_string(rank); }
  bool reduced() const { return family != Family::BC; }
  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

inline bool valid_rank(const RootSystemSpec& s) {
  switch (s.family) {
    case Family::A: return s.rank >= 1;
    case Family::B:
    case Family::C: return s.rank >= 2;
    case Family::D: return s.rank >= 4;
    case Family::E: return s.rank >= 6 && s.rank <= 8;
    case Family::F: return s.rank == 4;
    case Family::G: return s.rank == 2;
    case Family::BC: return s.rank >= 1;
  }
  return false;
}

/// Parses "E8", "BC1", "a3" (case-insensitive family letters followed by the rank).
inline RootSystemSpec parse_type(const std::string& text) {
  std::size_t i = 0;
  std::string fam;
  while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
    fam += static_cast<char>(std::toupper(static_cast<unsigned char>(text[i++])));
  std::string digits = text.substr(i);
  if (fam.empty() || digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw ParseError("malformed root system type '" + text + "'");
  static const std::map<std::string, Family> names{{"A", Family::A}, {"B", Family::B}, {"C", Family::C},
                                                   {"D", Family::D}, {"E", Family::E}, {"F", Family::F},
                                                   {"G", Family::G}, {"BC", Family::BC}};
  auto it = names.find(fam);
  if (it == names.end()) throw ParseError("unknown root system family '" + fam + "'");
  return {it->second, std::stoi(digits)};
}

/// Element of the weight lattice P, in the fundamental-weight basis.
struct Weight {
  std::vector<long> c;

  Weight() = default;
  explicit Weight(std::vector<long> coords) : c(std::move(coords)) {}
  Weight(std::initializer_list<long> coords) : c(coords) {}
  static Weight zero(int n) { return Weight(std::vector<long>(n, 0)); }

  std::size_t size() const { return c.size(); }
  long operator[](std::size_t i) const { return c[i]; }
  long& operator[](std::size_t i) { return c[i]; }
  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](long x) { return x == 0; });
  }

  Weight operator-() const {
    Weight r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend Weight operator+(Weight a, const Weight& b) {
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
    return a;
  }
  friend Weight operator-(Weight a, const Weight& b) {
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend Weight operator*(long s, Weight a) {
    for (auto& x : a.c) x *= s;
    return a;
  }

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;
};

/// Element of h* with coefficients in Q(k, kp), fundamental-weight basis.
struct HStarElement {
  std::vector<RatFunc> c;

  HStarElement() = default;
  explicit HStarElement(std::vector<RatFunc> coords) : c(std::move(coords)) {}
  explicit HStarElement(const Weight& w) {
    for (long x : w.c) c.emplace_back(x);
  }
  static HStarElement zero(int n) { return HStarElement(std::vector<RatFunc>(n)); }

  std::size_t size() const { return c.size(); }
  const RatFunc& operator[](std::size_t i) const { return c[i]; }
  RatFunc& operator[](std::size_t i) { return c[i]; }

  HStarElement operator-() const {
    HStarElement r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend HStarElement operator+(HStarElement a, const HStarElement& b) {
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
    return a;
  }
  friend HStarElement operator-(HStarElement a, const HStarElement& b) {
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend HStarElement operator*(const RatFunc& s, HStarElement a) {
    for (auto& x : a.c) x *= s;
    return a;
  }
  bool operator==(const HStarElement&) const = default;
};

/// Element of h with coefficients in Q(k, kp), in the basis b_1..b_n of the
/// coroot lattice dual to the fundamental weights (the simple coroots for
/// reduced systems).
struct HElement {
  std::vector<RatFunc> c;

  HElement() = default;
  explicit HElement(std::vector<RatFunc> coords) : c(std::move(coords)) {}
  static HElement zero(int n) { return HElement(std::vector<RatFunc>(n)); }
  static HElement basis(int n, int i) {
    HElement e = zero(n);
    e.c[i] = RatFunc(1);
    return e;
  }

  std::size_t size() const { return c.size(); }
  const RatFunc& operator[](std::size_t i) const { return c[i]; }

  friend HElement operator+(HElement a, const HElement& b) {
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
    return a;
  }
  friend HElement operator-(HElement a, const HElement& b) {
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend HElement operator*(const RatFunc& s, HElement a) {
    for (auto& x : a.c) x *= s;
    return a;
  }
  bool operator==(const HElement&) const = default;
};

/// Pairing <mu, xi> of a weight with an element of h.
inline RatFunc pair(const Weight& mu, const HElement& xi) {
  RatFunc acc;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] != 0) acc += RatFunc(mu[i]) * xi[i];
  return acc;
}
inline RatFunc pair(const HStarElement& lambda, const HElement& xi) {
  RatFunc acc;
  for (std::size_t i = 0; i < lambda.size(); ++i) acc += lambda[i] * xi[i];
  return acc;
}

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

namespace detail {

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RationalMatrix invert(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw DomainError("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline long to_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw ConstructionError(std::string("non-integral ") + what);
  return q.get_num().get_si();
}

}  // namespace detail

/// A root, stored in every coordinate system the engine needs.
struct Root {
  RationalVector ambient;
  std::vector<long> simple;  ///< coordinates in the simple-root basis
  Weight weight;             ///< coordinates in the fundamental-weight basis
  std::vector<long> coroot;  ///< coroot in the basis b_1..b_n of h
  Rational norm2;            ///< (alpha, alpha)
  int length_class = 0;      ///< 0: W-orbit of alpha_1, 1: orbit of alpha_n, 2: divisible root (BC only)
  long height() const { return std::accumulate(simple.begin(), simple.end(), 0L); }
};

enum class Ordering { Less, Equal, Greater, Incomparable };

inline std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
    case Ordering::Incomparable: return "incomparable";
  }
  return "?";
}

/// Immutable root datum for one irreducible type.
class RootSystem {
 public:
  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }
  int ambient_dim() const { return ambient_dim_; }
  const std::vector<RationalVector>& simple_roots() const { return simple_ambient_; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  const Root& root(std::size_t idx) const { return roots_.at(idx); }
  /// Position of the simple root alpha_i (1-based node i) in positive_roots().
  std::size_t simple_index(int node) const { return simple_idx_.at(check_node(node)); }
  const Root& simple_root(int node) const { return roots_[simple_index(node)]; }
  const std::vector<std::vector<long>>& cartan() const { return cartan_; }
  const std::vector<RationalVector>& fundamental_weights() const { return fund_ambient_; }
  /// (varpi_i, varpi_j).
  const RationalMatrix& weight_gram() const { return weight_gram_; }
  /// (b_i, b_j)^vee, the dual form on h in the b-basis.
  const RationalMatrix& coroot_gram() const { return coroot_gram_; }
  int coxeter_number() const { return coxeter_number_; }
  std::uint64_t weyl_order() const { return weyl_order_; }
  /// w0(varpi_i) = -varpi_{sigma(i)}; sigma is returned 0-based.
  const std::vector<int>& w0_permutation() const { return w0_perm_; }
  bool reduced() const { return spec_.reduced(); }

  int check_node(int node) const {
    if (node < 1 || node > rank())
      throw DomainError("simple reflection index " + std::to_string(node) + " out of range 1.." +
                        std::to_string(rank()));
    return node - 1;
  }

  /// Index of a positive root given by its simple-root coordinates.
  std::optional<std::size_t> find_root(const std::vector<long>& simple) const {
    auto it = index_by_simple_.find(simple);
    if (it == index_by_simple_.end()) return std::nullopt;
    return it->second;
  }

  // --- weights -----------------------------------------------------------

  long coroot_pairing(const Weight& mu, const Root& a) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i) s += mu[i] * a.coroot[i];
    return s;
  }

  Weight reflect(const Root& a, const Weight& mu) const { return mu - coroot_pairing(mu, a) * a.weight; }
  Weight reflect(int node, const Weight& mu) const { return reflect(simple_root(node), mu); }

  HStarElement reflect(const Root& a, const HStarElement& v) const {
    RatFunc m;
    for (int i = 0; i < rank(); ++i)
      if (a.coroot[i] != 0) m += RatFunc(a.coroot[i]) * v[i];
    return v - m * HStarElement(a.weight);
  }
  HStarElement reflect(int node, const HStarElement& v) const { return reflect(simple_root(node), v); }

  RationalVector reflect(int node, const RationalVector& v) const {
    const Root& a = simple_root(node);
    Rational m = 0;
    for (int i = 0; i < rank(); ++i) m += v[i] * a.coroot[i];
    RationalVector r = v;
    for (int i = 0; i < rank(); ++i) r[i] -= m * a.weight[i];
    return r;
  }

  /// s_alpha acting on h: xi - alpha(xi) alpha^vee.
  HElement reflect(const Root& a, const HElement& xi) const {
    RatFunc m = pair(a.weight, xi);
    HElement r = xi;
    for (int i = 0; i < rank(); ++i)
      if (a.coroot[i] != 0) r.c[i] -= m * RatFunc(a.coroot[i]);
    return r;
  }
  HElement reflect(int node, const HElement& xi) const { return reflect(simple_root(node), xi); }

  /// Applies w = s_{word[0]} s_{word[1]} ... (rightmost letter acts first).
  template <class V>
  V apply_word(const std::vector<int>& word, V v) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect(*it, v);
    return v;
  }

  bool is_dominant(const Weight& mu) const {
    return std::all_of(mu.c.begin(), mu.c.end(), [](long x) { return x >= 0; });
  }

  Weight dominant(Weight mu) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < rank(); ++i) {
        if (coroot_pairing(mu, roots_[simple_idx_[i]]) < 0) {
          mu = reflect(i + 1, mu);
          changed = true;
        }
      }
    }
    return mu;
  }

  RationalVector dominant(RationalVector v) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 1; i <= rank(); ++i) {
        const Root& a = simple_root(i);
        Rational m = 0;
        for (int j = 0; j < rank(); ++j) m += v[j] * a.coroot[j];
        if (m < 0) {
          v = reflect(i, v);
          changed = true;
        }
      }
    }
    return v;
  }

  Weight antidominant(Weight mu) const { return -dominant(-mu); }

  std::set<Weight> orbit(const Weight& mu) const {
    std::set<Weight> seen{mu};
    std::vector<Weight> frontier{mu};
    while (!frontier.empty()) {
      Weight v = std::move(frontier.back());
      frontier.pop_back();
      for (int i = 1; i <= rank(); ++i) {
        Weight w = reflect(i, v);
        if (seen.insert(w).second) frontier.push_back(std::move(w));
      }
    }
    return seen;
  }

  /// Coordinates of a weight in the simple-root basis (rational in general).
  RationalVector to_root_coords(const Weight& mu) const {
    RationalVector r(rank(), Rational(0));
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) r[i] += weight_to_root_[i][j] * mu[j];
    return r;
  }

  Rational height(const Weight& mu) const {
    Rational s = 0;
    for (const auto& x : to_root_coords(mu)) s += x;
    return s;
  }

  /// Dominance order: mu <= nu iff nu - mu is a nonnegative integer combination of simple roots.
  bool dominance_le(const Weight& mu, const Weight& nu) const {
    for (const auto& x : to_root_coords(nu - mu))
      if (x < 0 || x.get_den() != 1) return false;
    return true;
  }

  /// The order <=_+ : compare dominant representatives by dominance, and
  /// within one orbit use reversed dominance.
  Ordering le_plus(const Weight& mu, const Weight& nu) const {
    if (mu == nu) return Ordering::Equal;
    Weight mp = dominant(mu), np = dominant(nu);
    if (mp == np) {
      if (dominance_le(nu, mu)) return Ordering::Less;
      if (dominance_le(mu, nu)) return Ordering::Greater;
      return Ordering::Incomparable;
    }
    if (dominance_le(mp, np)) return Ordering::Less;
    if (dominance_le(np, mp)) return Ordering::Greater;
    return Ordering::Incomparable;
  }

  /// All weights nu with nu_+ <= mu_+ in dominance (the saturated set of mu).
  std::set<Weight> saturated_set(const Weight& mu) const {
    Weight top = dominant(mu);
    std::set<Weight> dom{top};
    std::vector<Weight> frontier{top};
    while (!frontier.empty()) {
      Weight v = std::move(frontier.back());
      frontier.pop_back();
      for (const auto& a : roots_) {
        Weight w = v - a.weight;
        if (is_dominant(w) && dom.insert(w).second) frontier.push_back(std::move(w));
      }
    }
    std::set<Weight> all;
    for (const auto& d : dom) {
      auto o = orbit(d);
      all.insert(o.begin(), o.end());
    }
    return all;
  }

  // --- inner products ----------------------------------------------------

  Rational inner(const Weight& a, const Weight& b) const {
    Rational s = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) s += weight_gram_[i][j] * a[i] * b[j];
    return s;
  }

  RatFunc inner(const HStarElement& a, const HStarElement& b) const {
    RatFunc s;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        if (weight_gram_[i][j] != 0) s += RatFunc(weight_gram_[i][j]) * a[i] * b[j];
    return s;
  }

  /// Ambient coordinates of a weight.
  RationalVector to_ambient(const Weight& mu) const {
    RationalVector v(ambient_dim_, Rational(0));
    for (int i = 0; i < rank(); ++i)
      for (int d = 0; d < ambient_dim_; ++d) v[d] += fund_ambient_[i][d] * mu[i];
    return v;
  }

  friend RootSystem build_root_system(const RootSystemSpec& spec);

 private:
  RootSystem() = default;

  RootSystemSpec spec_;
  int ambient_dim_ = 0;
  std::vector<RationalVector> simple_ambient_;
  std::vector<RationalVector> basis_coroots_;
  std::vector<Root> roots_;
  std::map<std::vector<long>, std::size_t> index_by_simple_;
  std::vector<std::size_t> simple_idx_;
  std::vector<std::vector<long>> cartan_;
  std::vector<RationalVector> fund_ambient_;
  RationalMatrix weight_gram_;
  RationalMatrix coroot_gram_;
  RationalMatrix weight_to_root_;
  int coxeter_number_ = 0;
  std::uint64_t weyl_order_ = 0;
  std::vector<int> w0_perm_;
};

namespace detail {

inline RationalVector unit(int dim, int i, Rational s = 1) {
  RationalVector v(dim, Rational(0));
  v[i] = s;
  return v;
}

inline RationalVector axpy(const RationalVector& a, const RationalVector& b, Rational s = 1) {
  RationalVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
  return r;
}

// e_i - e_j (0-based)
inline RationalVector diff(int dim, int i, int j) { return axpy(unit(dim, i), unit(dim, j), -1); }

inline std::vector<RationalVector> bourbaki_simple_roots(const RootSystemSpec& s, int& dim) {
  const int n = s.rank;
  std::vector<RationalVector> r;
  switch (s.family) {
    case Family::A:
      dim = n + 1;
      for (int i = 0; i < n; ++i) r.push_back(diff(dim, i, i + 1));
      break;
    case Family::B:
    case Family::BC:
      dim = n;
      for (int i = 0; i + 1 < n; ++i) r.push_back(diff(dim, i, i + 1));
      r.push_back(unit(dim, n - 1));
      break;
    case Family::C:
      dim = n;
      for (int i = 0; i + 1 < n; ++i) r.push_back(diff(dim, i, i + 1));
      r.push_back(unit(dim, n - 1, 2));
      break;
    case Family::D:
      dim = n;
      for (int i = 0; i + 1 < n; ++i) r.push_back(diff(dim, i, i + 1));
      r.push_back(axpy(unit(dim, n - 2), unit(dim, n - 1)));
      break;
    case Family::E: {
      dim = 8;
      RationalVector a1(8, ratio(-1, 2));
      a1[0] = ratio(1, 2);
      a1[7] = ratio(1, 2);
      r.push_back(a1);
      r.push_back(axpy(unit(8, 0), unit(8, 1)));
      for (int i = 0; i < 6; ++i) r.push_back(diff(8, i + 1, i));
      r.resize(n);
      break;
    }
    case Family::F:
      dim = 4;
      r.push_back(diff(4, 1, 2));
      r.push_back(diff(4, 2, 3));
      r.push_back(unit(4, 3));
      r.push_back(RationalVector{ratio(1, 2), ratio(-1, 2), ratio(-1, 2), ratio(-1, 2)});
      break;
    case Family::G:
      dim = 3;
      r.push_back(diff(3, 0, 1));
      r.push_back(RationalVector{-2, 1, 1});
      break;
  }
  return r;
}

inline std::uint64_t weyl_group_order(const RootSystemSpec& s) {
  auto fact = [](int m) {
    std::uint64_t f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  const int n = s.rank;
  switch (s.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C:
    case Family::BC: return (std::uint64_t{1} << n) * fact(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * fact(n);
    case Family::E: return n == 6 ? 51840u : n == 7 ? 2903040u : 696729600u;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

}  // namespace detail

/// Builds the Bourbaki realization of the given type. BC_n is the union of
/// the B_n and C_n root vectors; its weight lattice basis is dual to the
/// coroot-lattice basis {e_i - e_{i+1}, e_n}.
inline RootSystem build_root_system(const RootSystemSpec& spec) {
  if (!valid_rank(spec))
    throw ConstructionError("invalid rank " + std::to_string(spec.rank) + " for family " + family_name(spec.family));
  using detail::dot;
  RootSystem rs;
  rs.spec_ = spec;
  const int n = spec.rank;
  rs.simple_ambient_ = detail::bourbaki_simple_roots(spec, rs.ambient_dim_);
  const auto& simple = rs.simple_ambient_;

  auto coroot_of = [](const RationalVector& a) {
    Rational f = Rational(2) / dot(a, a);
    RationalVector c = a;
    for (auto& x : c) x *= f;
    return c;
  };

  for (int i = 0; i < n; ++i) {
    std::vector<long> row(n);
    RationalVector ci = coroot_of(simple[i]);
    for (int j = 0; j < n; ++j) row[j] = detail::to_integer(dot(simple[j], ci), "Cartan entry");
    rs.cartan_.push_back(row);
  }

  // positive roots by closure under simple reflections
  struct Raw {
    RationalVector ambient;
    std::vector<long> simple;
  };
  std::vector<Raw> raw;
  std::set<std::vector<long>> seen;
  for (int i = 0; i < n; ++i) {
    std::vector<long> c(n, 0);
    c[i] = 1;
    raw.push_back({simple[i], c});
    seen.insert(c);
  }
  for (std::size_t q = 0; q < raw.size(); ++q) {
    for (int i = 0; i < n; ++i) {
      const Raw beta = raw[q];
      long m = detail::to_integer(dot(beta.ambient, coroot_of(simple[i])), "root pairing");
      if (m == 0) continue;
      std::vector<long> c = beta.simple;
      c[i] -= m;
      if (std::any_of(c.begin(), c.end(), [](long x) { return x < 0; })) continue;
      if (!seen.insert(c).second) continue;
      raw.push_back({detail::axpy(beta.ambient, simple[i], Rational(-m)), c});
    }
  }
  if (spec.family == Family::BC) {
    Rational short_norm = dot(simple[n - 1], simple[n - 1]);
    std::size_t count = raw.size();
    for (std::size_t q = 0; q < count; ++q) {
      if (dot(raw[q].ambient, raw[q].ambient) != short_norm) continue;
      Raw d = raw[q];
      for (auto& x : d.ambient) x *= 2;
      for (auto& x : d.simple) x *= 2;
      raw.push_back(d);
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    long ha = std::accumulate(a.simple.begin(), a.simple.end(), 0L);
    long hb = std::accumulate(b.simple.begin(), b.simple.end(), 0L);
    if (ha != hb) return ha < hb;
    return a.simple < b.simple;
  });

  // basis of the coroot lattice and the dual fundamental weights
  for (int i = 0; i < n; ++i) rs.basis_coroots_.push_back(coroot_of(simple[i]));
  if (spec.family == Family::BC) {
    RationalVector d = simple[n - 1];
    for (auto& x : d) x *= 2;
    rs.basis_coroots_[n - 1] = coroot_of(d);
  }
  RationalMatrix pairing(n, RationalVector(n));
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j) pairing[l][j] = dot(simple[l], rs.basis_coroots_[j]);
  RationalMatrix x = detail::invert(pairing);
  for (int i = 0; i < n; ++i) {
    RationalVector w(rs.ambient_dim_, Rational(0));
    for (int l = 0; l < n; ++l) w = detail::axpy(w, simple[l], x[i][l]);
    rs.fund_ambient_.push_back(w);
  }

  Rational norm_first = dot(simple[0], simple[0]);
  Rational norm_last = dot(simple[n - 1], simple[n - 1]);
  for (const auto& r : raw) {
    Root root;
    root.ambient = r.ambient;
    root.simple = r.simple;
    root.norm2 = dot(r.ambient, r.ambient);
    RationalVector cv = coroot_of(r.ambient);
    std::vector<long> w(n), c(n);
    for (int i = 0; i < n; ++i) {
      w[i] = detail::to_integer(dot(r.ambient, rs.basis_coroots_[i]), "weight coordinate");
      c[i] = detail::to_integer(dot(rs.fund_ambient_[i], cv), "coroot coordinate");
    }
    root.weight = Weight(w);
    root.coroot = c;
    if (spec.family == Family::BC && root.norm2 == 4 * norm_last)
      root.length_class = 2;
    else if (root.norm2 == norm_first)
      root.length_class = 0;
    else if (root.norm2 == norm_last)
      root.length_class = 1;
    else
      throw ConstructionError("unexpected root length");
    rs.index_by_simple_[root.simple] = rs.roots_.size();
    rs.roots_.push_back(std::move(root));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<long> c(n, 0);
    c[i] = 1;
    rs.simple_idx_.push_back(rs.index_by_simple_.at(c));
  }

  rs.weight_gram_.assign(n, RationalVector(n));
  rs.coroot_gram_.assign(n, RationalVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rs.weight_gram_[i][j] = dot(rs.fund_ambient_[i], rs.fund_ambient_[j]);
      rs.coroot_gram_[i][j] = dot(rs.basis_coroots_[i], rs.basis_coroots_[j]);
    }
  // column j of weight_from_root is alpha_j in weight coordinates
  RationalMatrix root_to_weight(n, RationalVector(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) root_to_weight[i][j] = rs.roots_[rs.simple_idx_[j]].weight[i];
  rs.weight_to_root_ = detail::invert(root_to_weight);

  rs.coxeter_number_ = spec.reduced() ? static_cast<int>(2 * rs.roots_.size() / n) : 2 * n;
  rs.weyl_order_ = detail::weyl_group_order(spec);

  for (int i = 0; i < n; ++i) {
    Weight w = Weight::zero(n);
    w[i] = 1;
    Weight a = rs.antidominant(w);
    int target = -1;
    for (int j = 0; j < n; ++j) {
      Weight e = Weight::zero(n);
      e[j] = -1;
      if (a == e) target = j;
    }
    rs.w0_perm_.push_back(target);
  }
  return rs;
}

// Free-function forms of the module operations.

inline HStarElement reflect(const RootSystem& rs, int node, const HStarElement& v) { return rs.reflect(node, v); }
inline Weight reflect(const RootSystem& rs, int node, const Weight& v) { return rs.reflect(node, v); }
inline std::set<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) { return rs.orbit(w); }
inline Ordering le_plus(const RootSystem& rs, const Weight& mu, const Weight& nu) { return rs.le_plus(mu, nu); }

/// The A_n vector alpha' attached to a positive root: for alpha^vee = e_i - e_j
/// it is the image of e_i + e_j in R^{n+1} modulo the diagonal.
struct AlphaPrime {
  RationalVector ambient;  ///< representative orthogonal to the diagonal
  RationalVector coords;   ///< coordinates in the simple-coroot basis
  Rational dual_norm2;     ///< (alpha', alpha')^vee
};

inline AlphaPrime alpha_prime(const RootSystem& rs, std::size_t root_index) {
  if (rs.spec().family != Family::A || rs.rank() < 2)
    throw DomainError("alpha' is defined for type A_n with n >= 2, got " + rs.spec().name());
  const Root& a = rs.root(root_index);
  const int dim = rs.ambient_dim();
  int i = -1, j = -1;
  for (int d = 0; d < dim; ++d) {
    if (a.ambient[d] == 1) i = d;
    if (a.ambient[d] == -1) j = d;
  }
  AlphaPrime ap;
  ap.ambient.assign(dim, ratio(-2, dim));
  ap.ambient[i] += 1;
  ap.ambient[j] += 1;
  for (int m = 0; m < rs.rank(); ++m) ap.coords.push_back(detail::dot(rs.fundamental_weights()[m], ap.ambient));
  ap.dual_norm2 = detail::dot(ap.ambient, ap.ambient);
  return ap;
}

/// beta(alpha') for a weight beta.
inline Rational evaluate(const Weight& beta, const AlphaPrime& ap) {
  Rational s = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) s += ap.coords[i] * beta[i];
  return s;
}

}  // namespace trigdunkl
