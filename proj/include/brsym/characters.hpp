#pragma once

// Ordinary and Brauer characters of T_4n.
//
// All values live in Q(z_4n): z_4n^n = i and z_4n^2 = exp(pi i / n). The
// linear characters are fixed by their images of the generators r and s;
// the degree-2 characters are chi_h(r^a) = w^(ah) + w^(-ah), chi_h(r^a s) = 0
// with w = exp(pi i / n). Brauer characters are restrictions of these to the
// p-regular elements.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brsym/cyclotomic.hpp"
#include "brsym/dicyclic.hpp"

namespace brsym {

enum class CharacterKind { OrdinaryLinear, OrdinaryDegree2, BrauerLinear, BrauerDegree2 };

inline bool is_brauer(CharacterKind k) {
  return k == CharacterKind::BrauerLinear || k == CharacterKind::BrauerDegree2;
}

inline bool is_linear(CharacterKind k) {
  return k == CharacterKind::OrdinaryLinear || k == CharacterKind::BrauerLinear;
}

/// A class function on a subset S of T_4n containing e.
class CharacterFn {
 public:
  CharacterFn(int n, CharacterKind kind, int index, std::vector<bool> domain,
              std::vector<Cyclotomic> values, int prime = 0)
      : n_(n),
        kind_(kind),
        index_(index),
        prime_(prime),
        domain_(std::move(domain)),
        values_(std::move(values)) {
    if (domain_.size() != static_cast<std::size_t>(4 * n) || values_.size() != domain_.size()) {
      throw std::invalid_argument("character tables must cover all 4n elements");
    }
    if (!domain_[0]) throw std::invalid_argument("character domain must contain the identity");
    for (std::size_t x = 0; x < domain_.size(); ++x) {
      if (domain_[x]) domain_indices_.push_back(static_cast<int>(x));
    }
    if (!values_[0].is_rational()) throw std::invalid_argument("character degree must be rational");
    const Rational& deg = values_[0].rational_value();
    if (deg.get_den() != 1 || deg <= 0) throw std::invalid_argument("character degree must be a positive integer");
    degree_ = static_cast<int>(deg.get_num().get_si());
    if (full_domain()) {
      Cyclotomic norm(Rational(0), 4 * n);
      for (const auto& v : values_) norm += v * v.conjugate();
      irreducible_ = norm == Cyclotomic(Rational(4 * n), 4 * n);
    }
  }

  int n() const { return n_; }
  CharacterKind kind() const { return kind_; }
  int index() const { return index_; }
  int prime() const { return prime_; }
  int degree() const { return degree_; }
  bool brauer() const { return is_brauer(kind_); }
  bool linear() const { return is_linear(kind_); }

  bool in_domain(int x) const { return domain_[x]; }
  const std::vector<bool>& domain() const { return domain_; }
  const std::vector<int>& domain_indices() const { return domain_indices_; }
  int domain_size() const { return static_cast<int>(domain_indices_.size()); }
  bool full_domain() const { return domain_size() == 4 * n_; }

  /// True for an irreducible ordinary character ((chi, chi)_G = 1).
  bool irreducible_ordinary() const { return irreducible_; }

  /// Value at the element with canonical index x; zero outside the domain.
  const Cyclotomic& operator()(int x) const { return values_[x]; }
  const Cyclotomic& value(const DicyclicGroup& G, const DicyclicElement& g) const {
    return values_[G.index(g)];
  }
  const std::vector<Cyclotomic>& values() const { return values_; }

  /// "psi:j" or "chi:h".
  std::string label() const {
    return (linear() ? "psi:" : "chi:") + std::to_string(index_);
  }

 private:
  int n_;
  CharacterKind kind_;
  int index_;
  int prime_;
  int degree_ = 1;
  bool irreducible_ = false;
  std::vector<bool> domain_;
  std::vector<Cyclotomic> values_;
  std::vector<int> domain_indices_;
};

namespace detail {

// Exponents of psi_j(r) and psi_j(s) as powers of z_4n.
inline std::pair<long, long> linear_generator_exponents(int n, int j) {
  const long m = 4L * n;
  const long minus_one = m / 2;
  if (n % 2 == 0) {
    // Klein four quotient: psi(r), psi(s) in {1, -1} independently.
    switch (j) {
      case 0: return {0, 0};
      case 1: return {minus_one, 0};
      case 2: return {0, minus_one};
      case 3: return {minus_one, minus_one};
    }
  } else {
    // Cyclic quotient of order 4 generated by the image of s; psi(r) = psi(s)^2.
    const long quarter = n;  // z_4n^n = i
    switch (j) {
      case 0: return {0, 0};
      case 1: return {2 * quarter, quarter};
      case 2: return {0, 2 * quarter};
      case 3: return {2 * quarter, 3 * quarter};
    }
  }
  throw std::invalid_argument("linear character index must be in 0..3");
}

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace detail

/// psi_j, 0 <= j < 4.
inline CharacterFn linear_character(const DicyclicGroup& G, int j) {
  const auto [er, es] = detail::linear_generator_exponents(G.n(), j);
  std::vector<Cyclotomic> values;
  values.reserve(G.order());
  for (const auto& g : G.elements()) values.push_back(root_of_unity(G.order(), g.a * er + g.b * es));
  return CharacterFn(G.n(), CharacterKind::OrdinaryLinear, j, std::vector<bool>(G.order(), true),
                     std::move(values));
}

/// chi_h(r^a) = w^(ah) + w^(-ah), chi_h(r^a s) = 0. Irreducible for 1 <= h <= n-1.
inline CharacterFn degree2_character(const DicyclicGroup& G, int h) {
  if (h < 1) throw std::invalid_argument("degree-2 character index must be >= 1");
  std::vector<Cyclotomic> values;
  values.reserve(G.order());
  for (const auto& g : G.elements()) {
    if (g.b) {
      values.emplace_back(Rational(0), G.order());
    } else {
      const long e = 2L * g.a * h;
      values.push_back(root_of_unity(G.order(), e) + root_of_unity(G.order(), -e));
    }
  }
  return CharacterFn(G.n(), CharacterKind::OrdinaryDegree2, h, std::vector<bool>(G.order(), true),
                     std::move(values));
}

/// Ordinary irreducible characters: psi_0..psi_3, then chi_1..chi_(n-1).
inline std::vector<CharacterFn> character_table(const DicyclicGroup& G) {
  std::vector<CharacterFn> out;
  for (int j = 0; j < 4; ++j) out.push_back(linear_character(G, j));
  for (int h = 1; h <= G.n() - 1; ++h) out.push_back(degree2_character(G, h));
  return out;
}

/// Elements whose order is prime to p, in canonical order.
inline std::vector<DicyclicElement> p_regular_elements(const DicyclicGroup& G, int p) {
  if (!detail::is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  std::vector<DicyclicElement> out;
  for (int x = 0; x < G.order(); ++x) {
    if (G.order_of(x) % p != 0) out.push_back(G.element(x));
  }
  return out;
}

/// Conjugacy classes consisting of p-regular elements.
inline std::vector<std::vector<DicyclicElement>> p_regular_classes(const DicyclicGroup& G, int p) {
  if (!detail::is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  std::vector<std::vector<DicyclicElement>> out;
  for (auto& klass : G.conjugacy_classes()) {
    if (G.element_order(klass.front()) % p != 0) out.push_back(std::move(klass));
  }
  return out;
}

/// Restriction of a character to a subset containing e; the kind is kept.
inline CharacterFn restrict_to(const DicyclicGroup& G, const CharacterFn& chi, const std::vector<int>& subset) {
  std::vector<bool> domain(G.order(), false);
  for (int x : subset) domain[x] = chi.in_domain(x);
  std::vector<Cyclotomic> values = chi.values();
  for (int x = 0; x < G.order(); ++x) {
    if (!domain[x]) values[x] = Cyclotomic(Rational(0), G.order());
  }
  return CharacterFn(G.n(), chi.kind(), chi.index(), std::move(domain), std::move(values), chi.prime());
}

/// Restriction of an ordinary character to the p-regular elements.
inline CharacterFn brauer_restriction(const DicyclicGroup& G, const CharacterFn& chi, int p) {
  if (chi.brauer()) throw std::invalid_argument("character is already a Brauer character");
  std::vector<bool> domain(G.order(), false);
  for (const auto& g : p_regular_elements(G, p)) domain[G.index(g)] = true;
  std::vector<Cyclotomic> values = chi.values();
  for (int x = 0; x < G.order(); ++x) {
    if (!domain[x]) values[x] = Cyclotomic(Rational(0), G.order());
  }
  const auto kind = chi.linear() ? CharacterKind::BrauerLinear : CharacterKind::BrauerDegree2;
  return CharacterFn(G.n(), kind, chi.index(), std::move(domain), std::move(values), p);
}

/// Writes 4n = p^t l with p not dividing l.
struct PrimeSplit {
  int p;
  int t;
  long p_power;  // p^t
  long l;
};

inline PrimeSplit split_order(int n, int p) {
  if (!detail::is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  PrimeSplit out{p, 0, 1, 4L * n};
  while (out.l % p == 0) {
    out.l /= p;
    out.p_power *= p;
    ++out.t;
  }
  return out;
}

/// Number of linear Brauer characters: 4 for odd p, 1 for p = 2.
inline int linear_brauer_count(int p) { return p == 2 ? 1 : 4; }

/// Order of the p-regular part of <r>.
inline int p_regular_rotation_count(const DicyclicGroup& G, int p) {
  int count = 0;
  for (int a = 0; a < 2 * G.n(); ++a) {
    if (G.order_of(a) % p != 0) ++count;
  }
  return count;
}

/// Irreducible Brauer characters: the linear restrictions psi^_j (j < eps)
/// and chi^_h for 1 <= h < c/2, where c is the order of the p-regular part of <r>.
inline std::vector<CharacterFn> brauer_characters(const DicyclicGroup& G, int p) {
  std::vector<CharacterFn> out;
  for (int j = 0; j < linear_brauer_count(p); ++j) {
    out.push_back(brauer_restriction(G, linear_character(G, j), p));
  }
  const int c = p_regular_rotation_count(G, p);
  for (int h = 1; 2 * h < c; ++h) out.push_back(brauer_restriction(G, degree2_character(G, h), p));
  return out;
}

/// (phi, psi)_K = (1/|K|) sum_{x in K} phi(x) psi(x^-1).
inline Cyclotomic class_inner_product(const DicyclicGroup& G, const CharacterFn& phi,
                                      const CharacterFn& psi, const std::vector<int>& subset) {
  Cyclotomic sum(Rational(0), G.order());
  for (int x : subset) sum += phi(x) * psi(G.inv(x));
  return sum * frac(1, static_cast<long>(subset.size()));
}

/// (phi, 1)_K.
inline Cyclotomic trivial_multiplicity(const CharacterFn& phi, const std::vector<int>& subset) {
  Cyclotomic sum(Rational(0), 4 * phi.n());
  for (int x : subset) sum += phi(x);
  return sum * frac(1, static_cast<long>(subset.size()));
}

/// Multiplicities of the ordinary irreducibles in an ordinary character,
/// as (table position, multiplicity) pairs with positive multiplicity.
inline std::vector<std::pair<int, int>> decompose(const DicyclicGroup& G, const CharacterFn& psi) {
  if (!psi.full_domain()) throw std::invalid_argument("decompose requires an ordinary character");
  std::vector<int> all(G.order());
  for (int x = 0; x < G.order(); ++x) all[x] = x;
  std::vector<std::pair<int, int>> out;
  const auto table = character_table(G);
  for (std::size_t i = 0; i < table.size(); ++i) {
    Cyclotomic m = class_inner_product(G, psi, table[i], all);
    if (!m.is_rational() || m.rational_value().get_den() != 1 || m.rational_value() < 0) {
      throw std::domain_error("character is not a non-negative integer combination of irreducibles");
    }
    const long k = m.rational_value().get_num().get_si();
    if (k > 0) out.emplace_back(static_cast<int>(i), static_cast<int>(k));
  }
  return out;
}

/// Sum of ordinary characters as a new ordinary character (kind follows degree).
inline CharacterFn character_sum(const DicyclicGroup& G, const std::vector<CharacterFn>& parts) {
  if (parts.empty()) throw std::invalid_argument("character_sum of nothing");
  std::vector<Cyclotomic> values(G.order(), Cyclotomic(Rational(0), G.order()));
  for (const auto& c : parts) {
    if (!c.full_domain()) throw std::invalid_argument("character_sum requires ordinary characters");
    for (int x = 0; x < G.order(); ++x) values[x] += c(x);
  }
  const bool lin = values[0] == Cyclotomic(Rational(1), G.order());
  return CharacterFn(G.n(), lin ? CharacterKind::OrdinaryLinear : CharacterKind::OrdinaryDegree2, -1,
                     std::vector<bool>(G.order(), true), std::move(values));
}

}  // namespace brsym
