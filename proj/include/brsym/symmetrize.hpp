#pragma once

// Symmetrized monomials X^{alpha,*} and decomposable symmetrized tensors
// e*_gamma as explicit exact vectors, their Hermitian inner products, and the
// closed-form Gram entries.
//
// With S the domain of phi, both objects are
//     (phi(1)/|S|) sum_{sigma in S} phi(sigma) [basis vector at sigma . x],
// where sigma . x is the left action on index tuples. For monomials
// sigma . alpha = alpha sigma^-1, so this is the usual sum over X^{alpha sigma^-1}.
// Translates are X^{alpha sigma,*} for monomials and e*_{sigma . gamma} for tensors.
// The inner product is conjugate-linear in its second argument.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "brsym/characters.hpp"
#include "brsym/cyclotomic.hpp"
#include "brsym/dicyclic.hpp"
#include "brsym/orbits.hpp"

namespace brsym {

enum class BasisKind { Monomial, Tensor };

inline const char* to_string(BasisKind k) { return k == BasisKind::Monomial ? "monomial" : "tensor"; }

struct SymmetrizedVector {
  BasisKind kind = BasisKind::Monomial;
  int n = 0;
  // Nonzero coefficients only, keyed by basis tuple.
  std::map<std::vector<int>, Cyclotomic> coeffs;
  // Provenance.
  std::vector<int> source;
  std::string character;

  bool is_zero() const { return coeffs.empty(); }

  friend bool operator==(const SymmetrizedVector& a, const SymmetrizedVector& b) {
    return a.kind == b.kind && a.n == b.n && a.coeffs == b.coeffs;
  }
};

namespace detail {

inline SymmetrizedVector symmetrize_left(const DicyclicGroup& G, const std::vector<int>& x,
                                         const CharacterFn& phi, BasisKind kind) {
  if (phi.n() != G.n()) throw std::invalid_argument("character belongs to a different group");
  SymmetrizedVector out;
  out.kind = kind;
  out.n = G.n();
  out.source = x;
  out.character = phi.label();
  for (int sigma : phi.domain_indices()) {
    if (phi(sigma).is_zero()) continue;
    auto y = left_act(G, x, sigma);
    auto it = out.coeffs.find(y);
    if (it == out.coeffs.end()) {
      out.coeffs.emplace(std::move(y), phi(sigma));
    } else {
      it->second += phi(sigma);
    }
  }
  const Rational scale = frac(phi.degree(), phi.domain_size());
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();) {
    if (it->second.is_zero()) {
      it = out.coeffs.erase(it);
    } else {
      it->second *= scale;
      ++it;
    }
  }
  return out;
}

}  // namespace detail

/// X^{alpha,*} = (phi(1)/|S|) sum_{sigma in S} phi(sigma) X^{alpha sigma^-1}.
inline SymmetrizedVector symmetrize_poly(const DicyclicGroup& G, const MultiIndex& alpha, const CharacterFn& phi) {
  check_length(G, alpha.size());
  for (int e : alpha.entries) {
    if (e < 0) throw std::invalid_argument("multi-index entries must be non-negative");
  }
  return detail::symmetrize_left(G, alpha.entries, phi, BasisKind::Monomial);
}

/// e*_gamma in the product basis: the coefficient at beta is
/// (chi(1)/|S|) sum_{sigma in S, sigma . gamma = beta} chi(sigma).
inline SymmetrizedVector symmetrize_tensor(const DicyclicGroup& G, const Sequence& gamma, const CharacterFn& chi,
                                           int dim) {
  check_length(G, gamma.size());
  if (!is_valid(G, gamma, dim)) {
    throw std::invalid_argument("sequence entries must lie in 1.." + std::to_string(dim));
  }
  return detail::symmetrize_left(G, gamma.entries, chi, BasisKind::Tensor);
}

/// sum over shared support of v_x conj(w_x).
inline Cyclotomic inner_direct(const SymmetrizedVector& v, const SymmetrizedVector& w) {
  if (v.kind != w.kind) throw std::invalid_argument("inner product of a monomial and a tensor vector");
  if (v.n != w.n) throw std::invalid_argument("inner product across different groups");
  Cyclotomic sum(Rational(0), 4 * v.n);
  const auto& small = v.coeffs.size() <= w.coeffs.size() ? v.coeffs : w.coeffs;
  const auto& large = v.coeffs.size() <= w.coeffs.size() ? w.coeffs : v.coeffs;
  for (const auto& [key, c] : small) {
    auto it = large.find(key);
    if (it == large.end()) continue;
    const auto& vc = v.coeffs.size() <= w.coeffs.size() ? c : it->second;
    const auto& wc = v.coeffs.size() <= w.coeffs.size() ? it->second : c;
    sum += vc * wc.conjugate();
  }
  return sum;
}

/// The group-algebra element sigma applied to a symmetrized vector: each basis
/// index y goes to sigma . y (X^beta -> X^{beta sigma^-1}, e_beta -> e_{sigma . beta}).
inline SymmetrizedVector apply_element(const DicyclicGroup& G, const SymmetrizedVector& v, const DicyclicElement& sigma) {
  SymmetrizedVector out = v;
  out.coeffs.clear();
  for (const auto& [key, c] : v.coeffs) out.coeffs.emplace(detail::left_act(G, key, G.index(sigma)), c);
  return out;
}

namespace detail {

inline std::vector<int> stabilizer_indices(const DicyclicGroup& G, const std::vector<int>& x) {
  std::vector<int> out;
  for (int g = 0; g < G.order(); ++g) {
    if (left_act(G, x, g) == x) out.push_back(g);
  }
  return out;
}

}  // namespace detail

/// <X^{alpha sigma1,*}, X^{alpha sigma2,*}> in closed form:
///   (phi(1)^2/|S|^2) sum_{mu in S} sum_{tau in sigma1 mu^-1 sigma2^-1 S cap G_alpha}
///       phi(mu) conj(phi(sigma2 mu sigma1^-1 tau)).
/// Valid for class functions on conjugation-closed S, which covers every
/// ordinary and Brauer character here.
inline Cyclotomic gram_poly_closed(const DicyclicGroup& G, const MultiIndex& alpha, const DicyclicElement& sigma1,
                                   const DicyclicElement& sigma2, const CharacterFn& phi) {
  check_length(G, alpha.size());
  const auto stab = detail::stabilizer_indices(G, alpha.entries);
  const int s1_inv = G.inv(G.index(sigma1));
  const int s2 = G.index(sigma2);
  Cyclotomic sum(Rational(0), G.order());
  for (int mu : phi.domain_indices()) {
    if (phi(mu).is_zero()) continue;
    const int prefix = G.mul(G.mul(s2, mu), s1_inv);  // sigma2 mu sigma1^-1
    for (int tau : stab) {
      const int rho = G.mul(prefix, tau);
      if (!phi.in_domain(rho) || phi(rho).is_zero()) continue;
      sum += phi(mu) * phi(rho).conjugate();
    }
  }
  const long deg = phi.degree();
  const long sz = phi.domain_size();
  return sum * frac(deg * deg, sz * sz);
}

/// <e*_{sigma1 . gamma}, e*_{sigma2 . gamma}> in closed form. For an
/// irreducible ordinary character this is the coset sum
///   (chi(1)/|G|) sum_{x in sigma2 G_gamma sigma1^-1} chi(x);
/// otherwise (Brauer characters, where S is not a subgroup) the double sum
///   (chi(1)^2/|S|^2) sum_{mu in S} sum_{tau in G_gamma, rho in S} chi(mu) conj(chi(rho)),
///   rho = mu sigma1 tau^-1 sigma2^-1.
inline Cyclotomic gram_tensor_closed(const DicyclicGroup& G, const Sequence& gamma, const DicyclicElement& sigma1,
                                     const DicyclicElement& sigma2, const CharacterFn& chi) {
  check_length(G, gamma.size());
  const auto stab = detail::stabilizer_indices(G, gamma.entries);
  const int s1 = G.index(sigma1);
  const int s2 = G.index(sigma2);
  Cyclotomic sum(Rational(0), G.order());
  if (chi.irreducible_ordinary()) {
    const int s1_inv = G.inv(s1);
    for (int tau : stab) sum += chi(G.mul(G.mul(s2, tau), s1_inv));
    return sum * frac(chi.degree(), G.order());
  }
  const int s2_inv = G.inv(s2);
  for (int mu : chi.domain_indices()) {
    if (chi(mu).is_zero()) continue;
    const int prefix = G.mul(mu, s1);
    for (int tau : stab) {
      const int rho = G.mul(G.mul(prefix, G.inv(tau)), s2_inv);
      if (!chi.in_domain(rho) || chi(rho).is_zero()) continue;
      sum += chi(mu) * chi(rho).conjugate();
    }
  }
  const long deg = chi.degree();
  const long sz = chi.domain_size();
  return sum * frac(deg * deg, sz * sz);
}

/// Closed-form Gram entries for one character with memoized products
/// phi(mu) conj(phi(rho)); agrees with gram_poly_closed and gram_tensor_closed.
class GramKernel {
 public:
  GramKernel(const DicyclicGroup& G, const CharacterFn& phi)
      : G_(G), phi_(phi), products_(static_cast<std::size_t>(G.order()) * G.order()) {
    const long deg = phi.degree();
    const long sz = phi.domain_size();
    double_scale_ = frac(deg * deg, sz * sz);
  }

  Cyclotomic poly(const std::vector<int>& stab, int sigma1, int sigma2) {
    const int s1_inv = G_.inv(sigma1);
    Cyclotomic sum(Rational(0), G_.order());
    for (int mu : phi_.domain_indices()) {
      if (phi_(mu).is_zero()) continue;
      const int prefix = G_.mul(G_.mul(sigma2, mu), s1_inv);
      for (int tau : stab) accumulate(sum, mu, G_.mul(prefix, tau));
    }
    return sum * double_scale_;
  }

  Cyclotomic tensor(const std::vector<int>& stab, int sigma1, int sigma2) {
    Cyclotomic sum(Rational(0), G_.order());
    if (phi_.irreducible_ordinary()) {
      const int s1_inv = G_.inv(sigma1);
      for (int tau : stab) sum += phi_(G_.mul(G_.mul(sigma2, tau), s1_inv));
      return sum * frac(phi_.degree(), G_.order());
    }
    const int s2_inv = G_.inv(sigma2);
    for (int mu : phi_.domain_indices()) {
      if (phi_(mu).is_zero()) continue;
      const int prefix = G_.mul(mu, sigma1);
      for (int tau : stab) accumulate(sum, mu, G_.mul(G_.mul(prefix, G_.inv(tau)), s2_inv));
    }
    return sum * double_scale_;
  }

 private:
  void accumulate(Cyclotomic& sum, int mu, int rho) {
    if (!phi_.in_domain(rho) || phi_(rho).is_zero()) return;
    auto& slot = products_[static_cast<std::size_t>(mu) * G_.order() + rho];
    if (!slot) slot = phi_(mu) * phi_(rho).conjugate();
    sum += *slot;
  }

  const DicyclicGroup& G_;
  const CharacterFn& phi_;
  Rational double_scale_;
  std::vector<std::optional<Cyclotomic>> products_;
};

/// Orbital dimension formula sum_i chi_i(1) (chi_i, 1)_{G_x} over the
/// irreducible constituents chi_i of an ordinary character; for irreducible
/// chi this is (chi(1)/|G_x|) sum_{sigma in G_x} chi(sigma). Throws if the
/// value is not a non-negative integer or the character is a Brauer character.
inline long dim_orbital(const DicyclicGroup& G, const std::vector<DicyclicElement>& stabilizer, const CharacterFn& chi) {
  if (!chi.full_domain()) throw std::domain_error("orbital dimension formula needs an ordinary character");
  std::vector<int> stab;
  for (const auto& g : stabilizer) stab.push_back(G.index(g));
  const auto table = character_table(G);
  Cyclotomic total(Rational(0), G.order());
  for (const auto& [pos, mult] : decompose(G, chi)) {
    total += trivial_multiplicity(table[pos], stab) * Rational(table[pos].degree());
  }
  if (!total.is_rational() || total.rational_value().get_den() != 1 || total.rational_value() < 0) {
    throw std::domain_error("orbital dimension formula gave a non-integer value " + total.to_string());
  }
  return total.rational_value().get_num().get_si();
}

template <class Tuple>
long dim_orbital(const DicyclicGroup& G, const Tuple& x, const CharacterFn& chi) {
  return dim_orbital(G, stabilizer(G, x), chi);
}

/// Membership in Omega / Delta-bar by the direct nonzero test.
template <class Tuple>
bool symmetrized_nonzero(const DicyclicGroup& G, const Tuple& x, const CharacterFn& phi) {
  return !detail::symmetrize_left(G, detail::raw(x), phi,
                                  std::is_same_v<Tuple, MultiIndex> ? BasisKind::Monomial : BasisKind::Tensor)
              .is_zero();
}

/// The character-sum condition sum_{sigma in G_x cap S} phi(sigma) != 0.
template <class Tuple>
bool stabilizer_sum_nonzero(const DicyclicGroup& G, const Tuple& x, const CharacterFn& phi) {
  Cyclotomic sum(Rational(0), G.order());
  for (int g : detail::stabilizer_indices(G, detail::raw(x))) {
    if (phi.in_domain(g)) sum += phi(g);
  }
  return !sum.is_zero();
}

/// Translate of an orbit member by its transversal element, symmetrized.
inline SymmetrizedVector translate_poly(const DicyclicGroup& G, const MultiIndex& alpha, const DicyclicElement& sigma,
                                        const CharacterFn& phi) {
  return symmetrize_poly(G, act_poly(G, alpha, sigma), phi);
}

inline SymmetrizedVector translate_tensor(const DicyclicGroup& G, const Sequence& gamma, const DicyclicElement& sigma,
                                          const CharacterFn& chi, int dim) {
  return symmetrize_tensor(G, act_tensor(G, gamma, sigma), chi, dim);
}

}  // namespace brsym
