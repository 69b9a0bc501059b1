#include <gtest/gtest.h>

#include "brsym/characters.hpp"
#include "brsym/orbits.hpp"
#include "brsym/symmetrize.hpp"

using namespace brsym;

namespace {

// Symmetrization by pushing entries along the regular permutation:
// (sigma . x)_{sigma(i)} = x_i.
std::map<std::vector<int>, Cyclotomic> pushed(const DicyclicGroup& G, const std::vector<int>& x,
                                              const CharacterFn& phi) {
  std::map<std::vector<int>, Cyclotomic> out;
  for (const auto& sigma : G.elements()) {
    const int s = G.index(sigma);
    if (!phi.in_domain(s)) continue;
    const auto perm = G.regular_permutation(sigma);
    std::vector<int> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[perm[i]] = x[i];
    auto it = out.try_emplace(y, Cyclotomic(Rational(0), G.order())).first;
    it->second += phi(s);
  }
  const Rational scale = frac(phi.degree(), phi.domain_size());
  std::map<std::vector<int>, Cyclotomic> nonzero;
  for (auto& [k, c] : out) {
    if (!c.is_zero()) nonzero.emplace(k, c * scale);
  }
  return nonzero;
}

std::vector<CharacterFn> all_characters(const DicyclicGroup& G) {
  auto out = character_table(G);
  for (int p : {2, 3, 5}) {
    for (auto& b : brauer_characters(G, p)) out.push_back(std::move(b));
  }
  return out;
}

// T applied to a vector: sum_x v_x T(e_x).
SymmetrizedVector apply_symmetrizer(const DicyclicGroup& G, const SymmetrizedVector& v, const CharacterFn& phi) {
  SymmetrizedVector out = v;
  out.coeffs.clear();
  for (const auto& [key, c] : v.coeffs) {
    for (const auto& [k2, c2] : symmetrize_poly(G, MultiIndex{key}, phi).coeffs) {
      auto it = out.coeffs.try_emplace(k2, Cyclotomic(Rational(0), G.order())).first;
      it->second += c * c2;
    }
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();) it = it->second.is_zero() ? out.coeffs.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST(Symmetrize, MatchesPushForwardDefinition) {
  for (int n : {2, 3}) {
    const DicyclicGroup G(n);
    for (const auto& phi : all_characters(G)) {
      for (const auto& o : poly_orbits(G, 2)) {
        EXPECT_EQ(symmetrize_poly(G, o.representative, phi).coeffs, pushed(G, o.representative.entries, phi));
      }
    }
  }
  const DicyclicGroup G(2);
  for (const auto& phi : all_characters(G)) {
    for (const auto& o : tensor_orbits(G, 2)) {
      EXPECT_EQ(symmetrize_tensor(G, o.representative, phi, 2).coeffs, pushed(G, o.representative.entries, phi));
    }
  }
}

TEST(Symmetrize, OrdinarySymmetrizerIsIdempotent) {
  const DicyclicGroup G(3);
  for (const auto& chi : character_table(G)) {
    for (const auto& o : poly_orbits(G, 2)) {
      const auto v = symmetrize_poly(G, o.representative, chi);
      EXPECT_EQ(apply_symmetrizer(G, v, chi), v) << chi.label();
    }
  }
}

TEST(Symmetrize, ClosedFormMatchesDirectPoly) {
  const DicyclicGroup G(2);
  for (const auto& phi : all_characters(G)) {
    for (const auto& o : poly_orbits(G, 2)) {
      for (std::size_t i = 0; i < o.size(); ++i) {
        const auto vi = symmetrize_poly(G, o.members[i], phi);
        for (std::size_t j = 0; j < o.size(); ++j) {
          const auto vj = symmetrize_poly(G, o.members[j], phi);
          EXPECT_EQ(gram_poly_closed(G, o.representative, o.transversal[i], o.transversal[j], phi), inner_direct(vi, vj));
        }
      }
    }
  }
}

TEST(Symmetrize, ClosedFormMatchesDirectTensor) {
  const DicyclicGroup G(2);
  for (const auto& chi : all_characters(G)) {
    for (const auto& o : tensor_orbits(G, 2)) {
      for (std::size_t i = 0; i < o.size(); ++i) {
        const auto vi = symmetrize_tensor(G, o.members[i], chi, 2);
        for (std::size_t j = 0; j < o.size(); ++j) {
          const auto vj = symmetrize_tensor(G, o.members[j], chi, 2);
          EXPECT_EQ(gram_tensor_closed(G, o.representative, o.transversal[i], o.transversal[j], chi),
                    inner_direct(vi, vj));
        }
      }
    }
  }
}

TEST(Symmetrize, KernelMatchesFreeFunctions) {
  const DicyclicGroup G(3);
  const auto phi = brauer_restriction(G, degree2_character(G, 1), 2);
  GramKernel kernel(G, phi);
  for (const auto& o : poly_orbits(G, 2)) {
    std::vector<int> stab;
    for (const auto& s : o.stabilizer) stab.push_back(G.index(s));
    for (const auto& a : o.transversal) {
      for (const auto& b : o.transversal) {
        EXPECT_EQ(kernel.poly(stab, G.index(a), G.index(b)), gram_poly_closed(G, o.representative, a, b, phi));
      }
    }
  }
}

TEST(Symmetrize, GramIsHermitian) {
  const DicyclicGroup G(3);
  const auto chi = degree2_character(G, 1);
  for (const auto& o : poly_orbits(G, 2)) {
    for (const auto& a : o.transversal) {
      for (const auto& b : o.transversal) {
        EXPECT_EQ(gram_poly_closed(G, o.representative, a, b, chi),
                  gram_poly_closed(G, o.representative, b, a, chi).conjugate());
      }
    }
  }
}

TEST(Symmetrize, NonzeroCriterion) {
  for (int n : {2, 3}) {
    const DicyclicGroup G(n);
    for (const auto& phi : all_characters(G)) {
      for (const auto& o : poly_orbits(G, 2)) {
        EXPECT_EQ(symmetrized_nonzero(G, o.representative, phi), stabilizer_sum_nonzero(G, o.representative, phi));
      }
    }
  }
}

TEST(Symmetrize, OrbitalDimensionFormula) {
  const DicyclicGroup G(2);
  const auto chi = degree2_character(G, 1);
  std::vector<int> x(8, 0);
  x[7] = 2;
  EXPECT_EQ(dim_orbital(G, MultiIndex{x}, chi), 4);
  EXPECT_EQ(dim_orbital(G, MultiIndex{std::vector<int>(8, 0)}, chi), 0);
  EXPECT_EQ(dim_orbital(G, MultiIndex{std::vector<int>(8, 0)}, linear_character(G, 0)), 1);
  EXPECT_THROW(dim_orbital(G, MultiIndex{x}, brauer_restriction(G, chi, 2)), std::domain_error);
}

TEST(Symmetrize, InnerProductRejectsMixedKinds) {
  const DicyclicGroup G(2);
  const auto chi = linear_character(G, 0);
  const auto a = symmetrize_poly(G, MultiIndex{std::vector<int>(8, 0)}, chi);
  const auto b = symmetrize_tensor(G, Sequence{std::vector<int>(8, 1)}, chi, 1);
  EXPECT_THROW(inner_direct(a, b), std::invalid_argument);
  EXPECT_THROW(symmetrize_tensor(G, Sequence{std::vector<int>(8, 2)}, chi, 1), std::invalid_argument);
  EXPECT_THROW(symmetrize_poly(G, MultiIndex{std::vector<int>(12, 0)}, chi), std::invalid_argument);
}
