// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "brsym/brsym.hpp"
#include "table_oracle.hpp"

using namespace brsym;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<CharacterFn> ordinary_and_brauer(const DicyclicGroup& G, std::initializer_list<int> primes) {
  auto out = character_table(G);
  for (int p : primes) {
    for (auto& b : brauer_characters(G, p)) out.push_back(std::move(b));
  }
  return out;
}

Outcome sweep_outcome(const std::vector<SweepSpec>& specs, std::size_t* negatives = nullptr) {
  std::size_t records = 0, disagree = 0, neg = 0;
  std::string first;
  for (auto spec : specs) {
    spec.stop_on_disagreement = false;
    for (const auto& r : verify(spec)) {
      ++records;
      neg += !r.predicted;
      if (!r.agree) {
        ++disagree;
        if (first.empty()) first = " first: " + to_string(r.theorem) + " " + to_string(r.point);
      }
    }
  }
  if (negatives) *negatives = neg;
  return {records > 0 && disagree == 0,
          std::to_string(records) + " records, " + std::to_string(disagree) + " disagreements" + first};
}

Outcome tables() {
  std::size_t cells = 0, bad = 0;
  for (int n = 2; n <= 6; ++n) {
    const DicyclicGroup G(n);
    const auto table = character_table(G);
    for (std::size_t pos = 0; pos < table.size(); ++pos) {
      for (const auto& g : G.elements()) {
        ++cells;
        bad += table[pos].value(G, g) != oracle::table_value(n, static_cast<int>(pos), g);
      }
      for (std::size_t j = 0; j < table.size(); ++j) {
        Cyclotomic sum(Rational(0), G.order());
        for (int x = 0; x < G.order(); ++x) sum += table[pos](x) * table[j](x).conjugate();
        bad += sum != Cyclotomic(pos == j ? G.order() : 0L);
      }
    }
  }
  return {bad == 0, std::to_string(cells) + " cells, " + std::to_string(bad) + " mismatches"};
}

Outcome oracle_equivalence() {
  std::size_t pairs = 0, bad = 0;
  for (int n : {2, 3}) {
    const DicyclicGroup G(n);
    const auto chars = ordinary_and_brauer(G, {2, 3, 5});
    for (int d : {1, 2, 3}) {
      for (const auto& o : poly_orbits(G, d)) {
        for (const auto& phi : chars) {
          std::vector<SymmetrizedVector> vs;
          for (const auto& m : o.members) vs.push_back(symmetrize_poly(G, m, phi));
          for (std::size_t i = 0; i < o.size(); ++i) {
            for (std::size_t j = 0; j < o.size(); ++j) {
              ++pairs;
              bad += gram_poly_closed(G, o.representative, o.transversal[i], o.transversal[j], phi) !=
                     inner_direct(vs[i], vs[j]);
            }
          }
        }
      }
    }
  }
  const DicyclicGroup G(2);
  for (const auto& o : tensor_orbits(G, 2)) {
    for (const auto& chi : ordinary_and_brauer(G, {2, 3, 5})) {
      std::vector<SymmetrizedVector> vs;
      for (const auto& m : o.members) vs.push_back(symmetrize_tensor(G, m, chi, 2));
      for (std::size_t i = 0; i < o.size(); ++i) {
        for (std::size_t j = 0; j < o.size(); ++j) {
          ++pairs;
          bad += gram_tensor_closed(G, o.representative, o.transversal[i], o.transversal[j], chi) !=
                 inner_direct(vs[i], vs[j]);
        }
      }
    }
  }
  return {bad == 0, std::to_string(pairs) + " Gram entries, " + std::to_string(bad) + " discrepancies"};
}

Outcome dimension_formulas() {
  return sweep_outcome({{Theorem::DimensionFormula, {2, 3}, {}, {1, 2}, {}},
                        {Theorem::Decomposition, {2, 3}, {}, {1, 2}, {}}});
}

Outcome linear_brauer_poly() {
  std::size_t negatives = 0;
  auto out = sweep_outcome({{Theorem::LinearBrauerPoly, {2, 3, 5}, {2, 3, 5}, {2}, {}}}, &negatives);
  out.detail += ", " + std::to_string(negatives) + " negative points";
  out.pass = out.pass && negatives > 0;
  return out;
}

Outcome degree2_poly() {
  auto ordinary = sweep_outcome({{Theorem::OrdinaryDegree2Poly, {2, 3, 4, 6}, {}, {2}, {}}});
  // The two Brauer reference points, decided on the orbit of (d,0,...,0) and on the full space.
  bool points_ok = true;
  std::string detail;
  for (const auto& [n, p, h, expected] : {std::tuple{15, 5, 4, false}, std::tuple{3, 3, 1, true}}) {
    const DicyclicGroup G(n);
    const auto phi = brauer_restriction(G, degree2_character(G, h), p);
    std::vector<int> target(G.order(), 0);
    target.back() = 2;
    const auto targeted = decide_obasis(G, PolySpace{2}, phi, [&](const std::vector<int>& r) { return r == target; });
    const auto record = verify_point(Theorem::Degree2BrauerPoly, {n, p, 2, h, false});
    const bool ok = record.predicted == expected && record.computed == expected && record.agree &&
                    (expected || !targeted.verdict);
    points_ok = points_ok && ok;
    detail += " n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",h=" + std::to_string(h) + ":" +
              (record.computed ? "true" : "false");
  }
  return {ordinary.pass && points_ok, "ordinary " + ordinary.detail + ";" + detail};
}

Outcome tensors() {
  return sweep_outcome({{Theorem::LinearBrauerTensor, {2, 3}, {2, 3}, {1, 2}, {}},
                        {Theorem::Degree2BrauerTensor, {2, 3}, {2, 3}, {1, 2}, {}},
                        {Theorem::OrdinaryDegree2Tensor, {2, 3}, {}, {2}, {}}});
}

Outcome brauer_census() {
  std::size_t points = 0, bad = 0;
  for (int n = 2; n <= 6; ++n) {
    const DicyclicGroup G(n);
    for (int p : {2, 3, 5}) {
      ++points;
      bad += brauer_characters(G, p).size() != p_regular_classes(G, p).size();
    }
  }
  return {bad == 0, std::to_string(points) + " (n, p) points, " + std::to_string(bad) + " mismatches"};
}

Outcome property_suites() {
  const std::string cmd = std::string("\"") + BRSYM_PROPERTY_TESTS + "\" --gtest_brief=1 > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return {status == 0, "property_tests exit status " + std::to_string(status)};
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const std::vector<std::tuple<int, std::string, double, std::function<Outcome()>>> criteria = {
      {1, "character tables and first orthogonality, n = 2..6", 1, tables},
      {2, "closed-form Gram entries equal direct expansion", 120, oracle_equivalence},
      {3, "orbital dimension formulas and decomposition count", 60, dimension_formulas},
      {4, "linear Brauer characters on polynomials", 60, linear_brauer_poly},
      {5, "degree-2 characters on polynomials", 300, degree2_poly},
      {6, "tensor criteria", 180, tensors},
      {7, "Brauer character count equals p-regular class count", 10, brauer_census},
      {8, "property suites", 120, property_suites},
  };
  int failures = 0;
  for (const auto& [id, name, budget, check] : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = check();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool pass = out.pass && secs < budget;
    failures += !pass;
    std::ostringstream line;
    line.precision(3);
    line << (pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << out.detail << " (" << std::fixed << secs
         << " s, budget " << budget << " s)";
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
