#pragma once

// Verification sweeps: for each parameter point, the closed-form existence
// criterion for an orthogonal basis is compared with the verdict computed by
// decide_obasis, and the structural identities (orthogonal decomposition,
// dimension formulas, Brauer character count, table orthogonality) are
// checked exactly.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <sstream>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "brsym/characters.hpp"
#include "brsym/obasis.hpp"
#include "brsym/orbits.hpp"
#include "brsym/symmetrize.hpp"

namespace brsym {

enum class Theorem {
  LinearBrauerPoly,       // o-basis iff p = 2 or p does not divide 4n
  Degree2BrauerPoly,      // o-basis iff l' = l / gcd(l, h) is even
  OrdinaryDegree2Poly,    // o-basis iff n = 0 mod 2 h_2
  LinearBrauerTensor,     // o-basis iff dim V = 1, p = 2, or p does not divide 4n
  Degree2BrauerTensor,    // o-basis iff dim V = 1 or l' is even
  OrdinaryDegree2Tensor,  // dim V >= 2: o-basis iff n = 0 mod 2 h_2
  Decomposition,          // sum over Irr of dim H_d(G; chi) = |Gamma|, cross terms vanish
  DimensionFormula,       // orbital rank = sum chi_i(1) (chi_i, 1)_{G_alpha}
  BrauerCount,            // |IBr| = number of p-regular classes
  TableOrthogonality,     // sum_g chi_i(g) conj(chi_j(g)) = 4n delta_ij
};

struct TheoremName {
  Theorem id;
  const char* name;
  const char* alias;
};

inline constexpr TheoremName kTheoremNames[] = {
    {Theorem::LinearBrauerPoly, "linear-brauer-poly", "2.3"},
    {Theorem::Degree2BrauerPoly, "degree2-brauer-poly", "2.4"},
    {Theorem::OrdinaryDegree2Poly, "ordinary-degree2-poly", "2.5"},
    {Theorem::LinearBrauerTensor, "linear-brauer-tensor", "3.1"},
    {Theorem::Degree2BrauerTensor, "degree2-brauer-tensor", "3.2"},
    {Theorem::OrdinaryDegree2Tensor, "ordinary-degree2-tensor", "3.3"},
    {Theorem::Decomposition, "decomposition", "1.1"},
    {Theorem::DimensionFormula, "dimension-formula", "1.3"},
    {Theorem::BrauerCount, "brauer-count", "2.1"},
    {Theorem::TableOrthogonality, "table-orthogonality", "tables"},
};

inline std::string to_string(Theorem t) {
  for (const auto& e : kTheoremNames) {
    if (e.id == t) return e.name;
  }
  return "unknown";
}

inline Theorem parse_theorem(const std::string& s) {
  for (const auto& e : kTheoremNames) {
    if (s == e.name || s == e.alias) return e.id;
  }
  if (s == "1.7") return Theorem::DimensionFormula;
  throw std::invalid_argument("unknown theorem id: " + s);
}

inline bool is_tensor_theorem(Theorem t) {
  return t == Theorem::LinearBrauerTensor || t == Theorem::Degree2BrauerTensor ||
         t == Theorem::OrdinaryDegree2Tensor;
}

/// One parameter point. `space` is d for polynomial theorems and dim V for
/// tensor theorems; `index` is j for linear and h for degree-2 characters.
struct ParameterPoint {
  int n = 0;
  int p = 0;  // 0 when the theorem takes no prime
  int space = 0;
  int index = 0;
  bool tensor = false;

  friend bool operator==(const ParameterPoint&, const ParameterPoint&) = default;
};

inline std::string to_string(const ParameterPoint& pt) {
  std::string out = "n=" + std::to_string(pt.n);
  if (pt.p) out += " p=" + std::to_string(pt.p);
  out += (pt.tensor ? " dimV=" : " d=") + std::to_string(pt.space);
  out += " index=" + std::to_string(pt.index);
  return out;
}

class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class WorkCeilingExceeded : public std::runtime_error {
 public:
  WorkCeilingExceeded(const ParameterPoint& pt, double work, double ceiling)
      : std::runtime_error("work ceiling exceeded at " + to_string(pt) + ": " + format(work) + " > " + format(ceiling)),
        point(pt) {}
  ParameterPoint point;

 private:
  static std::string format(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
  }
};

/// 2-part of h.
inline long two_part(long h) {
  long out = 1;
  while (h % 2 == 0 && h != 0) {
    h /= 2;
    out *= 2;
  }
  return out;
}

/// l' = l / gcd(l, h) for 4n = p^t l.
inline long reduced_l(int n, int p, long h) {
  const long l = split_order(n, p).l;
  return l / std::gcd(l, h);
}

/// The closed-form verdict of the named criterion at a parameter point.
/// Throws HypothesisError outside the criterion's parameter range.
inline bool predict(Theorem t, const ParameterPoint& pt) {
  if (pt.n < 1) throw HypothesisError("n must be >= 1");
  auto require_prime = [&] {
    if (!detail::is_prime(pt.p)) throw HypothesisError("criterion needs a prime p");
  };
  switch (t) {
    case Theorem::LinearBrauerPoly:
    case Theorem::LinearBrauerTensor: {
      require_prime();
      if (pt.index < 0 || pt.index >= linear_brauer_count(pt.p)) {
        throw HypothesisError("linear Brauer index must satisfy 0 <= j < eps");
      }
      const bool base = pt.p == 2 || (4L * pt.n) % pt.p != 0;
      return t == Theorem::LinearBrauerTensor ? (pt.space == 1 || base) : base;
    }
    case Theorem::Degree2BrauerPoly:
    case Theorem::Degree2BrauerTensor: {
      require_prime();
      const long l = split_order(pt.n, pt.p).l;
      if (pt.index < 1 || 2L * pt.index >= l) throw HypothesisError("degree-2 index must satisfy 1 <= h < l/2");
      const bool even = reduced_l(pt.n, pt.p, pt.index) % 2 == 0;
      return t == Theorem::Degree2BrauerTensor ? (pt.space == 1 || even) : even;
    }
    case Theorem::OrdinaryDegree2Poly:
    case Theorem::OrdinaryDegree2Tensor: {
      if (pt.index < 1 || pt.index > pt.n - 1) throw HypothesisError("degree-2 index must satisfy 1 <= h <= n-1");
      if (t == Theorem::OrdinaryDegree2Tensor && pt.space < 2) throw HypothesisError("criterion assumes dim V >= 2");
      return pt.n % (2 * two_part(pt.index)) == 0;
    }
    case Theorem::BrauerCount:
      require_prime();
      return true;
    case Theorem::Decomposition:
    case Theorem::DimensionFormula:
    case Theorem::TableOrthogonality:
      return true;
  }
  throw HypothesisError("unknown criterion");
}

/// Exact Gram matrix and search data for an orbit that contradicts a prediction.
struct Counterexample {
  std::vector<int> representative;
  std::vector<DicyclicElement> translates;
  std::vector<std::vector<Cyclotomic>> gram;  // closed form, rows/cols = translates
  std::size_t rank = 0;
  long search_nodes = 0;
  bool has_obasis = false;
};

struct VerificationRecord {
  Theorem theorem = Theorem::TableOrthogonality;
  ParameterPoint point;
  std::string character;  // "psi:j" / "chi:h", empty when not applicable
  bool brauer = false;
  bool predicted = false;
  bool computed = false;
  bool agree = false;
  std::string detail;
  std::optional<OrbitRecord> witness_orbit;     // the orbit of (d,0,...,0) or (1,...,1,2)
  std::optional<Counterexample> counterexample;  // present when !agree
};

struct SweepSpec {
  Theorem theorem = Theorem::LinearBrauerPoly;
  std::vector<int> ns;
  std::vector<int> primes;
  std::vector<int> spaces;   // d values, or dim V values for tensor criteria
  std::vector<int> indices;  // empty: every index inside the hypothesis
  bool stop_on_disagreement = true;
  double work_ceiling = 0;  // 0: default_work_ceiling()
  int threads = 1;
};

/// BRSYM_WORK_CEILING, else 2e6 units of |G| * |Gamma|.
inline double default_work_ceiling() {
  if (const char* env = std::getenv("BRSYM_WORK_CEILING")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("BRSYM_WORK_CEILING is not a number: ") + env);
    }
  }
  return 2e6;
}

/// |G| * |Gamma| for the space at a point.
inline double work_units(const ParameterPoint& pt) {
  const double m = 4.0 * pt.n;
  if (pt.tensor) return m * std::pow(static_cast<double>(pt.space), m);
  return m * static_cast<double>(multiset_count(4 * pt.n, pt.space));
}

namespace detail {

inline std::vector<int> witness_tuple(const ParameterPoint& pt) {
  const int m = 4 * pt.n;
  if (pt.tensor) {
    std::vector<int> x(m, 1);
    if (pt.space >= 2) x[m - 1] = 2;
    return x;
  }
  std::vector<int> x(m, 0);
  x[m - 1] = pt.space;
  return x;
}

template <class Tuple>
Counterexample make_counterexample(const DicyclicGroup& G, const OrbitData<Tuple>& orbit, const CharacterFn& phi,
                                   const typename SpaceTraits<Tuple>::Space& space) {
  Counterexample ce;
  ce.representative = raw(orbit.representative);
  ce.translates = orbit.transversal;
  GramKernel kernel(G, phi);
  std::vector<int> stab;
  for (const auto& s : orbit.stabilizer) stab.push_back(G.index(s));
  for (const auto& a : orbit.transversal) {
    std::vector<Cyclotomic> row;
    for (const auto& b : orbit.transversal) row.push_back(SpaceTraits<Tuple>::gram(kernel, stab, G.index(a), G.index(b)));
    ce.gram.push_back(std::move(row));
  }
  const auto rec = analyze_orbit(G, orbit, phi, space, kernel);
  ce.rank = rec.rank;
  ce.search_nodes = rec.search_nodes;
  ce.has_obasis = rec.has_obasis;
  return ce;
}

inline CharacterFn character_for(const DicyclicGroup& G, Theorem t, const ParameterPoint& pt) {
  switch (t) {
    case Theorem::LinearBrauerPoly:
    case Theorem::LinearBrauerTensor:
      return brauer_restriction(G, linear_character(G, pt.index), pt.p);
    case Theorem::Degree2BrauerPoly:
    case Theorem::Degree2BrauerTensor:
      return brauer_restriction(G, degree2_character(G, pt.index), pt.p);
    default:
      return degree2_character(G, pt.index);
  }
}

inline VerificationRecord verify_obasis_point(Theorem t, const ParameterPoint& pt) {
  VerificationRecord rec;
  rec.theorem = t;
  rec.point = pt;
  rec.predicted = predict(t, pt);
  const DicyclicGroup G(pt.n);
  const CharacterFn phi = character_for(G, t, pt);
  rec.character = phi.label();
  rec.brauer = phi.brauer();
  const auto witness = witness_tuple(pt);
  std::size_t failing = 0;
  bool found_failure = false;
  if (pt.tensor) {
    const auto report = decide_obasis(G, TensorSpace{pt.space}, phi);
    rec.computed = report.verdict;
    for (std::size_t k = 0; k < report.orbits.size(); ++k) {
      if (report.orbits[k].representative == canonicalize(G, Sequence{witness}).entries) rec.witness_orbit = report.orbits[k];
      if (!found_failure && !report.orbits[k].has_obasis) {
        failing = k;
        found_failure = true;
      }
    }
    rec.detail = "dimension " + std::to_string(report.total_dimension) + ", " +
                 std::to_string(report.orbits.size()) + " orbits";
    if (rec.computed != rec.predicted) {
      const auto& rep = found_failure ? report.orbits[failing].representative : witness;
      rec.counterexample = make_counterexample(G, orbit_of(G, Sequence{rep}), phi, TensorSpace{pt.space});
    }
  } else {
    const auto report = decide_obasis(G, PolySpace{pt.space}, phi);
    rec.computed = report.verdict;
    for (std::size_t k = 0; k < report.orbits.size(); ++k) {
      if (report.orbits[k].representative == canonicalize(G, MultiIndex{witness}).entries) rec.witness_orbit = report.orbits[k];
      if (!found_failure && !report.orbits[k].has_obasis) {
        failing = k;
        found_failure = true;
      }
    }
    rec.detail = "dimension " + std::to_string(report.total_dimension) + ", " +
                 std::to_string(report.orbits.size()) + " orbits";
    if (rec.computed != rec.predicted) {
      const auto& rep = found_failure ? report.orbits[failing].representative : witness;
      rec.counterexample = make_counterexample(G, orbit_of(G, MultiIndex{rep}), phi, PolySpace{pt.space});
    }
  }
  rec.agree = rec.predicted == rec.computed;
  return rec;
}

// Sum of orbital ranks over Irr(G) equals |Gamma|, and translates for
// distinct irreducibles are orthogonal.
template <class Tuple>
bool check_decomposition(const DicyclicGroup& G, const std::vector<OrbitData<Tuple>>& orbits,
                         const typename SpaceTraits<Tuple>::Space& space, std::uint64_t expected, std::string& detail) {
  const auto table = character_table(G);
  std::uint64_t total = 0;
  bool cross_ok = true;
  for (const auto& orbit : orbits) {
    std::vector<std::vector<SymmetrizedVector>> per_char;
    for (const auto& chi : table) {
      per_char.push_back(translates(G, orbit, chi, space));
      total += rank_of(orbit, per_char.back());
    }
    for (std::size_t a = 0; a < table.size() && cross_ok; ++a) {
      for (std::size_t b = a + 1; b < table.size() && cross_ok; ++b) {
        for (const auto& v : per_char[a]) {
          for (const auto& w : per_char[b]) {
            if (!inner_direct(v, w).is_zero()) cross_ok = false;
          }
        }
      }
    }
  }
  detail = "sum of ranks " + std::to_string(total) + ", expected " + std::to_string(expected) +
           (cross_ok ? ", cross terms vanish" : ", nonzero cross term");
  return total == expected && cross_ok;
}

template <class Tuple>
bool check_dimension_formula(const DicyclicGroup& G, const std::vector<OrbitData<Tuple>>& orbits,
                             const typename SpaceTraits<Tuple>::Space& space, std::string& detail) {
  std::size_t checked = 0;
  for (const auto& chi : character_table(G)) {
    for (const auto& orbit : orbits) {
      const auto rank = rank_of(orbit, translates(G, orbit, chi, space));
      const long formula = dim_orbital(G, orbit.stabilizer, chi);
      ++checked;
      if (static_cast<long>(rank) != formula) {
        detail = chi.label() + " at " + to_string(raw(orbit.representative)) + ": rank " + std::to_string(rank) +
                 " vs formula " + std::to_string(formula);
        return false;
      }
    }
  }
  detail = std::to_string(checked) + " (character, orbit) pairs agree";
  return true;
}

inline VerificationRecord verify_identity_point(Theorem t, const ParameterPoint& pt) {
  VerificationRecord rec;
  rec.theorem = t;
  rec.point = pt;
  rec.predicted = predict(t, pt);
  const DicyclicGroup G(pt.n);
  switch (t) {
    case Theorem::BrauerCount: {
      const auto chars = brauer_characters(G, pt.p);
      const auto classes = p_regular_classes(G, pt.p);
      rec.computed = chars.size() == classes.size();
      rec.detail = std::to_string(chars.size()) + " Brauer characters, " + std::to_string(classes.size()) +
                   " p-regular classes";
      break;
    }
    case Theorem::TableOrthogonality: {
      const auto table = character_table(G);
      rec.computed = table.size() == G.conjugacy_classes().size();
      for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = 0; j < table.size(); ++j) {
          Cyclotomic sum(Rational(0), G.order());
          for (int x = 0; x < G.order(); ++x) sum += table[i](x) * table[j](x).conjugate();
          if (sum != Cyclotomic(Rational(i == j ? G.order() : 0), G.order())) rec.computed = false;
        }
      }
      rec.detail = std::to_string(table.size()) + " irreducible characters";
      break;
    }
    case Theorem::Decomposition:
    case Theorem::DimensionFormula: {
      if (pt.tensor) {
        const auto orbits = tensor_orbits(G, pt.space);
        std::uint64_t expected = 1;
        for (int i = 0; i < G.order(); ++i) expected *= static_cast<std::uint64_t>(pt.space);
        rec.computed = t == Theorem::Decomposition
                           ? check_decomposition(G, orbits, TensorSpace{pt.space}, expected, rec.detail)
                           : check_dimension_formula(G, orbits, TensorSpace{pt.space}, rec.detail);
      } else {
        const auto orbits = poly_orbits(G, pt.space);
        rec.computed = t == Theorem::Decomposition
                           ? check_decomposition(G, orbits, PolySpace{pt.space}, multiset_count(G.order(), pt.space),
                                                 rec.detail)
                           : check_dimension_formula(G, orbits, PolySpace{pt.space}, rec.detail);
      }
      break;
    }
    default:
      throw std::logic_error("not an identity check");
  }
  rec.agree = rec.predicted == rec.computed;
  return rec;
}

}  // namespace detail

/// Verifies one theorem at one parameter point.
inline VerificationRecord verify_point(Theorem t, const ParameterPoint& pt, double ceiling = 0) {
  if (ceiling <= 0) ceiling = default_work_ceiling();
  const bool needs_space = t != Theorem::BrauerCount && t != Theorem::TableOrthogonality;
  if (needs_space) {
    const double work = work_units(pt);
    if (work > ceiling) throw WorkCeilingExceeded(pt, work, ceiling);
  }
  switch (t) {
    case Theorem::Decomposition:
    case Theorem::DimensionFormula:
    case Theorem::BrauerCount:
    case Theorem::TableOrthogonality:
      return detail::verify_identity_point(t, pt);
    default:
      return detail::verify_obasis_point(t, pt);
  }
}

/// Character indices inside the hypothesis of a criterion at (n, p).
inline std::vector<int> hypothesis_indices(Theorem t, int n, int p) {
  std::vector<int> out;
  switch (t) {
    case Theorem::LinearBrauerPoly:
    case Theorem::LinearBrauerTensor:
      for (int j = 0; j < linear_brauer_count(p); ++j) out.push_back(j);
      break;
    case Theorem::Degree2BrauerPoly:
    case Theorem::Degree2BrauerTensor: {
      const long l = split_order(n, p).l;
      for (int h = 1; 2L * h < l && h <= n - 1; ++h) out.push_back(h);
      break;
    }
    case Theorem::OrdinaryDegree2Poly:
    case Theorem::OrdinaryDegree2Tensor:
      for (int h = 1; h <= n - 1; ++h) out.push_back(h);
      break;
    default:
      out.push_back(0);
  }
  return out;
}

/// Parameter points of a sweep in parameter order (n, p, space, index).
/// Indices outside the hypothesis are dropped, so empty ranges give no points.
inline std::vector<ParameterPoint> sweep_points(const SweepSpec& spec) {
  if (spec.ns.empty()) throw std::invalid_argument("sweep needs at least one n");
  const Theorem t = spec.theorem;
  const bool uses_prime = t == Theorem::LinearBrauerPoly || t == Theorem::Degree2BrauerPoly ||
                          t == Theorem::LinearBrauerTensor || t == Theorem::Degree2BrauerTensor ||
                          t == Theorem::BrauerCount;
  const bool uses_space = t != Theorem::BrauerCount && t != Theorem::TableOrthogonality;
  const std::vector<int> primes = uses_prime ? spec.primes : std::vector<int>{0};
  const std::vector<int> spaces = uses_space ? spec.spaces : std::vector<int>{0};
  if (primes.empty()) throw std::invalid_argument("sweep for " + to_string(t) + " needs primes");
  if (spaces.empty()) throw std::invalid_argument("sweep for " + to_string(t) + " needs d or dim V values");
  for (int p : primes) {
    if (uses_prime && !detail::is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  }
  for (int s : spaces) {
    if (uses_space && s < 1) throw std::invalid_argument("d and dim V must be >= 1");
  }

  std::vector<ParameterPoint> out;
  for (int n : spec.ns) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    for (int p : primes) {
      for (int space : spaces) {
        if (t == Theorem::OrdinaryDegree2Tensor && space < 2) continue;
        std::vector<int> indices = hypothesis_indices(t, n, p);
        if (!spec.indices.empty()) {
          std::vector<int> chosen;
          for (int i : spec.indices) {
            if (std::find(indices.begin(), indices.end(), i) != indices.end()) chosen.push_back(i);
          }
          indices = std::move(chosen);
        }
        for (int index : indices) out.push_back({n, p, space, index, is_tensor_theorem(t)});
      }
    }
  }
  return out;
}

/// One record per parameter point, in parameter order. Points are evaluated
/// on up to spec.threads workers. With stop_on_disagreement the list ends at
/// the first disagreeing record.
inline std::vector<VerificationRecord> verify(const SweepSpec& spec) {
  const auto points = sweep_points(spec);
  const double ceiling = spec.work_ceiling > 0 ? spec.work_ceiling : default_work_ceiling();
  for (const auto& pt : points) {
    if (spec.theorem != Theorem::BrauerCount && spec.theorem != Theorem::TableOrthogonality) {
      const double work = work_units(pt);
      if (work > ceiling) throw WorkCeilingExceeded(pt, work, ceiling);
    }
  }
  std::vector<VerificationRecord> out;
  const std::size_t batch = static_cast<std::size_t>(std::max(1, spec.threads));
  for (std::size_t start = 0; start < points.size(); start += batch) {
    const std::size_t stop = std::min(points.size(), start + batch);
    std::vector<std::future<VerificationRecord>> jobs;
    for (std::size_t i = start; i < stop; ++i) {
      jobs.push_back(std::async(batch > 1 ? std::launch::async : std::launch::deferred,
                                [&, i] { return verify_point(spec.theorem, points[i], ceiling); }));
    }
    for (auto& job : jobs) {
      out.push_back(job.get());
      if (!out.back().agree && spec.stop_on_disagreement) return out;
    }
  }
  return out;
}

/// The sweeps whose records must all agree.
inline std::vector<SweepSpec> default_sweeps() {
  return {
      {Theorem::TableOrthogonality, {2, 3, 4, 5, 6}, {}, {}, {}},
      {Theorem::BrauerCount, {2, 3, 4, 5, 6}, {2, 3, 5}, {}, {}},
      {Theorem::Decomposition, {2, 3}, {}, {1, 2}, {}},
      {Theorem::DimensionFormula, {2, 3}, {}, {1, 2}, {}},
      {Theorem::LinearBrauerPoly, {2, 3, 5}, {2, 3, 5}, {2}, {}},
      {Theorem::OrdinaryDegree2Poly, {2, 3, 4, 6}, {}, {2}, {}},
      {Theorem::Degree2BrauerPoly, {15}, {5}, {2}, {4}},
      {Theorem::Degree2BrauerPoly, {3}, {3}, {2}, {1}},
      {Theorem::LinearBrauerTensor, {2, 3}, {2, 3}, {1, 2}, {}},
      {Theorem::Degree2BrauerTensor, {2, 3}, {2, 3}, {2}, {}},
      {Theorem::OrdinaryDegree2Tensor, {2, 3}, {}, {2}, {}},
  };
}

}  // namespace brsym
