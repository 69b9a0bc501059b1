#pragma once

// Exact arithmetic in cyclotomic fields Q(z_N), z_N = exp(2 pi i / N).
//
// An element is stored in the power basis 1, z, ..., z^(phi(N)-1) after
// reduction modulo the N-th cyclotomic polynomial, so equality and zero tests
// are exact coefficient comparisons. Values of different orders are lifted to
// the lcm of their orders before combining.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace brsym {

using Rational = mpq_class;

/// num/den in lowest terms.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Coefficient of x^i stored at index i.
using RationalPoly = std::vector<Rational>;

namespace detail {

inline void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty()) return {};
  RationalPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Exact division num / den; throws if the remainder is nonzero.
inline RationalPoly poly_div_exact(RationalPoly num, const RationalPoly& den) {
  if (den.empty()) throw std::domain_error("polynomial division by zero");
  trim(num);
  if (num.size() < den.size()) {
    if (!num.empty()) throw std::domain_error("inexact polynomial division");
    return {};
  }
  RationalPoly quot(num.size() - den.size() + 1, Rational(0));
  const Rational& lead = den.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational c = num[k + den.size() - 1] / lead;
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw std::domain_error("inexact polynomial division");
  return quot;
}

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

inline long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace detail

/// Phi_N by recursive exact division: (x^N - 1) / prod_{d | N, d < N} Phi_d.
inline RationalPoly cyclotomic_polynomial(int N) {
  if (N < 1) throw std::invalid_argument("cyclotomic_polynomial: N must be >= 1");
  RationalPoly num(static_cast<std::size_t>(N) + 1, Rational(0));
  num[0] = -1;
  num[N] = 1;
  RationalPoly den{Rational(1)};
  for (int d = 1; d < N; ++d) {
    if (N % d == 0) den = detail::poly_mul(den, cyclotomic_polynomial(d));
  }
  return detail::poly_div_exact(std::move(num), den);
}

/// Immutable reduction context for one order N. Obtain through get(); the
/// shared instance per N is created once and never modified.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(int N) {
    if (N < 1) throw std::invalid_argument("cyclotomic field order must be >= 1");
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const CyclotomicField>> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find(N);
    if (it != registry.end()) return it->second;
    auto field = std::shared_ptr<const CyclotomicField>(new CyclotomicField(N));
    registry.emplace(N, field);
    return field;
  }

  int order() const { return order_; }
  int degree() const { return degree_; }
  const RationalPoly& modulus() const { return modulus_; }

  // Canonical coordinates of z^j for 0 <= j < N.
  const std::vector<long>& power_row(int j) const { return rows_[j]; }

  // Units of Z/N, the exponents k of the Galois automorphisms z -> z^k.
  const std::vector<int>& units() const { return units_; }

 private:
  explicit CyclotomicField(int N)
      : order_(N), degree_(detail::euler_phi(N)), modulus_(cyclotomic_polynomial(N)) {
    rows_.assign(N, std::vector<long>(degree_, 0));
    // Walk z^j -> z^(j+1), folding the top coefficient with the monic modulus.
    std::vector<long> cur(degree_, 0);
    cur[0] = 1;
    for (int j = 0; j < N; ++j) {
      rows_[j] = cur;
      long top = cur[degree_ - 1];
      for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0) {
        for (int i = 0; i < degree_; ++i) cur[i] -= top * modulus_[i].get_num().get_si();
      }
    }
    for (int k = 1; k <= N; ++k) {
      if (std::gcd(k, N) == 1) units_.push_back(k % N);
    }
  }

  int order_;
  int degree_;
  RationalPoly modulus_;
  std::vector<std::vector<long>> rows_;
  std::vector<int> units_;
};

class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0), 1) {}

  explicit Cyclotomic(const Rational& value, int N = 1)
      : field_(CyclotomicField::get(N)), coeffs_(field_->degree(), Rational(0)) {
    coeffs_[0] = value;
  }

  explicit Cyclotomic(long value, int N = 1) : Cyclotomic(Rational(value), N) {}

  /// z_N^(k mod N) in canonical form.
  static Cyclotomic root_of_unity(int N, long k) {
    Cyclotomic out(Rational(0), N);
    const auto& row = out.field_->power_row(static_cast<int>(detail::mod(k, N)));
    for (int i = 0; i < out.degree(); ++i) out.coeffs_[i] = row[i];
    return out;
  }

  /// Builds from raw exponent coefficients: sum_j c[j] z_N^j, any length.
  static Cyclotomic from_exponents(int N, const std::vector<Rational>& c) {
    Cyclotomic out(Rational(0), N);
    std::vector<Rational> folded(N, Rational(0));
    for (std::size_t j = 0; j < c.size(); ++j) folded[j % N] += c[j];
    out.absorb(folded);
    return out;
  }

  int order() const { return field_->order(); }
  int degree() const { return field_->degree(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return false;
    }
    return true;
  }

  // Valid only when is_rational().
  const Rational& rational_value() const { return coeffs_[0]; }

  /// Same value, viewed in Q(z_M). M must be a multiple of order().
  Cyclotomic lift(int M) const {
    if (M == order()) return *this;
    if (M % order() != 0) throw std::invalid_argument("lift: target order is not a multiple");
    const int step = M / order();
    std::vector<Rational> folded(M, Rational(0));
    for (int i = 0; i < degree(); ++i) folded[i * step] = coeffs_[i];
    Cyclotomic out(Rational(0), M);
    out.absorb(folded);
    return out;
  }

  /// Image under z -> z^k, gcd(k, N) = 1.
  Cyclotomic galois(long k) const {
    const int N = order();
    std::vector<Rational> folded(N, Rational(0));
    for (int i = 0; i < degree(); ++i) {
      if (coeffs_[i] != 0) folded[detail::mod(static_cast<long>(i) * k, N)] += coeffs_[i];
    }
    Cyclotomic out(Rational(0), N);
    out.absorb(folded);
    return out;
  }

  /// Complex conjugation, z -> z^-1.
  Cyclotomic conjugate() const { return galois(-1); }

  /// Multiplicative inverse via the norm: a^-1 = prod_{k != 1} a^(k) / N(a).
  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0], order());
    Cyclotomic cofactor(Rational(1), order());
    for (int k : field_->units()) {
      if (k != 1) cofactor *= galois(k);
    }
    Cyclotomic norm = *this * cofactor;
    if (!norm.is_rational()) throw std::logic_error("norm is not rational");
    return cofactor * (Rational(1) / norm.rational_value());
  }

  std::complex<double> to_complex() const {
    std::complex<double> sum(0.0, 0.0);
    const double base = 2.0 * std::numbers::pi / order();
    for (int i = 0; i < degree(); ++i) {
      if (coeffs_[i] == 0) continue;
      sum += coeffs_[i].get_d() * std::polar(1.0, base * i);
    }
    return sum;
  }

  /// Coefficients on 1, z, z^2, ...; the field is named unless show_field is false or the value is rational.
  std::string to_string(bool show_field = true) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < degree(); ++i) {
      if (coeffs_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << coeffs_[i].get_str();
      if (i == 1) os << "*z";
      if (i > 1) os << "*z^" << i;
    }
    if (first) os << "0";
    if (show_field && order() > 2 && !is_rational()) os << " (z=z" << order() << ")";
    return os.str();
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    if (o.order() == order()) {
      for (int i = 0; i < degree(); ++i) coeffs_[i] += o.coeffs_[i];
      return *this;
    }
    const int M = std::lcm(order(), o.order());
    *this = lift(M);
    return *this += o.lift(M);
  }

  Cyclotomic& operator-=(const Cyclotomic& o) { return *this += -o; }

  Cyclotomic& operator*=(const Cyclotomic& o) {
    if (o.order() != order()) {
      const int M = std::lcm(order(), o.order());
      *this = lift(M);
      return *this *= o.lift(M);
    }
    const int N = order();
    std::vector<Rational> folded(N, Rational(0));
    for (int i = 0; i < degree(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (int j = 0; j < degree(); ++j) {
        if (o.coeffs_[j] == 0) continue;
        folded[(i + j) % N] += coeffs_[i] * o.coeffs_[j];
      }
    }
    absorb(folded);
    return *this;
  }

  Cyclotomic& operator*=(const Rational& r) {
    for (auto& c : coeffs_) c *= r;
    return *this;
  }

  friend Cyclotomic operator-(Cyclotomic a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
    const int M = std::lcm(a.order(), b.order());
    return a.lift(M).coeffs_ == b.lift(M).coeffs_;
  }

 private:
  // Replaces the value by sum_j folded[j] z^j, 0 <= j < N.
  void absorb(const std::vector<Rational>& folded) {
    const int d = degree();
    std::vector<Rational> out(d, Rational(0));
    for (int j = 0; j < order(); ++j) {
      if (folded[j] == 0) continue;
      if (j < d) {
        out[j] += folded[j];
        continue;
      }
      const auto& row = field_->power_row(j);
      for (int i = 0; i < d; ++i) {
        if (row[i] != 0) out[i] += folded[j] * row[i];
      }
    }
    coeffs_ = std::move(out);
  }

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic root_of_unity(int N, long k) { return Cyclotomic::root_of_unity(N, k); }
inline Cyclotomic conjugate(const Cyclotomic& a) { return a.conjugate(); }
inline std::complex<double> to_complex(const Cyclotomic& a) { return a.to_complex(); }

}  // namespace brsym
