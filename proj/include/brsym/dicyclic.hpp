#pragma once

// The dicyclic group T_4n = <r, s | r^2n = 1, r^n = s^2, s^-1 r s = r^-1>.
//
// Elements are kept in normal form r^a s^b with 0 <= a < 2n, b in {0, 1}.
// The canonical enumeration is r^0, ..., r^(2n-1), s, r s, ..., r^(2n-1) s,
// so the element r^a s^b has index a + 2n b.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace brsym {

struct DicyclicElement {
  int a = 0;  // exponent of r, reduced mod 2n
  int b = 0;  // exponent of s, 0 or 1

  friend bool operator==(const DicyclicElement&, const DicyclicElement&) = default;
  friend auto operator<=>(const DicyclicElement&, const DicyclicElement&) = default;
};

// Serialized as "r^a" or "r^a*s".
inline std::string to_string(const DicyclicElement& g) {
  std::string out = "r^" + std::to_string(g.a);
  if (g.b) out += "*s";
  return out;
}

using Permutation = std::vector<int>;

class DicyclicGroup {
 public:
  explicit DicyclicGroup(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("dicyclic group requires n >= 1");
    const int size = order();
    mul_.assign(static_cast<std::size_t>(size) * size, 0);
    for (int x = 0; x < size; ++x) {
      for (int y = 0; y < size; ++y) mul_[x * size + y] = index(multiply(element(x), element(y)));
    }
    inv_.assign(size, 0);
    for (int x = 0; x < size; ++x) {
      for (int y = 0; y < size; ++y) {
        if (mul_[x * size + y] == 0) inv_[x] = y;
      }
    }
    order_of_.assign(size, 0);
    for (int x = 0; x < size; ++x) {
      int k = 1;
      for (int g = x; g != 0; g = mul_[g * size + x]) ++k;
      order_of_[x] = k;
    }
  }

  int n() const { return n_; }
  int order() const { return 4 * n_; }

  DicyclicElement identity() const { return {0, 0}; }
  DicyclicElement r() const { return {n_ == 0 ? 0 : 1 % (2 * n_), 0}; }
  DicyclicElement s() const { return {0, 1}; }

  int index(const DicyclicElement& g) const { return g.a + 2 * n_ * g.b; }
  DicyclicElement element(int index) const {
    return {index % (2 * n_), index / (2 * n_)};
  }

  std::vector<DicyclicElement> elements() const {
    std::vector<DicyclicElement> out;
    out.reserve(order());
    for (int x = 0; x < order(); ++x) out.push_back(element(x));
    return out;
  }

  bool contains(const DicyclicElement& g) const {
    return g.a >= 0 && g.a < 2 * n_ && (g.b == 0 || g.b == 1);
  }

  /// r^a s^b r^c s^d using s r^c = r^-c s and s^2 = r^n.
  DicyclicElement multiply(const DicyclicElement& g, const DicyclicElement& h) const {
    check(g);
    check(h);
    const int m = 2 * n_;
    int a = g.b ? g.a - h.a : g.a + h.a;
    int b = g.b + h.b;
    if (b == 2) {
      a += n_;
      b = 0;
    }
    return {((a % m) + m) % m, b};
  }

  DicyclicElement inverse(const DicyclicElement& g) const { return element(inv_[index(g)]); }

  DicyclicElement power(const DicyclicElement& g, long k) const {
    const int ord = element_order(g);
    k = ((k % ord) + ord) % ord;
    DicyclicElement out = identity();
    for (long i = 0; i < k; ++i) out = multiply(out, g);
    return out;
  }

  /// Least k >= 1 with g^k = e.
  int element_order(const DicyclicElement& g) const { return order_of_[index(g)]; }

  // Index-level tables for hot loops.
  int mul(int x, int y) const { return mul_[x * order() + y]; }
  int inv(int x) const { return inv_[x]; }
  int order_of(int x) const { return order_of_[x]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

  /// Conjugacy classes by brute-force conjugation, ordered by smallest index.
  std::vector<std::vector<DicyclicElement>> conjugacy_classes() const {
    std::vector<int> cls(order(), -1);
    std::vector<std::vector<DicyclicElement>> out;
    for (int x = 0; x < order(); ++x) {
      if (cls[x] >= 0) continue;
      std::vector<int> members;
      for (int g = 0; g < order(); ++g) members.push_back(conj(g, x));
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      std::vector<DicyclicElement> klass;
      for (int y : members) {
        cls[y] = static_cast<int>(out.size());
        klass.push_back(element(y));
      }
      out.push_back(std::move(klass));
    }
    return out;
  }

  /// Left regular action: sends the index of x to the index of g x.
  Permutation regular_permutation(const DicyclicElement& g) const {
    const int x0 = index(g);
    Permutation out(order());
    for (int x = 0; x < order(); ++x) out[x] = mul(x0, x);
    return out;
  }

  friend bool operator==(const DicyclicGroup& a, const DicyclicGroup& b) { return a.n_ == b.n_; }

 private:
  void check(const DicyclicElement& g) const {
    if (!contains(g)) {
      throw std::invalid_argument("element " + to_string(g) + " is not in T_" +
                                  std::to_string(order()));
    }
  }

  int n_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> order_of_;
};

inline Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw std::invalid_argument("compose: degree mismatch");
  Permutation out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
  return out;
}

// Parses "r^a", "r^a*s", "s", "r", "e".
inline DicyclicElement parse_element(const DicyclicGroup& G, const std::string& text) {
  DicyclicElement g;
  std::string t = text;
  if (t == "e" || t == "1") return g;
  if (t.size() >= 2 && t.substr(t.size() - 2) == "*s") {
    g.b = 1;
    t = t.substr(0, t.size() - 2);
  } else if (t == "s") {
    g.b = 1;
    t = "r^0";
  }
  if (t == "r") t = "r^1";
  if (t.rfind("r^", 0) != 0) throw std::invalid_argument("cannot parse group element: " + text);
  const long a = std::stol(t.substr(2));
  const int m = 2 * G.n();
  g.a = static_cast<int>(((a % m) + m) % m);
  return g;
}

}  // namespace brsym
