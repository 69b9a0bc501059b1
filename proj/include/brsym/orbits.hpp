#pragma once

// Actions of T_4n (through its left regular embedding in S_4n) on
// multi-indices and index sequences, with streaming orbit enumeration.
//
// Multi-indices carry the right action  (alpha sigma)_i = alpha_{sigma(i)}.
// Sequences carry the left action       (sigma . gamma)_i = gamma_{sigma^-1(i)}.
// Both actions have the same orbits and stabilizers; alpha sigma = sigma^-1 . alpha.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "brsym/dicyclic.hpp"

namespace brsym {

/// alpha in Gamma+_{m,d}: non-negative exponents summing to d.
struct MultiIndex {
  std::vector<int> entries;

  int degree() const { return std::accumulate(entries.begin(), entries.end(), 0); }
  std::size_t size() const { return entries.size(); }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// gamma in Gamma^m_dimV: entries in 1..dimV.
struct Sequence {
  std::vector<int> entries;

  std::size_t size() const { return entries.size(); }

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend auto operator<=>(const Sequence&, const Sequence&) = default;
};

inline std::string to_string(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

inline void check_length(const DicyclicGroup& G, std::size_t len) {
  if (len != static_cast<std::size_t>(G.order())) {
    throw std::invalid_argument("tuple length " + std::to_string(len) +
                                " does not match permutation degree " + std::to_string(G.order()));
  }
}

/// alpha sigma = (alpha_{sigma(1)}, ..., alpha_{sigma(m)}).
inline MultiIndex act_poly(const DicyclicGroup& G, const MultiIndex& alpha, const DicyclicElement& sigma) {
  check_length(G, alpha.size());
  const int g = G.index(sigma);
  MultiIndex out{std::vector<int>(alpha.size())};
  for (int i = 0; i < G.order(); ++i) out.entries[i] = alpha.entries[G.mul(g, i)];
  return out;
}

/// sigma . gamma = (gamma_{sigma^-1(1)}, ..., gamma_{sigma^-1(m)}).
inline Sequence act_tensor(const DicyclicGroup& G, const Sequence& gamma, const DicyclicElement& sigma) {
  check_length(G, gamma.size());
  const int g = G.inv(G.index(sigma));
  Sequence out{std::vector<int>(gamma.size())};
  for (int i = 0; i < G.order(); ++i) out.entries[i] = gamma.entries[G.mul(g, i)];
  return out;
}

namespace detail {

// (g . x)_i = x_{g^-1 i}; g given by canonical index.
inline std::vector<int> left_act(const DicyclicGroup& G, const std::vector<int>& x, int g) {
  const int gi = G.inv(g);
  std::vector<int> out(x.size());
  for (int i = 0; i < G.order(); ++i) out[i] = x[G.mul(gi, i)];
  return out;
}

// Raw entries of either tuple kind.
inline const std::vector<int>& raw(const MultiIndex& a) { return a.entries; }
inline const std::vector<int>& raw(const Sequence& a) { return a.entries; }

template <class Tuple>
Tuple wrap(std::vector<int> v) {
  return Tuple{std::move(v)};
}

// Element index that moves the orbit representative to a member, expressed
// in the tuple kind's own action.
template <class Tuple>
int own_action_index(const DicyclicGroup& G, int left_index) {
  if constexpr (std::is_same_v<Tuple, MultiIndex>) {
    return G.inv(left_index);  // alpha sigma = sigma^-1 . alpha
  } else {
    return left_index;
  }
}

}  // namespace detail

inline bool is_valid(const DicyclicGroup& G, const MultiIndex& alpha, int d) {
  if (alpha.size() != static_cast<std::size_t>(G.order())) return false;
  for (int e : alpha.entries) {
    if (e < 0) return false;
  }
  return alpha.degree() == d;
}

inline bool is_valid(const DicyclicGroup& G, const Sequence& gamma, int dim) {
  if (gamma.size() != static_cast<std::size_t>(G.order())) return false;
  for (int e : gamma.entries) {
    if (e < 1 || e > dim) return false;
  }
  return true;
}

/// Group elements fixing x under its action, in canonical order.
template <class Tuple>
std::vector<DicyclicElement> stabilizer(const DicyclicGroup& G, const Tuple& x) {
  check_length(G, x.size());
  std::vector<DicyclicElement> out;
  for (int g = 0; g < G.order(); ++g) {
    if (detail::left_act(G, detail::raw(x), g) == detail::raw(x)) out.push_back(G.element(g));
  }
  return out;
}

/// Lexicographically minimal member of the orbit of x.
template <class Tuple>
Tuple canonicalize(const DicyclicGroup& G, const Tuple& x) {
  check_length(G, x.size());
  std::vector<int> best = detail::raw(x);
  for (int g = 1; g < G.order(); ++g) {
    auto y = detail::left_act(G, detail::raw(x), g);
    if (y < best) best = std::move(y);
  }
  return detail::wrap<Tuple>(std::move(best));
}

/// One orbit: its lex-minimal representative, the distinct members with the
/// first group element (canonical order) producing each, and the stabilizer.
/// For multi-indices member k equals act_poly(representative, transversal[k]);
/// for sequences it equals act_tensor(representative, transversal[k]).
template <class Tuple>
struct OrbitData {
  Tuple representative;
  std::vector<DicyclicElement> transversal;
  std::vector<Tuple> members;
  std::vector<DicyclicElement> stabilizer;

  std::size_t size() const { return members.size(); }
};

template <class Tuple>
OrbitData<Tuple> orbit_of(const DicyclicGroup& G, const Tuple& x) {
  check_length(G, x.size());
  OrbitData<Tuple> out;
  out.representative = canonicalize(G, x);
  const auto& rep = detail::raw(out.representative);
  std::vector<std::vector<int>> seen;
  // Visit group elements in canonical order of the tuple kind's own action.
  std::vector<std::pair<int, std::vector<int>>> images;
  for (int g = 0; g < G.order(); ++g) {
    images.emplace_back(detail::own_action_index<Tuple>(G, g), detail::left_act(G, rep, g));
  }
  std::sort(images.begin(), images.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [own, y] : images) {
    if (y == rep) out.stabilizer.push_back(G.element(own));
    if (std::find(seen.begin(), seen.end(), y) != seen.end()) continue;
    seen.push_back(y);
    out.transversal.push_back(G.element(own));
    out.members.push_back(detail::wrap<Tuple>(std::move(y)));
  }
  std::sort(out.stabilizer.begin(), out.stabilizer.end(),
            [&](const auto& a, const auto& b) { return G.index(a) < G.index(b); });
  return out;
}

namespace detail {

// Visits Gamma+_{m,d} in increasing lexicographic order.
inline bool visit_compositions(std::vector<int>& cur, std::size_t pos, int remaining,
                               const std::function<bool(const std::vector<int>&)>& f) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    return f(cur);
  }
  for (int v = 0; v <= remaining; ++v) {
    cur[pos] = v;
    if (!visit_compositions(cur, pos + 1, remaining - v, f)) return false;
  }
  return true;
}

inline bool is_orbit_minimal(const DicyclicGroup& G, const std::vector<int>& x) {
  for (int g = 1; g < G.order(); ++g) {
    const int gi = G.inv(g);
    // Compare g . x against x lexicographically without materializing it.
    for (int i = 0; i < G.order(); ++i) {
      const int y = x[G.mul(gi, i)];
      if (y < x[i]) return false;
      if (y > x[i]) break;
    }
  }
  return true;
}

}  // namespace detail

/// Streams one OrbitData per orbit of Gamma+_{4n,d}, in increasing
/// representative order. Return false from f to stop early.
inline void for_each_poly_orbit(const DicyclicGroup& G, int d,
                                const std::function<bool(OrbitData<MultiIndex>&&)>& f) {
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  std::vector<int> cur(G.order(), 0);
  detail::visit_compositions(cur, 0, d, [&](const std::vector<int>& x) {
    if (!detail::is_orbit_minimal(G, x)) return true;
    return f(orbit_of(G, MultiIndex{x}));
  });
}

/// Streams one OrbitData per orbit of Gamma^{4n}_dim, in increasing
/// representative order.
inline void for_each_tensor_orbit(const DicyclicGroup& G, int dim,
                                  const std::function<bool(OrbitData<Sequence>&&)>& f) {
  if (dim < 1) throw std::invalid_argument("dim V must be >= 1");
  std::vector<int> cur(G.order(), 1);
  while (true) {
    if (detail::is_orbit_minimal(G, cur)) {
      if (!f(orbit_of(G, Sequence{cur}))) return;
    }
    int pos = G.order() - 1;
    while (pos >= 0 && cur[pos] == dim) cur[pos--] = 1;
    if (pos < 0) return;
    ++cur[pos];
  }
}

inline std::vector<OrbitData<MultiIndex>> poly_orbits(const DicyclicGroup& G, int d) {
  std::vector<OrbitData<MultiIndex>> out;
  for_each_poly_orbit(G, d, [&](OrbitData<MultiIndex>&& o) {
    out.push_back(std::move(o));
    return true;
  });
  return out;
}

inline std::vector<OrbitData<Sequence>> tensor_orbits(const DicyclicGroup& G, int dim) {
  std::vector<OrbitData<Sequence>> out;
  for_each_tensor_orbit(G, dim, [&](OrbitData<Sequence>&& o) {
    out.push_back(std::move(o));
    return true;
  });
  return out;
}

/// Builds a multi-index with trivial stabilizer from the cycle structure of
/// the permutation of a: within each non-trivial cycle the first point gets
/// a value Xi_i and the remaining points a different value Theta_i; fixed
/// points get a common value Omega different from every Theta_i. For a = e
/// each point is its own cycle and carries its own Xi. Value assignments are
/// tried in lexicographic order and the first one of total degree d whose
/// stabilizer is trivial is returned.
inline std::optional<MultiIndex> construct_free_multiindex(const DicyclicGroup& G, const DicyclicElement& a,
                                                           int d, long budget = 2'000'000) {
  const Permutation perm = G.regular_permutation(a);
  const int m = G.order();
  const bool identity = G.index(a) == 0;

  std::vector<std::vector<int>> cycles;
  std::vector<int> fixed;
  std::vector<bool> done(m, false);
  for (int i = 0; i < m; ++i) {
    if (done[i]) continue;
    std::vector<int> cycle;
    for (int x = i; !done[x]; x = perm[x]) {
      done[x] = true;
      cycle.push_back(x);
    }
    if (cycle.size() == 1 && !identity) {
      fixed.push_back(cycle.front());
    } else {
      cycles.push_back(std::move(cycle));
    }
  }

  // Variables in order: Xi_1, [Theta_1], Xi_2, [Theta_2], ..., [Omega].
  struct Var {
    int weight;
    int cycle;      // owning cycle, -1 for Omega
    bool is_theta;
  };
  std::vector<Var> vars;
  for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
    vars.push_back({1, c, false});
    if (cycles[c].size() > 1) vars.push_back({static_cast<int>(cycles[c].size()) - 1, c, true});
  }
  if (!fixed.empty()) vars.push_back({static_cast<int>(fixed.size()), -1, false});

  std::vector<int> value(vars.size(), 0);
  long visited = 0;
  std::optional<MultiIndex> found;

  auto build = [&]() {
    MultiIndex alpha{std::vector<int>(m, 0)};
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (vars[v].cycle < 0) {
        for (int x : fixed) alpha.entries[x] = value[v];
      } else if (vars[v].is_theta) {
        const auto& cyc = cycles[vars[v].cycle];
        for (std::size_t k = 1; k < cyc.size(); ++k) alpha.entries[cyc[k]] = value[v];
      } else {
        alpha.entries[cycles[vars[v].cycle].front()] = value[v];
      }
    }
    return alpha;
  };

  auto consistent = [&](std::size_t v) {
    // Theta_i != Xi_i, and Theta_i != Omega once both are set.
    if (vars[v].is_theta && value[v] == value[v - 1]) return false;
    if (vars[v].cycle < 0) {
      for (std::size_t u = 0; u < v; ++u) {
        if (vars[u].is_theta && value[u] == value[v]) return false;
      }
    }
    return true;
  };

  std::function<bool(std::size_t, int)> search = [&](std::size_t v, int remaining) -> bool {
    if (++visited > budget) return false;
    if (v == vars.size()) {
      if (remaining != 0) return true;
      MultiIndex alpha = build();
      if (stabilizer(G, alpha).size() == 1) {
        found = std::move(alpha);
        return false;
      }
      return true;
    }
    for (int x = 0; x * vars[v].weight <= remaining; ++x) {
      value[v] = x;
      if (!consistent(v)) continue;
      if (!search(v + 1, remaining - x * vars[v].weight)) return false;
    }
    return true;
  };
  search(0, d);
  return found;
}

/// Number of multi-indices in Gamma+_{m,d}: C(m+d-1, d).
inline std::uint64_t multiset_count(int m, int d) {
  std::uint64_t num = 1;
  for (int i = 1; i <= d; ++i) num = num * static_cast<std::uint64_t>(m + i - 1) / static_cast<std::uint64_t>(i);
  return num;
}

}  // namespace brsym
