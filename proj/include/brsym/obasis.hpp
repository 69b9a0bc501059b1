#pragma once

// Deciding whether a symmetry class has an orthogonal basis of symmetrized
// monomials (resp. decomposable symmetrized tensors).
//
// The class is the orthogonal direct sum of its orbital subspaces, so the
// decision is made orbit by orbit: an orbital subspace of rank k has such a
// basis iff k of its translated vectors are nonzero and pairwise orthogonal,
// i.e. iff the orthogonality graph on the translates has a k-clique.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "brsym/characters.hpp"
#include "brsym/linalg.hpp"
#include "brsym/orbits.hpp"
#include "brsym/symmetrize.hpp"

namespace brsym {

/// Degree-d homogeneous polynomials in 4n variables.
struct PolySpace {
  int d;
};

/// The m-fold tensor power of a space of dimension dim.
struct TensorSpace {
  int dim;
};

/// Vertices are translates with nonzero symmetrized vector (equal vectors
/// collapsed to their first translate); edges join translates whose
/// closed-form Gram entry is exactly zero.
struct OrthogonalityGraph {
  std::vector<DicyclicElement> vertices;
  std::vector<int> member_index;  // orbit member behind each vertex
  std::vector<std::vector<bool>> adjacent;

  std::size_t size() const { return vertices.size(); }
  std::size_t edge_count() const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < adjacent.size(); ++i) {
      for (std::size_t j = i + 1; j < adjacent.size(); ++j) e += adjacent[i][j];
    }
    return e;
  }
};

struct CliqueSearchResult {
  bool found = false;
  std::vector<int> witness;  // vertex positions, in search order
  long nodes = 0;            // search-tree nodes visited; exhaustion certificate size
};

namespace detail {

class CliqueSearch {
 public:
  CliqueSearch(const std::vector<std::vector<bool>>& adj, std::size_t target) : adj_(adj), target_(target) {}

  CliqueSearchResult run(const std::vector<int>& order) {
    CliqueSearchResult out;
    if (target_ == 0) {
      out.found = true;
      return out;
    }
    // Degree pruning: only vertices of degree >= target-1 can lie in a target-clique.
    std::vector<int> alive = order;
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> keep;
      for (int v : alive) {
        std::size_t deg = 0;
        for (int u : alive) deg += (u != v && adj_[v][u]);
        if (deg + 1 >= target_) keep.push_back(v);
      }
      changed = keep.size() != alive.size();
      alive = std::move(keep);
    }
    std::vector<int> clique;
    out.found = dfs(clique, alive);
    out.nodes = nodes_;
    if (out.found) out.witness = clique;
    return out;
  }

 private:
  // Greedy coloring of the candidate set; the color count bounds any clique in it.
  std::size_t color_bound(const std::vector<int>& cand) const {
    std::vector<std::vector<int>> classes;
    for (int v : cand) {
      bool placed = false;
      for (auto& cls : classes) {
        bool ok = true;
        for (int u : cls) {
          if (adj_[u][v]) {
            ok = false;
            break;
          }
        }
        if (ok) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    return classes.size();
  }

  bool dfs(std::vector<int>& clique, const std::vector<int>& cand) {
    ++nodes_;
    if (clique.size() == target_) return true;
    if (clique.size() + cand.size() < target_) return false;
    if (clique.size() + color_bound(cand) < target_) return false;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (clique.size() + (cand.size() - i) < target_) return false;
      const int v = cand[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (adj_[v][cand[j]]) next.push_back(cand[j]);
      }
      clique.push_back(v);
      if (dfs(clique, next)) return true;
      clique.pop_back();
    }
    return false;
  }

  const std::vector<std::vector<bool>>& adj_;
  std::size_t target_;
  long nodes_ = 0;
};

}  // namespace detail

/// Complete search for a clique of the target size, visiting vertices in the
/// given order (default: canonical order). The first clique found is the
/// lexicographically first in that order.
inline CliqueSearchResult find_orthogonal_basis(const OrthogonalityGraph& graph, std::size_t target,
                                                std::optional<std::vector<int>> vertex_order = std::nullopt) {
  std::vector<int> order;
  if (vertex_order) {
    order = *vertex_order;
  } else {
    for (std::size_t v = 0; v < graph.size(); ++v) order.push_back(static_cast<int>(v));
  }
  return detail::CliqueSearch(graph.adjacent, target).run(order);
}

namespace detail {

template <class Tuple>
struct SpaceTraits;

template <>
struct SpaceTraits<MultiIndex> {
  using Space = PolySpace;
  static constexpr BasisKind kind = BasisKind::Monomial;
  static SymmetrizedVector symmetrize(const DicyclicGroup& G, const MultiIndex& x, const CharacterFn& phi, const Space&) {
    return symmetrize_poly(G, x, phi);
  }
  static Cyclotomic gram(GramKernel& k, const std::vector<int>& stab, int s1, int s2) { return k.poly(stab, s1, s2); }
  static int parameter(const Space& s) { return s.d; }
};

template <>
struct SpaceTraits<Sequence> {
  using Space = TensorSpace;
  static constexpr BasisKind kind = BasisKind::Tensor;
  static SymmetrizedVector symmetrize(const DicyclicGroup& G, const Sequence& x, const CharacterFn& phi, const Space& s) {
    return symmetrize_tensor(G, x, phi, s.dim);
  }
  static Cyclotomic gram(GramKernel& k, const std::vector<int>& stab, int s1, int s2) { return k.tensor(stab, s1, s2); }
  static int parameter(const Space& s) { return s.dim; }
};

template <class Tuple>
std::vector<SymmetrizedVector> translates(const DicyclicGroup& G, const OrbitData<Tuple>& orbit, const CharacterFn& phi,
                                          const typename SpaceTraits<Tuple>::Space& space) {
  std::vector<SymmetrizedVector> out;
  out.reserve(orbit.size());
  for (const auto& member : orbit.members) out.push_back(SpaceTraits<Tuple>::symmetrize(G, member, phi, space));
  return out;
}

template <class Tuple>
std::size_t rank_of(const OrbitData<Tuple>& orbit, const std::vector<SymmetrizedVector>& vectors) {
  std::map<std::vector<int>, int> column;
  for (std::size_t k = 0; k < orbit.members.size(); ++k) column.emplace(raw(orbit.members[k]), static_cast<int>(k));
  EchelonBasis basis;
  for (const auto& v : vectors) {
    SparseRow row;
    for (const auto& [key, c] : v.coeffs) row.emplace(column.at(key), c);
    basis.insert(std::move(row));
  }
  return basis.rank();
}

template <class Tuple>
OrthogonalityGraph graph_of(const DicyclicGroup& G, const OrbitData<Tuple>& orbit,
                            const std::vector<SymmetrizedVector>& vectors, GramKernel& kernel) {
  OrthogonalityGraph g;
  std::vector<int> stab;
  for (const auto& s : orbit.stabilizer) stab.push_back(G.index(s));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].is_zero()) continue;
    bool duplicate = false;
    for (int earlier : g.member_index) {
      if (vectors[earlier].coeffs == vectors[k].coeffs) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    g.vertices.push_back(orbit.transversal[k]);
    g.member_index.push_back(static_cast<int>(k));
  }
  const std::size_t V = g.size();
  g.adjacent.assign(V, std::vector<bool>(V, false));
  for (std::size_t i = 0; i < V; ++i) {
    for (std::size_t j = i + 1; j < V; ++j) {
      const auto entry = SpaceTraits<Tuple>::gram(kernel, stab, G.index(g.vertices[i]), G.index(g.vertices[j]));
      if (entry.is_zero()) g.adjacent[i][j] = g.adjacent[j][i] = true;
    }
  }
  return g;
}

}  // namespace detail

/// Exact rank of the translates of the orbit representative.
template <class Tuple>
std::size_t orbital_rank(const DicyclicGroup& G, const OrbitData<Tuple>& orbit, const CharacterFn& phi,
                         const typename detail::SpaceTraits<Tuple>::Space& space) {
  return detail::rank_of(orbit, detail::translates(G, orbit, phi, space));
}

template <class Tuple>
OrthogonalityGraph build_orthogonality_graph(const DicyclicGroup& G, const OrbitData<Tuple>& orbit,
                                             const CharacterFn& phi,
                                             const typename detail::SpaceTraits<Tuple>::Space& space) {
  GramKernel kernel(G, phi);
  return detail::graph_of(G, orbit, detail::translates(G, orbit, phi, space), kernel);
}

struct OrbitRecord {
  std::vector<int> representative;
  std::size_t orbit_size = 0;
  std::size_t stabilizer_size = 0;
  std::size_t rank = 0;
  bool has_obasis = false;
  std::vector<DicyclicElement> witness;  // translates forming the orthogonal basis
  long search_nodes = 0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::optional<long> formula_dimension;  // ordinary characters only
};

struct ObasisReport {
  BasisKind kind = BasisKind::Monomial;
  int n = 0;
  int parameter = 0;  // d, or dim V
  std::string character;
  int prime = 0;  // nonzero for Brauer characters
  std::vector<OrbitRecord> orbits;
  bool verdict = true;
  std::size_t total_dimension = 0;
  bool complete = true;  // false when an orbit filter skipped orbits
};

/// Full analysis of one orbit. Witnesses are re-checked with inner_direct.
template <class Tuple>
OrbitRecord analyze_orbit(const DicyclicGroup& G, const OrbitData<Tuple>& orbit, const CharacterFn& phi,
                          const typename detail::SpaceTraits<Tuple>::Space& space, GramKernel& kernel) {
  OrbitRecord rec;
  rec.representative = detail::raw(orbit.representative);
  rec.orbit_size = orbit.size();
  rec.stabilizer_size = orbit.stabilizer.size();
  const auto vectors = detail::translates(G, orbit, phi, space);
  rec.rank = detail::rank_of(orbit, vectors);
  const auto graph = detail::graph_of(G, orbit, vectors, kernel);
  rec.vertex_count = graph.size();
  rec.edge_count = graph.edge_count();
  const auto search = find_orthogonal_basis(graph, rec.rank);
  rec.search_nodes = search.nodes;
  rec.has_obasis = search.found;
  for (int v : search.witness) rec.witness.push_back(graph.vertices[v]);
  if (search.found) {
    for (std::size_t i = 0; i < search.witness.size(); ++i) {
      const auto& vi = vectors[graph.member_index[search.witness[i]]];
      if (inner_direct(vi, vi).is_zero()) throw std::logic_error("witness contains a zero vector");
      for (std::size_t j = i + 1; j < search.witness.size(); ++j) {
        const auto& vj = vectors[graph.member_index[search.witness[j]]];
        if (!inner_direct(vi, vj).is_zero()) throw std::logic_error("witness vectors are not orthogonal");
      }
    }
  }
  if (phi.full_domain()) rec.formula_dimension = dim_orbital(G, orbit.stabilizer, phi);
  return rec;
}

using OrbitFilter = std::function<bool(const std::vector<int>& representative)>;

template <class Tuple, class Space>
ObasisReport decide_obasis_impl(const DicyclicGroup& G, const Space& space, const CharacterFn& phi,
                                const OrbitFilter& filter,
                                const std::function<void(const std::function<bool(OrbitData<Tuple>&&)>&)>& stream) {
  ObasisReport report;
  report.kind = detail::SpaceTraits<Tuple>::kind;
  report.n = G.n();
  report.parameter = detail::SpaceTraits<Tuple>::parameter(space);
  report.character = phi.label();
  report.prime = phi.brauer() ? phi.prime() : 0;
  GramKernel kernel(G, phi);
  stream([&](OrbitData<Tuple>&& orbit) {
    if (filter && !filter(detail::raw(orbit.representative))) {
      report.complete = false;
      return true;
    }
    auto rec = analyze_orbit(G, orbit, phi, space, kernel);
    report.total_dimension += rec.rank;
    report.verdict = report.verdict && rec.has_obasis;
    report.orbits.push_back(std::move(rec));
    return true;
  });
  return report;
}

/// Per-orbit decision over Gamma+_{4n,d}; the space verdict is the AND of the
/// orbit verdicts. A filter restricts the analysis to selected orbits.
inline ObasisReport decide_obasis(const DicyclicGroup& G, const PolySpace& space, const CharacterFn& phi,
                                  const OrbitFilter& filter = {}) {
  return decide_obasis_impl<MultiIndex>(G, space, phi, filter, [&](const auto& f) {
    for_each_poly_orbit(G, space.d, f);
  });
}

inline ObasisReport decide_obasis(const DicyclicGroup& G, const TensorSpace& space, const CharacterFn& phi,
                                  const OrbitFilter& filter = {}) {
  return decide_obasis_impl<Sequence>(G, space, phi, filter, [&](const auto& f) {
    for_each_tensor_orbit(G, space.dim, f);
  });
}

}  // namespace brsym
