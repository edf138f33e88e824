#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "bruhat/cartan.hpp"
#include "bruhat/error.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat {

/// m x m coefficients: C_kl = 1 if |i_k| = |i_l|, else -a_{|i_k|,|i_l|}.
class CoeffMatrix {
 public:
  CoeffMatrix(const CartanMatrix& a, const DoubleWord& d) : m_(d.size()), c_(m_, m_) {
    for (int k = 1; k <= m_; ++k)
      for (int l = 1; l <= m_; ++l)
        c_(k - 1, l - 1) = d.node(k) == d.node(l) ? 1 : -a(d.node(k), d.node(l));
  }

  int size() const { return m_; }
  int operator()(int k, int l) const { return c_(k - 1, l - 1); }

 private:
  int m_;
  Matrix<int> c_;
};

inline CoeffMatrix c_matrix(const CartanMatrix& a, const DoubleWord& d) { return {a, d}; }

enum class EdgeKind { horizontal, inclined };

inline const char* to_string(EdgeKind k) {
  return k == EdgeKind::horizontal ? "horizontal" : "inclined";
}

struct SigmaEdge {
  int from = 0;
  int to = 0;
  EdgeKind kind = EdgeKind::horizontal;
  int rule = 1;  // which of the three edge conditions produced it

  bool operator==(const SigmaEdge&) const = default;
  auto operator<=>(const SigmaEdge&) const = default;
};

/// Directed graph on a subset of [1, m]; vertex k carries the letter i_k.
class SigmaGraph {
 public:
  SigmaGraph() = default;
  SigmaGraph(DoubleWord word, std::vector<int> vertices, std::vector<SigmaEdge> edges)
      : word_(std::move(word)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end(), [](const SigmaEdge& x, const SigmaEdge& y) {
      auto key = [](const SigmaEdge& e) {
        return std::pair(std::min(e.from, e.to), std::max(e.from, e.to));
      };
      return key(x) < key(y);
    });
  }

  int m() const { return word_.size(); }
  const DoubleWord& word() const { return word_; }
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<SigmaEdge>& edges() const { return edges_; }

  bool contains(int k) const { return std::binary_search(vertices_.begin(), vertices_.end(), k); }

  std::vector<SigmaEdge> in_edges(int n) const {
    std::vector<SigmaEdge> out;
    for (const auto& e : edges_)
      if (e.to == n) out.push_back(e);
    return out;
  }
  std::vector<SigmaEdge> out_edges(int n) const {
    std::vector<SigmaEdge> out;
    for (const auto& e : edges_)
      if (e.from == n) out.push_back(e);
    return out;
  }

  /// Unordered adjacency.
  bool linked(int k, int l) const {
    for (const auto& e : edges_)
      if ((e.from == k && e.to == l) || (e.from == l && e.to == k)) return true;
    return false;
  }

  bool uses_rule_three() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const SigmaEdge& e) { return e.rule == 3; });
  }

 private:
  DoubleWord word_;
  std::vector<int> vertices_;
  std::vector<SigmaEdge> edges_;
};

/// Edge set of Sigma(i): for k < l, {k, l} is an edge when
///   (i)   k = l^-                                              (horizontal)
///   (ii)  k^- < l^- < k, {|i_k|,|i_l|} in Pi, eps(i_{l^-}) = eps(i_k)
///   (iii) l^- < k^- < k, {|i_k|,|i_l|} in Pi, eps(i_{k^-}) = -eps(i_k)
/// Horizontal edges point k -> l iff eps(i_k) = +1; inclined ones iff
/// eps(i_k) = -1.
inline SigmaGraph build_sigma(const CartanMatrix& a, const DoubleWord& d) {
  const int m = d.size();
  std::vector<int> minus(m + 1, 0);
  for (int k = 1; k <= m; ++k) minus[k] = d.l_minus(k);

  std::vector<SigmaEdge> edges;
  for (int l = 1; l <= m; ++l) {
    for (int k = 1; k < l; ++k) {
      const int km = minus[k], lm = minus[l];
      const bool adjacent = a.adjacent(d.node(k), d.node(l));
      const bool r1 = k == lm;
      const bool r2 = adjacent && km < lm && lm < k && d.sign(lm) == d.sign(k);
      const bool r3 = adjacent && lm < km && km < k && d.sign(km) == -d.sign(k);
      assert(int(r1) + int(r2) + int(r3) <= 1);
      if (!(r1 || r2 || r3)) continue;
      SigmaEdge e;
      e.kind = r1 ? EdgeKind::horizontal : EdgeKind::inclined;
      e.rule = r1 ? 1 : (r2 ? 2 : 3);
      const bool forward = r1 ? d.sign(k) == 1 : d.sign(k) == -1;
      e.from = forward ? k : l;
      e.to = forward ? l : k;
      edges.push_back(e);
    }
  }
  std::vector<int> vertices(m);
  for (int k = 1; k <= m; ++k) vertices[k - 1] = k;
  return SigmaGraph(d, std::move(vertices), std::move(edges));
}

/// Vertex-induced restriction to the i-bounded indices.
inline SigmaGraph bounded_subgraph(const SigmaGraph& g) {
  std::vector<int> keep;
  for (int k : g.vertices())
    if (g.word().bounded(k)) keep.push_back(k);
  std::vector<SigmaEdge> edges;
  for (const auto& e : g.edges())
    if (std::binary_search(keep.begin(), keep.end(), e.from) &&
        std::binary_search(keep.begin(), keep.end(), e.to))
      edges.push_back(e);
  return SigmaGraph(g.word(), std::move(keep), std::move(edges));
}

namespace detail {

/// Adjacency bitmasks of the undirected skeleton, indexed by vertex slot.
inline std::vector<std::uint64_t> skeleton(const SigmaGraph& g) {
  const auto& vs = g.vertices();
  std::vector<std::uint64_t> adj(vs.size(), 0);
  auto slot = [&](int k) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), k) - vs.begin());
  };
  for (const auto& e : g.edges()) {
    const auto x = slot(e.from), y = slot(e.to);
    adj[x] |= std::uint64_t{1} << y;
    adj[y] |= std::uint64_t{1} << x;
  }
  return adj;
}

inline bool connected(const std::vector<std::uint64_t>& adj) {
  if (adj.empty()) return true;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == static_cast<int>(adj.size());
}

/// The induced subgraph on `set` (a 6-bit selection of slots) is the tree
/// with one trivalent vertex whose three arms have lengths 1, 2, 2.
inline bool is_e6(const std::vector<std::uint64_t>& adj, std::uint64_t set) {
  int edges2 = 0;
  int center = -1;
  for (std::uint64_t s = set; s; s &= s - 1) {
    const int v = std::countr_zero(s);
    const int deg = std::popcount(adj[v] & set);
    if (deg == 0 || deg > 3) return false;
    if (deg == 3) {
      if (center >= 0) return false;
      center = v;
    }
    edges2 += deg;
  }
  if (edges2 != 10 || center < 0) return false;
  // Connected with 5 edges on 6 vertices => tree. Arms: count leaf neighbours
  // of the centre; E6 has exactly one (D6-shaped trees have two).
  std::uint64_t seen = std::uint64_t{1} << center, frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)] & set;
    frontier = next & ~seen;
    seen |= next;
  }
  if (seen != set) return false;
  int leaf_neighbours = 0;
  for (std::uint64_t n = adj[center] & set; n; n &= n - 1)
    if (std::popcount(adj[std::countr_zero(n)] & set) == 1) ++leaf_neighbours;
  return leaf_neighbours == 1;
}

}  // namespace detail

/// Six vertices (original labels) inducing an E6 Dynkin graph, if any.
inline std::vector<int> find_induced_e6(const SigmaGraph& g, std::size_t guard = 40) {
  const auto& vs = g.vertices();
  if (vs.size() > guard)
    throw GuardExceeded("E6 search guard: " + std::to_string(vs.size()) + " vertices exceeds " +
                        std::to_string(guard));
  const auto adj = detail::skeleton(g);
  const int n = static_cast<int>(vs.size());
  if (n < 6) return {};
  // Degree pruning: a vertex of skeleton degree 0 can never be in an E6.
  std::vector<int> cand;
  for (int v = 0; v < n; ++v)
    if (adj[v]) cand.push_back(v);
  const int c = static_cast<int>(cand.size());
  std::array<int, 6> idx{};
  auto rec = [&](auto&& self, int depth, int start, std::uint64_t set) -> bool {
    if (depth == 6) return detail::is_e6(adj, set);
    for (int p = start; p <= c - (6 - depth); ++p) {
      idx[depth] = cand[p];
      if (self(self, depth + 1, p + 1, set | (std::uint64_t{1} << cand[p]))) return true;
    }
    return false;
  };
  if (!rec(rec, 0, 0, 0)) return {};
  std::vector<int> out;
  for (int s : idx) out.push_back(vs[s]);
  return out;
}

/// Connected, and some 6 vertices induce the E6 Dynkin graph. Edge
/// orientation is ignored.
inline bool e6_compatible(const SigmaGraph& g, std::size_t guard = 40) {
  if (g.vertices().size() > guard)
    throw GuardExceeded("E6 search guard: " + std::to_string(g.vertices().size()) +
                        " vertices exceeds " + std::to_string(guard));
  if (!detail::connected(detail::skeleton(g))) return false;
  return !find_induced_e6(g, guard).empty();
}

/// Deterministic DOT rendering; vertices labelled "k:i_k".
inline std::string export_dot(const SigmaGraph& g) {
  std::ostringstream os;
  os << "digraph sigma {\n";
  for (int k : g.vertices())
    os << "  " << k << " [label=\"" << k << ":" << g.word().letter(k) << "\"];\n";
  for (const auto& e : g.edges())
    os << "  " << e.from << " -> " << e.to << " [kind=" << to_string(e.kind) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace bruhat
