#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tildecube/distance.hpp"
#include "tildecube/word.hpp"

namespace tildecube {

class CubeGraph;

CubeGraph build(int order, Metric metric, std::optional<BinaryWord> avoided = std::nullopt);
CubeGraph build_tilde_hypercube_recursive(int order);
CubeGraph build_tilde_fibonacci_recursive(int order);

namespace detail {
CubeGraph make_graph(int order, Metric metric, std::optional<BinaryWord> avoided,
                     std::vector<BinaryWord> vertices,
                     const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edge_bits);
}

/// An undirected graph on equal-length binary words: the hypercube Q_n, the
/// tilde-hypercube Q~_n, or the subgraph of either induced by the f-free
/// words (Fibonacci cubes are the f = 11 case). Vertices are stored in
/// lexicographic order; adjacency is kept as sorted neighbor index lists.
/// Immutable after construction, so concurrent queries are safe.
class CubeGraph {
 public:
  int order() const { return order_; }
  Metric metric() const { return metric_; }
  const std::optional<BinaryWord>& avoided() const { return avoided_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  std::int64_t edge_count() const { return edge_count_; }
  const std::vector<BinaryWord>& vertices() const { return vertices_; }
  const BinaryWord& vertex(int idx) const { return vertices_[static_cast<std::size_t>(idx)]; }
  const std::vector<int>& neighbors(int idx) const { return adj_[static_cast<std::size_t>(idx)]; }

  /// Index of w in the vertex list, if present. Full cubes are indexed
  /// directly by the packed bits; avoiding cubes use binary search.
  std::optional<int> vertex_index(const BinaryWord& w) const {
    if (w.length() != order_) return std::nullopt;
    if (!avoided_) return static_cast<int>(w.bits());
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), w);
    if (it == vertices_.end() || *it != w) return std::nullopt;
    return static_cast<int>(it - vertices_.begin());
  }

  bool contains(const BinaryWord& w) const { return vertex_index(w).has_value(); }

  /// Edge list as index pairs (i < j), lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(edge_count_));
    for (int i = 0; i < vertex_count(); ++i)
      for (int j : adj_[static_cast<std::size_t>(i)])
        if (j > i) es.emplace_back(i, j);
    return es;
  }

  /// Equality as labeled graphs: same parameters, vertex set and edge set.
  friend bool operator==(const CubeGraph& a, const CubeGraph& b) {
    return a.order_ == b.order_ && a.metric_ == b.metric_ && a.avoided_ == b.avoided_ &&
           a.vertices_ == b.vertices_ && a.adj_ == b.adj_;
  }

 private:
  CubeGraph(int order, Metric metric, std::optional<BinaryWord> avoided)
      : order_(order), metric_(metric), avoided_(std::move(avoided)) {}

  friend CubeGraph build(int, Metric, std::optional<BinaryWord>);
  friend CubeGraph detail::make_graph(int, Metric, std::optional<BinaryWord>,
                                      std::vector<BinaryWord>,
                                      const std::vector<std::pair<std::uint64_t, std::uint64_t>>&);

  int order_;
  Metric metric_;
  std::optional<BinaryWord> avoided_;
  std::vector<BinaryWord> vertices_;
  std::vector<std::vector<int>> adj_;
  std::int64_t edge_count_ = 0;
};

/// Builds Q_n / Q~_n, or the f-free induced subgraph when `avoided` is set.
///
/// Adjacency comes from a candidate scan instead of all-pairs distances: the
/// distance-1 neighbors of w are exactly the single-bit flips plus, under the
/// tilde metric, the swaps of unequal adjacent symbols. Each candidate that is
/// itself a vertex yields an edge.
inline CubeGraph build(int order, Metric metric, std::optional<BinaryWord> avoided) {
  if (order < 1) throw std::invalid_argument("build: order must be >= 1");
  if (order > BinaryWord::max_length)
    throw std::invalid_argument("build: order exceeds the 64-symbol word limit");
  if (avoided && avoided->empty())
    throw std::invalid_argument("build: avoided factor must be non-empty");

  CubeGraph g(order, metric, avoided);
  if (avoided) {
    g.vertices_ = enumerate_f_free(order, *avoided);
  } else {
    if (order > 30) throw std::invalid_argument("build: full cube of this order will not fit");
    g.vertices_.reserve(std::size_t{1} << order);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << order); ++v)
      g.vertices_.push_back(BinaryWord::from_bits(v, order));
  }

  const int n_vertices = g.vertex_count();
  g.adj_.assign(static_cast<std::size_t>(n_vertices), {});
  std::int64_t directed = 0;
  for (int i = 0; i < n_vertices; ++i) {
    const BinaryWord w = g.vertices_[static_cast<std::size_t>(i)];
    auto& row = g.adj_[static_cast<std::size_t>(i)];
    auto try_candidate = [&](const BinaryWord& c) {
      if (const auto j = g.vertex_index(c)) row.push_back(*j);
    };
    for (int p = 1; p <= order; ++p) try_candidate(w.with_flipped(p));
    if (metric == Metric::Tilde)
      for (int p = 1; p < order; ++p)
        if (w[p] != w[p + 1]) try_candidate(w.with_swapped(p));
    std::sort(row.begin(), row.end());
    directed += static_cast<std::int64_t>(row.size());
  }
  g.edge_count_ = directed / 2;
  return g;
}

namespace detail {

/// Assembles a CubeGraph from explicit vertex and edge lists (packed-bit
/// pairs). Used by the recursive constructions; every edge endpoint must be a
/// listed vertex.
inline CubeGraph make_graph(int order, Metric metric, std::optional<BinaryWord> avoided,
                            std::vector<BinaryWord> vertices,
                            const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edge_bits) {
  CubeGraph g(order, metric, std::move(avoided));
  std::sort(vertices.begin(), vertices.end());
  g.vertices_ = std::move(vertices);
  g.adj_.assign(g.vertices_.size(), {});
  for (const auto& [a, b] : edge_bits) {
    const auto i = g.vertex_index(BinaryWord::from_bits(a, order));
    const auto j = g.vertex_index(BinaryWord::from_bits(b, order));
    if (!i || !j) throw std::logic_error("make_graph: edge endpoint is not a vertex");
    g.adj_[static_cast<std::size_t>(*i)].push_back(*j);
    g.adj_[static_cast<std::size_t>(*j)].push_back(*i);
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());
  g.edge_count_ = static_cast<std::int64_t>(edge_bits.size());
  return g;
}

}  // namespace detail

/// Q~_n built by the recursive construction: two copies of Q~_{n-1} suffixed
/// 0 and 1, an edge (u0, u1) for every u of length n-1, and an edge
/// (u'10, u'01) for every u' of length n-2. Produces exactly the same labeled
/// graph as build(order, Tilde).
inline CubeGraph build_tilde_hypercube_recursive(int order) {
  if (order < 1)
    throw std::invalid_argument("build_tilde_hypercube_recursive: order must be >= 1");
  if (order > 26)
    throw std::invalid_argument("build_tilde_hypercube_recursive: order too large");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges{{0, 1}};  // Q~_1
  for (int k = 2; k <= order; ++k) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> next;
    next.reserve(2 * edges.size() + (std::size_t{1} << (k - 1)) + (std::size_t{1} << (k - 2)));
    for (const auto& [a, b] : edges) {
      next.emplace_back(a << 1, b << 1);
      next.emplace_back((a << 1) | 1, (b << 1) | 1);
    }
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << (k - 1)); ++u)
      next.emplace_back(u << 1, (u << 1) | 1);
    for (std::uint64_t up = 0; up < (std::uint64_t{1} << (k - 2)); ++up)
      next.emplace_back((up << 2) | 0b10, (up << 2) | 0b01);
    edges = std::move(next);
  }
  std::vector<BinaryWord> vertices;
  vertices.reserve(std::size_t{1} << order);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << order); ++v)
    vertices.push_back(BinaryWord::from_bits(v, order));
  return detail::make_graph(order, Metric::Tilde, std::nullopt, std::move(vertices), edges);
}

/// F~_n (the 11-free subgraph of Q~_n) built recursively: a copy of F~_{n-1}
/// suffixed 0, a copy of F~_{n-2} suffixed 01, and cross edges (v00, v01) and
/// (v10, v01) for v of length n-2 — the latter only when v10 is itself
/// 11-free, i.e. when v ends in 0. Identical to build(order, Tilde, 11).
inline CubeGraph build_tilde_fibonacci_recursive(int order) {
  if (order < 1)
    throw std::invalid_argument("build_tilde_fibonacci_recursive: order must be >= 1");
  if (order > 40)
    throw std::invalid_argument("build_tilde_fibonacci_recursive: order too large");
  using Edges = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
  const BinaryWord f11 = BinaryWord::from_string("11");

  std::vector<std::uint64_t> verts_prev{0, 1};              // F~_1
  Edges edges_prev{{0, 1}};
  std::vector<std::uint64_t> verts_cur{0b00, 0b01, 0b10};   // F~_2
  Edges edges_cur{{0b00, 0b10}, {0b00, 0b01}, {0b01, 0b10}};

  if (order == 1) {
    std::vector<BinaryWord> vs{BinaryWord::from_string("0"), BinaryWord::from_string("1")};
    return detail::make_graph(1, Metric::Tilde, f11, std::move(vs), edges_prev);
  }
  for (int k = 3; k <= order; ++k) {
    std::vector<std::uint64_t> verts_next;
    verts_next.reserve(verts_cur.size() + verts_prev.size());
    for (std::uint64_t u : verts_cur) verts_next.push_back(u << 1);
    for (std::uint64_t v : verts_prev) verts_next.push_back((v << 2) | 0b01);

    Edges edges_next;
    edges_next.reserve(edges_cur.size() + edges_prev.size() + verts_cur.size());
    for (const auto& [a, b] : edges_cur) edges_next.emplace_back(a << 1, b << 1);
    for (const auto& [a, b] : edges_prev)
      edges_next.emplace_back((a << 2) | 0b01, (b << 2) | 0b01);
    for (std::uint64_t v : verts_prev) {
      edges_next.emplace_back(v << 2, (v << 2) | 0b01);
      if ((v & 1) == 0) edges_next.emplace_back((v << 2) | 0b10, (v << 2) | 0b01);
    }

    verts_prev = std::move(verts_cur);
    edges_prev = std::move(edges_cur);
    verts_cur = std::move(verts_next);
    edges_cur = std::move(edges_next);
  }
  std::vector<BinaryWord> vs;
  vs.reserve(verts_cur.size());
  for (std::uint64_t v : verts_cur) vs.push_back(BinaryWord::from_bits(v, order));
  return detail::make_graph(order, Metric::Tilde, f11, std::move(vs), edges_cur);
}

/// Shortest-path lengths from `source` to every vertex; -1 where unreachable.
inline std::vector<int> bfs_distances(const CubeGraph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> queue;
  queue.reserve(dist.size());
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int at = queue[head];
    const int next = dist[static_cast<std::size_t>(at)] + 1;
    for (int nb : g.neighbors(at)) {
      if (dist[static_cast<std::size_t>(nb)] >= 0) continue;
      dist[static_cast<std::size_t>(nb)] = next;
      queue.push_back(nb);
    }
  }
  return dist;
}

/// Shortest-path length between two vertices of g; empty when unreachable.
/// Non-vertex arguments are rejected.
inline std::optional<int> bfs_distance(const CubeGraph& g, const BinaryWord& u,
                                       const BinaryWord& v) {
  const auto su = g.vertex_index(u);
  const auto sv = g.vertex_index(v);
  if (!su) throw std::invalid_argument("bfs_distance: " + u.str() + " is not a vertex");
  if (!sv) throw std::invalid_argument("bfs_distance: " + v.str() + " is not a vertex");
  const int d = bfs_distances(g, *su)[static_cast<std::size_t>(*sv)];
  if (d < 0) return std::nullopt;
  return d;
}

/// Maximum pairwise distance. The graph must be connected; if it is not, the
/// error names two unreachable vertices.
inline int diameter(const CubeGraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("diameter: empty graph");
  const auto from0 = bfs_distances(g, 0);
  for (int i = 0; i < g.vertex_count(); ++i)
    if (from0[static_cast<std::size_t>(i)] < 0)
      throw std::runtime_error("diameter: graph is disconnected (" + g.vertex(0).str() +
                               " cannot reach " + g.vertex(i).str() + ")");
  int best = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    const auto dist = bfs_distances(g, s);
    for (int d : dist) best = std::max(best, d);
  }
  return best;
}

}  // namespace tildecube
