#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hist/errors.hpp"

namespace hist {

using Vertex = std::size_t;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

namespace detail {

inline std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

template <class F>
void for_each_bit(std::span<const std::uint64_t> words, F&& f) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits != 0) {
      f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
}

inline std::size_t popcount(std::span<const std::uint64_t> words) {
  std::size_t c = 0;
  for (auto w : words)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

} // namespace detail

/// Position of the pair (i, j), i < j, in the column-wise upper-triangle order
/// used both by graph6 and by labeled edge masks: pairs sorted by j, then i.
constexpr std::size_t triangle_index(Vertex i, Vertex j) { return j * (j - 1) / 2 + i; }

constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Membership bitset over 0..universe-1.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(detail::words_for(universe), 0) {}

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (auto v : members)
      insert(v);
  }

  std::size_t universe() const noexcept { return universe_; }

  void insert(Vertex v) {
    check(v);
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
  }

  void erase(Vertex v) {
    check(v);
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
  }

  std::size_t size() const noexcept { return detail::popcount(words_); }
  bool empty() const noexcept { return size() == 0; }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    detail::for_each_bit(words_, [&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  void check(Vertex v) const {
    if (v >= universe_)
      throw InputError("vertex " + std::to_string(v) + " outside set universe of size " + std::to_string(universe_));
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1 with one neighbour bitset row per vertex.
/// Symmetric and loop-free by construction; every mutator preserves both properties.
class Graph {
public:
  Graph() = default;

  explicit Graph(std::size_t n) : n_(n), words_(detail::words_for(n)), bits_(n * words_, 0) {}

  Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (const auto& e : edges)
      add_edge(e.u, e.v);
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds the labeled graph whose edge set is the bitmask over triangle_index order.
  /// Requires C(n,2) <= 64.
  static Graph from_edge_mask(std::size_t n, std::uint64_t mask) {
    if (pair_count(n) > 64)
      throw InputError("edge masks support at most 11 vertices");
    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i, ++k)
        if ((mask >> k) & 1U) {
          g.set(i, j);
          g.set(j, i);
          ++g.m_;
        }
    return g;
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool has_edge(Vertex a, Vertex b) const noexcept {
    return a < n_ && b < n_ && ((bits_[a * words_ + b / 64] >> (b % 64)) & 1U) != 0;
  }

  void add_edge(Vertex a, Vertex b) {
    check_pair(a, b);
    if (has_edge(a, b))
      return;
    set(a, b);
    set(b, a);
    ++m_;
  }

  void remove_edge(Vertex a, Vertex b) {
    check_pair(a, b);
    if (!has_edge(a, b))
      return;
    clear(a, b);
    clear(b, a);
    --m_;
  }

  std::span<const std::uint64_t> row(Vertex v) const noexcept { return {bits_.data() + v * words_, words_}; }

  /// Unchecked degree; see hist::degree for the range-checked operation.
  std::size_t degree(Vertex v) const noexcept { return detail::popcount(row(v)); }

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    detail::for_each_bit(row(v), std::forward<F>(f));
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
    return out;
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for_each_neighbor(u, [&](Vertex v) {
        if (u < v)
          out.push_back({u, v});
      });
    return out;
  }

  /// Edge bitmask over triangle_index order; requires C(n,2) <= 64.
  std::uint64_t edge_mask() const {
    if (pair_count(n_) > 64)
      throw InputError("edge masks support at most 11 vertices");
    std::uint64_t mask = 0;
    for (const auto& e : edges())
      mask |= std::uint64_t{1} << triangle_index(e.u, e.v);
    return mask;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  void set(Vertex a, Vertex b) noexcept { bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64); }
  void clear(Vertex a, Vertex b) noexcept { bits_[a * words_ + b / 64] &= ~(std::uint64_t{1} << (b % 64)); }

  void check_pair(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_)
      throw InputError("edge endpoint out of range for graph of order " + std::to_string(n_));
    if (a == b)
      throw InputError("loops are not allowed (vertex " + std::to_string(a) + ")");
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline std::size_t degree(const Graph& g, Vertex v) {
  if (v >= g.order())
    throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " + std::to_string(g.order()));
  return g.degree(v);
}

inline std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    d = std::max(d, g.degree(v));
  return d;
}

inline std::size_t min_degree(const Graph& g) {
  if (g.order() == 0)
    return 0;
  std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    d = std::min(d, g.degree(v));
  return d;
}

namespace detail {

/// Vertices reachable from `start` avoiding `removed` (may be kNone). Bitset BFS.
inline std::vector<std::uint64_t> reach(const Graph& g, Vertex start, Vertex removed) {
  const std::size_t words = words_for(g.order());
  std::vector<std::uint64_t> seen(words, 0), frontier(words, 0), next(words, 0);
  seen[start / 64] |= std::uint64_t{1} << (start % 64);
  frontier = seen;
  std::vector<std::uint64_t> allowed(words, ~std::uint64_t{0});
  if (g.order() % 64 != 0)
    allowed[words - 1] = (std::uint64_t{1} << (g.order() % 64)) - 1;
  if (removed < g.order())
    allowed[removed / 64] &= ~(std::uint64_t{1} << (removed % 64));
  bool grew = true;
  while (grew) {
    std::fill(next.begin(), next.end(), 0);
    for_each_bit(frontier, [&](Vertex v) {
      auto r = g.row(v);
      for (std::size_t w = 0; w < words; ++w)
        next[w] |= r[w];
    });
    grew = false;
    for (std::size_t w = 0; w < words; ++w) {
      frontier[w] = next[w] & allowed[w] & ~seen[w];
      seen[w] |= frontier[w];
      grew = grew || frontier[w] != 0;
    }
  }
  return seen;
}

inline constexpr Vertex kNone = static_cast<Vertex>(-1);

} // namespace detail

inline bool is_connected(const Graph& g) {
  if (g.order() == 0)
    throw InputError("connectivity is undefined for the empty graph");
  return detail::popcount(detail::reach(g, 0, detail::kNone)) == g.order();
}

/// Articulation vertices by the low-link depth-first procedure.
inline VertexSet cut_vertices(const Graph& g) {
  if (g.order() == 0 || !is_connected(g))
    throw InputError("cut_vertices requires a connected graph");
  const std::size_t n = g.order();
  VertexSet cuts(n);
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<bool> visited(n, false);
  std::size_t timer = 0;

  // Iterative DFS; each frame remembers the neighbour list cursor.
  struct Frame {
    Vertex v;
    Vertex parent;
    std::vector<Vertex> nbrs;
    std::size_t next = 0;
    std::size_t children = 0;
  };
  std::vector<Frame> stack;
  visited[0] = true;
  disc[0] = low[0] = ++timer;
  stack.push_back({0, detail::kNone, g.neighbors(0)});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < f.nbrs.size()) {
      Vertex w = f.nbrs[f.next++];
      if (!visited[w]) {
        visited[w] = true;
        disc[w] = low[w] = ++timer;
        ++f.children;
        stack.push_back({w, f.v, g.neighbors(w)});
      } else if (w != f.parent) {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    const Frame done = std::move(stack.back());
    stack.pop_back();
    if (stack.empty()) {
      if (done.children >= 2)
        cuts.insert(done.v);
      break;
    }
    Frame& parent = stack.back();
    low[parent.v] = std::min(low[parent.v], low[done.v]);
    if (parent.parent != detail::kNone && low[done.v] >= disc[parent.v])
      cuts.insert(parent.v);
  }
  return cuts;
}

inline bool is_2_connected(const Graph& g) {
  if (g.order() < 3)
    throw InputError("2-connectivity is defined for graphs with at least 3 vertices");
  return is_connected(g) && cut_vertices(g).empty();
}

/// Subgraph induced by `s`, relabelled to 0..|s|-1 in increasing vertex order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw InputError("vertex set universe does not match graph order");
  const auto keep = s.members();
  if (keep.empty())
    throw InputError("induced subgraph of an empty vertex set");
  Graph h(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      if (g.has_edge(keep[a], keep[b]))
        h.add_edge(a, b);
  return h;
}

// ---------------------------------------------------------------------------
// Named families

enum class Family { complete, path, cycle, complete_bipartite, L, B, star };

inline Graph complete_graph(std::size_t n) {
  if (n < 1)
    throw InputError("K_n needs n >= 1");
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      g.add_edge(i, j);
  return g;
}

inline Graph path_graph(std::size_t n) {
  if (n < 1)
    throw InputError("P_n needs n >= 1");
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i)
    g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3)
    throw InputError("C_n needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

/// Parts {0..p-1} and {p..p+q-1}.
inline Graph complete_bipartite(std::size_t p, std::size_t q) {
  if (p < 1 || q < 1)
    throw InputError("K_{p,q} needs p, q >= 1");
  Graph g(p + q);
  for (Vertex i = 0; i < p; ++i)
    for (Vertex j = p; j < p + q; ++j)
      g.add_edge(i, j);
  return g;
}

/// K_{1,leaves}, centre 0.
inline Graph star_graph(std::size_t leaves) { return complete_bipartite(1, leaves); }

/// K_{n-2} on {2..n-1} plus the pendant path 0-1-2.
inline Graph make_L(std::size_t n) {
  if (n < 4)
    throw InputError("L_n needs n >= 4");
  Graph g(n);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  for (Vertex i = 2; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      g.add_edge(i, j);
  return g;
}

/// K_{n-3} on {3..n-1} plus the path 0-1-2 with ends attached to 3 and 4.
inline Graph make_B(std::size_t n) {
  if (n < 6)
    throw InputError("B_n needs n >= 6");
  Graph g(n);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(2, 4);
  for (Vertex i = 3; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      g.add_edge(i, j);
  return g;
}

inline Graph make_family(Family family, std::span<const std::size_t> params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw InputError("family expects " + std::to_string(k) + " parameter(s), got " + std::to_string(params.size()));
  };
  switch (family) {
  case Family::complete:
    need(1);
    return complete_graph(params[0]);
  case Family::path:
    need(1);
    return path_graph(params[0]);
  case Family::cycle:
    need(1);
    return cycle_graph(params[0]);
  case Family::complete_bipartite:
    need(2);
    return complete_bipartite(params[0], params[1]);
  case Family::L:
    need(1);
    return make_L(params[0]);
  case Family::B:
    need(1);
    return make_B(params[0]);
  case Family::star:
    need(1);
    return star_graph(params[0]);
  }
  throw InputError("unknown family");
}

inline Graph make_family(Family family, std::initializer_list<std::size_t> params) {
  return make_family(family, std::span<const std::size_t>(params.begin(), params.size()));
}

/// Accepts the short names used on the command line (K, P, C, Kpq, L, B, star).
inline Family family_from_name(std::string_view name) {
  if (name == "K" || name == "complete")
    return Family::complete;
  if (name == "P" || name == "path")
    return Family::path;
  if (name == "C" || name == "cycle")
    return Family::cycle;
  if (name == "Kpq" || name == "complete_bipartite")
    return Family::complete_bipartite;
  if (name == "L")
    return Family::L;
  if (name == "B")
    return Family::B;
  if (name == "star" || name == "S")
    return Family::star;
  throw InputError("unknown family '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Extremal family recognition

namespace detail {

/// True when every vertex outside `excluded` is adjacent to every other one.
inline bool rest_is_clique(const Graph& g, std::initializer_list<Vertex> excluded) {
  auto skip = [&](Vertex v) { return std::find(excluded.begin(), excluded.end(), v) != excluded.end(); };
  const std::size_t rest = g.order() - excluded.size();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (skip(v))
      continue;
    std::size_t inside = 0;
    g.for_each_neighbor(v, [&](Vertex w) { inside += skip(w) ? 0 : 1; });
    if (inside != rest - 1)
      return false;
  }
  return true;
}

inline Vertex other_neighbor(const Graph& g, Vertex v, Vertex not_this) {
  Vertex out = kNone;
  g.for_each_neighbor(v, [&](Vertex w) {
    if (w != not_this)
      out = w;
  });
  return out;
}

} // namespace detail

/// G is isomorphic to L_n of its own order. The edge count pins the construction once a
/// degree-1 vertex p with a degree-2 neighbour q leaves a clique on the remaining n-2 vertices.
inline bool matches_Ln(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 4 || g.size() != pair_count(n - 2) + 2)
    return false;
  for (Vertex p = 0; p < n; ++p) {
    if (g.degree(p) != 1)
      continue;
    const Vertex q = g.neighbors(p).front();
    if (g.degree(q) != 2)
      continue;
    if (detail::rest_is_clique(g, {p, q}))
      return true;
  }
  return false;
}

/// G is isomorphic to B_n of its own order: a path s1-s2-s3 of degree-2 vertices whose ends
/// attach to distinct vertices of a clique on the other n-3 vertices.
inline bool matches_Bn(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 6 || g.size() != pair_count(n - 3) + 4)
    return false;
  for (Vertex mid = 0; mid < n; ++mid) {
    if (g.degree(mid) != 2)
      continue;
    const auto ends = g.neighbors(mid);
    const Vertex s1 = ends[0], s3 = ends[1];
    if (g.degree(s1) != 2 || g.degree(s3) != 2)
      continue;
    const Vertex a = detail::other_neighbor(g, s1, mid);
    const Vertex b = detail::other_neighbor(g, s3, mid);
    if (a == b || a == s3 || b == s1)
      continue;
    if (detail::rest_is_clique(g, {s1, mid, s3}))
      return true;
  }
  return false;
}

} // namespace hist
