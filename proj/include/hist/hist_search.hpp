#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hist/errors.hpp"
#include "hist/graph.hpp"

namespace hist {

/// A cut vertex of degree 2: every spanning tree keeps both its edges.
struct CutVertexDeg2 {
  Vertex v = 0;
  friend bool operator==(const CutVertexDeg2&, const CutVertexDeg2&) = default;
};

/// Path s0..s4 with d(s0), d(s4) >= 3 and d(s1) = d(s2) = d(s3) = 2.
struct P5Pattern {
  std::array<Vertex, 5> path{};
  friend bool operator==(const P5Pattern&, const P5Pattern&) = default;
};

/// Complete search found no HIST.
struct ExhaustedSearch {
  friend bool operator==(const ExhaustedSearch&, const ExhaustedSearch&) = default;
};

using Certificate = std::variant<CutVertexDeg2, P5Pattern, ExhaustedSearch>;

enum class Verdict { found, no_hist };

class HistOutcome {
public:
  static HistOutcome found(std::vector<Edge> tree) {
    HistOutcome o;
    o.verdict_ = Verdict::found;
    std::sort(tree.begin(), tree.end());
    o.tree_ = std::move(tree);
    return o;
  }

  static HistOutcome no_hist(Certificate cert) {
    HistOutcome o;
    o.verdict_ = Verdict::no_hist;
    o.certificate_ = cert;
    return o;
  }

  Verdict verdict() const noexcept { return verdict_; }
  bool has_hist() const noexcept { return verdict_ == Verdict::found; }
  const std::vector<Edge>& tree() const noexcept { return tree_; }
  const std::optional<Certificate>& certificate() const noexcept { return certificate_; }

private:
  Verdict verdict_ = Verdict::no_hist;
  std::vector<Edge> tree_;
  std::optional<Certificate> certificate_;
};

inline std::string certificate_name(const Certificate& c) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CutVertexDeg2>)
          return "CutVertexDeg2";
        else if constexpr (std::is_same_v<T, P5Pattern>)
          return "P5Pattern";
        else
          return "ExhaustedSearch";
      },
      c);
}

/// Spanning tree of g (n-1 edges of g, acyclic, covering every vertex) with no vertex of
/// tree-degree exactly 2. Independent of how the tree was produced.
inline bool is_hist(const Graph& g, const std::vector<Edge>& tree) {
  const std::size_t n = g.order();
  if (n == 0 || tree.size() != n - 1)
    return false;
  std::vector<std::size_t> parent(n), deg(n, 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v)
      v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : tree) {
    if (!g.has_edge(e.u, e.v))
      return false;
    const auto a = find(e.u), b = find(e.v);
    if (a == b)
      return false;
    parent[a] = b;
    ++deg[e.u];
    ++deg[e.v];
  }
  // n-1 acyclic edges on n vertices form a spanning tree.
  return std::none_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 2; });
}

/// Structural witnesses that no HIST exists. Absence of a certificate proves nothing.
inline std::optional<Certificate> no_hist_certificate(const Graph& g) {
  if (g.order() < 3 || !is_connected(g))
    throw InputError("no_hist_certificate requires a connected graph with n >= 3");
  const auto cuts = cut_vertices(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 2 && cuts.contains(v))
      return CutVertexDeg2{v};

  for (Vertex mid = 0; mid < g.order(); ++mid) {
    if (g.degree(mid) != 2)
      continue;
    const auto ends = g.neighbors(mid);
    const Vertex s1 = ends[0], s3 = ends[1];
    if (g.degree(s1) != 2 || g.degree(s3) != 2)
      continue;
    const Vertex s0 = detail::other_neighbor(g, s1, mid);
    const Vertex s4 = detail::other_neighbor(g, s3, mid);
    if (s0 == s3 || s4 == s1 || s0 == s4)
      continue;
    if (g.degree(s0) >= 3 && g.degree(s4) >= 3)
      return P5Pattern{{s0, s1, mid, s3, s4}};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Backtracking search

struct SearchOptions {
  std::uint64_t node_budget = 50'000'000;
};

namespace detail {

enum class EdgeState : std::uint8_t { open, in, out };

/// Decision state of the edge-by-edge HIST search. Copied on branching.
struct HistState {
  std::vector<EdgeState> state;
  std::vector<std::size_t> tree_deg;
  std::vector<std::size_t> open_deg;
  std::vector<std::size_t> comp; // component label of the partial forest
  std::size_t in_count = 0;
};

class HistSearch {
public:
  HistSearch(const Graph& g, const SearchOptions& opts) : g_(g), opts_(opts), edges_(g.edges()) {
    incident_.resize(g.order());
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      incident_[edges_[k].u].push_back(k);
      incident_[edges_[k].v].push_back(k);
    }
  }

  std::optional<std::vector<Edge>> run() {
    HistState s;
    const std::size_t n = g_.order();
    s.state.assign(edges_.size(), EdgeState::open);
    s.tree_deg.assign(n, 0);
    s.open_deg.resize(n);
    for (Vertex v = 0; v < n; ++v)
      s.open_deg[v] = incident_[v].size();
    s.comp.resize(n);
    std::iota(s.comp.begin(), s.comp.end(), 0);
    if (search(std::move(s)))
      return result_;
    return std::nullopt;
  }

private:
  bool include(HistState& s, std::size_t k) const {
    const auto [u, v] = edges_[k];
    if (s.comp[u] == s.comp[v])
      return false;
    s.state[k] = EdgeState::in;
    --s.open_deg[u];
    --s.open_deg[v];
    ++s.tree_deg[u];
    ++s.tree_deg[v];
    ++s.in_count;
    const auto from = s.comp[v], to = s.comp[u];
    for (auto& c : s.comp)
      if (c == from)
        c = to;
    return true;
  }

  void exclude(HistState& s, std::size_t k) const {
    s.state[k] = EdgeState::out;
    --s.open_deg[edges_[k].u];
    --s.open_deg[edges_[k].v];
  }

  // Applies forced moves until fixpoint. Returns false on contradiction.
  bool propagate(HistState& s) const {
    const std::size_t n = g_.order();
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < edges_.size(); ++k)
        if (s.state[k] == EdgeState::open && s.comp[edges_[k].u] == s.comp[edges_[k].v]) {
          exclude(s, k);
          changed = true;
        }
      if (s.in_count == n - 1) {
        for (std::size_t k = 0; k < edges_.size(); ++k)
          if (s.state[k] == EdgeState::open)
            exclude(s, k);
        return std::none_of(s.tree_deg.begin(), s.tree_deg.end(), [](std::size_t d) { return d == 2; });
      }
      for (Vertex v = 0; v < n; ++v) {
        const std::size_t t = s.tree_deg[v], r = s.open_deg[v];
        if (t + r == 0 || (t == 2 && r == 0))
          return false;
        // A leaf-to-be with one option, or a degree-2 vertex that must grow to 3.
        if (r == 1 && (t == 0 || t == 2)) {
          const auto k = open_edge_of(s, v);
          if (!include(s, k))
            return false;
          changed = true;
        }
      }
    }
    return spans(s);
  }

  std::size_t open_edge_of(const HistState& s, Vertex v) const {
    for (auto k : incident_[v])
      if (s.state[k] == EdgeState::open)
        return k;
    return edges_.size();
  }

  // The in + open edges still connect every vertex.
  bool spans(const HistState& s) const {
    const std::size_t n = g_.order();
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (auto k : incident_[v]) {
        if (s.state[k] == EdgeState::out)
          continue;
        const Vertex w = edges_[k].u == v ? edges_[k].v : edges_[k].u;
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  }

  bool search(HistState s) {
    if (++nodes_ > opts_.node_budget)
      throw BudgetExceeded("HIST search exceeded node budget of " + std::to_string(opts_.node_budget));
    if (!propagate(s))
      return false;
    if (s.in_count == g_.order() - 1) {
      result_.clear();
      for (std::size_t k = 0; k < edges_.size(); ++k)
        if (s.state[k] == EdgeState::in)
          result_.push_back(edges_[k]);
      return true;
    }
    // Highest-degree vertex with an open edge; lowest id on ties.
    Vertex pick = detail::kNone;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (s.open_deg[v] > 0 && (pick == detail::kNone || g_.degree(v) > g_.degree(pick)))
        pick = v;
    const std::size_t k = open_edge_of(s, pick);

    HistState with = s;
    if (include(with, k) && search(std::move(with)))
      return true;
    exclude(s, k);
    return search(std::move(s));
  }

  const Graph& g_;
  SearchOptions opts_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<Edge> result_;
  std::uint64_t nodes_ = 0;
};

} // namespace detail

/// Exact HIST decision. Certificates first, then complete backtracking.
inline HistOutcome find_hist(const Graph& g, const SearchOptions& opts = {}) {
  if (g.order() == 0 || !is_connected(g))
    throw InputError("find_hist requires a connected graph");
  if (g.order() <= 2)
    return HistOutcome::found(g.edges());
  if (auto cert = no_hist_certificate(g))
    return HistOutcome::no_hist(*cert);
  detail::HistSearch search(g, opts);
  if (auto tree = search.run()) {
    if (!is_hist(g, *tree))
      throw InvariantError("backtracking search returned an invalid HIST");
    return HistOutcome::found(std::move(*tree));
  }
  return HistOutcome::no_hist(ExhaustedSearch{});
}

// ---------------------------------------------------------------------------
// Brute-force oracle

struct OracleOptions {
  std::uint64_t tree_cap = 10'000'000;
  bool stop_at_first = false; ///< decision only: counts stop at the first HIST
};

struct OracleResult {
  HistOutcome outcome;
  std::uint64_t spanning_trees = 0;
  std::uint64_t hists = 0;
};

namespace detail {

/// Enumerates every spanning tree by deciding edges in order: contract (include, when the
/// endpoints are in different components) or delete (when the rest stays connected).
class SpanningTreeEnumerator {
public:
  SpanningTreeEnumerator(const Graph& g, const OracleOptions& opts) : g_(g), opts_(opts), edges_(g.edges()) {
    if (g.order() > 64)
      throw UnsupportedError("oracle_hist supports n <= 64");
  }

  OracleResult run() {
    const std::size_t n = g_.order();
    alive_.assign(n, 0);
    for (const auto& e : edges_) {
      alive_[e.u] |= std::uint64_t{1} << e.v;
      alive_[e.v] |= std::uint64_t{1} << e.u;
    }
    std::vector<std::size_t> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    deg_.assign(n, 0);
    chosen_.clear();
    recurse(0, comp);
    result_.outcome = witness_ ? HistOutcome::found(*witness_) : HistOutcome::no_hist(ExhaustedSearch{});
    return result_;
  }

private:
  bool done() const { return opts_.stop_at_first && witness_; }

  void recurse(std::size_t k, std::vector<std::size_t>& comp) {
    const std::size_t n = g_.order();
    if (chosen_.size() == n - 1) {
      leaf();
      return;
    }
    if (k == edges_.size() || done())
      return;
    const auto [u, v] = edges_[k];
    if (comp[u] != comp[v]) {
      auto merged = comp;
      const auto from = comp[v], to = comp[u];
      for (auto& c : merged)
        if (c == from)
          c = to;
      chosen_.push_back(edges_[k]);
      ++deg_[u];
      ++deg_[v];
      recurse(k + 1, merged);
      --deg_[u];
      --deg_[v];
      chosen_.pop_back();
    }
    if (done())
      return;
    alive_[u] &= ~(std::uint64_t{1} << v);
    alive_[v] &= ~(std::uint64_t{1} << u);
    if (still_connected())
      recurse(k + 1, comp);
    alive_[u] |= std::uint64_t{1} << v;
    alive_[v] |= std::uint64_t{1} << u;
  }

  // The graph minus deleted edges is connected.
  bool still_connected() const {
    const std::size_t n = g_.order();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1)
        next |= alive_[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == all;
  }

  void leaf() {
    if (++result_.spanning_trees > opts_.tree_cap)
      throw ResourceError("spanning-tree enumeration exceeded cap of " + std::to_string(opts_.tree_cap));
    if (std::none_of(deg_.begin(), deg_.end(), [](std::size_t d) { return d == 2; })) {
      ++result_.hists;
      if (!witness_)
        witness_ = chosen_;
    }
  }

  const Graph& g_;
  OracleOptions opts_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> alive_;
  std::vector<std::size_t> deg_;
  std::vector<Edge> chosen_;
  std::optional<std::vector<Edge>> witness_;
  OracleResult result_;
};

} // namespace detail

/// Exact verdict by enumerating all spanning trees. Independent of find_hist.
inline OracleResult oracle_hist(const Graph& g, const OracleOptions& opts = {}) {
  if (g.order() == 0 || !is_connected(g))
    throw InputError("oracle_hist requires a connected graph");
  return detail::SpanningTreeEnumerator(g, opts).run();
}

} // namespace hist
