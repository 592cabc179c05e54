#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hist/errors.hpp"
#include "hist/graph.hpp"
#include "hist/hist_search.hpp"

namespace hist {

/// Which extremal statement a replay follows.
enum class ProofSetting { one_connected, two_connected };

enum class ProofConclusion {
  hist_constructed,    ///< an explicit HIST was emitted and validated
  extremal_L,          ///< G is L_n
  extremal_B,          ///< G is B_n
  outside_proof_cases, ///< configuration only excluded by an edge-count / spectral argument
};

/// Record of one deterministic case-analysis replay.
struct ProofTrace {
  std::string case_label;
  std::vector<std::pair<std::string, Vertex>> vertex_roles;
  ProofConclusion conclusion = ProofConclusion::outside_proof_cases;
  std::optional<HistOutcome> outcome; ///< present iff conclusion == hist_constructed

  std::optional<Vertex> role(std::string_view name) const {
    for (const auto& [k, v] : vertex_roles)
      if (k == name)
        return v;
    return std::nullopt;
  }
};

namespace detail {

class TraceBuilder {
public:
  explicit TraceBuilder(const Graph& g) : g_(g) {}

  TraceBuilder& role(std::string name, Vertex v) {
    if (v >= g_.order())
      throw InvariantError("role " + name + " maps to a nonexistent vertex");
    for (const auto& [k, w] : trace_.vertex_roles)
      if (w == v)
        throw InvariantError("roles " + k + " and " + name + " share vertex " + std::to_string(v));
    trace_.vertex_roles.emplace_back(std::move(name), v);
    return *this;
  }

  ProofTrace hist(std::string label, std::vector<Edge> tree) {
    if (!is_hist(g_, tree))
      throw InvariantError("case " + label + " produced an edge set that is not a HIST");
    trace_.case_label = std::move(label);
    trace_.conclusion = ProofConclusion::hist_constructed;
    trace_.outcome = HistOutcome::found(std::move(tree));
    return std::move(trace_);
  }

  ProofTrace extremal(std::string label, ProofConclusion which) {
    trace_.case_label = std::move(label);
    trace_.conclusion = which;
    return std::move(trace_);
  }

  ProofTrace outside(std::string label) {
    trace_.case_label = std::move(label);
    trace_.conclusion = ProofConclusion::outside_proof_cases;
    return std::move(trace_);
  }

private:
  const Graph& g_;
  ProofTrace trace_;
};

/// Edges from `hub` to every neighbour except those listed, plus `extra`.
inline std::vector<Edge> star_except(const Graph& g, Vertex hub, std::initializer_list<Vertex> skip,
                                     std::initializer_list<Edge> extra) {
  std::vector<Edge> t;
  g.for_each_neighbor(hub, [&](Vertex w) {
    if (std::find(skip.begin(), skip.end(), w) == skip.end())
      t.push_back(make_edge(hub, w));
  });
  for (const auto& e : extra)
    t.push_back(make_edge(e.u, e.v));
  return t;
}

inline Vertex max_degree_vertex(const Graph& g) {
  Vertex best = 0;
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) > g.degree(best))
      best = v;
  return best;
}

inline std::vector<Vertex> non_neighbors(const Graph& g, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < g.order(); ++w)
    if (w != v && !g.has_edge(v, w))
      out.push_back(w);
  return out;
}

inline std::vector<Vertex> without(std::vector<Vertex> vs, Vertex drop) {
  vs.erase(std::remove(vs.begin(), vs.end(), drop), vs.end());
  return vs;
}

inline bool contains(const std::vector<Vertex>& vs, Vertex v) { return std::find(vs.begin(), vs.end(), v) != vs.end(); }

/// First edge (a, b) with a in `from`, b in `to`, a != b; lexicographic in (a, b).
inline std::optional<std::pair<Vertex, Vertex>> first_edge_between(const Graph& g, const std::vector<Vertex>& from,
                                                                    const std::vector<Vertex>& to) {
  for (auto a : from)
    for (auto b : to)
      if (a != b && g.has_edge(a, b))
        return std::pair{a, b};
  return std::nullopt;
}

inline std::optional<std::pair<Vertex, Vertex>> first_edge_within(const Graph& g, const std::vector<Vertex>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (g.has_edge(set[i], set[j]))
        return std::pair{set[i], set[j]};
  return std::nullopt;
}

inline Vertex first_other(const std::vector<Vertex>& set, std::initializer_list<Vertex> avoid) {
  for (auto v : set)
    if (std::find(avoid.begin(), avoid.end(), v) == avoid.end())
      return v;
  return kNone;
}

// -- connected graphs, max degree >= n-2 ------------------------------------

inline ProofTrace replay_connected(const Graph& g) {
  const std::size_t n = g.order();
  TraceBuilder tb(g);
  const Vertex x = max_degree_vertex(g);
  tb.role("x", x);
  if (g.degree(x) == n - 1)
    return tb.hist("connected/maxdeg=n-1/star", star_except(g, x, {}, {}));

  const Vertex y = non_neighbors(g, x).front();
  tb.role("y", y);
  const auto nx = g.neighbors(x);
  const auto attach = g.neighbors(y); // all inside N(x)
  for (auto xi : attach)
    for (auto xj : nx)
      if (xj != xi && g.has_edge(xi, xj)) {
        tb.role("x_i", xi).role("x_j", xj);
        return tb.hist("connected/maxdeg=n-2/attachment-chord", star_except(g, x, {xj}, {{xi, y}, {xi, xj}}));
      }
  // Every attachment x_i now has N(x_i) = {x, y}.
  if (attach.size() >= 2)
    return tb.outside("connected/maxdeg=n-2/several-attachments");
  tb.role("x_1", attach.front());
  if (matches_Ln(g))
    return tb.extremal("connected/maxdeg=n-2/single-attachment/L_n", ProofConclusion::extremal_L);
  return tb.outside("connected/maxdeg=n-2/single-attachment/proper-subgraph-of-L_n");
}

// -- 2-connected graphs, max degree >= n-3 -----------------------------------

inline ProofTrace replay_two_connected_n2(const Graph& g, TraceBuilder& tb, Vertex u) {
  const Vertex v = non_neighbors(g, u).front();
  tb.role("v", v);
  const auto nv = g.neighbors(v);
  if (auto e = first_edge_within(g, nv)) {
    const auto [ur, us] = *e;
    tb.role("u_r", ur).role("u_s", us);
    return tb.hist("2-connected/maxdeg=n-2/adjacent-attachments", star_except(g, u, {us}, {{ur, v}, {ur, us}}));
  }
  if (nv.size() == g.order() - 2)
    return tb.outside("2-connected/maxdeg=n-2/K_{2,n-2}");
  std::vector<Vertex> rest;
  g.for_each_neighbor(u, [&](Vertex w) {
    if (!contains(nv, w))
      rest.push_back(w);
  });
  const auto e = first_edge_between(g, nv, rest);
  if (!e)
    throw InvariantError("2-connected graph with no edge from N(v) to N(u) \\ N(v)");
  const auto [ui, uj] = *e;
  tb.role("u_i", ui).role("u_j", uj);
  return tb.hist("2-connected/maxdeg=n-2/attachment-to-rest", star_except(g, u, {uj}, {{v, ui}, {ui, uj}}));
}

/// v1 ~ v2, no common neighbour. X1 = N(v1) - v2, X2 = N(v2) - v1, X = N(u) - X1 - X2.
inline ProofTrace replay_adjacent_pair(const Graph& g, Vertex u, Vertex a, Vertex b) {
  const auto nu = g.neighbors(u);
  auto sides = [&](Vertex p, Vertex q) { return std::pair{without(g.neighbors(p), q), without(g.neighbors(q), p)}; };
  std::vector<Vertex> rest;
  {
    const auto [xa, xb] = sides(a, b);
    for (auto w : nu)
      if (!contains(xa, w) && !contains(xb, w))
        rest.push_back(w);
  }
  auto start = [&](Vertex v1, Vertex v2) {
    TraceBuilder tb(g);
    tb.role("u", u).role("v_1", v1).role("v_2", v2);
    return tb;
  };

  if (rest.empty()) {
    const auto [x1, x2] = sides(a, b);
    if (auto e = first_edge_between(g, x1, x2)) {
      const auto [uc, uc1] = *e;
      auto tb = start(a, b);
      if (x1.size() == 1) {
        const Vertex u3 = first_other(x2, {uc1});
        tb.role("u_1", uc).role("u_2", uc1).role("u_3", u3);
        return tb.hist("2-connected/maxdeg=n-3/adjacent-pair/covering/cross-edge/|X1|=1",
                       star_except(g, u, {uc, u3}, {{uc, uc1}, {uc1, b}, {a, b}, {b, u3}}));
      }
      const Vertex u1 = first_other(x1, {uc});
      tb.role("u_1", u1).role("u_c", uc).role("u_c+1", uc1);
      return tb.hist("2-connected/maxdeg=n-3/adjacent-pair/covering/cross-edge/|X1|>=2",
                     star_except(g, u, {u1, uc1}, {{u1, a}, {uc, a}, {uc, uc1}, {a, b}}));
    }
    const auto in1 = first_edge_within(g, x1);
    const auto in2 = first_edge_within(g, x2);
    if (!in1 && !in2)
      return start(a, b).outside("2-connected/maxdeg=n-3/adjacent-pair/covering/independent");
    if (in1 && in2) {
      const auto [p1, p2] = *in1;
      const auto [q1, q2] = *in2;
      auto tb = start(a, b);
      tb.role("u_1", p1).role("u_2", p2).role("u_d-1", q1).role("u_d", q2);
      return tb.hist("2-connected/maxdeg=n-3/adjacent-pair/covering/both-sides-chorded",
                     star_except(g, u, {p2, q1}, {{p1, p2}, {p1, a}, {q1, q2}, {q2, b}}));
    }
    // Orient so that X1 carries the chord.
    const Vertex v1 = in1 ? a : b, v2 = in1 ? b : a;
    const auto chorded = in1 ? x1 : x2;
    auto tb = start(v1, v2);
    if (chorded.size() == 2)
      return tb.outside("2-connected/maxdeg=n-3/adjacent-pair/covering/one-chorded-side-of-two");
    const auto [c1, c2] = in1 ? *in1 : *in2;
    const Vertex uc = first_other(chorded, {c1, c2});
    tb.role("u_1", c1).role("u_2", c2).role("u_c", uc);
    return tb.hist("2-connected/maxdeg=n-3/adjacent-pair/covering/one-chorded-side",
                   star_except(g, u, {c2, uc}, {{c1, c2}, {c1, v1}, {v1, uc}, {v1, v2}}));
  }

  // X nonempty: some attachment reaches X since G - u is connected.
  for (auto [v1, v2] : {std::pair{a, b}, std::pair{b, a}}) {
    const auto x2 = sides(v1, v2).second;
    if (x2.size() < 2)
      continue;
    if (auto e = first_edge_between(g, x2, rest)) {
      const auto [ud, uj] = *e;
      const Vertex ud1 = first_other(x2, {ud});
      auto tb = start(v1, v2);
      tb.role("u_d", ud).role("u_d-1", ud1).role("u_j", uj);
      return tb.hist("2-connected/maxdeg=n-3/adjacent-pair/attachment-to-rest",
                     star_except(g, u, {ud1, uj}, {{ud, uj}, {ud1, v2}, {ud, v2}, {v1, v2}}));
    }
  }
  // Every side touching X is a single vertex u_d.
  for (auto [v1, v2] : {std::pair{a, b}, std::pair{b, a}}) {
    const auto [x1, x2] = sides(v1, v2);
    const auto e = first_edge_between(g, x2, rest);
    if (!e)
      continue;
    const auto [ud, uj] = *e;
    auto tb = start(v1, v2);
    tb.role("u_d", ud).role("u_j", uj);
    for (auto u1 : x1) {
      if (g.degree(u1) <= 2)
        continue;
      Vertex up = kNone;
      g.for_each_neighbor(u1, [&](Vertex w) {
        if (up == kNone && w != u && w != v1 && w != v2)
          up = w;
      });
      if (contains(x1, up)) {
        tb.role("u_1", u1).role("u_p", up);
        return tb.hist("2-connected/maxdeg=n-3/adjacent-pair/single-side/rich-attachment-inside",
                       star_except(g, u, {up, uj}, {{u1, up}, {u1, v1}, {ud, v2}, {ud, uj}}));
      }
      if (x1.size() < 2) {
        // X2 = {u_d}. Hang v_1 and a further neighbour u_p on u_1, v_2 and some u_q in X on u_d.
        for (auto p : g.neighbors(u1)) {
          if (p == u || p == v1 || (p != ud && !contains(rest, p)))
            continue;
          for (auto q : rest)
            if (q != p && g.has_edge(ud, q)) {
              TraceBuilder tb2(g);
              tb2.role("u", u).role("v_1", v1).role("v_2", v2).role("u_d", ud).role("u_1", u1).role("u_q", q);
              if (p != ud)
                tb2.role("u_p", p);
              return tb2.hist("2-connected/maxdeg=n-3/adjacent-pair/single-side/lone-rich-attachment",
                             star_except(g, u, {p, q}, {{u1, v1}, {u1, p}, {ud, v2}, {ud, q}}));
            }
        }
        return tb.outside("2-connected/maxdeg=n-3/adjacent-pair/single-side/lone-rich-attachment/shared-rest-neighbour");
      }
      const Vertex uc = first_other(x1, {u1});
      TraceBuilder tb2(g);
      tb2.role("u", u).role("v_1", v1).role("v_2", v2).role("u_1", u1).role("u_c", uc).role("u_p", up);
      return tb2.hist("2-connected/maxdeg=n-3/adjacent-pair/single-side/rich-attachment-outside",
                      star_except(g, u, {uc, up}, {{u1, up}, {u1, v1}, {v1, v2}, {v1, uc}}));
    }
    if (x1.size() >= 2)
      return tb.outside("2-connected/maxdeg=n-3/adjacent-pair/single-side/thin-attachments");
    tb.role("u_1", x1.front());
    if (matches_Bn(g))
      return tb.extremal("2-connected/maxdeg=n-3/adjacent-pair/path-of-three/B_n", ProofConclusion::extremal_B);
    return tb.outside("2-connected/maxdeg=n-3/adjacent-pair/path-of-three/proper-subgraph-of-B_n");
  }
  throw InvariantError("2-connected graph with no edge from N(v1) u N(v2) to the rest of N(u)");
}

/// v1 !~ v2, no common neighbour. Y = N(u) - N(v1) - N(v2).
inline ProofTrace replay_nonadjacent_pair(const Graph& g, Vertex u, Vertex a, Vertex b) {
  const auto na = g.neighbors(a), nb = g.neighbors(b);
  std::vector<Vertex> rest;
  g.for_each_neighbor(u, [&](Vertex w) {
    if (!contains(na, w) && !contains(nb, w))
      rest.push_back(w);
  });
  auto start = [&](Vertex v1, Vertex v2) {
    TraceBuilder tb(g);
    tb.role("u", u).role("v_1", v1).role("v_2", v2);
    return tb;
  };
  std::vector<std::pair<Vertex, Vertex>> cross;
  for (auto p : na)
    for (auto q : nb)
      if (g.has_edge(p, q))
        cross.emplace_back(p, q);

  if (rest.empty()) {
    if (cross.empty())
      throw InvariantError("2-connected graph with N(v1), N(v2) covering N(u) but no edge between them");
    if (cross.size() >= 2) {
      const auto [ui, uk] = cross[0];
      const auto [uj, ul] = cross[1];
      auto tb = start(a, b);
      if (ui != uj && uk != ul) {
        tb.role("u_i", ui).role("u_j", uj).role("u_k", uk).role("u_l", ul);
        return tb.hist("2-connected/maxdeg=n-3/split-pair/covering/two-disjoint-cross-edges",
                       star_except(g, u, {ui, ul}, {{uj, a}, {uj, ul}, {ui, uk}, {uk, b}}));
      }
      if (ui == uj) {
        tb.role("u_j", uj).role("u_k", uk).role("u_l", ul);
        return tb.hist("2-connected/maxdeg=n-3/split-pair/covering/cross-edges-share-v1-side",
                       star_except(g, u, {uj, ul}, {{uj, a}, {uj, ul}, {uj, uk}, {uk, b}}));
      }
      tb.role("u_i", ui).role("u_j", uj).role("u_l", ul);
      return tb.hist("2-connected/maxdeg=n-3/split-pair/covering/cross-edges-share-v2-side",
                     star_except(g, u, {uj, ul}, {{ui, a}, {ui, ul}, {uj, ul}, {ul, b}}));
    }
    const auto [pa, pb] = cross.front();
    const auto in_a = first_edge_within(g, na);
    const auto in_b = first_edge_within(g, nb);
    if (!in_a && !in_b)
      return start(a, b).outside("2-connected/maxdeg=n-3/split-pair/covering/independent");
    const Vertex v1 = in_a ? a : b, v2 = in_a ? b : a;
    const Vertex up = in_a ? pa : pb, up1 = in_a ? pb : pa;
    auto [s, t] = in_a ? *in_a : *in_b;
    if (s == up)
      std::swap(s, t);
    auto tb = start(v1, v2);
    tb.role("u_p", up).role("u_p+1", up1).role("u_s", s);
    if (t != up)
      tb.role("u_t", t);
    return tb.hist("2-connected/maxdeg=n-3/split-pair/covering/single-cross-edge",
                   star_except(g, u, {s, up}, {{t, v1}, {s, t}, {up, up1}, {up1, v2}}));
  }

  if (!cross.empty()) {
    for (bool flip : {false, true}) {
      const Vertex v1 = flip ? b : a, v2 = flip ? a : b;
      const auto& side = flip ? nb : na;
      const Vertex up = flip ? cross.front().second : cross.front().first;
      const Vertex up1 = flip ? cross.front().first : cross.front().second;
      if (auto e = first_edge_between(g, side, rest)) {
        const auto [ui, uj] = *e;
        auto tb = start(v1, v2);
        tb.role("u_p", up).role("u_p+1", up1).role("u_j", uj);
        if (ui != up)
          tb.role("u_i", ui);
        return tb.hist("2-connected/maxdeg=n-3/split-pair/cross-edge-and-attachment-to-rest",
                       star_except(g, u, {up, uj}, {{ui, v1}, {ui, uj}, {up, up1}, {up1, v2}}));
      }
    }
    throw InvariantError("2-connected graph with no edge from N(v1) u N(v2) to the rest of N(u)");
  }

  for (auto p : na)
    for (auto q : nb)
      for (auto yj : rest)
        for (auto yk : rest)
          if (yj != yk && g.has_edge(p, yj) && g.has_edge(q, yk)) {
            auto tb = start(a, b);
            tb.role("u_1", p).role("u_q", q).role("u_j", yj).role("u_k", yk);
            return tb.hist("2-connected/maxdeg=n-3/split-pair/separate-attachments-to-rest",
                           star_except(g, u, {yj, yk}, {{p, a}, {p, yj}, {q, b}, {q, yk}}));
          }
  return start(a, b).outside("2-connected/maxdeg=n-3/split-pair/single-vertex-of-rest");
}

inline ProofTrace replay_two_connected(const Graph& g) {
  const std::size_t n = g.order();
  const Vertex u = max_degree_vertex(g);
  if (g.degree(u) == n - 1) {
    TraceBuilder tb(g);
    tb.role("u", u);
    return tb.hist("2-connected/maxdeg=n-1/star", star_except(g, u, {}, {}));
  }
  if (g.degree(u) == n - 2) {
    TraceBuilder tb(g);
    tb.role("u", u);
    return replay_two_connected_n2(g, tb, u);
  }
  const auto outside = non_neighbors(g, u);
  const Vertex a = outside[0], b = outside[1];
  for (auto w : g.neighbors(a))
    if (g.has_edge(w, b)) {
      TraceBuilder tb(g);
      tb.role("u", u).role("v_1", a).role("v_2", b).role("u_1", w);
      return tb.hist("2-connected/maxdeg=n-3/common-neighbor", star_except(g, u, {}, {{w, a}, {w, b}}));
    }
  if (g.has_edge(a, b))
    return replay_adjacent_pair(g, u, a, b);
  return replay_nonadjacent_pair(g, u, a, b);
}

} // namespace detail

/// Replays the extremal case analysis on g: picks a maximum-degree hub (lowest id on ties),
/// assigns the case roles and either emits the case's explicit HIST (validated), recognises
/// L_n / B_n, or reports that the configuration is only excluded by counting.
///
/// Preconditions: one_connected needs n >= 7, connected, max degree >= n-2;
/// two_connected needs n >= 8, 2-connected, max degree >= n-3.
inline ProofTrace proof_guided_hist(const Graph& g, ProofSetting setting) {
  const std::size_t n = g.order();
  if (setting == ProofSetting::one_connected) {
    if (n < 7 || !is_connected(g) || max_degree(g) + 2 < n)
      throw InputError("proof_guided_hist(one_connected) needs a connected graph, n >= 7, max degree >= n-2");
    return detail::replay_connected(g);
  }
  if (n < 8 || !is_2_connected(g) || max_degree(g) + 3 < n)
    throw InputError("proof_guided_hist(two_connected) needs a 2-connected graph, n >= 8, max degree >= n-3");
  return detail::replay_two_connected(g);
}

} // namespace hist
