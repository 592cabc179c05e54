#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hist/errors.hpp"
#include "hist/graph.hpp"
#include "hist/graph6.hpp"
#include "hist/hist_search.hpp"
#include "hist/spectral.hpp"

namespace hist {

inline constexpr std::size_t kMaxLabeledOrder = 8;

enum class Connectivity { any, connected, two_connected };

/// Cheap filters applied to labeled edge masks before a Graph is built.
struct Prescreen {
  std::size_t min_edges = 0;
  std::size_t min_max_degree = 0;
  Connectivity connectivity = Connectivity::any;
};

namespace detail {

/// Per-vertex incident-pair masks over triangle_index order.
inline std::vector<std::uint64_t> incidence_masks(std::size_t n) {
  std::vector<std::uint64_t> inc(n, 0);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      const auto bit = std::uint64_t{1} << triangle_index(i, j);
      inc[i] |= bit;
      inc[j] |= bit;
    }
  return inc;
}

inline void check_labeled_order(std::size_t n) {
  if (n > kMaxLabeledOrder)
    throw UnsupportedError("labeled enumeration supports n <= 8 (2^C(n,2) masks); use a graph6 corpus for larger n");
}

inline bool passes_connectivity(const Graph& g, Connectivity c) {
  switch (c) {
  case Connectivity::any:
    return true;
  case Connectivity::connected:
    return g.order() >= 1 && is_connected(g);
  case Connectivity::two_connected:
    return g.order() >= 3 && is_2_connected(g);
  }
  return false;
}

/// Deterministic hash used for 1-in-k subsampling of the labeled space.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Adjacency rows of a labeled graph on at most 11 vertices, one bitmask per vertex.
struct MaskRows {
  std::array<std::uint32_t, 11> row{};
  std::size_t n = 0;

  std::uint32_t all() const { return (std::uint32_t{1} << n) - 1; }

  // Vertices outside `removed` form a nonempty connected set.
  bool connected_without(std::uint32_t removed) const {
    const std::uint32_t keep = all() & ~removed;
    if (keep == 0)
      return false;
    std::uint32_t seen = keep & (~keep + 1), frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1)
        next |= row[static_cast<std::size_t>(std::countr_zero(f))];
      next &= keep;
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == keep;
  }

  bool two_connected() const {
    if (n < 3 || !connected_without(0))
      return false;
    for (std::size_t v = 0; v < n; ++v)
      if (!connected_without(std::uint32_t{1} << v))
        return false;
    return true;
  }
};

/// Collatz-Wielandt bounds on rho of a connected graph from shifted power iteration on the
/// rows: min (Ax)_v / x_v <= rho <= max (Ax)_v / x_v for any positive x. Returns whether
/// rho >= cut once the bounds separate, nullopt if they have not after max_iter steps.
inline std::optional<bool> mask_compare(const MaskRows& r, double cut, std::size_t max_iter) {
  std::array<double, 11> x{}, ax{};
  for (std::size_t v = 0; v < r.n; ++v)
    x[v] = 1.0;
  for (std::size_t it = 0; it <= max_iter; ++it) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, top = 0.0;
    for (std::size_t v = 0; v < r.n; ++v) {
      double sum = 0.0;
      for (std::uint32_t f = r.row[v]; f; f &= f - 1)
        sum += x[static_cast<std::size_t>(std::countr_zero(f))];
      ax[v] = sum;
      const double ratio = sum / x[v];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (lo >= cut)
      return true;
    if (hi < cut)
      return false;
    for (std::size_t v = 0; v < r.n; ++v) {
      x[v] += ax[v];
      top = std::max(top, x[v]);
    }
    for (std::size_t v = 0; v < r.n; ++v)
      x[v] /= top;
  }
  return std::nullopt;
}

/// Pair (i, j) of each triangle_index, for building MaskRows from an edge mask.
inline std::vector<std::pair<std::uint8_t, std::uint8_t>> pair_table(std::size_t n) {
  std::vector<std::pair<std::uint8_t, std::uint8_t>> t(pair_count(n));
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      t[triangle_index(i, j)] = {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
  return t;
}

inline MaskRows mask_rows(std::size_t n, std::uint64_t mask, const std::vector<std::pair<std::uint8_t, std::uint8_t>>& pairs) {
  MaskRows r;
  r.n = n;
  for (; mask; mask &= mask - 1) {
    const auto [i, j] = pairs[static_cast<std::size_t>(std::countr_zero(mask))];
    r.row[i] |= std::uint32_t{1} << j;
    r.row[j] |= std::uint32_t{1} << i;
  }
  return r;
}

/// Leaves L = V - I can be hung on the internal set I so that each v in I gains at least
/// need[v] of them: every leaf sees I, and (Hall) every S in I sees at least sum need(S) leaves.
inline bool leaves_assignable(const MaskRows& r, std::uint32_t internal, const std::array<std::uint8_t, 11>& need) {
  const std::uint32_t leaves = r.all() & ~internal;
  std::array<Vertex, 3> iv{};
  std::size_t k = 0;
  for (std::uint32_t f = internal; f; f &= f - 1)
    iv[k++] = static_cast<Vertex>(std::countr_zero(f));
  for (std::uint32_t sub = 1; sub < (1U << k); ++sub) {
    std::uint32_t seen = 0;
    std::size_t demand = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (sub >> i & 1) {
        seen |= r.row[iv[i]] & leaves;
        demand += need[iv[i]];
      }
    if (static_cast<std::size_t>(std::popcount(seen)) < demand)
      return false;
    if (sub == (1U << k) - 1 && seen != leaves)
      return false;
  }
  return true;
}

/// Exact HIST decision for connected graphs with n <= 9. Internal vertices of a HIST have
/// tree degree >= 3, so 2(n-1) >= 3|I| + (n - |I|) and |I| <= 3: the internal tree is a
/// vertex, an edge or a path a-b-c, and the leaves are hung by leaves_assignable.
inline bool small_hist(const MaskRows& r) {
  if (r.n > 9)
    throw UnsupportedError("small_hist is exact only for n <= 9");
  if (r.n <= 2)
    return true;
  std::array<std::uint8_t, 11> need{};
  for (Vertex v = 0; v < r.n; ++v) {
    need[v] = 3;
    if (leaves_assignable(r, std::uint32_t{1} << v, need))
      return true;
    need[v] = 0;
  }
  for (Vertex a = 0; a < r.n; ++a)
    for (std::uint32_t f = r.row[a] & ~((std::uint32_t{2} << a) - 1); f; f &= f - 1) {
      const auto b = static_cast<Vertex>(std::countr_zero(f));
      need[a] = need[b] = 2;
      if (leaves_assignable(r, (std::uint32_t{1} << a) | (std::uint32_t{1} << b), need))
        return true;
      need[a] = need[b] = 0;
    }
  for (Vertex b = 0; b < r.n; ++b)
    for (std::uint32_t fa = r.row[b]; fa; fa &= fa - 1) {
      const auto a = static_cast<Vertex>(std::countr_zero(fa));
      for (std::uint32_t fc = r.row[b] & ~((std::uint32_t{2} << a) - 1); fc; fc &= fc - 1) {
        const auto c = static_cast<Vertex>(std::countr_zero(fc));
        need[b] = 1;
        need[a] = need[c] = 2;
        const bool ok = leaves_assignable(
            r, (std::uint32_t{1} << a) | (std::uint32_t{1} << b) | (std::uint32_t{1} << c), need);
        need[a] = need[b] = need[c] = 0;
        if (ok)
          return true;
      }
    }
  return false;
}

} // namespace detail

/// Visits every labeled graph on n vertices whose mask lies in [lo, hi) and passes `filter`,
/// in increasing mask order. visit(const Graph&, std::uint64_t mask).
template <class Visit>
void enumerate_labeled_range(std::size_t n, std::uint64_t lo, std::uint64_t hi, const Prescreen& filter,
                             Visit&& visit) {
  detail::check_labeled_order(n);
  const auto inc = detail::incidence_masks(n);
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) < filter.min_edges)
      continue;
    if (filter.min_max_degree > 0) {
      std::size_t top = 0;
      for (auto m : inc)
        top = std::max<std::size_t>(top, std::popcount(mask & m));
      if (top < filter.min_max_degree)
        continue;
    }
    const Graph g = Graph::from_edge_mask(n, mask);
    if (detail::passes_connectivity(g, filter.connectivity))
      visit(g, mask);
  }
}

template <class Visit>
void enumerate_labeled(std::size_t n, const Prescreen& filter, Visit&& visit) {
  detail::check_labeled_order(n);
  enumerate_labeled_range(n, 0, std::uint64_t{1} << pair_count(n), filter, std::forward<Visit>(visit));
}

inline std::vector<Graph> collect_labeled(std::size_t n, const Prescreen& filter = {}) {
  std::vector<Graph> out;
  enumerate_labeled(n, filter, [&](const Graph& g, std::uint64_t) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Statement-level verification

/// The two extremal statements: connected graphs against L_n, 2-connected graphs against B_n.
enum class Statement { connected_L, two_connected_B };

enum class Source { labeled_exhaustive, graph6_corpus };

inline std::string statement_tag(Statement s) { return s == Statement::connected_L ? "thm1" : "thm2"; }
inline std::string source_tag(Source s) { return s == Source::labeled_exhaustive ? "labeled_exhaustive" : "graph6_corpus"; }

struct VerificationReport {
  std::string theorem;
  std::size_t n = 0;
  Source source = Source::labeled_exhaustive;
  std::uint64_t scanned = 0;
  std::uint64_t prescreen_survivors = 0;
  std::uint64_t over_threshold = 0;
  std::uint64_t extremal_matches = 0;
  std::uint64_t hists_found = 0;
  std::vector<std::string> counterexamples;
  double elapsed_seconds = 0.0;

  // Run context, not part of the structured record.
  double threshold = 0.0;
  std::vector<std::uint64_t> over_threshold_masks;

  bool passed() const noexcept { return counterexamples.empty(); }
  bool arithmetic_holds() const noexcept {
    return over_threshold == extremal_matches + hists_found + counterexamples.size();
  }
};

struct VerifyOptions {
  unsigned threads = 1;
  bool prescreens = true; ///< degree/Hong rejection, degree-square acceptance, early-exit spectral decision, bitmask HIST
  std::optional<double> threshold_override; ///< replaces rho(L_n) / rho(B_n)
  double guard = kThresholdGuard;
  std::uint64_t subsample = 1;              ///< keep masks with splitmix64(mask) % subsample == 0
  bool collect_over_threshold = false;
  std::uint64_t shard_size = std::uint64_t{1} << 20;
  SpectralOptions spectral;
  SearchOptions search;
};

/// rho(L_n) or rho(B_n) from the eigensolver, cross-checked against the quartic root.
inline double statement_threshold(Statement s, std::size_t n, const SpectralOptions& opts = {}) {
  const Family fam = s == Statement::connected_L ? Family::L : Family::B;
  const Graph g = fam == Family::L ? make_L(n) : make_B(n);
  const double rho = spectral_radius(g, opts).rho;
  const double root = family_root(fam, n);
  if (std::abs(rho - root) > 1e-8)
    throw InvariantError("eigensolver and quartic root disagree for the extremal graph: " + std::to_string(rho) +
                         " vs " + std::to_string(root));
  return rho;
}

namespace detail {

struct Tally {
  std::uint64_t scanned = 0, survivors = 0, over = 0, extremal = 0, hists = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::uint64_t> over_masks;

  void merge(Tally&& o) {
    scanned += o.scanned;
    survivors += o.survivors;
    over += o.over;
    extremal += o.extremal;
    hists += o.hists;
    for (auto& c : o.counterexamples)
      counterexamples.push_back(std::move(c));
    over_masks.insert(over_masks.end(), o.over_masks.begin(), o.over_masks.end());
  }
};

class Pipeline {
public:
  Pipeline(Statement s, std::size_t n, double theta, const VerifyOptions& opts)
      : statement_(s), n_(n), cut_(theta - opts.guard), opts_(opts),
        inc_(n <= 11 ? incidence_masks(n) : std::vector<std::uint64_t>{}),
        pairs_(n <= 11 ? pair_table(n) : std::vector<std::pair<std::uint8_t, std::uint8_t>>{}) {}

  /// Labeled path: degree prescreens run on the mask before any Graph is built.
  void scan_mask(std::uint64_t mask, Tally& t) const {
    ++t.scanned;
    const std::size_t m = static_cast<std::size_t>(std::popcount(mask));
    std::size_t lo = n_, hi = 0, squares = 0;
    for (auto inc : inc_) {
      const auto d = static_cast<std::size_t>(std::popcount(mask & inc));
      lo = std::min(lo, d);
      hi = std::max(hi, d);
      squares += d * d;
    }
    // Necessary for the hypothesis (connected: no isolated vertex; 2-connected: min degree 2).
    if (lo < min_degree_required() || m + 1 < n_)
      return;
    if (!opts_.prescreens) {
      const Graph g = Graph::from_edge_mask(n_, mask);
      if (hypothesis(g))
        decide(g, t, mask, std::nullopt);
      return;
    }
    if (!passes_degree_prescreens(m, lo, hi))
      return;
    const MaskRows rows = mask_rows(n_, mask, pairs_);
    if (statement_ == Statement::connected_L ? !rows.connected_without(0) : !rows.two_connected())
      return;
    // rho >= sqrt(sum d^2 / n) decides most dense graphs; bounded iteration on the rows most of
    // the rest. small_hist then settles them without building a Graph (the extremal graph has none).
    std::optional<bool> over;
    if (static_cast<double>(squares) >= static_cast<double>(n_) * cut_ * cut_)
      over = true;
    else
      over = mask_compare(rows, cut_, 200);
    if (over == false) {
      ++t.survivors;
      return;
    }
    if (over && m != extremal_edges() && small_hist(rows)) {
      ++t.survivors;
      ++t.over;
      ++t.hists;
      if (opts_.collect_over_threshold)
        t.over_masks.push_back(mask);
      return;
    }
    decide(Graph::from_edge_mask(n_, mask), t, mask, over, &rows);
  }

  /// Corpus path.
  void scan_graph(const Graph& g, Tally& t) const {
    ++t.scanned;
    if (g.order() < 3 || !hypothesis(g))
      return;
    if (opts_.prescreens && !passes_degree_prescreens(g.size(), min_degree(g), max_degree(g)))
      return;
    decide(g, t, 0, std::nullopt);
  }

private:
  std::size_t extremal_edges() const {
    return statement_ == Statement::connected_L ? (n_ - 2) * (n_ - 3) / 2 + 2 : (n_ - 3) * (n_ - 4) / 2 + 4;
  }

  std::size_t min_degree_required() const { return statement_ == Statement::connected_L ? 1 : 2; }

  bool hypothesis(const Graph& g) const {
    return statement_ == Statement::connected_L ? is_connected(g) : is_2_connected(g);
  }

  // rho <= max degree, and rho <= Hong's bound for connected graphs.
  bool passes_degree_prescreens(std::size_t m, std::size_t min_deg, std::size_t max_deg) const {
    if (static_cast<double>(max_deg) < cut_)
      return false;
    return hong_bound(n_, m, min_deg) >= cut_;
  }

  void decide(const Graph& g, Tally& t, std::uint64_t mask, std::optional<bool> known_over,
              const MaskRows* rows = nullptr) const {
    ++t.survivors;
    bool over = false;
    if (known_over)
      over = *known_over;
    else if (opts_.prescreens)
      over = compare_spectral_radius(g, cut_, opts_.spectral).at_least;
    else
      over = spectral_radius(g, opts_.spectral).rho >= cut_;
    if (!over)
      return;
    ++t.over;
    if (opts_.collect_over_threshold)
      t.over_masks.push_back(mask);
    const bool extremal = statement_ == Statement::connected_L ? matches_Ln(g) : matches_Bn(g);
    if (extremal) {
      ++t.extremal;
      return;
    }
    if (rows && small_hist(*rows)) {
      ++t.hists;
      return;
    }
    if (find_hist(g, opts_.search).has_hist())
      ++t.hists;
    else
      t.counterexamples.push_back(encode_graph6(g));
  }

  Statement statement_;
  std::size_t n_;
  double cut_;
  VerifyOptions opts_;
  std::vector<std::uint64_t> inc_;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs_;
};

inline void check_statement_order(Statement s, std::size_t n) {
  if (s == Statement::connected_L && n < 7)
    throw InputError("the connected statement is verified for n >= 7");
  if (s == Statement::two_connected_B && n < 8)
    throw InputError("the 2-connected statement is verified for n >= 8");
}

inline VerificationReport make_report(Statement s, std::size_t n, Source src, double theta, Tally&& t,
                                      std::chrono::steady_clock::time_point start) {
  VerificationReport r;
  r.theorem = statement_tag(s);
  r.n = n;
  r.source = src;
  r.scanned = t.scanned;
  r.prescreen_survivors = t.survivors;
  r.over_threshold = t.over;
  r.extremal_matches = t.extremal;
  r.hists_found = t.hists;
  r.counterexamples = std::move(t.counterexamples);
  r.over_threshold_masks = std::move(t.over_masks);
  r.threshold = theta;
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

} // namespace detail

/// Scans all 2^C(n,2) labeled graphs (n <= 8), sharded into fixed-size mask ranges that
/// worker threads claim in turn; shard tallies are merged in shard order.
inline VerificationReport verify_labeled(Statement s, std::size_t n, const VerifyOptions& opts = {}) {
  detail::check_statement_order(s, n);
  detail::check_labeled_order(n);
  const auto start = std::chrono::steady_clock::now();
  const double theta = opts.threshold_override.value_or(statement_threshold(s, n, opts.spectral));
  const detail::Pipeline pipe(s, n, theta, opts);

  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  const std::uint64_t shard = std::max<std::uint64_t>(1, opts.shard_size);
  const std::uint64_t shards = (total + shard - 1) / shard;
  std::vector<detail::Tally> tallies(shards);
  std::atomic<std::uint64_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;

  auto worker = [&] {
    try {
      for (std::uint64_t k = next++; k < shards; k = next++) {
        const std::uint64_t lo = k * shard, hi = std::min(total, lo + shard);
        for (std::uint64_t mask = lo; mask < hi; ++mask)
          if (opts.subsample <= 1 || detail::splitmix64(mask) % opts.subsample == 0)
            pipe.scan_mask(mask, tallies[k]);
      }
    } catch (...) {
      std::lock_guard lock(err_mu);
      if (!err)
        err = std::current_exception();
      next = shards;
    }
  };
  const unsigned threads = std::max(1U, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i)
      pool.emplace_back(worker);
  }
  if (err)
    std::rethrow_exception(err);

  detail::Tally total_tally;
  for (auto& t : tallies)
    total_tally.merge(std::move(t));
  return detail::make_report(s, n, Source::labeled_exhaustive, theta, std::move(total_tally), start);
}

/// Scans a graph6 corpus (one graph of order n per line).
inline VerificationReport verify_corpus(Statement s, std::size_t n, std::istream& corpus,
                                        const VerifyOptions& opts = {}) {
  detail::check_statement_order(s, n);
  const auto start = std::chrono::steady_clock::now();
  const double theta = opts.threshold_override.value_or(statement_threshold(s, n, opts.spectral));
  const detail::Pipeline pipe(s, n, theta, opts);
  detail::Tally tally;
  Graph6Reader reader(corpus);
  while (auto rec = reader.next()) {
    if (rec->graph.order() != n)
      throw InputError("corpus line " + std::to_string(rec->line_number) + " has order " +
                       std::to_string(rec->graph.order()) + ", expected " + std::to_string(n));
    pipe.scan_graph(rec->graph, tally);
  }
  return detail::make_report(s, n, Source::graph6_corpus, theta, std::move(tally), start);
}

inline VerificationReport verify_theorem1(std::size_t n, const VerifyOptions& opts = {}) {
  return verify_labeled(Statement::connected_L, n, opts);
}

inline VerificationReport verify_theorem2(std::size_t n, const VerifyOptions& opts = {}) {
  return verify_labeled(Statement::two_connected_B, n, opts);
}

/// Compares the over-threshold sets with and without prescreens on a deterministic
/// 1-in-`subsample` slice of the labeled space.
struct PrescreenAudit {
  std::uint64_t sampled = 0;
  std::uint64_t over_with = 0;
  std::uint64_t over_without = 0;
  std::vector<std::uint64_t> discrepancies; ///< masks in exactly one of the two sets
  bool passed() const noexcept { return discrepancies.empty(); }
};

inline PrescreenAudit audit_prescreens(Statement s, std::size_t n, std::uint64_t subsample, VerifyOptions opts = {}) {
  opts.subsample = subsample;
  opts.collect_over_threshold = true;
  opts.prescreens = true;
  const auto with = verify_labeled(s, n, opts);
  opts.prescreens = false;
  const auto without = verify_labeled(s, n, opts);
  PrescreenAudit a;
  a.sampled = without.scanned;
  a.over_with = with.over_threshold;
  a.over_without = without.over_threshold;
  std::set_symmetric_difference(with.over_threshold_masks.begin(), with.over_threshold_masks.end(),
                                without.over_threshold_masks.begin(), without.over_threshold_masks.end(),
                                std::back_inserter(a.discrepancies));
  return a;
}

// ---------------------------------------------------------------------------
// Closed-form corollary thresholds

struct FamilyBoundRow {
  Family family = Family::L;
  std::size_t n = 0;
  double rho = 0.0;
  double root = 0.0;             ///< bisection root of the family quartic
  double quartic_residual = 0.0; ///< |P(rho)| at the eigensolver value
  SlackBound slack;
  bool bounds_hold = false;      ///< base < rho < base + relaxed cap
  bool consistent = false;       ///< |P(rho)| <= 1e-6 and |root - rho| <= 1e-8
};

struct CorollaryReport {
  std::size_t from = 0, to = 0;
  std::vector<FamilyBoundRow> rows;
  std::size_t violations = 0;
  std::size_t stated_B_misses = 0; ///< informational: rows where slack >= 1/(n-4)
  bool passed() const noexcept { return violations == 0; }
};

inline FamilyBoundRow family_bound_row(Family fam, std::size_t n, const SpectralOptions& opts = {}) {
  FamilyBoundRow row;
  row.family = fam;
  row.n = n;
  try {
    row.slack = slack_bounds(fam, n, opts);
    row.bounds_hold = true;
  } catch (const InvariantError&) {
    row.slack.spectrum = spectral_radius(fam == Family::L ? make_L(n) : make_B(n), opts);
    row.bounds_hold = false;
  }
  row.rho = row.slack.spectrum.rho;
  const auto poly = fam == Family::L ? charpoly_L(n) : charpoly_B(n);
  row.quartic_residual = std::abs(poly(row.rho));
  row.root = family_root(fam, n);
  row.consistent = row.quartic_residual <= 1e-6 && std::abs(row.root - row.rho) <= 1e-8;
  return row;
}

inline CorollaryReport verify_corollaries(std::size_t from, std::size_t to, const SpectralOptions& opts = {}) {
  if (from < 7 || to < from)
    throw InputError("corollary range must satisfy 7 <= from <= to");
  CorollaryReport rep;
  rep.from = from;
  rep.to = to;
  for (std::size_t n = from; n <= to; ++n) {
    rep.rows.push_back(family_bound_row(Family::L, n, opts));
    if (n >= 8)
      rep.rows.push_back(family_bound_row(Family::B, n, opts));
  }
  for (const auto& r : rep.rows) {
    if (!r.bounds_hold || !r.consistent)
      ++rep.violations;
    if (r.family == Family::B && !r.slack.meets_stated)
      ++rep.stated_B_misses;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Certificate soundness

struct FamilyCertificateCheck {
  Family family = Family::L;
  std::size_t n = 0;
  std::optional<Certificate> certificate;
  bool ok = false; ///< L_n yields CutVertexDeg2, B_n yields P5Pattern
};

struct CertificateReport {
  std::size_t n_max = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t certificates_fired = 0;
  std::vector<std::string> violations; ///< graph6 of graphs with a certificate but a HIST
  std::vector<FamilyCertificateCheck> family_checks;
  bool passed() const noexcept {
    return violations.empty() &&
           std::all_of(family_checks.begin(), family_checks.end(), [](const auto& c) { return c.ok; });
  }
};

inline CertificateReport verify_certificates(std::size_t n_max = 6, std::size_t family_max = 10) {
  if (n_max > 7)
    throw UnsupportedError("certificate sweep supports n_max <= 7");
  CertificateReport rep;
  rep.n_max = n_max;
  for (std::size_t n = 3; n <= n_max; ++n)
    enumerate_labeled(n, {.connectivity = Connectivity::connected}, [&](const Graph& g, std::uint64_t) {
      ++rep.graphs_checked;
      if (!no_hist_certificate(g))
        return;
      ++rep.certificates_fired;
      if (oracle_hist(g).outcome.has_hist())
        rep.violations.push_back(encode_graph6(g));
    });
  for (std::size_t n = 4; n <= family_max; ++n) {
    FamilyCertificateCheck c{Family::L, n, no_hist_certificate(make_L(n)), false};
    c.ok = c.certificate && std::holds_alternative<CutVertexDeg2>(*c.certificate);
    rep.family_checks.push_back(c);
  }
  for (std::size_t n = 6; n <= family_max; ++n) {
    FamilyCertificateCheck c{Family::B, n, no_hist_certificate(make_B(n)), false};
    c.ok = c.certificate && std::holds_alternative<P5Pattern>(*c.certificate);
    rep.family_checks.push_back(c);
  }
  return rep;
}

} // namespace hist
