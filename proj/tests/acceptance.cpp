// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance [corpus.g6 ...]   (corpus files feed the graph6 round-trip check)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hist/hist.hpp"
#include "oracles.hpp"

using namespace hist;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1. Connected statement at n = 7, exhaustive.
Outcome connected_at_seven() {
  VerifyOptions opts;
  opts.threads = 1;
  const auto r = verify_theorem1(7, opts);
  const std::uint64_t copies = oracle::factorial(7) / oracle::automorphisms(make_L(7));
  const bool pass = r.scanned == (std::uint64_t{1} << 21) && r.passed() && r.arithmetic_holds() &&
                    r.extremal_matches == copies;
  return {pass, fmt("scanned=%llu over=%llu extremal=%llu (brute-force copies %llu) counterexamples=%zu %.1fs",
                    static_cast<unsigned long long>(r.scanned), static_cast<unsigned long long>(r.over_threshold),
                    static_cast<unsigned long long>(r.extremal_matches), static_cast<unsigned long long>(copies),
                    r.counterexamples.size(), r.elapsed_seconds)};
}

// 2. 2-connected statement at n = 8, exhaustive with prescreens.
Outcome two_connected_at_eight() {
  const unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  VerifyOptions opts;
  opts.threads = threads;
  const auto r = verify_theorem2(8, opts);
  const std::uint64_t copies = oracle::factorial(8) / oracle::automorphisms(make_B(8));
  const bool pass = r.scanned == (std::uint64_t{1} << 28) && r.passed() && r.arithmetic_holds();
  return {pass, fmt("scanned=%llu survivors=%llu over=%llu extremal=%llu (copies %llu) counterexamples=%zu "
                    "threads=%u %.1fs",
                    static_cast<unsigned long long>(r.scanned),
                    static_cast<unsigned long long>(r.prescreen_survivors),
                    static_cast<unsigned long long>(r.over_threshold),
                    static_cast<unsigned long long>(r.extremal_matches), static_cast<unsigned long long>(copies),
                    r.counterexamples.size(), threads, r.elapsed_seconds)};
}

// 3. Quartic consistency for n = 7..50.
Outcome quartic_consistency() {
  double worst_residual = 0.0, worst_gap = 0.0;
  std::size_t bad = 0;
  for (std::size_t n = 7; n <= 50; ++n)
    for (Family fam : {Family::L, Family::B}) {
      if (fam == Family::B && n < 8)
        continue;
      const double rho = spectral_radius(fam == Family::L ? make_L(n) : make_B(n)).rho;
      const double residual = std::abs((fam == Family::L ? charpoly_L(n) : charpoly_B(n))(rho));
      const double gap = std::abs(family_root(fam, n) - rho);
      worst_residual = std::max(worst_residual, residual);
      worst_gap = std::max(worst_gap, gap);
      bad += residual > 1e-6 || gap > 1e-8 ? 1 : 0;
    }
  return {bad == 0, fmt("max |P(rho)|=%.2e max |root-rho|=%.2e violations=%zu", worst_residual, worst_gap, bad)};
}

// 4. Family bounds and random-graph bound suite.
Outcome bound_suite() {
  std::size_t family_bad = 0;
  for (std::size_t n = 7; n <= 50; ++n) {
    const double d = static_cast<double>(n);
    const double l = spectral_radius(make_L(n)).rho;
    family_bad += (l > d - 3 && l < d - 3 + 1 / (d - 3)) ? 0 : 1;
    if (n >= 8) {
      const double b = spectral_radius(make_B(n)).rho;
      family_bad += (b > d - 4 && b < d - 4 + 2 / (d - 4)) ? 0 : 1;
    }
  }
  std::mt19937_64 rng(2024);
  std::size_t graphs = 0, random_bad = 0;
  while (graphs < 1000) {
    const Graph g = oracle::random_connected(2 + rng() % 11, rng);
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    const auto removable = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) {
      Graph h = g;
      h.remove_edge(e.u, e.v);
      return oracle::connected(h);
    });
    if (removable == edges.end())
      continue; // a tree has no edge whose removal keeps it connected
    ++graphs;
    const double rho = spectral_radius(g).rho;
    Graph h = g;
    h.remove_edge(removable->u, removable->v);
    const bool ok = rho <= delta_bound(g) + 1e-9 && rho <= hong_bound(g) + 1e-9 &&
                    spectral_radius(h).rho < rho && std::abs(rho - oracle::dense_rho(g)) < 1e-8;
    random_bad += ok ? 0 : 1;
  }
  return {family_bad + random_bad == 0,
          fmt("family violations=%zu random graphs=%zu violations=%zu", family_bad, graphs, random_bad)};
}

// 5. find_hist against the spanning-tree oracle.
Outcome oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t checked = 0, disagreements = 0;
  auto compare = [&](const Graph& g) {
    ++checked;
    const HistOutcome fast = find_hist(g);
    const bool slow = oracle_hist(g, {.stop_at_first = true}).hists > 0;
    if (fast.has_hist() != slow || (fast.has_hist() && !is_hist(g, fast.tree())))
      ++disagreements;
  };
  for (std::size_t n = 1; n <= 6; ++n)
    enumerate_labeled(n, {.connectivity = Connectivity::connected}, [&](const Graph& g, std::uint64_t) { compare(g); });
  const std::uint64_t exhaustive = checked;
  std::mt19937_64 rng(7);
  for (std::size_t n : {7, 8})
    for (int i = 0; i < 10000; ++i)
      compare(oracle::random_connected(n, rng));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {disagreements == 0 && secs <= 900,
          fmt("exhaustive n<=6: %llu, random n=7,8: %llu, disagreements=%llu %.1fs",
              static_cast<unsigned long long>(exhaustive), static_cast<unsigned long long>(checked - exhaustive),
              static_cast<unsigned long long>(disagreements), secs)};
}

// 6. Prescreen safety audit at n = 8, 1-in-256 subsample.
Outcome prescreen_audit() {
  const auto a = audit_prescreens(Statement::two_connected_B, 8, 256);
  return {a.passed() && a.over_with == a.over_without,
          fmt("sampled=%llu over(with)=%llu over(without)=%llu discrepancies=%zu",
              static_cast<unsigned long long>(a.sampled), static_cast<unsigned long long>(a.over_with),
              static_cast<unsigned long long>(a.over_without), a.discrepancies.size())};
}

// 7. Certificate soundness.
Outcome certificate_soundness() {
  const auto rep = verify_certificates(6, 10);
  std::size_t family_bad = 0;
  for (const auto& c : rep.family_checks)
    family_bad += c.ok ? 0 : 1;
  return {rep.passed(), fmt("graphs=%llu fired=%llu unsound=%zu family checks=%zu failing=%zu",
                            static_cast<unsigned long long>(rep.graphs_checked),
                            static_cast<unsigned long long>(rep.certificates_fired), rep.violations.size(),
                            rep.family_checks.size(), family_bad)};
}

// 8. graph6 round trip and malformed-input handling.
Outcome graph6_round_trip(const std::vector<std::string>& corpora) {
  std::uint64_t graphs = 0, failures = 0;
  for (std::size_t n = 0; n <= 6; ++n)
    enumerate_labeled(n, {}, [&](const Graph& g, std::uint64_t) {
      ++graphs;
      failures += decode_graph6(encode_graph6(g)) == g ? 0 : 1;
    });
  std::uint64_t records = 0;
  for (const auto& path : corpora) {
    std::ifstream in(path);
    if (!in) {
      ++failures;
      continue;
    }
    Graph6Reader reader(in);
    while (auto rec = reader.next()) {
      ++records;
      failures += decode_graph6(encode_graph6(rec->graph)) == rec->graph ? 0 : 1;
    }
  }
  struct Bad {
    const char* text;
    std::size_t offset;
  };
  std::size_t malformed_ok = 0;
  const std::vector<Bad> bad{{"A!", 1}, {"D?", 2}, {"A@", 1}, {"A_?", 2}, {"\x7f", 0}, {">>graph6<<B ", 11}};
  for (const auto& b : bad) {
    try {
      decode_graph6(b.text);
    } catch (const FormatError& e) {
      malformed_ok += e.offset() == b.offset ? 1 : 0;
    } catch (...) {
    }
  }
  // Random byte strings: decode or FormatError/UnsupportedError, nothing else.
  std::mt19937_64 rng(99);
  std::size_t fuzz_bad = 0;
  for (int i = 0; i < 100000; ++i) {
    std::string s(rng() % 16, '\0');
    for (auto& c : s)
      c = static_cast<char>(rng() % 4 == 0 ? rng() % 256 : 63 + rng() % 64);
    try {
      decode_graph6(s);
    } catch (const FormatError&) {
    } catch (const UnsupportedError&) {
    } catch (...) {
      ++fuzz_bad;
    }
  }
  return {failures == 0 && malformed_ok == bad.size() && fuzz_bad == 0,
          fmt("labeled graphs=%llu corpus records=%llu (%zu files) failures=%llu malformed with offsets=%zu/%zu "
              "fuzz escapes=%zu",
              static_cast<unsigned long long>(graphs), static_cast<unsigned long long>(records), corpora.size(),
              static_cast<unsigned long long>(failures), malformed_ok, bad.size(), fuzz_bad)};
}

} // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> corpora(argv + 1, argv + argc);
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"connected graphs, n = 7, exhaustive", connected_at_seven},
      {"2-connected graphs, n = 8, exhaustive", two_connected_at_eight},
      {"quartic consistency, n = 7..50", quartic_consistency},
      {"bound suite", bound_suite},
      {"find_hist vs spanning-tree oracle", oracle_equivalence},
      {"prescreen safety audit, n = 8", prescreen_audit},
      {"no-HIST certificate soundness", certificate_soundness},
      {"graph6 round trip", [&] { return graph6_round_trip(corpora); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s  criterion %zu: %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
