#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <variant>

#include "json.hpp"

#include "hist/enumeration.hpp"
#include "hist/hist_search.hpp"

namespace hist {

// Structured records are newline-delimited JSON objects, one per report. Field names
// are stable; see README.md for the schema.

inline nlohmann::json to_json(const VerificationReport& r) {
  return {
      {"record", "verification"},
      {"theorem", r.theorem},
      {"n", r.n},
      {"source", source_tag(r.source)},
      {"scanned", r.scanned},
      {"prescreen_survivors", r.prescreen_survivors},
      {"over_threshold", r.over_threshold},
      {"extremal_matches", r.extremal_matches},
      {"hists_found", r.hists_found},
      {"counterexamples", r.counterexamples},
      {"elapsed", r.elapsed_seconds},
  };
}

inline std::string family_tag(Family f) {
  switch (f) {
  case Family::complete:
    return "K";
  case Family::path:
    return "P";
  case Family::cycle:
    return "C";
  case Family::complete_bipartite:
    return "Kpq";
  case Family::L:
    return "L";
  case Family::B:
    return "B";
  case Family::star:
    return "star";
  }
  return "?";
}

inline nlohmann::json to_json(const Certificate& c) {
  return std::visit(
      [](const auto& x) -> nlohmann::json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CutVertexDeg2>)
          return {{"kind", "CutVertexDeg2"}, {"vertex", x.v}};
        else if constexpr (std::is_same_v<T, P5Pattern>)
          return {{"kind", "P5Pattern"}, {"path", x.path}};
        else
          return {{"kind", "ExhaustedSearch"}};
      },
      c);
}

inline nlohmann::json to_json(const CorollaryReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"family", family_tag(row.family)},
                    {"n", row.n},
                    {"rho", row.rho},
                    {"root", row.root},
                    {"quartic_residual", row.quartic_residual},
                    {"slack", row.slack.slack},
                    {"tight_upper", row.slack.tight_upper},
                    {"upper", row.slack.upper},
                    {"stated_upper", row.slack.stated_upper},
                    {"meets_stated", row.slack.meets_stated},
                    {"bounds_hold", row.bounds_hold},
                    {"consistent", row.consistent}});
  return {{"record", "corollaries"},          {"from", r.from}, {"to", r.to}, {"violations", r.violations},
          {"stated_B_misses", r.stated_B_misses}, {"rows", rows}};
}

inline nlohmann::json to_json(const CertificateReport& r) {
  nlohmann::json fam = nlohmann::json::array();
  for (const auto& c : r.family_checks)
    fam.push_back({{"family", family_tag(c.family)},
                   {"n", c.n},
                   {"certificate", c.certificate ? to_json(*c.certificate) : nlohmann::json(nullptr)},
                   {"ok", c.ok}});
  return {{"record", "certificates"},
          {"n_max", r.n_max},
          {"graphs_checked", r.graphs_checked},
          {"certificates_fired", r.certificates_fired},
          {"violations", r.violations},
          {"family_checks", fam}};
}

inline void write_text(std::ostream& out, const VerificationReport& r) {
  const char* claim = r.theorem == "thm1" ? "connected graphs, threshold rho(L_n), extremal graph L_n"
                                          : "2-connected graphs, threshold rho(B_n), extremal graph B_n";
  char theta[64];
  std::snprintf(theta, sizeof theta, "%.15f", r.threshold);
  out << "statement:           " << r.theorem << " (" << claim << ")\n"
      << "order:               n = " << r.n << '\n'
      << "source:              " << source_tag(r.source) << '\n'
      << "threshold:           " << theta << " (minus guard " << kThresholdGuard << ")\n"
      << "scanned:             " << r.scanned << '\n'
      << "prescreen_survivors: " << r.prescreen_survivors << '\n'
      << "over_threshold:      " << r.over_threshold << '\n'
      << "extremal_matches:    " << r.extremal_matches << '\n'
      << "hists_found:         " << r.hists_found << '\n'
      << "counterexamples:     " << r.counterexamples.size() << '\n';
  for (const auto& c : r.counterexamples)
    out << "  " << c << '\n';
  out << "elapsed:             " << r.elapsed_seconds << " s\n"
      << "verdict:             " << (r.passed() ? "VERIFIED" : "FAILED") << " for n = " << r.n
      << " only; no claim is made for other orders\n";
}

inline void write_text(std::ostream& out, const CorollaryReport& r) {
  char line[256];
  out << "family  n   rho                  slack          cap            stated_cap     ok\n";
  for (const auto& row : r.rows) {
    std::snprintf(line, sizeof line, "%-6s %3zu  %.15f  %.6e  %.6e  %.6e  %s%s\n", family_tag(row.family).c_str(),
                  row.n, row.rho, row.slack.slack, row.slack.upper, row.slack.stated_upper,
                  row.bounds_hold && row.consistent ? "yes" : "NO",
                  row.family == Family::B && !row.slack.meets_stated ? " (misses 1/(n-4))" : "");
    out << line;
  }
  out << "violations: " << r.violations << "; rows missing the 1/(n-4) cap for B (informational): "
      << r.stated_B_misses << '\n';
}

inline void write_text(std::ostream& out, const CertificateReport& r) {
  out << "connected graphs n <= " << r.n_max << ": " << r.graphs_checked << " checked, " << r.certificates_fired
      << " certificates, " << r.violations.size() << " unsound\n";
  for (const auto& v : r.violations)
    out << "  unsound: " << v << '\n';
  for (const auto& c : r.family_checks)
    out << family_tag(c.family) << '_' << c.n << ": "
        << (c.certificate ? certificate_name(*c.certificate) : std::string("none")) << (c.ok ? "" : "  <-- unexpected")
        << '\n';
}

} // namespace hist
