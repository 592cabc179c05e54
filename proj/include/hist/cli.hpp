#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hist/enumeration.hpp"
#include "hist/errors.hpp"
#include "hist/graph.hpp"
#include "hist/graph6.hpp"
#include "hist/hist_search.hpp"
#include "hist/report.hpp"
#include "hist/spectral.hpp"

namespace hist::cli {

/// Process exit codes.
enum Exit : int {
  ok = 0,
  failed = 1,      ///< counterexample, invariant violation or exhausted resource cap
  usage = 2,       ///< bad arguments or input outside an operation's domain
  format = 3,      ///< malformed graph6
  nonconverge = 4, ///< eigensolver did not converge
};

/// Parses "family:NAME:p1[:p2]" or a graph6 string.
inline Graph parse_graph_arg(const std::string& arg) {
  constexpr std::string_view prefix = "family:";
  if (!std::string_view(arg).starts_with(prefix))
    return decode_graph6(arg);
  std::vector<std::string> parts;
  std::stringstream ss(arg.substr(prefix.size()));
  for (std::string p; std::getline(ss, p, ':');)
    parts.push_back(p);
  if (parts.empty())
    throw InputError("family shorthand needs a name: family:NAME:params");
  const Family fam = family_from_name(parts[0]);
  std::vector<std::size_t> params;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(parts[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != parts[i].size() || parts[i].empty())
      throw InputError("family parameter '" + parts[i] + "' is not a nonnegative integer");
    params.push_back(v);
  }
  return make_family(fam, params);
}

inline std::string format_double(double v, int digits = 15) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline std::string edges_text(const std::vector<Edge>& edges) {
  std::string s;
  for (const auto& e : edges) {
    if (!s.empty())
      s += ' ';
    s += std::to_string(e.u) + '-' + std::to_string(e.v);
  }
  return s;
}

struct Config {
  std::string format = "text";
  double tol = SpectralOptions{}.tol;
  std::size_t max_iter = SpectralOptions{}.max_iter;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  std::string graph;
  std::string family_name;
  std::vector<std::size_t> params;
  std::size_t order = 0;
  std::string corpus;
  std::size_t from = 7, to = 50;
  std::size_t nmax = 6;
  std::string file;
  bool no_prescreen = false;

  bool json() const { return format == "json"; }
  SpectralOptions spectral() const { return {tol, max_iter}; }
};

inline int cmd_rho(const Config& c, std::ostream& out) {
  const Graph g = parse_graph_arg(c.graph);
  const auto r = spectral_radius(g, c.spectral());
  if (c.json())
    out << nlohmann::json{{"record", "rho"}, {"graph6", encode_graph6(g)}, {"rho", r.rho},
                          {"residual", r.residual}, {"iterations", r.iterations}}
               .dump()
        << '\n';
  else
    out << "rho=" << format_double(r.rho) << " residual=" << format_double(r.residual, 3)
        << " iterations=" << r.iterations << '\n';
  return ok;
}

inline int cmd_hist(const Config& c, std::ostream& out) {
  const Graph g = parse_graph_arg(c.graph);
  const auto o = find_hist(g);
  if (c.json()) {
    nlohmann::json j{{"record", "hist"}, {"graph6", encode_graph6(g)}, {"verdict", o.has_hist() ? "Found" : "NoHist"}};
    if (o.has_hist()) {
      nlohmann::json edges = nlohmann::json::array();
      for (const auto& e : o.tree())
        edges.push_back({e.u, e.v});
      j["tree"] = edges;
    } else {
      j["certificate"] = to_json(*o.certificate());
    }
    out << j.dump() << '\n';
    return ok;
  }
  if (o.has_hist()) {
    out << "verdict=Found\ntree=" << edges_text(o.tree()) << '\n';
  } else {
    out << "verdict=NoHist\ncertificate=" << certificate_name(*o.certificate());
    if (const auto* cv = std::get_if<CutVertexDeg2>(&*o.certificate()))
      out << " vertex=" << cv->v;
    if (const auto* p5 = std::get_if<P5Pattern>(&*o.certificate()))
      out << " path=" << p5->path[0] << '-' << p5->path[1] << '-' << p5->path[2] << '-' << p5->path[3] << '-'
          << p5->path[4];
    out << '\n';
  }
  return ok;
}

inline int cmd_charpoly(const Config& c, std::ostream& out) {
  const Family fam = family_from_name(c.family_name);
  if (fam != Family::L && fam != Family::B)
    throw InputError("charpoly is defined for L and B");
  const auto p = fam == Family::L ? charpoly_L(c.order) : charpoly_B(c.order);
  const double root = family_root(fam, c.order);
  if (c.json()) {
    out << nlohmann::json{{"record", "charpoly"}, {"family", family_tag(fam)}, {"n", c.order},
                          {"coefficients", p.coefficients()}, {"largest_root", root}}
               .dump()
        << '\n';
    return ok;
  }
  out << "coefficients=";
  for (std::size_t i = 0; i < 5; ++i)
    out << (i ? " " : "") << format_double(p.coefficients()[i]);
  out << "\nlargest_root=" << format_double(root) << '\n';
  return ok;
}

inline int cmd_family(const Config& c, std::ostream& out) {
  const Graph g = make_family(family_from_name(c.family_name), c.params);
  out << encode_graph6(g) << '\n';
  return ok;
}

inline int cmd_verify_theorem(Statement s, const Config& c, std::ostream& out) {
  VerifyOptions opts;
  opts.threads = c.threads;
  opts.spectral = c.spectral();
  opts.prescreens = !c.no_prescreen;
  VerificationReport rep;
  if (c.corpus.empty()) {
    rep = verify_labeled(s, c.order, opts);
  } else {
    std::ifstream in(c.corpus);
    if (!in)
      throw InputError("cannot open corpus file " + c.corpus);
    rep = verify_corpus(s, c.order, in, opts);
  }
  if (c.json())
    out << to_json(rep).dump() << '\n';
  else
    write_text(out, rep);
  return rep.passed() ? ok : failed;
}

inline int cmd_verify_corollaries(const Config& c, std::ostream& out) {
  const auto rep = verify_corollaries(c.from, c.to, c.spectral());
  if (c.json())
    out << to_json(rep).dump() << '\n';
  else
    write_text(out, rep);
  return rep.passed() ? ok : failed;
}

inline int cmd_verify_certificates(const Config& c, std::ostream& out) {
  const auto rep = verify_certificates(c.nmax);
  if (c.json())
    out << to_json(rep).dump() << '\n';
  else
    write_text(out, rep);
  return rep.passed() ? ok : failed;
}

/// Round-trip check of every record: encode(decode(line)) must reproduce the line body
/// and decode(encode(g)) must reproduce g.
inline int cmd_convert(const Config& c, std::ostream& out) {
  std::ifstream in(c.file);
  if (!in)
    throw InputError("cannot open " + c.file);
  Graph6Reader reader(in);
  std::size_t records = 0, mismatches = 0;
  while (auto rec = reader.next()) {
    ++records;
    std::string_view body = rec->line;
    if (body.starts_with(kGraph6Header))
      body.remove_prefix(kGraph6Header.size());
    const std::string enc = encode_graph6(rec->graph);
    if (enc != body || decode_graph6(enc) != rec->graph) {
      ++mismatches;
      out << "mismatch at line " << rec->line_number << ": " << body << " -> " << enc << '\n';
    }
  }
  if (c.json())
    out << nlohmann::json{{"record", "convert"}, {"file", c.file}, {"records", records}, {"mismatches", mismatches}}
               .dump()
        << '\n';
  else
    out << "records=" << records << " mismatches=" << mismatches << '\n';
  return mismatches == 0 ? ok : failed;
}

/// Entry point shared by the executable and the tests. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral HIST verification toolkit", "histcheck"};
  app.require_subcommand(1);
  Config c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--tol", c.tol, "Eigen-residual tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-iter", c.max_iter, "Power-iteration cap")->check(CLI::PositiveNumber);
  };

  auto* rho = app.add_subcommand("rho", "Spectral radius of a graph");
  rho->add_option("graph", c.graph, "graph6 string or family:NAME:params")->required();
  add_common(rho);

  auto* hist_cmd = app.add_subcommand("hist", "Decide whether a graph has a HIST");
  hist_cmd->add_option("graph", c.graph, "graph6 string or family:NAME:params")->required();
  add_common(hist_cmd);

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic quartic of L_n or B_n");
  charpoly->add_option("family", c.family_name, "L or B")->required()->check(CLI::IsMember({"L", "B"}));
  charpoly->add_option("n", c.order, "Order")->required();
  add_common(charpoly);

  auto* family = app.add_subcommand("family", "graph6 of a named construction");
  family->add_option("name", c.family_name, "L, B, K, P, C, Kpq or star")
      ->required()
      ->check(CLI::IsMember({"L", "B", "K", "P", "C", "Kpq", "star"}));
  family->add_option("params", c.params, "Construction parameters")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification driver");
  verify->require_subcommand(1);
  auto add_theorem = [&](const char* name, const char* desc) {
    auto* sub = verify->add_subcommand(name, desc);
    sub->add_option("--n", c.order, "Order")->required();
    sub->add_option("--corpus", c.corpus, "graph6 corpus file (one graph of order n per line)");
    sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--no-prescreen", c.no_prescreen, "Eigensolve every graph meeting the hypothesis");
    add_common(sub);
    return sub;
  };
  auto* thm1 = add_theorem("thm1", "Connected graphs with rho >= rho(L_n)");
  auto* thm2 = add_theorem("thm2", "2-connected graphs with rho >= rho(B_n)");
  auto* cor = verify->add_subcommand("corollaries", "Closed-form thresholds for L_n and B_n");
  cor->add_option("--from", c.from, "First order (>= 7)");
  cor->add_option("--to", c.to, "Last order");
  add_common(cor);
  auto* certs = verify->add_subcommand("certificates", "Soundness of the no-HIST certificates");
  certs->add_option("--nmax", c.nmax, "Largest order of the exhaustive sweep");
  add_common(certs);

  auto* convert = app.add_subcommand("convert", "graph6 round-trip validation of a corpus file");
  convert->add_option("file", c.file, "graph6 file")->required();
  add_common(convert);

  std::vector<const char*> argv{"histcheck"};
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return usage;
  }

  try {
    if (rho->parsed())
      return cmd_rho(c, out);
    if (hist_cmd->parsed())
      return cmd_hist(c, out);
    if (charpoly->parsed())
      return cmd_charpoly(c, out);
    if (family->parsed())
      return cmd_family(c, out);
    if (thm1->parsed())
      return cmd_verify_theorem(Statement::connected_L, c, out);
    if (thm2->parsed())
      return cmd_verify_theorem(Statement::two_connected_B, c, out);
    if (cor->parsed())
      return cmd_verify_corollaries(c, out);
    if (certs->parsed())
      return cmd_verify_certificates(c, out);
    if (convert->parsed())
      return cmd_convert(c, out);
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return format;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return std::string_view(e.what()).starts_with("graph6") ? format : usage;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return nonconverge;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return failed;
  }
  return usage;
}

} // namespace hist::cli
