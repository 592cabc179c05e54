#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "hist/errors.hpp"
#include "hist/graph.hpp"

namespace hist {

/// Threshold comparisons "rho >= theta" are evaluated as rho >= theta - kThresholdGuard,
/// so near-threshold graphs are always checked rather than skipped.
inline constexpr double kThresholdGuard = 1e-9;

struct SpectralOptions {
  double tol = 1e-10;
  std::size_t max_iter = 1'000'000;
};

struct SpectralResult {
  double rho = 0.0;
  std::vector<double> perron; ///< unit max-norm, entrywise positive for connected graphs
  double residual = 0.0;      ///< max-norm of A x - rho x
  std::size_t iterations = 0;
};

/// Power iteration ran out of iterations; carries the last iterate.
class NonConvergence : public NumericError {
public:
  explicit NonConvergence(SpectralResult last)
      : NumericError("power iteration did not converge: residual " + std::to_string(last.residual) + " after " +
                     std::to_string(last.iterations) + " iterations"),
        last_(std::move(last)) {}

  const SpectralResult& last_iterate() const noexcept { return last_; }

private:
  SpectralResult last_;
};

namespace detail {

inline void adjacency_apply(const Graph& g, const std::vector<double>& x, std::vector<double>& out) {
  for (Vertex v = 0; v < g.order(); ++v) {
    double s = 0.0;
    g.for_each_neighbor(v, [&](Vertex w) { s += x[w]; });
    out[v] = s;
  }
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

} // namespace detail

/// Dominant adjacency eigenvalue by power iteration on A + I from the all-ones vector.
/// The shift keeps bipartite graphs from oscillating between +rho and -rho; rho is reported
/// as the Rayleigh quotient of the unshifted matrix.
inline SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts = {}) {
  if (!(opts.tol > 0.0))
    throw InputError("spectral tolerance must be positive");
  if (g.order() == 0 || !is_connected(g))
    throw InputError("spectral_radius requires a connected graph");

  const std::size_t n = g.order();
  SpectralResult r;
  r.perron.assign(n, 1.0);
  std::vector<double> ax(n, 0.0);
  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    auto& x = r.perron;
    detail::adjacency_apply(g, x, ax);
    r.rho = detail::dot(x, ax) / detail::dot(x, x);
    r.residual = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      r.residual = std::max(r.residual, std::abs(ax[i] - r.rho * x[i]));
    r.iterations = it;
    if (r.residual <= opts.tol)
      return r;
    double top = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += ax[i];
      top = std::max(top, x[i]);
    }
    for (auto& xi : x)
      xi /= top;
  }
  throw NonConvergence(std::move(r));
}

/// Outcome of deciding rho(G) >= theta without necessarily converging fully.
struct RadiusComparison {
  bool at_least = false;
  double lower = 0.0; ///< certified lower bound on rho at the decision point
  double upper = 0.0; ///< certified upper bound on rho at the decision point
  std::size_t iterations = 0;
};

/// Decides rho(G) >= theta for connected G. Iterates A + I from the all-ones vector and
/// stops as soon as the Collatz-Wielandt interval (min/max of (A+I)x / x, minus the shift,
/// tightened below by the Rayleigh quotient) lies on one side of theta. If the interval
/// still straddles theta after `bound_iters` steps, falls back to a full eigensolve.
inline RadiusComparison compare_spectral_radius(const Graph& g, double theta, const SpectralOptions& opts = {},
                                                std::size_t bound_iters = 2000) {
  if (g.order() == 0 || !is_connected(g))
    throw InputError("compare_spectral_radius requires a connected graph");
  const std::size_t n = g.order();
  std::vector<double> x(n, 1.0), ax(n, 0.0);
  RadiusComparison out;
  for (std::size_t it = 1; it <= bound_iters; ++it) {
    detail::adjacency_apply(g, x, ax);
    double lo = INFINITY, hi = 0.0, top = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ratio = ax[i] / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    lo = std::max(lo, detail::dot(x, ax) / detail::dot(x, x));
    out = {false, lo, hi, it};
    if (hi < theta)
      return out;
    if (lo >= theta) {
      out.at_least = true;
      return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += ax[i];
      top = std::max(top, x[i]);
    }
    for (auto& xi : x)
      xi /= top;
  }
  const auto full = spectral_radius(g, opts);
  out.at_least = full.rho >= theta;
  out.lower = full.rho - full.residual;
  out.upper = full.rho + full.residual;
  out.iterations += full.iterations;
  return out;
}

// ---------------------------------------------------------------------------
// Characteristic quartics of the extremal families

/// Monic quartic x^4 + c3 x^3 + c2 x^2 + c1 x + c0, coefficients stored highest first.
class QuarticPoly {
public:
  QuarticPoly(double c4, double c3, double c2, double c1, double c0) : c_{c4, c3, c2, c1, c0} {
    if (c4 != 1.0)
      throw InputError("QuarticPoly must be monic");
  }

  const std::array<double, 5>& coefficients() const noexcept { return c_; }

  double operator()(double x) const noexcept {
    double v = 0.0;
    for (double c : c_)
      v = v * x + c;
    return v;
  }

  friend bool operator==(const QuarticPoly&, const QuarticPoly&) = default;

private:
  std::array<double, 5> c_;
};

/// rho(L_n) is the largest root of x^4 - (n-4)x^3 - (n-1)x^2 + (2n-8)x + n-3.
inline QuarticPoly charpoly_L(std::size_t n) {
  if (n < 7)
    throw InputError("charpoly_L needs n >= 7");
  const double d = static_cast<double>(n);
  return {1.0, -(d - 4), -(d - 1), 2 * d - 8, d - 3};
}

/// rho(B_n) is the largest root of x^4 - (n-5)x^3 - (n-1)x^2 + (3n-16)x + 2n-8.
inline QuarticPoly charpoly_B(std::size_t n) {
  if (n < 8)
    throw InputError("charpoly_B needs n >= 8");
  const double d = static_cast<double>(n);
  return {1.0, -(d - 5), -(d - 1), 3 * d - 16, 2 * d - 8};
}

/// Bisection inside a sign-change bracket down to absolute width 1e-12.
inline double largest_root(const QuarticPoly& p, double lo, double hi) {
  if (!(lo < hi))
    throw InputError("largest_root: empty bracket");
  double flo = p(lo);
  const double fhi = p(hi);
  if (flo == 0.0)
    return lo;
  if (fhi == 0.0)
    return hi;
  if ((flo < 0) == (fhi < 0))
    throw InputError("largest_root: no sign change in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    const double fm = p(mid);
    if (fm == 0.0)
      return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Root of the family quartic bracketed by the clique lower bound: [n-3, n-2] for L,
/// [n-4, n-3] for B.
inline double family_root(Family family, std::size_t n) {
  if (family == Family::L) {
    const double d = static_cast<double>(n);
    return largest_root(charpoly_L(n), d - 3, d - 2);
  }
  if (family == Family::B) {
    const double d = static_cast<double>(n);
    return largest_root(charpoly_B(n), d - 4, d - 3);
  }
  throw InputError("family_root is defined for L and B only");
}

// ---------------------------------------------------------------------------
// Closed-form bounds

inline double delta_bound(const Graph& g) { return static_cast<double>(max_degree(g)); }

/// rho <= (delta - 1 + sqrt((delta+1)^2 + 4(2m - delta n))) / 2; sqrt(2m - n + 1) when delta = 1.
inline double hong_bound(const Graph& g) {
  if (g.order() < 2 || !is_connected(g))
    throw InputError("hong_bound requires a connected graph with n >= 2");
  const double n = static_cast<double>(g.order());
  const double m = static_cast<double>(g.size());
  const double delta = static_cast<double>(min_degree(g));
  if (delta == 1.0)
    return std::sqrt(2 * m - n + 1);
  return (delta - 1 + std::sqrt((delta + 1) * (delta + 1) + 4 * (2 * m - delta * n))) / 2;
}

/// Same bound from raw counts; used by the enumeration prescreen before a Graph exists.
inline double hong_bound(std::size_t n, std::size_t m, std::size_t min_deg) {
  const double dn = static_cast<double>(n), dm = static_cast<double>(m), delta = static_cast<double>(min_deg);
  if (min_deg == 1)
    return std::sqrt(2 * dm - dn + 1);
  return (delta - 1 + std::sqrt((delta + 1) * (delta + 1) + 4 * (2 * dm - delta * dn))) / 2;
}

/// rho(family_n) written as base + slack, with the closed-form caps on the slack.
struct SlackBound {
  Family family = Family::L;
  std::size_t n = 0;
  double base = 0.0;        ///< n-3 for L, n-4 for B
  double slack = 0.0;       ///< rho - base, from the eigensolver
  double tight_upper = 0.0; ///< (n-3)/(n^3-8n^2+19n-14) for L, (2n-8)/(n^3-11n^2+37n-40) for B
  double upper = 0.0;       ///< relaxed cap: 1/(n-3) for L, 2/(n-4) for B
  double stated_upper = 0.0; ///< 1/(n-3) for L, 1/(n-4) for B; informational for B
  bool meets_stated = false;
  SpectralResult spectrum;
};

inline SlackBound slack_bounds(Family family, std::size_t n, const SpectralOptions& opts = {}) {
  SlackBound out;
  out.family = family;
  out.n = n;
  const double d = static_cast<double>(n);
  if (family == Family::L) {
    if (n < 7)
      throw InputError("slack_bounds for L needs n >= 7");
    out.spectrum = spectral_radius(make_L(n), opts);
    out.base = d - 3;
    out.tight_upper = (d - 3) / (d * d * d - 8 * d * d + 19 * d - 14);
    out.upper = 1.0 / (d - 3);
    out.stated_upper = out.upper;
  } else if (family == Family::B) {
    if (n < 8)
      throw InputError("slack_bounds for B needs n >= 8");
    out.spectrum = spectral_radius(make_B(n), opts);
    out.base = d - 4;
    out.tight_upper = (2 * d - 8) / (d * d * d - 11 * d * d + 37 * d - 40);
    out.upper = 2.0 / (d - 4);
    out.stated_upper = 1.0 / (d - 4);
  } else {
    throw InputError("slack_bounds is defined for L and B only");
  }
  out.slack = out.spectrum.rho - out.base;
  out.meets_stated = out.slack < out.stated_upper;
  if (!(out.slack > 0.0) || !(out.slack < out.upper))
    throw InvariantError("slack " + std::to_string(out.slack) + " outside (0, " + std::to_string(out.upper) +
                         ") for n = " + std::to_string(n));
  return out;
}

} // namespace hist
