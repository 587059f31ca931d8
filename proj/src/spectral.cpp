#include "supertree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace supertree {

namespace {

// 2^-44 ~ 5.7e-14 in y; rho >= 1 whenever an edge exists, so the induced
// error on rho = y^(1/r) is below 1e-13.
Rational default_width() { return Rational(1) / (BigInt(1) << 44); }

double root_of(const Rational& y, int r) { return std::pow(to_double(y), 1.0 / r); }

}  // namespace

std::string method_name(Method m) {
  return m == Method::MatchingRoot ? "MatchingRoot" : "PowerIteration";
}

RootBracket reduced_root_bracket(const MatchingPolynomial& phi, const Rational& width) {
  if (phi.matching_number() == 0) throw Error(ErrorCode::NoPositiveRoot, "edgeless hypergraph");
  const Polynomial p = phi.reduced();
  // y* <= m(H, 1) = |E| for supertrees; the Cauchy bound covers anything else.
  BigInt hi = std::max(BigInt(phi.counts[1] + 1), p.root_bound());
  auto br = bracket_largest_root(p, Rational(0), Rational(hi), width);
  if (!br) throw Error(ErrorCode::NoPositiveRoot, "reduced matching polynomial has no positive root");
  return *br;
}

SpectralResult rho_from_matching_poly(const MatchingPolynomial& phi) {
  const RootBracket br = reduced_root_bracket(phi, default_width());
  SpectralResult out;
  out.method = Method::MatchingRoot;
  const double lo = root_of(br.lo, phi.rank);
  const double hi = root_of(br.hi, phi.rank);
  out.rho = br.exact ? hi : 0.5 * (lo + hi);
  const double rounding = 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, out.rho);
  out.error_bound = (br.exact ? 0.0 : 0.5 * (hi - lo)) + rounding;
  // Bisection steps needed to reach the final width.
  const Rational width = br.hi - br.lo;
  out.iterations = br.exact ? 0 : static_cast<int>(std::ceil(std::log2(to_double(Rational(phi.counts[1] + 1) / width))));
  return out;
}

std::vector<double> tensor_apply(const Hypergraph& h, const std::vector<double>& x) {
  std::vector<double> y(h.order(), 0.0);
  for (const Edge& e : h.edges()) {
    for (Vertex i : e) {
      double prod = 1.0;
      for (Vertex j : e) {
        if (j != i) prod *= x[j];
      }
      y[i] += prod;
    }
  }
  return y;
}

SpectralResult rho_power_iteration(const Hypergraph& h, const PowerIterationOptions& opts) {
  if (h.size() == 0 || !is_connected(h)) {
    throw Error(ErrorCode::Disconnected, "power iteration needs a connected hypergraph with an edge");
  }
  const int n = h.order();
  const int r = h.rank();
  const double inv_r = 1.0 / r;
  const double inv_r1 = 1.0 / (r - 1);

  auto normalize = [&](std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += std::pow(v, r);
    const double scale = std::pow(s, -inv_r);
    for (double& v : x) v *= scale;
  };

  std::vector<double> x(n, 1.0);
  normalize(x);
  SpectralResult out;
  out.method = Method::PowerIteration;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    const std::vector<double> ax = tensor_apply(h, x);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int i = 0; i < n; ++i) {
      const double q = ax[i] / std::pow(x[i], r - 1);
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    if (hi - lo < opts.tol) {
      out.rho = 0.5 * (lo + hi);
      out.error_bound = std::max(0.5 * (hi - lo), 4 * std::numeric_limits<double>::epsilon() * out.rho);
      out.iterations = it;
      out.eigenvector = std::move(x);
      return out;
    }
    for (int i = 0; i < n; ++i) x[i] = std::pow(ax[i] + opts.shift * std::pow(x[i], r - 1), inv_r1);
    normalize(x);
  }
  throw Error(ErrorCode::NotConverged,
              "power iteration did not reach tolerance in " + std::to_string(opts.max_iterations) + " steps");
}

double spectral_radius(const Hypergraph& h) {
  double best = 0.0;
  for (const auto& comp : components(h)) {
    const Hypergraph c = induced(h, comp);
    if (c.size() == 0) continue;
    const double rho = is_acyclic(c) ? rho_from_matching_poly(matching_polynomial(c)).rho
                                     : rho_power_iteration(c).rho;
    best = std::max(best, rho);
  }
  return best;
}

PowerRelationReport verify_power_relation(const Hypergraph& tree, const std::vector<int>& ranks,
                                          double tolerance) {
  if (tree.rank() != 2 || !is_supertree(tree) || tree.size() == 0) {
    throw Error(ErrorCode::BadParams, "power relation check needs an ordinary tree with at least one edge");
  }
  const SpectralResult base = rho_from_matching_poly(matching_polynomial(tree));
  PowerRelationReport report;
  report.rho_graph = base.rho;
  report.pass = true;
  for (int r : ranks) {
    const SpectralResult lifted = rho_from_matching_poly(matching_polynomial(power(tree, r)));
    PowerRelationEntry e;
    e.r = r;
    e.rho_power_graph = lifted.rho;
    e.expected = std::pow(base.rho, 2.0 / r);
    e.gap = std::abs(e.rho_power_graph - e.expected);
    const double propagated = (2.0 / r) * std::pow(base.rho, 2.0 / r - 1.0) * base.error_bound;
    e.bound = std::max(tolerance, lifted.error_bound + propagated);
    e.pass = e.gap <= e.bound;
    report.pass = report.pass && e.pass;
    report.entries.push_back(e);
  }
  return report;
}

}  // namespace supertree
