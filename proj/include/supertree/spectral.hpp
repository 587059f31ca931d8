#pragma once

#include <string>
#include <vector>

#include "supertree/hypergraph.hpp"
#include "supertree/matching_poly.hpp"
#include "supertree/polynomial.hpp"

namespace supertree {

enum class Method { MatchingRoot, PowerIteration };

std::string method_name(Method m);

struct SpectralResult {
  double rho = 0.0;
  Method method = Method::MatchingRoot;
  double error_bound = 0.0;        // |rho - true value| <= error_bound, always > 0
  std::vector<double> eigenvector; // PowerIteration only; sum x_i^r = 1
  int iterations = 0;
};

/// Bracket of y* = rho^r, the largest root of the reduced polynomial p(y).
/// Throws NoPositiveRoot when p has no positive root (edgeless input).
RootBracket reduced_root_bracket(const MatchingPolynomial& phi, const Rational& width);

/// Spectral radius of a superforest from its matching polynomial: the largest
/// root y* of p(y), isolated by exact bisection, gives rho = y*^(1/r).
SpectralResult rho_from_matching_poly(const MatchingPolynomial& phi);

struct PowerIterationOptions {
  double tol = 1e-10;
  int max_iterations = 1'000'000;
  double shift = 1.0;
};

/// Shifted power iteration x <- normalize((A x^{r-1} + shift x^{[r-1]})^{[1/(r-1)]})
/// on the adjacency tensor; rho is bracketed by the min/max Collatz-Wielandt
/// quotients (A x^{r-1})_i / x_i^{r-1}. Throws Disconnected or NotConverged.
SpectralResult rho_power_iteration(const Hypergraph& h, const PowerIterationOptions& opts = {});

/// (A x^{r-1})_i = sum over edges e ∋ i of prod_{j in e, j != i} x_j.
std::vector<double> tensor_apply(const Hypergraph& h, const std::vector<double>& x);

/// Spectral radius of any linear uniform hypergraph: the maximum over
/// components, using the matching root for acyclic components and power
/// iteration otherwise. Zero for edgeless input.
double spectral_radius(const Hypergraph& h);

struct PowerRelationEntry {
  int r = 0;
  double rho_power_graph = 0.0;  // rho(T^r)
  double expected = 0.0;         // rho(T)^(2/r)
  double gap = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct PowerRelationReport {
  double rho_graph = 0.0;
  std::vector<PowerRelationEntry> entries;
  bool pass = false;
};

/// Checks rho(T^r) = rho(T)^(2/r) for an ordinary tree T and each r given.
/// An entry passes when the gap is within max(tolerance, combined error bounds).
PowerRelationReport verify_power_relation(const Hypergraph& tree, const std::vector<int>& ranks = {3, 4},
                                          double tolerance = 1e-8);

}  // namespace supertree
