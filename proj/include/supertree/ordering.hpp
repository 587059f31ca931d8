#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "supertree/constructions.hpp"
#include "supertree/hypergraph.hpp"
#include "supertree/matching_poly.hpp"
#include "supertree/polynomial.hpp"
#include "supertree/spectral.hpp"

namespace supertree {

enum class Relation { StrictlyLess, LessOrEqual, StrictlyGreater, GreaterOrEqual, Equal, Incomparable };

std::string relation_name(Relation r);

/// Outcome of comparing T1 against T2 under the matching-polynomial order:
/// T1 ⪯ T2 when phi(T1, x) >= phi(T2, x) for all x >= rho(T1), strict (≺)
/// when in addition the difference does not vanish at rho(T1).
struct OrderingVerdict {
  Relation relation = Relation::Incomparable;
  Polynomial difference;  // phi(T1) - phi(T2)
  double threshold = 0.0; // rho(T1)
  CanonicalCode first;
  CanonicalCode second;
};

/// Decides the relation between two superforests of equal order and rank.
/// Exact: signs are settled with Sturm counts at rational points bracketing
/// rho^r. Throws OrderMismatch, RankMismatch, NotAcyclic.
OrderingVerdict compare(const Hypergraph& t1, const Hypergraph& t2);

/// Same decision from the polynomials alone (both of one order and rank).
Relation compare_polynomials(const MatchingPolynomial& phi1, const MatchingPolynomial& phi2);

/// Edge budget for exhaustive enumeration.
constexpr int kDefaultEnumerationBudget = 7;

/// All r-uniform supertrees with m edges up to isomorphism, sorted by
/// canonical code. Throws BudgetExceeded when m > budget.
std::vector<Hypergraph> enumerate_supertrees(int m, int r, int budget = kDefaultEnumerationBudget);

/// S(m, d, r): the enumerated supertrees of diameter d.
std::vector<Hypergraph> enumerate_with_diameter(int m, int d, int r, int budget = kDefaultEnumerationBudget);

struct RankingEntry {
  int rank = 0;  // 1-based position in the ranking
  CanonicalCode code;
  std::string family_match;  // name of a known family member, or empty
  double rho = 0.0;          // matching-root value
  double method_gap = 0.0;   // |matching root - power iteration|
};

/// An exhaustively computed ranking together with the expected prefix.
struct RankingReport {
  std::string check;  // "diameter-ranking", "diameter-ranking-d+2", "minima", "extremes", "ranking"
  int m = 0;
  int d = -1;  // -1 when the ranking is not diameter-restricted
  int r = 0;
  bool descending = true;
  std::vector<RankingEntry> entries;
  std::vector<std::string> expected;  // family labels of the expected prefix
  std::vector<std::string> failures;  // empty iff pass
  bool pass = false;
};

struct VerifyOptions {
  int budget = kDefaultEnumerationBudget;
  /// Swaps the first two expected entries; a verification fixture that must
  /// make the check fail.
  bool perturb_expected = false;
  /// Minimum gap between consecutive ranked spectral radii at the boundary
  /// of the expected prefix.
  double separation = 1e-10;
};

/// Largest spectral radii in S(m, d, r): for m >= d+3, d >= 3 the top
/// floor(d/2)+1 are T(floor(d/2)+1), ..., T(2), T''; for m = d+2, d >= 4 the
/// top floor(d/2)-1 are T(floor(d/2)+1), ..., T(3). Also checks the pairwise
/// path-attachment inequalities, the centre-edge ≺ vertex attachment
/// relation, rho(T'') > rho(T_{m,d,r}(ceil(d/2))) and (m >= d+3) that every
/// other member lies strictly below T''. Throws PreconditionViolated.
RankingReport verify_ranking_diameter(int m, int d, int r, const VerifyOptions& opts = {});

/// Smallest spectral radii in S(m, r), m >= 4: P_m^r then D_{m,r}, with
/// D_{m,r} ≺ every other non-path supertree and P̀_m^r ≻ D_{m,r} (r >= 3).
RankingReport verify_minima(int m, int r, const VerifyOptions& opts = {});

/// P_m^r ⪯ T ⪯ S_m^r over S(m, r), with the closed-form extreme radii.
RankingReport verify_extremes(int m, int r, const VerifyOptions& opts = {});

/// S(m, d, r) (or all of S(m, r) when d < 0) ranked by descending radius,
/// with no expected prefix. Fails only if the two radius methods disagree.
RankingReport rank_supertrees(int m, int d, int r, int budget = kDefaultEnumerationBudget);

/// Label of the known family member with this code, among the families
/// defined for (m, d, r); empty if none matches.
std::string family_label(const CanonicalCode& code, int m, int r);

enum class GraftKind { OneVertex, Adjacent, DistanceS };

struct GraftingCheck {
  bool pass = false;
  OrderingVerdict verdict;  // compare(before, after)
  double rho_before = 0.0;  // T(..; p, q)
  double rho_after = 0.0;   // T(..; p+1, q-1)
  std::string detail;
};

/// Builds T(..; p, q) and T(..; p+1, q-1) and checks the former is ≻ the
/// latter with strictly larger spectral radius. `v` and `s` are ignored where
/// the kind does not use them. Throws PreconditionViolated.
GraftingCheck verify_grafting(GraftKind kind, const Hypergraph& t, Vertex u, Vertex v, int p, int q,
                              int s = 1);

/// Edge-releasing a non-pendent edge: T ≺ T' and rho(T) < rho(T').
GraftingCheck verify_edge_release(const Hypergraph& t, std::size_t edge_index, Vertex at);

/// Moving edges towards a vertex whose principal-eigenvector entry dominates
/// the entries at the vacated vertices strictly raises rho. Throws
/// PreconditionViolated when the eigenvector condition fails.
GraftingCheck verify_edge_moving(const Hypergraph& h, const std::vector<EdgeMove>& moves, Vertex target);

/// Supertree grown by attaching `edges` fresh edges, each at a uniformly
/// chosen existing vertex.
Hypergraph random_supertree(int edges, int r, std::mt19937_64& rng);

enum class PropertyKind { GraftOneVertex, GraftAdjacent, GraftDistance, EdgeRelease, EdgeMoving };

std::string property_name(PropertyKind k);

struct SuiteReport {
  std::string name;
  int instances = 0;
  int violations = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> failures;  // one line per violation
  bool pass = false;
};

/// Draws `count` random instances satisfying the property's hypotheses, with
/// every supertree involved kept to at most `max_edges` edges, and checks
/// each one.
SuiteReport run_property_suite(PropertyKind kind, int count, std::uint64_t seed, int max_edges = 10);

}  // namespace supertree
