#pragma once

#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "supertree/hypergraph.hpp"
#include "supertree/polynomial.hpp"

namespace supertree {

/// phi(H, x) = sum_k (-1)^k m(H, k) x^(n - k r), stored as the exact
/// matching counts m_0 = 1, m_1, ..., m_nu (no trailing zeros).
struct MatchingPolynomial {
  int order = 0;
  int rank = 2;
  std::vector<BigInt> counts{BigInt(1)};

  int matching_number() const { return static_cast<int>(counts.size()) - 1; }

  /// Full polynomial in x.
  Polynomial in_x() const;
  /// p(y) = sum_k (-1)^k m_k y^(nu - k); phi(x) = x^(n - nu r) p(x^r).
  Polynomial reduced() const;

  /// "x^5 - 2x^2" style.
  std::string to_string() const { return in_x().to_string(); }

  friend bool operator==(const MatchingPolynomial&, const MatchingPolynomial&) = default;
};

/// Counts k-matchings by enumerating sets of pairwise disjoint edges.
/// Throws TooLarge above `max_edges` edges.
BigInt count_matchings_bruteforce(const Hypergraph& h, int k, int max_edges = 24);

/// Memo table for the deletion recurrence. Connected superforest components
/// are keyed by canonical code, so isomorphic pieces share one entry; cyclic
/// components are keyed by their labelled edge set only. Lookups take a
/// shared lock and inserts an exclusive one, so one cache may serve several
/// threads.
class MatchingPolynomialCache {
 public:
  MatchingPolynomial compute(const Hypergraph& h);

  std::size_t size() const;
  void clear();

 private:
  MatchingPolynomial compute_connected(const Hypergraph& component);
  std::optional<MatchingPolynomial> lookup(const std::string& key) const;
  void store(const std::string& key, const MatchingPolynomial& value);

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, MatchingPolynomial> table_;
};

/// Process-wide cache used by matching_polynomial().
MatchingPolynomialCache& default_matching_cache();

/// Exact matching polynomial via phi(G) = phi(G \ e) - phi(G - V(e)),
/// splitting into components and memoizing through default_matching_cache().
MatchingPolynomial matching_polynomial(const Hypergraph& h);

/// phi(G ∪ H) = phi(G) phi(H). Throws RankMismatch.
MatchingPolynomial poly_union(const MatchingPolynomial& g, const MatchingPolynomial& h);

/// phi(H) - (x phi(H - u) - sum_{e in E_u} phi(H - V(e))); the zero
/// polynomial whenever the vertex expansion holds.
Polynomial vertex_deletion_residual(const Hypergraph& h, Vertex u);

/// sum_u phi(H - u) - d/dx phi(H).
Polynomial derivative_residual(const Hypergraph& h);

/// Matching polynomial of the r-th power of an ordinary forest, from the
/// forest's polynomial alone: the counts carry over and the order grows by
/// (r - 2) per edge. `edge_count` defaults to order - 1 (a tree).
MatchingPolynomial power_transform(const MatchingPolynomial& graph_poly, int r,
                                   std::optional<int> edge_count = std::nullopt);

/// Matching number nu(H), read off the computed polynomial.
int matching_number(const Hypergraph& h);

}  // namespace supertree
