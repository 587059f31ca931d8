#include "supertree/matching_poly.hpp"

#include <algorithm>
#include <mutex>

namespace supertree {

namespace {

void trim_counts(std::vector<BigInt>& counts) {
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
}

std::string labelled_key(const Hypergraph& h) {
  auto edges = h.edges();
  std::sort(edges.begin(), edges.end());
  std::string key = "L" + std::to_string(h.rank()) + "/" + std::to_string(h.order()) + ":";
  for (const auto& e : edges) {
    for (Vertex v : e) key += std::to_string(v) + ",";
    key += ";";
  }
  return key;
}

// Vertex of maximum degree; ties go to the lowest id.
Vertex pivot_vertex(const Hypergraph& h) {
  Vertex best = 0;
  for (Vertex v = 1; v < h.order(); ++v) {
    if (h.degree(v) > h.degree(best)) best = v;
  }
  return best;
}

void enumerate_matchings(const Hypergraph& h, std::size_t next, int remaining,
                         std::vector<char>& covered, BigInt& total) {
  if (remaining == 0) {
    ++total;
    return;
  }
  const std::size_t m = h.edges().size();
  if (m - next < static_cast<std::size_t>(remaining)) return;
  for (std::size_t e = next; e < m; ++e) {
    const Edge& edge = h.edge(e);
    if (std::any_of(edge.begin(), edge.end(), [&](Vertex v) { return covered[v] != 0; })) continue;
    for (Vertex v : edge) covered[v] = 1;
    enumerate_matchings(h, e + 1, remaining - 1, covered, total);
    for (Vertex v : edge) covered[v] = 0;
  }
}

}  // namespace

Polynomial MatchingPolynomial::in_x() const {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(order) + 1, BigInt(0));
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const int deg = order - static_cast<int>(k) * rank;
    coeffs[deg] = (k % 2 == 0) ? counts[k] : BigInt(-counts[k]);
  }
  return Polynomial(std::move(coeffs));
}

Polynomial MatchingPolynomial::reduced() const {
  const int nu = matching_number();
  std::vector<BigInt> coeffs(static_cast<std::size_t>(nu) + 1, BigInt(0));
  for (int k = 0; k <= nu; ++k) coeffs[nu - k] = (k % 2 == 0) ? counts[k] : BigInt(-counts[k]);
  return Polynomial(std::move(coeffs));
}

BigInt count_matchings_bruteforce(const Hypergraph& h, int k, int max_edges) {
  if (h.size() > max_edges) {
    throw Error(ErrorCode::TooLarge, std::to_string(h.size()) + " edges exceed the brute-force budget of " +
                                         std::to_string(max_edges));
  }
  if (k < 0) return 0;
  BigInt total = 0;
  std::vector<char> covered(h.order(), 0);
  enumerate_matchings(h, 0, k, covered, total);
  return total;
}

MatchingPolynomial MatchingPolynomialCache::compute(const Hypergraph& h) {
  MatchingPolynomial result{0, h.rank(), {BigInt(1)}};
  for (const auto& comp : components(h)) {
    result = poly_union(result, compute_connected(induced(h, comp)));
  }
  return result;
}

MatchingPolynomial MatchingPolynomialCache::compute_connected(const Hypergraph& c) {
  if (c.size() == 0) return MatchingPolynomial{c.order(), c.rank(), {BigInt(1)}};
  if (c.size() == 1) return MatchingPolynomial{c.order(), c.rank(), {BigInt(1), BigInt(1)}};

  const std::string key = is_acyclic(c) ? canonical_code(c).bytes : labelled_key(c);
  if (auto hit = lookup(key)) return *hit;

  const std::size_t pivot = static_cast<std::size_t>(c.incident_edges(pivot_vertex(c)).front());
  const MatchingPolynomial without = compute(delete_edge(c, pivot));
  const MatchingPolynomial covered = compute(delete_vertices(c, c.edge(pivot)));

  // m(G, k) = m(G \ e, k) + m(G - V(e), k - 1)
  MatchingPolynomial out{c.order(), c.rank(), without.counts};
  out.counts.resize(std::max(without.counts.size(), covered.counts.size() + 1), BigInt(0));
  for (std::size_t k = 0; k < covered.counts.size(); ++k) out.counts[k + 1] += covered.counts[k];
  trim_counts(out.counts);

  store(key, out);
  return out;
}

std::optional<MatchingPolynomial> MatchingPolynomialCache::lookup(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void MatchingPolynomialCache::store(const std::string& key, const MatchingPolynomial& value) {
  std::unique_lock lock(mutex_);
  table_.emplace(key, value);
}

std::size_t MatchingPolynomialCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void MatchingPolynomialCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

MatchingPolynomialCache& default_matching_cache() {
  static MatchingPolynomialCache cache;
  return cache;
}

MatchingPolynomial matching_polynomial(const Hypergraph& h) { return default_matching_cache().compute(h); }

MatchingPolynomial poly_union(const MatchingPolynomial& g, const MatchingPolynomial& h) {
  if (g.rank != h.rank) {
    throw Error(ErrorCode::RankMismatch,
                "ranks " + std::to_string(g.rank) + " and " + std::to_string(h.rank) + " differ");
  }
  MatchingPolynomial out{g.order + h.order, g.rank, {}};
  out.counts.assign(g.counts.size() + h.counts.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < g.counts.size(); ++i) {
    for (std::size_t j = 0; j < h.counts.size(); ++j) out.counts[i + j] += g.counts[i] * h.counts[j];
  }
  trim_counts(out.counts);
  return out;
}

Polynomial vertex_deletion_residual(const Hypergraph& h, Vertex u) {
  const Vertex removed[] = {u};
  Polynomial expansion = matching_polynomial(delete_vertices(h, removed)).in_x().shifted(1);
  for (int e : h.incident_edges(u)) {
    expansion = expansion - matching_polynomial(delete_vertices(h, h.edge(e))).in_x();
  }
  return matching_polynomial(h).in_x() - expansion;
}

Polynomial derivative_residual(const Hypergraph& h) {
  Polynomial sum;
  for (Vertex u = 0; u < h.order(); ++u) {
    const Vertex removed[] = {u};
    sum = sum + matching_polynomial(delete_vertices(h, removed)).in_x();
  }
  return sum - matching_polynomial(h).in_x().derivative();
}

MatchingPolynomial power_transform(const MatchingPolynomial& graph_poly, int r,
                                   std::optional<int> edge_count) {
  if (graph_poly.rank != 2) throw Error(ErrorCode::RankNotTwo, "power_transform expects a graph polynomial");
  if (r < 3) throw Error(ErrorCode::RankTooSmall, "power_transform requires r >= 3");
  const int m = edge_count.value_or(graph_poly.order - 1);
  if (m < 0) throw Error(ErrorCode::BadParams, "negative edge count");
  return MatchingPolynomial{graph_poly.order + m * (r - 2), r, graph_poly.counts};
}

int matching_number(const Hypergraph& h) { return matching_polynomial(h).matching_number(); }

}  // namespace supertree
