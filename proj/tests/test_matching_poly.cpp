#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <thread>

#include "oracles.hpp"
#include "supertree/constructions.hpp"
#include "supertree/matching_poly.hpp"
#include "supertree/ordering.hpp"

using namespace supertree;

namespace {

std::vector<BigInt> counts(std::initializer_list<long long> c) {
  std::vector<BigInt> out;
  for (long long v : c) out.emplace_back(v);
  return out;
}

void check_against_bruteforce(const Hypergraph& h) {
  const auto phi = matching_polynomial(h);
  CHECK(phi.order == h.order());
  CHECK(phi.rank == h.rank());
  const int nu = oracle::max_matching(h.order(), h.edges());
  REQUIRE(phi.matching_number() == nu);
  for (int k = 0; k <= nu + 1; ++k) {
    const BigInt expect(oracle::count_matchings(h.order(), h.edges(), k));
    const BigInt got = static_cast<std::size_t>(k) < phi.counts.size() ? phi.counts[k] : BigInt(0);
    CHECK(got == expect);
  }
}

}  // namespace

TEST_CASE("brute-force counts") {
  const auto star = hyperstar(5, 3).graph;
  CHECK(count_matchings_bruteforce(star, 1) == 5);
  CHECK(count_matchings_bruteforce(star, 2) == 0);
  CHECK(count_matchings_bruteforce(loose_path(3, 4).graph, 2) == 1);
  CHECK(count_matchings_bruteforce(d_family(5, 3).graph, 0) == 1);
  CHECK(count_matchings_bruteforce(Hypergraph::empty(0, 3), 0) == 1);
  CHECK_THROWS_AS(count_matchings_bruteforce(loose_path(30, 2).graph, 2), Error);
}

TEST_CASE("small closed forms") {
  for (int r = 2; r <= 5; ++r) {
    const auto e = matching_polynomial(loose_path(1, r).graph);
    CHECK(e.counts == counts({1, 1}));
    CHECK(e.reduced().to_string() == "x - 1");
  }
  const auto p2 = matching_polynomial(loose_path(2, 3).graph);
  CHECK(p2.to_string() == "x^5 - 2x^2");
  CHECK(p2.reduced().to_string() == "x - 2");
  for (int m = 1; m <= 6; ++m) {
    const auto s = matching_polynomial(hyperstar(m, 4).graph);
    CHECK(s.counts == counts({1, m}));
  }
  const auto n4 = matching_polynomial(Hypergraph::empty(4, 3));
  CHECK(n4.to_string() == "x^4");
  CHECK(n4.matching_number() == 0);
}

TEST_CASE("union multiplies polynomials") {
  const auto e = matching_polynomial(loose_path(1, 3).graph);
  const auto sq = poly_union(e, e);
  CHECK(sq.counts == counts({1, 2, 1}));
  CHECK(sq.to_string() == "x^6 - 2x^3 + 1");

  const auto n3 = matching_polynomial(Hypergraph::empty(3, 3));
  const auto p2 = matching_polynomial(loose_path(2, 3).graph);
  const auto shifted = poly_union(p2, n3);
  CHECK(shifted.counts == p2.counts);
  CHECK(shifted.order == p2.order + 3);

  const auto mixed = matching_polynomial(disjoint_union(loose_path(2, 3).graph, loose_path(1, 3).graph));
  CHECK(mixed.counts == counts({1, 3, 2}));
  CHECK(poly_union(p2, e) == mixed);

  CHECK_THROWS_AS(poly_union(e, matching_polynomial(loose_path(1, 4).graph)), Error);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const int r = 2 + trial % 3;
    const auto g = random_supertree(trial % 5, r, rng);
    const auto h = random_supertree(1 + trial % 4, r, rng);
    CHECK(matching_polynomial(disjoint_union(g, h)) == poly_union(matching_polynomial(g), matching_polynomial(h)));
  }
}

TEST_CASE("recurrence agrees with brute force on cyclic inputs too") {
  // Berge triangle with pendant edges, plus a random family of linear hypergraphs.
  const auto tri = Hypergraph::from_edges(9, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}, {5, 6, 7}, {1, 7, 8}}, 3);
  check_against_bruteforce(tri);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    const int r = 2 + trial % 3;
    const int n = 6 + trial % 7;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<Edge> edges;
    for (int attempt = 0; attempt < 30 && edges.size() < 12; ++attempt) {
      std::set<int> s;
      while (static_cast<int>(s.size()) < r) s.insert(pick(rng));
      Edge e(s.begin(), s.end());
      bool linear = true;
      for (const auto& f : edges) {
        int shared = 0;
        for (int v : e) shared += std::count(f.begin(), f.end(), v);
        linear = linear && shared <= 1;
      }
      if (linear) edges.push_back(e);
    }
    check_against_bruteforce(Hypergraph::from_edges(n, edges, r));
  }
}

TEST_CASE("recurrence agrees with brute force on enumerated supertrees") {
  for (int r = 2; r <= 4; ++r) {
    for (int m = 0; m <= 6; ++m) {
      for (const auto& t : enumerate_supertrees(m, r)) check_against_bruteforce(t);
    }
  }
}

TEST_CASE("coefficients alternate in sign up to the matching number") {
  for (int m = 1; m <= 6; ++m) {
    for (const auto& t : enumerate_supertrees(m, 3)) {
      const auto phi = matching_polynomial(t);
      for (const auto& c : phi.counts) CHECK(c > 0);
      const auto px = phi.in_x();
      for (int k = 0; k <= phi.matching_number(); ++k) {
        const BigInt c = px.coefficient(phi.order - k * phi.rank);
        CHECK((k % 2 == 0 ? c > 0 : c < 0));
      }
    }
  }
}

TEST_CASE("edge recurrence holds exactly") {
  for (int r = 2; r <= 4; ++r) {
    for (int m = 1; m <= 6; ++m) {
      for (const auto& t : enumerate_supertrees(m, r)) {
        for (int e = 0; e < t.size(); ++e) {
          const auto lhs = matching_polynomial(t).in_x();
          const auto without = matching_polynomial(delete_edge(t, e)).in_x();
          const auto minus = matching_polynomial(delete_vertices(t, t.edge(e))).in_x();
          REQUIRE(lhs == without - minus);
        }
      }
    }
  }
}

TEST_CASE("vertex expansion and derivative identities") {
  const auto star = hyperstar(3, 3);
  CHECK(vertex_deletion_residual(star.graph, star.anchor("center")).is_zero());
  const auto p3 = loose_path(3, 3);
  CHECK(vertex_deletion_residual(p3.graph, p3.anchor("v2")).is_zero());
  const auto with_isolated = disjoint_union(p3.graph, Hypergraph::empty(1, 3));
  CHECK(vertex_deletion_residual(with_isolated, with_isolated.order() - 1).is_zero());

  CHECK(derivative_residual(Hypergraph::empty(4, 3)).is_zero());
  CHECK(matching_polynomial(Hypergraph::empty(4, 3)).in_x().derivative().to_string() == "4x^3");
  CHECK(derivative_residual(loose_path(1, 5).graph).is_zero());
  CHECK(derivative_residual(d_family(4, 3).graph).is_zero());

  for (int r = 2; r <= 4; ++r) {
    for (int m = 0; m <= 5; ++m) {
      for (const auto& t : enumerate_supertrees(m, r)) {
        CHECK(derivative_residual(t).is_zero());
        for (Vertex u = 0; u < t.order(); ++u) REQUIRE(vertex_deletion_residual(t, u).is_zero());
      }
    }
  }
}

TEST_CASE("power transform") {
  const auto p2 = Hypergraph::from_edges(3, {{0, 1}, {1, 2}}, 2);
  const auto p2_poly = matching_polynomial(p2);
  CHECK(p2_poly.to_string() == "x^3 - 2x");
  CHECK(power_transform(p2_poly, 3).to_string() == "x^5 - 2x^2");

  const auto s4 = Hypergraph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, 2);
  const auto s4_3 = power_transform(matching_polynomial(s4), 3);
  CHECK(s4_3.order == 9);
  CHECK(s4_3.counts == counts({1, 4}));

  const auto k2 = Hypergraph::from_edges(2, {{0, 1}}, 2);
  CHECK(power_transform(matching_polynomial(k2), 4).to_string() == "x^4 - 1");

  // A forest: two disjoint edges.
  const auto two = Hypergraph::from_edges(4, {{0, 1}, {2, 3}}, 2);
  CHECK(power_transform(matching_polynomial(two), 3, 2) == matching_polynomial(power(two, 3)));

  for (int m = 0; m <= 8; ++m) {
    for (const auto& t : enumerate_supertrees(m, 2, 8)) {
      for (int r : {3, 4}) {
        REQUIRE(power_transform(matching_polynomial(t), r) == matching_polynomial(power(t, r)));
      }
    }
  }
  CHECK_THROWS_AS(power_transform(s4_3, 4), Error);
  CHECK_THROWS_AS(power_transform(p2_poly, 2), Error);
}

TEST_CASE("matching number") {
  for (int m = 1; m <= 6; ++m) CHECK(matching_number(hyperstar(m, 3).graph) == 1);
  for (int m = 0; m <= 8; ++m) {
    const auto p = loose_path(m, 3).graph;
    CHECK(matching_number(p) == (m + 1) / 2);
    CHECK(matching_number(p) == oracle::max_matching(p.order(), p.edges()));
  }
  CHECK(matching_number(Hypergraph::empty(5, 3)) == 0);
}

TEST_CASE("cache is shared safely between threads") {
  MatchingPolynomialCache cache;
  const auto trees = enumerate_supertrees(6, 3);
  std::vector<MatchingPolynomial> serial;
  for (const auto& t : trees) serial.push_back(cache.compute(t));
  cache.clear();
  CHECK(cache.size() == 0);

  std::vector<std::vector<MatchingPolynomial>> results(4);
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (const auto& t : trees) results[w].push_back(cache.compute(t));
    });
  }
  for (auto& th : workers) th.join();
  for (const auto& r : results) CHECK(r == serial);
  CHECK(cache.size() > 0);
}
