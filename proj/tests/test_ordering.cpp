#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "supertree/constructions.hpp"
#include "supertree/ordering.hpp"

using namespace supertree;

namespace {

Relation flipped(Relation r) {
  switch (r) {
    case Relation::StrictlyLess: return Relation::StrictlyGreater;
    case Relation::LessOrEqual: return Relation::GreaterOrEqual;
    case Relation::StrictlyGreater: return Relation::StrictlyLess;
    case Relation::GreaterOrEqual: return Relation::LessOrEqual;
    default: return r;
  }
}

bool at_most(Relation r) { return r == Relation::StrictlyLess || r == Relation::LessOrEqual; }

Hypergraph paths(int a, int b, int r) { return disjoint_union(loose_path(a, r).graph, loose_path(b, r).graph); }

std::set<CanonicalCode> codes(const std::vector<Hypergraph>& hs) {
  std::set<CanonicalCode> out;
  for (const auto& h : hs) out.insert(canonical_code(h));
  return out;
}

}  // namespace

TEST_CASE("basic verdicts") {
  const auto v = compare(loose_path(4, 3).graph, hyperstar(4, 3).graph);
  CHECK(v.relation == Relation::StrictlyLess);
  CHECK(v.threshold == doctest::Approx(oracle::path_rho(4, 3)));
  CHECK(v.first == canonical_code(loose_path(4, 3).graph));

  const auto d = d_family(5, 3).graph;
  const auto same = compare(d, d);
  CHECK(same.relation == Relation::Equal);
  CHECK(same.difference.is_zero());

  CHECK_THROWS_AS(compare(loose_path(3, 3).graph, loose_path(4, 3).graph), Error);
  CHECK_THROWS_AS(compare(loose_path(3, 3).graph, loose_path(2, 4).graph), Error);
  const auto tri = Hypergraph::from_edges(6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}, 3);
  CHECK_THROWS_AS(compare(tri, tri), Error);
}

TEST_CASE("splitting a path evenly gives the smaller union") {
  // P_2 ∪ P_2 against P_1 ∪ P_3: the balanced split sits below.
  CHECK(compare(paths(2, 2, 3), paths(1, 3, 3)).relation == Relation::StrictlyLess);
  CHECK(compare(paths(1, 3, 3), paths(2, 2, 3)).relation == Relation::StrictlyGreater);

  for (int r = 2; r <= 4; ++r) {
    for (int total = 2; total <= 10; ++total) {
      for (int a = 0; 2 * a <= total; ++a) {
        for (int c = a + 1; 2 * c <= total; ++c) {
          const auto unbalanced = paths(a, total - a, r);
          const auto balanced = paths(c, total - c, r);
          const auto verdict = compare(balanced, unbalanced);
          CHECK_MESSAGE(verdict.relation == Relation::StrictlyLess, "r=", r, " a=", a, " c=", c, " total=", total);
          CHECK(spectral_radius(balanced) < spectral_radius(unbalanced));
        }
      }
    }
  }
}

TEST_CASE("compare is antisymmetric and consistent with the radii") {
  for (int m = 1; m <= 5; ++m) {
    const auto trees = enumerate_supertrees(m, 3);
    std::vector<double> rho;
    for (const auto& t : trees) rho.push_back(spectral_radius(t));
    for (std::size_t a = 0; a < trees.size(); ++a) {
      for (std::size_t b = 0; b < trees.size(); ++b) {
        const auto ab = compare(trees[a], trees[b]).relation;
        const auto ba = compare(trees[b], trees[a]).relation;
        CHECK(ab == flipped(ba));
        if (a == b) CHECK(ab == Relation::Equal);
        if (at_most(ab)) CHECK(rho[a] <= rho[b] + 1e-12);
        if (ab == Relation::StrictlyLess) CHECK(rho[a] < rho[b]);
        if (rho[a] < rho[b] - 1e-9) CHECK_FALSE(at_most(ba));
      }
    }
  }
}

TEST_CASE("polynomial comparison matches the hypergraph comparison") {
  const auto trees = enumerate_supertrees(5, 4);
  for (const auto& a : trees) {
    for (const auto& b : trees) {
      CHECK(compare_polynomials(matching_polynomial(a), matching_polynomial(b)) == compare(a, b).relation);
    }
  }
}

TEST_CASE("padding with a common superforest keeps the order") {
  // phi(T'∪H) - phi(T∪H) = phi(H) (phi(T') - phi(T)). Strictness survives
  // only while rho(H) < rho(T'); otherwise phi(H) vanishes at the threshold
  // and the verdict weakens to ⪯.
  std::mt19937_64 rng(13);
  int strict = 0;
  int weak = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int r = 3 + trial % 2;
    const int m = 3 + trial % 3;
    const auto trees = enumerate_supertrees(m, r);
    std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
    const auto& t1 = trees[pick(rng)];
    const auto& t2 = trees[pick(rng)];
    const auto base = compare(t1, t2).relation;
    if (!at_most(base)) continue;
    auto pad = random_supertree(1 + trial % 4, r, rng);
    if (trial % 3 == 0) pad = disjoint_union(pad, random_supertree(trial % 3, r, rng));
    const auto padded = compare(disjoint_union(t1, pad), disjoint_union(t2, pad)).relation;
    CHECK(at_most(padded));
    if (base == Relation::StrictlyLess && spectral_radius(pad) < spectral_radius(t1) - 1e-9) {
      CHECK(padded == Relation::StrictlyLess);
      ++strict;
    } else if (base == Relation::StrictlyLess && spectral_radius(pad) > spectral_radius(t1) + 1e-9) {
      CHECK(padded == Relation::LessOrEqual);
      ++weak;
    }
  }
  CHECK(strict >= 20);
  CHECK(weak >= 20);
}

TEST_CASE("spanning partial hypergraphs lie strictly below") {
  for (int r = 2; r <= 4; ++r) {
    for (int m = 1; m <= 5; ++m) {
      for (const auto& t : enumerate_supertrees(m, r)) {
        for (int e = 0; e < t.size(); ++e) CHECK(compare(delete_edge(t, e), t).relation == Relation::StrictlyLess);
      }
    }
  }
}

TEST_CASE("enumeration matches the independent generator") {
  for (int m = 0; m <= 7; ++m) CHECK(enumerate_supertrees(m, 2).size() == static_cast<std::size_t>(oracle::known_tree_count(m)));
  for (int r = 2; r <= 5; ++r) {
    CHECK(enumerate_supertrees(1, r).size() == 1);
    CHECK(enumerate_supertrees(2, r).size() == 1);
  }
  const auto three = enumerate_supertrees(3, 3);
  CHECK(codes(three) == std::set<CanonicalCode>{canonical_code(loose_path(3, 3).graph),
                                                 canonical_code(hyperstar(3, 3).graph)});
  CHECK(three.size() == enumerate_supertrees(3, 2).size());

  for (int r = 2; r <= 4; ++r) {
    for (int m = 0; m <= 5; ++m) {
      const auto mine = enumerate_supertrees(m, r);
      const auto theirs = oracle::all_supertrees(m, r);
      REQUIRE(mine.size() == theirs.size());
      std::set<CanonicalCode> oracle_codes;
      for (const auto& p : theirs) oracle_codes.insert(canonical_code(Hypergraph::from_edges(p.n, p.edges, p.r)));
      CHECK(codes(mine) == oracle_codes);
      // Every listed supertree is a genuine supertree with the right size.
      for (const auto& t : mine) {
        CHECK(t.size() == m);
        CHECK(is_supertree(t));
      }
      for (std::size_t k = 1; k < mine.size(); ++k) CHECK(canonical_code(mine[k - 1]) < canonical_code(mine[k]));
    }
  }
  CHECK_THROWS_AS(enumerate_supertrees(8, 3), Error);
  CHECK(enumerate_supertrees(8, 2, 8).size() == 47);
}

TEST_CASE("diameter-restricted enumeration") {
  CHECK(codes(enumerate_with_diameter(3, 3, 3)) == codes({loose_path(3, 3).graph}));
  CHECK(codes(enumerate_with_diameter(3, 2, 3)) == codes({hyperstar(3, 3).graph}));
  const auto s433 = codes(enumerate_with_diameter(4, 3, 3));
  CHECK(s433 == codes({d_family(4, 3).graph, p_grave(4, 3).graph}));
  CHECK(s433.count(canonical_code(t_md_i(4, 3, 3, 2).graph)) == 1);

  for (int m = 3; m <= 5; ++m) {
    for (int d = 1; d <= m; ++d) {
      std::set<CanonicalCode> expect;
      for (const auto& p : oracle::all_supertrees(m, 3)) {
        if (oracle::diameter(p.n, p.edges) == d) expect.insert(canonical_code(Hypergraph::from_edges(p.n, p.edges, 3)));
      }
      CHECK(codes(enumerate_with_diameter(m, d, 3)) == expect);
    }
  }
}

TEST_CASE("grafting examples") {
  const auto e = loose_path(1, 3);
  const auto one = verify_grafting(GraftKind::OneVertex, e.graph, e.anchor("c1"), 0, 2, 2);
  CHECK(one.pass);
  CHECK(one.verdict.relation == Relation::StrictlyGreater);
  CHECK(one.rho_before > one.rho_after);

  // Two adjacent vertices on a single edge give isomorphic grafts, so the
  // adjacent case is exercised on P_2^3.
  const auto p2 = loose_path(2, 3);
  const auto adj = verify_grafting(GraftKind::Adjacent, p2.graph, p2.anchor("v1"), p2.anchor("v2"), 2, 1);
  CHECK(adj.pass);
  CHECK(adj.verdict.relation == Relation::StrictlyGreater);
  CHECK_THROWS_AS(verify_grafting(GraftKind::Adjacent, e.graph, e.anchor("v1"), e.anchor("v2"), 2, 1), Error);

  // s = 2 chain from v1 to v3 of P_3^3.
  const auto p3 = loose_path(3, 3);
  const auto dist = verify_grafting(GraftKind::DistanceS, p3.graph, p3.anchor("v1"), p3.anchor("v3"), 3, 1, 2);
  CHECK(dist.pass);
  CHECK(dist.verdict.relation == Relation::StrictlyGreater);
  CHECK(dist.rho_before > dist.rho_after);

  CHECK_THROWS_AS(verify_grafting(GraftKind::OneVertex, e.graph, 0, 0, 1, 2), Error);
  CHECK_THROWS_AS(verify_grafting(GraftKind::DistanceS, p2.graph, p2.anchor("v1"), p2.anchor("v3"), 2, 1, 2), Error);
}

TEST_CASE("edge release and edge moving") {
  const auto p4 = loose_path(4, 3);
  const auto rel = verify_edge_release(p4.graph, 1, p4.anchor("v2"));
  CHECK(rel.pass);
  CHECK(rel.rho_after > rel.rho_before);
  CHECK_THROWS_AS(verify_edge_release(p4.graph, 0, p4.anchor("v1")), Error);

  // Pulling the far edge of P_3^3 onto the centre turns it into S_3^3.
  const auto p3 = loose_path(3, 3);
  const std::vector<EdgeMove> moves{{2, p3.anchor("v3")}};
  const auto mv = verify_edge_moving(p3.graph, moves, p3.anchor("v2"));
  CHECK(mv.pass);
  CHECK(mv.rho_after == doctest::Approx(std::cbrt(3.0)).epsilon(1e-10));

  // Towards a leaf the eigenvector condition fails.
  const std::vector<EdgeMove> bad{{1, p3.anchor("v2")}};
  CHECK_THROWS_AS(verify_edge_moving(p3.graph, bad, p3.anchor("c1")), Error);
}

TEST_CASE("path-attachment radius orders") {
  // A hyperstar hung on a path: the radius grows as the attachment point
  // moves inward, and hanging it on v_i beats hanging it on e_{i-1} or e_i.
  for (int r = 3; r <= 4; ++r) {
    for (int d = 3; d <= 6; ++d) {
      for (int k = 1; k <= 2; ++k) {
        const auto star = hyperstar(k, r);
        const Vertex u = star.anchor("center");
        auto vertex = [&](int i) { return spectral_radius(path_vertex_attachment(d, r, i, star.graph, u).graph); };
        auto edge = [&](int i) { return spectral_radius(path_edge_attachment(d, r, i, star.graph, u).graph); };
        for (int i = 2; i <= d / 2 + 1; ++i) {
          for (int j = 2; j < i; ++j) CHECK(vertex(i) > vertex(j));
        }
        for (int i = 2; i <= (d + 1) / 2; ++i) {
          for (int j = 2; j < i; ++j) CHECK(edge(i) > edge(j));
        }
        for (int i = 2; i <= d; ++i) CHECK(vertex(i) > edge(i));
        for (int i = 2; i <= d - 1; ++i) CHECK(vertex(i + 1) > edge(i));
      }
    }
  }
}

TEST_CASE("diameter rankings") {
  const auto r633 = verify_ranking_diameter(6, 3, 3);
  CHECK(r633.pass);
  CHECK(r633.expected == std::vector<std::string>{"Tmd_i(d=3,i=2)", "TDoublePrime(d=3)"});
  REQUIRE(r633.entries.size() >= 2);
  CHECK(r633.entries[0].code == canonical_code(t_md_i(6, 3, 3, 2).graph));
  CHECK(r633.entries[1].code == canonical_code(t_double_prime(6, 3, 3).graph));
  for (std::size_t k = 1; k < r633.entries.size(); ++k) CHECK(r633.entries[k - 1].rho >= r633.entries[k].rho);

  const auto r743 = verify_ranking_diameter(7, 4, 3);
  CHECK(r743.pass);
  REQUIRE(r743.entries.size() >= 3);
  CHECK(r743.entries[0].code == canonical_code(t_md_i(7, 4, 3, 3).graph));
  CHECK(r743.entries[1].code == canonical_code(t_md_i(7, 4, 3, 2).graph));
  CHECK(r743.entries[2].code == canonical_code(t_double_prime(7, 4, 3).graph));

  const auto tight = verify_ranking_diameter(6, 4, 3);
  CHECK(tight.pass);
  CHECK(tight.check == "diameter-ranking-d+2");
  CHECK(tight.entries.at(0).code == canonical_code(t_md_i(6, 4, 3, 3).graph));

  CHECK_THROWS_AS(verify_ranking_diameter(5, 3, 3), Error);
  CHECK_THROWS_AS(verify_ranking_diameter(9, 3, 3), Error);

  VerifyOptions perturbed;
  perturbed.perturb_expected = true;
  CHECK_FALSE(verify_ranking_diameter(6, 3, 3, perturbed).pass);
  CHECK_FALSE(verify_ranking_diameter(6, 4, 3, perturbed).pass);
}

TEST_CASE("minima and extremes") {
  for (auto [m, r] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {4, 4}}) {
    const auto rep = verify_minima(m, r);
    CHECK(rep.pass);
    CHECK_FALSE(rep.descending);
    REQUIRE(rep.entries.size() >= 2);
    CHECK(rep.entries[0].code == canonical_code(loose_path(m, r).graph));
    CHECK(rep.entries[1].code == canonical_code(d_family(m, r).graph));
    CHECK(rep.entries[1].rho - rep.entries[0].rho > 1e-10);
    CHECK(rep.entries[2].rho - rep.entries[1].rho > 1e-10);
  }
  CHECK(verify_minima(4, 3).entries[0].rho == doctest::Approx(std::cbrt(3.0)).epsilon(1e-12));
  CHECK(spectral_radius(d_family(4, 3).graph) < spectral_radius(p_grave(4, 3).graph));
  CHECK_THROWS_AS(verify_minima(3, 3), Error);

  VerifyOptions perturbed;
  perturbed.perturb_expected = true;
  CHECK_FALSE(verify_minima(5, 3, perturbed).pass);

  for (int m = 1; m <= 6; ++m) CHECK(verify_extremes(m, 3).pass);
  CHECK_FALSE(verify_extremes(5, 3, perturbed).pass);
}

TEST_CASE("family labels") {
  CHECK(family_label(canonical_code(loose_path(5, 3).graph), 5, 3) == "LoosePath");
  CHECK(family_label(canonical_code(hyperstar(5, 3).graph), 5, 3) == "Hyperstar");
  CHECK(family_label(canonical_code(d_family(5, 3).graph), 5, 3) == "D");
  CHECK(family_label(CanonicalCode{"nonsense"}, 5, 3).empty());
}

TEST_CASE("property suites on a small sample") {
  for (auto kind : {PropertyKind::GraftOneVertex, PropertyKind::GraftAdjacent, PropertyKind::GraftDistance,
                    PropertyKind::EdgeRelease, PropertyKind::EdgeMoving}) {
    const auto rep = run_property_suite(kind, 25, 99, 8);
    CHECK_MESSAGE(rep.pass, property_name(kind));
    CHECK(rep.instances == 25);
    CHECK(rep.violations == 0);
    CHECK(rep.seed == 99);
    // Same seed, same report.
    CHECK(run_property_suite(kind, 25, 99, 8).failures == rep.failures);
  }
  CHECK_THROWS_AS(run_property_suite(PropertyKind::GraftOneVertex, 5, 1, 4), Error);
}
