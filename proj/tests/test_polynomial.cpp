#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "supertree/error.hpp"
#include "supertree/polynomial.hpp"

using namespace supertree;

namespace {

Polynomial poly(std::initializer_list<long long> low_first) {
  std::vector<BigInt> c;
  for (long long v : low_first) c.emplace_back(v);
  return Polynomial(c);
}

// Product of (x - root) over the given integer roots, times `lead`.
Polynomial from_roots(const std::vector<long long>& roots, long long lead = 1) {
  Polynomial p = poly({lead});
  for (long long a : roots) p = p * poly({-a, 1});
  return p;
}

}  // namespace

TEST_CASE("arithmetic and printing") {
  const auto p = poly({-1, 0, 0, 1});
  CHECK(p.degree() == 3);
  CHECK(p.to_string() == "x^3 - 1");
  CHECK(poly({0, 0, -2, 0, 0, 1}).to_string() == "x^5 - 2x^2");
  CHECK(Polynomial().is_zero());
  CHECK(Polynomial().degree() == -1);
  CHECK((p - p).is_zero());
  CHECK(p * poly({1}) == p);
  CHECK((p * p) == poly({1, 0, 0, -2, 0, 0, 1}));
  CHECK(p.derivative() == poly({0, 0, 3}));
  CHECK(p.shifted(2) == poly({0, 0, -1, 0, 0, 1}));
  CHECK(poly({0, 0, 0}).is_zero());
}

TEST_CASE("evaluation matches Horner in doubles") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BigInt> c;
    std::vector<double> cd;
    for (int k = 0; k < 6; ++k) {
      const int v = coef(rng);
      c.emplace_back(v);
      cd.push_back(v);
    }
    const Polynomial p(c);
    for (int num = -7; num <= 7; ++num) {
      const Rational x(num, 3);
      double expect = 0.0;
      for (auto it = cd.rbegin(); it != cd.rend(); ++it) expect = expect * (num / 3.0) + *it;
      CHECK(to_double(p.evaluate(x)) == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("gcd and exact division") {
  const auto a = from_roots({1, 2, 2, 5}, 3);
  const auto b = from_roots({2, 5, 7}, -2);
  CHECK(gcd(a, b) == from_roots({2, 5}));
  CHECK(gcd(a, poly({4})) == poly({1}));
  CHECK(gcd(Polynomial(), Polynomial()).is_zero());
  CHECK(exact_quotient(a, from_roots({2, 5})) == from_roots({1, 2}, 3));

  const auto d = divide_scaled(poly({1, 0, 1}), poly({0, 2}));
  // (x^2 + 1) scaled = q * 2x + remainder, with a constant remainder.
  CHECK(d.remainder.degree() <= 0);
}

TEST_CASE("square-free decomposition") {
  const auto p = from_roots({1, 3, 3, -2, -2, -2});
  const auto f = squarefree_factors(p);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == from_roots({1}));
  CHECK(f[1] == from_roots({3}));
  CHECK(f[2] == from_roots({-2}));
  // Odd multiplicities only: roots 1 and -2.
  CHECK(sign_change_part(p) == from_roots({1, -2}));
  CHECK(sign_change_part(from_roots({4, 4})).degree() == 0);
}

TEST_CASE("Sturm counts agree with the known roots") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> root(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<long long> roots;
    const int k = 1 + trial % 6;
    for (int i = 0; i < k; ++i) roots.push_back(root(rng));
    const auto p = from_roots(roots, trial % 2 == 0 ? 1 : -3);
    const SturmSequence s(p);
    for (int lo = -7; lo <= 6; ++lo) {
      for (int hi = lo + 1; hi <= 7; ++hi) {
        std::set<long long> inside;
        for (long long a : roots) {
          if (a > lo && a <= hi) inside.insert(a);
        }
        REQUIRE(s.count_roots(Rational(lo), Rational(hi)) == static_cast<int>(inside.size()));
      }
      std::set<long long> above;
      for (long long a : roots) {
        if (a > lo) above.insert(a);
      }
      CHECK(s.count_roots_above(Rational(lo)) == static_cast<int>(above.size()));
    }
  }
  CHECK_THROWS_AS(SturmSequence{Polynomial{}}, Error);
}

TEST_CASE("root bound and largest-root bracketing") {
  const auto p = poly({1, -3, 1});  // y^2 - 3y + 1
  const auto bound = p.root_bound();
  CHECK(Rational(bound) > Rational(26, 10));
  const auto br = bracket_largest_root(p, Rational(0), Rational(bound), Rational(1, 1 << 20));
  REQUIRE(br.has_value());
  const double golden = (3.0 + std::sqrt(5.0)) / 2.0;
  CHECK(to_double(br->lo) < golden);
  CHECK(to_double(br->hi) >= golden);
  CHECK(to_double(br->hi - br->lo) <= 1.0 / (1 << 20));

  const auto exact = bracket_largest_root(from_roots({2, -1}), Rational(0), Rational(10), Rational(1, 64));
  REQUIRE(exact.has_value());
  CHECK(to_double(exact->lo) < 2.0);
  CHECK(to_double(exact->hi) >= 2.0);

  // Upper end sitting exactly on the largest root.
  const auto on_root = bracket_largest_root(from_roots({2, 2, -1}), Rational(0), Rational(2), Rational(1, 64));
  REQUIRE(on_root.has_value());
  CHECK(on_root->exact);
  CHECK(on_root->hi == Rational(2));

  CHECK_FALSE(bracket_largest_root(from_roots({-3}), Rational(0), Rational(10), Rational(1, 64)).has_value());

  for (int trial = 0; trial < 20; ++trial) {
    const auto q = from_roots({1, 4, 7});
    auto b = *bracket_largest_root(q, Rational(5), Rational(100), Rational(1, 2));
    const SturmSequence s(q);
    for (int k = 0; k < 10; ++k) b = refine(q, s, b);
    CHECK(to_double(b.lo) < 7.0);
    CHECK(to_double(b.hi) >= 7.0);
  }
}

TEST_CASE("primitive keeps signs") {
  const auto p = poly({-6, 0, 4});
  CHECK(p.primitive() == poly({-3, 0, 2}));
  CHECK(poly({6, -4}).primitive() == poly({3, -2}));
  CHECK(p.sign_at_infinity() == 1);
  CHECK(poly({1, -1}).sign_at_infinity() == -1);
  CHECK(p.sign_at(Rational(0)) == -1);
}
