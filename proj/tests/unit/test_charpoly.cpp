#include <doctest.h>

#include <random>

#include "oracle/det_charpoly.hpp"
#include "spectree/charpoly.hpp"
#include "spectree/enumerate.hpp"
#include "spectree/locator.hpp"
#include "spectree/sturm.hpp"

using namespace spectree;

namespace {
IntPolynomial oracle_charpoly(const Graph& g) {
  return IntPolynomial(oracle::charpoly_by_interpolation(g.order(), g.edges()));
}

void check_closed_form(const FamilySpec& spec) {
  CAPTURE(to_string(spec));
  const FactoredCharpoly f = closed_form(spec);
  CHECK(f.degree() == vertex_count(spec));
  CHECK(f.expand() == tree_charpoly(generate(spec)));
}
}  // namespace

TEST_CASE("tree_charpoly examples") {
  const IntPolynomial x = IntPolynomial::x(), one = IntPolynomial::linear(1);
  CHECK(tree_charpoly(generate(Star{4})) == x * pow(one, 2) * IntPolynomial::linear(4));
  CHECK(tree_charpoly(generate(Diam3{2, 2})) == IntPolynomial{-6, 17, -8, 1} * pow(one, 2) * x);
  const IntPolynomial q1{-16, 49, -14, 1};
  CHECK(tree_charpoly(generate(make_fcounter(16))) == q1 * IntPolynomial{1, -6, 1} * pow(one, 10) * x);
  CHECK(tree_charpoly(generate(Path{1})) == x);
  CHECK(tree_charpoly(generate(Path{2})) == IntPolynomial{0, -2, 1});
}

TEST_CASE("tree and graph charpolys agree with the determinant oracle") {
  for (int n = 1; n <= 9; ++n)
    for (const Tree& t : enumerate_free_trees(n)) {
      const IntPolynomial ref = oracle_charpoly(t);
      CHECK(tree_charpoly(t) == ref);
      CHECK(graph_charpoly(t) == ref);
    }
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 12);
    const Tree t = random_tree(n, rng);
    std::vector<Edge> extra;
    for (int u = 0; u < n && extra.size() < 3; ++u)
      for (int v = u + 2; v < n && extra.size() < 3; v += 3)
        if (!t.graph().has_edge(u, v) && rng() % 3 == 0) extra.emplace_back(u, v);
    const Graph g = add_edges(t, extra);
    CHECK(graph_charpoly(g) == oracle_charpoly(g));
    for (Vertex r : {0, n - 1}) CHECK(tree_charpoly(root_bottom_up(t, r)) == oracle_charpoly(t));
  }
}

TEST_CASE("Kirchhoff: the linear coefficient counts one spanning tree") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 60);
    const IntPolynomial p = tree_charpoly(random_tree(n, rng));
    CHECK(p.degree() == n);
    CHECK(p.leading() == 1);
    CHECK(p.coeff(0) == 0);
    CHECK(abs(p.coeff(1)) == n);
  }
}

TEST_CASE("closed forms expand to the algorithmic charpoly") {
  for (int n = 1; n <= 10; ++n) check_closed_form(Star{n});
  for (int a = 1; a <= 12; ++a)
    for (int b = 1; b <= a; ++b) check_closed_form(Diam3{a, b});
  for (int p = 0; p <= 6; ++p)
    for (int a = 1; a <= 6; ++a)
      for (int b = a; b <= 6; ++b) check_closed_form(FTree{p, {a, b}, {}});
  for (int r = 3; r <= 6; ++r)
    for (int a = 2; a <= 6; ++a)
      for (int b = 2; b <= a; ++b) {
        std::vector<int> s(r - 2, 1);
        s.push_back(b);
        s.push_back(a);
        check_closed_form(FTree{0, s, {}});
      }
  for (int r = 3; r <= 6; ++r)
    for (int s = 2; s <= 8; ++s) {
      std::vector<int> ss(r - 1, 1);
      ss.push_back(s);
      check_closed_form(FTree{0, ss, {}});
    }
  for (int r = 3; r <= 10; ++r) check_closed_form(FTree{0, std::vector<int>(r, 1), {}});
  for (int s = 1; s <= 6; ++s)
    for (int t = 1; t <= 6; ++t)
      for (int p = 0; p <= 6; ++p)
        if (s + t + p >= 3) check_closed_form(FTree{p, {s}, {t}});
  for (int n = 6; n <= 40; ++n) check_closed_form(make_fcounter(n, true));
}

TEST_CASE("closed form examples and regimes") {
  const FactoredCharpoly d = closed_form(Diam3{5, 3});
  CHECK(d.regime == Regime::Diam3);
  REQUIRE(d.factors.size() == 3);
  CHECK(d.factors[0].first == factors::p_ab(5, 3));
  CHECK(d.factors[1].second == 6);

  const FactoredCharpoly f18 = closed_form(make_fcounter(18));
  CHECK(f18.regime == Regime::FCounter);
  REQUIRE(f18.factors.size() == 5);
  CHECK(f18.factors[0].first == IntPolynomial{3, -9, 1});
  CHECK(f18.factors[1].first == IntPolynomial::linear(6));
  CHECK(f18.factors[2].first == IntPolynomial{1, -7, 1});
  CHECK(f18.factors[3] == std::pair{IntPolynomial::linear(1), 12});
  CHECK(f18.factors[4].first == IntPolynomial::x());

  CHECK(closed_form(FTree{1, {2, 3}, {}}).factors[0].first == factors::q_pab(1, 3, 2));
  CHECK(closed_form(FTree{1, {2, 3}, {}}).factors[0].first.degree() == 5);
  CHECK(closed_form(FTree{0, {2, 3}, {}}).regime == Regime::TwoBranches);
  CHECK(closed_form(FTree{0, {1, 2, 3}, {}}).regime == Regime::TwoLargeBranches);
  CHECK(closed_form(FTree{0, {1, 1, 3}, {}}).regime == Regime::OneLargeBranch);
  CHECK(closed_form(FTree{0, {1, 1, 1}, {}}).regime == Regime::NoLargeBranch);
  CHECK(closed_form(FTree{0, {1}, {2}}).regime == Regime::MixedBranches);

  CHECK_THROWS_AS(closed_form(FTree{0, {2, 2, 2}, {}}), CharpolyError);
  CHECK_THROWS_AS(closed_form(FTree{1, {1, 1, 1}, {}}), CharpolyError);
  CHECK_THROWS_AS(closed_form(FTree{0, {}, {1, 1}}), CharpolyError);
  CHECK_THROWS_AS(closed_form(FTree{0, {1}, {1}}), CharpolyError);
  CHECK_THROWS_AS(closed_form(Path{6}), CharpolyError);
  CHECK_THROWS_AS(closed_form(FCounter{20, 5, false}), CharpolyError);
  CHECK_THROWS_AS(closed_form(Diam3{1, 2}), SpecError);
}

TEST_CASE("factored text round trip") {
  const FactoredCharpoly f = closed_form(Diam3{2, 2});
  CHECK(to_string(f) == "(-6,17,-8,1)^1 * (-1,1)^2 * (0,1)^1");
  const auto parsed = parse_factored(to_string(f));
  CHECK(parsed == f.factors);
  CHECK_THROWS(parse_factored("(1,2"));
  CHECK_THROWS(parse_factored("(1,2)^x"));
}

TEST_CASE("exact sign evaluations") {
  // p_{a,b}(4/n) for n = 42 with a = 20 + k, b = 20 - k
  CHECK(factors::p_ab(26, 14).eval_sign(Rational(4, 42)) == 1);
  CHECK(factors::p_ab(27, 13).eval_sign(Rational(4, 42)) == -1);
  // matches 4(n^3 - k^2 n^2 - 2n^2 - 8n + 16)/n^3 for every even n and k
  for (long n = 6; n <= 60; n += 2)
    for (long k = 0; k < n / 2 - 1; ++k) {
      const Rational v = factors::p_ab(n / 2 - 1 + k, n / 2 - 1 - k).eval(make_rational(4, n));
      CHECK(v == make_rational(4 * (n * n * n - k * k * n * n - 2 * n * n - 8 * n + 16), n * n * n));
    }
  for (long a = 2; a <= 8; ++a)
    for (long b = 2; b <= a; ++b)
      for (long r = 4; r <= 9; ++r) CHECK(factors::p_abr(a, b, r).eval_sign(Rational(9, 5)) == 1);
  for (long s = 2; s <= 10; ++s)
    for (long r = 3; r <= 9; ++r) CHECK(factors::p_sr(s, r).eval_sign(Rational(33, 20)) == -1);
}

TEST_CASE("Sturm counts above the average degree match the locator") {
  for (int n = 3; n <= 10; ++n)
    for (const Tree& t : enumerate_free_trees(n)) {
      const Rational dbar = make_rational(2 * n - 2, n);
      CHECK(count_with_multiplicity(tree_charpoly(t), dbar) == count_above_average(t));
    }
}

TEST_CASE("degree cap") {
  CHECK_THROWS_AS(tree_charpoly(generate(Path{20}), 10), CharpolyError);
  CHECK_THROWS_AS(graph_charpoly(generate(Path{20}), 10), CharpolyError);
  CHECK_NOTHROW(tree_charpoly(generate(Path{20}), 20));
}
