#include <doctest.h>

#include <cmath>
#include <random>

#include "spectree/charpoly.hpp"
#include "spectree/family.hpp"
#include "spectree/spectra.hpp"
#include "spectree/sturm.hpp"

using namespace spectree;

namespace {
IntPolynomial from_roots(std::initializer_list<long> roots) {
  IntPolynomial p{1};
  for (long r : roots) p *= IntPolynomial::linear(r);
  return p;
}
}  // namespace

TEST_CASE("sturm_count examples") {
  const IntPolynomial golden = factors::golden();
  CHECK(sturm_count(golden, Rational(0), Rational(1)).count == 1);
  CHECK(sturm_count(golden, Rational(0)).count == 2);

  const IntPolynomial p22{-6, 17, -8, 1};
  CHECK(p22 == factors::p_ab(2, 2));
  CHECK(sturm_count(p22, Rational(0), Rational(5, 3)).count == 1);
  CHECK(sturm_count(p22, Rational(5, 3)).count == 2);
}

TEST_CASE("the smallest root of p_{13,1} exceeds (3 - sqrt5)/2 + 0.4/16") {
  const IntPolynomial p = factors::p_ab(13, 1);
  const auto roots = isolate_roots(p, Rational(1, 1000000));
  REQUIRE(roots.size() == 3);
  // lo >= l  <=>  3/2 + 1/40 - lo <= sqrt5/2
  const Rational gap = Rational(3, 2) + Rational(1, 40) - roots[0].lo;
  CHECK((gap <= 0 || gap * gap <= Rational(5, 4)));
}

TEST_CASE("endpoints that are roots are deflated and flagged") {
  const IntPolynomial p = from_roots({0, 1, 4});
  const SturmCount open = sturm_count(p, Rational(0), Rational(4));
  CHECK(open.count == 1);
  CHECK(open.lo_is_root);
  CHECK(open.hi_is_root);
  const SturmCount half = sturm_count(p, Rational(1, 2));
  CHECK(half.count == 2);
  CHECK_FALSE(half.lo_is_root);
  CHECK_THROWS_AS(sturm_count(p, Rational(2), Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(sturm_count(p, Rational(2), Rational(2)), std::invalid_argument);
}

TEST_CASE("Sturm sequence variations at infinity count all real roots") {
  const IntPolynomial p = from_roots({-3, -1, 2, 5}) * IntPolynomial{1, 0, 1};
  const SturmSequence seq(p);
  CHECK(seq.variations_at_neg_inf() - seq.variations_at_pos_inf() == 4);
  CHECK(seq.variations(Rational(0)) - seq.variations_at_pos_inf() == 2);
  CHECK_THROWS_AS(SturmSequence(IntPolynomial{}), std::domain_error);
}

TEST_CASE("squarefree decomposition") {
  const IntPolynomial p = pow(IntPolynomial::linear(1), 3) * pow(IntPolynomial::linear(2), 2) *
                          IntPolynomial::linear(5) * IntPolynomial{1, 0, 1} * BigInt(-3);
  const auto parts = squarefree_decomposition(p);
  IntPolynomial rebuilt{1};
  for (const auto& f : parts) {
    CHECK(f.factor.leading() > 0);
    CHECK(f.factor.degree() >= 1);
    rebuilt *= pow(f.factor, f.multiplicity);
  }
  CHECK(rebuilt * BigInt(-3) == p);
  CHECK(squarefree_part(p) == from_roots({1, 2, 5}) * IntPolynomial{1, 0, 1});
  CHECK(count_with_multiplicity(p, Rational(0)) == 6);
  CHECK(count_with_multiplicity(p, Rational(3, 2), Rational(6)) == 3);
  CHECK(count_with_multiplicity(p, Rational(1)) == 3);
}

TEST_CASE("isolate_roots examples") {
  const auto g = isolate_roots(factors::golden(), Rational(1, 1000));
  REQUIRE(g.size() == 2);
  CHECK(g[0].midpoint() == doctest::Approx((3 - std::sqrt(5.0)) / 2).epsilon(1e-3));
  CHECK(g[1].midpoint() == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-3));
  for (const auto& r : g) CHECK(r.hi - r.lo <= Rational(1, 1000));

  const auto p22 = isolate_roots(factors::p_ab(2, 2), Rational(1, 1000000));
  REQUIRE(p22.size() == 3);
  // (x - 3)(x^2 - 5x + 2)
  CHECK(p22[1].lo <= 3);
  CHECK(p22[1].hi >= 3);
  CHECK(std::abs(p22[1].midpoint() + p22[2].midpoint() - (8 - p22[0].midpoint())) < 3e-6);

  const IntPolynomial q1 = factors::fcounter_cubic(16);
  CHECK(q1 == IntPolynomial{-16, 49, -14, 1});
  const auto r1 = isolate_roots(q1, Rational(1, 1000000));
  REQUIRE(r1.size() == 3);
  CHECK(r1[0].lo > 0);
  const Spectrum sp = spectrum(generate(make_fcounter(16)));
  for (const auto& r : r1) {
    bool seen = false;
    for (double mu : sp.values) seen = seen || std::abs(mu - r.midpoint()) < 1e-6 + 1e-9;
    CHECK(seen);
  }
  CHECK_THROWS_AS(isolate_roots(q1, Rational(0)), std::invalid_argument);
}

TEST_CASE("isolating intervals are disjoint, exclude roots at endpoints and match numeric roots") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<long> roots;
    IntPolynomial p{1};
    const int deg = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < deg; ++i) {
      const long num = static_cast<long>(rng() % 41) - 20;
      const long den = 1 + static_cast<long>(rng() % 3);
      p *= IntPolynomial{-num, den};
    }
    if (rng() % 2) p *= IntPolynomial{-2, 0, 1};  // two irrational roots
    p = squarefree_part(p);
    const Rational w(1, 4096);
    const auto iv = isolate_roots(p, w);
    CHECK(static_cast<int>(iv.size()) == sturm_count(p, -Rational(root_bound(p))).count +
                                             (p.eval_sign(-Rational(root_bound(p))) == 0 ? 1 : 0));
    for (std::size_t i = 0; i < iv.size(); ++i) {
      CHECK(iv[i].hi - iv[i].lo <= w);
      if (!iv[i].exact()) {
        CHECK(p.eval_sign(iv[i].lo) != 0);
        CHECK(p.eval_sign(iv[i].hi) != 0);
        CHECK(p.eval_sign(iv[i].lo) != p.eval_sign(iv[i].hi));
      } else {
        CHECK(p.eval_sign(iv[i].lo) == 0);
      }
      if (i) CHECK(iv[i - 1].hi < iv[i].lo);
    }
  }
}

TEST_CASE("root bound and multiplicity-aware isolation") {
  const IntPolynomial p = pow(IntPolynomial::linear(3), 2) * IntPolynomial{-2, 0, 1};
  const BigInt b = root_bound(p);
  CHECK(b > 3);
  const auto roots = isolate_roots_with_multiplicity(p, Rational(1, 1000));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].multiplicity == 1);
  CHECK(roots[1].multiplicity == 1);
  CHECK(roots[2].multiplicity == 2);
  CHECK(roots[2].where.lo <= 3);
  CHECK(roots[2].where.hi >= 3);
  const auto exact = isolate_roots_with_multiplicity(from_roots({0, 0, 2}), Rational(1, 8));
  REQUIRE(exact.size() == 2);
  CHECK(exact[0].where.exact());
  CHECK(exact[0].multiplicity == 2);
}

TEST_CASE("sum of the largest roots") {
  // roots 0, 1, 1, 4 : S_1 = 4, S_2 = 5, S_3 = 6
  const IntPolynomial p = from_roots({0, 1, 1, 4});
  const SumBracket s2 = sum_of_largest_roots(p, 2, Rational(1, 1000));
  CHECK(s2.lo <= 5);
  CHECK(s2.hi >= 5);
  CHECK(compare_sum_of_largest_roots(p, 2, Rational(5)) == 0);
  CHECK(compare_sum_of_largest_roots(p, 3, Rational(5)) == 1);
  CHECK(compare_sum_of_largest_roots(p, 1, Rational(9, 2)) == -1);
  CHECK_THROWS_AS(sum_of_largest_roots(IntPolynomial{1, 0, 1}, 1, Rational(1, 10)), std::domain_error);

  // P5: 31/5 < S_2 < 25/4
  const IntPolynomial p5 = tree_charpoly(generate(Path{5}));
  CHECK(compare_sum_of_largest_roots(p5, 2, Rational(31, 5)) == 1);
  CHECK(compare_sum_of_largest_roots(p5, 2, Rational(25, 4)) == -1);
  const SumBracket b = sum_of_largest_roots(p5, 2, Rational(1, 1000000));
  CHECK(b.hi - b.lo <= Rational(2, 1000000));
  CHECK(b.lo.get_d() == doctest::Approx(4 + 2 * (std::cos(M_PI / 5) + std::cos(2 * M_PI / 5))));
}
