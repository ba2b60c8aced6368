#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle/jacobi.hpp"
#include "spectree/enumerate.hpp"
#include "spectree/family.hpp"
#include "spectree/spectra.hpp"

using namespace spectree;

namespace {
Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}
}  // namespace

TEST_CASE("laplacian matrix examples") {
  const Matrix<int> p2 = laplacian(generate(Path{2}));
  CHECK(p2(0, 0) == 1);
  CHECK(p2(0, 1) == -1);
  CHECK(p2(1, 1) == 1);

  const Matrix<int> s3 = laplacian(generate(Star{3}));
  CHECK(s3(0, 0) == 2);
  CHECK(s3(1, 1) == 1);
  CHECK(s3(0, 2) == -1);
  CHECK(s3(1, 2) == 0);

  const Matrix<int> c4 = laplacian(cycle(4));
  CHECK(c4.symmetric());
  for (int i = 0; i < 4; ++i) {
    CHECK(c4(i, i) == 2);
    CHECK(c4(i, (i + 1) % 4) == -1);
    CHECK(c4(i, (i + 2) % 4) == 0);
    int row = 0;
    for (int j = 0; j < 4; ++j) row += c4(i, j);
    CHECK(row == 0);
  }
}

TEST_CASE("spectrum examples") {
  const Spectrum s5 = spectrum(generate(Star{5}));
  const double star[] = {5, 1, 1, 1, 0};
  for (int i = 0; i < 5; ++i) CHECK(s5[i] == doctest::Approx(star[i]));

  const Spectrum p3 = spectrum(generate(Path{3}));
  CHECK(p3[0] == doctest::Approx(3));
  CHECK(p3[1] == doctest::Approx(1));
  CHECK(std::abs(p3[2]) < 1e-12);

  const Spectrum p5 = spectrum(generate(Path{5}));
  for (int j = 0; j < 5; ++j) CHECK(p5[j] == doctest::Approx(2 - 2 * std::cos((4 - j) * std::numbers::pi / 5)));
  CHECK(std::abs(p5.smallest()) < 1e-12);
}

TEST_CASE("s_k and average degree") {
  const Spectrum p5 = spectrum(generate(Path{5}));
  const double s2 = s_k(p5, 2);
  CHECK(s2 == doctest::Approx(4 + 2 * (std::cos(std::numbers::pi / 5) + std::cos(2 * std::numbers::pi / 5))));
  CHECK(s2 > 31.0 / 5);
  CHECK(s2 < 25.0 / 4);
  for (int n : {3, 9, 30}) CHECK(s_k(spectrum(generate(Star{n})), 1) == doctest::Approx(n));
  const Tree t = generate(FTree{1, {2, 3}, {1}});
  CHECK(s_k(spectrum(t), t.order()) == doctest::Approx(2.0 * (t.order() - 1)));
  CHECK_THROWS_AS(s_k(p5, 0), std::out_of_range);
  CHECK_THROWS_AS(s_k(p5, 6), std::out_of_range);

  CHECK(average_degree(generate(Path{6})) == Rational(5, 3));
  CHECK(average_degree(cycle(4)) == 2);
  CHECK(average_degree(generate(Star{42})) == Rational(41, 21));
}

TEST_CASE("sigma examples") {
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= a; ++b) CHECK(sigma(generate(Diam3{a, b})) == 2);
  for (int n = 3; n <= 20; ++n) CHECK(sigma(generate(Star{n})) == 1);
  CHECK(sigma(generate(make_fcounter(16))) == 3);
  CHECK_THROWS_AS(sigma(generate(Path{2})), std::invalid_argument);
}

TEST_CASE("laplacian energy examples") {
  const EnergyReport s42 = laplacian_energy(generate(Star{42}));
  CHECK(std::trunc(s42.le * 1e4) / 1e4 == doctest::Approx(80.0952));
  CHECK(s42.sigma == 1);
  CHECK(s42.sigma_exact);
  const EnergyReport t2020 = laplacian_energy(generate(Diam3{20, 20}));
  CHECK(std::abs(t2020.le - 80.0159) < 1.01e-4);
  CHECK(t2020.sigma == 2);
  const EnergyReport p2 = laplacian_energy(generate(Path{2}));
  CHECK(p2.le == doctest::Approx(2));
  CHECK(p2.dbar == 1);

  const EnergyReport c5 = laplacian_energy(cycle(5));
  CHECK_FALSE(c5.sigma_exact);
  CHECK(c5.le == doctest::Approx(c5.reconstructed()));
}

TEST_CASE("eigensolver matches the Jacobi oracle on trees and cyclic graphs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 40);
    Tree t = random_tree(n, rng);
    std::vector<Edge> extra;
    if (n >= 4) {
      for (int tries = 0; tries < 20 && extra.size() < 2; ++tries) {
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u != v && !t.graph().has_edge(u, v) &&
            std::find(extra.begin(), extra.end(), Edge{std::min(u, v), std::max(u, v)}) == extra.end())
          extra.emplace_back(std::min(u, v), std::max(u, v));
      }
    }
    const Graph g = add_edges(t, extra);
    const Spectrum sp = spectrum(g);
    const auto ref = oracle::jacobi_eigenvalues(oracle::laplacian(n, g.edges()));
    for (int i = 0; i < n; ++i) CHECK(std::abs(sp[i] - std::max(ref[i], 0.0)) < 1e-9);
  }
}

TEST_CASE("spectrum invariants over enumerated trees") {
  for (int n = 3; n <= 12; ++n) {
    for (const Tree& t : enumerate_free_trees(n)) {
      const Spectrum sp = spectrum(t);
      double total = 0;
      for (double x : sp.values) total += x;
      CHECK(std::abs(total - 2.0 * (n - 1)) < 1e-8);
      CHECK(sp[n - 2] > 1e-9);
      const EnergyReport er = laplacian_energy(t, sp);
      CHECK(std::abs(er.le - er.reconstructed()) < 1e-8);
      if (t.max_degree() != n - 1) CHECK(sp.largest() < n - 0.5);

      // removing any edge disconnects; the second-smallest value drops to zero
      const Graph cut = remove_edge(t, t.edges().front());
      const Spectrum cs = spectrum(cut);
      CHECK(std::abs(cs[n - 2]) < 1e-9);
    }
  }
}

TEST_CASE("edge addition interlacing and the Wielandt consequence") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 57);
    const Tree t = random_tree(n, rng);
    const Spectrum full = spectrum(t);
    for (const Edge& e : t.edges()) {
      const Spectrum minus = spectrum(remove_edge(t, e));
      for (int i = 0; i < n; ++i) CHECK(full[i] >= minus[i] - 1e-9);
      if (t.degree(e.first) < 2 || t.degree(e.second) < 2) continue;
      for (int k = 1; k <= n; ++k) CHECK(s_k(full, k) <= s_k(minus, k) + 2 + 1e-9);
    }
  }
}
