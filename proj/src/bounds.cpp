#include "spectree/bounds.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "spectree/charpoly.hpp"
#include "spectree/sturm.hpp"

namespace spectree {

namespace {

void require_k(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::out_of_range("bound: need 1 <= k <= n, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
}

// Compares every S_k against bound(k). Near-boundary cases are decided on
// the exact charpoly, built lazily.
template <class BoundFn, class CharpolyFn>
std::vector<BoundReport> compare_all(const Spectrum& sp, bool strict, BoundFn bound, CharpolyFn charpoly) {
  std::vector<BoundReport> out;
  std::optional<IntPolynomial> exact;
  double running = 0.0;
  for (int k = 1; k <= sp.n; ++k) {
    running += sp.values[k - 1];
    BoundReport r;
    r.k = k;
    r.s_k = running;
    r.bound = bound(k);
    r.margin = r.bound.get_d() - running;
    r.holds = running <= r.bound.get_d() + kBoundTolerance;
    if (std::abs(r.margin) < kNearBoundary) {
      if (!exact) exact = charpoly();
      // cmp == 0 is exact equality or a bracket narrower than 1e-12 that
      // still straddles the bound; the strict checks count it as a failure.
      const int cmp = compare_sum_of_largest_roots(*exact, k, r.bound, make_rational(1, 1000000000000L));
      r.exact_checked = true;
      r.holds = strict ? cmp < 0 : cmp <= 0;
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace

Rational bound_old(int n, int k) {
  require_k(n, k);
  return Rational(n - 2 + 2 * k) - make_rational(2L * k - 2, n);
}

Rational bound_new(int n, int k) {
  require_k(n, k);
  return Rational(n - 2 + 2 * k) - make_rational(2L * k, n);
}

Rational bound_brouwer(int e, int k) {
  if (k < 1) throw std::out_of_range("bound_brouwer: k must be positive");
  return Rational(e + static_cast<long>(k) * (k + 1) / 2);
}

Rational bound_cyclic(int n, int e, int k) {
  require_k(n, k);
  return Rational(2L * e - n + 2L * k) - make_rational(2L * k, n);
}

std::vector<BoundReport> check_teo1(const Tree& t) { return check_teo1(t, spectrum(t)); }

std::vector<BoundReport> check_teo1(const Tree& t, const Spectrum& sp) {
  const int n = t.order();
  if (n < 6) throw BoundNotApplicable("check_teo1: needs n >= 6, got " + std::to_string(n));
  const int d = diameter(t);
  if (d < 4) throw BoundNotApplicable("check_teo1: needs diameter >= 4, got " + std::to_string(d));
  return compare_all(
      sp, true, [n](int k) { return bound_new(n, k); }, [&t] { return tree_charpoly(t); });
}

std::vector<BoundReport> check_old_bound(const Tree& t, const Spectrum& sp) {
  const int n = t.order();
  return compare_all(
      sp, false, [n](int k) { return bound_old(n, k); }, [&t] { return tree_charpoly(t); });
}

std::vector<BoundReport> brouwer_check(const Graph& g) { return brouwer_check(g, spectrum(g)); }

std::vector<BoundReport> brouwer_check(const Graph& g, const Spectrum& sp) {
  const int e = g.size();
  return compare_all(
      sp, false, [e](int k) { return bound_brouwer(e, k); }, [&g] { return graph_charpoly(g); });
}

std::vector<BoundReport> check_cyclic(const Graph& g) { return check_cyclic(g, spectrum(g)); }

std::vector<BoundReport> check_cyclic(const Graph& g, const Spectrum& sp) {
  const int n = g.order();
  if (n < 6) throw BoundNotApplicable("check_cyclic: needs n >= 6, got " + std::to_string(n));
  auto d = graph_diameter(g);
  if (!d) throw BoundNotApplicable("check_cyclic: graph is disconnected");
  if (*d < 4) throw BoundNotApplicable("check_cyclic: needs diameter >= 4, got " + std::to_string(*d));
  const int e = g.size();
  return compare_all(
      sp, true, [n, e](int k) { return bound_cyclic(n, e, k); }, [&g] { return graph_charpoly(g); });
}

bool all_hold(const std::vector<BoundReport>& reports) {
  for (const auto& r : reports)
    if (!r.holds) return false;
  return true;
}

namespace {

Threshold threshold(long n, long e, long linear) {
  if (n < 1) throw std::out_of_range("k_threshold: n must be positive");
  const BigInt N = n, E = e;
  Threshold t;
  t.radicand = 9 * N * N + linear * N + 16 + 8 * E * N * N - 8 * N * N * N;
  if (t.radicand < 0) throw std::domain_error("k_threshold: negative discriminant");
  // value >= m  <=>  2nm - 3n + 4 <= sqrt(D)
  auto at_most_root = [&](const BigInt& m) {
    BigInt c = 2 * N * m - 3 * N + 4;
    return c <= 0 || c * c <= t.radicand;
  };
  auto at_least_root = [&](const BigInt& m) {
    BigInt c = 2 * N * m - 3 * N + 4;
    return c >= 0 && c * c >= t.radicand;
  };
  const BigInt r = isqrt(t.radicand);
  BigInt guess;
  mpz_fdiv_q(guess.get_mpz_t(), BigInt(3 * N - 4 + r).get_mpz_t(), BigInt(2 * N).get_mpz_t());
  t.floor = guess;
  while (at_most_root(t.floor + 1)) ++t.floor;
  while (!at_most_root(t.floor)) --t.floor;
  t.ceil = t.floor;
  while (!at_least_root(t.ceil)) ++t.ceil;
  t.value = (3.0 * n - 4.0 + std::sqrt(t.radicand.get_d())) / (2.0 * n);
  return t;
}

}  // namespace

Threshold k_threshold_new(long n, long e) { return threshold(n, e, -24); }
Threshold k_threshold_old(long n, long e) { return threshold(n, e, -8); }

long f_of_n(long n) {
  if (n < 6) throw std::out_of_range("f_of_n: n must be at least 6");
  if (n % 2 == 0) return 1 + isqrt(n - 3);
  const long r = isqrt(4 * (n - 3));
  const long s = isqrt(4 * (n - 3) + 1);
  // n = p^2 - p + 3 iff 4(n-3) + 1 = (2p-1)^2.
  if (s * s == 4 * (n - 3) + 1) return (3 + r) / 2;
  return (1 + r) / 2;
}

long max_k_exact(long n) {
  if (n < 6) throw std::out_of_range("max_k_exact: n must be at least 6");
  const Rational x = make_rational(4, n);
  const long half_up = (n - 1) / 2;  // ceil((n-2)/2)
  const long half_down = (n - 2) / 2;
  long best = -1;
  for (long k = 0; half_down - k >= 1; ++k) {
    const long a = half_up + k, b = half_down - k;
    if (factors::p_ab(a, b).eval_sign(x) >= 0) best = k;
  }
  return best;
}

Rational le_cap_diam4(long n) {
  if (n < 6) throw std::out_of_range("le_cap_diam4: n must be at least 6");
  return Rational(2 * n - 4);
}

bool floor_identity_check(long n) {
  if (n < 6 || n % 2 != 0) throw std::out_of_range("floor_identity_check: n must be even and at least 6");
  const BigInt N = n;
  const Rational radicand = make_rational(BigInt(N * N * N - 2 * N * N - 8 * N + 16), BigInt(N * N));
  BigInt m = isqrt(floor(radicand));
  // Confirm m = floor(sqrt(radicand)) directly against the rational.
  if (!(Rational(m * m) <= radicand && radicand < Rational((m + 1) * (m + 1))))
    throw std::logic_error("floor_identity_check: integer square root bracketing failed");
  return m == isqrt(BigInt(n - 3));
}

}  // namespace spectree
