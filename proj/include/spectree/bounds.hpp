#pragma once

#include <stdexcept>
#include <vector>

#include "spectree/graph.hpp"
#include "spectree/rational.hpp"
#include "spectree/spectra.hpp"

namespace spectree {

/// Floating S_k may exceed an exact bound by at most this much.
inline constexpr double kBoundTolerance = 1e-9;
/// Margins below this are re-decided on the exact characteristic polynomial.
inline constexpr double kNearBoundary = 1e-6;

class BoundNotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct BoundReport {
  int k = 0;
  double s_k = 0.0;
  Rational bound;
  bool holds = false;
  double margin = 0.0;         // bound - s_k
  bool exact_checked = false;  // decided by root isolation rather than tolerance
};

Rational bound_old(int n, int k);
Rational bound_new(int n, int k);
/// |E| + k(k+1)/2
Rational bound_brouwer(int e, int k);
/// 2e - n + 2k - 2k/n, the bound for connected graphs with e edges.
Rational bound_cyclic(int n, int e, int k);

/// Strict new bound for every k. Requires n >= 6 and diameter >= 4.
std::vector<BoundReport> check_teo1(const Tree& t);
std::vector<BoundReport> check_teo1(const Tree& t, const Spectrum& sp);
/// Non-strict old bound for every k (any tree).
std::vector<BoundReport> check_old_bound(const Tree& t, const Spectrum& sp);
std::vector<BoundReport> brouwer_check(const Graph& g);
std::vector<BoundReport> brouwer_check(const Graph& g, const Spectrum& sp);
/// Strict cyclic bound for every k. Requires connected, n >= 6, diameter >= 4.
std::vector<BoundReport> check_cyclic(const Graph& g);
std::vector<BoundReport> check_cyclic(const Graph& g, const Spectrum& sp);

bool all_hold(const std::vector<BoundReport>& reports);

/// k0 = (3n - 4 + sqrt(D)) / (2n): Brouwer's inequality holds for k >= k0.
struct Threshold {
  BigInt radicand;  // D
  BigInt floor;
  BigInt ceil;
  double value = 0.0;
};

/// D = 9n^2 - 24n + 16 + 8en^2 - 8n^3
Threshold k_threshold_new(long n, long e);
/// Same with -8n in place of -24n.
Threshold k_threshold_old(long n, long e);

long f_of_n(long n);
/// Largest k >= 0 with p_{a,b}(4/n) >= 0, a = ceil((n-2)/2) + k, b = floor((n-2)/2) - k.
long max_k_exact(long n);
Rational le_cap_diam4(long n);
/// floor(sqrt(n - 2 - 8/n + 16/n^2)) == floor(sqrt(n - 3)) for even n >= 6.
bool floor_identity_check(long n);

}  // namespace spectree
