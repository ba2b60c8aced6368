#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectree/family.hpp"
#include "spectree/graph.hpp"
#include "spectree/polynomial.hpp"

namespace spectree {

inline constexpr int kDefaultCharpolyDegreeCap = 1024;

class CharpolyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// det(xI - L) by bottom-up elimination over the rooted tree.
IntPolynomial tree_charpoly(const RootedTree& rt, int degree_cap = kDefaultCharpolyDegreeCap);
IntPolynomial tree_charpoly(const Tree& t, int degree_cap = kDefaultCharpolyDegreeCap);

/// det(xI - L) for any graph by the Faddeev-LeVerrier recurrence over Z.
/// O(n^4); meant for the moderate orders the bound checks use.
IntPolynomial graph_charpoly(const Graph& g, int degree_cap = kDefaultCharpolyDegreeCap);

enum class Regime {
  Star,
  Diam3,
  TwoBranchPendants,  // r1 = 2, r2 = 0, p >= 1: quintic q_{p,a,b}
  TwoBranches,        // r1 = 2, r2 = 0, p = 0: quartic q_{a,b}
  TwoLargeBranches,   // r1 >= 3, p = 0, two s_i >= 2: sextic p_{a,b,r}
  OneLargeBranch,     // r1 >= 3, p = 0, one s_i >= 2: quartic p_{s,r}
  NoLargeBranch,      // r1 >= 3, p = 0, all s_i = 1
  MixedBranches,      // r1 = r2 = 1: sextic q_{s,t,p}
  FCounter,
};

std::string to_string(Regime r);

struct FactoredCharpoly {
  std::vector<std::pair<IntPolynomial, int>> factors;
  Regime regime = Regime::Star;

  IntPolynomial expand() const;
  int degree() const;
};

/// "(c0,c1,...)^m * (...)^m"
std::string to_string(const FactoredCharpoly& f);
std::vector<std::pair<IntPolynomial, int>> parse_factored(std::string_view text);

/// Factored Laplacian charpoly for the families with known closed forms.
/// Throws CharpolyError for specs outside the covered regimes.
FactoredCharpoly closed_form(const FamilySpec& spec);

namespace factors {

IntPolynomial p_ab(long a, long b);
IntPolynomial q_pab(long p, long a, long b);
IntPolynomial p_abr(long a, long b, long r);
IntPolynomial q_ab(long a, long b);
IntPolynomial p_sr(long s, long r);
IntPolynomial no_large_quadratic(long r);  // x^2 - (r+3)x + 2r + 1
IntPolynomial q_stp(long s, long t, long p);
IntPolynomial golden();                    // x^2 - 3x + 1
/// Cubic factor q_{n mod 3} of F(n,k), k = floor(n/3).
IntPolynomial fcounter_cubic(long n);
IntPolynomial fcounter_quadratic(long k);  // x^2 - (k+1)x + 1

}  // namespace factors

}  // namespace spectree
