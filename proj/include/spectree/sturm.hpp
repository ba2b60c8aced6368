#pragma once

#include <optional>
#include <vector>

#include "spectree/polynomial.hpp"
#include "spectree/rational.hpp"

namespace spectree {

/// Sturm sequence of a squarefree polynomial, each term primitive.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& squarefree);
  /// Sign variations at x, zeros dropped.
  int variations(const Rational& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;
  const std::vector<IntPolynomial>& terms() const noexcept { return seq_; }

 private:
  std::vector<IntPolynomial> seq_;
};

struct SturmCount {
  int count = 0;             ///< distinct real roots in the open interval
  bool lo_is_root = false;   ///< the lower endpoint was a root and was deflated
  bool hi_is_root = false;
};

/// Number of distinct real roots of p in (lo, hi); hi = nullopt means +inf.
/// Roots sitting exactly on an endpoint are removed by exact division by the
/// corresponding linear factor and reported through the flags.
SturmCount sturm_count(const IntPolynomial& p, const Rational& lo,
                       const std::optional<Rational>& hi = std::nullopt);

struct SquarefreeFactor {
  IntPolynomial factor;  ///< primitive, squarefree, positive leading coefficient
  int multiplicity = 0;
};

/// Yun decomposition: p = c * prod factor_i^i over the returned entries.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p);
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Real roots of p in (lo, hi), counted with multiplicity.
int count_with_multiplicity(const IntPolynomial& p, const Rational& lo,
                            const std::optional<Rational>& hi = std::nullopt);

/// Closed isolating interval. lo == hi means the root is exactly lo.
/// Otherwise the root is interior and neither endpoint is a root.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
  double midpoint() const { return Rational((lo + hi) / 2).get_d(); }
};

struct IsolatedRoot {
  RootInterval where;
  int multiplicity = 1;
};

/// Integer B with every real root strictly inside (-B, B).
BigInt root_bound(const IntPolynomial& p);

/// Disjoint intervals, ascending, one per distinct real root, each no wider
/// than width.
std::vector<RootInterval> isolate_roots(const IntPolynomial& p, const Rational& width);

/// Real roots with multiplicities, ascending by midpoint. Intervals of roots
/// from different squarefree factors are not guaranteed disjoint.
std::vector<IsolatedRoot> isolate_roots_with_multiplicity(const IntPolynomial& p,
                                                          const Rational& width);

/// Bracket [lo, hi] for the sum of the k largest real roots of p counted with
/// multiplicity. Throws std::domain_error if p has fewer than k real roots.
struct SumBracket {
  Rational lo;
  Rational hi;
};
SumBracket sum_of_largest_roots(const IntPolynomial& p, int k, const Rational& width);

/// Decides sign(S_k - threshold) by refining until the bracket excludes the
/// threshold, or returns 0 when a bracket of width min_width still contains it.
int compare_sum_of_largest_roots(const IntPolynomial& p, int k, const Rational& threshold,
                                 const Rational& min_width = Rational(1, 1000000000));

}  // namespace spectree
