#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "spectree/family.hpp"
#include "spectree/linalg.hpp"

namespace spectree {

/// Layout of the block matrix M for an FTree: optional pendant scalar,
/// T-blocks by ascending s, Q-blocks by ascending t, border vertex last.
struct BlockSystem {
  int p = 0;
  std::vector<int> s;  // ascending
  std::vector<int> t;  // ascending
  int delta = 0;       // r1 + r2 + p

  static BlockSystem from(const FTree& spec);
  int order() const;
};

RealMatrix build_M(const FTree& spec);

struct ABSplit {
  RealMatrix A;  // block diagonal part
  RealMatrix B;  // border coupling
};
ABSplit split_AB(const FTree& spec);

struct TBlockEigs {
  double x1 = 0.0;
  double x2 = 0.0;
};

struct QBlockEigs {
  double y1 = 0.0;
  double y2 = 0.0;
  double y3 = 0.0;
};

/// Raised when block eigenvalues leave their proven intervals.
class BlockBoundError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Eigenvalues of [[1, sqrt s], [sqrt s, s+1]], checked against their bounds.
TBlockEigs block_eigs_T(int s);
/// Eigenvalues of [[1, sqrt t, 0], [sqrt t, t+1, 1], [0, 1, 2]], checked
/// against their bounds.
QBlockEigs block_eigs_Q(int t);

struct RojoReport {
  bool ok = false;
  int order_M = 0;
  int padding = 0;  // eigenvalues equal to 1 not carried by M
  double max_deviation = 0.0;
  std::vector<double> m_eigs;     // descending
  std::vector<double> tree_eigs;  // descending
};

/// Compares spec(M) plus padding ones with the tree's Laplacian spectrum.
RojoReport verify_rojo(const FTree& spec, double tol);

/// S_{k+1}(A): the upper bound for S_k of the tree, valid for k <= sigma.
double block_upper_bound(const FTree& spec, int k);

/// Exact check of sum 1/(a_i + 2) >= r^2 / (c + 2r) with c = sum a_i.
bool reciprocal_sum_inequality(std::span<const int> a);

}  // namespace spectree
