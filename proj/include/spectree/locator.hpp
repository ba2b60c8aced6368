#pragma once

#include <vector>

#include "spectree/graph.hpp"
#include "spectree/rational.hpp"

namespace spectree {

struct LocationResult {
  int less = 0;
  int equal = 0;
  int greater = 0;
  /// Final a(v) per vertex; empty unless LocatorOptions::keep_trace.
  std::vector<Rational> trace;

  int total() const noexcept { return less + equal + greater; }
};

struct LocatorOptions {
  bool keep_trace = false;
};

/// Counts Laplacian eigenvalues of the tree below, at and above alpha by
/// exact bottom-up elimination of a(v) = d(v) - alpha.
///
/// Each vertex, once its children are processed, subtracts 1/a(c) for every
/// attached child. A child with a(c) = 0 (the first one by vertex id) instead
/// forces a(c) = 2 and a(v) = -1/2, and v is detached from its parent. The
/// sign pattern of the final values gives the three counts.
LocationResult count_relative(const RootedTree& rt, const Rational& alpha, const LocatorOptions& opts = {});
LocationResult count_relative(const Tree& t, const Rational& alpha, const LocatorOptions& opts = {});

/// Number of Laplacian eigenvalues strictly above the average degree 2 - 2/n.
int count_above_average(const Tree& t);

}  // namespace spectree
