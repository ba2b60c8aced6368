#pragma once

#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spectree/graph.hpp"

namespace spectree {

class EnumerationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultEnumCap = 16;

/// Enumeration cap: SPECTREE_ENUM_CAP if set to a positive integer, else 16.
int enum_cap();

/// AHU parenthesis encoding rooted at the centroid; with two centroids the
/// lexicographically smaller of the two rooted encodings. Equal encodings
/// iff isomorphic trees.
std::string canonical_encoding(const Tree& t);

/// Inverse of canonical_encoding up to isomorphism: vertices numbered in
/// preorder of the parenthesis string, root 0.
Tree tree_from_encoding(std::string_view encoding);

/// One representative per isomorphism class of n-vertex trees, sorted by
/// canonical encoding; each representative is tree_from_encoding(encoding).
std::vector<Tree> enumerate_free_trees(int n);
std::vector<Tree> enumerate_free_trees(int n, int cap);

Tree prufer_decode(std::span<const int> sequence);
/// Uniform random labeled tree via a random Prüfer sequence.
Tree random_tree(int n, std::mt19937_64& rng);

}  // namespace spectree
