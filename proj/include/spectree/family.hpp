#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spectree/graph.hpp"

namespace spectree {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Star {
  int n = 0;
  friend bool operator==(const Star&, const Star&) = default;
};

/// Diameter-3 tree T(a,b): two adjacent centres carrying a and b leaves, a >= b >= 1.
struct Diam3 {
  int a = 0;
  int b = 0;
  friend bool operator==(const Diam3&, const Diam3&) = default;
};

struct Path {
  int n = 0;
  friend bool operator==(const Path&, const Path&) = default;
};

/// Root v0 with p pendants, height-one branches with s[i] leaves and
/// height-two branches (root of degree one) whose middle vertex has t[j] leaves.
struct FTree {
  int p = 0;
  std::vector<int> s;
  std::vector<int> t;
  friend bool operator==(const FTree&, const FTree&) = default;
  auto operator<=>(const FTree&) const = default;
};

/// F(n,k): centre with n-2k-1 pendants and two neighbours each carrying k-1 pendants.
struct FCounter {
  int n = 0;
  int k = 0;
  bool allow_small = false;  // lifts the n >= 16 requirement
  friend bool operator==(const FCounter&, const FCounter&) = default;
};

using FamilySpec = std::variant<Star, Diam3, Path, FTree, FCounter>;

FCounter make_fcounter(int n, bool allow_small = false);
FTree as_ftree(const FCounter& fc);

/// Throws SpecError if the spec's parameter invariants fail.
void validate(const FamilySpec& spec);
int vertex_count(const FamilySpec& spec);

Tree generate(const FamilySpec& spec);

enum class FClass { F4, F5, F6 };

struct FClassification {
  FTree spec;
  FClass cls = FClass::F4;
};

/// Recognises trees isomorphic to a member of the special family; the
/// returned parameters have sorted s and t lists.
std::optional<FClassification> classify_F(const Tree& t);
FClass f_class(const FTree& spec);

/// Grammar: star:n | t:a,b | path:n | f:p;s1,s2,..;t1,t2,.. | fc:n,k | fc:n
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
std::string to_string(FClass c);
/// Short human label, e.g. "T(20,20)", "S_42", "F(16,5)".
std::string label(const FamilySpec& spec);

}  // namespace spectree
