#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spectree/enumerate.hpp"
#include "spectree/family.hpp"
#include "spectree/graph.hpp"

namespace spectree {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CampaignReport {
  std::string campaign;
  Json params = Json::object();
  std::vector<Json> rows;
  std::vector<Check> checks;
  double elapsed_ms = 0.0;

  /// True iff there is at least one check and none failed.
  bool passed() const;
  std::vector<Check> failures() const;
  void check(std::string name, bool ok, std::string detail = {});
  /// Appends rows and checks of another report, prefixing check names.
  void absorb(const CampaignReport& other, const std::string& prefix);
};

struct CampaignOptions {
  int threads = 1;
  int cap = kDefaultEnumCap;

  static CampaignOptions from_environment();
};

struct RankEntry {
  int rank = 0;
  std::string encoding;
  std::optional<std::string> family_label;
  double le = 0.0;
  int diameter = 0;
  bool tie_with_next = false;  // |le - next le| < 1e-9
};

inline constexpr double kTieTolerance = 1e-9;

/// Family name for stars, diameter-3 trees, paths and members of the special family.
std::optional<std::string> family_label(const Tree& t);

/// All n-vertex trees by descending LE; equal LE values (within kTieTolerance)
/// are ordered by canonical encoding and flagged.
std::vector<RankEntry> rank_all(int n, const CampaignOptions& opts = {});

CampaignReport verify_order(int from, int to, const CampaignOptions& opts = {});
CampaignReport verify_counterexample(int n);
CampaignReport table_n42();

/// Which four-decimal reading of value reproduces a published figure.
struct DecimalMatch {
  bool truncated = false;
  bool rounded = false;
  bool any() const { return truncated || rounded; }
};
DecimalMatch match_four_decimals(double value, double published);
std::string describe(const DecimalMatch& m);

/// Bound checks on every n-vertex tree: the strict new bound for diameter
/// >= 4, the old bound and Brouwer's inequality for all trees.
CampaignReport verify_bounds_exhaustive(int n, const CampaignOptions& opts = {});

/// Random labeled trees: bound checks on diameter >= 4 trees and exact
/// locator counts against eigensolver counts.
CampaignReport random_sweep(int n, int trials, std::uint64_t seed, const CampaignOptions& opts = {});

/// Random trees plus extra_edges random edges: Brouwer's inequality always,
/// and the c-cyclic bound whenever the diameter is at least 4.
CampaignReport cyclic_sweep(int n, int trials, int extra_edges, std::uint64_t seed,
                            const CampaignOptions& opts = {});

/// Edge deletion: S_k(T) <= S_k(T - e) + 2 and the component split form.
CampaignReport wielandt_sweep(int n, int trials, std::uint64_t seed, const CampaignOptions& opts = {});

/// Exact locator counts against eigensolver counts on random trees with
/// n <= max_n and random rational thresholds.
CampaignReport locator_agreement(int trials, int max_n, std::uint64_t seed, const CampaignOptions& opts = {});

CampaignReport rojo_campaign(const FTree& spec, double tol);

}  // namespace spectree
