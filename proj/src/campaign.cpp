#include "spectree/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "spectree/bounds.hpp"
#include "spectree/locator.hpp"
#include "spectree/spectra.hpp"
#include "spectree/structured.hpp"

namespace spectree {

bool CampaignReport::passed() const {
  if (checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<Check> CampaignReport::failures() const {
  std::vector<Check> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c);
  return out;
}

void CampaignReport::check(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

void CampaignReport::absorb(const CampaignReport& other, const std::string& prefix) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail});
  elapsed_ms += other.elapsed_ms;
}

CampaignOptions CampaignOptions::from_environment() {
  CampaignOptions o;
  o.cap = enum_cap();
  return o;
}

namespace {

// Thresholds this close to a computed eigenvalue are not compared against floating counts.
constexpr double kNearEigenvalue = 1e-6;

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Results land at their input index, so the output order never depends on
// scheduling.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, int threads, F fn) {
  std::vector<R> out(count);
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  const int workers = std::min<int>(threads, static_cast<int>(count));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
        next = count;
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string fmt(double v, int digits = 6) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

std::string inline_edges(const Graph& g) {
  std::string out = std::to_string(g.order()) + ":";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

// Collects up to a few offending examples for a check's detail text.
struct Offenders {
  int count = 0;
  std::vector<std::string> examples;
  void add(const std::string& what) {
    ++count;
    if (examples.size() < 5) examples.push_back(what);
  }
  std::string detail(const std::string& ok_text) const {
    if (count == 0) return ok_text;
    std::string out = std::to_string(count) + " violation(s); e.g.";
    for (const auto& e : examples) out += " [" + e + "]";
    return out;
  }
};

std::string diam3_encoding(int a, int b) { return canonical_encoding(generate(Diam3{a, b})); }

Tree random_tree_checked(int n, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("random trees need n >= 2");
  return random_tree(n, rng);
}

}  // namespace

std::optional<std::string> family_label(const Tree& t) {
  const int n = t.order();
  if (n <= 2) return label(Path{n});
  const int d = diameter(t);
  if (d == 2) return label(Star{n});
  if (d == 3) {
    std::vector<int> centre_leaves;
    for (Vertex v = 0; v < n; ++v)
      if (t.degree(v) >= 2) centre_leaves.push_back(t.degree(v) - 1);
    const int a = std::max(centre_leaves[0], centre_leaves[1]);
    const int b = std::min(centre_leaves[0], centre_leaves[1]);
    return label(Diam3{a, b});
  }
  if (d == n - 1) return label(Path{n});
  if (auto fc = classify_F(t)) {
    if (n >= 6) {
      const FCounter counter{n, n / 3, true};
      if (n - 2 * counter.k - 1 >= 0 && counter.k >= 2 && as_ftree(counter) == fc->spec) return label(counter);
    }
    return label(fc->spec);
  }
  return std::nullopt;
}

std::vector<RankEntry> rank_all(int n, const CampaignOptions& opts) {
  const std::vector<Tree> trees = enumerate_free_trees(n, opts.cap);
  auto entries = parallel_map<RankEntry>(trees.size(), opts.threads, [&](std::size_t i) {
    RankEntry e;
    e.encoding = canonical_encoding(trees[i]);
    e.family_label = family_label(trees[i]);
    e.le = laplacian_energy(trees[i]).le;
    e.diameter = diameter(trees[i]);
    return e;
  });
  std::sort(entries.begin(), entries.end(), [](const RankEntry& a, const RankEntry& b) {
    if (a.le != b.le) return a.le > b.le;
    return a.encoding < b.encoding;
  });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries[i].rank = static_cast<int>(i) + 1;
    if (i + 1 < entries.size()) entries[i].tie_with_next = std::abs(entries[i].le - entries[i + 1].le) < kTieTolerance;
  }
  return entries;
}

CampaignReport verify_order(int from, int to, const CampaignOptions& opts) {
  if (from < 6 || to < from) throw std::invalid_argument("verify_order: need 6 <= from <= to");
  CampaignReport rep;
  const Stopwatch sw;
  rep.campaign = "verify-order";
  rep.params = {{"from", from}, {"to", to}};
  for (int n = from; n <= to; ++n) {
    const auto ranks = rank_all(n, opts);
    const std::string tag = "n=" + std::to_string(n) + " ";
    const long f = f_of_n(n);
    std::map<std::string, double> le_of;
    for (const auto& e : ranks) le_of[e.encoding] = e.le;

    const bool star_first = ranks.front().family_label == label(Star{n});
    rep.check(tag + "star ranks first", star_first, "rank 1: " + ranks.front().encoding);

    const int half_up = (n - 1) / 2, half_down = (n - 2) / 2;
    bool order_ok = static_cast<long>(ranks.size()) > f;
    std::string order_detail;
    Json predicted = Json::array();
    for (long k = 0; k < f && order_ok; ++k) {
      const int a = half_up + static_cast<int>(k), b = half_down - static_cast<int>(k);
      predicted.push_back(label(Diam3{a, b}));
      if (b < 1 || ranks[k + 1].encoding != diam3_encoding(a, b)) {
        order_ok = false;
        order_detail = "rank " + std::to_string(k + 2) + " is " + ranks[k + 1].encoding + " (" +
                       ranks[k + 1].family_label.value_or("?") + "), expected " + label(Diam3{a, b});
      }
    }
    rep.check(tag + "ranks 2..f(n)+1 are the predicted diameter-3 trees", order_ok,
              order_ok ? "f(n)=" + std::to_string(f) : order_detail);

    bool no_ties = true;
    for (long i = 0; i <= f && i < static_cast<long>(ranks.size()); ++i)
      if (ranks[i].tie_with_next) {
        no_ties = false;
        order_detail = "tie at rank " + std::to_string(i + 1) + ": " + ranks[i].encoding;
      }
    rep.check(tag + "no LE ties among the top f(n)+1 ranks", no_ties, no_ties ? "" : order_detail);

    bool decreasing = true;
    std::string dec_detail;
    for (int k = 0; half_down - k - 1 >= 1; ++k) {
      const double here = le_of.at(diam3_encoding(half_up + k, half_down - k));
      const double next = le_of.at(diam3_encoding(half_up + k + 1, half_down - k - 1));
      if (!(here > next)) {
        decreasing = false;
        dec_detail = label(Diam3{half_up + k, half_down - k}) + " <= " + label(Diam3{half_up + k + 1, half_down - k - 1});
      }
    }
    rep.check(tag + "LE strictly decreasing along T(a,b)", decreasing, dec_detail);

    double min_d3 = INFINITY, max_d4 = -INFINITY;
    std::string max_d4_enc;
    for (const auto& e : ranks) {
      if (e.diameter == 3) min_d3 = std::min(min_d3, e.le);
      if (e.diameter >= 4 && e.le > max_d4) {
        max_d4 = e.le;
        max_d4_enc = e.encoding;
      }
    }
    const std::string dom = "min diam-3 LE " + fmt(min_d3) + ", max diam>=4 LE " + fmt(max_d4) + " (" + max_d4_enc + ")";
    if (n <= 15) {
      rep.check(tag + "every diameter-3 tree beats every diameter>=4 tree", min_d3 > max_d4, dom);
    } else {
      const std::string witness = canonical_encoding(generate(make_fcounter(n, true)));
      const bool found = le_of.count(witness) && le_of.at(witness) > le_of.at(diam3_encoding(n - 3, 1));
      rep.check(tag + "diameter-3 dominance fails, witnessed by F(n,floor(n/3))", max_d4 > min_d3 && found, dom);
    }
    Json top = Json::array();
    for (long i = 0; i <= f && i < static_cast<long>(ranks.size()); ++i)
      top.push_back(ranks[i].family_label.value_or(ranks[i].encoding));
    rep.rows.push_back(Json{{"n", n},
                            {"trees", ranks.size()},
                            {"f", f},
                            {"top", top},
                            {"predicted", predicted},
                            {"min_diam3_le", min_d3},
                            {"max_diam4_le", max_d4}});
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

CampaignReport verify_counterexample(int n) {
  if (n < 16) throw std::invalid_argument("verify_counterexample: n must be at least 16");
  CampaignReport rep;
  const Stopwatch sw;
  rep.campaign = "counterexample";
  const FCounter fc = make_fcounter(n);
  rep.params = {{"n", n}, {"k", fc.k}};
  const double le_f = laplacian_energy(generate(fc)).le;
  const double le_t = laplacian_energy(generate(Diam3{n - 3, 1})).le;
  rep.rows.push_back(Json{{"n", n}, {"k", fc.k}, {"le_F", le_f}, {"le_T", le_t}, {"margin", le_f - le_t}});
  rep.check("LE(" + label(fc) + ") > LE(" + label(Diam3{n - 3, 1}) + ")", le_f > le_t,
            fmt(le_f, 4) + " vs " + fmt(le_t, 4) + ", margin " + fmt(le_f - le_t, 6));
  rep.elapsed_ms = sw.ms();
  return rep;
}

DecimalMatch match_four_decimals(double value, double published) {
  const long long target = std::llround(published * 1e4);
  return {static_cast<long long>(std::floor(value * 1e4)) == target, std::llround(value * 1e4) == target};
}

std::string describe(const DecimalMatch& m) {
  if (m.truncated && m.rounded) return "truncated+rounded";
  if (m.truncated) return "truncated";
  if (m.rounded) return "rounded";
  return "none";
}

CampaignReport table_n42() {
  CampaignReport rep;
  const Stopwatch sw;
  rep.campaign = "table-42";
  constexpr int n = 42;
  rep.params = {{"n", n}};
  struct Item {
    int rank;
    FamilySpec spec;
    double published;
  };
  const std::vector<Item> items = {
      {1, Star{n}, 80.0952},         {2, Diam3{20, 20}, 80.0159}, {3, Diam3{21, 19}, 80.0155},
      {4, Diam3{22, 18}, 80.0144},   {5, Diam3{23, 17}, 80.0125}, {6, Diam3{24, 16}, 80.0098},
      {7, Diam3{25, 15}, 80.0062},   {8, Diam3{26, 14}, 80.0016}, {9, Diam3{27, 13}, 79.9959},
  };
  const double cap = le_cap_diam4(n).get_d();
  double prev = INFINITY;
  bool decreasing = true;
  for (const auto& it : items) {
    const double le = laplacian_energy(generate(it.spec)).le;
    const DecimalMatch m = match_four_decimals(le, it.published);
    const bool close = std::abs(le - it.published) < 1.01e-4;
    Json row{{"rank", it.rank}, {"tree", label(it.spec)}};
    if (const auto* d = std::get_if<Diam3>(&it.spec)) row["a_minus_b"] = d->a - d->b;
    row["le"] = le;
    row["published"] = it.published;
    row["match"] = describe(m);
    rep.rows.push_back(row);
    rep.check(label(it.spec) + " LE matches " + fmt(it.published, 4), m.any() && close,
              fmt(le, 6) + " (" + describe(m) + ")");
    if (!(le < prev)) decreasing = false;
    prev = le;
    if (it.rank <= 8)
      rep.check(label(it.spec) + " LE exceeds the diameter>=4 cap " + fmt(cap, 0), le > cap, fmt(le, 6));
    else
      rep.check(label(it.spec) + " LE below the diameter>=4 cap " + fmt(cap, 0), le < cap, fmt(le, 6));
  }
  rep.check("rows strictly decreasing in LE", decreasing);
  rep.check("f(42) = 7 rows after the star", f_of_n(n) == 7, "f(42)=" + std::to_string(f_of_n(n)));
  rep.elapsed_ms = sw.ms();
  return rep;
}

namespace {

struct TreeOutcome {
  bool diam4 = false;
  double teo1_margin = INFINITY;
  double old_margin = INFINITY;
  double brouwer_margin = INFINITY;
  int exact_rechecks = 0;
  std::string teo1_fail, old_fail, brouwer_fail, locator_fail;
};

void fold(const std::vector<BoundReport>& reports, double& margin, std::string& fail, int& rechecks,
          const std::string& who) {
  for (const auto& r : reports) {
    margin = std::min(margin, r.margin);
    if (r.exact_checked) ++rechecks;
    if (!r.holds && fail.empty())
      fail = who + " k=" + std::to_string(r.k) + " S_k=" + fmt(r.s_k, 12) + " bound=" + to_string(r.bound);
  }
}

TreeOutcome check_tree(const Tree& t, bool with_locator) {
  TreeOutcome o;
  const std::string enc = canonical_encoding(t);
  const Spectrum sp = spectrum(t);
  const int n = t.order();
  o.diam4 = n >= 6 && diameter(t) >= 4;
  if (o.diam4) fold(check_teo1(t, sp), o.teo1_margin, o.teo1_fail, o.exact_rechecks, enc);
  fold(check_old_bound(t, sp), o.old_margin, o.old_fail, o.exact_rechecks, enc);
  fold(brouwer_check(t, sp), o.brouwer_margin, o.brouwer_fail, o.exact_rechecks, enc);
  if (with_locator && n >= 3) {
    const Rational dbar = average_degree(t);
    const LocationResult loc = count_relative(t, dbar);
    const double a = dbar.get_d();
    int above = 0;
    bool near = false;
    for (double mu : sp.values) {
      if (std::abs(mu - a) < kNearEigenvalue) near = true;
      if (mu > a) ++above;
    }
    if (loc.equal != 0)
      o.locator_fail = enc + " equal count " + std::to_string(loc.equal) + " at the average degree";
    else if (!near && above != loc.greater)
      o.locator_fail = enc + " exact " + std::to_string(loc.greater) + " vs floating " + std::to_string(above);
  }
  return o;
}

void summarise(CampaignReport& rep, const std::vector<TreeOutcome>& outcomes, Json& row, bool with_locator) {
  Offenders teo1, old, brouwer, locator;
  int diam4 = 0, rechecks = 0;
  double teo1_margin = INFINITY, old_margin = INFINITY, brouwer_margin = INFINITY;
  for (const auto& o : outcomes) {
    diam4 += o.diam4;
    rechecks += o.exact_rechecks;
    teo1_margin = std::min(teo1_margin, o.teo1_margin);
    old_margin = std::min(old_margin, o.old_margin);
    brouwer_margin = std::min(brouwer_margin, o.brouwer_margin);
    if (!o.teo1_fail.empty()) teo1.add(o.teo1_fail);
    if (!o.old_fail.empty()) old.add(o.old_fail);
    if (!o.brouwer_fail.empty()) brouwer.add(o.brouwer_fail);
    if (!o.locator_fail.empty()) locator.add(o.locator_fail);
  }
  row["diam4_trees"] = diam4;
  row["new_bound_min_margin"] = diam4 ? Json(teo1_margin) : Json(nullptr);
  row["old_bound_min_margin"] = old_margin;
  row["brouwer_min_margin"] = brouwer_margin;
  row["exact_rechecks"] = rechecks;
  const std::string n = "n=" + row["n"].dump() + " ";
  rep.check(n + "strict new bound on diameter>=4 trees", teo1.count == 0,
            teo1.detail(std::to_string(diam4) + " trees, min margin " + (diam4 ? fmt(teo1_margin, 9) : "n/a")));
  rep.check(n + "old bound on all trees", old.count == 0, old.detail("min margin " + fmt(old_margin, 9)));
  rep.check(n + "Brouwer inequality on all trees", brouwer.count == 0, brouwer.detail("min margin " + fmt(brouwer_margin, 9)));
  if (with_locator) {
    row["locator_mismatches"] = locator.count;
    rep.check(n + "exact sigma matches eigensolver count", locator.count == 0, locator.detail(""));
  }
}

}  // namespace

CampaignReport verify_bounds_exhaustive(int n, const CampaignOptions& opts) {
  CampaignReport rep;
  const Stopwatch sw;
  rep.campaign = "verify-teo1";
  rep.params = {{"n", n}, {"mode", "exhaustive"}};
  const auto trees = enumerate_free_trees(n, opts.cap);
  const auto outcomes =
      parallel_map<TreeOutcome>(trees.size(), opts.threads, [&](std::size_t i) { return check_tree(trees[i], false); });
  Json row{{"n", n}, {"trees", trees.size()}};
  summarise(rep, outcomes, row, false);
  rep.rows.push_back(row);
  rep.elapsed_ms = sw.ms();
  return rep;
}

CampaignReport random_sweep(int n, int trials, std::uint64_t seed, const CampaignOptions& opts) {
  CampaignReport rep;
  const Stopwatch sw;
  rep.campaign = "verify-teo1";
  rep.params = {{"n", n}, {"mode", "random"}, {"trials", trials}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  std::vector<Tree> trees;
  trees.reserve(trials);
  for (int i = 0; i < trials; ++i) trees.push_back(random_tree_checked(n, rng));
  const auto outcomes =
      parallel_map<TreeOutcome>(trees.size(), opts.threads, [&](std::size_t i) { return check_tree(trees[i], true); });
  Json row{{"n", n}, {"trees", trees.size()}};
  summarise(rep, outcomes, row, true);
  rep.rows.push_back(row);
  rep.elapsed_ms = sw.ms();
  return rep;
}

CampaignReport cyclic_sweep(int n, int trials, int extra_edges, std::uint64_t seed, const CampaignOptions& opts) {
  if (extra_edges < 0 || static_cast<long>(n) * (n - 1) / 2 < n - 1 + extra_edges)
    throw std::invalid_argument("cyclic_sweep: too many extra edges for n");
  CampaignReport rep;
  const Stopwatch sw;
  rep.campaign = "brouwer";
  rep.params = {{"n", n}, {"trials", trials}, {"extra_edges", extra_edges}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  std::vector<Graph> graphs;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < trials; ++i) {
    Graph g = random_tree_checked(n, rng).graph();
    std::vector<Edge> extra;
    while (static_cast<int>(extra.size()) < extra_edges) {
      int u = pick(rng), v = pick(rng);
      if (u == v) continue;
      Edge e{std::min(u, v), std::max(u, v)};
      if (g.has_edge(e.first, e.second) || std::find(extra.begin(), extra.end(), e) != extra.end()) continue;
      extra.push_back(e);
    }
    graphs.push_back(add_edges(g, extra));
  }
  struct Outcome {
    bool applicable = false;
    double cyclic_margin = INFINITY, brouwer_margin = INFINITY;
    std::string cyclic_fail, brouwer_fail;
  };
  const auto outcomes = parallel_map<Outcome>(graphs.size(), opts.threads, [&](std::size_t i) {
    Outcome o;
    const Graph& g = graphs[i];
    const Spectrum sp = spectrum(g);
    int rechecks = 0;
    fold(brouwer_check(g, sp), o.brouwer_margin, o.brouwer_fail, rechecks, inline_edges(g));
    const auto d = graph_diameter(g);
    o.applicable = n >= 6 && d && *d >= 4;
    if (o.applicable) fold(check_cyclic(g, sp), o.cyclic_margin, o.cyclic_fail, rechecks, inline_edges(g));
    return o;
  });
  Offenders cyc, br;
  int applicable = 0;
  double cm = INFINITY, bm = INFINITY;
  for (const auto& o : outcomes) {
    applicable += o.applicable;
    cm = std::min(cm, o.cyclic_margin);
    bm = std::min(bm, o.brouwer_margin);
    if (!o.cyclic_fail.empty()) cyc.add(o.cyclic_fail);
    if (!o.brouwer_fail.empty()) br.add(o.brouwer_fail);
  }
  rep.rows.push_back(Json{{"n", n},
                          {"graphs", graphs.size()},
                          {"extra_edges", extra_edges},
                          {"diameter_ge4", applicable},
                          {"cyclic_min_margin", applicable ? Json(cm) : Json(nullptr)},
                          {"brouwer_min_margin", bm}});
  rep.check("Brouwer inequality on all graphs", br.count == 0, br.detail("min margin " + fmt(bm, 9)));
  rep.check("strict c-cyclic bound on diameter>=4 graphs", cyc.count == 0,
            cyc.detail(std::to_string(applicable) + " graphs, min margin " + (applicable ? fmt(cm, 9) : "n/a")));
  rep.elapsed_ms = sw.ms();
  return rep;
}

CampaignReport wielandt_sweep(int n, int trials, std::uint64_t seed, const CampaignOptions& opts) {
  CampaignReport rep;
  const Stopwatch sw;
  rep.campaign = "wielandt";
  rep.params = {{"n", n}, {"trials", trials}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Tree, Edge>> cases;
  for (int i = 0; i < trials; ++i) {
    Tree t = random_tree_checked(n, rng);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(t.edges().size()) - 1);
    Edge e = t.edges()[pick(rng)];
    cases.emplace_back(std::move(t), e);
  }
  const auto fails = parallel_map<std::string>(cases.size(), opts.threads, [&](std::size_t i) -> std::string {
    const auto& [t, e] = cases[i];
    const std::string who = canonical_encoding(t) + " minus " + describe(e);
    const Graph forest = remove_edge(t, e);
    const auto comps = components(forest);
    if (comps.size() != 2) return who + ": edge removal did not split the tree";
    const auto s1 = spectrum(induced_subgraph(forest, comps[0])).values;
    const auto s2 = spectrum(induced_subgraph(forest, comps[1])).values;
    const auto st = spectrum(t).values;
    auto prefix = [](const std::vector<double>& v) {
      std::vector<double> p(v.size() + 1, 0.0);
      for (std::size_t j = 0; j < v.size(); ++j) p[j + 1] = p[j] + v[j];
      return p;
    };
    const auto p1 = prefix(s1), p2 = prefix(s2), pt = prefix(st);
    const int n1 = static_cast<int>(s1.size()), n2 = static_cast<int>(s2.size());
    // Merge the component spectra, tracking how many of the top k come from each.
    int k1 = 0, k2 = 0;
    for (int k = 1; k <= n; ++k) {
      if (k2 >= n2 || (k1 < n1 && s1[k1] >= s2[k2]))
        ++k1;
      else
        ++k2;
      const double sf = p1[k1] + p2[k2];
      if (pt[k] > sf + 2.0 + kBoundTolerance)
        return who + ": k=" + std::to_string(k) + " S_k(T)=" + fmt(pt[k], 12) + " > S_k(F)+2=" + fmt(sf + 2.0, 12);
      double best = -INFINITY;
      for (int j1 = std::max(0, k - n2); j1 <= std::min(k, n1); ++j1) best = std::max(best, p1[j1] + p2[k - j1]);
      if (std::abs(best - sf) > 1e-9)
        return who + ": k=" + std::to_string(k) + " best split " + fmt(best, 12) + " differs from S_k(F) " + fmt(sf, 12);
    }
    return {};
  });
  Offenders off;
  for (const auto& f : fails)
    if (!f.empty()) off.add(f);
  rep.rows.push_back(Json{{"n", n}, {"trials", trials}, {"violations", off.count}});
  rep.check("S_k(T) <= S_k1(T1) + S_k2(T2) + 2 for the realised split, all k", off.count == 0,
            off.detail(std::to_string(trials) + " edge deletions"));
  rep.elapsed_ms = sw.ms();
  return rep;
}

CampaignReport locator_agreement(int trials, int max_n, std::uint64_t seed, const CampaignOptions& opts) {
  if (max_n < 3) throw std::invalid_argument("locator_agreement: max_n must be at least 3");
  CampaignReport rep;
  const Stopwatch sw;
  rep.campaign = "locator-agreement";
  rep.params = {{"trials", trials}, {"max_n", max_n}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_n(3, max_n);
  std::uniform_int_distribution<long> pick_den(1, 64);
  struct Case {
    Tree t;
    Rational alpha;
  };
  std::vector<Case> cases;
  for (int i = 0; i < trials; ++i) {
    Tree t = random_tree(pick_n(rng), rng);
    const long den = pick_den(rng);
    std::uniform_int_distribution<long> pick_num(0, den * (t.max_degree() + 2));
    cases.push_back({std::move(t), make_rational(pick_num(rng), den)});
  }
  struct Outcome {
    bool near = false;
    std::string fail;
  };
  const auto outcomes = parallel_map<Outcome>(cases.size(), opts.threads, [&](std::size_t i) {
    Outcome o;
    const auto& [t, alpha] = cases[i];
    const std::string who = canonical_encoding(t) + " alpha=" + to_string(alpha);
    const Spectrum sp = spectrum(t);
    const LocationResult loc = count_relative(t, alpha);
    const double a = alpha.get_d();
    int less = 0, greater = 0;
    for (double mu : sp.values) {
      if (std::abs(mu - a) < kNearEigenvalue) o.near = true;
      if (mu < a - kNearEigenvalue) ++less;
      if (mu > a + kNearEigenvalue) ++greater;
    }
    if (loc.total() != t.order())
      o.fail = who + ": counts do not sum to n";
    else if (!o.near && (less != loc.less || greater != loc.greater || loc.equal != 0))
      o.fail = who + ": exact " + std::to_string(loc.less) + "/" + std::to_string(loc.equal) + "/" +
               std::to_string(loc.greater) + " vs floating " + std::to_string(less) + "/0/" + std::to_string(greater);
    else if (o.near && (loc.less < less || loc.greater < greater))
      o.fail = who + ": exact counts below the floating counts away from alpha";
    if (o.fail.empty()) {
      const LocationResult at_mean = count_relative(t, average_degree(t));
      if (at_mean.equal != 0) o.fail = canonical_encoding(t) + ": average degree reported as an eigenvalue";
    }
    return o;
  });
  Offenders off;
  int near = 0;
  for (const auto& o : outcomes) {
    near += o.near;
    if (!o.fail.empty()) off.add(o.fail);
  }
  rep.rows.push_back(Json{{"trials", trials}, {"compared", trials - near}, {"near_eigenvalue", near}, {"mismatches", off.count}});
  rep.check("exact locator counts match eigensolver counts", off.count == 0,
            off.detail(std::to_string(trials - near) + " compared, " + std::to_string(near) + " near an eigenvalue"));
  rep.elapsed_ms = sw.ms();
  return rep;
}

CampaignReport rojo_campaign(const FTree& spec, double tol) {
  CampaignReport rep;
  const Stopwatch sw;
  rep.campaign = "rojo";
  rep.params = {{"spec", to_string(FamilySpec{spec})}, {"tol", tol}};
  const RojoReport r = verify_rojo(spec, tol);
  const BlockSystem sys = BlockSystem::from(spec);
  rep.rows.push_back(Json{{"spec", label(spec)},
                          {"n", r.tree_eigs.size()},
                          {"order_M", r.order_M},
                          {"padding_ones", r.padding},
                          {"delta", sys.delta},
                          {"max_deviation", r.max_deviation}});
  rep.check("spectrum(M) plus padding ones equals the tree spectrum", r.ok, "max deviation " + fmt(r.max_deviation, 12));

  const ABSplit ab = split_AB(spec);
  const RealMatrix m = build_M(spec);
  bool exact_sum = true;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (ab.A(i, j) + ab.B(i, j) != m(i, j)) exact_sum = false;
  rep.check("A + B reproduces M entrywise", exact_sum);

  const auto b_eigs = symmetric_eigenvalues(ab.B);
  const double sd = std::sqrt(static_cast<double>(sys.delta));
  double dev = std::max(std::abs(b_eigs.front() - sd), std::abs(b_eigs.back() + sd));
  for (std::size_t i = 1; i + 1 < b_eigs.size(); ++i) dev = std::max(dev, std::abs(b_eigs[i]));
  rep.check("spectrum of B is {sqrt(delta), 0, ..., 0, -sqrt(delta)}", dev <= 1e-9, "max deviation " + fmt(dev, 12));

  std::string block_fail;
  try {
    for (int s : sys.s) block_eigs_T(s);
    for (int t : sys.t) block_eigs_Q(t);
  } catch (const BlockBoundError& e) {
    block_fail = e.what();
  }
  rep.check("block eigenvalues inside their proven intervals", block_fail.empty(), block_fail);

  const Tree tree = generate(spec);
  if (tree.order() >= 3) {
    const int sg = sigma(tree);
    const Spectrum sp = spectrum(tree);
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= sg && k + 1 <= m.rows(); ++k) {
      const double lhs = s_k(sp, k), rhs = block_upper_bound(spec, k);
      if (lhs > rhs + kBoundTolerance) {
        ok = false;
        detail = "k=" + std::to_string(k) + ": " + fmt(lhs, 9) + " > " + fmt(rhs, 9);
      }
    }
    rep.check("S_k(tree) <= S_{k+1}(A) for k <= sigma", ok, ok ? "sigma=" + std::to_string(sg) : detail);
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

}  // namespace spectree
