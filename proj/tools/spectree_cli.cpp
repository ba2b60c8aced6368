// Command-line front end for the spectree library.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spectree/bounds.hpp"
#include "spectree/campaign.hpp"
#include "spectree/charpoly.hpp"
#include "spectree/enumerate.hpp"
#include "spectree/family.hpp"
#include "spectree/locator.hpp"
#include "spectree/report.hpp"
#include "spectree/spectra.hpp"

using namespace spectree;

namespace {

struct Input {
  Graph graph;
  std::optional<FamilySpec> spec;
  std::string name;
};

// Edge-list file, family spec or canonical parenthesis encoding.
Input read_input(const std::string& arg) {
  Input in;
  in.name = arg;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream f(arg);
    std::stringstream ss;
    ss << f.rdbuf();
    in.graph = parse_edge_list(ss.str());
    return in;
  }
  if (!arg.empty() && arg.front() == '(') {
    in.graph = tree_from_encoding(arg).graph();
    return in;
  }
  in.spec = parse_family_spec(arg);
  in.graph = generate(*in.spec).graph();
  in.name = label(*in.spec);
  return in;
}

Tree require_tree(const Input& in) {
  auto t = as_tree(in.graph);
  if (!t) throw GraphError(GraphError::Kind::NotATree, "input is not a tree: " + in.name);
  return *t;
}

CampaignReport cmd_spectrum(const Input& in) {
  CampaignReport rep;
  rep.campaign = "spectrum";
  rep.params = {{"graph", in.name}, {"n", in.graph.order()}, {"edges", in.graph.size()}};
  const Spectrum sp = spectrum(in.graph);
  for (std::size_t i = 0; i < sp.values.size(); ++i) rep.rows.push_back(Json{{"i", i + 1}, {"mu", sp.values[i]}});
  double trace = 0.0;
  for (double v : sp.values) trace += v;
  rep.check("eigenvalue sum equals 2|E|", std::abs(trace - 2.0 * in.graph.size()) < 1e-8 * std::max(1, in.graph.order()));
  return rep;
}

CampaignReport cmd_energy(const Input& in) {
  CampaignReport rep;
  rep.campaign = "energy";
  rep.params = {{"graph", in.name}};
  const EnergyReport e = laplacian_energy(in.graph);
  rep.rows.push_back(Json{{"n", in.graph.order()},
                          {"edges", in.graph.size()},
                          {"dbar", to_string(e.dbar)},
                          {"sigma", e.sigma},
                          {"sigma_exact", e.sigma_exact},
                          {"s_sigma", e.s_sigma},
                          {"le", e.le},
                          {"le_from_s_sigma", e.reconstructed()}});
  rep.check("LE = 2 S_sigma - 2 sigma dbar", std::abs(e.le - e.reconstructed()) < 1e-8 * std::max(1, in.graph.order()));
  return rep;
}

CampaignReport cmd_locate(const Input& in, const std::string& alpha_text) {
  const Tree t = require_tree(in);
  const Rational alpha = parse_rational(alpha_text);
  CampaignReport rep;
  rep.campaign = "locate";
  rep.params = {{"tree", in.name}, {"alpha", to_string(alpha)}};
  const LocationResult loc = count_relative(t, alpha);
  rep.rows.push_back(Json{{"alpha", to_string(alpha)}, {"less", loc.less}, {"equal", loc.equal}, {"greater", loc.greater}});
  rep.check("counts sum to n", loc.total() == t.order());
  const Spectrum sp = spectrum(t);
  const double a = alpha.get_d();
  int less = 0, equal = 0;
  for (double mu : sp.values) {
    if (std::abs(mu - a) < 1e-8)
      ++equal;
    else if (mu < a)
      ++less;
  }
  rep.check("agrees with the eigensolver", less == loc.less && equal == loc.equal,
            "floating " + std::to_string(less) + "/" + std::to_string(equal) + "/" +
                std::to_string(t.order() - less - equal));
  return rep;
}

CampaignReport cmd_charpoly(const Input& in, bool with_closed_form) {
  const Tree t = require_tree(in);
  CampaignReport rep;
  rep.campaign = "charpoly";
  rep.params = {{"tree", in.name}, {"closed_form", with_closed_form}};
  const IntPolynomial p = tree_charpoly(t);
  rep.rows.push_back(Json{{"form", "algorithmic"}, {"coefficients", to_string(p)}, {"polynomial", to_pretty(p)}});
  const IntPolynomial reduced = divide_exact(p, IntPolynomial::x());
  rep.check("|P(x)/x| at 0 equals n (one spanning tree)", abs(reduced.coeff(0)) == t.order());
  if (with_closed_form) {
    if (!in.spec) throw std::invalid_argument("--closed-form needs a family spec argument");
    const FactoredCharpoly f = closed_form(*in.spec);
    rep.rows.push_back(Json{{"form", "closed:" + to_string(f.regime)}, {"coefficients", to_string(f)}, {"polynomial", ""}});
    rep.check("closed form expands to the algorithmic charpoly", f.expand() == p);
  }
  return rep;
}

CampaignReport cmd_rank(int n, int top, const CampaignOptions& opts) {
  CampaignReport rep;
  rep.campaign = "rank";
  rep.params = {{"n", n}, {"top", top}};
  const auto ranks = rank_all(n, opts);
  for (const auto& e : ranks) {
    if (top > 0 && e.rank > top) break;
    rep.rows.push_back(Json{{"rank", e.rank},
                            {"tree", e.family_label.value_or("")},
                            {"encoding", e.encoding},
                            {"diameter", e.diameter},
                            {"le", e.le},
                            {"tie_with_next", e.tie_with_next}});
  }
  rep.check("star has the largest energy", n < 3 || ranks.front().family_label == label(Star{n}),
            std::to_string(ranks.size()) + " trees ranked");
  return rep;
}

CampaignReport cmd_rojo(const std::string& arg) {
  const FamilySpec spec = parse_family_spec(arg);
  FTree ft;
  if (const auto* f = std::get_if<FTree>(&spec))
    ft = *f;
  else if (const auto* fc = std::get_if<FCounter>(&spec))
    ft = as_ftree(*fc);
  else
    throw SpecError("rojo needs an f: or fc: spec");
  return rojo_campaign(ft, 1e-9);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian spectra, energies and eigenvalue-sum bounds of trees"};
  app.require_subcommand(1);
  bool json = false, csv = false, no_timing = false;
  int threads = 1;
  app.add_flag("--json", json, "JSON output");
  app.add_flag("--csv", csv, "CSV output");
  app.add_flag("--no-timing", no_timing, "Omit elapsed time so outputs are byte-identical across runs");
  app.add_option("--threads", threads, "Worker threads for campaigns")->check(CLI::PositiveNumber);

  std::string tree_arg, alpha, spec_arg;
  int n = 0, from = 0, to = 0, top = 0, extra = 1, trials = 100, random_trials = 0, size = 200;
  std::uint64_t seed = 7;
  bool closed = false;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian spectrum of a graph");
  spectrum_cmd->add_option("graph", tree_arg, "Edge-list file, family spec or encoding")->required();
  auto* energy_cmd = app.add_subcommand("energy", "Laplacian energy, sigma and S_sigma");
  energy_cmd->add_option("graph", tree_arg, "Edge-list file, family spec or encoding")->required();
  auto* locate_cmd = app.add_subcommand("locate", "Exact eigenvalue counts below, at and above alpha");
  locate_cmd->add_option("tree", tree_arg)->required();
  locate_cmd->add_option("--alpha", alpha, "Threshold as p/q, integer or decimal")->required();
  auto* charpoly_cmd = app.add_subcommand("charpoly", "Exact Laplacian characteristic polynomial");
  charpoly_cmd->add_option("tree", tree_arg)->required();
  charpoly_cmd->add_flag("--closed-form", closed, "Also build the factored closed form of the family spec");
  auto* rank_cmd = app.add_subcommand("rank", "Rank all n-vertex trees by Laplacian energy");
  rank_cmd->add_option("--n", n)->required();
  rank_cmd->add_option("--top", top, "Only print the first ranks");
  auto* order_cmd = app.add_subcommand("verify-order", "Check the predicted energy ranking for a range of n");
  order_cmd->add_option("--from", from)->required();
  order_cmd->add_option("--to", to)->required();
  auto* teo_cmd = app.add_subcommand("verify-teo1", "Check the S_k bounds exhaustively or on random trees");
  auto* teo_n = teo_cmd->add_option("--n", n, "Exhaustive check of all n-vertex trees");
  auto* teo_random = teo_cmd->add_option("--random", random_trials, "Number of random trees");
  teo_cmd->add_option("--size", size, "Vertex count for --random");
  teo_cmd->add_option("--seed", seed);
  teo_n->excludes(teo_random);
  auto* brouwer_cmd = app.add_subcommand("brouwer", "Brouwer and c-cyclic bounds on random trees plus edges");
  brouwer_cmd->add_option("--n", n)->required();
  brouwer_cmd->add_option("--extra-edges", extra);
  brouwer_cmd->add_option("--trials", trials);
  brouwer_cmd->add_option("--seed", seed);
  auto* wielandt_cmd = app.add_subcommand("wielandt", "Edge-deletion inequality on random trees");
  wielandt_cmd->add_option("--n", n)->required();
  wielandt_cmd->add_option("--trials", trials);
  wielandt_cmd->add_option("--seed", seed);
  auto* counter_cmd = app.add_subcommand("counterexample", "LE(F(n, floor(n/3))) against LE(T(n-3,1))");
  counter_cmd->add_option("--n", n)->required();
  auto* table_cmd = app.add_subcommand("table-42", "Largest energies among 42-vertex trees");
  auto* rojo_cmd = app.add_subcommand("rojo", "Block-matrix spectrum identity for an f: or fc: spec");
  rojo_cmd->add_option("spec", spec_arg)->required();

  CLI11_PARSE(app, argc, argv);

  CampaignOptions opts = CampaignOptions::from_environment();
  opts.threads = threads;
  CampaignReport rep;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (spectrum_cmd->parsed()) rep = cmd_spectrum(read_input(tree_arg));
    else if (energy_cmd->parsed()) rep = cmd_energy(read_input(tree_arg));
    else if (locate_cmd->parsed()) rep = cmd_locate(read_input(tree_arg), alpha);
    else if (charpoly_cmd->parsed()) rep = cmd_charpoly(read_input(tree_arg), closed);
    else if (rank_cmd->parsed()) rep = cmd_rank(n, top, opts);
    else if (order_cmd->parsed()) rep = verify_order(from, to, opts);
    else if (teo_cmd->parsed()) {
      if (*teo_random) rep = random_sweep(size, random_trials, seed, opts);
      else if (*teo_n) rep = verify_bounds_exhaustive(n, opts);
      else throw std::invalid_argument("verify-teo1 needs --n or --random");
    } else if (brouwer_cmd->parsed()) rep = cyclic_sweep(n, trials, extra, seed, opts);
    else if (wielandt_cmd->parsed()) rep = wielandt_sweep(n, trials, seed, opts);
    else if (counter_cmd->parsed()) rep = verify_counterexample(n);
    else if (table_cmd->parsed()) rep = table_n42();
    else if (rojo_cmd->parsed()) rep = cmd_rojo(spec_arg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const ReportFormat fmt{!no_timing};
  if (json)
    std::cout << to_json_text(rep, fmt);
  else if (csv)
    std::cout << to_csv(rep, fmt);
  else
    std::cout << to_text(rep, fmt);
  return rep.passed() ? 0 : 1;
}
