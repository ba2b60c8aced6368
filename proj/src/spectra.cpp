#include "spectree/spectra.hpp"

#include <cmath>
#include <numeric>

#include "spectree/locator.hpp"

namespace spectree {

Matrix<int> laplacian(const Graph& g) {
  Matrix<int> L(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) L(v, v) = g.degree(v);
  for (auto [u, v] : g.edges()) {
    L(u, v) = -1;
    L(v, u) = -1;
  }
  return L;
}

Spectrum spectrum(const Graph& g, const SpectrumOptions& opts) {
  Spectrum sp;
  sp.n = g.order();
  sp.edge_count = g.size();
  sp.values = symmetric_eigenvalues(laplacian(g).cast<double>(), opts.eigen);

  const double tol = opts.tolerance;
  const double total = std::accumulate(sp.values.begin(), sp.values.end(), 0.0);
  if (std::abs(total - 2.0 * sp.edge_count) > tol * std::max(1, sp.n))
    throw SpectrumError("eigenvalue sum " + std::to_string(total) + " differs from 2|E| = " +
                        std::to_string(2 * sp.edge_count));
  if (std::abs(sp.smallest()) > tol * std::max(1, sp.n))
    throw SpectrumError("smallest Laplacian eigenvalue " + std::to_string(sp.smallest()) + " is not zero");
  // L is positive semidefinite; negative values here are round-off.
  for (double& v : sp.values)
    if (v < 0.0) v = 0.0;
  return sp;
}

double s_k(const Spectrum& sp, int k) {
  if (k < 1 || k > sp.n)
    throw std::out_of_range("s_k: k=" + std::to_string(k) + " outside 1.." + std::to_string(sp.n));
  return std::accumulate(sp.values.begin(), sp.values.begin() + k, 0.0);
}

Rational average_degree(const Graph& g) { return make_rational(2L * g.size(), g.order()); }

int sigma(const Tree& t) {
  const int n = t.order();
  if (n < 3) throw std::invalid_argument("sigma: requires n >= 3");
  LocationResult r = count_relative(t, make_rational(2L * n - 2, n));
  if (r.equal != 0)
    throw std::logic_error("sigma: a tree eigenvalue equals the non-integer average degree; locator is broken");
  return r.greater;
}

double EnergyReport::reconstructed() const { return 2.0 * s_sigma - 2.0 * sigma * dbar.get_d(); }

EnergyReport laplacian_energy(const Graph& g, const SpectrumOptions& opts) {
  return laplacian_energy(g, spectrum(g, opts), opts);
}

EnergyReport laplacian_energy(const Graph& g, const Spectrum& sp, const SpectrumOptions& opts) {
  EnergyReport rep;
  rep.dbar = average_degree(g);
  const double dbar = rep.dbar.get_d();
  for (double mu : sp.values) rep.le += std::abs(mu - dbar);

  if (auto tree = as_tree(g)) {
    rep.sigma = tree->order() >= 3 ? sigma(*tree) : count_relative(*tree, rep.dbar).greater;
    rep.sigma_exact = true;
  } else {
    rep.sigma = 0;
    for (double mu : sp.values)
      if (mu > dbar + opts.tolerance) ++rep.sigma;
    rep.sigma_exact = false;
  }
  rep.s_sigma = rep.sigma > 0 ? s_k(sp, rep.sigma) : 0.0;
  return rep;
}

}  // namespace spectree
