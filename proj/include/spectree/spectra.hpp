#pragma once

#include <stdexcept>
#include <vector>

#include "spectree/graph.hpp"
#include "spectree/linalg.hpp"
#include "spectree/rational.hpp"

namespace spectree {

inline constexpr double kSpectrumTolerance = 1e-10;

class SpectrumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Laplacian eigenvalues mu_1 >= ... >= mu_n of a graph.
struct Spectrum {
  std::vector<double> values;
  int n = 0;
  int edge_count = 0;

  double operator[](std::size_t i) const { return values[i]; }
  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
};

struct SpectrumOptions {
  double tolerance = kSpectrumTolerance;
  EigenOptions eigen;
};

Matrix<int> laplacian(const Graph& g);

/// Dense eigendecomposition of L = D - A. Verifies trace, zero smallest
/// value and nonnegativity within the tolerance; throws SpectrumError otherwise.
Spectrum spectrum(const Graph& g, const SpectrumOptions& opts = {});

/// Sum of the k largest eigenvalues, 1 <= k <= n.
double s_k(const Spectrum& sp, int k);

/// 2|E|/n exactly.
Rational average_degree(const Graph& g);

/// Exact count of eigenvalues above the average degree (n >= 3), via the locator.
int sigma(const Tree& t);

struct EnergyReport {
  double le = 0.0;      // sum |mu_i - dbar|
  int sigma = 0;        // eigenvalues strictly above dbar
  bool sigma_exact = true;
  double s_sigma = 0.0;
  Rational dbar;

  /// 2 S_sigma - 2 sigma dbar, equal to le up to rounding.
  double reconstructed() const;
};

/// Laplacian energy from the spectrum. sigma is exact for trees; for other
/// graphs it is counted from the spectrum with the configured tolerance.
EnergyReport laplacian_energy(const Graph& g, const SpectrumOptions& opts = {});
EnergyReport laplacian_energy(const Graph& g, const Spectrum& sp, const SpectrumOptions& opts = {});

}  // namespace spectree
