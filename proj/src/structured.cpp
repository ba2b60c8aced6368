#include "spectree/structured.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spectree/rational.hpp"
#include "spectree/spectra.hpp"

namespace spectree {

BlockSystem BlockSystem::from(const FTree& spec) {
  validate(spec);
  BlockSystem b;
  b.p = spec.p;
  b.s = spec.s;
  b.t = spec.t;
  std::sort(b.s.begin(), b.s.end());
  std::sort(b.t.begin(), b.t.end());
  b.delta = static_cast<int>(b.s.size() + b.t.size()) + b.p;
  return b;
}

int BlockSystem::order() const {
  return 2 * static_cast<int>(s.size()) + 3 * static_cast<int>(t.size()) + 1 + (p >= 1 ? 1 : 0);
}

namespace {

// Fills the block-diagonal part into a and the border into b.
void fill(const BlockSystem& sys, RealMatrix& a, RealMatrix& b) {
  const int last = sys.order() - 1;
  int at = 0;
  if (sys.p >= 1) {
    a(at, at) = 1.0;
    b(at, last) = b(last, at) = std::sqrt(static_cast<double>(sys.p));
    ++at;
  }
  for (int s : sys.s) {
    const double r = std::sqrt(static_cast<double>(s));
    a(at, at) = 1.0;
    a(at, at + 1) = a(at + 1, at) = r;
    a(at + 1, at + 1) = s + 1.0;
    b(at + 1, last) = b(last, at + 1) = 1.0;
    at += 2;
  }
  for (int t : sys.t) {
    const double r = std::sqrt(static_cast<double>(t));
    a(at, at) = 1.0;
    a(at, at + 1) = a(at + 1, at) = r;
    a(at + 1, at + 1) = t + 1.0;
    a(at + 1, at + 2) = a(at + 2, at + 1) = 1.0;
    a(at + 2, at + 2) = 2.0;
    b(at + 2, last) = b(last, at + 2) = 1.0;
    at += 3;
  }
  a(last, last) = sys.delta;
}

}  // namespace

ABSplit split_AB(const FTree& spec) {
  const BlockSystem sys = BlockSystem::from(spec);
  ABSplit out{RealMatrix(sys.order()), RealMatrix(sys.order())};
  fill(sys, out.A, out.B);
  return out;
}

RealMatrix build_M(const FTree& spec) {
  ABSplit ab = split_AB(spec);
  RealMatrix m = ab.A;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (ab.B(i, j) != 0.0) m(i, j) = ab.B(i, j);
  return m;
}

TBlockEigs block_eigs_T(int s) {
  if (s < 1) throw std::invalid_argument("block_eigs_T: s must be at least 1");
  const double root = std::sqrt(static_cast<double>(s) * s + 4.0 * s);
  TBlockEigs e{(s + 2 + root) / 2, 0.0};
  // x1 * x2 = 1 avoids cancellation in the small root.
  e.x2 = 1.0 / e.x1;
  if (!(e.x1 > 2.0 && e.x1 < 2.0 + s - 1.0 / (2.0 + s)) || !(e.x2 > 0.0 && e.x2 < 0.5))
    throw BlockBoundError("T-block eigenvalues out of bounds for s=" + std::to_string(s));
  return e;
}

QBlockEigs block_eigs_Q(int t) {
  if (t < 1) throw std::invalid_argument("block_eigs_Q: t must be at least 1");
  RealMatrix q(3);
  const double r = std::sqrt(static_cast<double>(t));
  q(0, 0) = 1.0;
  q(0, 1) = q(1, 0) = r;
  q(1, 1) = t + 1.0;
  q(1, 2) = q(2, 1) = 1.0;
  q(2, 2) = 2.0;
  const auto ev = symmetric_eigenvalues(q);
  QBlockEigs e{ev[0], ev[1], ev[2]};
  const double y3_floor = t == 1 ? 0.19 : 1.0 / (4.0 * t);
  const bool ok = e.y1 > 2.0 && e.y1 < t + 2.0 + 1.0 / (4.0 * t) && e.y2 > 1.5 && e.y2 < 2.0 && e.y3 > y3_floor &&
                  std::abs(e.y1 + e.y2 + e.y3 - (t + 4.0)) < 1e-9 * (t + 4.0);
  if (!ok) throw BlockBoundError("Q-block eigenvalues out of bounds for t=" + std::to_string(t));
  return e;
}

RojoReport verify_rojo(const FTree& spec, double tol) {
  RojoReport rep;
  const RealMatrix m = build_M(spec);
  rep.order_M = m.rows();
  rep.m_eigs = symmetric_eigenvalues(m);
  rep.tree_eigs = spectrum(generate(spec)).values;
  const int n = static_cast<int>(rep.tree_eigs.size());
  rep.padding = n - rep.order_M;
  if (rep.padding < 0) return rep;
  std::vector<double> combined = rep.m_eigs;
  combined.insert(combined.end(), rep.padding, 1.0);
  std::sort(combined.begin(), combined.end(), std::greater<>());
  for (int i = 0; i < n; ++i) rep.max_deviation = std::max(rep.max_deviation, std::abs(combined[i] - rep.tree_eigs[i]));
  rep.ok = rep.max_deviation <= tol;
  return rep;
}

double block_upper_bound(const FTree& spec, int k) {
  const auto ev = symmetric_eigenvalues(split_AB(spec).A);
  if (k < 0 || k + 1 > static_cast<int>(ev.size())) throw std::out_of_range("block_upper_bound: k out of range");
  double sum = 0.0;
  for (int i = 0; i <= k; ++i) sum += ev[i];
  return sum;
}

bool reciprocal_sum_inequality(std::span<const int> a) {
  if (a.empty()) throw std::invalid_argument("reciprocal_sum_inequality: empty tuple");
  Rational lhs = 0;
  long c = 0;
  for (int v : a) {
    if (v < 1) throw std::invalid_argument("reciprocal_sum_inequality: entries must be positive");
    lhs += Rational(1, v + 2);
    c += v;
  }
  const long r = static_cast<long>(a.size());
  return lhs >= make_rational(r * r, c + 2 * r);
}

}  // namespace spectree
