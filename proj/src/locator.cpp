#include "spectree/locator.hpp"

#include <stdexcept>

namespace spectree {

LocationResult count_relative(const RootedTree& rt, const Rational& alpha_in, const LocatorOptions& opts) {
  const Rational alpha = canonical(alpha_in);
  const Tree& t = rt.tree;
  const int n = t.order();
  std::vector<Rational> a(n);
  for (Vertex v = 0; v < n; ++v) a[v] = Rational(t.degree(v)) - alpha;
  std::vector<char> detached(n, 0);

  for (Vertex v : rt.order) {
    Vertex zero_child = -1;
    bool any_child = false;
    for (Vertex c : rt.children[v]) {
      if (detached[c]) continue;
      any_child = true;
      if (zero_child < 0 && sgn(a[c]) == 0) zero_child = c;
    }
    if (!any_child) continue;
    if (zero_child >= 0) {
      a[zero_child] = 2;
      a[v] = Rational(-1, 2);
      if (v != rt.root) detached[v] = 1;
      continue;
    }
    for (Vertex c : rt.children[v])
      if (!detached[c]) a[v] -= 1 / a[c];
  }

  LocationResult res;
  for (const auto& x : a) {
    int s = sgn(x);
    if (s > 0)
      ++res.greater;
    else if (s < 0)
      ++res.less;
    else
      ++res.equal;
  }
  if (opts.keep_trace) res.trace = std::move(a);
  return res;
}

LocationResult count_relative(const Tree& t, const Rational& alpha, const LocatorOptions& opts) {
  return count_relative(root_bottom_up(t, 0), alpha, opts);
}

int count_above_average(const Tree& t) {
  const int n = t.order();
  if (n < 3) throw std::invalid_argument("count_above_average: requires n >= 3");
  return count_relative(t, make_rational(2L * n - 2, n)).greater;
}

}  // namespace spectree
