#include "spectree/charpoly.hpp"

#include <algorithm>
#include <cctype>

namespace spectree {

IntPolynomial tree_charpoly(const RootedTree& rt, int degree_cap) {
  const int n = rt.tree.order();
  if (n > degree_cap)
    throw CharpolyError("tree_charpoly: order " + std::to_string(n) + " exceeds degree cap " +
                        std::to_string(degree_cap));
  // f[v]: charpoly of the subtree at v with v's degree taken in the whole tree.
  // g[v]: the same with row and column of v removed.
  std::vector<IntPolynomial> f(n), g(n);
  for (Vertex v : rt.order) {
    const auto& ch = rt.children[v];
    const std::size_t m = ch.size();
    std::vector<IntPolynomial> prefix(m + 1), suffix(m + 1);
    prefix[0] = IntPolynomial::constant(1);
    for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] * f[ch[i]];
    suffix[m] = IntPolynomial::constant(1);
    for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] * f[ch[i]];
    IntPolynomial fv = IntPolynomial::linear(rt.tree.degree(v)) * prefix[m];
    for (std::size_t i = 0; i < m; ++i) fv -= g[ch[i]] * prefix[i] * suffix[i + 1];
    g[v] = std::move(prefix[m]);
    f[v] = std::move(fv);
    for (Vertex c : ch) {
      f[c] = {};
      g[c] = {};
    }
  }
  return f[rt.root];
}

IntPolynomial tree_charpoly(const Tree& t, int degree_cap) { return tree_charpoly(root_bottom_up(t, 0), degree_cap); }

IntPolynomial graph_charpoly(const Graph& g, int degree_cap) {
  const int n = g.order();
  if (n > degree_cap)
    throw CharpolyError("graph_charpoly: order " + std::to_string(n) + " exceeds degree cap " +
                        std::to_string(degree_cap));
  if (n == 0) return IntPolynomial::constant(1);
  using IntMatrix = std::vector<std::vector<BigInt>>;
  IntMatrix lap(n, std::vector<BigInt>(n));
  for (int v = 0; v < n; ++v) {
    lap[v][v] = g.degree(v);
    for (Vertex u : g.neighbors(v)) lap[v][u] = -1;
  }
  // M_1 = I; c_{n-k} = -tr(L M_k) / k; M_{k+1} = L M_k + c_{n-k} I.
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int k = 1; k <= n; ++k) {
    IntMatrix lm(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (lap[i][j] == 0) continue;
        for (int l = 0; l < n; ++l) lm[i][l] += lap[i][j] * m[j][l];
      }
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += lm[i][i];
    if (!mpz_divisible_ui_p(tr.get_mpz_t(), static_cast<unsigned long>(k)))
      throw std::logic_error("graph_charpoly: inexact trace division");
    BigInt ck = -tr / k;
    c[n - k] = ck;
    for (int i = 0; i < n; ++i) lm[i][i] += ck;
    m = std::move(lm);
  }
  return IntPolynomial(std::move(c));
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Star: return "star";
    case Regime::Diam3: return "diameter-3";
    case Regime::TwoBranchPendants: return "two-branches-with-pendants";
    case Regime::TwoBranches: return "two-branches";
    case Regime::TwoLargeBranches: return "two-large-branches";
    case Regime::OneLargeBranch: return "one-large-branch";
    case Regime::NoLargeBranch: return "no-large-branch";
    case Regime::MixedBranches: return "mixed-branches";
    case Regime::FCounter: return "fcounter";
  }
  return "?";
}

IntPolynomial FactoredCharpoly::expand() const {
  IntPolynomial out = IntPolynomial::constant(1);
  for (const auto& [p, m] : factors) out *= pow(p, m);
  return out;
}

int FactoredCharpoly::degree() const {
  int d = 0;
  for (const auto& [p, m] : factors) d += p.degree() * m;
  return d;
}

std::string to_string(const FactoredCharpoly& f) {
  std::string out;
  for (const auto& [p, m] : f.factors) {
    if (!out.empty()) out += " * ";
    out += "(" + to_string(p) + ")^" + std::to_string(m);
  }
  return out.empty() ? "(1)^1" : out;
}

std::vector<std::pair<IntPolynomial, int>> parse_factored(std::string_view text) {
  std::vector<std::pair<IntPolynomial, int>> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip();
    if (i >= text.size() || text[i] != '(') throw std::invalid_argument("factored polynomial: expected '('");
    auto close = text.find(')', i);
    if (close == std::string_view::npos) throw std::invalid_argument("factored polynomial: missing ')'");
    IntPolynomial p = parse_polynomial(text.substr(i + 1, close - i - 1));
    i = close + 1;
    int mult = 1;
    skip();
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw std::invalid_argument("factored polynomial: bad exponent");
      mult = std::stoi(std::string(text.substr(start, i - start)));
    }
    out.emplace_back(std::move(p), mult);
    skip();
    if (i >= text.size()) break;
    if (text[i] != '*') throw std::invalid_argument("factored polynomial: expected '*'");
    ++i;
  }
  return out;
}

namespace factors {

namespace {
IntPolynomial make(std::initializer_list<BigInt> descending) {
  std::vector<BigInt> v(descending.begin(), descending.end());
  std::reverse(v.begin(), v.end());
  return IntPolynomial(std::move(v));
}
}  // namespace

IntPolynomial p_ab(long a, long b) {
  BigInt A = a, B = b;
  return make({1, -(A + B + 4), A * B + 2 * A + 2 * B + 5, -(A + B + 2)});
}

IntPolynomial q_pab(long p_, long a, long b) {
  BigInt p = p_, A = a, B = b;
  return make({1, -(p + B + A + 7), B * p + A * p + 4 * p + A * B + 5 * B + 5 * A + 18,
               -(A * B * p + 2 * B * p + 2 * A * p + 6 * p + 3 * A * B + 8 * B + 8 * A + 22),
               B * p + A * p + 4 * p + 2 * A * B + 5 * B + 5 * A + 13, -p - B - A - 3});
}

IntPolynomial p_abr(long a, long b, long r_) {
  BigInt A = a, B = b, r = r_;
  return make({1, -(r + B + A + 7), B * r + A * r + 6 * r + A * B + 5 * B + 5 * A + 19,
               -(A * B * r + 4 * B * r + 4 * A * r + 14 * r + 3 * A * B + 9 * B + 9 * A + 24),
               2 * A * B * r + 5 * B * r + 5 * A * r + 16 * r + 3 * A * B + 7 * B + 7 * A + 13,
               -(2 * B * r + 2 * A * r + 9 * r + 2 * A * B + 3 * B + 3 * A + 1), 2 * r + B + A - 1});
}

IntPolynomial q_ab(long a, long b) {
  BigInt A = a, B = b;
  return make({1, -(A + B + 6), A * B + 4 * A + 4 * B + 12, -(2 * A * B + 4 * A + 4 * B + 10), A + B + 3});
}

IntPolynomial p_sr(long s_, long r_) {
  BigInt s = s_, r = r_;
  return make({1, -(s + r + 5), r * s + 3 * s + 4 * r + 8, -(2 * r * s + 2 * s + 5 * r + 4), s + 2 * r});
}

IntPolynomial no_large_quadratic(long r) { return IntPolynomial{2 * r + 1, -(r + 3), 1}; }

IntPolynomial q_stp(long s_, long t_, long p_) {
  BigInt s = s_, t = t_, p = p_;
  return make({1, -(t + s + p + 9), s * t + p * t + 7 * t + p * s + 7 * s + 6 * p + 31,
               -(p * s * t + 5 * s * t + 4 * p * t + 17 * t + 4 * p * s + 17 * s + 13 * p + 53),
               2 * p * s * t + 7 * s * t + 5 * p * t + 18 * t + 4 * p * s + 18 * s + 13 * p + 48,
               -(3 * s * t + 2 * p * t + 8 * t + p * s + 8 * s + 6 * p + 22), t + s + p + 4});
}

IntPolynomial golden() { return IntPolynomial{1, -3, 1}; }

IntPolynomial fcounter_cubic(long n) {
  const BigInt k = n / 3;
  switch (n % 3) {
    case 0: return IntPolynomial{3, -(n / 3 + 3), 1} * IntPolynomial::linear(n / 3);
    case 1: return make({1, -(2 * k + 4), (k + 2) * (k + 2), -(3 * k + 1)});
    default: return make({1, -(2 * k + 5), k * k + 5 * k + 5, -(3 * k + 2)});
  }
}

IntPolynomial fcounter_quadratic(long k) { return IntPolynomial{1, -(k + 1), 1}; }

}  // namespace factors

namespace {

void push(FactoredCharpoly& f, IntPolynomial p, int m) {
  if (m < 0) throw CharpolyError("closed_form: negative exponent");
  if (m > 0) f.factors.emplace_back(std::move(p), m);
}

FactoredCharpoly ftree_form(const FTree& spec) {
  FactoredCharpoly f;
  const int r1 = static_cast<int>(spec.s.size());
  const int r2 = static_cast<int>(spec.t.size());
  const int p = spec.p;
  const IntPolynomial one = IntPolynomial::linear(1);
  const IntPolynomial x = IntPolynomial::x();
  if (r2 == 0 && r1 == 2) {
    const int a = std::max(spec.s[0], spec.s[1]);
    const int b = std::min(spec.s[0], spec.s[1]);
    const int n = p + a + b + 3;
    if (p >= 1) {
      f.regime = Regime::TwoBranchPendants;
      push(f, factors::q_pab(p, a, b), 1);
      push(f, one, n - 6);
    } else {
      f.regime = Regime::TwoBranches;
      push(f, factors::q_ab(a, b), 1);
      push(f, one, a + b - 2);
    }
    push(f, x, 1);
    return f;
  }
  if (r2 == 0 && r1 >= 3 && p == 0) {
    std::vector<int> s = spec.s;
    std::sort(s.begin(), s.end(), std::greater<>());
    const int large = static_cast<int>(std::count_if(s.begin(), s.end(), [](int v) { return v >= 2; }));
    const int r = r1;
    if (large == 2) {
      f.regime = Regime::TwoLargeBranches;
      push(f, factors::p_abr(s[0], s[1], r), 1);
      push(f, factors::golden(), r - 3);
      push(f, one, s[0] + s[1] - 2);
    } else if (large == 1) {
      f.regime = Regime::OneLargeBranch;
      push(f, factors::p_sr(s[0], r), 1);
      push(f, factors::golden(), r - 2);
      push(f, one, s[0] - 1);
    } else if (large == 0) {
      f.regime = Regime::NoLargeBranch;
      push(f, factors::no_large_quadratic(r), 1);
      push(f, factors::golden(), r - 1);
    } else {
      throw CharpolyError("closed_form: more than two branches with two or more leaves");
    }
    push(f, x, 1);
    return f;
  }
  if (r1 == 1 && r2 == 1) {
    const int s = spec.s[0], t = spec.t[0];
    if (s + t + p < 3) throw CharpolyError("closed_form: mixed-branch form needs s + t + p >= 3");
    f.regime = Regime::MixedBranches;
    push(f, factors::q_stp(s, t, p), 1);
    push(f, one, s + t + p - 3);
    push(f, x, 1);
    return f;
  }
  throw CharpolyError("closed_form: no closed form for " + to_string(FamilySpec{spec}));
}

}  // namespace

FactoredCharpoly closed_form(const FamilySpec& spec) {
  validate(spec);
  const IntPolynomial x = IntPolynomial::x();
  const IntPolynomial one = IntPolynomial::linear(1);
  if (const auto* st = std::get_if<Star>(&spec)) {
    FactoredCharpoly f;
    f.regime = Regime::Star;
    push(f, x, 1);
    if (st->n >= 2) {
      push(f, one, st->n - 2);
      push(f, IntPolynomial::linear(st->n), 1);
    }
    return f;
  }
  if (const auto* d = std::get_if<Diam3>(&spec)) {
    FactoredCharpoly f;
    f.regime = Regime::Diam3;
    push(f, factors::p_ab(d->a, d->b), 1);
    push(f, one, d->a + d->b - 2);
    push(f, x, 1);
    return f;
  }
  if (const auto* fc = std::get_if<FCounter>(&spec)) {
    if (fc->k != fc->n / 3) throw CharpolyError("closed_form: F(n,k) form requires k = floor(n/3)");
    if (fc->n < 6) throw CharpolyError("closed_form: F(n,k) form requires n >= 6");
    FactoredCharpoly f;
    f.regime = Regime::FCounter;
    if (fc->n % 3 == 0) {
      push(f, IntPolynomial{3, -(fc->k + 3), 1}, 1);
      push(f, IntPolynomial::linear(fc->k), 1);
    } else {
      push(f, factors::fcounter_cubic(fc->n), 1);
    }
    push(f, factors::fcounter_quadratic(fc->k), 1);
    push(f, one, fc->n - 6);
    push(f, x, 1);
    return f;
  }
  if (const auto* ft = std::get_if<FTree>(&spec)) return ftree_form(*ft);
  throw CharpolyError("closed_form: no closed form for " + to_string(spec));
}

}  // namespace spectree
