#include "spectree/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectree {

namespace {

int variations_of(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// Divides by the positive content, keeping the sign of every coefficient.
IntPolynomial divide_content(const IntPolynomial& p) {
  const BigInt g = p.content();
  std::vector<BigInt> coeffs = p.coefficients();
  for (auto& c : coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial linear_factor(Rational root) {
  root.canonicalize();
  return IntPolynomial(std::vector<BigInt>{-root.get_num(), root.get_den()});
}

}  // namespace

SturmSequence::SturmSequence(const IntPolynomial& squarefree) {
  if (squarefree.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  seq_.push_back(divide_content(squarefree));
  if (squarefree.degree() == 0) return;
  seq_.push_back(divide_content(seq_[0].derivative()));
  while (seq_.back().degree() > 0) {
    IntPolynomial r = pseudo_remainder(seq_[seq_.size() - 2], seq_.back());
    if (r.is_zero()) break;
    seq_.push_back(-divide_content(r));
  }
}

int SturmSequence::variations(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) signs.push_back(p.eval_sign(x));
  return variations_of(signs);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& p : seq_) signs.push_back(sgn(p.leading()));
  return variations_of(signs);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& p : seq_) signs.push_back(p.degree() % 2 == 0 ? sgn(p.leading()) : -sgn(p.leading()));
  return variations_of(signs);
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  if (p.degree() <= 0) return IntPolynomial::constant(1);
  IntPolynomial g = gcd(p, p.derivative());
  return divide_exact(p.primitive_part(), g);
}

SturmCount sturm_count(const IntPolynomial& p, const Rational& lo_in, const std::optional<Rational>& hi_in) {
  const Rational lo = canonical(lo_in);
  const std::optional<Rational> hi = hi_in ? std::optional<Rational>(canonical(*hi_in)) : std::nullopt;
  if (hi && !(lo < *hi)) throw std::invalid_argument("sturm_count: empty interval");
  SturmCount out;
  IntPolynomial q = squarefree_part(p);
  if (q.eval_sign(lo) == 0) {
    q = divide_exact(q, linear_factor(lo));
    out.lo_is_root = true;
  }
  if (hi && q.eval_sign(*hi) == 0) {
    q = divide_exact(q, linear_factor(*hi));
    out.hi_is_root = true;
  }
  if (q.degree() <= 0) return out;
  SturmSequence seq(q);
  out.count = seq.variations(lo) - (hi ? seq.variations(*hi) : seq.variations_at_pos_inf());
  return out;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() <= 0) return out;
  // With p = prod f_i^i and w = prod f_i: gcd(w, p / w) drops f_1, and so on.
  IntPolynomial rest = p.primitive_part();
  IntPolynomial w = squarefree_part(rest);
  for (int i = 1; w.degree() > 0; ++i) {
    rest = divide_exact(rest, w);
    IntPolynomial y = gcd(w, rest);
    IntPolynomial fi = divide_exact(w, y);
    if (fi.degree() > 0) out.push_back({fi.primitive_part(), i});
    w = std::move(y);
  }
  return out;
}

int count_with_multiplicity(const IntPolynomial& p, const Rational& lo, const std::optional<Rational>& hi) {
  int total = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) total += mult * sturm_count(factor, lo, hi).count;
  return total;
}

BigInt root_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  BigInt m = 0;
  const BigInt lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    BigInt c = abs(p.coeff(i));
    if (c > m) m = c;
  }
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lead.get_mpz_t());
  return q + 2;
}

namespace {

void refine_simple(const IntPolynomial& q, Rational lo, Rational hi, const Rational& width,
                   RootInterval& out) {
  int slo = q.eval_sign(lo);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    int sm = q.eval_sign(mid);
    if (sm == 0) {
      out = {mid, mid};
      return;
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  out = {lo, hi};
}

void isolate_squarefree(const IntPolynomial& q, const Rational& width, std::vector<RootInterval>& out) {
  if (q.degree() <= 0) return;
  SturmSequence seq(q);
  const BigInt b = root_bound(q);
  struct Job {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Job> stack;
  Rational lo0(-b), hi0(b);
  stack.push_back({lo0, hi0, seq.variations(lo0), seq.variations(hi0)});
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    const int n = j.vlo - j.vhi;
    if (n <= 0) continue;
    if (n == 1) {
      RootInterval r;
      refine_simple(q, j.lo, j.hi, width, r);
      out.push_back(r);
      continue;
    }
    Rational mid = (j.lo + j.hi) / 2;
    int vm = seq.variations(mid);
    if (q.eval_sign(mid) == 0) {
      out.push_back({mid, mid});
      // Step off the exact root so that no later interval ends on it.
      Rational delta = (j.hi - j.lo) / 4;
      while (true) {
        const Rational a = mid - delta, b = mid + delta;
        if (q.eval_sign(a) != 0 && q.eval_sign(b) != 0 && seq.variations(a) - seq.variations(b) == 1) {
          stack.push_back({j.lo, a, j.vlo, seq.variations(a)});
          stack.push_back({b, j.hi, seq.variations(b), j.vhi});
          break;
        }
        delta /= 2;
      }
    } else {
      stack.push_back({j.lo, mid, j.vlo, vm});
      stack.push_back({mid, j.hi, vm, j.vhi});
    }
  }
}

void sort_intervals(std::vector<RootInterval>& v) {
  std::sort(v.begin(), v.end(), [](const RootInterval& a, const RootInterval& b) {
    return a.lo + a.hi < b.lo + b.hi;
  });
}

}  // namespace

std::vector<RootInterval> isolate_roots(const IntPolynomial& p, const Rational& width_in) {
  const Rational width = canonical(width_in);
  if (!(width > 0)) throw std::invalid_argument("isolate_roots: width must be positive");
  std::vector<RootInterval> out;
  isolate_squarefree(squarefree_part(p), width, out);
  sort_intervals(out);
  return out;
}

std::vector<IsolatedRoot> isolate_roots_with_multiplicity(const IntPolynomial& p, const Rational& width_in) {
  const Rational width = canonical(width_in);
  if (!(width > 0)) throw std::invalid_argument("isolate_roots: width must be positive");
  std::vector<IsolatedRoot> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    std::vector<RootInterval> roots;
    isolate_squarefree(factor, width, roots);
    for (auto& r : roots) out.push_back({r, mult});
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
    return a.where.lo + a.where.hi < b.where.lo + b.where.hi;
  });
  return out;
}

SumBracket sum_of_largest_roots(const IntPolynomial& p, int k, const Rational& width) {
  if (k < 0) throw std::invalid_argument("sum_of_largest_roots: negative k");
  auto roots = isolate_roots_with_multiplicity(p, width);
  std::vector<Rational> los, his;
  for (const auto& r : roots)
    for (int m = 0; m < r.multiplicity; ++m) {
      los.push_back(r.where.lo);
      his.push_back(r.where.hi);
    }
  if (static_cast<int>(los.size()) < k) throw std::domain_error("sum_of_largest_roots: fewer than k real roots");
  // The sum of the k largest entries is monotone in every entry.
  auto top = [k](std::vector<Rational>& v) {
    std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return a > b; });
    Rational s = 0;
    for (int i = 0; i < k; ++i) s += v[i];
    return s;
  };
  return {top(los), top(his)};
}

int compare_sum_of_largest_roots(const IntPolynomial& p, int k, const Rational& threshold_in,
                                 const Rational& min_width_in) {
  const Rational threshold = canonical(threshold_in), min_width = canonical(min_width_in);
  Rational width(1, 1024);
  while (true) {
    SumBracket b = sum_of_largest_roots(p, k, width);
    if (b.lo > threshold) return 1;
    if (b.hi < threshold) return -1;
    if (b.lo == b.hi) return 0;
    if (width < min_width) return 0;
    width /= 1024;
  }
}

}  // namespace spectree
