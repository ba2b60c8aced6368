#include "spectree/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace spectree {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  c_.reserve(ascending.size());
  for (long x : ascending) c_.emplace_back(x);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational xc = x;
  xc.canonicalize();
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xc + Rational(*it);
  acc.canonicalize();
  return acc;
}

int IntPolynomial::eval_sign(const Rational& x) const {
  // den^d * p(num/den) = sum c_i num^i den^(d-i), an integer of the same sign.
  if (is_zero()) return 0;
  Rational xc = x;
  xc.canonicalize();
  const BigInt& num = xc.get_num();
  const BigInt& den = xc.get_den();
  const int d = degree();
  std::vector<BigInt> den_powers(d + 1);
  den_powers[0] = 1;
  for (int i = 1; i <= d; ++i) den_powers[i] = den_powers[i - 1] * den;
  BigInt acc = 0;
  for (int i = d; i >= 0; --i) acc = acc * num + c_[i] * den_powers[d - i];
  return sgn(acc);
}

double IntPolynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) { return *this = *this * o; }

IntPolynomial& IntPolynomial::operator*=(const BigInt& k) {
  for (auto& c : c_) c *= k;
  trim();
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

IntPolynomial pow(const IntPolynomial& p, int e) {
  if (e < 0) throw std::domain_error("negative polynomial exponent");
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by zero polynomial");
  IntPolynomial r = a;
  const BigInt lb = b.leading();
  const int db = b.degree();
  int steps = 0;
  while (!r.is_zero() && r.degree() >= db) {
    IntPolynomial shifted = b * IntPolynomial::monomial(r.leading(), r.degree() - db);
    r *= lb;
    r -= shifted;
    ++steps;
  }
  if (lb < 0 && (steps % 2 == 1)) r = -r;
  return r;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("divide_exact: divisor degree exceeds dividend");
  std::vector<BigInt> q(a.degree() - b.degree() + 1);
  IntPolynomial r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    if (!mpz_divisible_p(r.leading().get_mpz_t(), b.leading().get_mpz_t()))
      throw std::domain_error("divide_exact: division is not exact over the integers");
    BigInt c;
    mpz_divexact(c.get_mpz_t(), r.leading().get_mpz_t(), b.leading().get_mpz_t());
    const int shift = r.degree() - b.degree();
    q[shift] = c;
    r -= b * IntPolynomial::monomial(c, shift);
  }
  if (!r.is_zero()) throw std::domain_error("divide_exact: nonzero remainder");
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  if (x.degree() == 0) return IntPolynomial::constant(1);
  return x.primitive_part();
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) out += ',';
    out += p.coefficients()[i].get_str();
  }
  return out;
}

IntPolynomial parse_polynomial(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::string s(text);
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.erase(0, 1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
    if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
    BigInt c;
    if (tok.empty() || c.set_str(tok, 10) != 0)
      throw std::invalid_argument("polynomial text: bad coefficient '" + tok + "'");
    coeffs.push_back(c);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return IntPolynomial(std::move(coeffs));
}

std::string to_pretty(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    BigInt c = p.coeff(i);
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

}  // namespace spectree
