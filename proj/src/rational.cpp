#include "spectree/rational.hpp"

#include <stdexcept>

namespace spectree {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto valid_int = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string part) {
    if (!part.empty() && part[0] == '+') part.erase(0, 1);
    return part;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
    BigInt n(strip_plus(num)), d(den);
    if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + s + "'");
    return make_rational(n, d);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    std::string sign_part;
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
      sign_part = whole.substr(0, 1);
      whole.erase(0, 1);
    }
    if (whole.empty()) whole = "0";
    if (!valid_int(whole, false) || !valid_int(frac, false)) throw bad();
    BigInt n(whole + frac);
    if (sign_part == "-") n = -n;
    BigInt d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    return make_rational(n, d);
  }
  if (!valid_int(s, true)) throw bad();
  return Rational(BigInt(strip_plus(s)));
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

int sign(const Rational& q) { return sgn(q); }
int sign(const BigInt& z) { return sgn(z); }

BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt isqrt(const BigInt& z) {
  if (z < 0) throw std::domain_error("isqrt of negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

long isqrt(long z) { return isqrt(BigInt(z)).get_si(); }

}  // namespace spectree
