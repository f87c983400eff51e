#include "twc/rational.hpp"

#include <stdexcept>

namespace twc {

std::string to_string(const Rational &q) { return q.get_str(); }

std::string to_string(const Integer &z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](const std::string &part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational: " + s);
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

Rational pow2(int e) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer falling_factorial(int n, int k) {
  if (k < 0) throw std::invalid_argument("negative falling factorial length");
  if (k > n) return 0;
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

Integer to_integer(const Rational &q) {
  if (q.get_den() != 1) throw std::domain_error("not an integer: " + q.get_str());
  return q.get_num();
}

}  // namespace twc
