#include "solenoid/arith.hpp"

#include <cctype>

#include "solenoid/error.hpp"

namespace solenoid {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorKind::InvalidValue, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw Error(ErrorKind::InvalidValue, "division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor_of(const Rat& x) { return floor_div(x.get_num(), x.get_den()); }

Rat frac(const Rat& x) { return x - Rat(floor_of(x)); }

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int inverse_mod(const Int& a, const Int& m) {
  if (m == 1) return 0;
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(ErrorKind::InvalidValue, "no inverse of " + a.get_str() + " mod " + m.get_str());
  return r;
}

std::optional<unsigned long> mult_order(const Int& n, const Int& m, unsigned long cap) {
  if (m <= 1) return 1;
  if (gcd(n, m) != 1) throw Error(ErrorKind::InvalidValue, "order of non-unit");
  Int base = mod_floor(n, m);
  Int x = base;
  for (unsigned long k = 1; k <= cap; ++k) {
    if (x == 1) return k;
    x = (x * base) % m;
  }
  return std::nullopt;
}

unsigned long valuation(Int x, unsigned long base) {
  if (x == 0 || base < 2) throw Error(ErrorKind::InvalidValue, "valuation of zero");
  unsigned long e = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), base)) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), base);
    ++e;
  }
  return e;
}

std::vector<unsigned long> prime_factors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  auto f = prime_factors(n);
  return f.size() == 1;
}

bool smooth_over(Int x, unsigned long n) {
  if (x == 0) return false;
  x = abs(x);
  for (unsigned long p : prime_factors(n)) {
    while (mpz_divisible_ui_p(x.get_mpz_t(), p)) mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
  }
  return x == 1;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Int parse_int(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw Error(ErrorKind::Parse, "not an integer: \"" + std::string(text) + "\"");
  return Int(std::string(text[0] == '+' ? text.substr(1) : text));
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int den;
  std::string_view d = text.substr(slash + 1);
  if (!all_digits(d)) throw Error(ErrorKind::Parse, "bad denominator in \"" + std::string(text) + "\"");
  den = Int(std::string(d));
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in \"" + std::string(text) + "\"");
  return make_rat(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace solenoid
