#pragma once

// Reference computations for the tests. They work from the definitions
// (digit by digit, term by term) and avoid the library's closed forms.

#include <random>
#include <vector>

#include "solenoid/xi.hpp"

namespace ref {

using solenoid::Int;
using solenoid::Modulus;
using solenoid::Rat;

// Digits of a/b (gcd(b, N) = 1): d = the unique residue with b d = a mod N,
// then a <- (a - b d) / N.
inline std::vector<unsigned long> digits(const Rat& v, Modulus n, unsigned long count) {
  Int a = v.get_num(), b = v.get_den();
  std::vector<unsigned long> out;
  for (unsigned long i = 0; i < count; ++i) {
    unsigned long d = 0;
    while (true) {
      Int t = a - b * d;
      if (mpz_divisible_ui_p(t.get_mpz_t(), n)) break;
      ++d;
    }
    out.push_back(d);
    a = (a - b * d) / n;
  }
  return out;
}

inline Int J(const Rat& v, Modulus n, unsigned long k) {
  auto d = digits(v, n, k);
  Int acc = 0, pw = 1;
  for (unsigned long i = 0; i < k; ++i, pw *= n) acc += pw * d[i];
  return acc;
}

inline Rat frac(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rat(q);
}

inline Int floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

// alpha_0, ..., alpha_{count-1} from N alpha_{n+1} = alpha_n + j_n.
inline std::vector<Rat> alphas(const Rat& base, const Rat& carrier, Modulus n, unsigned long count) {
  auto d = digits(carrier, n, count);
  std::vector<Rat> out{base};
  for (unsigned long i = 0; i + 1 < count; ++i) {
    Rat next = (out.back() + Rat(d[i])) / Rat(n);
    out.push_back(next);
  }
  return out;
}

// Reduced (p, k) of a rational with denominator a power of N.
inline std::pair<Int, unsigned long> reduce(Rat x, Modulus n) {
  unsigned long k = 0;
  while (x.get_den() != 1) {
    x *= n;
    ++k;
  }
  return {x.get_num(), k};
}

// c(x) = x J_{k(x)} at the reduced exponent; xi is its coboundary.
inline Rat c(const Rat& carrier, Modulus n, const Rat& x) {
  auto [p, k] = reduce(x, n);
  Int nk = 1;
  for (unsigned long i = 0; i < k; ++i) nk *= n;
  return Rat(p * J(carrier, n, k)) / Rat(nk);
}

inline Rat xi(const Rat& carrier, Modulus n, const Rat& x, const Rat& y) {
  return c(carrier, n, x) + c(carrier, n, y) - c(carrier, n, x + y);
}

inline Rat zeta(const Rat& carrier, Modulus n, const Rat& x, const Rat& y) {
  auto [p1, k1] = reduce(x, n);
  auto [p2, k2] = reduce(y, n);
  unsigned long m = std::max(k1, k2);
  return frac(c(carrier, n, x)) + frac(c(carrier, n, y)) -
         frac((x + y) * Rat(J(carrier, n, m)));
}

// Random p/N^k with |p| <= bound and k <= max_exp.
inline Rat random_qn(std::mt19937_64& rng, Modulus n, long bound, unsigned long max_exp) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<unsigned long> ex(0, max_exp);
  Int nk = 1;
  for (unsigned long i = ex(rng); i > 0; --i) nk *= n;
  return Rat(Int(num(rng))) / Rat(nk);
}

}  // namespace ref
