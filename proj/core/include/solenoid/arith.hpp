#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace solenoid {

using Int = mpz_class;
using Rat = mpq_class;
using Modulus = unsigned long;

Rat make_rat(const Int& num, const Int& den);
inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int numer(const Rat& x) { return x.get_num(); }
inline Int denom(const Rat& x) { return x.get_den(); }
inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

Int floor_of(const Rat& x);
// Representative of x mod 1 in [0, 1).
Rat frac(const Rat& x);
// Representative of a mod m in [0, m), m > 0.
Int mod_floor(const Int& a, const Int& m);
Int floor_div(const Int& a, const Int& b);

Int ipow(const Int& base, unsigned long e);
inline Int ipow(unsigned long base, unsigned long e) { return ipow(Int(base), e); }

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
// Throws InvalidValue when a is not invertible mod m.
Int inverse_mod(const Int& a, const Int& m);

// Multiplicative order of n modulo m (gcd(n, m) = 1). Returns nullopt past cap.
std::optional<unsigned long> mult_order(const Int& n, const Int& m, unsigned long cap);

// Largest e with base^e | x, for x != 0 and base > 1.
unsigned long valuation(Int x, unsigned long base);

// Sorted prime factorization with multiplicity, by trial division.
std::vector<unsigned long> prime_factors(unsigned long n);
bool is_prime(unsigned long n);
// True when every prime factor of x divides n.
bool smooth_over(Int x, unsigned long n);

// "a/b", "-a/b" or "a". Anything else (decimals, exponents, spaces) is rejected.
Rat parse_rat(std::string_view text);
Int parse_int(std::string_view text);
// Integers print without a denominator.
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

}  // namespace solenoid
