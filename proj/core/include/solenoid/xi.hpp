#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solenoid/nadic.hpp"

namespace solenoid {

/// A point exp(2i pi theta) of the circle, stored as theta in [0, 1).
class Angle {
 public:
  Angle() = default;
  explicit Angle(const Rat& theta) : theta_(frac(theta)) {}

  const Rat& value() const { return theta_; }
  bool is_zero() const { return theta_ == 0; }
  std::string str() const { return to_string(theta_); }

  Angle operator+(const Angle& o) const { return Angle(theta_ + o.theta_); }
  Angle operator-(const Angle& o) const { return Angle(theta_ - o.theta_); }
  Angle operator-() const { return Angle(-theta_); }
  Angle operator*(const Int& m) const { return Angle(theta_ * Rat(m)); }
  Angle& operator+=(const Angle& o) { return *this = *this + o; }

  friend bool operator==(const Angle& a, const Angle& b) { return a.theta_ == b.theta_; }
  friend bool operator<(const Angle& a, const Angle& b) { return a.theta_ < b.theta_; }

 private:
  Rat theta_ = 0;
};

/// An element of Xi_N: base alpha_0 in [0, 1) and carrier J, with
/// alpha_n = (alpha_0 + J_n) / N^n.
class XiElement {
 public:
  Modulus modulus() const { return carrier_.modulus(); }
  const Rat& base() const { return base_; }
  const NadicInteger& carrier() const { return carrier_; }
  // Marks a rational stand-in for an irrational parameter.
  bool surrogate() const { return surrogate_; }
  XiElement as_surrogate(bool flag = true) const;

  friend bool operator==(const XiElement& a, const XiElement& b) {
    return a.base_ == b.base_ && a.carrier_ == b.carrier_;
  }

 private:
  friend XiElement xi_new(Modulus n, const Rat& base, const NadicInteger& carrier);
  XiElement(Rat base, NadicInteger carrier) : base_(std::move(base)), carrier_(std::move(carrier)) {}
  Rat base_;
  NadicInteger carrier_;
  bool surrogate_ = false;
};

XiElement xi_new(Modulus n, const Rat& base, const NadicInteger& carrier);
XiElement xi_zero(Modulus n);
// The element with constant value a/b, b prime to N.
XiElement xi_constant(Modulus n, const Rat& value);

Rat xi_value(const XiElement& a, unsigned long n);
unsigned long xi_digit(const XiElement& a, unsigned long n);
XiElement xi_add(const XiElement& a, const XiElement& b);
XiElement xi_neg(const XiElement& a);
XiElement xi_sub(const XiElement& a, const XiElement& b);
// Termwise multiplication by an integer: (m alpha)_n = frac(m alpha_n).
XiElement xi_scale(const XiElement& a, const Int& m);
// The sequence (alpha_{n+k})_n.
XiElement xi_shift(const XiElement& a, unsigned long k);

std::pair<Rat, NadicInteger> xi_decompose(const XiElement& a);
inline XiElement xi_recompose(Modulus n, const Rat& base, const NadicInteger& carrier) {
  return xi_new(n, base, carrier);
}

// alpha_0 + J as a rational; additive, zero exactly on periodic elements.
Rat xi_invariant(const XiElement& a);

inline constexpr unsigned long kPeriodCap = 1000000;

std::optional<unsigned long> xi_is_periodic(const XiElement& a);
bool xi_range_finite(const XiElement& a);

// The periodicity-style conditions evaluated one by one, up to `bound`.
struct PeriodicityConditions {
  bool range_finite = false;
  // First pair j < k <= bound with alpha_j = alpha_k.
  std::optional<std::pair<unsigned long, unsigned long>> repeat;
  // Least 0 < k <= bound with (N^k - 1) alpha_0 integral.
  std::optional<unsigned long> root;
  std::optional<unsigned long> period;
};
PeriodicityConditions periodicity_conditions(const XiElement& a, unsigned long bound);

Angle pairing(const XiElement& a, const QnRational& x);

/// A sequence over a prime sequence Lambda: base gamma_0 and digits d_i in
/// [0, Lambda_i), with gamma_{i+1} = (gamma_i + d_i) / Lambda_i.
class XiLambdaElement {
 public:
  XiLambdaElement(PrimeSeq lambda, Rat base, std::vector<unsigned long> digits);

  const PrimeSeq& lambda() const { return lambda_; }
  const Rat& base() const { return base_; }
  const std::vector<unsigned long>& digits() const { return digits_; }
  std::size_t depth() const { return digits_.size(); }
  Rat value(std::size_t i) const;

  friend bool operator==(const XiLambdaElement&, const XiLambdaElement&) = default;

 private:
  PrimeSeq lambda_;
  Rat base_;
  std::vector<unsigned long> digits_;
};

// Samples every Omega steps; the carrier is the resulting finite prefix.
XiElement omega_lambda(const XiLambdaElement& b);
// Refines alpha to `depth` N-steps over lambda (default: sorted factorization).
XiLambdaElement omega_lambda_inv(const XiElement& a, std::size_t depth);
XiLambdaElement omega_lambda_inv(const XiElement& a, const PrimeSeq& lambda, std::size_t depth);

}  // namespace solenoid
