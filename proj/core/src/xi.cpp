#include "solenoid/xi.hpp"

#include <map>

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

void same_modulus(Modulus a, Modulus b) {
  if (a != b)
    throw Error(ErrorKind::ModulusMismatch, std::to_string(a) + " vs " + std::to_string(b));
}

bool in_unit_interval(const Rat& x) { return x >= 0 && x < 1; }

std::optional<unsigned long> prefix_bound(const XiElement& a) {
  auto len = a.carrier().prefix_length();
  if (len) return *len;
  return std::nullopt;
}

}  // namespace

XiElement XiElement::as_surrogate(bool flag) const {
  XiElement out = *this;
  out.surrogate_ = flag;
  return out;
}

XiElement xi_new(Modulus n, const Rat& base, const NadicInteger& carrier) {
  same_modulus(n, carrier.modulus());
  if (!in_unit_interval(base))
    throw Error(ErrorKind::InvalidValue, "alpha_0 = " + to_string(base) + " outside [0, 1)");
  XiElement out(base, carrier);
  auto len = prefix_bound(out);
  for (unsigned long i = 1; i <= 2; ++i) {
    if (len && i > *len) break;
    if (!in_unit_interval(xi_value(out, i)))
      throw Error(ErrorKind::InvalidValue, "alpha_" + std::to_string(i) + " outside [0, 1)");
  }
  return out;
}

XiElement xi_zero(Modulus n) { return xi_new(n, Rat(0), zn_iota(0, n)); }

XiElement xi_constant(Modulus n, const Rat& value) {
  return xi_new(n, value, NadicInteger::from_rational(n, -value));
}

Rat xi_value(const XiElement& a, unsigned long n) {
  return (a.base() + Rat(zn_at(a.carrier(), n))) / Rat(ipow(a.modulus(), n));
}

unsigned long xi_digit(const XiElement& a, unsigned long n) { return zn_digit(a.carrier(), n); }

XiElement xi_add(const XiElement& a, const XiElement& b) {
  same_modulus(a.modulus(), b.modulus());
  Rat s = a.base() + b.base();
  Int carry = floor_of(s);
  NadicInteger c = zn_add(zn_add(a.carrier(), b.carrier()), zn_iota(carry, a.modulus()));
  return xi_new(a.modulus(), s - Rat(carry), c);
}

XiElement xi_neg(const XiElement& a) {
  Int borrow = a.base() == 0 ? 0 : 1;
  NadicInteger c = zn_sub(zn_neg(a.carrier()), zn_iota(borrow, a.modulus()));
  return xi_new(a.modulus(), frac(-a.base()), c);
}

XiElement xi_sub(const XiElement& a, const XiElement& b) { return xi_add(a, xi_neg(b)); }

XiElement xi_scale(const XiElement& a, const Int& m) {
  Rat s = a.base() * Rat(m);
  Int whole = floor_of(s);
  NadicInteger c = zn_add(zn_scale(a.carrier(), m), zn_iota(whole, a.modulus()));
  return xi_new(a.modulus(), s - Rat(whole), c);
}

XiElement xi_shift(const XiElement& a, unsigned long k) {
  return xi_new(a.modulus(), xi_value(a, k), zn_tail(a.carrier(), k));
}

std::pair<Rat, NadicInteger> xi_decompose(const XiElement& a) { return {a.base(), a.carrier()}; }

Rat xi_invariant(const XiElement& a) { return a.base() + a.carrier().rational(); }

std::optional<unsigned long> xi_is_periodic(const XiElement& a) {
  if (!a.carrier().is_rational())
    throw Error(ErrorKind::Undecidable, "periodicity of a finite prefix is undecidable");
  if (xi_invariant(a) != 0) return std::nullopt;
  auto k = mult_order(Int(a.modulus()), a.base().get_den(), kPeriodCap);
  if (!k) throw Error(ErrorKind::Overflow, "period exceeds " + std::to_string(kPeriodCap));
  return k;
}

bool xi_range_finite(const XiElement& a) { return xi_is_periodic(a).has_value(); }

PeriodicityConditions periodicity_conditions(const XiElement& a, unsigned long bound) {
  PeriodicityConditions out;
  out.period = xi_is_periodic(a);
  out.range_finite = out.period.has_value();
  std::map<Rat, unsigned long> seen;
  for (unsigned long k = 0; k <= bound && !out.repeat; ++k) {
    auto [it, fresh] = seen.emplace(xi_value(a, k), k);
    if (!fresh) out.repeat = std::make_pair(it->second, k);
  }
  Int n(a.modulus());
  Int nk = n;
  for (unsigned long k = 1; k <= bound; ++k, nk *= n) {
    if (is_integer(Rat(nk - 1) * a.base())) {
      out.root = k;
      break;
    }
  }
  return out;
}

Angle pairing(const XiElement& a, const QnRational& x) {
  same_modulus(a.modulus(), x.modulus());
  return Angle(xi_value(a, x.exp()) * Rat(x.num()));
}

XiLambdaElement::XiLambdaElement(PrimeSeq lambda, Rat base, std::vector<unsigned long> digits)
    : lambda_(std::move(lambda)), base_(std::move(base)), digits_(std::move(digits)) {
  if (!in_unit_interval(base_))
    throw Error(ErrorKind::InvalidValue, "gamma_0 = " + to_string(base_) + " outside [0, 1)");
  for (std::size_t i = 0; i < digits_.size(); ++i)
    if (digits_[i] >= lambda_.at(i))
      throw Error(ErrorKind::InvalidValue, "digit " + std::to_string(i) + " exceeds Lambda_i");
}

Rat XiLambdaElement::value(std::size_t i) const {
  if (i > digits_.size())
    throw Error(ErrorKind::OutOfRange, "index " + std::to_string(i) + " beyond refined depth");
  Rat g = base_;
  for (std::size_t t = 0; t < i; ++t) g = (g + Rat(digits_[t])) / Rat(lambda_.at(t));
  return g;
}

XiElement omega_lambda(const XiLambdaElement& b) {
  const PrimeSeq& lam = b.lambda();
  std::size_t om = lam.omega();
  Int nu = lam.nu();
  if (!nu.fits_ulong_p()) throw Error(ErrorKind::Overflow, "period product too large");
  Modulus n = nu.get_ui();
  std::size_t steps = b.depth() / om;
  std::vector<unsigned long> digits(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    Int d = 0;
    Int weight = 1;
    for (std::size_t j = 0; j < om; ++j) {
      d += weight * b.digits()[s * om + j];
      weight *= lam.at(j);
    }
    digits[s] = d.get_ui();
  }
  return xi_new(n, b.base(), NadicInteger::from_prefix(n, std::move(digits)));
}

XiLambdaElement omega_lambda_inv(const XiElement& a, std::size_t depth) {
  return omega_lambda_inv(a, prime_seq_of(a.modulus()), depth);
}

XiLambdaElement omega_lambda_inv(const XiElement& a, const PrimeSeq& lambda, std::size_t depth) {
  if (lambda.nu() != Int(a.modulus()))
    throw Error(ErrorKind::InvalidValue, "period product differs from N");
  std::size_t om = lambda.omega();
  std::vector<unsigned long> digits;
  digits.reserve(depth * om);
  for (std::size_t s = 0; s < depth; ++s) {
    unsigned long m = xi_digit(a, s);
    for (std::size_t j = 0; j < om; ++j) {
      digits.push_back(m % lambda.at(j));
      m /= lambda.at(j);
    }
  }
  return XiLambdaElement(lambda, a.base(), std::move(digits));
}

}  // namespace solenoid
