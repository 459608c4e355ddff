#include "solenoid/multiplier.hpp"

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

void check(const XiElement& a, const QnRational& x) {
  if (a.modulus() != x.modulus())
    throw Error(ErrorKind::ModulusMismatch,
                std::to_string(a.modulus()) + " vs " + std::to_string(x.modulus()));
}

void check(const XiElement& a, const QnPoint& g) {
  check(a, g.x1);
  check(a, g.x2);
}

Rat term(const XiElement& a, const QnRational& x, const QnRational& y) {
  if (x.is_zero() || y.is_zero()) return 0;
  return xi_value(a, x.exp() + y.exp()) * Rat(x.num() * y.num());
}

}  // namespace

QnPoint qn_point(const QnRational& x1, const QnRational& x2) {
  if (x1.modulus() != x2.modulus())
    throw Error(ErrorKind::ModulusMismatch, "point components differ in modulus");
  return {x1, x2};
}

QnPoint qn_point_add(const QnPoint& g, const QnPoint& h) {
  return {qn_add(g.x1, h.x1), qn_add(g.x2, h.x2)};
}

Angle psi(const XiElement& a, const QnPoint& g, const QnPoint& h) {
  check(a, g);
  check(a, h);
  return Angle(term(a, g.x1, h.x2));
}

Angle theta(const XiElement& a, const QnPoint& g, const QnPoint& h) {
  return psi(a, g, h) - psi(a, h, g);
}

Angle bichar_eval(const XiElement& zeta, const XiElement& xi, const XiElement& eta,
                  const XiElement& chi, const QnPoint& g, const QnPoint& h) {
  for (const XiElement* e : {&xi, &eta, &chi}) {
    if (e->modulus() != zeta.modulus())
      throw Error(ErrorKind::ModulusMismatch, "bicharacter parameters differ in modulus");
  }
  check(zeta, g);
  check(zeta, h);
  return Angle(term(zeta, g.x1, h.x1) + term(eta, g.x2, h.x1) + term(chi, g.x2, h.x2) +
               term(xi, g.x1, h.x2));
}

Angle action_phase(const XiElement& a, const QnRational& x, unsigned long n) {
  check(a, x);
  if (x.is_zero()) return Angle();
  return Angle(xi_value(a, x.exp() + n) * Rat(x.num()));
}

bool SymmetrizerDescription::contains(const QnPoint& g) const {
  switch (variant) {
    case Variant::Full: return true;
    case Variant::Trivial: return g.x1.is_zero() && g.x2.is_zero();
    case Variant::ScaledLattice:
      return mpz_divisible_p(g.x1.num().get_mpz_t(), b.get_mpz_t()) &&
             mpz_divisible_p(g.x2.num().get_mpz_t(), b.get_mpz_t());
  }
  return false;
}

const char* variant_name(SymmetrizerDescription::Variant v) {
  switch (v) {
    case SymmetrizerDescription::Variant::Trivial: return "Trivial";
    case SymmetrizerDescription::Variant::Full: return "Full";
    case SymmetrizerDescription::Variant::ScaledLattice: return "ScaledLattice";
  }
  return "?";
}

SymmetrizerDescription symmetrizer(const XiElement& a) {
  auto period = xi_is_periodic(a);
  SymmetrizerDescription out;
  if (!period) return out;
  if (a.base() == 0 && a.carrier().rational() == 0) {
    out.variant = SymmetrizerDescription::Variant::Full;
    return out;
  }
  Int b = 1;
  for (unsigned long n = 0; n < *period; ++n) b = lcm(b, xi_value(a, n).get_den());
  out.variant = SymmetrizerDescription::Variant::ScaledLattice;
  out.b = b;
  return out;
}

bool is_simple(const XiElement& a) { return !xi_is_periodic(a).has_value(); }

const char* class_name(SolenoidClass c) {
  switch (c) {
    case SolenoidClass::RationalPeriodic: return "RationalPeriodic";
    case SolenoidClass::RationalAperiodic: return "RationalAperiodic";
    case SolenoidClass::IrrationalSurrogate: return "IrrationalSurrogate";
  }
  return "?";
}

SolenoidClass classify_type(const XiElement& a) {
  if (a.surrogate()) return SolenoidClass::IrrationalSurrogate;
  return xi_is_periodic(a) ? SolenoidClass::RationalPeriodic : SolenoidClass::RationalAperiodic;
}

}  // namespace solenoid
