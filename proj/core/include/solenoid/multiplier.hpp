#pragma once

#include "solenoid/xi.hpp"

namespace solenoid {

/// An element of Q_N x Q_N.
struct QnPoint {
  QnRational x1;
  QnRational x2;

  friend bool operator==(const QnPoint&, const QnPoint&) = default;
};

QnPoint qn_point(const QnRational& x1, const QnRational& x2);
QnPoint qn_point_add(const QnPoint& g, const QnPoint& h);

// alpha_{k1+k4} p1 p4 mod 1.
Angle psi(const XiElement& a, const QnPoint& g, const QnPoint& h);
// psi(g, h) - psi(h, g).
Angle theta(const XiElement& a, const QnPoint& g, const QnPoint& h);
Angle bichar_eval(const XiElement& zeta, const XiElement& xi, const XiElement& eta,
                  const XiElement& chi, const QnPoint& g, const QnPoint& h);
// p alpha_{k+n} mod 1.
Angle action_phase(const XiElement& a, const QnRational& x, unsigned long n);

struct SymmetrizerDescription {
  enum class Variant { Trivial, Full, ScaledLattice };
  Variant variant = Variant::Trivial;
  // Meaningful for ScaledLattice only.
  Int b = 0;

  bool contains(const QnPoint& g) const;
  friend bool operator==(const SymmetrizerDescription&, const SymmetrizerDescription&) = default;
};

const char* variant_name(SymmetrizerDescription::Variant v);

SymmetrizerDescription symmetrizer(const XiElement& a);
bool is_simple(const XiElement& a);

enum class SolenoidClass { RationalPeriodic, RationalAperiodic, IrrationalSurrogate };
const char* class_name(SolenoidClass c);
SolenoidClass classify_type(const XiElement& a);

}  // namespace solenoid
