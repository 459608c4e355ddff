#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "solenoid/xi.hpp"

namespace solenoid {

class KElement;

template <class T>
using Matrix2 = std::array<std::array<T, 2>, 2>;

template <class T>
Matrix2<T> mat_mul(const Matrix2<T>& a, const Matrix2<T>& b) {
  Matrix2<T> c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

/// (z, x) in Z x Q_N with the twisted addition of the context alpha.
class QGroupElement {
 public:
  QGroupElement(const XiElement& context, Int z, QnRational x);

  const Int& z() const { return z_; }
  const QnRational& x() const { return x_; }
  const XiElement& context() const { return *ctx_; }
  std::shared_ptr<const XiElement> context_ptr() const { return ctx_; }

  friend bool operator==(const QGroupElement& a, const QGroupElement& b) {
    return a.z_ == b.z_ && a.x_ == b.x_ && *a.ctx_ == *b.ctx_;
  }

 private:
  QGroupElement(std::shared_ptr<const XiElement> ctx, Int z, QnRational x)
      : ctx_(std::move(ctx)), z_(std::move(z)), x_(std::move(x)) {}
  friend QGroupElement q_add(const XiElement&, const QGroupElement&, const QGroupElement&);
  friend QGroupElement q_neg(const XiElement&, const QGroupElement&);
  friend QGroupElement omega_from_k(const XiElement&, const KElement&);
  std::shared_ptr<const XiElement> ctx_;
  Int z_;
  QnRational x_;
};

/// (z + p J_k / N^k, p / N^k), an element of the K_0 group of alpha inside Q x Q_N.
class KElement {
 public:
  // Throws NotInK when the membership condition fails.
  KElement(const XiElement& context, Rat first, QnRational second);

  const Rat& first() const { return first_; }
  const QnRational& second() const { return second_; }
  const XiElement& context() const { return *ctx_; }

  friend bool operator==(const KElement& a, const KElement& b) {
    return a.first_ == b.first_ && a.second_ == b.second_ && *a.ctx_ == *b.ctx_;
  }

 private:
  KElement(std::shared_ptr<const XiElement> ctx, Rat first, QnRational second)
      : ctx_(std::move(ctx)), first_(std::move(first)), second_(std::move(second)) {}
  friend KElement omega_to_k(const XiElement&, const QGroupElement&);
  friend KElement k_add(const KElement&, const KElement&);
  friend QGroupElement omega_from_k(const XiElement&, const KElement&);
  std::shared_ptr<const XiElement> ctx_;
  Rat first_;
  QnRational second_;
};

NadicInteger j_seq(const XiElement& a);

Int xi_cocycle(const NadicInteger& j, const QnRational& x, const QnRational& y);

QGroupElement q_add(const XiElement& a, const QGroupElement& u, const QGroupElement& v);
QGroupElement q_neg(const XiElement& a, const QGroupElement& u);

KElement omega_to_k(const XiElement& a, const QGroupElement& u);
QGroupElement omega_from_k(const XiElement& a, const KElement& e);
KElement k_add(const KElement& e, const KElement& f);

bool k_member(const XiElement& a, const Rat& first, const QnRational& second);
QnRational k_project(const KElement& e);

Rat trace_lift(const XiElement& a, const KElement& e);
Rat trace_lift(const XiElement& a, const QGroupElement& u);

// r_k = N j_{2k+1} + j_{2k}.
Int stage_remainder(const XiElement& a, unsigned long k);
// [[1, -r_k], [0, N^2]], the connecting map compatible with upsilon_matrix.
Matrix2<Int> phi_k0_matrix(const XiElement& a, unsigned long k);
// [[1, J_{2k}/N^{2k}], [0, 1/N^{2k}]].
Matrix2<Rat> upsilon_matrix(const XiElement& a, unsigned long k);

// frac(p J_k / N^k) - p J_k / N^k.
Int mu_cochain(const NadicInteger& j, const QnRational& x);
Angle prufer_pair(const NadicInteger& j, const QnRational& x);
// s(z1) + s(z2) - s(z1 + z2) with s the representative in [0, 1).
Int frac_cross_section_cocycle(const Rat& z1, const Rat& z2);
Int zeta_cocycle(const NadicInteger& j, const QnRational& x, const QnRational& y);

/// A map Q_N -> Z described by an evaluation rule; may be partial.
class CochainSpec {
 public:
  using Eval = std::function<std::optional<Int>(const QnRational&)>;

  CochainSpec(Modulus n, Eval eval) : n_(n), eval_(std::move(eval)) {}

  static CochainSpec zero(Modulus n);
  // psi(p/N^k) = p * g[k] in reduced form; undefined for k >= g.size().
  static CochainSpec from_generators(Modulus n, std::vector<Int> g);
  static CochainSpec mu(const NadicInteger& j);

  Modulus modulus() const { return n_; }
  std::optional<Int> try_at(const QnRational& x) const;
  // Throws PartialCochain where undefined.
  Int at(const QnRational& x) const;

  CochainSpec operator-() const;
  friend CochainSpec operator+(const CochainSpec& a, const CochainSpec& b);
  CochainSpec scaled(const Int& c) const;

 private:
  Modulus n_;
  Eval eval_;
};

// c(x) + c(y) - c(x + y).
Int coboundary(const CochainSpec& c, const QnRational& x, const QnRational& y);

struct CohomologyWitness {
  Int psi1;
  CochainSpec psi;
};

// When J - R is an integer d, returns psi with xi_J - xi_R = coboundary(psi) and psi(1) = -d.
// The test is J - R in iota(Z), which is wider than "J_n = R_n for all large n":
// iota(-1) and iota(0) differ in every digit yet are cohomologous.
std::optional<CohomologyWitness> cohomologous(const NadicInteger& j, const NadicInteger& r);

struct WeakVerdict {
  enum class Kind { Yes, No, Unknown };
  // ScaledFirst: N^k J - R is an integer. ScaledSecond: N^k R - J is.
  enum class Direction { ScaledFirst, ScaledSecond };
  Kind kind = Kind::Unknown;
  unsigned long k = 0;
  Direction direction = Direction::ScaledFirst;
  std::string reason;
};

WeakVerdict weakly_equivalent(const NadicInteger& j, const NadicInteger& r, unsigned long bound);

}  // namespace solenoid
