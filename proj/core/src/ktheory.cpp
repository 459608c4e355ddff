#include "solenoid/ktheory.hpp"

#include <random>

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

void same_modulus(Modulus a, Modulus b) {
  if (a != b)
    throw Error(ErrorKind::ModulusMismatch, std::to_string(a) + " vs " + std::to_string(b));
}

void same_context(const XiElement& a, const XiElement& b) {
  if (!(a == b)) throw Error(ErrorKind::ContextMismatch, "elements belong to different K-groups");
}

// p J_k / N^k for x = p/N^k reduced.
Rat weighted(const NadicInteger& j, const QnRational& x) {
  same_modulus(j.modulus(), x.modulus());
  if (x.is_zero()) return 0;
  return make_rat(x.num() * zn_at(j, x.exp()), ipow(j.modulus(), x.exp()));
}

std::shared_ptr<const XiElement> share(const XiElement& a) { return std::make_shared<const XiElement>(a); }

}  // namespace

QGroupElement::QGroupElement(const XiElement& context, Int z, QnRational x)
    : ctx_(share(context)), z_(std::move(z)), x_(std::move(x)) {
  same_modulus(context.modulus(), x_.modulus());
}

KElement::KElement(const XiElement& context, Rat first, QnRational second)
    : ctx_(share(context)), first_(std::move(first)), second_(std::move(second)) {
  if (!k_member(context, first_, second_))
    throw Error(ErrorKind::NotInK, "(" + to_string(first_) + ", " + to_string(second_.value()) +
                                       ") is not in the K-group");
}

NadicInteger j_seq(const XiElement& a) { return a.carrier(); }

Int xi_cocycle(const NadicInteger& j, const QnRational& x, const QnRational& y) {
  same_modulus(j.modulus(), x.modulus());
  same_modulus(j.modulus(), y.modulus());
  unsigned long k1 = x.exp(), k2 = y.exp();
  if (k1 < k2) return -x.num() * zn_segment(j, k1, k2);
  if (k1 > k2) return -y.num() * zn_segment(j, k2, k1);
  QnRational s = qn_add(x, y);
  return s.num() * zn_segment(j, s.exp(), k1);
}

QGroupElement q_add(const XiElement& a, const QGroupElement& u, const QGroupElement& v) {
  same_context(a, u.context());
  same_context(a, v.context());
  Int z = u.z() + v.z() + xi_cocycle(a.carrier(), u.x(), v.x());
  return QGroupElement(u.context_ptr(), z, qn_add(u.x(), v.x()));
}

QGroupElement q_neg(const XiElement& a, const QGroupElement& u) {
  same_context(a, u.context());
  QnRational nx = qn_neg(u.x());
  return QGroupElement(u.context_ptr(), -u.z() - xi_cocycle(a.carrier(), u.x(), nx), nx);
}

KElement omega_to_k(const XiElement& a, const QGroupElement& u) {
  same_context(a, u.context());
  return KElement(u.context_ptr(), Rat(u.z()) + weighted(a.carrier(), u.x()), u.x());
}

QGroupElement omega_from_k(const XiElement& a, const KElement& e) {
  same_context(a, e.context());
  Rat z = e.first() - weighted(a.carrier(), e.second());
  if (!is_integer(z)) throw Error(ErrorKind::NotInK, "element is not in the K-group");
  return QGroupElement(e.ctx_, z.get_num(), e.second());
}

KElement k_add(const KElement& e, const KElement& f) {
  same_context(e.context(), f.context());
  return KElement(e.ctx_, e.first() + f.first(), qn_add(e.second(), f.second()));
}

bool k_member(const XiElement& a, const Rat& first, const QnRational& second) {
  if (a.modulus() != second.modulus()) return false;
  return is_integer(first - weighted(a.carrier(), second));
}

QnRational k_project(const KElement& e) { return e.second(); }

Rat trace_lift(const XiElement& a, const KElement& e) {
  same_context(a, e.context());
  const QnRational& x = e.second();
  Rat z = e.first() - weighted(a.carrier(), x);
  if (!is_integer(z)) throw Error(ErrorKind::NotInK, "element is not in the K-group");
  if (x.is_zero()) return z;
  return z + Rat(x.num()) * xi_value(a, x.exp());
}

Rat trace_lift(const XiElement& a, const QGroupElement& u) { return trace_lift(a, omega_to_k(a, u)); }

Int stage_remainder(const XiElement& a, unsigned long k) {
  return Int(a.modulus()) * xi_digit(a, 2 * k + 1) + xi_digit(a, 2 * k);
}

Matrix2<Int> phi_k0_matrix(const XiElement& a, unsigned long k) {
  Int n(a.modulus());
  return {{{Int(1), -stage_remainder(a, k)}, {Int(0), n * n}}};
}

Matrix2<Rat> upsilon_matrix(const XiElement& a, unsigned long k) {
  Int d = ipow(a.modulus(), 2 * k);
  return {{{Rat(1), make_rat(zn_at(a.carrier(), 2 * k), d)}, {Rat(0), make_rat(Int(1), d)}}};
}

Int mu_cochain(const NadicInteger& j, const QnRational& x) { return -floor_of(weighted(j, x)); }

Angle prufer_pair(const NadicInteger& j, const QnRational& x) { return Angle(weighted(j, x)); }

Int frac_cross_section_cocycle(const Rat& z1, const Rat& z2) { return floor_of(frac(z1) + frac(z2)); }

Int zeta_cocycle(const NadicInteger& j, const QnRational& x, const QnRational& y) {
  same_modulus(j.modulus(), x.modulus());
  same_modulus(j.modulus(), y.modulus());
  unsigned long k = std::max(x.exp(), y.exp());
  Rat sum = (x.value() + y.value()) * Rat(zn_at(j, k));
  Rat z = frac(weighted(j, x)) + frac(weighted(j, y)) - frac(sum);
  return z.get_num();
}

CochainSpec CochainSpec::zero(Modulus n) {
  return CochainSpec(n, [](const QnRational&) -> std::optional<Int> { return Int(0); });
}

CochainSpec CochainSpec::from_generators(Modulus n, std::vector<Int> g) {
  return CochainSpec(n, [g = std::move(g)](const QnRational& x) -> std::optional<Int> {
    if (x.is_zero()) return Int(0);
    if (x.exp() >= g.size()) return std::nullopt;
    return x.num() * g[x.exp()];
  });
}

CochainSpec CochainSpec::mu(const NadicInteger& j) {
  return CochainSpec(j.modulus(), [j](const QnRational& x) -> std::optional<Int> { return mu_cochain(j, x); });
}

std::optional<Int> CochainSpec::try_at(const QnRational& x) const {
  same_modulus(n_, x.modulus());
  return eval_(x);
}

Int CochainSpec::at(const QnRational& x) const {
  auto v = try_at(x);
  if (!v) throw Error(ErrorKind::PartialCochain, "cochain undefined at " + to_string(x.value()));
  return *v;
}

CochainSpec CochainSpec::operator-() const { return scaled(Int(-1)); }

CochainSpec CochainSpec::scaled(const Int& c) const {
  return CochainSpec(n_, [eval = eval_, c](const QnRational& x) -> std::optional<Int> {
    auto v = eval(x);
    if (!v) return std::nullopt;
    return Int(*v * c);
  });
}

CochainSpec operator+(const CochainSpec& a, const CochainSpec& b) {
  same_modulus(a.n_, b.n_);
  return CochainSpec(a.n_, [ea = a.eval_, eb = b.eval_](const QnRational& x) -> std::optional<Int> {
    auto u = ea(x);
    auto v = eb(x);
    if (!u || !v) return std::nullopt;
    return Int(*u + *v);
  });
}

Int coboundary(const CochainSpec& c, const QnRational& x, const QnRational& y) {
  return c.at(x) + c.at(y) - c.at(qn_add(x, y));
}

std::optional<CohomologyWitness> cohomologous(const NadicInteger& j, const NadicInteger& r) {
  same_modulus(j.modulus(), r.modulus());
  if (!j.is_rational() || !r.is_rational())
    throw Error(ErrorKind::Undecidable, "cohomology of finite prefixes is undecidable");
  Rat diff = j.rational() - r.rational();
  if (!is_integer(diff)) return std::nullopt;
  Int d = diff.get_num();
  Modulus n = j.modulus();
  CochainSpec psi(n, [j, r, d, n](const QnRational& x) -> std::optional<Int> {
    if (x.is_zero()) return Int(0);
    Int t = zn_at(j, x.exp()) - zn_at(r, x.exp()) - d;
    Int nk = ipow(n, x.exp());
    Int q;
    mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), nk.get_mpz_t());
    return Int(x.num() * q);
  });

  std::mt19937_64 rng(0x5eedULL ^ n);
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<unsigned long> ex(0, 6);
  for (int i = 0; i < 100; ++i) {
    QnRational x = qn_normalize(num(rng), ex(rng), n);
    QnRational y = qn_normalize(num(rng), ex(rng), n);
    if (coboundary(psi, x, y) != xi_cocycle(j, x, y) - xi_cocycle(r, x, y))
      throw Error(ErrorKind::InvalidValue, "cohomology witness failed its replay check");
  }
  return CohomologyWitness{-d, psi};
}

WeakVerdict weakly_equivalent(const NadicInteger& j, const NadicInteger& r, unsigned long bound) {
  same_modulus(j.modulus(), r.modulus());
  Modulus n = j.modulus();
  if (!is_prime(n)) throw Error(ErrorKind::Unsupported, "weak equivalence is only decided for prime N");
  if (!j.is_rational() || !r.is_rational())
    throw Error(ErrorKind::Undecidable, "weak equivalence of finite prefixes is undecidable");
  const Rat& a = j.rational();
  const Rat& c = r.rational();
  WeakVerdict out;
  if (a.get_den() != c.get_den()) {
    out.kind = WeakVerdict::Kind::No;
    out.reason = "denominators " + a.get_den().get_str() + " and " + c.get_den().get_str() + " differ";
    return out;
  }
  Int b = a.get_den();
  auto ord = mult_order(Int(n), b, kPeriodCap);
  unsigned long limit = ord ? std::min(bound, *ord - 1) : bound;
  Int nk = 1;
  for (unsigned long k = 0; k <= limit; ++k, nk *= n) {
    if (mpz_divisible_p(Int(nk * a.get_num() - c.get_num()).get_mpz_t(), b.get_mpz_t())) {
      out.kind = WeakVerdict::Kind::Yes;
      out.k = k;
      out.direction = WeakVerdict::Direction::ScaledFirst;
      return out;
    }
    if (mpz_divisible_p(Int(nk * c.get_num() - a.get_num()).get_mpz_t(), b.get_mpz_t())) {
      out.kind = WeakVerdict::Kind::Yes;
      out.k = k;
      out.direction = WeakVerdict::Direction::ScaledSecond;
      return out;
    }
  }
  if (ord && *ord - 1 <= bound) {
    out.kind = WeakVerdict::Kind::No;
    out.reason = "no power of N maps one numerator class to the other modulo " + b.get_str();
    return out;
  }
  out.kind = WeakVerdict::Kind::Unknown;
  out.reason = "search bound " + std::to_string(bound) + " exhausted";
  return out;
}

}  // namespace solenoid
