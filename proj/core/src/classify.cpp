#include "solenoid/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

std::vector<unsigned long> support(Modulus n) {
  auto f = prime_factors(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

// rho = sign * a * R^e with R not dividing a; nullopt unless rho is a unit of Z[1/R].
struct UnitForm {
  int sign;
  Int a;
  long e;
};

std::optional<UnitForm> unit_form(const Rat& rho, Modulus r) {
  if (rho == 0 || !smooth_over(rho.get_num(), r) || !smooth_over(rho.get_den(), r)) return std::nullopt;
  UnitForm out{rho < 0 ? -1 : 1, abs(rho.get_num()), 0};
  Int den = rho.get_den();
  while (!mpz_divisible_p(out.a.get_mpz_t(), den.get_mpz_t())) {
    out.a *= r;
    --out.e;
  }
  out.a /= den;
  if (out.e == 0) {
    while (mpz_divisible_ui_p(out.a.get_mpz_t(), r)) {
      out.a /= r;
      ++out.e;
    }
  }
  return out;
}

std::vector<unsigned long> proper_divisors(Modulus r) {
  std::vector<unsigned long> out;
  for (const auto& g : aut_qn_generators(r, 0))
    if (g.num() > 0) out.push_back(g.num().get_ui());
  return out;
}

Rat signed_scaled_value(const Rat& v, int sign, const Int& p) { return frac(Rat(p * sign) * v); }

bool divides_r(const Int& a, Modulus r) {
  return a < Int(r) && mpz_divisible_p(Int(r).get_mpz_t(), a.get_mpz_t());
}

std::size_t replay_depth(const XiElement& a, const XiElement& b) {
  auto pa = xi_is_periodic(a);
  auto pb = xi_is_periodic(b);
  if (pa && pb) return std::min<std::size_t>(3 * (*pa + *pb), 240);
  return 12;
}

void fill_orderings(const XiElement& a, const XiElement& b, IsoWitness& w) {
  auto rest = prime_factors(w.r);
  auto pf = w.p == 1 ? std::vector<unsigned long>{} : prime_factors(w.p.get_ui());
  for (auto f : pf) rest.erase(std::find(rest.begin(), rest.end(), f));
  std::sort(rest.begin(), rest.end());
  std::size_t depth = replay_depth(a, b);
  do {
    std::vector<unsigned long> ordering = rest;
    ordering.insert(ordering.end(), pf.begin(), pf.end());
    if (replay_witness(a, b, w, ordering, depth)) w.orderings.push_back(ordering);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

IsoVerdict yes(const XiElement& a, const XiElement& b, IsoWitness w, unsigned long bound) {
  fill_orderings(a, b, w);
  IsoVerdict v;
  v.kind = IsoVerdict::Kind::Yes;
  v.bound = bound;
  v.witness = std::move(w);
  return v;
}

IsoVerdict verdict(IsoVerdict::Kind kind, std::string reason, unsigned long bound) {
  IsoVerdict v;
  v.kind = kind;
  v.reason = std::move(reason);
  v.bound = bound;
  return v;
}

// The subgroup of (Z/q)^x generated by -1 and the primes of r; nullopt past the cap.
std::optional<std::set<Int>> unit_orbit(const Int& q, Modulus r) {
  std::set<Int> seen{mod_floor(Int(1), q), mod_floor(Int(-1), q)};
  std::vector<Int> todo(seen.begin(), seen.end());
  auto primes = support(r);
  while (!todo.empty()) {
    Int x = todo.back();
    todo.pop_back();
    for (auto pr : primes) {
      Int y = mod_floor(x * pr, q);
      if (seen.insert(y).second) {
        if (seen.size() > kPeriodCap) return std::nullopt;
        todo.push_back(y);
      }
    }
  }
  return seen;
}

IsoVerdict periodic_case(const XiElement& a, const XiElement& b, IsoWitness w, unsigned long bound) {
  Int q = a.base().get_den();
  if (q != b.base().get_den())
    return verdict(IsoVerdict::Kind::No,
                   "trace denominators " + q.get_str() + " and " + b.base().get_den().get_str() + " differ", bound);
  if (q > 1) {
    Int ratio = mod_floor(a.base().get_num() * inverse_mod(b.base().get_num(), q), q);
    auto orbit = unit_orbit(q, w.r);
    if (!orbit) return verdict(IsoVerdict::Kind::Unknown, "unit orbit too large to enumerate", bound);
    if (!orbit->count(ratio))
      return verdict(IsoVerdict::Kind::No,
                     "trace numerators are not related by a unit of Z[1/" + std::to_string(w.r) + "] mod " +
                         q.get_str(),
                     bound);
  }
  unsigned long pa = *xi_is_periodic(a);
  unsigned long pb = *xi_is_periodic(b);
  for (auto dir : {IsoWitness::Direction::AlphaFromBeta, IsoWitness::Direction::BetaFromAlpha}) {
    const XiElement& target = dir == IsoWitness::Direction::AlphaFromBeta ? a : b;
    const XiElement& source = dir == IsoWitness::Direction::AlphaFromBeta ? b : a;
    unsigned long span = std::min<unsigned long>(dir == IsoWitness::Direction::AlphaFromBeta ? pb : pa, bound + 1);
    for (unsigned long p : proper_divisors(w.r)) {
      for (int sign : {1, -1}) {
        for (unsigned long k = 0; k < span; ++k) {
          if (target.base() != signed_scaled_value(xi_value(source, k), sign, Int(p))) continue;
          w.p = p;
          w.sign = sign;
          w.direction = dir;
          w.shift_alpha = dir == IsoWitness::Direction::AlphaFromBeta ? 0 : k;
          w.shift_beta = dir == IsoWitness::Direction::AlphaFromBeta ? k : 0;
          return yes(a, b, w, bound);
        }
      }
    }
  }
  if (std::max(pa, pb) > bound + 1)
    return verdict(IsoVerdict::Kind::Unknown, "shift bound " + std::to_string(bound) + " exhausted", bound);
  return verdict(IsoVerdict::Kind::Unknown,
                 "traces agree up to a unit of Z[1/R] but no automorphism p/R^k with p | R matches", bound);
}

IsoVerdict aperiodic_case(const XiElement& a, const XiElement& b, IsoWitness w, unsigned long bound) {
  Rat sa = xi_invariant(a);
  Rat sb = xi_invariant(b);
  auto fwd = unit_form(sa / sb, w.r);
  if (!fwd)
    return verdict(IsoVerdict::Kind::No,
                   "invariant ratio " + to_string(sa / sb) + " is not a unit of Z[1/" + std::to_string(w.r) + "]",
                   bound);
  unsigned long n = fwd->e > 0 ? fwd->e : 0;
  unsigned long k = fwd->e < 0 ? -fwd->e : 0;
  if (xi_value(a, n) != signed_scaled_value(xi_value(b, k), fwd->sign, fwd->a))
    return verdict(IsoVerdict::Kind::No, "shifted traces disagree", bound);
  auto bwd = unit_form(sb / sa, w.r);
  struct Candidate {
    IsoWitness::Direction dir;
    UnitForm form;
  };
  bool over_bound = false;
  for (const Candidate& c : {Candidate{IsoWitness::Direction::AlphaFromBeta, *fwd},
                             Candidate{IsoWitness::Direction::BetaFromAlpha, *bwd}}) {
    if (!divides_r(c.form.a, w.r)) continue;
    unsigned long t = c.form.e > 0 ? c.form.e : 0;
    unsigned long s = c.form.e < 0 ? -c.form.e : 0;
    if (std::max(t, s) > bound) {
      over_bound = true;
      continue;
    }
    w.p = c.form.a;
    w.sign = c.form.sign;
    w.direction = c.dir;
    w.shift_alpha = c.dir == IsoWitness::Direction::AlphaFromBeta ? t : s;
    w.shift_beta = c.dir == IsoWitness::Direction::AlphaFromBeta ? s : t;
    return yes(a, b, w, bound);
  }
  if (over_bound)
    return verdict(IsoVerdict::Kind::Unknown, "required shift exceeds bound " + std::to_string(bound), bound);
  return verdict(IsoVerdict::Kind::Unknown,
                 "traces agree up to the unit " + to_string(sa / sb) +
                     " but no automorphism p/R^k with p | R realizes it",
                 bound);
}

}  // namespace

bool same_primes(Modulus n, Modulus m) { return support(n) == support(m); }

XiElement rescale(const XiElement& a, Modulus r) {
  Modulus n = a.modulus();
  if (r <= 1 || n % r != 0 || !same_primes(n, r))
    throw Error(ErrorKind::InvalidValue,
                std::to_string(r) + " is not a divisor of " + std::to_string(n) + " with the same primes");
  const NadicInteger& j = a.carrier();
  if (j.is_rational()) return xi_new(r, a.base(), NadicInteger::from_rational(r, j.rational()));
  std::size_t len = *j.prefix_length();
  Int v = mod_floor(zn_at(j, len), ipow(r, len));
  std::vector<unsigned long> digits(len);
  for (auto& d : digits) d = mpz_fdiv_q_ui(v.get_mpz_t(), v.get_mpz_t(), r);
  return xi_new(r, a.base(), NadicInteger::from_prefix(r, std::move(digits)));
}

const char* verdict_name(IsoVerdict::Kind k) {
  switch (k) {
    case IsoVerdict::Kind::Yes: return "Yes";
    case IsoVerdict::Kind::No: return "No";
    case IsoVerdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

IsoVerdict isomorphic(const XiElement& a, const XiElement& b, unsigned long bound) {
  Modulus n = a.modulus(), m = b.modulus();
  if (!same_primes(n, m)) return verdict(IsoVerdict::Kind::No, "prime supports of N and M differ", bound);
  if (!a.carrier().is_rational() || !b.carrier().is_rational())
    return verdict(IsoVerdict::Kind::Unknown, "finite-prefix carrier: verdict needs a rational carrier", bound);
  IsoWitness w;
  w.r = std::gcd(n, m);
  w.mu = n / w.r;
  w.nu = m / w.r;
  XiElement ar = rescale(a, w.r);
  XiElement br = rescale(b, w.r);
  bool pa = xi_invariant(ar) == 0;
  bool pb = xi_invariant(br) == 0;
  if (pa != pb) return verdict(IsoVerdict::Kind::No, "one element is periodic and the other is not", bound);
  IsoVerdict v = pa ? periodic_case(ar, br, w, bound) : aperiodic_case(ar, br, w, bound);
  if (v.witness) {
    // Orderings were replayed against the rescaled elements; recheck on the originals.
    auto kept = v.witness->orderings;
    v.witness->orderings.clear();
    std::size_t depth = replay_depth(ar, br);
    for (auto& o : kept)
      if (replay_witness(a, b, *v.witness, o, depth)) v.witness->orderings.push_back(o);
  }
  return v;
}

IsoVerdict prime_case_isomorphic(const XiElement& a, const XiElement& b) {
  if (!is_prime(a.modulus()) || !is_prime(b.modulus())) return isomorphic(a, b, 64);
  if (a.modulus() != b.modulus()) return verdict(IsoVerdict::Kind::No, "distinct primes", 0);
  return isomorphic(a, b, kPeriodCap);
}

bool replay_witness(const XiElement& a, const XiElement& b, const IsoWitness& w,
                    const std::vector<unsigned long>& ordering, std::size_t depth) {
  XiElement ar = rescale(a, w.r);
  XiElement br = rescale(b, w.r);
  bool from_beta = w.direction == IsoWitness::Direction::AlphaFromBeta;
  const XiElement& target = from_beta ? ar : br;
  const XiElement& source = from_beta ? br : ar;
  unsigned long t0 = from_beta ? w.shift_alpha : w.shift_beta;
  unsigned long s0 = from_beta ? w.shift_beta : w.shift_alpha;
  PrimeSeq lambda(ordering);
  if (lambda.nu() != Int(w.r)) return false;
  std::size_t om = lambda.omega();
  std::size_t r = w.p == 1 ? 0 : prime_factors(w.p.get_ui()).size();
  XiLambdaElement gamma = omega_lambda_inv(source, lambda, s0 + depth + 1);
  for (std::size_t j = 0; j < depth; ++j) {
    std::size_t m = s0 + j;
    if (m * om < r) continue;
    Rat g = frac(Rat(w.sign) * gamma.value(m * om - r));
    if (xi_value(target, t0 + j) != g) return false;
  }
  return true;
}

std::vector<QnRational> aut_qn_generators(Modulus n, unsigned long bound) {
  std::vector<QnRational> out;
  for (unsigned long p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    for (unsigned long k = 0; k <= bound; ++k)
      for (long sign : {1L, -1L}) out.push_back(qn_normalize(Int(sign) * p, k, n));
  }
  return out;
}

PhaseMatrix PhaseMatrix::identity(std::size_t q) {
  PhaseMatrix m;
  m.col.resize(q);
  m.phase.assign(q, Angle());
  for (std::size_t i = 0; i < q; ++i) m.col[i] = i;
  return m;
}

PhaseMatrix PhaseMatrix::operator*(const PhaseMatrix& o) const {
  if (size() != o.size()) throw Error(ErrorKind::InvalidValue, "matrix sizes differ");
  PhaseMatrix out;
  out.col.resize(size());
  out.phase.resize(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out.col[i] = o.col[col[i]];
    out.phase[i] = phase[i] + o.phase[col[i]];
  }
  return out;
}

PhaseMatrix PhaseMatrix::scaled(const Angle& lambda) const {
  PhaseMatrix out = *this;
  for (auto& ph : out.phase) ph += lambda;
  return out;
}

PhaseMatrix PhaseMatrix::power(unsigned long e) const {
  PhaseMatrix out = identity(size());
  PhaseMatrix base = *this;
  for (; e; e >>= 1) {
    if (e & 1) out = out * base;
    base = base * base;
  }
  return out;
}

bool PhaseMatrix::is_identity() const { return *this == identity(size()); }

BundleData bundle_data(const XiElement& a) {
  if (!a.carrier().is_rational() || !xi_is_periodic(a))
    throw Error(ErrorKind::NotRationalPeriodic, "bundle data needs a rational periodic element");
  BundleData out;
  out.p = a.base().get_num();
  out.q = a.base().get_den();
  out.lambda = Angle(a.base());
  auto k = mult_order(Int(a.modulus()), out.q, kPeriodCap);
  if (!k) throw Error(ErrorKind::Overflow, "order exceeds cap");
  out.k = *k;
  std::string nk = ipow(a.modulus(), out.k).get_str();
  out.base = "S_" + nk + " x S_" + nk;
  if (!out.q.fits_ulong_p() || out.q > kPeriodCap) throw Error(ErrorKind::Overflow, "matrix dimension too large");
  std::size_t q = out.q.get_ui();
  out.u = PhaseMatrix::identity(q);
  out.v = PhaseMatrix::identity(q);
  for (std::size_t i = 0; i < q; ++i) {
    out.u.phase[i] = Angle(a.base() * Rat(static_cast<unsigned long>(i)));
    out.v.col[i] = (i + 1) % q;
  }
  if (!(out.v * out.u == (out.u * out.v).scaled(out.lambda)))
    throw Error(ErrorKind::InvalidValue, "commutation relation failed");
  return out;
}

ConjugacyReport conjugacy_flag(const XiElement& a, const XiElement& b, unsigned long bound) {
  ConjugacyReport out;
  if (isomorphic(a, b, bound).kind == IsoVerdict::Kind::No) {
    out.not_conjugate = true;
    out.message = "actions theta^alpha, theta^beta not topologically conjugate";
  } else {
    out.message = "no conclusion";
  }
  return out;
}

}  // namespace solenoid
