#include "solenoid/nadic.hpp"

#include <algorithm>
#include <limits>

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

void check_modulus(Modulus n) {
  if (n <= 1) throw Error(ErrorKind::InvalidModulus, "modulus must exceed 1, got " + std::to_string(n));
}

void same_modulus(Modulus a, Modulus b) {
  if (a != b)
    throw Error(ErrorKind::ModulusMismatch, std::to_string(a) + " vs " + std::to_string(b));
}

std::vector<unsigned long> digits_of(Int v, Modulus n, std::size_t len) {
  std::vector<unsigned long> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = mpz_fdiv_q_ui(v.get_mpz_t(), v.get_mpz_t(), n);
  }
  return out;
}

std::size_t common_length(const NadicInteger& a, const NadicInteger& b) {
  auto la = a.prefix_length();
  auto lb = b.prefix_length();
  if (la && lb) return std::min(*la, *lb);
  return la ? *la : *lb;
}

NadicInteger prefix_from(const Int& value, Modulus n, std::size_t len) {
  return NadicInteger::from_prefix(n, digits_of(mod_floor(value, ipow(n, len)), n, len));
}

}  // namespace

QnRational::QnRational(Modulus n) : num_(0), exp_(0), n_(n) { check_modulus(n); }

Rat QnRational::value() const { return make_rat(num_, ipow(n_, exp_)); }

QnRational qn_normalize(const Int& p, unsigned long k, Modulus n) {
  check_modulus(n);
  QnRational out(n);
  out.num_ = p;
  out.exp_ = k;
  if (p == 0) {
    out.exp_ = 0;
    return out;
  }
  while (out.exp_ > 0 && mpz_divisible_ui_p(out.num_.get_mpz_t(), n)) {
    mpz_divexact_ui(out.num_.get_mpz_t(), out.num_.get_mpz_t(), n);
    --out.exp_;
  }
  return out;
}

QnRational qn_from_rational(const Rat& x, Modulus n) {
  check_modulus(n);
  Int den = x.get_den();
  Int pk = 1;
  unsigned long k = 0;
  if (!smooth_over(den, n))
    throw Error(ErrorKind::InvalidValue, to_string(x) + " is not an N-adic rational for N=" + std::to_string(n));
  while (mpz_divisible_p(pk.get_mpz_t(), den.get_mpz_t()) == 0) {
    pk *= n;
    ++k;
  }
  return qn_normalize(x.get_num() * (pk / den), k, n);
}

QnRational qn_add(const QnRational& x, const QnRational& y) {
  same_modulus(x.modulus(), y.modulus());
  Modulus n = x.modulus();
  unsigned long k = std::max(x.exp(), y.exp());
  Int p = x.num() * ipow(n, k - x.exp()) + y.num() * ipow(n, k - y.exp());
  return qn_normalize(p, k, n);
}

QnRational qn_neg(const QnRational& x) { return qn_normalize(-x.num(), x.exp(), x.modulus()); }

QnRational qn_sub(const QnRational& x, const QnRational& y) { return qn_add(x, qn_neg(y)); }

QnRational qn_scale(const QnRational& x, const Int& m) {
  return qn_normalize(x.num() * m, x.exp(), x.modulus());
}

NadicInteger NadicInteger::from_rational(Modulus n, const Rat& value) {
  check_modulus(n);
  if (gcd(value.get_den(), Int(n)) != 1)
    throw Error(ErrorKind::InvalidValue,
                to_string(value) + " has a denominator sharing factors with N=" + std::to_string(n));
  return NadicInteger(n, value);
}

NadicInteger NadicInteger::from_prefix(Modulus n, std::vector<unsigned long> digits) {
  check_modulus(n);
  for (auto d : digits)
    if (d >= n) throw Error(ErrorKind::InvalidValue, "digit " + std::to_string(d) + " out of [0, N)");
  return NadicInteger(n, std::move(digits));
}

const Rat& NadicInteger::rational() const {
  if (auto* r = std::get_if<Rat>(&rep_)) return *r;
  throw Error(ErrorKind::Undecidable, "finite digit prefix has no rational value");
}

std::optional<std::size_t> NadicInteger::prefix_length() const {
  if (auto* d = std::get_if<std::vector<unsigned long>>(&rep_)) return d->size();
  return std::nullopt;
}

const std::vector<unsigned long>& NadicInteger::digits() const {
  if (auto* d = std::get_if<std::vector<unsigned long>>(&rep_)) return *d;
  throw Error(ErrorKind::InvalidValue, "rational carrier has no stored prefix");
}

NadicInteger zn_iota(const Int& z, Modulus n) { return NadicInteger::from_rational(n, Rat(z)); }

Int zn_zeta(const NadicInteger& j) {
  if (!j.is_rational() || !is_integer(j.rational()))
    throw Error(ErrorKind::NotInImage, "N-adic integer is not the image of an integer");
  return j.rational().get_num();
}

NadicInteger zn_add(const NadicInteger& a, const NadicInteger& b) {
  same_modulus(a.modulus(), b.modulus());
  Modulus n = a.modulus();
  if (a.is_rational() && b.is_rational()) return NadicInteger::from_rational(n, a.rational() + b.rational());
  std::size_t len = common_length(a, b);
  return prefix_from(zn_at(a, len) + zn_at(b, len), n, len);
}

NadicInteger zn_neg(const NadicInteger& a) {
  if (a.is_rational()) return NadicInteger::from_rational(a.modulus(), -a.rational());
  std::size_t len = *a.prefix_length();
  return prefix_from(-zn_at(a, len), a.modulus(), len);
}

NadicInteger zn_sub(const NadicInteger& a, const NadicInteger& b) { return zn_add(a, zn_neg(b)); }

NadicInteger zn_scale(const NadicInteger& a, const Int& m) {
  if (a.is_rational()) return NadicInteger::from_rational(a.modulus(), a.rational() * Rat(m));
  std::size_t len = *a.prefix_length();
  return prefix_from(zn_at(a, len) * m, a.modulus(), len);
}

Int zn_at(const NadicInteger& j, unsigned long k) {
  Modulus n = j.modulus();
  if (j.is_rational()) {
    if (k == 0) return 0;
    const Rat& v = j.rational();
    Int nk = ipow(n, k);
    return mod_floor(v.get_num() * inverse_mod(v.get_den(), nk), nk);
  }
  const auto& d = j.digits();
  if (k > d.size())
    throw Error(ErrorKind::OutOfRange,
                "index " + std::to_string(k) + " beyond prefix length " + std::to_string(d.size()));
  Int acc = 0;
  for (std::size_t i = k; i-- > 0;) acc = acc * n + d[i];
  return acc;
}

unsigned long zn_digit(const NadicInteger& j, unsigned long n) {
  if (!j.is_rational()) {
    const auto& d = j.digits();
    if (n >= d.size())
      throw Error(ErrorKind::OutOfRange,
                  "digit " + std::to_string(n) + " beyond prefix length " + std::to_string(d.size()));
    return d[n];
  }
  Int seg = zn_segment(j, n, n + 1);
  return seg.get_ui();
}

Int zn_segment(const NadicInteger& j, unsigned long k, unsigned long m) {
  if (m < k) throw Error(ErrorKind::InvalidValue, "segment needs m >= k");
  Int diff = zn_at(j, m) - zn_at(j, k);
  Int nk = ipow(j.modulus(), k);
  Int q;
  mpz_divexact(q.get_mpz_t(), diff.get_mpz_t(), nk.get_mpz_t());
  return q;
}

NadicInteger zn_tail(const NadicInteger& j, unsigned long k) {
  Modulus n = j.modulus();
  if (j.is_rational())
    return NadicInteger::from_rational(n, (j.rational() - Rat(zn_at(j, k))) / Rat(ipow(n, k)));
  const auto& d = j.digits();
  if (k > d.size())
    throw Error(ErrorKind::OutOfRange, "tail index beyond prefix length");
  return NadicInteger::from_prefix(n, std::vector<unsigned long>(d.begin() + k, d.end()));
}

PrimeSeq::PrimeSeq(std::vector<unsigned long> period) : period_(std::move(period)) {
  if (period_.empty()) throw Error(ErrorKind::InvalidValue, "empty prime period");
  for (auto p : period_)
    if (!is_prime(p)) throw Error(ErrorKind::InvalidValue, std::to_string(p) + " is not prime");
}

Int PrimeSeq::nu() const {
  Int r = 1;
  for (auto p : period_) r *= p;
  return r;
}

PrimeSeq prime_seq_of(Modulus n) {
  check_modulus(n);
  return PrimeSeq(prime_factors(n));
}

Int pi_k(const PrimeSeq& lambda, std::size_t k) {
  Int r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= lambda.at(i);
  return r;
}

std::size_t delta(const PrimeSeq& lambda, const Int& m) {
  Int r = 1;
  for (std::size_t k = 0;; ++k) {
    if (r == m) return k;
    if (r > m) break;
    r *= lambda.at(k);
  }
  throw Error(ErrorKind::NotPartialProduct, m.get_str() + " is not a partial product");
}

}  // namespace solenoid
