#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "solenoid/arith.hpp"

namespace solenoid {

/// An element p/N^k of the N-adic rationals, always kept N-reduced
/// (k = 0 or N does not divide p).
class QnRational {
 public:
  explicit QnRational(Modulus n);

  const Int& num() const { return num_; }
  unsigned long exp() const { return exp_; }
  Modulus modulus() const { return n_; }
  Rat value() const;
  bool is_zero() const { return num_ == 0; }

  friend bool operator==(const QnRational& a, const QnRational& b) {
    return a.n_ == b.n_ && a.exp_ == b.exp_ && a.num_ == b.num_;
  }

 private:
  friend QnRational qn_normalize(const Int& p, unsigned long k, Modulus n);
  Int num_;
  unsigned long exp_ = 0;
  Modulus n_;
};

QnRational qn_normalize(const Int& p, unsigned long k, Modulus n);
// Throws InvalidValue when x is not of the form p/N^k.
QnRational qn_from_rational(const Rat& x, Modulus n);
QnRational qn_add(const QnRational& x, const QnRational& y);
QnRational qn_neg(const QnRational& x);
QnRational qn_sub(const QnRational& x, const QnRational& y);
QnRational qn_scale(const QnRational& x, const Int& m);

/// An N-adic integer: a rational with denominator prime to N, or a finite
/// digit prefix (j_0, ..., j_{L-1}).
class NadicInteger {
 public:
  static NadicInteger from_rational(Modulus n, const Rat& value);
  static NadicInteger from_prefix(Modulus n, std::vector<unsigned long> digits);

  Modulus modulus() const { return n_; }
  bool is_rational() const { return std::holds_alternative<Rat>(rep_); }
  // Throws Undecidable on a prefix.
  const Rat& rational() const;
  std::optional<std::size_t> prefix_length() const;
  // Throws InvalidValue on a rational.
  const std::vector<unsigned long>& digits() const;

  friend bool operator==(const NadicInteger& a, const NadicInteger& b) {
    return a.n_ == b.n_ && a.rep_ == b.rep_;
  }

 private:
  NadicInteger(Modulus n, std::variant<Rat, std::vector<unsigned long>> rep)
      : n_(n), rep_(std::move(rep)) {}
  Modulus n_;
  std::variant<Rat, std::vector<unsigned long>> rep_;
};

NadicInteger zn_iota(const Int& z, Modulus n);
// Throws NotInImage unless J is integer-valued.
Int zn_zeta(const NadicInteger& j);
NadicInteger zn_add(const NadicInteger& a, const NadicInteger& b);
NadicInteger zn_neg(const NadicInteger& a);
NadicInteger zn_sub(const NadicInteger& a, const NadicInteger& b);
NadicInteger zn_scale(const NadicInteger& a, const Int& m);

unsigned long zn_digit(const NadicInteger& j, unsigned long n);
// J_k in [0, N^k).
Int zn_at(const NadicInteger& j, unsigned long k);
// J_{k,m} = (J_m - J_k) / N^k.
Int zn_segment(const NadicInteger& j, unsigned long k, unsigned long m);
// (J - J_k) / N^k, the carrier seen from index k.
NadicInteger zn_tail(const NadicInteger& j, unsigned long k);

/// Periodic prime sequence; Lambda is `period` repeated.
class PrimeSeq {
 public:
  explicit PrimeSeq(std::vector<unsigned long> period);

  const std::vector<unsigned long>& period() const { return period_; }
  std::size_t omega() const { return period_.size(); }
  Int nu() const;
  unsigned long at(std::size_t i) const { return period_[i % period_.size()]; }

  friend bool operator==(const PrimeSeq&, const PrimeSeq&) = default;

 private:
  std::vector<unsigned long> period_;
};

PrimeSeq prime_seq_of(Modulus n);
Int pi_k(const PrimeSeq& lambda, std::size_t k);
std::size_t delta(const PrimeSeq& lambda, const Int& m);

}  // namespace solenoid
