#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "solenoid/xi.hpp"

namespace solenoid {

bool same_primes(Modulus n, Modulus m);

// Same base, carrier reread modulo powers of r: values frac((N/r)^n alpha_n).
XiElement rescale(const XiElement& a, Modulus r);

struct IsoWitness {
  enum class Direction {
    // shift(alpha', shift_alpha) = sign * p * shift(beta', shift_beta)
    AlphaFromBeta,
    // shift(beta', shift_beta) = sign * p * shift(alpha', shift_alpha)
    BetaFromAlpha,
  };
  Modulus r = 0;
  Modulus mu = 0;
  Modulus nu = 0;
  Int p = 1;
  int sign = 1;
  Direction direction = Direction::AlphaFromBeta;
  unsigned long shift_alpha = 0;
  unsigned long shift_beta = 0;
  // Periods of Lambda for which the refined sequence reproduces the match.
  std::vector<std::vector<unsigned long>> orderings;
};

struct IsoVerdict {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<IsoWitness> witness;
  std::string reason;
  unsigned long bound = 0;
};

const char* verdict_name(IsoVerdict::Kind k);

IsoVerdict isomorphic(const XiElement& a, const XiElement& b, unsigned long bound);
// For prime moduli; otherwise defers to isomorphic().
IsoVerdict prime_case_isomorphic(const XiElement& a, const XiElement& b);

// Rebuilds the refined sequence for `ordering` and checks the matched
// subsequences termwise for `depth` steps.
bool replay_witness(const XiElement& a, const XiElement& b, const IsoWitness& w,
                    const std::vector<unsigned long>& ordering, std::size_t depth);

std::vector<QnRational> aut_qn_generators(Modulus n, unsigned long bound);

/// A q x q matrix with one unimodular entry per row: row i holds
/// exp(2i pi phase[i]) in column col[i].
struct PhaseMatrix {
  std::vector<std::size_t> col;
  std::vector<Angle> phase;

  static PhaseMatrix identity(std::size_t q);
  std::size_t size() const { return col.size(); }
  PhaseMatrix operator*(const PhaseMatrix& o) const;
  PhaseMatrix scaled(const Angle& lambda) const;
  PhaseMatrix power(unsigned long e) const;
  bool is_identity() const;

  friend bool operator==(const PhaseMatrix&, const PhaseMatrix&) = default;
};

struct BundleData {
  unsigned long k = 0;
  Int q = 1;
  Int p = 0;
  Angle lambda;
  std::string base;
  PhaseMatrix u;
  PhaseMatrix v;
};

BundleData bundle_data(const XiElement& a);

struct ConjugacyReport {
  bool not_conjugate = false;
  std::string message;
};

ConjugacyReport conjugacy_flag(const XiElement& a, const XiElement& b, unsigned long bound);

}  // namespace solenoid
