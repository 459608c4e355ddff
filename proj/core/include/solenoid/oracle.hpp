#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "solenoid/ktheory.hpp"
#include "solenoid/multiplier.hpp"

namespace solenoid {

inline constexpr long kDefaultWindowP = 150;
inline constexpr unsigned long kDefaultWindowK = 4;
inline constexpr unsigned long kDefaultDepth = 6;
inline constexpr std::size_t kDefaultTrials = 1000;

// Distinct points (p/N^k, q/N^k) with |p|, |q| <= P and k <= K, listed by
// least common exponent.
std::vector<QnPoint> window_points(Modulus n, long P, unsigned long K);

// Points g of the window with Theta(g, h) = 0 for every h of the window.
std::vector<QnPoint> brute_symmetrizer(const XiElement& a, long P, unsigned long K);

struct ColimitStage {
  unsigned long k = 0;
  std::pair<Int, Int> representative;
  std::pair<Rat, Rat> image;
};

// Classes of stage vectors with entries in [-P, P]; a class is reported
// at its least stage.
std::vector<ColimitStage> colimit_build(const XiElement& a, unsigned long depth, long P = 6);

struct ColimitReport {
  bool ok = true;
  std::size_t classes = 0;
  std::size_t targets = 0;
  std::vector<std::string> failures;
};

ColimitReport colimit_check(const XiElement& a, unsigned long depth, long P = 6);
bool colimit_compare(const XiElement& a, unsigned long depth, long P = 6);

// The stage-to-limit matrix obtained by inverting the product of connecting maps.
Matrix2<Rat> colimit_stage_matrix(const XiElement& a, unsigned long k);

enum class FuzzKind { Xi, Zeta, PsiBichar };
const char* fuzz_kind_name(FuzzKind k);

struct FuzzParams {
  // Xi and Zeta read the carrier, PsiBichar the element.
  std::optional<NadicInteger> j;
  std::optional<XiElement> alpha;
  long num_bound = 200;
  unsigned long max_exp = 6;
};

struct FuzzReport {
  FuzzKind kind = FuzzKind::Xi;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::vector<std::string> counterexamples;
  bool ok() const { return counterexamples.empty() && passed == trials; }
};

FuzzReport cocycle_fuzz(FuzzKind kind, const FuzzParams& params, std::size_t trials, std::uint64_t seed);

// Random reduced N-adic rational mixing exponents, equal exponents and carries.
struct QnSampler {
  QnSampler(Modulus n, std::uint64_t seed, long num_bound = 200, unsigned long max_exp = 6);
  QnRational next();
  // A partner for x: sometimes sharing its exponent, sometimes cancelling into a carry.
  QnRational partner(const QnRational& x);

 private:
  Modulus n_;
  long num_bound_;
  unsigned long max_exp_;
  std::mt19937_64 rng_;
  long uniform(long lo, long hi);
};

struct CoboundarySolution {
  Int psi1;
  std::vector<Int> generators;
  CochainSpec psi;
};

// Solves xi_J - xi_R = coboundary(psi) on 1/N^k, k <= K, from the stage
// recurrence; psi(1) is the candidate in [-B, B] and the recurrence is
// checked out to stage 2K. nullopt on integrality failure; BoundExhausted
// when the window leaves psi(1) ambiguous.
std::optional<CoboundarySolution> coboundary_solve(const NadicInteger& j, const NadicInteger& r,
                                                   unsigned long K = 8,
                                                   std::optional<Int> B = std::nullopt);

}  // namespace solenoid
