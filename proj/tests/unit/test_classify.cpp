#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "solenoid/classify.hpp"
#include "solenoid/error.hpp"
#include "solenoid/multiplier.hpp"
#include "support.hpp"

using namespace solenoid;

namespace {

XiElement periodic(Modulus n, long a, long b) { return xi_constant(n, make_rat(a, b)); }
XiElement lattice62() { return xi_new(5, make_rat(1, 62), NadicInteger::from_rational(5, make_rat(-1, 62))); }
XiElement third2() { return xi_new(2, make_rat(1, 3), NadicInteger::from_rational(2, make_rat(-1, 3))); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Parse;
}

using Kind = IsoVerdict::Kind;

unsigned long period_or(const XiElement& a, unsigned long fallback) {
  auto p = xi_is_periodic(a);
  return p ? *p : fallback;
}

void check_replay(const XiElement& a, const XiElement& b, const IsoVerdict& v) {
  REQUIRE(v.witness);
  REQUIRE(!v.witness->orderings.empty());
  std::size_t depth = 3 * (period_or(a, 4) + period_or(b, 4));
  for (const auto& o : v.witness->orderings) CHECK(replay_witness(a, b, *v.witness, o, depth));
}

}  // namespace

TEST_CASE("prime supports") {
  CHECK(same_primes(2, 4));
  CHECK(same_primes(6, 12));
  CHECK(!same_primes(2, 3));
  CHECK(!same_primes(6, 10));
}

TEST_CASE("rescaling") {
  CHECK(rescale(lattice62(), 5) == lattice62());
  XiElement r = rescale(periodic(4, 1, 3), 2);
  CHECK(r.modulus() == 2);
  for (unsigned long k = 0; k < 10; ++k) CHECK(xi_value(r, k) == (k % 2 ? make_rat(2, 3) : make_rat(1, 3)));
  CHECK(r.carrier().rational() == make_rat(-1, 3));
  CHECK(kind_of([] { rescale(periodic(6, 1, 5), 4); }) == ErrorKind::InvalidValue);

  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> num(-25, 25), den(1, 25);
  for (auto [n, rr] : {std::pair<Modulus, Modulus>{12, 6}, {12, 12}, {18, 6}, {4, 2}, {20, 10}}) {
    Modulus mu = n / rr;
    for (int i = 0; i < 30; ++i) {
      long b0 = den(rng), d = den(rng);
      if (std::gcd(static_cast<unsigned long>(d), n) != 1) continue;
      XiElement a = xi_new(n, make_rat(std::uniform_int_distribution<long>(0, b0 - 1)(rng), b0),
                           NadicInteger::from_rational(n, make_rat(num(rng), d)));
      XiElement s = rescale(a, rr);
      for (unsigned long k = 0; k <= 10; ++k) CHECK(xi_value(s, k) == ref::frac(Rat(ipow(mu, k)) * xi_value(a, k)));
      // psi is unchanged when the same rationals are read in Q_N and Q_R.
      for (int t = 0; t < 10; ++t) {
        Rat x[4];
        for (auto& v : x) v = ref::random_qn(rng, rr, 50, 3);
        QnPoint gn = qn_point(qn_from_rational(x[0], n), qn_from_rational(x[1], n));
        QnPoint hn = qn_point(qn_from_rational(x[2], n), qn_from_rational(x[3], n));
        QnPoint gr = qn_point(qn_from_rational(x[0], rr), qn_from_rational(x[1], rr));
        QnPoint hr = qn_point(qn_from_rational(x[2], rr), qn_from_rational(x[3], rr));
        CHECK(psi(a, gn, hn) == psi(s, gr, hr));
      }
    }
  }
}

TEST_CASE("prime case") {
  IsoVerdict self = prime_case_isomorphic(third2(), third2());
  CHECK(self.kind == Kind::Yes);
  check_replay(third2(), third2(), self);

  XiElement shifted = xi_shift(third2(), 1);
  CHECK(xi_value(shifted, 0) == make_rat(2, 3));
  IsoVerdict s = prime_case_isomorphic(third2(), shifted);
  CHECK(s.kind == Kind::Yes);
  REQUIRE(s.witness);
  CHECK(s.witness->shift_alpha + s.witness->shift_beta == 1);
  check_replay(third2(), shifted, s);

  XiElement fifth = xi_new(2, make_rat(1, 5), NadicInteger::from_rational(2, make_rat(-1, 5)));
  CHECK(xi_value(fifth, 1) == make_rat(3, 5));
  CHECK(xi_value(fifth, 2) == make_rat(4, 5));
  CHECK(xi_value(fifth, 3) == make_rat(2, 5));
  CHECK(prime_case_isomorphic(third2(), fifth).kind == Kind::No);
  CHECK(prime_case_isomorphic(fifth, third2()).kind == Kind::No);

  // Aperiodic shifts: (values 1/3^n) against its tail and its negative.
  XiElement ap = xi_new(3, Rat(0), zn_iota(1, 3));
  for (unsigned long k : {1UL, 2UL, 5UL}) {
    XiElement t = xi_shift(ap, k);
    IsoVerdict v = prime_case_isomorphic(ap, t);
    CHECK(v.kind == Kind::Yes);
    check_replay(ap, t, v);
    IsoVerdict w = prime_case_isomorphic(t, ap);
    CHECK(w.kind == Kind::Yes);
    check_replay(t, ap, w);
  }
  IsoVerdict neg = prime_case_isomorphic(ap, xi_neg(ap));
  CHECK(neg.kind == Kind::Yes);
  REQUIRE(neg.witness);
  CHECK(neg.witness->sign == -1);
  check_replay(ap, xi_neg(ap), neg);
  CHECK(prime_case_isomorphic(ap, xi_scale(ap, 2)).kind == Kind::No);
  CHECK(prime_case_isomorphic(ap, periodic(3, 1, 2)).kind == Kind::No);
  CHECK(prime_case_isomorphic(third2(), periodic(3, 1, 2)).kind == Kind::No);
}

TEST_CASE("general decision") {
  IsoVerdict v = isomorphic(third2(), periodic(4, 1, 3), 32);
  CHECK(v.kind == Kind::Yes);
  REQUIRE(v.witness);
  CHECK(v.witness->r == 2);
  check_replay(third2(), periodic(4, 1, 3), v);
  CHECK(isomorphic(third2(), periodic(3, 1, 2), 32).kind == Kind::No);
  IsoVerdict z = isomorphic(xi_zero(6), xi_zero(12), 8);
  CHECK(z.kind == Kind::Yes);
  check_replay(xi_zero(6), xi_zero(12), z);

  // x9 on Q_12 is an automorphism with no p/R^k form: the search cannot settle it.
  XiElement a = xi_new(12, Rat(0), zn_iota(1, 12));
  IsoVerdict u = isomorphic(a, xi_new(12, Rat(0), zn_iota(9, 12)), 32);
  CHECK(u.kind == Kind::Unknown);
  // Shift bounds: a shift by 6 is out of reach of bound 3.
  XiElement ap = xi_new(2, Rat(0), zn_iota(1, 2));
  CHECK(isomorphic(ap, xi_shift(ap, 6), 3).kind == Kind::Unknown);
  CHECK(isomorphic(ap, xi_shift(ap, 6), 6).kind == Kind::Yes);
  CHECK(isomorphic(a, xi_new(3, Rat(0), zn_iota(1, 3)), 8).kind == Kind::No);
  CHECK(isomorphic(a, xi_new(12, Rat(0), NadicInteger::from_prefix(12, {1})), 8).kind == Kind::Unknown);

  std::mt19937_64 rng(15);
  std::uniform_int_distribution<long> den(2, 20), num(-6, 6);
  std::vector<XiElement> pool;
  for (Modulus n : {2UL, 4UL, 6UL, 12UL}) {
    for (int i = 0; i < 6; ++i) {
      long b = den(rng);
      if (std::gcd(static_cast<unsigned long>(b), n) != 1) continue;
      Rat base = make_rat(std::uniform_int_distribution<long>(0, b - 1)(rng), b);
      pool.push_back(xi_new(n, base, NadicInteger::from_rational(n, -base)));
      pool.push_back(xi_new(n, base, NadicInteger::from_rational(n, -base + Rat(num(rng)))));
    }
  }
  int yes = 0;
  for (const auto& x : pool)
    for (const auto& y : pool) {
      IsoVerdict f = isomorphic(x, y, 12), g = isomorphic(y, x, 12);
      CHECK(f.kind == g.kind);
      if (f.kind == Kind::Yes) {
        ++yes;
        check_replay(x, y, f);
      }
    }
  CHECK(yes >= static_cast<int>(pool.size()));
}

TEST_CASE("automorphism generators") {
  auto g2 = aut_qn_generators(2, 1);
  std::vector<Rat> v2;
  for (const auto& q : g2) v2.push_back(q.value());
  CHECK(v2 == std::vector<Rat>{Rat(1), Rat(-1), make_rat(1, 2), make_rat(-1, 2)});
  std::set<Int> nums;
  for (const auto& q : aut_qn_generators(6, 0)) nums.insert(q.num());
  CHECK(nums == std::set<Int>{-3, -2, -1, 1, 2, 3});
  for (Modulus n : {2UL, 5UL, 12UL}) {
    auto g = aut_qn_generators(n, 3);
    CHECK(std::find(g.begin(), g.end(), qn_normalize(1, 0, n)) != g.end());
  }
}

TEST_CASE("bundle data") {
  BundleData b = bundle_data(third2());
  CHECK(b.k == 2);
  CHECK(b.q == 3);
  CHECK(b.p == 1);
  CHECK(b.lambda.value() == make_rat(1, 3));
  CHECK(b.base == "S_4 x S_4");
  BundleData h = bundle_data(periodic(3, 1, 2));
  CHECK(h.k == 1);
  CHECK(h.q == 2);
  CHECK(h.lambda.value() == make_rat(1, 2));
  BundleData f = bundle_data(lattice62());
  CHECK(f.k == 3);
  CHECK(f.q == 62);
  for (const BundleData& d : {b, h, f, bundle_data(periodic(7, 3, 8))}) {
    std::size_t q = d.q.get_ui();
    CHECK(d.v * d.u == (d.u * d.v).scaled(d.lambda));
    CHECK(d.u.power(q).is_identity());
    CHECK(d.v.power(q).is_identity());
    for (std::size_t i = 0; i < q; ++i) {
      CHECK(d.u.col[i] == i);
      CHECK(d.u.phase[i] == d.lambda * Int(i));
    }
  }
  CHECK(kind_of([] { bundle_data(xi_new(2, Rat(0), zn_iota(1, 2))); }) == ErrorKind::NotRationalPeriodic);
  BundleData z = bundle_data(xi_zero(2));
  CHECK(z.q == 1);
  CHECK(z.lambda.is_zero());
}

TEST_CASE("conjugacy flag") {
  CHECK(conjugacy_flag(xi_zero(2), xi_zero(3), 8).not_conjugate);
  CHECK(!conjugacy_flag(third2(), periodic(4, 1, 3), 8).not_conjugate);
  XiElement fifth = xi_new(2, make_rat(1, 5), NadicInteger::from_rational(2, make_rat(-1, 5)));
  ConjugacyReport r = conjugacy_flag(third2(), fifth, 8);
  CHECK(r.not_conjugate);
  CHECK(r.message.find("not topologically conjugate") != std::string::npos);
}
