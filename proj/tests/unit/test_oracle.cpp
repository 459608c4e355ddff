#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "solenoid/error.hpp"
#include "solenoid/oracle.hpp"
#include "support.hpp"

using namespace solenoid;

namespace {

XiElement lattice62() { return xi_new(5, make_rat(1, 62), NadicInteger::from_rational(5, make_rat(-1, 62))); }
XiElement half3() { return xi_constant(3, make_rat(1, 2)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Parse;
}

std::set<std::pair<Rat, Rat>> as_set(const std::vector<QnPoint>& v) {
  std::set<std::pair<Rat, Rat>> out;
  for (const auto& g : v) out.insert({g.x1.value(), g.x2.value()});
  return out;
}

}  // namespace

TEST_CASE("window points are distinct and complete") {
  for (auto [n, P, K] : {std::tuple<Modulus, long, unsigned long>{2, 5, 3}, {3, 4, 2}, {6, 7, 2}}) {
    auto pts = window_points(n, P, K);
    auto set = as_set(pts);
    CHECK(set.size() == pts.size());
    std::set<std::pair<Rat, Rat>> expect;
    for (unsigned long k = 0; k <= K; ++k)
      for (long p = -P; p <= P; ++p)
        for (long q = -P; q <= P; ++q) expect.insert({make_rat(p, ipow(n, k).get_si()), make_rat(q, ipow(n, k).get_si())});
    CHECK(set == expect);
  }
}

TEST_CASE("brute symmetrizer") {
  // Every point of the window of the zero element is symmetric.
  CHECK(brute_symmetrizer(xi_zero(3), 4, 2).size() == window_points(3, 4, 2).size());
  auto s = brute_symmetrizer(lattice62(), 130, 2);
  std::set<std::pair<Rat, Rat>> expect;
  for (const auto& g : window_points(5, 130, 2)) {
    auto [p1, k1] = ref::reduce(g.x1.value(), 5);
    auto [p2, k2] = ref::reduce(g.x2.value(), 5);
    if (p1 % 62 == 0 && p2 % 62 == 0) expect.insert({g.x1.value(), g.x2.value()});
  }
  CHECK(as_set(s) == expect);
  auto ap = brute_symmetrizer(xi_new(2, Rat(0), zn_iota(1, 2)), 10, 4);
  REQUIRE(ap.size() == 1);
  CHECK(ap[0].x1.is_zero());
  CHECK(ap[0].x2.is_zero());

  std::mt19937_64 rng(3);
  for (Modulus n : {2UL, 3UL, 5UL}) {
    for (int i = 0; i < 6; ++i) {
      long b = std::uniform_int_distribution<long>(2, 9)(rng);
      if (std::gcd(static_cast<unsigned long>(b), n) != 1) continue;
      Rat base = make_rat(std::uniform_int_distribution<long>(1, b - 1)(rng), b);
      XiElement a = xi_new(n, base, NadicInteger::from_rational(n, -base));
      SymmetrizerDescription d = symmetrizer(a);
      std::set<std::pair<Rat, Rat>> want;
      for (const auto& g : window_points(n, 20, 2))
        if (d.contains(g)) want.insert({g.x1.value(), g.x2.value()});
      CHECK(as_set(brute_symmetrizer(a, 20, 2)) == want);
    }
  }
}

TEST_CASE("colimit stages") {
  // Depth 0: Z^2 sits in the K-group as (z, p).
  auto st = colimit_build(half3(), 0, 3);
  CHECK(st.size() == 49);
  for (const auto& c : st) {
    CHECK(c.image.first == Rat(c.representative.first));
    CHECK(c.image.second == Rat(c.representative.second));
  }
  Matrix2<Rat> up = colimit_stage_matrix(half3(), 2);
  CHECK(up[0][1] == make_rat(40, 81));
  CHECK(up[1][1] == make_rat(1, 81));
  for (const XiElement& a : {half3(), lattice62(), xi_new(6, make_rat(1, 5), zn_iota(3, 6))})
    for (unsigned long k = 0; k <= 6; ++k) CHECK(colimit_stage_matrix(a, k) == upsilon_matrix(a, k));

  ColimitReport rep = colimit_check(half3(), 6);
  CHECK(rep.ok);
  CHECK(rep.failures.empty());
  CHECK(rep.classes > 0);
  CHECK(rep.targets > 0);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 2; ++i) {
    Modulus n = i ? 2 : 5;
    Rat c = make_rat(std::uniform_int_distribution<long>(-40, 40)(rng), 3 + 4 * i);
    XiElement a = xi_new(n, make_rat(1, 3), NadicInteger::from_rational(n, c));
    CHECK(colimit_compare(a, 4, 4));
  }
  CHECK(kind_of([] { colimit_build(half3(), 2, 5000); }) == ErrorKind::Overflow);
}

TEST_CASE("cocycle fuzzing") {
  FuzzParams p;
  p.j = zn_iota(0, 3);
  FuzzReport z = cocycle_fuzz(FuzzKind::Xi, p, 200, 1);
  CHECK(z.ok());
  CHECK(z.passed == 200);
  p.j = zn_iota(1, 2);
  FuzzReport x = cocycle_fuzz(FuzzKind::Xi, p, 1000, 2);
  CHECK(x.ok());
  CHECK(x.seed == 2);
  p.j = NadicInteger::from_rational(3, make_rat(-1, 2));
  CHECK(cocycle_fuzz(FuzzKind::Zeta, p, 500, 3).ok());
  FuzzParams q;
  q.alpha = lattice62();
  CHECK(cocycle_fuzz(FuzzKind::PsiBichar, q, 300, 4).ok());
  CHECK(kind_of([&] { cocycle_fuzz(FuzzKind::Xi, p, 0, 1); }) == ErrorKind::InvalidValue);
  CHECK(kind_of([&] { cocycle_fuzz(FuzzKind::PsiBichar, p, 10, 1); }) == ErrorKind::InvalidValue);

  // Same seed, same samples.
  QnSampler a(6, 77), b(6, 77);
  for (int i = 0; i < 50; ++i) CHECK(a.next() == b.next());
  // The sampler reaches equal exponents and carries.
  QnSampler c(3, 5);
  int equal = 0, carry = 0;
  for (int i = 0; i < 400; ++i) {
    QnRational u = c.next(), v = c.partner(u);
    if (u.exp() > 0 && u.exp() == v.exp()) {
      ++equal;
      if (qn_add(u, v).exp() < u.exp()) ++carry;
    }
  }
  CHECK(equal > 40);
  CHECK(carry > 20);
}

TEST_CASE("coboundary solver") {
  NadicInteger h = NadicInteger::from_rational(3, make_rat(-1, 2));
  auto same = coboundary_solve(h, h);
  REQUIRE(same);
  CHECK(same->psi1 == 0);
  for (unsigned long k = 0; k <= 8; ++k) CHECK(same->psi.at(qn_normalize(1, k, 3)) == 0);

  auto five = coboundary_solve(zn_iota(5, 3), zn_iota(0, 3));
  auto w = cohomologous(zn_iota(5, 3), zn_iota(0, 3));
  REQUIRE(five);
  REQUIRE(w);
  CHECK(five->psi1 == w->psi1);
  CHECK(!coboundary_solve(h, zn_iota(0, 3)));
  CHECK(kind_of([] { coboundary_solve(zn_iota(5, 3), zn_iota(0, 3), 2, Int(9)); }) == ErrorKind::BoundExhausted);
  CHECK(kind_of([&] { coboundary_solve(h, zn_iota(0, 2)); }) == ErrorKind::ModulusMismatch);

  // The solved psi reproduces the difference cocycle wherever it is defined.
  QnSampler smp(3, 8, 200, 8);
  for (int i = 0; i < 200; ++i) {
    QnRational x = smp.next(), y = smp.partner(x);
    if (!five->psi.try_at(x) || !five->psi.try_at(y) || !five->psi.try_at(qn_add(x, y))) continue;
    CHECK(xi_cocycle(zn_iota(5, 3), x, y) - xi_cocycle(zn_iota(0, 3), x, y) == coboundary(five->psi, x, y));
  }

  // Solver succeeds exactly when the closed form finds a witness.
  std::mt19937_64 rng(6);
  int found = 0;
  for (Modulus n : {2UL, 3UL, 5UL, 6UL}) {
    for (int i = 0; i < 25; ++i) {
      long d1 = std::uniform_int_distribution<long>(1, 15)(rng), d2 = std::uniform_int_distribution<long>(1, 15)(rng);
      if (std::gcd(static_cast<unsigned long>(d1 * d2), n) != 1) continue;
      Rat r = make_rat(std::uniform_int_distribution<long>(-30, 30)(rng), d1);
      Rat j = i % 2 ? r + Rat(std::uniform_int_distribution<long>(-12, 12)(rng))
                    : r + make_rat(std::uniform_int_distribution<long>(-30, 30)(rng), d2);
      NadicInteger jj = NadicInteger::from_rational(n, j), rr = NadicInteger::from_rational(n, r);
      auto closed = cohomologous(jj, rr);
      auto solved = coboundary_solve(jj, rr);
      CHECK(closed.has_value() == solved.has_value());
      if (closed && solved) {
        ++found;
        CHECK(closed->psi1 == solved->psi1);
        for (unsigned long k = 0; k <= 8; ++k) {
          QnRational x = qn_normalize(1, k, n);
          CHECK(closed->psi.at(x) == solved->psi.at(x));
        }
      }
    }
  }
  CHECK(found > 10);
}
