#include "solenoid/oracle.hpp"

#include <map>
#include <sstream>

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

bool divisible(long v, Modulus n) { return v % static_cast<long>(n) == 0; }

// alpha_m as a / b, with a 128-bit fast path for the residue test b | a t.
struct Fraction {
  Int a;
  Int b;
  bool small = false;
  __int128 sa = 0;
  __int128 sb = 1;

  explicit Fraction(const Rat& v) : a(v.get_num()), b(v.get_den()) {
    if (b.fits_slong_p() && b < (Int(1) << 62)) {
      small = true;
      sa = a.get_si();
      sb = b.get_si();
    }
  }

  bool kills(long t) const {
    if (small) return (sa * t) % sb == 0;
    Int prod = a * t;
    return mpz_divisible_p(prod.get_mpz_t(), b.get_mpz_t()) != 0;
  }
};

struct RawPoint {
  long p;
  long q;
  unsigned long k;
};

std::vector<RawPoint> raw_window(Modulus n, long P, unsigned long K) {
  std::vector<long> order{0};
  for (long v = 1; v <= P; ++v) {
    order.push_back(v);
    order.push_back(-v);
  }
  std::vector<RawPoint> out;
  for (unsigned long k = 0; k <= K; ++k)
    for (long p : order)
      for (long q : order) {
        if (k > 0 && divisible(p, n) && divisible(q, n)) continue;
        out.push_back({p, q, k});
      }
  return out;
}

std::string show(const QnRational& x) { return to_string(x.value()); }

Matrix2<Rat> inverse(const Matrix2<Rat>& m) {
  Rat det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det == 0) throw Error(ErrorKind::InvalidValue, "singular connecting matrix");
  return {{{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}}};
}

// The connecting map between stages k and k+1, built from the digits directly.
Matrix2<Rat> connecting(const XiElement& a, unsigned long k) {
  Modulus n = a.modulus();
  Int r = Int(n) * zn_digit(a.carrier(), 2 * k + 1) + zn_digit(a.carrier(), 2 * k);
  return {{{Rat(1), Rat(-r)}, {Rat(0), Rat(Int(n) * n)}}};
}

Matrix2<Rat> cumulative(const XiElement& a, unsigned long k) {
  Matrix2<Rat> c{{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
  for (unsigned long i = 0; i < k; ++i) c = mat_mul(connecting(a, i), c);
  return c;
}

std::pair<Rat, Rat> apply(const Matrix2<Rat>& m, const Rat& x, const Rat& y) {
  return {m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y};
}

}  // namespace

std::vector<QnPoint> window_points(Modulus n, long P, unsigned long K) {
  std::vector<QnPoint> out;
  for (const auto& r : raw_window(n, P, K))
    out.push_back({qn_normalize(r.p, r.k, n), qn_normalize(r.q, r.k, n)});
  return out;
}

std::vector<QnPoint> brute_symmetrizer(const XiElement& a, long P, unsigned long K) {
  Modulus n = a.modulus();
  auto window = raw_window(n, P, K);
  std::vector<Fraction> alpha;
  for (unsigned long m = 0; m <= 2 * K; ++m) alpha.emplace_back(xi_value(a, m));
  // Scan partners with large exponents first: most non-members fail there at once.
  std::vector<RawPoint> partners(window.rbegin(), window.rend());
  std::vector<QnPoint> out;
  for (const auto& g : window) {
    bool member = true;
    for (const auto& h : partners) {
      // Theta((p1, p2)/N^k, (q1, q2)/N^k') = alpha_{k+k'} (p1 q2 - p2 q1).
      long t = g.p * h.q - g.q * h.p;
      if (!alpha[g.k + h.k].kills(t)) {
        member = false;
        break;
      }
    }
    if (member) out.push_back({qn_normalize(g.p, g.k, n), qn_normalize(g.q, g.k, n)});
  }
  return out;
}

Matrix2<Rat> colimit_stage_matrix(const XiElement& a, unsigned long k) { return inverse(cumulative(a, k)); }

std::vector<ColimitStage> colimit_build(const XiElement& a, unsigned long depth, long P) {
  if (P > 1000) throw Error(ErrorKind::Overflow, "colimit window above 1000");
  std::map<std::pair<Rat, Rat>, ColimitStage> classes;
  for (unsigned long k = 0; k <= depth; ++k) {
    Matrix2<Rat> up = colimit_stage_matrix(a, k);
    for (long x = -P; x <= P; ++x)
      for (long y = -P; y <= P; ++y) {
        auto img = apply(up, Rat(x), Rat(y));
        classes.emplace(img, ColimitStage{k, {Int(x), Int(y)}, img});
      }
  }
  std::vector<ColimitStage> out;
  out.reserve(classes.size());
  for (auto& [img, st] : classes) out.push_back(st);
  return out;
}

ColimitReport colimit_check(const XiElement& a, unsigned long depth, long P) {
  ColimitReport rep;
  Modulus n = a.modulus();
  auto fail = [&](std::string msg) {
    rep.ok = false;
    if (rep.failures.size() < 20) rep.failures.push_back(std::move(msg));
  };

  auto classes = colimit_build(a, depth, P);
  rep.classes = classes.size();
  for (const auto& c : classes) {
    const auto& [x, y] = c.image;
    QnRational second(n);
    try {
      second = qn_from_rational(y, n);
    } catch (const Error&) {
      fail("second component " + to_string(y) + " is not N-adic");
      continue;
    }
    if (second.exp() > 2 * c.k) fail("stage " + std::to_string(c.k) + " image has exponent " + std::to_string(second.exp()));
    Rat z = x - (second.is_zero() ? Rat(0)
                                  : make_rat(second.num() * zn_at(a.carrier(), second.exp()), ipow(n, second.exp())));
    if (!is_integer(z)) fail("image (" + to_string(x) + ", " + to_string(y) + ") misses the K-group");
    // Pushing a representative one stage further must not move its image.
    if (c.k < depth) {
      Rat vx(c.representative.first), vy(c.representative.second);
      auto pushed = apply(connecting(a, c.k), vx, vy);
      auto img = apply(colimit_stage_matrix(a, c.k + 1), pushed.first, pushed.second);
      if (img != c.image) fail("stage " + std::to_string(c.k) + " class moves under the connecting map");
    }
  }

  std::vector<Matrix2<Rat>> pull;
  for (unsigned long k = 0; k <= depth; ++k) pull.push_back(cumulative(a, k));
  for (unsigned long m = 0; m <= 2 * depth; ++m) {
    Int nm = ipow(n, m);
    Int jm = zn_at(a.carrier(), m);
    for (long p = -P; p <= P; ++p) {
      if (m > 0 && divisible(p, n)) continue;
      for (long z = -P; z <= P; ++z) {
        Rat x = Rat(z) + make_rat(Int(p) * jm, nm);
        Rat y = make_rat(Int(p), nm);
        ++rep.targets;
        bool found = false;
        for (unsigned long k = 0; k <= depth && !found; ++k) {
          auto v = apply(pull[k], x, y);
          found = is_integer(v.first) && is_integer(v.second);
        }
        if (!found) fail("K-group point (" + to_string(x) + ", " + to_string(y) + ") not reached by depth " +
                         std::to_string(depth));
      }
    }
  }
  return rep;
}

bool colimit_compare(const XiElement& a, unsigned long depth, long P) { return colimit_check(a, depth, P).ok; }

const char* fuzz_kind_name(FuzzKind k) {
  switch (k) {
    case FuzzKind::Xi: return "xi";
    case FuzzKind::Zeta: return "zeta";
    case FuzzKind::PsiBichar: return "psi_bichar";
  }
  return "?";
}

QnSampler::QnSampler(Modulus n, std::uint64_t seed, long num_bound, unsigned long max_exp)
    : n_(n), num_bound_(num_bound), max_exp_(max_exp), rng_(seed) {}

long QnSampler::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

QnRational QnSampler::next() {
  long shape = uniform(0, 7);
  if (shape == 0) return QnRational(n_);
  if (shape == 1) return qn_normalize(uniform(-3, 3), 0, n_);
  return qn_normalize(uniform(-num_bound_, num_bound_), uniform(0, static_cast<long>(max_exp_)), n_);
}

QnRational QnSampler::partner(const QnRational& x) {
  long shape = uniform(0, 3);
  if (shape == 0 && x.exp() > 0) {
    // Cancel into a lower exponent: numerator m N - p.
    Int p = Int(uniform(-4, 4)) * n_ - x.num();
    return qn_normalize(p, x.exp(), n_);
  }
  if (shape == 1) return qn_normalize(uniform(-num_bound_, num_bound_), x.exp(), n_);
  return next();
}

FuzzReport cocycle_fuzz(FuzzKind kind, const FuzzParams& params, std::size_t trials, std::uint64_t seed) {
  FuzzReport rep;
  rep.kind = kind;
  rep.seed = seed;
  rep.trials = trials;
  if (trials == 0) throw Error(ErrorKind::InvalidValue, "trials must be positive");
  Modulus n;
  if (kind == FuzzKind::PsiBichar) {
    if (!params.alpha) throw Error(ErrorKind::InvalidValue, "psi_bichar fuzzing needs an element");
    n = params.alpha->modulus();
  } else {
    if (!params.j) throw Error(ErrorKind::InvalidValue, "cocycle fuzzing needs a carrier");
    n = params.j->modulus();
  }
  QnSampler s(n, seed, params.num_bound, params.max_exp);
  auto report = [&](const std::string& what) {
    if (rep.counterexamples.size() < 50) rep.counterexamples.push_back(what);
  };

  for (std::size_t t = 0; t < trials; ++t) {
    std::ostringstream bad;
    if (kind == FuzzKind::Xi) {
      const NadicInteger& j = *params.j;
      QnRational x = s.next();
      QnRational y = s.partner(x);
      QnRational z = s.partner(y);
      Int xy = xi_cocycle(j, x, y), yx = xi_cocycle(j, y, x);
      if (xy != yx) bad << "xi symmetry x=" << show(x) << " y=" << show(y) << " " << xy << " != " << yx;
      Int lhs = xi_cocycle(j, qn_add(x, y), z) + xy;
      Int rhs = xi_cocycle(j, qn_add(y, z), x) + xi_cocycle(j, y, z);
      if (lhs != rhs)
        bad << "xi cocycle x=" << show(x) << " y=" << show(y) << " z=" << show(z) << " lhs=" << lhs
            << " rhs=" << rhs;
      if (xi_cocycle(j, x, QnRational(n)) != 0) bad << "xi normalization x=" << show(x);
    } else if (kind == FuzzKind::Zeta) {
      const NadicInteger& j = *params.j;
      QnRational x = s.next();
      QnRational y = s.partner(x);
      QnRational z = s.partner(y);
      Int zeta = zeta_cocycle(j, x, y);
      Int dmu = -mu_cochain(j, x) - mu_cochain(j, y) + mu_cochain(j, qn_add(x, y));
      Int xi = xi_cocycle(j, x, y);
      if (zeta + dmu != xi)
        bad << "zeta relation x=" << show(x) << " y=" << show(y) << " zeta=" << zeta << " dmu=" << dmu
            << " xi=" << xi;
      Int via = frac_cross_section_cocycle(prufer_pair(j, x).value(), prufer_pair(j, y).value());
      if (via != zeta) bad << " zeta route x=" << show(x) << " y=" << show(y) << " " << zeta << " != " << via;
      Int lhs = zeta_cocycle(j, qn_add(x, y), z) + zeta;
      Int rhs = zeta_cocycle(j, x, qn_add(y, z)) + zeta_cocycle(j, y, z);
      if (lhs != rhs) bad << " zeta cocycle x=" << show(x) << " y=" << show(y) << " z=" << show(z);
    } else {
      const XiElement& a = *params.alpha;
      QnPoint g{s.next(), s.next()};
      QnPoint g2{s.partner(g.x1), s.partner(g.x2)};
      QnPoint h{s.next(), s.next()};
      QnPoint k{s.next(), s.partner(h.x2)};
      auto pt = [](const QnPoint& p) { return "(" + show(p.x1) + "," + show(p.x2) + ")"; };
      Angle left = psi(a, qn_point_add(g, g2), h);
      Angle right = psi(a, g, h) + psi(a, g2, h);
      if (!(left == right)) bad << "psi first slot g=" << pt(g) << " g'=" << pt(g2) << " h=" << pt(h);
      left = psi(a, h, qn_point_add(g, g2));
      right = psi(a, h, g) + psi(a, h, g2);
      if (!(left == right)) bad << " psi second slot g=" << pt(g) << " g'=" << pt(g2) << " h=" << pt(h);
      left = psi(a, g, h) + psi(a, qn_point_add(g, h), k);
      right = psi(a, g, qn_point_add(h, k)) + psi(a, h, k);
      if (!(left == right)) bad << " psi cocycle g=" << pt(g) << " h=" << pt(h) << " k=" << pt(k);
    }
    if (bad.str().empty())
      ++rep.passed;
    else
      report(bad.str());
  }
  return rep;
}

std::optional<CoboundarySolution> coboundary_solve(const NadicInteger& j, const NadicInteger& r, unsigned long K,
                                                   std::optional<Int> B) {
  if (j.modulus() != r.modulus()) throw Error(ErrorKind::ModulusMismatch, "carriers differ in modulus");
  if (K == 0) throw Error(ErrorKind::InvalidValue, "need at least one stage");
  Modulus n = j.modulus();
  auto sigma = [j, r](const QnRational& x, const QnRational& y) -> Int {
    return xi_cocycle(j, x, y) - xi_cocycle(r, x, y);
  };
  // Stages K..2K-1 only confirm the candidate: a spurious psi(1) would need a
  // small residue modulo N^{2K} as well.
  std::vector<Int> s(2 * K);
  for (unsigned long k = 0; k < 2 * K; ++k) {
    QnRational unit = qn_normalize(1, k + 1, n);
    for (unsigned long m = 1; m + 1 < n; ++m)
      if (sigma(qn_normalize(m, k + 1, n), unit) != 0)
        throw Error(ErrorKind::InvalidValue, "difference cocycle is not normalized on a stage");
    s[k] = sigma(qn_normalize(n - 1, k + 1, n), unit);
  }
  Int nk = ipow(n, K);
  Int acc = 0;
  for (unsigned long k = K; k-- > 0;) acc = acc * n + s[k];
  Int c = mod_floor(-acc, nk);
  Int bound;
  if (B)
    bound = *B;
  else
    bound = (ipow(n, K - 1) - 1) / 2;
  Int first = -bound + mod_floor(c + bound, nk);
  if (first > bound) return std::nullopt;
  if (first + nk <= bound)
    throw Error(ErrorKind::BoundExhausted, "psi(1) ambiguous in [-" + bound.get_str() + ", " + bound.get_str() + "]");

  std::vector<Int> g(2 * K + 1);
  g[0] = first;
  for (unsigned long k = 0; k < 2 * K; ++k) {
    Int t = g[k] + s[k];
    if (!mpz_divisible_ui_p(t.get_mpz_t(), n)) return std::nullopt;
    g[k + 1] = t / n;
  }
  g.resize(K + 1);

  // psi(q/N^{k-1} + m/N^k) = psi(q/N^{k-1}) + m g_k - sigma(q/N^{k-1}, m/N^k).
  struct Rec {
    std::vector<Int> g;
    std::function<Int(const QnRational&, const QnRational&)> sigma;
    Modulus n;
    std::optional<Int> eval(const QnRational& x) const {
      if (x.exp() >= g.size()) return std::nullopt;
      if (x.exp() == 0) return Int(x.num() * g[0]);
      Int q = floor_div(x.num(), Int(n));
      Int m = x.num() - q * n;
      QnRational head = qn_normalize(q, x.exp() - 1, n);
      QnRational tail = qn_normalize(m, x.exp(), n);
      auto h = eval(head);
      if (!h) return std::nullopt;
      return Int(*h + m * g[x.exp()] - sigma(head, tail));
    }
  };
  auto rec = std::make_shared<Rec>(Rec{g, sigma, n});
  CochainSpec psi(n, [rec](const QnRational& x) { return rec->eval(x); });
  return CoboundarySolution{g[0], g, psi};
}

}  // namespace solenoid
