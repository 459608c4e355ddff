#include "solenoid/tools/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <set>

#include "solenoid/error.hpp"
#include "solenoid/tools/codec.hpp"

namespace solenoid::cli {

namespace {

using codec::Json;

struct Options {
  unsigned long bound = 32;
  std::uint64_t seed = 20240601;
  long window_p = kDefaultWindowP;
  unsigned long window_k = kDefaultWindowK;
  unsigned long depth = kDefaultDepth;
  std::size_t trials = kDefaultTrials;
  std::vector<std::string> files;
  std::vector<std::string> g, h;
  std::string z, x, z2, x2, first;
  unsigned long stage = 0;
};

XiElement load_element(const std::string& path) { return codec::element_from_json(codec::load_file(path)); }

// Element files contribute their carrier; bare {"N", "value"|"prefix"} files are carriers.
NadicInteger load_carrier(const std::string& path) {
  Json j = codec::load_file(path);
  if (j.is_object() && j.contains("alpha0")) return codec::element_from_json(j).carrier();
  if (!j.is_object() || !j.contains("N") || !j["N"].is_number_unsigned())
    throw Error(ErrorKind::Parse, path + ": expected an element or a carrier with \"N\"");
  Json c = j;
  c.erase("N");
  return codec::nadic_from_json(c, j["N"].get<Modulus>());
}

QnRational parse_qn(const std::string& text, Modulus n) { return qn_from_rational(parse_rat(text), n); }

QnPoint parse_point(const std::vector<std::string>& v, Modulus n, const char* flag) {
  if (v.size() != 2) throw Error(ErrorKind::Parse, std::string(flag) + " takes two rationals");
  return qn_point(parse_qn(v[0], n), parse_qn(v[1], n));
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_info(const Options& o, std::ostream& out) {
  XiElement a = load_element(o.files.at(0));
  Json r = Json::object();
  r["N"] = a.modulus();
  r["alpha0"] = codec::rat_to_json(a.base());
  r["carrier"] = codec::nadic_to_json(a.carrier());
  unsigned long shown = 8;
  if (auto len = a.carrier().prefix_length()) shown = std::min<unsigned long>(shown, *len + 1);
  Json values = Json::array();
  for (unsigned long n = 0; n < shown; ++n) values.push_back(codec::rat_to_json(xi_value(a, n)));
  r["values"] = values;
  if (!a.carrier().is_rational()) {
    // only the surrogate flag is known about a prefix
    r["type"] = a.surrogate() ? Json(class_name(SolenoidClass::IrrationalSurrogate)) : Json(nullptr);
    r["period"] = nullptr;
    r["symmetrizer"] = nullptr;
    r["simple"] = nullptr;
    emit(out, r);
    return kExitOk;
  }
  r["type"] = class_name(classify_type(a));
  auto period = xi_is_periodic(a);
  r["period"] = period ? Json(*period) : Json(nullptr);
  r["invariant"] = codec::rat_to_json(xi_invariant(a));
  r["symmetrizer"] = codec::symmetrizer_to_json(symmetrizer(a));
  r["simple"] = is_simple(a);
  emit(out, r);
  return kExitOk;
}

int cmd_simple(const Options& o, std::ostream& out) {
  Json r = Json::object();
  r["simple"] = is_simple(load_element(o.files.at(0)));
  emit(out, r);
  return kExitOk;
}

int cmd_symmetrizer(const Options& o, std::ostream& out) {
  emit(out, codec::symmetrizer_to_json(symmetrizer(load_element(o.files.at(0)))));
  return kExitOk;
}

int cmd_pairing(const Options& o, std::ostream& out, bool antisymmetric) {
  XiElement a = load_element(o.files.at(0));
  QnPoint g = parse_point(o.g, a.modulus(), "--g");
  QnPoint h = parse_point(o.h, a.modulus(), "--h");
  emit(out, codec::angle_to_json(antisymmetric ? theta(a, g, h) : psi(a, g, h)));
  return kExitOk;
}

int cmd_k0(const std::string& mode, const Options& o, std::ostream& out) {
  XiElement a = load_element(o.files.at(0));
  Modulus n = a.modulus();
  if (mode == "trace") {
    if (!o.first.empty()) {
      KElement e(a, parse_rat(o.first), parse_qn(o.x, n));
      emit(out, codec::rat_to_json(trace_lift(a, e)));
    } else {
      QGroupElement u(a, parse_int(o.z), parse_qn(o.x, n));
      emit(out, codec::rat_to_json(trace_lift(a, u)));
    }
    return kExitOk;
  }
  if (mode == "member") {
    Json r = Json::object();
    r["member"] = k_member(a, parse_rat(o.first), parse_qn(o.x, n));
    emit(out, r);
    return kExitOk;
  }
  if (mode == "add") {
    QGroupElement u(a, parse_int(o.z), parse_qn(o.x, n));
    QGroupElement v(a, parse_int(o.z2), parse_qn(o.x2, n));
    QGroupElement s = q_add(a, u, v);
    Json r = Json::object();
    r["sum"] = codec::q_to_json(s);
    r["image"] = codec::k_to_json(omega_to_k(a, s));
    r["trace"] = codec::rat_to_json(trace_lift(a, s));
    emit(out, r);
    return kExitOk;
  }
  // stage
  Json r = Json::object();
  r["k"] = o.stage;
  r["r"] = stage_remainder(a, o.stage).get_str();
  r["phi"] = codec::matrix_to_json(phi_k0_matrix(a, o.stage));
  r["upsilon"] = codec::matrix_to_json(upsilon_matrix(a, o.stage));
  emit(out, r);
  return kExitOk;
}

int cmd_cohomologous(const Options& o, std::ostream& out) {
  NadicInteger j = load_carrier(o.files.at(0));
  NadicInteger r = load_carrier(o.files.at(1));
  auto w = cohomologous(j, r);
  Json res = Json::object();
  res["cohomologous"] = w.has_value();
  if (w) {
    res["psi1"] = w->psi1.get_str();
    Json values = Json::array();
    for (unsigned long k = 0; k <= 4; ++k) {
      QnRational x = qn_normalize(1, k, j.modulus());
      Json e = Json::object();
      e["x"] = codec::qn_to_json(x);
      e["psi"] = w->psi.at(x).get_str();
      values.push_back(e);
    }
    res["psi"] = values;
  }
  emit(out, res);
  return kExitOk;
}

int cmd_weak(const Options& o, std::ostream& out) {
  WeakVerdict v = weakly_equivalent(load_carrier(o.files.at(0)), load_carrier(o.files.at(1)), o.bound);
  emit(out, codec::weak_to_json(v));
  return v.kind == WeakVerdict::Kind::Unknown ? kExitUnknown : kExitOk;
}

int cmd_iso(const Options& o, std::ostream& out) {
  IsoVerdict v = isomorphic(load_element(o.files.at(0)), load_element(o.files.at(1)), o.bound);
  emit(out, codec::verdict_to_json(v));
  return v.kind == IsoVerdict::Kind::Unknown ? kExitUnknown : kExitOk;
}

int cmd_bundle(const Options& o, std::ostream& out) {
  emit(out, codec::bundle_to_json(bundle_data(load_element(o.files.at(0)))));
  return kExitOk;
}

Json check(const std::string& name, bool pass) {
  Json c = Json::object();
  c["name"] = name;
  c["pass"] = pass;
  return c;
}

// The brute window against the closed form, point by point.
Json symmetrizer_check(const std::string& name, const XiElement& a, long P, unsigned long K) {
  auto brute = brute_symmetrizer(a, P, K);
  SymmetrizerDescription s = symmetrizer(a);
  std::size_t expected = 0;
  for (const auto& g : window_points(a.modulus(), P, K))
    if (s.contains(g)) ++expected;
  bool agree = brute.size() == expected;
  for (const auto& g : brute) agree = agree && s.contains(g);
  Json c = check(name, agree);
  c["window"] = {{"P", P}, {"K", K}};
  c["brute"] = brute.size();
  c["closed_form"] = expected;
  return c;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  Json checks = Json::array();
  XiElement lattice62 = xi_new(5, make_rat(1, 62), NadicInteger::from_rational(5, make_rat(-1, 62)));
  XiElement half = xi_constant(3, make_rat(1, 2));
  XiElement aperiodic = xi_new(3, Rat(0), zn_iota(1, 3));

  checks.push_back(symmetrizer_check("symmetrizer_n5", lattice62, o.window_p, o.window_k));
  checks.push_back(symmetrizer_check("symmetrizer_const_half", half, std::min(o.window_p, 20L), 3));
  checks.push_back(symmetrizer_check("symmetrizer_aperiodic", aperiodic, std::min(o.window_p, 10L), 3));
  checks.push_back(symmetrizer_check("symmetrizer_zero", xi_zero(2), std::min(o.window_p, 4L), 2));

  struct FuzzCase {
    std::string name;
    FuzzKind kind;
    FuzzParams params;
  };
  std::vector<FuzzCase> cases;
  for (Modulus n : {2UL, 3UL, 6UL, 10UL, 12UL}) {
    FuzzParams p;
    p.j = zn_iota(1, n);
    std::string tag = "_N" + std::to_string(n) + "_iota1";
    cases.push_back({"xi" + tag, FuzzKind::Xi, p});
    cases.push_back({"zeta" + tag, FuzzKind::Zeta, p});
  }
  FuzzParams minus_half;
  minus_half.j = NadicInteger::from_rational(3, make_rat(-1, 2));
  cases.push_back({"xi_N3_minus_half", FuzzKind::Xi, minus_half});
  cases.push_back({"zeta_N3_minus_half", FuzzKind::Zeta, minus_half});
  for (const auto& [tag, a] : {std::pair<std::string, XiElement>{"n5", lattice62}, {"const_half", half},
                               {"aperiodic", aperiodic}}) {
    FuzzParams p;
    p.alpha = a;
    cases.push_back({"psi_bichar_" + tag, FuzzKind::PsiBichar, p});
  }
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& fc = cases[i];
    FuzzReport rep = cocycle_fuzz(fc.kind, fc.params, o.trials, o.seed + i);
    Json c = check("fuzz_" + fc.name, rep.ok());
    c["report"] = codec::fuzz_to_json(rep);
    checks.push_back(c);
  }

  for (const auto& [name, a] : {std::pair<const char*, XiElement>{"colimit_const_half", half},
                                std::pair<const char*, XiElement>{"colimit_aperiodic", aperiodic}}) {
    ColimitReport rep = colimit_check(a, o.depth);
    Json c = check(name, rep.ok);
    c["depth"] = o.depth;
    c["classes"] = rep.classes;
    c["targets"] = rep.targets;
    c["failures"] = rep.failures;
    checks.push_back(c);
  }

  {
    auto solved = coboundary_solve(zn_iota(5, 3), zn_iota(0, 3));
    auto witness = cohomologous(zn_iota(5, 3), zn_iota(0, 3));
    bool pass = solved && witness && solved->psi1 == witness->psi1;
    for (unsigned long k = 0; pass && k <= 8; ++k) {
      QnRational x = qn_normalize(1, k, 3);
      pass = solved->psi.at(x) == witness->psi.at(x);
    }
    checks.push_back(check("coboundary_iota5", pass));
    checks.push_back(check("coboundary_minus_half",
                           !coboundary_solve(NadicInteger::from_rational(3, make_rat(-1, 2)), zn_iota(0, 3))));
  }

  bool all = true;
  for (const auto& c : checks) all = all && c["pass"].get<bool>();
  Json r = Json::object();
  r["seed"] = o.seed;
  r["trials"] = o.trials;
  r["checks"] = checks;
  r["pass"] = all;
  emit(out, r);
  return all ? kExitOk : kExitSelftestFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of noncommutative solenoids, in exact arithmetic"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub, std::size_t files) {
    sub->add_option("files", o.files, "element files")->required()->expected(static_cast<int>(files));
    return sub;
  };
  std::function<int()> action;

  auto* info = add_common(app.add_subcommand("info", "summary of an element"), 1);
  info->callback([&] { action = [&] { return cmd_info(o, out); }; });
  auto* simple = add_common(app.add_subcommand("simple", "simplicity of the twisted algebra"), 1);
  simple->callback([&] { action = [&] { return cmd_simple(o, out); }; });
  auto* sym = add_common(app.add_subcommand("symmetrizer", "symmetrizer group"), 1);
  sym->callback([&] { action = [&] { return cmd_symmetrizer(o, out); }; });
  for (const char* name : {"psi", "theta"}) {
    auto* sub = add_common(app.add_subcommand(name, name == std::string("psi") ? "multiplier value" : "antisymmetrized value"), 1);
    sub->add_option("--g", o.g, "first point, two rationals")->required()->expected(2);
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->add_option("--h", o.h, "second point, two rationals")->required()->expected(2);
    bool anti = name == std::string("theta");
    sub->callback([&, anti] { action = [&, anti] { return cmd_pairing(o, out, anti); }; });
  }

  auto* k0 = app.add_subcommand("k0", "K0 group computations");
  k0->require_subcommand(1);
  auto* trace = add_common(k0->add_subcommand("trace", "trace of (z, x) or of a K-element (--first, --x)"), 1);
  trace->add_option("--z", o.z, "integer part");
  trace->add_option("--first", o.first, "first coordinate of a K-element");
  trace->add_option("--x", o.x, "N-adic rational")->required();
  trace->callback([&] {
    if (o.z.empty() == o.first.empty()) throw CLI::ValidationError("trace", "give exactly one of --z or --first");
    action = [&] { return cmd_k0("trace", o, out); };
  });
  auto* member = add_common(k0->add_subcommand("member", "membership of (first, x) in the K-group"), 1);
  member->add_option("--first", o.first, "first coordinate")->required();
  member->add_option("--x", o.x, "second coordinate")->required();
  member->callback([&] { action = [&] { return cmd_k0("member", o, out); }; });
  auto* add = add_common(k0->add_subcommand("add", "twisted sum of two (z, x) pairs"), 1);
  add->add_option("--z", o.z)->required();
  add->add_option("--x", o.x)->required();
  add->add_option("--z2", o.z2)->required();
  add->add_option("--x2", o.x2)->required();
  add->callback([&] { action = [&] { return cmd_k0("add", o, out); }; });
  auto* stage = add_common(k0->add_subcommand("stage", "connecting and limit matrices at a stage"), 1);
  stage->add_option("--k", o.stage)->required();
  stage->callback([&] { action = [&] { return cmd_k0("stage", o, out); }; });

  auto* coh = add_common(app.add_subcommand("cohomologous", "cohomology of the carrier cocycles"), 2);
  coh->callback([&] { action = [&] { return cmd_cohomologous(o, out); }; });
  auto* weak = add_common(app.add_subcommand("weak", "weak equivalence of carrier extensions"), 2);
  weak->add_option("--bound", o.bound, "largest exponent tried");
  weak->callback([&] { action = [&] { return cmd_weak(o, out); }; });
  auto* iso = add_common(app.add_subcommand("iso", "isomorphism decision"), 2);
  iso->add_option("--bound", o.bound, "largest shift tried");
  iso->callback([&] { action = [&] { return cmd_iso(o, out); }; });
  auto* bundle = add_common(app.add_subcommand("bundle", "matrix bundle data of a periodic element"), 1);
  bundle->callback([&] { action = [&] { return cmd_bundle(o, out); }; });

  auto* self = app.add_subcommand("selftest", "run every oracle against the closed forms");
  self->add_option("--seed", o.seed);
  self->add_option("--window-p", o.window_p)->check(CLI::Range(1L, 1000L));
  self->add_option("--window-k", o.window_k)->check(CLI::Range(0UL, 8UL));
  self->add_option("--depth", o.depth)->check(CLI::Range(0UL, 12UL));
  self->add_option("--trials", o.trials)->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
  self->callback([&] { action = [&] { return cmd_selftest(o, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDomain;
  }
  try {
    return action();
  } catch (const Error& e) {
    Json d = Json::object();
    d["error"] = kind_name(e.kind());
    d["message"] = e.what();
    err << d.dump() << '\n';
    return kExitDomain;
  }
}

}  // namespace solenoid::cli
