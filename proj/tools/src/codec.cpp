#include "solenoid/tools/codec.hpp"

#include <fstream>
#include <sstream>

#include "solenoid/error.hpp"

namespace solenoid::codec {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Json int_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

}  // namespace

Json parse_document(std::string_view text, const std::string& source) {
  // Track the last number token so a float can be reported in place.
  std::size_t float_at = std::string::npos;
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end(), [&](int, Json::parse_event_t ev, Json& v) {
      if (ev == Json::parse_event_t::value && v.is_number_float() && float_at == std::string::npos) float_at = 0;
      return true;
    });
  } catch (const Json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    auto cut = msg.find("parse error");
    bad(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
        (cut == std::string::npos ? msg : msg.substr(cut)));
  }
  if (float_at != std::string::npos) {
    // Locate the first decimal literal for the message.
    std::size_t pos = 0;
    bool in_string = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == '"' && (i == 0 || text[i - 1] != '\\')) in_string = !in_string;
      if (!in_string && (c == '.' || c == 'e' || c == 'E') && i > 0 && std::isdigit(static_cast<unsigned char>(text[i - 1]))) {
        pos = i;
        break;
      }
    }
    auto [line, col] = line_col(text, pos);
    bad(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
        ": floating-point literal rejected, write rationals as \"a/b\"");
  }
  return doc;
}

Json load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

Json rat_to_json(const Rat& x) { return Json(to_string(x)); }

Rat rat_from_json(const Json& j, const char* field) {
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const Error& e) {
      bad(std::string(field) + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rat(Int(j.get<long>()));
  bad(std::string(field) + ": expected a rational string \"a/b\"");
}

Int int_from_json(const Json& j, const char* field) {
  if (j.is_number_unsigned()) return Int(j.get<unsigned long>());
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_int(j.get<std::string>());
    } catch (const Error& e) {
      bad(std::string(field) + ": " + e.what());
    }
  }
  bad(std::string(field) + ": expected an integer");
}

Json nadic_to_json(const NadicInteger& j) {
  Json out = Json::object();
  if (j.is_rational()) {
    out["value"] = rat_to_json(j.rational());
  } else {
    out["prefix"] = j.digits();
  }
  return out;
}

NadicInteger nadic_from_json(const Json& j, Modulus n) {
  if (!j.is_object()) bad("carrier: expected an object");
  if (j.contains("value") == j.contains("prefix")) bad("carrier: give exactly one of \"value\" or \"prefix\"");
  if (j.contains("value")) return NadicInteger::from_rational(n, rat_from_json(j["value"], "carrier.value"));
  const Json& p = j["prefix"];
  if (!p.is_array()) bad("carrier.prefix: expected an array of digits");
  std::vector<unsigned long> digits;
  for (const auto& d : p) {
    if (!d.is_number_unsigned()) bad("carrier.prefix: digits must be naturals");
    digits.push_back(d.get<unsigned long>());
  }
  return NadicInteger::from_prefix(n, std::move(digits));
}

Json qn_to_json(const QnRational& x) {
  Json out = Json::object();
  out["num"] = x.num().get_str();
  out["exp"] = x.exp();
  return out;
}

QnRational qn_from_json(const Json& j, Modulus n) {
  if (j.is_string()) return qn_from_rational(rat_from_json(j, "qn"), n);
  if (!j.is_object() || !j.contains("num") || !j.contains("exp")) bad("expected {\"num\": \"p\", \"exp\": k}");
  if (!j["exp"].is_number_unsigned()) bad("exp: expected a natural");
  return qn_normalize(int_from_json(j["num"], "num"), j["exp"].get<unsigned long>(), n);
}

Json element_to_json(const XiElement& a) {
  Json out = Json::object();
  out["N"] = a.modulus();
  out["alpha0"] = rat_to_json(a.base());
  out["carrier"] = nadic_to_json(a.carrier());
  if (a.surrogate()) out["surrogate"] = true;
  return out;
}

XiElement element_from_json(const Json& j) {
  if (!j.is_object()) bad("element: expected an object");
  for (const char* key : {"N", "alpha0", "carrier"})
    if (!j.contains(key)) bad(std::string("element: missing \"") + key + "\"");
  for (const auto& [key, v] : j.items())
    if (key != "N" && key != "alpha0" && key != "carrier" && key != "surrogate")
      bad("element: unknown field \"" + key + "\"");
  if (!j["N"].is_number_unsigned()) bad("N: expected a natural number");
  Modulus n = j["N"].get<Modulus>();
  if (n < 2) throw Error(ErrorKind::InvalidModulus, "N must be at least 2");
  XiElement a = xi_new(n, rat_from_json(j["alpha0"], "alpha0"), nadic_from_json(j["carrier"], n));
  if (j.contains("surrogate")) {
    if (!j["surrogate"].is_boolean()) bad("surrogate: expected a boolean");
    a = a.as_surrogate(j["surrogate"].get<bool>());
  }
  return a;
}

Json k_to_json(const KElement& e) {
  Json out = Json::object();
  out["first"] = rat_to_json(e.first());
  out["second"] = qn_to_json(e.second());
  return out;
}

Json q_to_json(const QGroupElement& u) {
  Json out = Json::object();
  out["z"] = u.z().get_str();
  out["x"] = qn_to_json(u.x());
  return out;
}

Json angle_to_json(const Angle& a) { return Json(a.str()); }

Json symmetrizer_to_json(const SymmetrizerDescription& s) {
  Json out = Json::object();
  out["variant"] = variant_name(s.variant);
  if (s.variant == SymmetrizerDescription::Variant::ScaledLattice) out["b"] = int_json(s.b);
  return out;
}

Json witness_to_json(const IsoWitness& w) {
  Json out = Json::object();
  out["r"] = w.r;
  out["mu"] = w.mu;
  out["nu"] = w.nu;
  out["p"] = int_json(w.p);
  out["sign"] = w.sign;
  out["direction"] = w.direction == IsoWitness::Direction::AlphaFromBeta ? "AlphaFromBeta" : "BetaFromAlpha";
  out["shift_alpha"] = w.shift_alpha;
  out["shift_beta"] = w.shift_beta;
  out["orderings"] = w.orderings;
  return out;
}

Json verdict_to_json(const IsoVerdict& v) {
  Json out = Json::object();
  out["verdict"] = verdict_name(v.kind);
  if (v.witness) out["witness"] = witness_to_json(*v.witness);
  if (!v.reason.empty()) out["reason"] = v.reason;
  out["bound"] = v.bound;
  return out;
}

Json weak_to_json(const WeakVerdict& v) {
  Json out = Json::object();
  switch (v.kind) {
    case WeakVerdict::Kind::Yes: out["verdict"] = "Yes"; break;
    case WeakVerdict::Kind::No: out["verdict"] = "No"; break;
    case WeakVerdict::Kind::Unknown: out["verdict"] = "Unknown"; break;
  }
  if (v.kind == WeakVerdict::Kind::Yes) {
    out["k"] = v.k;
    out["direction"] = v.direction == WeakVerdict::Direction::ScaledFirst ? "ScaledFirst" : "ScaledSecond";
  }
  if (!v.reason.empty()) out["reason"] = v.reason;
  return out;
}

Json phase_matrix_to_json(const PhaseMatrix& m) {
  Json out = Json::object();
  out["col"] = m.col;
  Json ph = Json::array();
  for (const auto& a : m.phase) ph.push_back(angle_to_json(a));
  out["phase"] = ph;
  return out;
}

Json bundle_to_json(const BundleData& b) {
  Json out = Json::object();
  out["k"] = b.k;
  out["q"] = int_json(b.q);
  out["p"] = int_json(b.p);
  out["lambda"] = angle_to_json(b.lambda);
  out["base"] = b.base;
  out["u"] = phase_matrix_to_json(b.u);
  out["v"] = phase_matrix_to_json(b.v);
  return out;
}

Json fuzz_to_json(const FuzzReport& r) {
  Json out = Json::object();
  out["kind"] = fuzz_kind_name(r.kind);
  out["seed"] = r.seed;
  out["trials"] = r.trials;
  out["passed"] = r.passed;
  out["counterexamples"] = r.counterexamples;
  return out;
}

}  // namespace solenoid::codec
