#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "solenoid/classify.hpp"
#include "solenoid/ktheory.hpp"
#include "solenoid/multiplier.hpp"
#include "solenoid/oracle.hpp"

namespace solenoid::codec {

using Json = nlohmann::ordered_json;

// Parses text and rejects floats anywhere in the document. Errors carry
// the source name and line:column.
Json parse_document(std::string_view text, const std::string& source);
Json load_file(const std::string& path);

Json rat_to_json(const Rat& x);
Rat rat_from_json(const Json& j, const char* field);
Int int_from_json(const Json& j, const char* field);

Json nadic_to_json(const NadicInteger& j);
NadicInteger nadic_from_json(const Json& j, Modulus n);

Json qn_to_json(const QnRational& x);
QnRational qn_from_json(const Json& j, Modulus n);

Json element_to_json(const XiElement& a);
XiElement element_from_json(const Json& j);

Json k_to_json(const KElement& e);
Json q_to_json(const QGroupElement& u);
Json angle_to_json(const Angle& a);

template <class T>
Json matrix_to_json(const Matrix2<T>& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rat_to_json(Rat(v)));
    out.push_back(r);
  }
  return out;
}

Json symmetrizer_to_json(const SymmetrizerDescription& s);
Json witness_to_json(const IsoWitness& w);
Json verdict_to_json(const IsoVerdict& v);
Json weak_to_json(const WeakVerdict& v);
Json phase_matrix_to_json(const PhaseMatrix& m);
Json bundle_to_json(const BundleData& b);
Json fuzz_to_json(const FuzzReport& r);

}  // namespace solenoid::codec
