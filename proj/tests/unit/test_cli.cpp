#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "solenoid/error.hpp"
#include "solenoid/tools/cli.hpp"
#include "solenoid/tools/codec.hpp"

using namespace solenoid;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(SOLENOID_TEST_DATA) + "/" + name; }

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "solenoid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

codec::Json json_of(const Result& r) { return codec::Json::parse(r.out); }

}  // namespace

TEST_CASE("symmetrizer and trace outputs") {
  Result s = run({"symmetrizer", data("n5.json")});
  CHECK(s.code == 0);
  CHECK(s.out == "{\"variant\":\"ScaledLattice\",\"b\":62}\n");
  Result t = run({"k0", "trace", "--z", "1", "--x", "0/1", data("half3.json")});
  CHECK(t.code == 0);
  CHECK(t.out == "\"1\"\n");
  Result k = run({"k0", "trace", "--first", "1/3", "--x", "1/3", data("half3.json")});
  CHECK(k.out == "\"1/2\"\n");
  Result m = run({"k0", "member", "--first", "2/3", "--x", "1/3", data("half3.json")});
  CHECK(json_of(m)["member"] == false);
  Result a = run({"k0", "add", "--z", "0", "--x", "1/3", "--z2", "0", "--x2", "2/3", data("half3.json")});
  CHECK(json_of(a)["sum"]["z"] == "1");
  CHECK(json_of(a)["trace"] == "3/2");
  Result st = run({"k0", "stage", "--k", "1", data("half3.json")});
  CHECK(json_of(st)["upsilon"][0][1] == "4/9");
  Result p = run({"psi", data("n5.json"), "--g", "1/5", "0", "--h", "0", "1/5"});
  CHECK(p.out == "\"5/62\"\n");
  Result th = run({"theta", data("half3.json"), "--g", "2", "0", "--h", "0", "1"});
  CHECK(th.out == "\"0\"\n");
}

TEST_CASE("info reports") {
  auto half = json_of(run({"info", data("half3.json")}));
  CHECK(half["type"] == "RationalPeriodic");
  CHECK(half["period"] == 1);
  CHECK(half["values"].size() == 8);
  auto zero = json_of(run({"info", data("zero2.json")}));
  CHECK(zero["type"] == "RationalPeriodic");
  CHECK(zero["symmetrizer"]["variant"] == "Full");
  auto ap = json_of(run({"info", data("aperiodic3.json")}));
  CHECK(ap["simple"] == true);
  CHECK(ap["period"].is_null());
  CHECK(json_of(run({"simple", data("aperiodic3.json")}))["simple"] == true);
  auto pre = run({"info", data("prefix3.json")});
  CHECK(pre.code == 0);
  CHECK(json_of(pre)["values"].size() == 5);
  CHECK(json_of(pre)["type"] == "IrrationalSurrogate");
  CHECK(json_of(pre)["simple"].is_null());
  CHECK(run({"symmetrizer", data("prefix3.json")}).code == 2);
}

TEST_CASE("decisions and exit codes") {
  Result yes = run({"iso", data("third2.json"), data("third4.json"), "--bound", "32"});
  CHECK(yes.code == 0);
  CHECK(json_of(yes)["verdict"] == "Yes");
  CHECK(json_of(yes)["witness"]["r"] == 2);
  Result no = run({"iso", data("third2.json"), data("fifth2.json")});
  CHECK(no.code == 0);
  CHECK(json_of(no)["verdict"] == "No");
  Result unknown = run({"iso", data("nine_a.json"), data("nine_b.json")});
  CHECK(unknown.code == 3);
  CHECK(json_of(unknown)["verdict"] == "Unknown");
  Result weak = run({"weak", data("c7a.json"), data("c7b.json"), "--bound", "1"});
  CHECK(weak.code == 3);
  Result weak_no = run({"weak", data("c7a.json"), data("c7b.json"), "--bound", "5"});
  CHECK(weak_no.code == 0);
  CHECK(json_of(weak_no)["verdict"] == "No");
  Result coh = run({"cohomologous", data("half3.json"), data("half3.json")});
  CHECK(json_of(coh)["cohomologous"] == true);
  Result coh_no = run({"cohomologous", data("half3.json"), data("aperiodic3.json")});
  CHECK(json_of(coh_no)["cohomologous"] == false);
  auto b = json_of(run({"bundle", data("third2.json")}));
  CHECK(b["q"] == 3);
  CHECK(b["k"] == 2);
  CHECK(b["lambda"] == "1/3");
  Result dom = run({"k0", "trace", "--first", "1/2", "--x", "1/3", data("half3.json")});
  CHECK(dom.code == 2);
  CHECK(dom.out.empty());
  CHECK(codec::Json::parse(dom.err)["error"] == "not-in-K");
  CHECK(run({"bundle", data("aperiodic3.json")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("input validation") {
  Result f = run({"info", data("float.json")});
  CHECK(f.code == 2);
  CHECK(f.err.find("float.json:2:13") != std::string::npos);
  Result b = run({"info", data("broken.json")});
  CHECK(b.code == 2);
  CHECK(b.err.find("broken.json:3:") != std::string::npos);
  CHECK(run({"info", data("missing.json")}).code == 2);

  auto bad = [](const char* text) {
    try {
      codec::element_from_json(codec::parse_document(text, "inline"));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Unsupported;
  };
  CHECK(bad(R"({"N": 3, "alpha0": "1/2"})") == ErrorKind::Parse);
  CHECK(bad(R"({"N": 3, "alpha0": "1/2", "carrier": {"value": "-1/2"}, "extra": 1})") == ErrorKind::Parse);
  CHECK(bad(R"({"N": 3, "alpha0": "0.5", "carrier": {"value": "-1/2"}})") == ErrorKind::Parse);
  CHECK(bad(R"({"N": 3, "alpha0": "1/2", "carrier": {"value": 1e3}})") == ErrorKind::Parse);
  CHECK(bad(R"({"N": 1, "alpha0": "0", "carrier": {"value": "0"}})") == ErrorKind::InvalidModulus);
  CHECK(bad(R"({"N": 3, "alpha0": "3/2", "carrier": {"value": "0"}})") == ErrorKind::InvalidValue);
  CHECK(bad(R"({"N": 3, "alpha0": "1/2", "carrier": {"value": "-1/2", "prefix": [1]}})") == ErrorKind::Parse);
}

TEST_CASE("codec round trips") {
  for (const char* text : {R"({"N":3,"alpha0":"1/2","carrier":{"value":"-1/2"}})",
                           R"({"N":3,"alpha0":"1/4","carrier":{"prefix":[2,0,1,1]},"surrogate":true})",
                           R"({"N":12,"alpha0":"0","carrier":{"value":"9"}})"}) {
    XiElement a = codec::element_from_json(codec::parse_document(text, "inline"));
    CHECK(codec::element_to_json(a).dump() == text);
  }
  QnRational x = qn_normalize(-7, 2, 3);
  CHECK(codec::qn_to_json(x).dump() == R"({"num":"-7","exp":2})");
  CHECK(codec::qn_from_json(codec::qn_to_json(x), 3) == x);
  XiElement h = codec::element_from_json(codec::load_file(data("half3.json")));
  KElement e(h, make_rat(1, 3), qn_normalize(1, 1, 3));
  CHECK(codec::k_to_json(e).dump() == R"({"first":"1/3","second":{"num":"1","exp":1}})");
  CHECK(codec::matrix_to_json(upsilon_matrix(h, 1)).dump() == R"([["1","4/9"],["0","1/9"]])");
}

TEST_CASE("selftest is deterministic") {
  Result a = run({"selftest", "--seed", "5", "--trials", "40", "--window-p", "30", "--depth", "3"});
  Result b = run({"selftest", "--seed", "5", "--trials", "40", "--window-p", "30", "--depth", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = json_of(a);
  CHECK(j["pass"] == true);
  CHECK(j["seed"] == 5);
  CHECK(j["checks"].size() > 10);
}
