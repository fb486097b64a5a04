// End-to-end drive of the command-line binary: pinned output fixtures, the
// exit-code contract, JSON shape validation against the published schema,
// and byte determinism across thread counts and repeated runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "testutil.hpp"

using nlohmann::json;
using oqtest::run_cli;

namespace {

#ifndef OQ_BIN
#error "OQ_BIN must point at the CLI binary"
#endif
#ifndef OQ_SCHEMA
#error "OQ_SCHEMA must point at the output schema"
#endif

std::string bin() { return std::string(OQ_BIN); }

// Minimal JSON-schema checker covering the subset the published schema uses:
// $ref into $defs, oneOf, const, enum, type, required, properties, items.
class SchemaChecker {
 public:
  explicit SchemaChecker(const json& root) : root_(root) {}

  bool valid(const json& schema, const json& value, std::string* why) const {
    if (schema.contains("$ref")) {
      const std::string ref = schema["$ref"].get<std::string>();
      const json* target = resolve(ref);
      if (!target) return complain(why, "unresolvable $ref " + ref);
      return valid(*target, value, why);
    }
    if (schema.contains("oneOf")) {
      int hits = 0;
      for (const json& option : schema["oneOf"])
        if (valid(option, value, nullptr)) ++hits;
      if (hits != 1)
        return complain(why, "oneOf matched " + std::to_string(hits) + " branches");
    }
    if (schema.contains("const") && value != schema["const"])
      return complain(why, "const mismatch: got " + value.dump());
    if (schema.contains("enum")) {
      bool hit = false;
      for (const json& e : schema["enum"])
        if (value == e) hit = true;
      if (!hit) return complain(why, "enum mismatch: got " + value.dump());
    }
    if (schema.contains("type")) {
      const std::string t = schema["type"].get<std::string>();
      bool ok = (t == "object" && value.is_object()) || (t == "array" && value.is_array()) ||
                (t == "string" && value.is_string()) || (t == "boolean" && value.is_boolean()) ||
                (t == "integer" && value.is_number_integer());
      if (!ok) return complain(why, "expected type " + t + ", got " + value.dump());
    }
    if (schema.contains("required"))
      for (const json& key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          return complain(why, "missing required key " + key.get<std::string>());
    if (schema.contains("properties") && value.is_object())
      for (const auto& [key, sub] : schema["properties"].items())
        if (value.contains(key)) {
          if (!valid(sub, value.at(key), why)) {
            if (why) *why = "at ." + key + ": " + *why;
            return false;
          }
        }
    if (schema.contains("items") && value.is_array()) {
      size_t idx = 0;
      for (const json& element : value) {
        if (!valid(schema["items"], element, why)) {
          if (why) *why = "at [" + std::to_string(idx) + "]: " + *why;
          return false;
        }
        ++idx;
      }
    }
    return true;
  }

  bool valid_root(const json& value, std::string* why) const {
    return valid(root_, value, why);
  }

 private:
  const json* resolve(const std::string& ref) const {
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) return nullptr;
    const std::string name = ref.substr(prefix.size());
    if (!root_.contains("$defs") || !root_["$defs"].contains(name)) return nullptr;
    return &root_["$defs"][name];
  }
  static bool complain(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
  }
  const json& root_;
};

json load_schema() {
  std::ifstream in(OQ_SCHEMA);
  REQUIRE(in.good());
  json schema;
  in >> schema;
  return schema;
}

void check_json_verb(const SchemaChecker& checker, const std::string& args,
                     const std::string& expect_command) {
  auto res = run_cli(bin() + " " + args + " --format json 2>/dev/null");
  CAPTURE(args);
  CHECK(res.exit_code == 0);
  json parsed = json::parse(res.out, nullptr, false);
  REQUIRE(!parsed.is_discarded());
  CHECK(parsed["command"] == expect_command);
  CHECK(parsed["version"] == "0.1.0");
  std::string why;
  bool ok = checker.valid_root(parsed, &why);
  CAPTURE(why);
  CHECK(ok);
}

}  // namespace

TEST_CASE("version flag") {
  auto res = run_cli(bin() + " --version");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "0.1.0\n");
}

TEST_CASE("pinned product fixtures print byte-exactly") {
  auto ef = run_cli(bin() + " star --algebra sl2 --eigs 1,-1 --deg 4 xE xF 2>/dev/null");
  CHECK(ef.exit_code == 0);
  CHECK(ef.out == "1 + 1/2*h*xH - 1/4*xH^2\n");
  auto fe = run_cli(bin() + " star --algebra sl2 --eigs 1,-1 --deg 4 xF xE 2>/dev/null");
  CHECK(fe.exit_code == 0);
  CHECK(fe.out == "1 - 1/2*h*xH - 1/4*xH^2\n");
  auto weyl =
      run_cli(bin() + " star --algebra sl2 --eigs 1,-1 --deg 4 --mode weyl xE xF 2>/dev/null");
  CHECK(weyl.out == ef.out);
}

TEST_CASE("exit codes follow the contract") {
  // 0: healthy check run.
  auto ok = run_cli(bin() + " check --algebra sl2 --eigs 1,-1 2>/dev/null");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("all checks passed") != std::string::npos);
  // 1: domain errors (valid syntax, impossible spec).
  CHECK(run_cli(bin() + " orbit --algebra sl3 --eigs 1:2,-1:1 2>/dev/null").exit_code == 1);
  CHECK(run_cli(bin() + " orbit --algebra sl3 --eigs 1:1,1:2 2>/dev/null").exit_code == 1);
  CHECK(run_cli(bin() + " ideal --algebra sl3 --eigs 1:2,-2:1 --source regular 2>/dev/null")
            .exit_code == 1);
  CHECK(run_cli(bin() + " star --algebra sl2 --eigs 1,-1 --deg 2 xH^3 xH 2>/dev/null")
            .exit_code == 1);
  // 3: parse errors in eigenvalues, polynomials, and the command line.
  CHECK(run_cli(bin() + " orbit --algebra sl3 --eigs 1:2,-2:x 2>/dev/null").exit_code == 3);
  CHECK(run_cli(bin() + " star --algebra sl2 --eigs 1,-1 xQ xF 2>/dev/null").exit_code == 3);
  CHECK(run_cli(bin() + " star --algebra sl2 --eigs 1,-1 'xE + ' xF 2>/dev/null").exit_code == 3);
  CHECK(run_cli(bin() + " star --algebra sl5 --eigs 1,-1 xE xF 2>/dev/null").exit_code == 3);
  CHECK(run_cli(bin() + " nonsense --algebra sl2 2>/dev/null").exit_code == 3);
  CHECK(run_cli(bin() + " star --algebra sl2 --eigs 1,-1 --mode bogus xE xF 2>/dev/null")
            .exit_code == 3);
}

TEST_CASE("error messages identify the failure on stderr") {
  auto res = run_cli(bin() + " orbit --algebra sl3 --eigs 1:2,-1:1 2>&1");
  CHECK(res.out.find("TraceNotZero") != std::string::npos);
  auto unk = run_cli(bin() + " star --algebra sl2 --eigs 1,-1 xQ xF 2>&1 >/dev/null");
  CHECK(unk.out.find("UnknownVariable") != std::string::npos);
}

TEST_CASE("every verb emits schema-conforming JSON") {
  json schema = load_schema();
  SchemaChecker checker(schema);
  check_json_verb(checker, "algebra --algebra sl2", "algebra");
  check_json_verb(checker, "invariants --algebra sl3", "invariants");
  check_json_verb(checker, "orbit --algebra sl3 --eigs 1:2,-2:1", "orbit");
  check_json_verb(checker, "ideal --algebra sl3 --eigs 1:2,-2:1", "ideal");
  check_json_verb(checker, "gb --algebra sl2 --eigs 1,-1", "gb");
  check_json_verb(checker, "stdmon --algebra sl2 --eigs 1,-1 --deg 2", "stdmon");
  check_json_verb(checker, "lift --algebra sl2 --eigs 1,-1", "lift");
  check_json_verb(checker, "engine --algebra sl3 --eigs 1:2,-2:1 --deg 2", "engine");
  check_json_verb(checker, "star --algebra sl2 --eigs 1,-1 --deg 4 xE xF", "star");
  check_json_verb(checker, "check --algebra sl2 --eigs 1,-1 --deg 3", "check");
  check_json_verb(checker, "eval --algebra sl2 --eigs 1,-1 --h0 1/3", "eval");
}

TEST_CASE("schema verdicts are not vacuous") {
  json schema = load_schema();
  SchemaChecker checker(schema);
  std::string why;
  CHECK(!checker.valid_root(json::parse(R"({"command":"star"})"), &why));
  CHECK(!checker.valid_root(json::parse(R"({"command":"bogus","version":"0.1.0"})"), &why));
  json star = json::parse(R"({
    "command":"star","version":"0.1.0",
    "spec":{"algebra":"sl2","eigs":[{"value":"1","multiplicity":1}],
            "regular":true,"source":"regular","degree":4,"order":"default"},
    "mode":"std","f":"xE","g":"xF","result":"1"})");
  CHECK(checker.valid_root(star, &why));
  star["mode"] = "sideways";
  CHECK(!checker.valid_root(star, &why));
}

TEST_CASE("star results re-enter the parser unchanged") {
  auto first = run_cli(bin() + " star --algebra sl2 --eigs 1,-1 --deg 4 xE xF 2>/dev/null");
  REQUIRE(first.exit_code == 0);
  std::string result = first.out.substr(0, first.out.size() - 1);  // strip newline
  // Multiplying the rendered result by 1 reduces to the same rendering.
  auto again =
      run_cli(bin() + " star --algebra sl2 --eigs 1,-1 --deg 4 '" + result + "' 1 2>/dev/null");
  CHECK(again.exit_code == 0);
  CHECK(again.out == first.out);
}

TEST_CASE("output is byte-identical across runs and thread counts") {
  const std::string base = " check --algebra sl3 --eigs 1:2,-2:1 --deg 3";
  auto t1 = run_cli(bin() + base + " --threads 1 2>/dev/null");
  auto t2 = run_cli(bin() + base + " --threads 2 2>/dev/null");
  auto t8 = run_cli(bin() + base + " --threads 8 2>/dev/null");
  auto env = run_cli("OQ_THREADS=4 " + bin() + base + " 2>/dev/null");
  auto rerun = run_cli(bin() + base + " --threads 1 2>/dev/null");
  CHECK(t1.exit_code == 0);
  CHECK(t1.out == t2.out);
  CHECK(t1.out == t8.out);
  CHECK(t1.out == env.out);
  CHECK(t1.out == rerun.out);
  CHECK(run_cli(bin() + base + " --threads 0 2>/dev/null").exit_code == 1);
  CHECK(run_cli("OQ_THREADS=abc " + bin() + base + " 2>/dev/null").exit_code == 3);
}

TEST_CASE("timings go to stderr leaving stdout deterministic") {
  auto with_err = run_cli(bin() + " engine --algebra sl2 --eigs 1,-1 2>&1");
  CHECK(with_err.out.find("timing:") != std::string::npos);
  auto clean = run_cli(bin() + " engine --algebra sl2 --eigs 1,-1 2>/dev/null");
  CHECK(clean.out.find("timing:") == std::string::npos);
}
