#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

// Drives the built binary on the sample programs and checks output and exit
// codes byte for byte.

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string command = std::string(MODSM_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    out.append(buffer.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string sample(const std::string& name) {
  return std::string(MODSM_SAMPLES) + "/" + name;
}

json load_schema(const std::string& name) {
  std::string path = std::string(MODSM_DOCS) + "/" + name;
  FILE* f = fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::string text;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), f)) > 0)
    text.append(buffer.data(), n);
  fclose(f);
  return json::parse(text);
}

// Checks the subset of JSON Schema the shipped schemas use: type,
// properties, required, items, enum.
bool conforms(const json& value, const json& schema) {
  if (schema.contains("type")) {
    const std::string& type = schema["type"].get_ref<const std::string&>();
    if (type == "object" && !value.is_object()) return false;
    if (type == "array" && !value.is_array()) return false;
    if (type == "string" && !value.is_string()) return false;
    if (type == "integer" && !value.is_number_integer()) return false;
    if (type == "boolean" && !value.is_boolean()) return false;
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const json& candidate : schema["enum"]) hit = hit || candidate == value;
    if (!hit) return false;
  }
  if (schema.contains("required"))
    for (const json& key : schema["required"])
      if (!value.contains(key.get<std::string>())) return false;
  if (schema.contains("properties") && value.is_object())
    for (const auto& [key, sub] : schema["properties"].items())
      if (value.contains(key) && !conforms(value[key], sub)) return false;
  if (schema.contains("items") && value.is_array())
    for (const json& item : value)
      if (!conforms(item, schema["items"])) return false;
  return true;
}

}  // namespace

TEST_CASE("solve prints the unique model of the s/p/q/r program") {
  RunResult r = run("solve " + sample("s.lp") + " --all-intensional");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{p(2), q(1,1), q(1,2), q(2,2), r(1,1), r(1,2), r(2,1), s(1,2)}\n");
}

TEST_CASE("solve output is byte-identical across runs") {
  std::string args = "solve " + sample("hc.mlp") + " --max-atoms 32";
  RunResult first = run(args);
  RunResult second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("in(a,b)") != std::string::npos);
}

TEST_CASE("solve --json validates against the shipped schema") {
  RunResult r = run("solve " + sample("modprog.mlp") + " --json");
  CHECK(r.exit_code == 0);
  json out = json::parse(r.out);
  CHECK(conforms(out, load_schema("models.schema.json")));
  REQUIRE(out["models"].size() == 1);
  CHECK(out["models"][0][0] == "p(2)");
}

TEST_CASE("ground prints sorted rules") {
  RunResult r = run("ground " + sample("s.lp"));
  CHECK(r.exit_code == 0);
  std::string expected =
      "p(2).\n"
      "q(1, 1).\n"
      "q(1, 2).\n"
      "q(2, 2).\n"
      "r(1, 1).\n"
      "r(1, 2).\n"
      "r(2, 1).\n"
      "s(1, 1) :- p(1), q(1, 1), r(1, 1).\n"
      "s(1, 1) :- p(1), q(1, 2), r(1, 2).\n"
      "s(1, 2) :- p(2), q(1, 1), r(1, 1).\n"
      "s(1, 2) :- p(2), q(1, 2), r(1, 2).\n"
      "s(2, 1) :- p(1), q(2, 1), r(2, 1).\n"
      "s(2, 1) :- p(1), q(2, 2), r(2, 2).\n"
      "s(2, 2) :- p(2), q(2, 1), r(2, 1).\n"
      "s(2, 2) :- p(2), q(2, 2), r(2, 2).\n";
  CHECK(r.out == expected);
}

TEST_CASE("parse renders canonically and round-trips") {
  RunResult r = run("parse " + sample("hc_triangle.lp"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("in(X, Y) :- edge(X, Y), not not in(X, Y).") !=
        std::string::npos);
}

TEST_CASE("coherence verdicts and exit codes") {
  RunResult ok = run("coherence " + sample("hc.mlp"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out ==
        "coherent: yes\n"
        "scc: {edge}\n"
        "scc: {in}\n"
        "scc: {r}\n");

  RunResult bad = run("coherence " + sample("noncoherent.mlp"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("coherent: no") == 0);

  RunResult js = run("coherence " + sample("hc.mlp") + " --json");
  CHECK(js.exit_code == 0);
  CHECK(conforms(json::parse(js.out), load_schema("coherence.schema.json")));
}

TEST_CASE("verify split on the non-coherent program exits with 2") {
  RunResult r = run("verify split " + sample("noncoherent.mlp"));
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("verdict: inconclusive") == 0);
  CHECK(r.out.find("precondition") != std::string::npos);
}

TEST_CASE("verify split passes on the four-module program") {
  RunResult r = run("verify split " + sample("modprog.mlp"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict: pass (bounded)") == 0);
}

TEST_CASE("verify ce on the choice pair") {
  RunResult r = run("verify ce " + sample("choice.mlp") + " " +
                    sample("choice_aux.mlp") + " --constants c --json");
  CHECK(r.exit_code == 0);
  json out = json::parse(r.out);
  CHECK(conforms(out, load_schema("report.schema.json")));
  CHECK(out["verdict"] == "pass");
  CHECK(out["stats"][0]["left_models"] == 2);
  CHECK(out["stats"][0]["right_models"] == 2);
}

TEST_CASE("verify projection and CE failure exit codes") {
  RunResult pass = run("verify projection " + sample("projection.lp") +
                       " --rule 0 --vars Y --pred t");
  CHECK(pass.exit_code == 0);

  // choice.mlp is not a conservative extension of choice_aux.mlp in the
  // other direction (pi would shrink), so the precondition fails
  RunResult pre = run("verify ce " + sample("choice_aux.mlp") + " " +
                      sample("choice.mlp") + " --constants c");
  CHECK(pre.exit_code == 2);
}

TEST_CASE("shift and project print programs") {
  RunResult shifted = run("shift " + sample("s.lp") + " --intensional s");
  CHECK(shifted.exit_code == 0);
  CHECK(shifted.out.find("s(X, Z) :- p(Z), q(X, Y), r(X, Y).") == 0);

  RunResult projected = run("project " + sample("projection.lp") +
                            " --rule 0 --vars Y --pred t");
  CHECK(projected.exit_code == 0);
  CHECK(projected.out.find("s(X, Z) :- t(X), p(Z).") == 0);
  CHECK(projected.out.find("t(X) :- q(X, Y), r(X, Y).") != std::string::npos);

  RunResult automatic = run("project " + sample("projection.lp") + " --auto");
  CHECK(automatic.out == projected.out);
}

TEST_CASE("depgraph emits DOT") {
  RunResult r = run("depgraph " + sample("hc.mlp") + " --dot");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("digraph") == 0);
  CHECK(r.out.find("\"r\" -> \"in\";") != std::string::npos);
}

TEST_CASE("usage and error exit codes") {
  CHECK(run("--version").out == std::string("modsm ") + "0.1.0\n");
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("solve /no/such/file.lp").exit_code == 2);
  // base over the default cap without --max-atoms
  RunResult bound = run("solve " + sample("hc.mlp"));
  CHECK(bound.exit_code == 3);
}
