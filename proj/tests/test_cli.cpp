#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "opencospan/circuit.hpp"
#include "opencospan/document.hpp"

using namespace ocs;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
  std::string command = std::string(COSPAN_CLI_PATH) + " " + args + " 2>&1";
  std::FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 512> buffer;
  while (std::fgets(buffer.data(), buffer.size(), pipe))
    result.output += buffer.data();
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data_path(const std::string& name) {
  return std::string(COSPAN_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("cli: compose writes the composite document") {
  RunResult result = run_cli("cospan compose " + data_path("water.json") + " " +
                             data_path("dissociation.json"));
  CHECK(result.exit_code == 0);
  // Thin adapter: identical to calling the library directly.
  NetworkDocument expected =
      compose_documents(read_document_file(data_path("water.json")),
                        read_document_file(data_path("dissociation.json")));
  CHECK(result.output == print_document(expected, false));
  NetworkDocument parsed = parse_document(result.output);
  CHECK(std::get<StructuredCospan<PetriCat>>(parsed.cell).apex.places.size == 5);
}

TEST_CASE("cli: mismatched feet exit 1 with the error name") {
  RunResult result = run_cli("cospan compose " + data_path("water.json") + " " +
                             data_path("water.json"));
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("mismatched-boundary") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run_cli("cospan compose").exit_code == 2);
  CHECK(run_cli("frobenius").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
}

TEST_CASE("cli: tensor matches the library") {
  RunResult result = run_cli("cospan tensor " + data_path("water.json") + " " +
                             data_path("dissociation.json"));
  CHECK(result.exit_code == 0);
  NetworkDocument expected =
      tensor_documents(read_document_file(data_path("water.json")),
                       read_document_file(data_path("dissociation.json")));
  CHECK(result.output == print_document(expected, false));
}

TEST_CASE("cli: iso prints the edge bijection for the renamed pair") {
  RunResult result = run_cli("cospan iso " + data_path("open_path.json") + " " +
                             data_path("open_path_renamed.json"));
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("\"edges\"") != std::string::npos);

  RunResult negative =
      run_cli("cospan iso " + data_path("open_path.json") + " " +
              data_path("open_path_retargeted.json"));
  CHECK(negative.exit_code == 1);
  CHECK(negative.output.find("not isomorphic") != std::string::npos);
}

TEST_CASE("cli: id and export-dot") {
  RunResult id = run_cli("cospan id -n 2 --instance graph");
  CHECK(id.exit_code == 0);
  CHECK(id.output == print_document(identity_document(InstanceTag::graph, 2),
                                    false));

  RunResult dot = run_cli("cospan export-dot " + data_path("water.json"));
  CHECK(dot.exit_code == 0);
  CHECK(dot.output == export_dot(read_document_file(data_path("water.json"))));
}

TEST_CASE("cli: canonical flag canonicalizes the output") {
  RunResult result = run_cli("cospan compose " + data_path("water.json") + " " +
                             data_path("dissociation.json") + " --canonical");
  CHECK(result.exit_code == 0);
  NetworkDocument expected =
      compose_documents(read_document_file(data_path("water.json")),
                        read_document_file(data_path("dissociation.json")));
  CHECK(result.output == print_document(expected, true));
}

TEST_CASE("cli: frobenius check prints the law report") {
  RunResult result = run_cli("frobenius check --instance petri --size 2");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("associativity: ok") != std::string::npos);
  CHECK(result.output.find("special: ok") != std::string::npos);
}

TEST_CASE("cli: circuit commands match the library") {
  RunResult relation = run_cli("circuit relation --resistor 3/2");
  CHECK(relation.exit_code == 0);
  CHECK(relation.output == relation_string(resistor_relation(Rational(3, 2))));

  RunResult boxed = run_cli("circuit blackbox " + data_path("parallel_2ohm.json"));
  CHECK(boxed.exit_code == 0);
  CHECK(boxed.output == relation_string(resistor_relation(Rational(1))));

  RunResult series_lhs =
      run_cli("cospan compose " + data_path("resistor_1ohm.json") + " " +
              data_path("resistor_2ohm.json") + " -o /tmp/series_test.json");
  CHECK(series_lhs.exit_code == 0);
  RunResult series = run_cli("circuit blackbox /tmp/series_test.json");
  CHECK(series.exit_code == 0);
  CHECK(series.output == relation_string(resistor_relation(Rational(3))));
}

TEST_CASE("cli: petri reachable prints the witness when reachable") {
  RunResult composite =
      run_cli("cospan compose " + data_path("water.json") + " " +
              data_path("dissociation.json") + " -o /tmp/composite_test.json");
  REQUIRE(composite.exit_code == 0);
  RunResult yes = run_cli(
      "petri reachable /tmp/composite_test.json --from H:4,O:2 "
      "--to OH-:1,H3O+:1 --max-steps 5");
  CHECK(yes.exit_code == 0);
  CHECK(yes.output.find("synthesis synthesis dissociation") !=
        std::string::npos);
  RunResult no = run_cli(
      "petri reachable /tmp/composite_test.json --from H:1 --to H2O:1 "
      "--max-steps 10");
  CHECK(no.exit_code == 1);
  CHECK(no.output.find("unreachable") != std::string::npos);
}

TEST_CASE("cli: petri to-cmc prints the presentation") {
  RunResult result = run_cli("petri to-cmc " + data_path("water.json"));
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("\"object_generators\": [\"H\", \"O\", \"H2O\"]") !=
        std::string::npos);
}

TEST_CASE("cli: dynamics commands") {
  RunResult eval =
      run_cli("dynamics eval " + data_path("water_rates.json") +
              " --at H:1,O:1,H2O:0");
  CHECK(eval.exit_code == 0);
  CHECK(eval.output == "H:-2,O:-1,H2O:1\n");

  RunResult steady = run_cli("dynamics steady " + data_path("water_rates.json") +
                             " --at H:0,O:5");
  CHECK(steady.exit_code == 0);
  CHECK(steady.output == "steady\n");
  RunResult moving = run_cli("dynamics steady " + data_path("water_rates.json") +
                             " --at H:1,O:1");
  CHECK(moving.exit_code == 1);
  CHECK(moving.output == "not steady\n");

  RunResult euler = run_cli("dynamics euler " + data_path("water_rates.json") +
                            " --at H:1,O:1 --h 1/2 --steps 2");
  CHECK(euler.exit_code == 0);
  CHECK(euler.output.find("1: H:0,O:1/2,H2O:1/2") != std::string::npos);
}
