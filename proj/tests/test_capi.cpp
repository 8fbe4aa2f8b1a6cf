#include <doctest.h>

#include <cstring>
#include <string>

#include "opencospan.h"

namespace {

std::string data_path(const std::string& name) {
  return std::string(COSPAN_DATA_DIR) + "/" + name;
}

struct Doc {
  ocs_document* handle = nullptr;
  ~Doc() { ocs_document_free(handle); }
};

struct Str {
  char* text = nullptr;
  ~Str() { ocs_string_free(text); }
  std::string str() const { return text ? text : ""; }
};

}  // namespace

TEST_CASE("c api: parse, compose, print") {
  Doc water, dissoc;
  REQUIRE(ocs_read_file(data_path("water.json").c_str(), &water.handle) ==
          OCS_OK);
  REQUIRE(ocs_read_file(data_path("dissociation.json").c_str(),
                        &dissoc.handle) == OCS_OK);

  Doc composite;
  REQUIRE(ocs_compose(water.handle, dissoc.handle, &composite.handle) == OCS_OK);
  Str printed;
  REQUIRE(ocs_print(composite.handle, 0, &printed.text) == OCS_OK);
  CHECK(printed.str().find("\"OH-\"") != std::string::npos);
  CHECK(printed.str().find("\"foot_in\": 3") != std::string::npos);

  // Round trip through the C surface.
  Doc reparsed;
  REQUIRE(ocs_parse(printed.text, &reparsed.handle) == OCS_OK);
  Str again;
  REQUIRE(ocs_print(reparsed.handle, 0, &again.text) == OCS_OK);
  CHECK(again.str() == printed.str());
}

TEST_CASE("c api: domain errors map to status codes") {
  Doc water;
  REQUIRE(ocs_read_file(data_path("water.json").c_str(), &water.handle) ==
          OCS_OK);
  Doc out;
  CHECK(ocs_compose(water.handle, water.handle, &out.handle) ==
        OCS_MISMATCHED_BOUNDARY);
  CHECK(std::strlen(ocs_last_error()) > 0);
  CHECK(std::string(ocs_status_name(OCS_MISMATCHED_BOUNDARY)) ==
        "mismatched-boundary");

  Doc bad;
  CHECK(ocs_parse("{not json", &bad.handle) == OCS_MALFORMED_JSON);
  CHECK(ocs_parse("{\"format_version\": \"1\"}", &bad.handle) ==
        OCS_SCHEMA_VIOLATION);
}

TEST_CASE("c api: tensor and isomorphism") {
  Doc water, dissoc;
  REQUIRE(ocs_read_file(data_path("water.json").c_str(), &water.handle) ==
          OCS_OK);
  REQUIRE(ocs_read_file(data_path("dissociation.json").c_str(),
                        &dissoc.handle) == OCS_OK);
  Doc side;
  REQUIRE(ocs_tensor(water.handle, dissoc.handle, &side.handle) == OCS_OK);
  Str printed;
  REQUIRE(ocs_print(side.handle, 0, &printed.text) == OCS_OK);
  CHECK(printed.str().find("\"foot_in\": 4") != std::string::npos);
  CHECK(printed.str().find("\"foot_out\": 4") != std::string::npos);

  Doc a, b;
  REQUIRE(ocs_read_file(data_path("open_path.json").c_str(), &a.handle) ==
          OCS_OK);
  REQUIRE(ocs_read_file(data_path("open_path_renamed.json").c_str(),
                        &b.handle) == OCS_OK);
  int iso = 0;
  Str witness;
  REQUIRE(ocs_isomorphic(a.handle, b.handle, &iso, &witness.text) == OCS_OK);
  CHECK(iso == 1);
  CHECK(witness.str().find("edges") != std::string::npos);
}

TEST_CASE("c api: identity and dot export") {
  Doc id;
  REQUIRE(ocs_identity_document("petri", 2, &id.handle) == OCS_OK);
  Str dot;
  REQUIRE(ocs_export_dot(id.handle, &dot.text) == OCS_OK);
  CHECK(dot.str().find("digraph") != std::string::npos);

  Doc bad;
  CHECK(ocs_identity_document("widget", 2, &bad.handle) ==
        OCS_SCHEMA_VIOLATION);
}

TEST_CASE("c api: frobenius report") {
  Str report;
  int all_hold = 0;
  REQUIRE(ocs_frobenius_report("petri", 2, &report.text, &all_hold) == OCS_OK);
  CHECK(all_hold == 1);
  CHECK(report.str().find("special: ok") != std::string::npos);
}

TEST_CASE("c api: circuit semantics") {
  Str relation;
  REQUIRE(ocs_resistor_relation("3/2", &relation.text) == OCS_OK);
  CHECK(relation.str().find("3/2") != std::string::npos);
  CHECK(ocs_resistor_relation("0", &relation.text) ==
        OCS_NONPOSITIVE_RESISTANCE);
  CHECK(ocs_resistor_relation("elephant", &relation.text) ==
        OCS_SCHEMA_VIOLATION);

  Doc parallel;
  REQUIRE(ocs_read_file(data_path("parallel_2ohm.json").c_str(),
                        &parallel.handle) == OCS_OK);
  Str boxed;
  REQUIRE(ocs_circuit_blackbox(parallel.handle, &boxed.text) == OCS_OK);
  Str one_ohm;
  REQUIRE(ocs_resistor_relation("1", &one_ohm.text) == OCS_OK);
  CHECK(boxed.str() == one_ohm.str());
}

TEST_CASE("c api: petri semantics") {
  Doc water;
  REQUIRE(ocs_read_file(data_path("water.json").c_str(), &water.handle) ==
          OCS_OK);
  Str pres;
  REQUIRE(ocs_petri_to_cmc(water.handle, &pres.text) == OCS_OK);
  CHECK(pres.str().find("\"object_generators\": [\"H\", \"O\", \"H2O\"]") !=
        std::string::npos);
  CHECK(pres.str().find("synthesis") != std::string::npos);

  Doc dissoc;
  REQUIRE(ocs_read_file(data_path("dissociation.json").c_str(),
                        &dissoc.handle) == OCS_OK);
  Doc composite;
  REQUIRE(ocs_compose(water.handle, dissoc.handle, &composite.handle) == OCS_OK);
  int flag = 0;
  Str witness;
  REQUIRE(ocs_petri_reachable(composite.handle, "H:4,O:2", "OH-:1,H3O+:1", 3,
                              &flag, &witness.text) == OCS_OK);
  CHECK(flag == 1);
  CHECK(witness.str() == "synthesis synthesis dissociation");
  REQUIRE(ocs_petri_reachable(composite.handle, "H:1", "H2O:1", 10, &flag,
                              nullptr) == OCS_OK);
  CHECK(flag == 0);
}

TEST_CASE("c api: dynamics") {
  Doc water;
  REQUIRE(ocs_read_file(data_path("water_rates.json").c_str(), &water.handle) ==
          OCS_OK);
  Str field;
  REQUIRE(ocs_dynamics_eval(water.handle, "H:1,O:1,H2O:0", &field.text) ==
          OCS_OK);
  CHECK(field.str() == "H:-2,O:-1,H2O:1");

  int steady = 0;
  REQUIRE(ocs_dynamics_steady(water.handle, "", &steady) == OCS_OK);
  CHECK(steady == 1);
  REQUIRE(ocs_dynamics_steady(water.handle, "H:1,O:1", &steady) == OCS_OK);
  CHECK(steady == 0);

  Str trajectory;
  REQUIRE(ocs_dynamics_euler(water.handle, "H:1,O:1", "1/2", 1,
                             &trajectory.text) == OCS_OK);
  CHECK(trajectory.str().find("1: H:0,O:1/2,H2O:1/2") != std::string::npos);

  Doc unrated;
  REQUIRE(ocs_read_file(data_path("water.json").c_str(), &unrated.handle) ==
          OCS_OK);
  CHECK(ocs_dynamics_eval(unrated.handle, "", &field.text) ==
        OCS_SCHEMA_VIOLATION);
}
