#include "opencospan.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "opencospan/cmc.hpp"
#include "opencospan/document.hpp"
#include "opencospan/dynamics.hpp"
#include "opencospan/hypergraph.hpp"

using namespace ocs;

struct ocs_document {
  NetworkDocument doc;
};

namespace {

thread_local std::string g_last_error;

ocs_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::mismatched_boundary: return OCS_MISMATCHED_BOUNDARY;
    case ErrorKind::non_commuting_cocone: return OCS_NON_COMMUTING_COCONE;
    case ErrorKind::label_conflict: return OCS_LABEL_CONFLICT;
    case ErrorKind::rate_conflict: return OCS_RATE_CONFLICT;
    case ErrorKind::not_invertible: return OCS_NOT_INVERTIBLE;
    case ErrorKind::nonpositive_resistance: return OCS_NONPOSITIVE_RESISTANCE;
    case ErrorKind::ill_typed_compose: return OCS_ILL_TYPED_COMPOSE;
    case ErrorKind::malformed_json: return OCS_MALFORMED_JSON;
    case ErrorKind::schema_violation: return OCS_SCHEMA_VIOLATION;
    case ErrorKind::index_out_of_range: return OCS_INDEX_OUT_OF_RANGE;
    case ErrorKind::duplicate_name: return OCS_DUPLICATE_NAME;
    case ErrorKind::invalid_structure: return OCS_INVALID_STRUCTURE;
  }
  return OCS_INTERNAL_ERROR;
}

template <typename Body>
ocs_status guarded(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return OCS_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return OCS_INTERNAL_ERROR;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Law reports run over the two instances named in the CLI surface plus the
// labeled variants; size caps keep the search tractable.
std::string frobenius_report_text(const std::string& instance, std::size_t size,
                                  bool* all_hold) {
  std::vector<LawResult> report;
  if (instance == "graph") {
    report = check_frobenius<GraphCat>(FinSet{size});
  } else if (instance == "lgraph") {
    report = check_frobenius<LGraphCat<std::string>>(FinSet{size});
  } else if (instance == "petri") {
    report = check_frobenius<PetriCat>(FinSet{size});
  } else if (instance == "petri_rates") {
    report = check_frobenius<PetriRatesCat>(FinSet{size});
  } else {
    raise(ErrorKind::schema_violation, "unknown instance '" + instance + "'");
  }
  std::ostringstream out;
  out << "frobenius laws on an object of size " << size << " (" << instance
      << " instance)\n";
  bool all = true;
  for (const LawResult& law : report) {
    out << "  " << law.law << ": " << (law.holds ? "ok" : "FAILED") << "\n";
    all = all && law.holds;
  }
  *all_hold = all;
  return out.str();
}

std::string cmc_presentation_json(const CmcPresentation& pres) {
  std::ostringstream out;
  // Assembled by hand to keep the C surface independent of the JSON library.
  out << "{\n  \"object_generators\": [";
  for (std::size_t i = 0; i < pres.object_generators.size; ++i) {
    if (i) out << ", ";
    out << '"'
        << (i < pres.object_names.size() ? pres.object_names[i]
                                         : "x" + std::to_string(i))
        << '"';
  }
  out << "],\n  \"morphism_generators\": [";
  for (std::size_t g = 0; g < pres.morphism_generators.size(); ++g) {
    const CmcGenerator& gen = pres.morphism_generators[g];
    if (g) out << ",";
    out << "\n    {\"name\": \"" << gen.name << "\", \"source\": {";
    bool first = true;
    for (std::size_t s = 0; s < gen.source.counts.size(); ++s) {
      if (gen.source.counts[s] == 0) continue;
      if (!first) out << ", ";
      first = false;
      out << '"'
          << (s < pres.object_names.size() ? pres.object_names[s]
                                           : "x" + std::to_string(s))
          << "\": " << gen.source.counts[s];
    }
    out << "}, \"target\": {";
    first = true;
    for (std::size_t s = 0; s < gen.target.counts.size(); ++s) {
      if (gen.target.counts[s] == 0) continue;
      if (!first) out << ", ";
      first = false;
      out << '"'
          << (s < pres.object_names.size() ? pres.object_names[s]
                                           : "x" + std::to_string(s))
          << "\": " << gen.target.counts[s];
    }
    out << "}}";
  }
  if (!pres.morphism_generators.empty()) out << "\n  ";
  out << "]\n}\n";
  return out.str();
}

PetriWithRates rates_from_document(const NetworkDocument& doc) {
  return rate_cell_from_document(doc).apex;
}

std::string state_string(const NetworkDocument& doc,
                         const std::vector<Rational>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ",";
    out << doc.point_names[i] << ":" << rational_string(values[i]);
  }
  return out.str();
}

}  // namespace

extern "C" {

const char* ocs_status_name(ocs_status status) {
  switch (status) {
    case OCS_OK: return "ok";
    case OCS_MISMATCHED_BOUNDARY: return "mismatched-boundary";
    case OCS_NON_COMMUTING_COCONE: return "non-commuting-cocone";
    case OCS_LABEL_CONFLICT: return "label-conflict";
    case OCS_RATE_CONFLICT: return "rate-conflict";
    case OCS_NOT_INVERTIBLE: return "not-invertible";
    case OCS_NONPOSITIVE_RESISTANCE: return "nonpositive-resistance";
    case OCS_ILL_TYPED_COMPOSE: return "ill-typed-compose";
    case OCS_MALFORMED_JSON: return "malformed-json";
    case OCS_SCHEMA_VIOLATION: return "schema-violation";
    case OCS_INDEX_OUT_OF_RANGE: return "index-out-of-range";
    case OCS_DUPLICATE_NAME: return "duplicate-name";
    case OCS_INVALID_STRUCTURE: return "invalid-structure";
    case OCS_INTERNAL_ERROR: return "internal-error";
  }
  return "unknown";
}

const char* ocs_last_error(void) { return g_last_error.c_str(); }

void ocs_string_free(char* text) { std::free(text); }

void ocs_document_free(ocs_document* document) { delete document; }

ocs_status ocs_parse(const char* json_text, ocs_document** out) {
  return guarded([&] { *out = new ocs_document{parse_document(json_text)}; });
}

ocs_status ocs_read_file(const char* path, ocs_document** out) {
  return guarded([&] { *out = new ocs_document{read_document_file(path)}; });
}

ocs_status ocs_print(const ocs_document* document, int canonical, char** out) {
  return guarded([&] {
    *out = copy_string(print_document(document->doc, canonical != 0));
  });
}

ocs_status ocs_write_file(const ocs_document* document, int canonical,
                          const char* path) {
  return guarded([&] {
    std::ofstream file(path, std::ios::binary);
    require(file.good(), ErrorKind::malformed_json,
            std::string("cannot open '") + path + "' for writing");
    file << print_document(document->doc, canonical != 0);
  });
}

ocs_status ocs_export_dot(const ocs_document* document, char** out) {
  return guarded([&] { *out = copy_string(export_dot(document->doc)); });
}

ocs_status ocs_identity_document(const char* instance, size_t size,
                                 ocs_document** out) {
  return guarded([&] {
    *out = new ocs_document{
        identity_document(parse_instance_tag(instance), size)};
  });
}

ocs_status ocs_compose(const ocs_document* first, const ocs_document* second,
                       ocs_document** out) {
  return guarded([&] {
    *out = new ocs_document{compose_documents(first->doc, second->doc)};
  });
}

ocs_status ocs_tensor(const ocs_document* first, const ocs_document* second,
                      ocs_document** out) {
  return guarded([&] {
    *out = new ocs_document{tensor_documents(first->doc, second->doc)};
  });
}

ocs_status ocs_isomorphic(const ocs_document* first, const ocs_document* second,
                          int* isomorphic, char** witness) {
  return guarded([&] {
    IsoReport report = document_isomorphism(first->doc, second->doc);
    *isomorphic = report.isomorphic ? 1 : 0;
    if (witness) *witness = copy_string(report.witness);
  });
}

ocs_status ocs_frobenius_report(const char* instance, size_t size, char** out,
                                int* all_hold) {
  return guarded([&] {
    bool all = false;
    *out = copy_string(frobenius_report_text(instance, size, &all));
    *all_hold = all ? 1 : 0;
  });
}

ocs_status ocs_circuit_blackbox(const ocs_document* circuit, char** out) {
  return guarded([&] {
    *out = copy_string(relation_string(blackbox(circuit_from_document(circuit->doc))));
  });
}

ocs_status ocs_resistor_relation(const char* resistance, char** out) {
  return guarded([&] {
    *out = copy_string(relation_string(resistor_relation(parse_rational(resistance))));
  });
}

ocs_status ocs_petri_to_cmc(const ocs_document* net, char** out) {
  return guarded([&] {
    auto cell = petri_cell_from_document(net->doc);
    CmcPresentation pres = petri_to_cmc(cell.apex, net->doc.point_names,
                                        net->doc.transition_names);
    *out = copy_string(cmc_presentation_json(pres));
  });
}

ocs_status ocs_petri_reachable(const ocs_document* net, const char* from,
                               const char* to, size_t max_steps, int* out_flag,
                               char** witness) {
  return guarded([&] {
    auto cell = petri_cell_from_document(net->doc);
    Multiset source = parse_marking(net->doc, from);
    Multiset target = parse_marking(net->doc, to);
    ReachabilityResult result =
        reachable(cell.apex, source, target, max_steps);
    *out_flag = result.reachable ? 1 : 0;
    if (witness) {
      std::ostringstream text;
      for (std::size_t i = 0; i < result.firings.size(); ++i) {
        if (i) text << " ";
        std::size_t t = result.firings[i];
        text << (t < net->doc.transition_names.size()
                     ? net->doc.transition_names[t]
                     : std::to_string(t));
      }
      *witness = copy_string(text.str());
    }
  });
}

ocs_status ocs_dynamics_eval(const ocs_document* net, const char* state,
                             char** out) {
  return guarded([&] {
    PetriWithRates rated = rates_from_document(net->doc);
    auto values =
        mass_action_field(rated, parse_concentration(net->doc, state));
    *out = copy_string(state_string(net->doc, values));
  });
}

ocs_status ocs_dynamics_steady(const ocs_document* net, const char* state,
                               int* steady) {
  return guarded([&] {
    PetriWithRates rated = rates_from_document(net->doc);
    *steady =
        is_steady(rated, parse_concentration(net->doc, state)) ? 1 : 0;
  });
}

ocs_status ocs_dynamics_euler(const ocs_document* net, const char* state,
                              const char* step, size_t steps, char** out) {
  return guarded([&] {
    PetriWithRates rated = rates_from_document(net->doc);
    Rational h = parse_rational(step);
    require(h > 0, ErrorKind::schema_violation, "step size must be positive");
    std::vector<Rational> current = parse_concentration(net->doc, state);
    std::ostringstream text;
    text << "0: " << state_string(net->doc, current) << "\n";
    for (std::size_t i = 1; i <= steps; ++i) {
      EulerStep next = euler_step(rated, current, h);
      current = std::move(next.state);
      text << i << ": " << state_string(net->doc, current);
      if (next.clamped) text << " (clamped)";
      text << "\n";
    }
    *out = copy_string(text.str());
  });
}

}  // extern "C"
