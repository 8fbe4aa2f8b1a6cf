#pragma once

#include <string>
#include <variant>
#include <vector>

#include "opencospan/circuit.hpp"
#include "opencospan/cospan.hpp"
#include "opencospan/graph.hpp"
#include "opencospan/petri.hpp"

namespace ocs {

enum class InstanceTag { graph, lgraph, petri, petri_rates };

InstanceTag parse_instance_tag(const std::string& name);
const char* instance_tag_name(InstanceTag tag);

// One open network in one of the shipped instances, plus the human-readable
// names that ride alongside the indices. Names never affect semantics;
// canonical index order is the serialization order.
struct NetworkDocument {
  InstanceTag tag;
  std::variant<std::monostate, StructuredCospan<GraphCat>,
               StructuredCospan<LGraphCat<std::string>>,
               StructuredCospan<PetriCat>, StructuredCospan<PetriRatesCat>>
      cell;
  std::vector<std::string> point_names;       // node / place names
  std::vector<std::string> transition_names;  // petri instances only
};

NetworkDocument parse_document(const std::string& text);
NetworkDocument read_document_file(const std::string& path);

std::string print_document(const NetworkDocument& doc, bool canonical);
std::string export_dot(const NetworkDocument& doc);

NetworkDocument identity_document(InstanceTag tag, std::size_t size);
NetworkDocument compose_documents(const NetworkDocument& a,
                                  const NetworkDocument& b);
NetworkDocument tensor_documents(const NetworkDocument& a,
                                 const NetworkDocument& b);

struct IsoReport {
  bool isomorphic = false;
  std::string witness;  // JSON text of the bijections when isomorphic
};
IsoReport document_isomorphism(const NetworkDocument& a,
                               const NetworkDocument& b);

// Views for the semantics commands.
Circuit circuit_from_document(const NetworkDocument& doc);
StructuredCospan<PetriCat> petri_cell_from_document(const NetworkDocument& doc);
StructuredCospan<PetriRatesCat> rate_cell_from_document(
    const NetworkDocument& doc);

// JSON forms of the finite-set substrate: {"size": n} and
// {"dom": n, "cod": m, "map": [...]}.
FinSet finset_from_json(const std::string& text);
std::string finset_to_json(const FinSet& a);
FinFunction finfunction_from_json(const std::string& text);
std::string finfunction_to_json(const FinFunction& f);

// "H:4,O:2" against the document's place names; missing places read zero.
Multiset parse_marking(const NetworkDocument& doc, const std::string& text);
std::vector<Rational> parse_concentration(const NetworkDocument& doc,
                                          const std::string& text);

}  // namespace ocs
