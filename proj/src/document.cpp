#include "opencospan/document.hpp"

#include <json.hpp>

#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace ocs {

using nlohmann::json;

InstanceTag parse_instance_tag(const std::string& name) {
  if (name == "graph") return InstanceTag::graph;
  if (name == "lgraph") return InstanceTag::lgraph;
  if (name == "petri") return InstanceTag::petri;
  if (name == "petri_rates") return InstanceTag::petri_rates;
  raise(ErrorKind::schema_violation, "unknown instance '" + name + "'");
}

const char* instance_tag_name(InstanceTag tag) {
  switch (tag) {
    case InstanceTag::graph: return "graph";
    case InstanceTag::lgraph: return "lgraph";
    case InstanceTag::petri: return "petri";
    case InstanceTag::petri_rates: return "petri_rates";
  }
  return "unknown";
}

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  raise(ErrorKind::schema_violation, what + " at " + path);
}

const json& field(const json& obj, const std::string& key,
                  const std::string& path) {
  if (!obj.is_object()) schema_error(path.empty() ? "/" : path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path + "/" + key, "missing field");
  return *it;
}

std::size_t natural(const json& value, const std::string& path) {
  if (!value.is_number_unsigned())
    schema_error(path, "expected a nonnegative integer");
  return value.get<std::size_t>();
}

std::string text(const json& value, const std::string& path) {
  if (!value.is_string()) schema_error(path, "expected a string");
  return value.get<std::string>();
}

std::vector<std::size_t> leg_points(const json& value, std::size_t foot,
                                    std::size_t apex_points,
                                    const std::string& path) {
  if (!value.is_array()) schema_error(path, "expected an array of indices");
  if (value.size() != foot)
    schema_error(path, "leg length differs from the foot size");
  std::vector<std::size_t> points;
  points.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    std::string at = path + "/" + std::to_string(i);
    std::size_t p = natural(value[i], at);
    if (p >= apex_points)
      raise(ErrorKind::index_out_of_range,
            "leg point " + std::to_string(p) + " outside the apex at " + at);
    points.push_back(p);
  }
  return points;
}

Graph parse_graph_apex(const json& apex, const std::string& path) {
  std::size_t nodes = natural(field(apex, "nodes", path), path + "/nodes");
  const json& edges = field(apex, "edges", path);
  if (!edges.is_array()) schema_error(path + "/edges", "expected an array");
  std::vector<std::size_t> src, tgt;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::string at = path + "/edges/" + std::to_string(e);
    const json& pair = edges[e];
    if (!pair.is_array() || pair.size() != 2)
      schema_error(at, "expected a [source, target] pair");
    std::size_t s = natural(pair[0], at + "/0");
    std::size_t t = natural(pair[1], at + "/1");
    if (s >= nodes || t >= nodes)
      raise(ErrorKind::index_out_of_range,
            "edge endpoint outside the node set at " + at);
    src.push_back(s);
    tgt.push_back(t);
  }
  FinSet edge_set{src.size()};
  FinSet node_set{nodes};
  return Graph(edge_set, node_set, FinFunction(edge_set, node_set, src),
               FinFunction(edge_set, node_set, tgt));
}

std::vector<std::string> parse_node_names(const json& apex, std::size_t nodes,
                                          const std::string& path) {
  if (!apex.contains("node_names")) return {};
  const json& names = apex.at("node_names");
  if (!names.is_array() || names.size() != nodes)
    schema_error(path + "/node_names", "expected one name per node");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::string name = text(names[i], path + "/node_names/" + std::to_string(i));
    if (!seen.insert(name).second)
      raise(ErrorKind::duplicate_name, "duplicate node name '" + name + "'");
    out.push_back(std::move(name));
  }
  return out;
}

struct ParsedPetri {
  PetriNet net;
  std::vector<Rational> rates;
  std::vector<std::string> place_names;
  std::vector<std::string> transition_names;
};

ParsedPetri parse_petri_apex(const json& apex, bool with_rates,
                             const std::string& path) {
  const json& places = field(apex, "places", path);
  if (!places.is_array())
    schema_error(path + "/places", "expected an array of names");
  std::vector<std::string> place_names;
  std::map<std::string, std::size_t> place_index;
  for (std::size_t i = 0; i < places.size(); ++i) {
    std::string name = text(places[i], path + "/places/" + std::to_string(i));
    if (!place_index.emplace(name, i).second)
      raise(ErrorKind::duplicate_name, "duplicate place name '" + name + "'");
    place_names.push_back(std::move(name));
  }
  FinSet place_set{place_names.size()};

  const json& transitions = field(apex, "transitions", path);
  if (!transitions.is_array())
    schema_error(path + "/transitions", "expected an array");
  std::vector<Multiset> sources, targets;
  std::vector<Rational> rates;
  std::vector<std::string> transition_names;
  std::set<std::string> seen_names;
  auto parse_side = [&](const json& t, const char* key, const std::string& at) {
    const json& side = field(t, key, at);
    if (!side.is_object())
      schema_error(at + "/" + key, "expected an object of place counts");
    Multiset m = Multiset::zero(place_set);
    for (auto it = side.begin(); it != side.end(); ++it) {
      auto found = place_index.find(it.key());
      if (found == place_index.end())
        schema_error(at + "/" + key + "/" + it.key(), "unknown place");
      m.counts[found->second] =
          natural(it.value(), at + "/" + key + "/" + it.key());
    }
    return m;
  };
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    std::string at = path + "/transitions/" + std::to_string(i);
    const json& t = transitions[i];
    std::string name = text(field(t, "name", at), at + "/name");
    if (!seen_names.insert(name).second)
      raise(ErrorKind::duplicate_name,
            "duplicate transition name '" + name + "'");
    transition_names.push_back(name);
    sources.push_back(parse_side(t, "in", at));
    targets.push_back(parse_side(t, "out", at));
    if (with_rates) {
      Rational r = parse_rational(text(field(t, "rate", at), at + "/rate"));
      if (r <= 0) schema_error(at + "/rate", "rate constants must be positive");
      rates.push_back(std::move(r));
    } else if (t.contains("rate")) {
      schema_error(at + "/rate",
                   "rates belong to the petri_rates instance, not petri");
    }
  }
  FinSet transition_set{sources.size()};
  PetriNet net(transition_set, place_set, std::move(sources),
               std::move(targets));
  return ParsedPetri{std::move(net), std::move(rates), std::move(place_names),
                     std::move(transition_names)};
}

json marking_json(const Multiset& m, const std::vector<std::string>& names) {
  json side = json::object();
  for (std::size_t s = 0; s < m.counts.size(); ++s) {
    if (m.counts[s] > 0) side[names[s]] = m.counts[s];
  }
  return side;
}

template <typename I>
json cell_shell(const StructuredCospan<I>& cell, InstanceTag tag) {
  json doc;
  doc["format_version"] = "1";
  doc["instance"] = instance_tag_name(tag);
  doc["foot_in"] = cell.foot_in.size;
  doc["foot_out"] = cell.foot_out.size;
  doc["leg_in"] = I::underlying_map(cell.leg_in).map();
  doc["leg_out"] = I::underlying_map(cell.leg_out).map();
  return doc;
}

json graph_apex_json(const Graph& g, const std::vector<std::string>& names) {
  json apex;
  apex["nodes"] = g.nodes.size;
  json edges = json::array();
  for (std::size_t e = 0; e < g.edges.size; ++e)
    edges.push_back(json::array({g.src(e), g.tgt(e)}));
  apex["edges"] = std::move(edges);
  if (!names.empty()) apex["node_names"] = names;
  return apex;
}

json petri_apex_json(const PetriNet& net, const std::vector<Rational>* rates,
                     const std::vector<std::string>& place_names,
                     const std::vector<std::string>& transition_names) {
  json apex;
  apex["places"] = place_names;
  json transitions = json::array();
  for (std::size_t t = 0; t < net.transitions.size; ++t) {
    json entry;
    entry["name"] = transition_names[t];
    entry["in"] = marking_json(net.sources[t], place_names);
    entry["out"] = marking_json(net.targets[t], place_names);
    if (rates) entry["rate"] = rational_string((*rates)[t]);
    transitions.push_back(std::move(entry));
  }
  apex["transitions"] = std::move(transitions);
  return apex;
}

std::vector<std::string> dedupe_names(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (std::string& name : names) {
    if (seen.insert(name).second) continue;
    std::size_t suffix = 2;
    std::string candidate;
    do {
      candidate = name + "_" + std::to_string(suffix++);
    } while (seen.contains(candidate));
    name = candidate;
    seen.insert(name);
  }
  return names;
}

// Target slot takes the first contributor's name.
std::vector<std::string> merged_names(const std::vector<std::string>& left,
                                      const FinFunction& from_left,
                                      const std::vector<std::string>& right,
                                      const FinFunction& from_right,
                                      std::size_t size, const char* prefix) {
  if (left.empty() && right.empty()) return {};
  std::vector<std::string> names(size);
  std::vector<bool> named(size, false);
  auto place = [&](const std::vector<std::string>& source,
                   const FinFunction& map, const char* fallback) {
    for (std::size_t i = 0; i < map.dom().size; ++i) {
      std::size_t at = map(i);
      if (named[at]) continue;
      names[at] = i < source.size() ? source[i]
                                    : fallback + std::to_string(i);
      named[at] = true;
    }
  };
  place(left, from_left, prefix);
  place(right, from_right, prefix);
  return dedupe_names(std::move(names));
}

std::vector<std::string> permuted_names(const std::vector<std::string>& names,
                                        const FinFunction& perm) {
  if (names.empty()) return {};
  std::vector<std::string> out(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) out[perm(i)] = names[i];
  return out;
}

}  // namespace

NetworkDocument parse_document(const std::string& input) {
  json doc = json::parse(input, nullptr, false);
  if (doc.is_discarded())
    raise(ErrorKind::malformed_json, "input is not valid JSON");
  std::string root = "";
  std::string version =
      text(field(doc, "format_version", root), "/format_version");
  if (version != "1")
    schema_error("/format_version",
                 "unsupported format version '" + version + "'");
  InstanceTag tag =
      parse_instance_tag(text(field(doc, "instance", root), "/instance"));
  std::size_t foot_in = natural(field(doc, "foot_in", root), "/foot_in");
  std::size_t foot_out = natural(field(doc, "foot_out", root), "/foot_out");
  const json& apex = field(doc, "apex", root);

  NetworkDocument out;
  out.tag = tag;
  switch (tag) {
    case InstanceTag::graph: {
      Graph g = parse_graph_apex(apex, "/apex");
      out.point_names = parse_node_names(apex, g.nodes.size, "/apex");
      auto in = leg_points(field(doc, "leg_in", root), foot_in, g.nodes.size,
                           "/leg_in");
      auto u = leg_points(field(doc, "leg_out", root), foot_out, g.nodes.size,
                          "/leg_out");
      out.cell =
          make_cospan<GraphCat>(FinSet{foot_in}, FinSet{foot_out}, g, in, u);
      break;
    }
    case InstanceTag::lgraph: {
      Graph g = parse_graph_apex(apex, "/apex");
      const json& labels = field(apex, "labels", "/apex");
      if (!labels.is_array() || labels.size() != g.edges.size)
        schema_error("/apex/labels", "expected one label per edge");
      std::vector<std::string> edge_labels;
      for (std::size_t e = 0; e < labels.size(); ++e)
        edge_labels.push_back(
            text(labels[e], "/apex/labels/" + std::to_string(e)));
      LGraph<std::string> lg(g, std::move(edge_labels));
      out.point_names = parse_node_names(apex, g.nodes.size, "/apex");
      auto in = leg_points(field(doc, "leg_in", root), foot_in, g.nodes.size,
                           "/leg_in");
      auto u = leg_points(field(doc, "leg_out", root), foot_out, g.nodes.size,
                          "/leg_out");
      out.cell = make_cospan<LGraphCat<std::string>>(
          FinSet{foot_in}, FinSet{foot_out}, lg, in, u);
      break;
    }
    case InstanceTag::petri: {
      ParsedPetri parsed = parse_petri_apex(apex, false, "/apex");
      std::size_t places = parsed.net.places.size;
      out.point_names = std::move(parsed.place_names);
      out.transition_names = std::move(parsed.transition_names);
      auto in =
          leg_points(field(doc, "leg_in", root), foot_in, places, "/leg_in");
      auto u =
          leg_points(field(doc, "leg_out", root), foot_out, places, "/leg_out");
      out.cell = make_cospan<PetriCat>(FinSet{foot_in}, FinSet{foot_out},
                                       parsed.net, in, u);
      break;
    }
    case InstanceTag::petri_rates: {
      ParsedPetri parsed = parse_petri_apex(apex, true, "/apex");
      std::size_t places = parsed.net.places.size;
      out.point_names = std::move(parsed.place_names);
      out.transition_names = std::move(parsed.transition_names);
      PetriWithRates rated(std::move(parsed.net), std::move(parsed.rates));
      auto in =
          leg_points(field(doc, "leg_in", root), foot_in, places, "/leg_in");
      auto u =
          leg_points(field(doc, "leg_out", root), foot_out, places, "/leg_out");
      out.cell = make_cospan<PetriRatesCat>(FinSet{foot_in}, FinSet{foot_out},
                                            rated, in, u);
      break;
    }
  }
  return out;
}

NetworkDocument read_document_file(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  require(f != nullptr, ErrorKind::malformed_json, "cannot open '" + path + "'");
  std::string content;
  char buffer[4096];
  std::size_t got;
  while ((got = std::fread(buffer, 1, sizeof buffer, f)) > 0)
    content.append(buffer, got);
  std::fclose(f);
  return parse_document(content);
}

namespace {

NetworkDocument canonical_document(const NetworkDocument& doc) {
  NetworkDocument out;
  out.tag = doc.tag;
  switch (doc.tag) {
    case InstanceTag::graph: {
      auto canon =
          canonicalize<GraphCat>(std::get<StructuredCospan<GraphCat>>(doc.cell));
      out.point_names = permuted_names(doc.point_names, canon.iso.node_map());
      out.cell = std::move(canon.cell);
      break;
    }
    case InstanceTag::lgraph: {
      auto canon = canonicalize<LGraphCat<std::string>>(
          std::get<StructuredCospan<LGraphCat<std::string>>>(doc.cell));
      out.point_names = permuted_names(doc.point_names, canon.iso.node_map());
      out.cell = std::move(canon.cell);
      break;
    }
    case InstanceTag::petri: {
      auto canon =
          canonicalize<PetriCat>(std::get<StructuredCospan<PetriCat>>(doc.cell));
      out.point_names = permuted_names(doc.point_names, canon.iso.place_map());
      out.transition_names =
          permuted_names(doc.transition_names, canon.iso.transition_map());
      out.cell = std::move(canon.cell);
      break;
    }
    case InstanceTag::petri_rates: {
      auto canon = canonicalize<PetriRatesCat>(
          std::get<StructuredCospan<PetriRatesCat>>(doc.cell));
      out.point_names = permuted_names(doc.point_names, canon.iso.place_map());
      out.transition_names =
          permuted_names(doc.transition_names, canon.iso.transition_map());
      out.cell = std::move(canon.cell);
      break;
    }
  }
  return out;
}

}  // namespace

std::string print_document(const NetworkDocument& doc, bool canonical) {
  if (canonical) return print_document(canonical_document(doc), false);
  json out;
  switch (doc.tag) {
    case InstanceTag::graph: {
      const auto& cell = std::get<StructuredCospan<GraphCat>>(doc.cell);
      out = cell_shell(cell, doc.tag);
      out["apex"] = graph_apex_json(cell.apex, doc.point_names);
      break;
    }
    case InstanceTag::lgraph: {
      const auto& cell =
          std::get<StructuredCospan<LGraphCat<std::string>>>(doc.cell);
      out = cell_shell(cell, doc.tag);
      out["apex"] = graph_apex_json(cell.apex.graph, doc.point_names);
      out["apex"]["labels"] = cell.apex.labels;
      break;
    }
    case InstanceTag::petri: {
      const auto& cell = std::get<StructuredCospan<PetriCat>>(doc.cell);
      out = cell_shell(cell, doc.tag);
      out["apex"] = petri_apex_json(cell.apex, nullptr, doc.point_names,
                                    doc.transition_names);
      break;
    }
    case InstanceTag::petri_rates: {
      const auto& cell = std::get<StructuredCospan<PetriRatesCat>>(doc.cell);
      out = cell_shell(cell, doc.tag);
      out["apex"] = petri_apex_json(cell.apex.net, &cell.apex.rates,
                                    doc.point_names, doc.transition_names);
      break;
    }
  }
  return out.dump(2) + "\n";
}

NetworkDocument identity_document(InstanceTag tag, std::size_t size) {
  NetworkDocument out;
  out.tag = tag;
  FinSet a{size};
  switch (tag) {
    case InstanceTag::graph: out.cell = identity_cell<GraphCat>(a); break;
    case InstanceTag::lgraph:
      out.cell = identity_cell<LGraphCat<std::string>>(a);
      break;
    case InstanceTag::petri: {
      out.cell = identity_cell<PetriCat>(a);
      for (std::size_t i = 0; i < size; ++i)
        out.point_names.push_back("p" + std::to_string(i));
      break;
    }
    case InstanceTag::petri_rates: {
      out.cell = identity_cell<PetriRatesCat>(a);
      for (std::size_t i = 0; i < size; ++i)
        out.point_names.push_back("p" + std::to_string(i));
      break;
    }
  }
  return out;
}

namespace {

template <typename I>
NetworkDocument binary_op_document(const NetworkDocument& a,
                                   const NetworkDocument& b, bool tensor,
                                   const char* prefix) {
  const auto& ca = std::get<StructuredCospan<I>>(a.cell);
  const auto& cb = std::get<StructuredCospan<I>>(b.cell);
  NetworkDocument out;
  out.tag = a.tag;
  if (tensor) {
    out.cell = tensor_cells<I>(ca, cb);
    if (!a.point_names.empty() || !b.point_names.empty()) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < I::underlying(ca.apex).size; ++i)
        names.push_back(i < a.point_names.size() ? a.point_names[i]
                                                 : prefix + std::to_string(i));
      for (std::size_t i = 0; i < I::underlying(cb.apex).size; ++i)
        names.push_back(i < b.point_names.size() ? b.point_names[i]
                                                 : prefix + std::to_string(i));
      out.point_names = dedupe_names(std::move(names));
    }
    out.transition_names = a.transition_names;
    out.transition_names.insert(out.transition_names.end(),
                                b.transition_names.begin(),
                                b.transition_names.end());
    out.transition_names = dedupe_names(std::move(out.transition_names));
  } else {
    auto composed = hcompose_with_pushout<I>(ca, cb);
    out.cell = composed.cell;
    out.point_names = merged_names(
        a.point_names, I::underlying_map(composed.pushout.from_left),
        b.point_names, I::underlying_map(composed.pushout.from_right),
        I::underlying(composed.cell.apex).size, prefix);
    // Transitions / generators never merge along discrete feet; names simply
    // concatenate in pushout order when either side has them.
    if (!a.transition_names.empty() || !b.transition_names.empty()) {
      std::vector<std::string> names(a.transition_names);
      names.insert(names.end(), b.transition_names.begin(),
                   b.transition_names.end());
      out.transition_names = dedupe_names(std::move(names));
    }
  }
  return out;
}

}  // namespace

NetworkDocument compose_documents(const NetworkDocument& a,
                                  const NetworkDocument& b) {
  require(a.tag == b.tag, ErrorKind::schema_violation,
          "compose: documents carry different instances");
  switch (a.tag) {
    case InstanceTag::graph:
      return binary_op_document<GraphCat>(a, b, false, "n");
    case InstanceTag::lgraph:
      return binary_op_document<LGraphCat<std::string>>(a, b, false, "n");
    case InstanceTag::petri:
      return binary_op_document<PetriCat>(a, b, false, "p");
    case InstanceTag::petri_rates:
      return binary_op_document<PetriRatesCat>(a, b, false, "p");
  }
  raise(ErrorKind::schema_violation, "unknown instance");
}

NetworkDocument tensor_documents(const NetworkDocument& a,
                                 const NetworkDocument& b) {
  require(a.tag == b.tag, ErrorKind::schema_violation,
          "tensor: documents carry different instances");
  switch (a.tag) {
    case InstanceTag::graph:
      return binary_op_document<GraphCat>(a, b, true, "n");
    case InstanceTag::lgraph:
      return binary_op_document<LGraphCat<std::string>>(a, b, true, "n");
    case InstanceTag::petri:
      return binary_op_document<PetriCat>(a, b, true, "p");
    case InstanceTag::petri_rates:
      return binary_op_document<PetriRatesCat>(a, b, true, "p");
  }
  raise(ErrorKind::schema_violation, "unknown instance");
}

namespace {

template <typename I>
IsoReport iso_report(const NetworkDocument& a, const NetworkDocument& b,
                     const char* point_key, const char* generator_key) {
  const auto& ca = std::get<StructuredCospan<I>>(a.cell);
  const auto& cb = std::get<StructuredCospan<I>>(b.cell);
  auto witness = cospan_isomorphism<I>(ca, cb);
  if (!witness) return IsoReport{false, ""};
  json out;
  out[point_key] = I::underlying_map(*witness).map();
  if (generator_key) {
    if constexpr (std::is_same_v<I, PetriCat> ||
                  std::is_same_v<I, PetriRatesCat>) {
      out[generator_key] = witness->transition_map().map();
    } else {
      out[generator_key] = witness->edge_map().map();
    }
  }
  return IsoReport{true, out.dump(2) + "\n"};
}

}  // namespace

IsoReport document_isomorphism(const NetworkDocument& a,
                               const NetworkDocument& b) {
  require(a.tag == b.tag, ErrorKind::schema_violation,
          "iso: documents carry different instances");
  switch (a.tag) {
    case InstanceTag::graph:
      return iso_report<GraphCat>(a, b, "nodes", "edges");
    case InstanceTag::lgraph:
      return iso_report<LGraphCat<std::string>>(a, b, "nodes", "edges");
    case InstanceTag::petri:
      return iso_report<PetriCat>(a, b, "places", "transitions");
    case InstanceTag::petri_rates:
      return iso_report<PetriRatesCat>(a, b, "places", "transitions");
  }
  raise(ErrorKind::schema_violation, "unknown instance");
}

Circuit circuit_from_document(const NetworkDocument& doc) {
  require(doc.tag == InstanceTag::lgraph, ErrorKind::schema_violation,
          "circuits are lgraph documents with rational labels");
  const auto& cell = std::get<StructuredCospan<LGraphCat<std::string>>>(doc.cell);
  std::vector<Rational> resistances;
  resistances.reserve(cell.apex.labels.size());
  for (const std::string& label : cell.apex.labels) {
    Rational r = parse_rational(label);
    require(r > 0, ErrorKind::nonpositive_resistance,
            "resistance must be positive: '" + label + "'");
    resistances.push_back(std::move(r));
  }
  LGraph<Rational> apex(cell.apex.graph, std::move(resistances));
  return make_cospan<CircuitCat>(cell.foot_in, cell.foot_out, apex,
                                 cell.leg_in.node_map().map(),
                                 cell.leg_out.node_map().map());
}

StructuredCospan<PetriCat> petri_cell_from_document(const NetworkDocument& doc) {
  if (doc.tag == InstanceTag::petri)
    return std::get<StructuredCospan<PetriCat>>(doc.cell);
  require(doc.tag == InstanceTag::petri_rates, ErrorKind::schema_violation,
          "expected a petri or petri_rates document");
  const auto& cell = std::get<StructuredCospan<PetriRatesCat>>(doc.cell);
  return make_cospan<PetriCat>(cell.foot_in, cell.foot_out, cell.apex.net,
                               cell.leg_in.place_map().map(),
                               cell.leg_out.place_map().map());
}

StructuredCospan<PetriRatesCat> rate_cell_from_document(
    const NetworkDocument& doc) {
  require(doc.tag == InstanceTag::petri_rates, ErrorKind::schema_violation,
          "expected a petri_rates document");
  return std::get<StructuredCospan<PetriRatesCat>>(doc.cell);
}

namespace {

std::map<std::string, std::string> parse_assignments(const std::string& input) {
  std::map<std::string, std::string> out;
  if (input.empty()) return out;
  std::stringstream stream(input);
  std::string item;
  while (std::getline(stream, item, ',')) {
    auto colon = item.find(':');
    require(colon != std::string::npos, ErrorKind::schema_violation,
            "expected name:value pairs, got '" + item + "'");
    std::string name = item.substr(0, colon);
    require(out.emplace(name, item.substr(colon + 1)).second,
            ErrorKind::duplicate_name, "repeated name '" + name + "'");
  }
  return out;
}

std::size_t place_index_by_name(const NetworkDocument& doc,
                                const std::string& name) {
  for (std::size_t i = 0; i < doc.point_names.size(); ++i) {
    if (doc.point_names[i] == name) return i;
  }
  raise(ErrorKind::schema_violation, "unknown place '" + name + "'");
}

}  // namespace

FinSet finset_from_json(const std::string& input) {
  json doc = json::parse(input, nullptr, false);
  if (doc.is_discarded())
    raise(ErrorKind::malformed_json, "input is not valid JSON");
  return FinSet{natural(field(doc, "size", ""), "/size")};
}

std::string finset_to_json(const FinSet& a) {
  json doc;
  doc["size"] = a.size;
  return doc.dump() + "\n";
}

FinFunction finfunction_from_json(const std::string& input) {
  json doc = json::parse(input, nullptr, false);
  if (doc.is_discarded())
    raise(ErrorKind::malformed_json, "input is not valid JSON");
  FinSet dom{natural(field(doc, "dom", ""), "/dom")};
  FinSet cod{natural(field(doc, "cod", ""), "/cod")};
  const json& table = field(doc, "map", "");
  if (!table.is_array() || table.size() != dom.size)
    schema_error("/map", "expected one value per domain element");
  std::vector<std::size_t> values;
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::string at = "/map/" + std::to_string(i);
    std::size_t v = natural(table[i], at);
    if (v >= cod.size)
      raise(ErrorKind::index_out_of_range,
            "value outside the codomain at " + at);
    values.push_back(v);
  }
  return FinFunction(dom, cod, std::move(values));
}

std::string finfunction_to_json(const FinFunction& f) {
  json doc;
  doc["dom"] = f.dom().size;
  doc["cod"] = f.cod().size;
  doc["map"] = f.map();
  return doc.dump() + "\n";
}

Multiset parse_marking(const NetworkDocument& doc, const std::string& input) {
  Multiset m = Multiset::zero(FinSet{doc.point_names.size()});
  for (const auto& [name, value] : parse_assignments(input)) {
    Rational count = parse_rational(value);
    require(count >= 0 && count.get_den() == 1, ErrorKind::schema_violation,
            "marking counts must be nonnegative integers: '" + value + "'");
    m.counts[place_index_by_name(doc, name)] = count.get_num().get_ui();
  }
  return m;
}

std::vector<Rational> parse_concentration(const NetworkDocument& doc,
                                          const std::string& input) {
  std::vector<Rational> state(doc.point_names.size(), Rational(0));
  for (const auto& [name, value] : parse_assignments(input)) {
    Rational level = parse_rational(value);
    require(level >= 0, ErrorKind::schema_violation,
            "concentrations must be nonnegative: '" + value + "'");
    state[place_index_by_name(doc, name)] = std::move(level);
  }
  return state;
}

namespace {

void dot_feet(std::ostringstream& out, const char* cluster, const char* label,
              std::size_t count, const char* node_prefix) {
  out << "  subgraph cluster_" << cluster << " {\n"
      << "    label=\"" << label << "\";\n"
      << "    style=dashed;\n";
  for (std::size_t i = 0; i < count; ++i)
    out << "    " << node_prefix << i << " [shape=point, label=\"\"];\n";
  out << "  }\n";
}

void dot_leg_arrows(std::ostringstream& out, const FinFunction& points,
                    const char* from_prefix, const char* to_prefix) {
  for (std::size_t i = 0; i < points.dom().size; ++i)
    out << "  " << from_prefix << i << " -> " << to_prefix << points(i)
        << " [style=dashed, arrowhead=vee];\n";
}

std::string point_label(const std::vector<std::string>& names, std::size_t i) {
  return i < names.size() ? names[i] : std::to_string(i);
}

}  // namespace

std::string export_dot(const NetworkDocument& doc) {
  std::ostringstream out;
  out << "digraph open_network {\n  rankdir=LR;\n";
  auto emit_graph = [&](const Graph& g, const std::vector<std::string>* labels,
                        const FinFunction& leg_in, const FinFunction& leg_out) {
    dot_feet(out, "in", "in", leg_in.dom().size, "in");
    dot_feet(out, "out", "out", leg_out.dom().size, "out");
    for (std::size_t n = 0; n < g.nodes.size; ++n)
      out << "  n" << n << " [shape=circle, label=\""
          << point_label(doc.point_names, n) << "\"];\n";
    for (std::size_t e = 0; e < g.edges.size; ++e) {
      out << "  n" << g.src(e) << " -> n" << g.tgt(e);
      if (labels) out << " [label=\"" << (*labels)[e] << "\"]";
      out << ";\n";
    }
    dot_leg_arrows(out, leg_in, "in", "n");
    dot_leg_arrows(out, leg_out, "out", "n");
  };
  auto emit_petri = [&](const PetriNet& net, const std::vector<Rational>* rates,
                        const FinFunction& leg_in, const FinFunction& leg_out) {
    dot_feet(out, "in", "in", leg_in.dom().size, "in");
    dot_feet(out, "out", "out", leg_out.dom().size, "out");
    for (std::size_t p = 0; p < net.places.size; ++p)
      out << "  p" << p << " [shape=circle, label=\""
          << point_label(doc.point_names, p) << "\"];\n";
    for (std::size_t t = 0; t < net.transitions.size; ++t) {
      out << "  t" << t << " [shape=square, label=\""
          << (t < doc.transition_names.size() ? doc.transition_names[t]
                                              : std::to_string(t));
      if (rates) out << " (" << rational_string((*rates)[t]) << ")";
      out << "\"];\n";
      for (std::size_t p = 0; p < net.places.size; ++p) {
        for (std::uint64_t k = 0; k < net.sources[t].counts[p]; ++k)
          out << "  p" << p << " -> t" << t << ";\n";
        for (std::uint64_t k = 0; k < net.targets[t].counts[p]; ++k)
          out << "  t" << t << " -> p" << p << ";\n";
      }
    }
    dot_leg_arrows(out, leg_in, "in", "p");
    dot_leg_arrows(out, leg_out, "out", "p");
  };
  switch (doc.tag) {
    case InstanceTag::graph: {
      const auto& cell = std::get<StructuredCospan<GraphCat>>(doc.cell);
      emit_graph(cell.apex, nullptr, cell.leg_in.node_map(),
                 cell.leg_out.node_map());
      break;
    }
    case InstanceTag::lgraph: {
      const auto& cell =
          std::get<StructuredCospan<LGraphCat<std::string>>>(doc.cell);
      emit_graph(cell.apex.graph, &cell.apex.labels, cell.leg_in.node_map(),
                 cell.leg_out.node_map());
      break;
    }
    case InstanceTag::petri: {
      const auto& cell = std::get<StructuredCospan<PetriCat>>(doc.cell);
      emit_petri(cell.apex, nullptr, cell.leg_in.place_map(),
                 cell.leg_out.place_map());
      break;
    }
    case InstanceTag::petri_rates: {
      const auto& cell = std::get<StructuredCospan<PetriRatesCat>>(doc.cell);
      emit_petri(cell.apex.net, &cell.apex.rates, cell.leg_in.place_map(),
                 cell.leg_out.place_map());
      break;
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ocs
