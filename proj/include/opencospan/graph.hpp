#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opencospan/finset.hpp"
#include "opencospan/rational.hpp"

namespace ocs {

// Directed multigraph on skeletal finite sets.
struct Graph {
  FinSet edges;
  FinSet nodes;
  FinFunction src;
  FinFunction tgt;

  Graph()
      : src(FinFunction::identity(FinSet{0})),
        tgt(FinFunction::identity(FinSet{0})) {}
  Graph(FinSet edge_set, FinSet node_set, FinFunction source, FinFunction target);

  static Graph discrete(FinSet node_set);

  friend bool operator==(const Graph&, const Graph&) = default;
};

class GraphMorphism {
public:
  GraphMorphism(Graph dom, Graph cod, FinFunction edge_map, FinFunction node_map);

  const Graph& dom() const { return dom_; }
  const Graph& cod() const { return cod_; }
  const FinFunction& edge_map() const { return edge_map_; }
  const FinFunction& node_map() const { return node_map_; }

  friend bool operator==(const GraphMorphism&, const GraphMorphism&) = default;

private:
  Graph dom_;
  Graph cod_;
  FinFunction edge_map_;
  FinFunction node_map_;
};

namespace graphdetail {

using Pins = std::vector<std::pair<std::size_t, std::size_t>>;

void check_graph_morphism(const Graph& dom, const Graph& cod,
                          const FinFunction& edge_map,
                          const FinFunction& node_map);

struct PushoutParts {
  FinPushout edges;
  FinPushout nodes;
  Graph apex;
};

PushoutParts graph_pushout_parts(const Graph& b, const Graph& c,
                                 const FinFunction& fe, const FinFunction& fn,
                                 const FinFunction& ge, const FinFunction& gn);

// Label-aware isomorphism search; label ids must be comparable across the
// two graphs (pass empty vectors for unlabeled graphs). Pins fix required
// node/edge images. Backtracking over node bijections with degree-signature
// pruning, then edge matching within parallel groups.
std::optional<std::pair<FinFunction, FinFunction>> graph_iso(
    const Graph& x, const Graph& y, const std::vector<std::size_t>& labels_x,
    const std::vector<std::size_t>& labels_y, const Pins& node_pins,
    const Pins& edge_pins);

// Deterministic renumbering pass: nodes breadth-first from the seed list,
// edges ordered by renumbered endpoints. Returns (node old->new, edge
// old->new).
std::pair<FinFunction, FinFunction> graph_canonical_order(
    const Graph& x, const std::vector<std::size_t>& labels_x,
    const std::vector<std::size_t>& seed_nodes);

}  // namespace graphdetail

// The category of graphs with its left adjoint from FinSet (discrete graph).
struct GraphCat {
  using Object = Graph;
  using Morphism = GraphMorphism;

  static std::string name() { return "graph"; }

  static Graph discrete(FinSet a) { return Graph::discrete(a); }
  static GraphMorphism discrete_map(const FinFunction& f);
  static FinSet underlying(const Graph& x) { return x.nodes; }
  static FinFunction underlying_map(const GraphMorphism& m) {
    return m.node_map();
  }
  // Morphism from a discrete graph determined by its action on nodes.
  static GraphMorphism leg(const FinFunction& points, const Graph& x);

  static GraphMorphism identity(const Graph& x);
  static GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f);
  static std::optional<GraphMorphism> inverse(const GraphMorphism& m);

  static Graph initial() { return Graph::discrete(FinSet{0}); }

  struct Coproduct {
    Graph obj;
    GraphMorphism from_first;
    GraphMorphism from_second;
  };
  static Coproduct coproduct(const Graph& x, const Graph& y);
  static GraphMorphism copair(const Coproduct& cop, const GraphMorphism& f,
                              const GraphMorphism& g);

  struct Pushout {
    Graph obj;
    GraphMorphism from_left;
    GraphMorphism from_right;
  };
  static Pushout pushout(const GraphMorphism& f, const GraphMorphism& g);
  static GraphMorphism pushout_mediator(const Pushout& po,
                                        const GraphMorphism& h_left,
                                        const GraphMorphism& h_right);

  using Frame = std::pair<GraphMorphism, GraphMorphism>;
  static std::optional<GraphMorphism> find_isomorphism(
      const Graph& x, const Graph& y, const std::vector<Frame>& frames = {});

  static GraphMorphism canonical_iso(const Graph& x,
                                     const std::vector<std::size_t>& seeds);
};

// Edge-labeled graph; the label set is fixed by the choice of Label type.
template <typename Label>
struct LGraph {
  Graph graph;
  std::vector<Label> labels;

  LGraph() = default;
  LGraph(Graph g, std::vector<Label> edge_labels)
      : graph(std::move(g)), labels(std::move(edge_labels)) {
    require(labels.size() == graph.edges.size, ErrorKind::invalid_structure,
            "every edge must carry a label");
  }

  static LGraph discrete(FinSet node_set) {
    return LGraph(Graph::discrete(node_set), {});
  }

  friend bool operator==(const LGraph&, const LGraph&) = default;
};

template <typename Label>
class LGraphMorphism {
public:
  LGraphMorphism(LGraph<Label> dom, LGraph<Label> cod, FinFunction edge_map,
                 FinFunction node_map)
      : dom_(std::move(dom)), cod_(std::move(cod)),
        edge_map_(std::move(edge_map)), node_map_(std::move(node_map)) {
    graphdetail::check_graph_morphism(dom_.graph, cod_.graph, edge_map_,
                                      node_map_);
    for (std::size_t e = 0; e < dom_.labels.size(); ++e) {
      require(cod_.labels[edge_map_(e)] == dom_.labels[e],
              ErrorKind::invalid_structure,
              "labeled-graph morphism must preserve edge labels");
    }
  }

  const LGraph<Label>& dom() const { return dom_; }
  const LGraph<Label>& cod() const { return cod_; }
  const FinFunction& edge_map() const { return edge_map_; }
  const FinFunction& node_map() const { return node_map_; }

  friend bool operator==(const LGraphMorphism&, const LGraphMorphism&) = default;

private:
  LGraph<Label> dom_;
  LGraph<Label> cod_;
  FinFunction edge_map_;
  FinFunction node_map_;
};

template <typename Label>
struct LGraphCat {
  using Object = LGraph<Label>;
  using Morphism = LGraphMorphism<Label>;

  static std::string name() { return "lgraph"; }

  static Object discrete(FinSet a) { return Object::discrete(a); }

  static Morphism discrete_map(const FinFunction& f) {
    return Morphism(Object::discrete(f.dom()), Object::discrete(f.cod()),
                    FinFunction::initial(FinSet{0}), f);
  }

  static FinSet underlying(const Object& x) { return x.graph.nodes; }
  static FinFunction underlying_map(const Morphism& m) { return m.node_map(); }

  static Morphism leg(const FinFunction& points, const Object& x) {
    require(points.cod() == x.graph.nodes, ErrorKind::index_out_of_range,
            "leg points must land in the node set");
    return Morphism(Object::discrete(points.dom()), x,
                    FinFunction::initial(x.graph.edges), points);
  }

  static Morphism identity(const Object& x) {
    return Morphism(x, x, FinFunction::identity(x.graph.edges),
                    FinFunction::identity(x.graph.nodes));
  }

  static Morphism compose(const Morphism& g, const Morphism& f) {
    require(f.cod() == g.dom(), ErrorKind::mismatched_boundary,
            "compose: middle objects differ");
    return Morphism(f.dom(), g.cod(), ocs::compose(g.edge_map(), f.edge_map()),
                    ocs::compose(g.node_map(), f.node_map()));
  }

  static std::optional<Morphism> inverse(const Morphism& m) {
    if (!m.edge_map().is_bijection() || !m.node_map().is_bijection())
      return std::nullopt;
    return Morphism(m.cod(), m.dom(), m.edge_map().inverse(),
                    m.node_map().inverse());
  }

  static Object initial() { return Object::discrete(FinSet{0}); }

  struct Coproduct {
    Object obj;
    Morphism from_first;
    Morphism from_second;
  };

  static Coproduct coproduct(const Object& x, const Object& y) {
    FinCoproduct ce = ocs::coproduct(x.graph.edges, y.graph.edges);
    FinCoproduct cn = ocs::coproduct(x.graph.nodes, y.graph.nodes);
    Graph g(ce.obj, cn.obj,
            ocs::copair(ocs::compose(cn.from_first, x.graph.src),
                        ocs::compose(cn.from_second, y.graph.src)),
            ocs::copair(ocs::compose(cn.from_first, x.graph.tgt),
                        ocs::compose(cn.from_second, y.graph.tgt)));
    std::vector<Label> labels = x.labels;
    labels.insert(labels.end(), y.labels.begin(), y.labels.end());
    Object obj(std::move(g), std::move(labels));
    return Coproduct{obj, Morphism(x, obj, ce.from_first, cn.from_first),
                     Morphism(y, obj, ce.from_second, cn.from_second)};
  }

  static Morphism copair(const Coproduct& cop, const Morphism& f,
                         const Morphism& g) {
    require(f.cod() == g.cod(), ErrorKind::mismatched_boundary,
            "copair: codomains differ");
    return Morphism(cop.obj, f.cod(), ocs::copair(f.edge_map(), g.edge_map()),
                    ocs::copair(f.node_map(), g.node_map()));
  }

  struct Pushout {
    Object obj;
    Morphism from_left;
    Morphism from_right;
  };

  static Pushout pushout(const Morphism& f, const Morphism& g) {
    require(f.dom() == g.dom(), ErrorKind::mismatched_boundary,
            "pushout: span legs must share a domain");
    auto parts = graphdetail::graph_pushout_parts(
        f.cod().graph, g.cod().graph, f.edge_map(), f.node_map(), g.edge_map(),
        g.node_map());
    std::vector<Label> labels = induce_along(
        parts.edges.from_left, parts.edges.from_right, f.cod().labels,
        g.cod().labels, ErrorKind::label_conflict,
        "pushout identifies edges carrying different labels");
    Object obj(parts.apex, std::move(labels));
    return Pushout{obj,
                   Morphism(f.cod(), obj, parts.edges.from_left,
                            parts.nodes.from_left),
                   Morphism(g.cod(), obj, parts.edges.from_right,
                            parts.nodes.from_right)};
  }

  static Morphism pushout_mediator(const Pushout& po, const Morphism& h_left,
                                   const Morphism& h_right) {
    require(h_left.cod() == h_right.cod(), ErrorKind::mismatched_boundary,
            "mediator: cocone legs must share a codomain");
    try {
      FinFunction edges =
          mediator(po.from_left.edge_map(), po.from_right.edge_map(),
                   h_left.edge_map(), h_right.edge_map());
      FinFunction nodes =
          mediator(po.from_left.node_map(), po.from_right.node_map(),
                   h_left.node_map(), h_right.node_map());
      return Morphism(po.obj, h_left.cod(), std::move(edges), std::move(nodes));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::invalid_structure)
        raise(ErrorKind::non_commuting_cocone, e.what());
      throw;
    }
  }

  using Frame = std::pair<Morphism, Morphism>;

  static std::optional<Morphism> find_isomorphism(
      const Object& x, const Object& y, const std::vector<Frame>& frames = {}) {
    auto ids = label_ids(x, y);
    graphdetail::Pins node_pins, edge_pins;
    for (const Frame& fr : frames) {
      const Morphism& p = fr.first;
      const Morphism& q = fr.second;
      for (std::size_t i = 0; i < p.node_map().dom().size; ++i)
        node_pins.emplace_back(p.node_map()(i), q.node_map()(i));
      for (std::size_t e = 0; e < p.edge_map().dom().size; ++e)
        edge_pins.emplace_back(p.edge_map()(e), q.edge_map()(e));
    }
    auto found = graphdetail::graph_iso(x.graph, y.graph, ids.first, ids.second,
                                        node_pins, edge_pins);
    if (!found) return std::nullopt;
    return Morphism(x, y, found->first, found->second);
  }

  static Morphism canonical_iso(const Object& x,
                                const std::vector<std::size_t>& seeds) {
    auto ids = label_ids(x, x);
    auto perms =
        graphdetail::graph_canonical_order(x.graph, ids.first, seeds);
    const FinFunction& node_perm = perms.first;
    const FinFunction& edge_perm = perms.second;
    FinFunction inv_edge = edge_perm.inverse();
    std::vector<std::size_t> src(x.graph.edges.size), tgt(x.graph.edges.size);
    std::vector<Label> labels(x.graph.edges.size);
    for (std::size_t e = 0; e < x.graph.edges.size; ++e) {
      std::size_t old_e = inv_edge(e);
      src[e] = node_perm(x.graph.src(old_e));
      tgt[e] = node_perm(x.graph.tgt(old_e));
      labels[e] = x.labels[old_e];
    }
    Object renumbered(
        Graph(x.graph.edges, x.graph.nodes,
              FinFunction(x.graph.edges, x.graph.nodes, std::move(src)),
              FinFunction(x.graph.edges, x.graph.nodes, std::move(tgt))),
        std::move(labels));
    return Morphism(x, renumbered, edge_perm, node_perm);
  }

private:
  static std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
  label_ids(const Object& x, const Object& y) {
    std::map<Label, std::size_t> table;
    auto intern = [&table](const Label& l) {
      auto [it, inserted] = table.emplace(l, table.size());
      (void)inserted;
      return it->second;
    };
    std::vector<std::size_t> ix, iy;
    ix.reserve(x.labels.size());
    iy.reserve(y.labels.size());
    for (const Label& l : x.labels) ix.push_back(intern(l));
    for (const Label& l : y.labels) iy.push_back(intern(l));
    return {std::move(ix), std::move(iy)};
  }
};

}  // namespace ocs
