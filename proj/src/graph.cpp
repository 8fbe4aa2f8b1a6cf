#include "opencospan/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace ocs {

Graph::Graph(FinSet edge_set, FinSet node_set, FinFunction source,
             FinFunction target)
    : edges(edge_set), nodes(node_set), src(std::move(source)),
      tgt(std::move(target)) {
  require(src.dom() == edges && tgt.dom() == edges &&
              src.cod() == nodes && tgt.cod() == nodes,
          ErrorKind::invalid_structure,
          "graph: source/target must be functions edges -> nodes");
}

Graph Graph::discrete(FinSet node_set) {
  return Graph(FinSet{0}, node_set, FinFunction::initial(node_set),
               FinFunction::initial(node_set));
}

GraphMorphism::GraphMorphism(Graph dom, Graph cod, FinFunction edge_map,
                             FinFunction node_map)
    : dom_(std::move(dom)), cod_(std::move(cod)),
      edge_map_(std::move(edge_map)), node_map_(std::move(node_map)) {
  graphdetail::check_graph_morphism(dom_, cod_, edge_map_, node_map_);
}

namespace graphdetail {

void check_graph_morphism(const Graph& dom, const Graph& cod,
                          const FinFunction& edge_map,
                          const FinFunction& node_map) {
  require(edge_map.dom() == dom.edges && edge_map.cod() == cod.edges &&
              node_map.dom() == dom.nodes && node_map.cod() == cod.nodes,
          ErrorKind::invalid_structure,
          "graph morphism: component boundaries do not match");
  require(compose(node_map, dom.src) == compose(cod.src, edge_map),
          ErrorKind::invalid_structure,
          "graph morphism: source square does not commute");
  require(compose(node_map, dom.tgt) == compose(cod.tgt, edge_map),
          ErrorKind::invalid_structure,
          "graph morphism: target square does not commute");
}

PushoutParts graph_pushout_parts(const Graph& b, const Graph& c,
                                 const FinFunction& fe, const FinFunction& fn,
                                 const FinFunction& ge, const FinFunction& gn) {
  FinPushout pe = pushout(fe, ge);
  FinPushout pn = pushout(fn, gn);
  FinFunction src = mediator(pe.from_left, pe.from_right,
                             compose(pn.from_left, b.src),
                             compose(pn.from_right, c.src));
  FinFunction tgt = mediator(pe.from_left, pe.from_right,
                             compose(pn.from_left, b.tgt),
                             compose(pn.from_right, c.tgt));
  Graph apex(pe.obj, pn.obj, std::move(src), std::move(tgt));
  return PushoutParts{std::move(pe), std::move(pn), std::move(apex)};
}

namespace {

struct NodeSignature {
  std::size_t out = 0;
  std::size_t in = 0;
  std::size_t loops = 0;

  friend bool operator==(const NodeSignature&, const NodeSignature&) = default;
};

std::vector<NodeSignature> node_signatures(const Graph& g) {
  std::vector<NodeSignature> sig(g.nodes.size);
  for (std::size_t e = 0; e < g.edges.size; ++e) {
    sig[g.src(e)].out++;
    sig[g.tgt(e)].in++;
    if (g.src(e) == g.tgt(e)) sig[g.src(e)].loops++;
  }
  return sig;
}

using EdgeKey = std::tuple<std::size_t, std::size_t, std::size_t>;

std::map<EdgeKey, std::vector<std::size_t>> edge_groups(
    const Graph& g, const std::vector<std::size_t>& labels) {
  std::map<EdgeKey, std::vector<std::size_t>> groups;
  for (std::size_t e = 0; e < g.edges.size; ++e) {
    std::size_t l = labels.empty() ? 0 : labels[e];
    groups[{g.src(e), g.tgt(e), l}].push_back(e);
  }
  return groups;
}

class IsoSearch {
public:
  IsoSearch(const Graph& x, const Graph& y,
            const std::vector<std::size_t>& lx,
            const std::vector<std::size_t>& ly)
      : x_(x), y_(y), lx_(lx), ly_(ly), sig_x_(node_signatures(x)),
        sig_y_(node_signatures(y)), node_map_(x.nodes.size, kUnset),
        used_(y.nodes.size, false) {}

  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool pin_node(std::size_t u, std::size_t v) {
    if (node_map_[u] != kUnset) return node_map_[u] == v;
    if (used_[v] || !(sig_x_[u] == sig_y_[v])) return false;
    node_map_[u] = v;
    used_[v] = true;
    return true;
  }

  // Explores node bijections; `accept` may reject a complete bijection (for
  // example when no edge matching extends it), in which case the search
  // continues.
  template <typename Accept>
  bool run(Accept&& accept) {
    return assign(0, accept);
  }

private:
  bool compatible(std::size_t u, std::size_t v) const {
    // Adjacency counts against already-assigned nodes, split by label.
    for (std::size_t e = 0; e < x_.edges.size; ++e) {
      std::size_t s = x_.src(e), t = x_.tgt(e);
      bool touches = (s == u && node_map_[t] != kUnset) ||
                     (t == u && node_map_[s] != kUnset) || (s == u && t == u);
      if (!touches) continue;
      std::size_t ms = (s == u) ? v : node_map_[s];
      std::size_t mt = (t == u) ? v : node_map_[t];
      if (ms == kUnset || mt == kUnset) continue;
      std::size_t l = lx_.empty() ? 0 : lx_[e];
      if (count_edges(x_, lx_, s, t, l) != count_edges(y_, ly_, ms, mt, l))
        return false;
    }
    return true;
  }

  static std::size_t count_edges(const Graph& g,
                                 const std::vector<std::size_t>& labels,
                                 std::size_t s, std::size_t t, std::size_t l) {
    std::size_t n = 0;
    for (std::size_t e = 0; e < g.edges.size; ++e) {
      std::size_t el = labels.empty() ? 0 : labels[e];
      if (g.src(e) == s && g.tgt(e) == t && el == l) ++n;
    }
    return n;
  }

  template <typename Accept>
  bool assign(std::size_t u, Accept&& accept) {
    while (u < node_map_.size() && node_map_[u] != kUnset) ++u;
    if (u == node_map_.size()) return accept(node_map_);
    for (std::size_t v = 0; v < used_.size(); ++v) {
      if (used_[v] || !(sig_x_[u] == sig_y_[v])) continue;
      if (!compatible(u, v)) continue;
      node_map_[u] = v;
      used_[v] = true;
      if (assign(u + 1, accept)) return true;
      node_map_[u] = kUnset;
      used_[v] = false;
    }
    return false;
  }

  const Graph& x_;
  const Graph& y_;
  const std::vector<std::size_t>& lx_;
  const std::vector<std::size_t>& ly_;
  std::vector<NodeSignature> sig_x_;
  std::vector<NodeSignature> sig_y_;
  std::vector<std::size_t> node_map_;
  std::vector<bool> used_;
};

// Extends a node bijection to an edge bijection honoring pinned edges, by
// pairing parallel edges in index order; fails when group sizes differ.
std::optional<FinFunction> match_edges(const Graph& x, const Graph& y,
                                       const std::vector<std::size_t>& lx,
                                       const std::vector<std::size_t>& ly,
                                       const std::vector<std::size_t>& nodes,
                                       const Pins& edge_pins) {
  auto gx = edge_groups(x, lx);
  auto gy = edge_groups(y, ly);
  if (gx.size() != gy.size()) return std::nullopt;
  std::vector<std::size_t> edge_map(x.edges.size, IsoSearch::kUnset);
  std::vector<bool> taken(y.edges.size, false);
  auto mapped_key = [&](std::size_t e) {
    std::size_t l = lx.empty() ? 0 : lx[e];
    return EdgeKey{nodes[x.src(e)], nodes[x.tgt(e)], l};
  };
  for (auto [e, ey] : edge_pins) {
    if (edge_map[e] != IsoSearch::kUnset) {
      if (edge_map[e] != ey) return std::nullopt;
      continue;
    }
    if (taken[ey]) return std::nullopt;
    std::size_t ly_id = ly.empty() ? 0 : ly[ey];
    if (mapped_key(e) != EdgeKey{y.src(ey), y.tgt(ey), ly_id})
      return std::nullopt;
    edge_map[e] = ey;
    taken[ey] = true;
  }
  for (auto& [key, xs] : gx) {
    EdgeKey mapped{nodes[std::get<0>(key)], nodes[std::get<1>(key)],
                   std::get<2>(key)};
    auto it = gy.find(mapped);
    if (it == gy.end() || it->second.size() != xs.size()) return std::nullopt;
    std::size_t cursor = 0;
    for (std::size_t e : xs) {
      if (edge_map[e] != IsoSearch::kUnset) continue;
      while (cursor < it->second.size() && taken[it->second[cursor]]) ++cursor;
      if (cursor == it->second.size()) return std::nullopt;
      edge_map[e] = it->second[cursor];
      taken[it->second[cursor]] = true;
    }
  }
  return FinFunction(x.edges, y.edges, std::move(edge_map));
}

}  // namespace

std::optional<std::pair<FinFunction, FinFunction>> graph_iso(
    const Graph& x, const Graph& y, const std::vector<std::size_t>& labels_x,
    const std::vector<std::size_t>& labels_y, const Pins& node_pins,
    const Pins& edge_pins) {
  if (x.nodes != y.nodes || x.edges != y.edges) return std::nullopt;
  IsoSearch search(x, y, labels_x, labels_y);
  for (auto [u, v] : node_pins) {
    if (!search.pin_node(u, v)) return std::nullopt;
  }
  // Edge pins force node pins on their endpoints.
  for (auto [e, ey] : edge_pins) {
    if (!search.pin_node(x.src(e), y.src(ey)) ||
        !search.pin_node(x.tgt(e), y.tgt(ey)))
      return std::nullopt;
  }
  std::optional<std::pair<FinFunction, FinFunction>> result;
  search.run([&](const std::vector<std::size_t>& nodes) {
    auto edges = match_edges(x, y, labels_x, labels_y, nodes, edge_pins);
    if (!edges) return false;
    result = std::make_pair(*edges, FinFunction(x.nodes, y.nodes, nodes));
    return true;
  });
  return result;
}

std::pair<FinFunction, FinFunction> graph_canonical_order(
    const Graph& x, const std::vector<std::size_t>& labels_x,
    const std::vector<std::size_t>& seed_nodes) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> node_perm(x.nodes.size, kUnset);
  std::vector<std::size_t> order;
  order.reserve(x.nodes.size);
  auto visit = [&](std::size_t n) {
    if (node_perm[n] != kUnset) return;
    node_perm[n] = order.size();
    order.push_back(n);
  };
  for (std::size_t s : seed_nodes) visit(s);
  for (std::size_t cursor = 0; cursor < order.size(); ++cursor) {
    std::size_t u = order[cursor];
    for (std::size_t e = 0; e < x.edges.size; ++e) {
      if (x.src(e) == u) visit(x.tgt(e));
      if (x.tgt(e) == u) visit(x.src(e));
    }
  }
  for (std::size_t n = 0; n < x.nodes.size; ++n) visit(n);

  std::vector<std::size_t> edges(x.edges.size);
  std::iota(edges.begin(), edges.end(), 0);
  std::stable_sort(edges.begin(), edges.end(), [&](std::size_t a, std::size_t b) {
    std::size_t la = labels_x.empty() ? 0 : labels_x[a];
    std::size_t lb = labels_x.empty() ? 0 : labels_x[b];
    return std::tuple(node_perm[x.src(a)], node_perm[x.tgt(a)], la, a) <
           std::tuple(node_perm[x.src(b)], node_perm[x.tgt(b)], lb, b);
  });
  std::vector<std::size_t> edge_perm(x.edges.size);
  for (std::size_t pos = 0; pos < edges.size(); ++pos) edge_perm[edges[pos]] = pos;
  return {FinFunction(x.nodes, x.nodes, std::move(node_perm)),
          FinFunction(x.edges, x.edges, std::move(edge_perm))};
}

}  // namespace graphdetail

GraphMorphism GraphCat::leg(const FinFunction& points, const Graph& x) {
  require(points.cod() == x.nodes, ErrorKind::index_out_of_range,
          "leg points must land in the node set");
  return GraphMorphism(Graph::discrete(points.dom()), x,
                       FinFunction::initial(x.edges), points);
}

GraphMorphism GraphCat::discrete_map(const FinFunction& f) {
  return GraphMorphism(Graph::discrete(f.dom()), Graph::discrete(f.cod()),
                       FinFunction::initial(FinSet{0}), f);
}

GraphMorphism GraphCat::identity(const Graph& x) {
  return GraphMorphism(x, x, FinFunction::identity(x.edges),
                       FinFunction::identity(x.nodes));
}

GraphMorphism GraphCat::compose(const GraphMorphism& g, const GraphMorphism& f) {
  require(f.cod() == g.dom(), ErrorKind::mismatched_boundary,
          "compose: middle objects differ");
  return GraphMorphism(f.dom(), g.cod(), ocs::compose(g.edge_map(), f.edge_map()),
                       ocs::compose(g.node_map(), f.node_map()));
}

std::optional<GraphMorphism> GraphCat::inverse(const GraphMorphism& m) {
  if (!m.edge_map().is_bijection() || !m.node_map().is_bijection())
    return std::nullopt;
  return GraphMorphism(m.cod(), m.dom(), m.edge_map().inverse(),
                       m.node_map().inverse());
}

GraphCat::Coproduct GraphCat::coproduct(const Graph& x, const Graph& y) {
  FinCoproduct ce = ocs::coproduct(x.edges, y.edges);
  FinCoproduct cn = ocs::coproduct(x.nodes, y.nodes);
  Graph obj(ce.obj, cn.obj,
            ocs::copair(ocs::compose(cn.from_first, x.src),
                        ocs::compose(cn.from_second, y.src)),
            ocs::copair(ocs::compose(cn.from_first, x.tgt),
                        ocs::compose(cn.from_second, y.tgt)));
  return Coproduct{obj, GraphMorphism(x, obj, ce.from_first, cn.from_first),
                   GraphMorphism(y, obj, ce.from_second, cn.from_second)};
}

GraphMorphism GraphCat::copair(const Coproduct& cop, const GraphMorphism& f,
                               const GraphMorphism& g) {
  require(f.cod() == g.cod(), ErrorKind::mismatched_boundary,
          "copair: codomains differ");
  return GraphMorphism(cop.obj, f.cod(),
                       ocs::copair(f.edge_map(), g.edge_map()),
                       ocs::copair(f.node_map(), g.node_map()));
}

GraphCat::Pushout GraphCat::pushout(const GraphMorphism& f,
                                    const GraphMorphism& g) {
  require(f.dom() == g.dom(), ErrorKind::mismatched_boundary,
          "pushout: span legs must share a domain");
  auto parts = graphdetail::graph_pushout_parts(
      f.cod(), g.cod(), f.edge_map(), f.node_map(), g.edge_map(), g.node_map());
  return Pushout{parts.apex,
                 GraphMorphism(f.cod(), parts.apex, parts.edges.from_left,
                               parts.nodes.from_left),
                 GraphMorphism(g.cod(), parts.apex, parts.edges.from_right,
                               parts.nodes.from_right)};
}

GraphMorphism GraphCat::pushout_mediator(const Pushout& po,
                                         const GraphMorphism& h_left,
                                         const GraphMorphism& h_right) {
  require(h_left.cod() == h_right.cod(), ErrorKind::mismatched_boundary,
          "mediator: cocone legs must share a codomain");
  try {
    FinFunction edges =
        mediator(po.from_left.edge_map(), po.from_right.edge_map(),
                 h_left.edge_map(), h_right.edge_map());
    FinFunction nodes =
        mediator(po.from_left.node_map(), po.from_right.node_map(),
                 h_left.node_map(), h_right.node_map());
    return GraphMorphism(po.obj, h_left.cod(), std::move(edges), std::move(nodes));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::invalid_structure)
      raise(ErrorKind::non_commuting_cocone, e.what());
    throw;
  }
}

std::optional<GraphMorphism> GraphCat::find_isomorphism(
    const Graph& x, const Graph& y, const std::vector<Frame>& frames) {
  graphdetail::Pins node_pins, edge_pins;
  for (const Frame& fr : frames) {
    const GraphMorphism& p = fr.first;
    const GraphMorphism& q = fr.second;
    for (std::size_t i = 0; i < p.node_map().dom().size; ++i)
      node_pins.emplace_back(p.node_map()(i), q.node_map()(i));
    for (std::size_t e = 0; e < p.edge_map().dom().size; ++e)
      edge_pins.emplace_back(p.edge_map()(e), q.edge_map()(e));
  }
  auto found = graphdetail::graph_iso(x, y, {}, {}, node_pins, edge_pins);
  if (!found) return std::nullopt;
  return GraphMorphism(x, y, found->first, found->second);
}

GraphMorphism GraphCat::canonical_iso(const Graph& x,
                                      const std::vector<std::size_t>& seeds) {
  auto perms = graphdetail::graph_canonical_order(x, {}, seeds);
  const FinFunction& node_perm = perms.first;
  const FinFunction& edge_perm = perms.second;
  FinFunction inv_edge = edge_perm.inverse();
  std::vector<std::size_t> src(x.edges.size), tgt(x.edges.size);
  for (std::size_t e = 0; e < x.edges.size; ++e) {
    src[e] = node_perm(x.src(inv_edge(e)));
    tgt[e] = node_perm(x.tgt(inv_edge(e)));
  }
  Graph renumbered(x.edges, x.nodes, FinFunction(x.edges, x.nodes, std::move(src)),
                   FinFunction(x.edges, x.nodes, std::move(tgt)));
  return GraphMorphism(x, renumbered, edge_perm, node_perm);
}

}  // namespace ocs
