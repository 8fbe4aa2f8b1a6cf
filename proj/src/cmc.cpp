#include "opencospan/cmc.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace ocs {

namespace {

// Presentations share the structural shape of Petri nets, so colimits and
// isomorphism search reuse the Petri machinery on a stripped view.
PetriNet as_net(const CmcPresentation& p) {
  std::vector<Multiset> sources, targets;
  sources.reserve(p.morphism_generators.size());
  targets.reserve(p.morphism_generators.size());
  for (const CmcGenerator& g : p.morphism_generators) {
    sources.push_back(g.source);
    targets.push_back(g.target);
  }
  return PetriNet(FinSet{p.morphism_generators.size()}, p.object_generators,
                  std::move(sources), std::move(targets));
}

std::string synthetic_name(const std::string& prefix, std::size_t i) {
  return prefix + std::to_string(i);
}

CmcPresentation from_net(const PetriNet& net,
                         std::vector<std::string> object_names,
                         std::vector<std::string> generator_names) {
  std::vector<CmcGenerator> generators;
  generators.reserve(net.transitions.size);
  for (std::size_t t = 0; t < net.transitions.size; ++t) {
    std::string name = t < generator_names.size() ? generator_names[t]
                                                  : synthetic_name("t", t);
    generators.push_back(CmcGenerator{name, net.sources[t], net.targets[t]});
  }
  return CmcPresentation(net.places, std::move(generators),
                         std::move(object_names));
}

}  // namespace

CmcPresentation::CmcPresentation(FinSet objects,
                                 std::vector<CmcGenerator> generators,
                                 std::vector<std::string> names)
    : object_generators(objects), object_names(std::move(names)),
      morphism_generators(std::move(generators)) {
  require(object_names.empty() || object_names.size() == object_generators.size,
          ErrorKind::invalid_structure,
          "object names must cover the object generators");
  for (const CmcGenerator& g : morphism_generators) {
    require(g.source.base == object_generators &&
                g.target.base == object_generators,
            ErrorKind::invalid_structure,
            "morphism generator boundaries must be multisets over the object "
            "generators");
  }
}

CmcPresentation CmcPresentation::discrete(FinSet objects) {
  return CmcPresentation(objects, {});
}

bool operator==(const CmcPresentation& a, const CmcPresentation& b) {
  if (a.object_generators != b.object_generators) return false;
  if (a.morphism_generators.size() != b.morphism_generators.size()) return false;
  for (std::size_t i = 0; i < a.morphism_generators.size(); ++i) {
    // Names are documentation, not structure.
    if (a.morphism_generators[i].source != b.morphism_generators[i].source ||
        a.morphism_generators[i].target != b.morphism_generators[i].target)
      return false;
  }
  return true;
}

CmcMorphism::CmcMorphism(CmcPresentation dom, CmcPresentation cod,
                         FinFunction generator_map, FinFunction object_map)
    : dom_(std::move(dom)), cod_(std::move(cod)),
      generator_map_(std::move(generator_map)), object_map_(std::move(object_map)) {
  petridetail::check_petri_morphism(as_net(dom_), as_net(cod_), generator_map_,
                                    object_map_);
}

CmcMorphism CmcCat::discrete_map(const FinFunction& f) {
  return CmcMorphism(CmcPresentation::discrete(f.dom()),
                     CmcPresentation::discrete(f.cod()),
                     FinFunction::initial(FinSet{0}), f);
}

CmcMorphism CmcCat::leg(const FinFunction& points, const Object& x) {
  require(points.cod() == x.object_generators, ErrorKind::index_out_of_range,
          "leg points must land in the object generators");
  return CmcMorphism(
      CmcPresentation::discrete(points.dom()), x,
      FinFunction::initial(FinSet{x.morphism_generators.size()}), points);
}

CmcMorphism CmcCat::identity(const Object& x) {
  return CmcMorphism(x, x,
                     FinFunction::identity(FinSet{x.morphism_generators.size()}),
                     FinFunction::identity(x.object_generators));
}

CmcMorphism CmcCat::compose(const Morphism& g, const Morphism& f) {
  require(f.cod() == g.dom(), ErrorKind::mismatched_boundary,
          "compose: middle objects differ");
  return CmcMorphism(f.dom(), g.cod(),
                     ocs::compose(g.generator_map(), f.generator_map()),
                     ocs::compose(g.object_map(), f.object_map()));
}

std::optional<CmcMorphism> CmcCat::inverse(const Morphism& m) {
  if (!m.generator_map().is_bijection() || !m.object_map().is_bijection())
    return std::nullopt;
  return CmcMorphism(m.cod(), m.dom(), m.generator_map().inverse(),
                     m.object_map().inverse());
}

CmcCat::Coproduct CmcCat::coproduct(const Object& x, const Object& y) {
  auto base = PetriCat::coproduct(as_net(x), as_net(y));
  std::vector<std::string> object_names;
  if (!x.object_names.empty() || !y.object_names.empty()) {
    for (std::size_t i = 0; i < x.object_generators.size; ++i)
      object_names.push_back(i < x.object_names.size() ? x.object_names[i]
                                                       : synthetic_name("x", i));
    for (std::size_t i = 0; i < y.object_generators.size; ++i)
      object_names.push_back(i < y.object_names.size() ? y.object_names[i]
                                                       : synthetic_name("y", i));
  }
  std::vector<std::string> generator_names;
  for (const CmcGenerator& g : x.morphism_generators)
    generator_names.push_back(g.name);
  for (const CmcGenerator& g : y.morphism_generators)
    generator_names.push_back(g.name);
  Object obj = from_net(base.obj, std::move(object_names),
                        std::move(generator_names));
  return Coproduct{obj,
                   Morphism(x, obj, base.from_first.transition_map(),
                            base.from_first.place_map()),
                   Morphism(y, obj, base.from_second.transition_map(),
                            base.from_second.place_map())};
}

CmcMorphism CmcCat::copair(const Coproduct& cop, const Morphism& f,
                           const Morphism& g) {
  require(f.cod() == g.cod(), ErrorKind::mismatched_boundary,
          "copair: codomains differ");
  return CmcMorphism(cop.obj, f.cod(),
                     ocs::copair(f.generator_map(), g.generator_map()),
                     ocs::copair(f.object_map(), g.object_map()));
}

CmcCat::Pushout CmcCat::pushout(const Morphism& f, const Morphism& g) {
  require(f.dom() == g.dom(), ErrorKind::mismatched_boundary,
          "pushout: span legs must share a domain");
  auto parts = petridetail::petri_pushout_parts(
      as_net(f.cod()), as_net(g.cod()), f.generator_map(), f.object_map(),
      g.generator_map(), g.object_map());
  // Representative names: first contributor wins.
  std::vector<std::string> object_names(parts.apex.places.size);
  std::vector<bool> named(parts.apex.places.size, false);
  auto take_name = [&](std::size_t at, const std::string& name) {
    if (!named[at]) {
      object_names[at] = name;
      named[at] = true;
    }
  };
  for (std::size_t i = 0; i < f.cod().object_generators.size; ++i)
    take_name(parts.places.from_left(i),
              i < f.cod().object_names.size() ? f.cod().object_names[i]
                                              : synthetic_name("x", i));
  for (std::size_t i = 0; i < g.cod().object_generators.size; ++i)
    take_name(parts.places.from_right(i),
              i < g.cod().object_names.size() ? g.cod().object_names[i]
                                              : synthetic_name("y", i));
  std::vector<std::string> generator_names(parts.apex.transitions.size);
  std::vector<bool> gnamed(parts.apex.transitions.size, false);
  auto take_gname = [&](std::size_t at, const std::string& name) {
    if (!gnamed[at]) {
      generator_names[at] = name;
      gnamed[at] = true;
    }
  };
  for (std::size_t t = 0; t < f.cod().morphism_generators.size(); ++t)
    take_gname(parts.transitions.from_left(t),
               f.cod().morphism_generators[t].name);
  for (std::size_t t = 0; t < g.cod().morphism_generators.size(); ++t)
    take_gname(parts.transitions.from_right(t),
               g.cod().morphism_generators[t].name);
  Object obj = from_net(parts.apex, std::move(object_names),
                        std::move(generator_names));
  return Pushout{obj,
                 Morphism(f.cod(), obj, parts.transitions.from_left,
                          parts.places.from_left),
                 Morphism(g.cod(), obj, parts.transitions.from_right,
                          parts.places.from_right)};
}

CmcMorphism CmcCat::pushout_mediator(const Pushout& po, const Morphism& h_left,
                                     const Morphism& h_right) {
  require(h_left.cod() == h_right.cod(), ErrorKind::mismatched_boundary,
          "mediator: cocone legs must share a codomain");
  try {
    FinFunction generators =
        mediator(po.from_left.generator_map(), po.from_right.generator_map(),
                 h_left.generator_map(), h_right.generator_map());
    FinFunction objects =
        mediator(po.from_left.object_map(), po.from_right.object_map(),
                 h_left.object_map(), h_right.object_map());
    return CmcMorphism(po.obj, h_left.cod(), std::move(generators),
                       std::move(objects));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::invalid_structure)
      raise(ErrorKind::non_commuting_cocone, e.what());
    throw;
  }
}

std::optional<CmcMorphism> CmcCat::find_isomorphism(
    const Object& x, const Object& y, const std::vector<Frame>& frames) {
  petridetail::Pins object_pins, generator_pins;
  for (const Frame& fr : frames) {
    for (std::size_t i = 0; i < fr.first.object_map().dom().size; ++i)
      object_pins.emplace_back(fr.first.object_map()(i),
                               fr.second.object_map()(i));
    for (std::size_t t = 0; t < fr.first.generator_map().dom().size; ++t)
      generator_pins.emplace_back(fr.first.generator_map()(t),
                                  fr.second.generator_map()(t));
  }
  auto found = petridetail::petri_iso(as_net(x), as_net(y), nullptr, nullptr,
                                      object_pins, generator_pins);
  if (!found) return std::nullopt;
  return CmcMorphism(x, y, found->first, found->second);
}

CmcMorphism CmcCat::canonical_iso(const Object& x,
                                  const std::vector<std::size_t>& seeds) {
  PetriNet net = as_net(x);
  auto perms = petridetail::petri_canonical_order(net, seeds);
  PetriNet renumbered =
      petridetail::apply_petri_perms(net, perms.first, perms.second);
  std::vector<std::string> object_names;
  if (!x.object_names.empty()) {
    object_names.resize(x.object_names.size());
    for (std::size_t i = 0; i < x.object_names.size(); ++i)
      object_names[perms.first(i)] = x.object_names[i];
  }
  std::vector<std::string> generator_names(x.morphism_generators.size());
  for (std::size_t t = 0; t < x.morphism_generators.size(); ++t)
    generator_names[perms.second(t)] = x.morphism_generators[t].name;
  Object obj = from_net(renumbered, std::move(object_names),
                        std::move(generator_names));
  return CmcMorphism(x, obj, perms.second, perms.first);
}

CmcPresentation petri_to_cmc(const PetriNet& p,
                             const std::vector<std::string>& place_names,
                             const std::vector<std::string>& transition_names) {
  return from_net(p, place_names, transition_names);
}

CmcTerm CmcTerm::generator(std::size_t index) {
  CmcTerm t(Kind::generator);
  t.generator_ = index;
  return t;
}

CmcTerm CmcTerm::identity(Multiset object) {
  CmcTerm t(Kind::identity);
  t.object_ = std::move(object);
  return t;
}

CmcTerm CmcTerm::tensor(CmcTerm lhs, CmcTerm rhs) {
  CmcTerm t(Kind::tensor);
  t.lhs_ = std::make_shared<CmcTerm>(std::move(lhs));
  t.rhs_ = std::make_shared<CmcTerm>(std::move(rhs));
  return t;
}

CmcTerm CmcTerm::sequence(CmcTerm first, CmcTerm then) {
  CmcTerm t(Kind::sequence);
  t.lhs_ = std::make_shared<CmcTerm>(std::move(first));
  t.rhs_ = std::make_shared<CmcTerm>(std::move(then));
  return t;
}

std::pair<Multiset, Multiset> CmcTerm::boundary(
    const CmcPresentation& pres) const {
  switch (kind_) {
    case Kind::generator: {
      require(generator_ < pres.morphism_generators.size(),
              ErrorKind::index_out_of_range,
              "term references a missing morphism generator");
      const CmcGenerator& g = pres.morphism_generators[generator_];
      return {g.source, g.target};
    }
    case Kind::identity: {
      require(object_.base == pres.object_generators,
              ErrorKind::invalid_structure,
              "identity object is not a multiset over the object generators");
      return {object_, object_};
    }
    case Kind::tensor: {
      auto l = lhs_->boundary(pres);
      auto r = rhs_->boundary(pres);
      return {l.first + r.first, l.second + r.second};
    }
    case Kind::sequence: {
      auto l = lhs_->boundary(pres);
      auto r = rhs_->boundary(pres);
      require(l.second == r.first, ErrorKind::ill_typed_compose,
              "composite term: inner boundaries do not match");
      return {l.first, r.second};
    }
  }
  raise(ErrorKind::invalid_structure, "unreachable term kind");
}

ReachabilityResult reachable(const PetriNet& p, const Multiset& from,
                             const Multiset& to, std::size_t max_steps) {
  require(from.base == p.places && to.base == p.places,
          ErrorKind::mismatched_boundary,
          "markings must be multisets over the net's places");
  if (from == to) return ReachabilityResult{true, {}};

  struct Parent {
    std::vector<std::uint64_t> marking;
    std::size_t transition;
  };
  std::map<std::vector<std::uint64_t>, Parent> parents;
  std::deque<std::pair<std::vector<std::uint64_t>, std::size_t>> queue;
  queue.emplace_back(from.counts, 0);
  parents.emplace(from.counts, Parent{{}, 0});

  while (!queue.empty()) {
    auto [marking, depth] = queue.front();
    queue.pop_front();
    if (depth == max_steps) continue;
    Multiset current(p.places, marking);
    for (std::size_t t = 0; t < p.transitions.size; ++t) {
      if (!leq(p.sources[t], current)) continue;
      Multiset next = current - p.sources[t] + p.targets[t];
      if (parents.contains(next.counts)) continue;
      parents.emplace(next.counts, Parent{marking, t});
      if (next.counts == to.counts) {
        std::vector<std::size_t> firings;
        std::vector<std::uint64_t> cursor = next.counts;
        while (cursor != from.counts) {
          const Parent& parent = parents.at(cursor);
          firings.push_back(parent.transition);
          cursor = parent.marking;
        }
        std::reverse(firings.begin(), firings.end());
        return ReachabilityResult{true, std::move(firings)};
      }
      queue.emplace_back(next.counts, depth + 1);
    }
  }
  return ReachabilityResult{false, {}};
}

}  // namespace ocs
