#include "opencospan/petri.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace ocs {

PetriNet::PetriNet(FinSet transition_set, FinSet place_set,
                   std::vector<Multiset> source_multisets,
                   std::vector<Multiset> target_multisets)
    : transitions(transition_set), places(place_set),
      sources(std::move(source_multisets)), targets(std::move(target_multisets)) {
  require(sources.size() == transitions.size && targets.size() == transitions.size,
          ErrorKind::invalid_structure,
          "petri net: every transition needs a source and a target multiset");
  for (const Multiset& m : sources)
    require(m.base == places, ErrorKind::invalid_structure,
            "petri net: source multiset over the wrong place set");
  for (const Multiset& m : targets)
    require(m.base == places, ErrorKind::invalid_structure,
            "petri net: target multiset over the wrong place set");
}

PetriNet PetriNet::discrete(FinSet place_set) {
  return PetriNet(FinSet{0}, place_set, {}, {});
}

PetriMorphism::PetriMorphism(PetriNet dom, PetriNet cod,
                             FinFunction transition_map, FinFunction place_map)
    : dom_(std::move(dom)), cod_(std::move(cod)),
      transition_map_(std::move(transition_map)),
      place_map_(std::move(place_map)) {
  petridetail::check_petri_morphism(dom_, cod_, transition_map_, place_map_);
}

PetriWithRates::PetriWithRates(PetriNet underlying_net,
                               std::vector<Rational> rate_constants)
    : net(std::move(underlying_net)), rates(std::move(rate_constants)) {
  require(rates.size() == net.transitions.size, ErrorKind::invalid_structure,
          "every transition needs a rate constant");
  for (const Rational& r : rates)
    require(r > 0, ErrorKind::invalid_structure, "rate constants must be positive");
}

PetriWithRates PetriWithRates::discrete(FinSet place_set) {
  return PetriWithRates(PetriNet::discrete(place_set), {});
}

PetriRatesMorphism::PetriRatesMorphism(PetriWithRates dom, PetriWithRates cod,
                                       FinFunction transition_map,
                                       FinFunction place_map)
    : dom_(std::move(dom)), cod_(std::move(cod)),
      transition_map_(std::move(transition_map)),
      place_map_(std::move(place_map)) {
  petridetail::check_petri_morphism(dom_.net, cod_.net, transition_map_,
                                    place_map_);
  for (std::size_t t = 0; t < dom_.rates.size(); ++t) {
    require(cod_.rates[transition_map_(t)] == dom_.rates[t],
            ErrorKind::invalid_structure,
            "morphism of Petri nets with rates must preserve rate constants");
  }
}

namespace petridetail {

void check_petri_morphism(const PetriNet& dom, const PetriNet& cod,
                          const FinFunction& transition_map,
                          const FinFunction& place_map) {
  require(transition_map.dom() == dom.transitions &&
              transition_map.cod() == cod.transitions &&
              place_map.dom() == dom.places && place_map.cod() == cod.places,
          ErrorKind::invalid_structure,
          "petri morphism: component boundaries do not match");
  for (std::size_t t = 0; t < dom.transitions.size; ++t) {
    require(dom.sources[t].pushforward(place_map) ==
                cod.sources[transition_map(t)],
            ErrorKind::invalid_structure,
            "petri morphism: source square does not commute");
    require(dom.targets[t].pushforward(place_map) ==
                cod.targets[transition_map(t)],
            ErrorKind::invalid_structure,
            "petri morphism: target square does not commute");
  }
}

PushoutParts petri_pushout_parts(const PetriNet& b, const PetriNet& c,
                                 const FinFunction& ft, const FinFunction& fp,
                                 const FinFunction& gt, const FinFunction& gp) {
  FinPushout pt = pushout(ft, gt);
  FinPushout pp = pushout(fp, gp);
  std::vector<Multiset> sources(pt.obj.size, Multiset::zero(pp.obj));
  std::vector<Multiset> targets(pt.obj.size, Multiset::zero(pp.obj));
  std::vector<bool> seen(pt.obj.size, false);
  auto assign = [&](std::size_t at, Multiset source, Multiset target) {
    if (seen[at]) {
      require(sources[at] == source && targets[at] == target,
              ErrorKind::non_commuting_cocone,
              "pushout identifies transitions with different sources or "
              "targets");
      return;
    }
    sources[at] = std::move(source);
    targets[at] = std::move(target);
    seen[at] = true;
  };
  for (std::size_t t = 0; t < b.transitions.size; ++t)
    assign(pt.from_left(t), b.sources[t].pushforward(pp.from_left),
           b.targets[t].pushforward(pp.from_left));
  for (std::size_t t = 0; t < c.transitions.size; ++t)
    assign(pt.from_right(t), c.sources[t].pushforward(pp.from_right),
           c.targets[t].pushforward(pp.from_right));
  PetriNet apex(pt.obj, pp.obj, std::move(sources), std::move(targets));
  return PushoutParts{std::move(pt), std::move(pp), std::move(apex)};
}

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

struct PlaceSignature {
  std::uint64_t consumed = 0;
  std::uint64_t produced = 0;
  std::size_t consumers = 0;
  std::size_t producers = 0;

  friend bool operator==(const PlaceSignature&, const PlaceSignature&) = default;
};

std::vector<PlaceSignature> place_signatures(const PetriNet& p) {
  std::vector<PlaceSignature> sig(p.places.size);
  for (std::size_t t = 0; t < p.transitions.size; ++t) {
    for (std::size_t s = 0; s < p.places.size; ++s) {
      sig[s].consumed += p.sources[t].counts[s];
      sig[s].produced += p.targets[t].counts[s];
      if (p.sources[t].counts[s] > 0) sig[s].consumers++;
      if (p.targets[t].counts[s] > 0) sig[s].producers++;
    }
  }
  return sig;
}

using TransitionKey =
    std::tuple<std::vector<std::uint64_t>, std::vector<std::uint64_t>, std::string>;

TransitionKey mapped_transition_key(const PetriNet& x,
                                    const std::vector<Rational>* rates,
                                    const std::vector<std::size_t>& place_map,
                                    std::size_t t) {
  FinFunction g(x.places, x.places, place_map);
  Multiset s = x.sources[t].pushforward(g);
  Multiset tg = x.targets[t].pushforward(g);
  std::string rate = rates ? rational_string((*rates)[t]) : std::string();
  return {s.counts, tg.counts, rate};
}

TransitionKey plain_transition_key(const PetriNet& y,
                                   const std::vector<Rational>* rates,
                                   std::size_t t) {
  std::string rate = rates ? rational_string((*rates)[t]) : std::string();
  return {y.sources[t].counts, y.targets[t].counts, rate};
}

std::optional<FinFunction> match_transitions(
    const PetriNet& x, const PetriNet& y, const std::vector<Rational>* rates_x,
    const std::vector<Rational>* rates_y,
    const std::vector<std::size_t>& place_map, const Pins& transition_pins) {
  std::map<TransitionKey, std::vector<std::size_t>> gx, gy;
  for (std::size_t t = 0; t < x.transitions.size; ++t)
    gx[mapped_transition_key(x, rates_x, place_map, t)].push_back(t);
  for (std::size_t t = 0; t < y.transitions.size; ++t)
    gy[plain_transition_key(y, rates_y, t)].push_back(t);
  if (gx.size() != gy.size()) return std::nullopt;
  std::vector<std::size_t> transition_map(x.transitions.size, kUnset);
  std::vector<bool> taken(y.transitions.size, false);
  for (auto [t, ty] : transition_pins) {
    if (transition_map[t] != kUnset) {
      if (transition_map[t] != ty) return std::nullopt;
      continue;
    }
    if (taken[ty]) return std::nullopt;
    if (mapped_transition_key(x, rates_x, place_map, t) !=
        plain_transition_key(y, rates_y, ty))
      return std::nullopt;
    transition_map[t] = ty;
    taken[ty] = true;
  }
  for (auto& [key, xs] : gx) {
    auto it = gy.find(key);
    if (it == gy.end() || it->second.size() != xs.size()) return std::nullopt;
    std::size_t cursor = 0;
    for (std::size_t t : xs) {
      if (transition_map[t] != kUnset) continue;
      while (cursor < it->second.size() && taken[it->second[cursor]]) ++cursor;
      if (cursor == it->second.size()) return std::nullopt;
      transition_map[t] = it->second[cursor];
      taken[it->second[cursor]] = true;
    }
  }
  return FinFunction(x.transitions, y.transitions, std::move(transition_map));
}

class PlaceSearch {
public:
  PlaceSearch(const PetriNet& x, const PetriNet& y)
      : sig_x_(place_signatures(x)), sig_y_(place_signatures(y)),
        place_map_(x.places.size, kUnset), used_(y.places.size, false) {}

  bool pin(std::size_t u, std::size_t v) {
    if (place_map_[u] != kUnset) return place_map_[u] == v;
    if (used_[v] || !(sig_x_[u] == sig_y_[v])) return false;
    place_map_[u] = v;
    used_[v] = true;
    return true;
  }

  template <typename Accept>
  bool run(Accept&& accept) {
    return assign(0, accept);
  }

private:
  template <typename Accept>
  bool assign(std::size_t u, Accept&& accept) {
    while (u < place_map_.size() && place_map_[u] != kUnset) ++u;
    if (u == place_map_.size()) return accept(place_map_);
    for (std::size_t v = 0; v < used_.size(); ++v) {
      if (used_[v] || !(sig_x_[u] == sig_y_[v])) continue;
      place_map_[u] = v;
      used_[v] = true;
      if (assign(u + 1, accept)) return true;
      place_map_[u] = kUnset;
      used_[v] = false;
    }
    return false;
  }

  std::vector<PlaceSignature> sig_x_;
  std::vector<PlaceSignature> sig_y_;
  std::vector<std::size_t> place_map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::pair<FinFunction, FinFunction>> petri_iso(
    const PetriNet& x, const PetriNet& y, const std::vector<Rational>* rates_x,
    const std::vector<Rational>* rates_y, const Pins& place_pins,
    const Pins& transition_pins) {
  if (x.places != y.places || x.transitions != y.transitions)
    return std::nullopt;
  PlaceSearch search(x, y);
  for (auto [u, v] : place_pins) {
    if (!search.pin(u, v)) return std::nullopt;
  }
  std::optional<std::pair<FinFunction, FinFunction>> result;
  search.run([&](const std::vector<std::size_t>& places) {
    auto transitions =
        match_transitions(x, y, rates_x, rates_y, places, transition_pins);
    if (!transitions) return false;
    result =
        std::make_pair(*transitions, FinFunction(x.places, y.places, places));
    return true;
  });
  return result;
}

std::pair<FinFunction, FinFunction> petri_canonical_order(
    const PetriNet& x, const std::vector<std::size_t>& seed_places) {
  std::vector<std::size_t> place_perm(x.places.size, kUnset);
  std::vector<std::size_t> order;
  order.reserve(x.places.size);
  auto visit = [&](std::size_t p) {
    if (place_perm[p] != kUnset) return;
    place_perm[p] = order.size();
    order.push_back(p);
  };
  for (std::size_t s : seed_places) visit(s);
  for (std::size_t cursor = 0; cursor < order.size(); ++cursor) {
    std::size_t p = order[cursor];
    for (std::size_t t = 0; t < x.transitions.size; ++t) {
      if (x.sources[t].counts[p] == 0 && x.targets[t].counts[p] == 0) continue;
      for (std::size_t q = 0; q < x.places.size; ++q) {
        if (x.sources[t].counts[q] > 0 || x.targets[t].counts[q] > 0) visit(q);
      }
    }
  }
  for (std::size_t p = 0; p < x.places.size; ++p) visit(p);
  FinFunction place_map(x.places, x.places, place_perm);

  std::vector<std::size_t> transitions(x.transitions.size);
  std::iota(transitions.begin(), transitions.end(), 0);
  auto key = [&](std::size_t t) {
    return std::tuple(x.sources[t].pushforward(place_map).counts,
                      x.targets[t].pushforward(place_map).counts, t);
  };
  std::stable_sort(transitions.begin(), transitions.end(),
                   [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  std::vector<std::size_t> transition_perm(x.transitions.size);
  for (std::size_t pos = 0; pos < transitions.size(); ++pos)
    transition_perm[transitions[pos]] = pos;
  return {place_map,
          FinFunction(x.transitions, x.transitions, std::move(transition_perm))};
}

PetriNet apply_petri_perms(const PetriNet& x, const FinFunction& place_perm,
                           const FinFunction& transition_perm) {
  FinFunction inv_t = transition_perm.inverse();
  std::vector<Multiset> sources, targets;
  sources.reserve(x.transitions.size);
  targets.reserve(x.transitions.size);
  for (std::size_t t = 0; t < x.transitions.size; ++t) {
    sources.push_back(x.sources[inv_t(t)].pushforward(place_perm));
    targets.push_back(x.targets[inv_t(t)].pushforward(place_perm));
  }
  return PetriNet(x.transitions, x.places, std::move(sources), std::move(targets));
}

}  // namespace petridetail

namespace {

petridetail::Pins collect_pins(const FinFunction& p, const FinFunction& q) {
  petridetail::Pins pins;
  for (std::size_t i = 0; i < p.dom().size; ++i) pins.emplace_back(p(i), q(i));
  return pins;
}

}  // namespace

PetriMorphism PetriCat::leg(const FinFunction& points, const Object& x) {
  require(points.cod() == x.places, ErrorKind::index_out_of_range,
          "leg points must land in the place set");
  return PetriMorphism(PetriNet::discrete(points.dom()), x,
                       FinFunction::initial(x.transitions), points);
}

PetriMorphism PetriCat::discrete_map(const FinFunction& f) {
  return PetriMorphism(PetriNet::discrete(f.dom()), PetriNet::discrete(f.cod()),
                       FinFunction::initial(FinSet{0}), f);
}

PetriMorphism PetriCat::identity(const Object& x) {
  return PetriMorphism(x, x, FinFunction::identity(x.transitions),
                       FinFunction::identity(x.places));
}

PetriMorphism PetriCat::compose(const Morphism& g, const Morphism& f) {
  require(f.cod() == g.dom(), ErrorKind::mismatched_boundary,
          "compose: middle objects differ");
  return PetriMorphism(f.dom(), g.cod(),
                       ocs::compose(g.transition_map(), f.transition_map()),
                       ocs::compose(g.place_map(), f.place_map()));
}

std::optional<PetriMorphism> PetriCat::inverse(const Morphism& m) {
  if (!m.transition_map().is_bijection() || !m.place_map().is_bijection())
    return std::nullopt;
  return PetriMorphism(m.cod(), m.dom(), m.transition_map().inverse(),
                       m.place_map().inverse());
}

PetriCat::Coproduct PetriCat::coproduct(const Object& x, const Object& y) {
  FinCoproduct ct = ocs::coproduct(x.transitions, y.transitions);
  FinCoproduct cp = ocs::coproduct(x.places, y.places);
  std::vector<Multiset> sources, targets;
  sources.reserve(ct.obj.size);
  targets.reserve(ct.obj.size);
  for (std::size_t t = 0; t < x.transitions.size; ++t) {
    sources.push_back(x.sources[t].pushforward(cp.from_first));
    targets.push_back(x.targets[t].pushforward(cp.from_first));
  }
  for (std::size_t t = 0; t < y.transitions.size; ++t) {
    sources.push_back(y.sources[t].pushforward(cp.from_second));
    targets.push_back(y.targets[t].pushforward(cp.from_second));
  }
  PetriNet obj(ct.obj, cp.obj, std::move(sources), std::move(targets));
  return Coproduct{obj, PetriMorphism(x, obj, ct.from_first, cp.from_first),
                   PetriMorphism(y, obj, ct.from_second, cp.from_second)};
}

PetriMorphism PetriCat::copair(const Coproduct& cop, const Morphism& f,
                               const Morphism& g) {
  require(f.cod() == g.cod(), ErrorKind::mismatched_boundary,
          "copair: codomains differ");
  return PetriMorphism(cop.obj, f.cod(),
                       ocs::copair(f.transition_map(), g.transition_map()),
                       ocs::copair(f.place_map(), g.place_map()));
}

PetriCat::Pushout PetriCat::pushout(const Morphism& f, const Morphism& g) {
  require(f.dom() == g.dom(), ErrorKind::mismatched_boundary,
          "pushout: span legs must share a domain");
  auto parts = petridetail::petri_pushout_parts(
      f.cod(), g.cod(), f.transition_map(), f.place_map(), g.transition_map(),
      g.place_map());
  return Pushout{parts.apex,
                 PetriMorphism(f.cod(), parts.apex, parts.transitions.from_left,
                               parts.places.from_left),
                 PetriMorphism(g.cod(), parts.apex,
                               parts.transitions.from_right,
                               parts.places.from_right)};
}

PetriMorphism PetriCat::pushout_mediator(const Pushout& po,
                                         const Morphism& h_left,
                                         const Morphism& h_right) {
  require(h_left.cod() == h_right.cod(), ErrorKind::mismatched_boundary,
          "mediator: cocone legs must share a codomain");
  try {
    FinFunction transitions =
        mediator(po.from_left.transition_map(), po.from_right.transition_map(),
                 h_left.transition_map(), h_right.transition_map());
    FinFunction places =
        mediator(po.from_left.place_map(), po.from_right.place_map(),
                 h_left.place_map(), h_right.place_map());
    return PetriMorphism(po.obj, h_left.cod(), std::move(transitions),
                         std::move(places));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::invalid_structure)
      raise(ErrorKind::non_commuting_cocone, e.what());
    throw;
  }
}

std::optional<PetriMorphism> PetriCat::find_isomorphism(
    const Object& x, const Object& y, const std::vector<Frame>& frames) {
  petridetail::Pins place_pins, transition_pins;
  for (const Frame& fr : frames) {
    auto p = collect_pins(fr.first.place_map(), fr.second.place_map());
    place_pins.insert(place_pins.end(), p.begin(), p.end());
    auto t = collect_pins(fr.first.transition_map(), fr.second.transition_map());
    transition_pins.insert(transition_pins.end(), t.begin(), t.end());
  }
  auto found = petridetail::petri_iso(x, y, nullptr, nullptr, place_pins,
                                      transition_pins);
  if (!found) return std::nullopt;
  return PetriMorphism(x, y, found->first, found->second);
}

PetriMorphism PetriCat::canonical_iso(const Object& x,
                                      const std::vector<std::size_t>& seeds) {
  auto perms = petridetail::petri_canonical_order(x, seeds);
  PetriNet renumbered =
      petridetail::apply_petri_perms(x, perms.first, perms.second);
  return PetriMorphism(x, renumbered, perms.second, perms.first);
}

PetriRatesMorphism PetriRatesCat::leg(const FinFunction& points, const Object& x) {
  require(points.cod() == x.net.places, ErrorKind::index_out_of_range,
          "leg points must land in the place set");
  return PetriRatesMorphism(PetriWithRates::discrete(points.dom()), x,
                            FinFunction::initial(x.net.transitions), points);
}

PetriRatesMorphism PetriRatesCat::discrete_map(const FinFunction& f) {
  return PetriRatesMorphism(PetriWithRates::discrete(f.dom()),
                            PetriWithRates::discrete(f.cod()),
                            FinFunction::initial(FinSet{0}), f);
}

PetriRatesMorphism PetriRatesCat::identity(const Object& x) {
  return PetriRatesMorphism(x, x, FinFunction::identity(x.net.transitions),
                            FinFunction::identity(x.net.places));
}

PetriRatesMorphism PetriRatesCat::compose(const Morphism& g, const Morphism& f) {
  require(f.cod() == g.dom(), ErrorKind::mismatched_boundary,
          "compose: middle objects differ");
  return PetriRatesMorphism(
      f.dom(), g.cod(), ocs::compose(g.transition_map(), f.transition_map()),
      ocs::compose(g.place_map(), f.place_map()));
}

std::optional<PetriRatesMorphism> PetriRatesCat::inverse(const Morphism& m) {
  if (!m.transition_map().is_bijection() || !m.place_map().is_bijection())
    return std::nullopt;
  return PetriRatesMorphism(m.cod(), m.dom(), m.transition_map().inverse(),
                            m.place_map().inverse());
}

PetriRatesCat::Coproduct PetriRatesCat::coproduct(const Object& x,
                                                  const Object& y) {
  auto base = PetriCat::coproduct(x.net, y.net);
  std::vector<Rational> rates = x.rates;
  rates.insert(rates.end(), y.rates.begin(), y.rates.end());
  Object obj(base.obj, std::move(rates));
  return Coproduct{
      obj,
      Morphism(x, obj, base.from_first.transition_map(),
               base.from_first.place_map()),
      Morphism(y, obj, base.from_second.transition_map(),
               base.from_second.place_map())};
}

PetriRatesMorphism PetriRatesCat::copair(const Coproduct& cop, const Morphism& f,
                                         const Morphism& g) {
  require(f.cod() == g.cod(), ErrorKind::mismatched_boundary,
          "copair: codomains differ");
  return PetriRatesMorphism(cop.obj, f.cod(),
                            ocs::copair(f.transition_map(), g.transition_map()),
                            ocs::copair(f.place_map(), g.place_map()));
}

PetriRatesCat::Pushout PetriRatesCat::pushout(const Morphism& f,
                                              const Morphism& g) {
  require(f.dom() == g.dom(), ErrorKind::mismatched_boundary,
          "pushout: span legs must share a domain");
  auto parts = petridetail::petri_pushout_parts(
      f.cod().net, g.cod().net, f.transition_map(), f.place_map(),
      g.transition_map(), g.place_map());
  std::vector<Rational> rates = induce_along(
      parts.transitions.from_left, parts.transitions.from_right,
      f.cod().rates, g.cod().rates, ErrorKind::rate_conflict,
      "pushout identifies transitions with different rate constants");
  Object obj(parts.apex, std::move(rates));
  return Pushout{obj,
                 Morphism(f.cod(), obj, parts.transitions.from_left,
                          parts.places.from_left),
                 Morphism(g.cod(), obj, parts.transitions.from_right,
                          parts.places.from_right)};
}

PetriRatesMorphism PetriRatesCat::pushout_mediator(const Pushout& po,
                                                   const Morphism& h_left,
                                                   const Morphism& h_right) {
  require(h_left.cod() == h_right.cod(), ErrorKind::mismatched_boundary,
          "mediator: cocone legs must share a codomain");
  try {
    FinFunction transitions =
        mediator(po.from_left.transition_map(), po.from_right.transition_map(),
                 h_left.transition_map(), h_right.transition_map());
    FinFunction places =
        mediator(po.from_left.place_map(), po.from_right.place_map(),
                 h_left.place_map(), h_right.place_map());
    return PetriRatesMorphism(po.obj, h_left.cod(), std::move(transitions),
                              std::move(places));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::invalid_structure)
      raise(ErrorKind::non_commuting_cocone, e.what());
    throw;
  }
}

std::optional<PetriRatesMorphism> PetriRatesCat::find_isomorphism(
    const Object& x, const Object& y, const std::vector<Frame>& frames) {
  petridetail::Pins place_pins, transition_pins;
  for (const Frame& fr : frames) {
    auto p = collect_pins(fr.first.place_map(), fr.second.place_map());
    place_pins.insert(place_pins.end(), p.begin(), p.end());
    auto t = collect_pins(fr.first.transition_map(), fr.second.transition_map());
    transition_pins.insert(transition_pins.end(), t.begin(), t.end());
  }
  auto found = petridetail::petri_iso(x.net, y.net, &x.rates, &y.rates,
                                      place_pins, transition_pins);
  if (!found) return std::nullopt;
  return PetriRatesMorphism(x, y, found->first, found->second);
}

PetriRatesMorphism PetriRatesCat::canonical_iso(
    const Object& x, const std::vector<std::size_t>& seeds) {
  auto perms = petridetail::petri_canonical_order(x.net, seeds);
  PetriNet renumbered =
      petridetail::apply_petri_perms(x.net, perms.first, perms.second);
  FinFunction inv_t = perms.second.inverse();
  std::vector<Rational> rates(x.rates.size());
  for (std::size_t t = 0; t < rates.size(); ++t) rates[t] = x.rates[inv_t(t)];
  return PetriRatesMorphism(x, Object(renumbered, std::move(rates)),
                            perms.second, perms.first);
}

}  // namespace ocs
