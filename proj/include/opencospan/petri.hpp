#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opencospan/multiset.hpp"
#include "opencospan/rational.hpp"

namespace ocs {

// Petri net: transitions with multiset-valued sources and targets over a
// finite set of places.
struct PetriNet {
  FinSet transitions;
  FinSet places;
  std::vector<Multiset> sources;  // indexed by transition
  std::vector<Multiset> targets;

  PetriNet() = default;
  PetriNet(FinSet transition_set, FinSet place_set,
           std::vector<Multiset> source_multisets,
           std::vector<Multiset> target_multisets);

  static PetriNet discrete(FinSet place_set);

  friend bool operator==(const PetriNet&, const PetriNet&) = default;
};

class PetriMorphism {
public:
  PetriMorphism(PetriNet dom, PetriNet cod, FinFunction transition_map,
                FinFunction place_map);

  const PetriNet& dom() const { return dom_; }
  const PetriNet& cod() const { return cod_; }
  const FinFunction& transition_map() const { return transition_map_; }
  const FinFunction& place_map() const { return place_map_; }

  friend bool operator==(const PetriMorphism&, const PetriMorphism&) = default;

private:
  PetriNet dom_;
  PetriNet cod_;
  FinFunction transition_map_;
  FinFunction place_map_;
};

// Petri net where every transition carries a positive rate constant.
struct PetriWithRates {
  PetriNet net;
  std::vector<Rational> rates;

  PetriWithRates() = default;
  PetriWithRates(PetriNet underlying_net, std::vector<Rational> rate_constants);

  static PetriWithRates discrete(FinSet place_set);

  friend bool operator==(const PetriWithRates&, const PetriWithRates&) = default;
};

class PetriRatesMorphism {
public:
  PetriRatesMorphism(PetriWithRates dom, PetriWithRates cod,
                     FinFunction transition_map, FinFunction place_map);

  const PetriWithRates& dom() const { return dom_; }
  const PetriWithRates& cod() const { return cod_; }
  const FinFunction& transition_map() const { return transition_map_; }
  const FinFunction& place_map() const { return place_map_; }

  friend bool operator==(const PetriRatesMorphism&,
                         const PetriRatesMorphism&) = default;

private:
  PetriWithRates dom_;
  PetriWithRates cod_;
  FinFunction transition_map_;
  FinFunction place_map_;
};

namespace petridetail {

using Pins = std::vector<std::pair<std::size_t, std::size_t>>;

void check_petri_morphism(const PetriNet& dom, const PetriNet& cod,
                          const FinFunction& transition_map,
                          const FinFunction& place_map);

struct PushoutParts {
  FinPushout transitions;
  FinPushout places;
  PetriNet apex;
};

PushoutParts petri_pushout_parts(const PetriNet& b, const PetriNet& c,
                                 const FinFunction& ft, const FinFunction& fp,
                                 const FinFunction& gt, const FinFunction& gp);

// Isomorphism search over (place bijection, transition bijection); rate
// vectors, when given, must be respected.
std::optional<std::pair<FinFunction, FinFunction>> petri_iso(
    const PetriNet& x, const PetriNet& y, const std::vector<Rational>* rates_x,
    const std::vector<Rational>* rates_y, const Pins& place_pins,
    const Pins& transition_pins);

std::pair<FinFunction, FinFunction> petri_canonical_order(
    const PetriNet& x, const std::vector<std::size_t>& seed_places);

PetriNet apply_petri_perms(const PetriNet& x, const FinFunction& place_perm,
                           const FinFunction& transition_perm);

}  // namespace petridetail

struct PetriCat {
  using Object = PetriNet;
  using Morphism = PetriMorphism;

  static std::string name() { return "petri"; }

  static Object discrete(FinSet a) { return PetriNet::discrete(a); }
  static Morphism discrete_map(const FinFunction& f);
  static FinSet underlying(const Object& x) { return x.places; }
  static FinFunction underlying_map(const Morphism& m) { return m.place_map(); }
  static Morphism leg(const FinFunction& points, const Object& x);

  static Morphism identity(const Object& x);
  static Morphism compose(const Morphism& g, const Morphism& f);
  static std::optional<Morphism> inverse(const Morphism& m);

  static Object initial() { return PetriNet::discrete(FinSet{0}); }

  struct Coproduct {
    Object obj;
    Morphism from_first;
    Morphism from_second;
  };
  static Coproduct coproduct(const Object& x, const Object& y);
  static Morphism copair(const Coproduct& cop, const Morphism& f,
                         const Morphism& g);

  struct Pushout {
    Object obj;
    Morphism from_left;
    Morphism from_right;
  };
  static Pushout pushout(const Morphism& f, const Morphism& g);
  static Morphism pushout_mediator(const Pushout& po, const Morphism& h_left,
                                   const Morphism& h_right);

  using Frame = std::pair<Morphism, Morphism>;
  static std::optional<Morphism> find_isomorphism(
      const Object& x, const Object& y, const std::vector<Frame>& frames = {});

  static Morphism canonical_iso(const Object& x,
                                const std::vector<std::size_t>& seeds);
};

struct PetriRatesCat {
  using Object = PetriWithRates;
  using Morphism = PetriRatesMorphism;

  static std::string name() { return "petri_rates"; }

  static Object discrete(FinSet a) { return PetriWithRates::discrete(a); }
  static Morphism discrete_map(const FinFunction& f);
  static FinSet underlying(const Object& x) { return x.net.places; }
  static FinFunction underlying_map(const Morphism& m) { return m.place_map(); }
  static Morphism leg(const FinFunction& points, const Object& x);

  static Morphism identity(const Object& x);
  static Morphism compose(const Morphism& g, const Morphism& f);
  static std::optional<Morphism> inverse(const Morphism& m);

  static Object initial() { return PetriWithRates::discrete(FinSet{0}); }

  struct Coproduct {
    Object obj;
    Morphism from_first;
    Morphism from_second;
  };
  static Coproduct coproduct(const Object& x, const Object& y);
  static Morphism copair(const Coproduct& cop, const Morphism& f,
                         const Morphism& g);

  struct Pushout {
    Object obj;
    Morphism from_left;
    Morphism from_right;
  };
  static Pushout pushout(const Morphism& f, const Morphism& g);
  static Morphism pushout_mediator(const Pushout& po, const Morphism& h_left,
                                   const Morphism& h_right);

  using Frame = std::pair<Morphism, Morphism>;
  static std::optional<Morphism> find_isomorphism(
      const Object& x, const Object& y, const std::vector<Frame>& frames = {});

  static Morphism canonical_iso(const Object& x,
                                const std::vector<std::size_t>& seeds);
};

}  // namespace ocs
