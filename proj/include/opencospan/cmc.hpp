#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opencospan/petri.hpp"

namespace ocs {

// Presentation of a free commutative monoidal category: object generators
// and typed morphism generators. Names ride along for printing and never
// affect equality or isomorphism.
struct CmcGenerator {
  std::string name;
  Multiset source;
  Multiset target;
};

struct CmcPresentation {
  FinSet object_generators;
  std::vector<std::string> object_names;  // may be empty (unnamed)
  std::vector<CmcGenerator> morphism_generators;

  CmcPresentation() = default;
  CmcPresentation(FinSet objects, std::vector<CmcGenerator> generators,
                  std::vector<std::string> names = {});

  static CmcPresentation discrete(FinSet objects);
};

bool operator==(const CmcPresentation& a, const CmcPresentation& b);

class CmcMorphism {
public:
  CmcMorphism(CmcPresentation dom, CmcPresentation cod, FinFunction generator_map,
              FinFunction object_map);

  const CmcPresentation& dom() const { return dom_; }
  const CmcPresentation& cod() const { return cod_; }
  const FinFunction& generator_map() const { return generator_map_; }
  const FinFunction& object_map() const { return object_map_; }

  friend bool operator==(const CmcMorphism& a, const CmcMorphism& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ &&
           a.generator_map_ == b.generator_map_ && a.object_map_ == b.object_map_;
  }

private:
  CmcPresentation dom_;
  CmcPresentation cod_;
  FinFunction generator_map_;
  FinFunction object_map_;
};

struct CmcCat {
  using Object = CmcPresentation;
  using Morphism = CmcMorphism;

  static std::string name() { return "cmc"; }

  static Object discrete(FinSet a) { return CmcPresentation::discrete(a); }
  static Morphism discrete_map(const FinFunction& f);
  static FinSet underlying(const Object& x) { return x.object_generators; }
  static FinFunction underlying_map(const Morphism& m) { return m.object_map(); }
  static Morphism leg(const FinFunction& points, const Object& x);

  static Morphism identity(const Object& x);
  static Morphism compose(const Morphism& g, const Morphism& f);
  static std::optional<Morphism> inverse(const Morphism& m);

  static Object initial() { return CmcPresentation::discrete(FinSet{0}); }

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

// Image of a Petri net under the free-CMC functor: object generators are the
// places, one morphism generator per transition.
CmcPresentation petri_to_cmc(const PetriNet& p,
                             const std::vector<std::string>& place_names = {},
                             const std::vector<std::string>& transition_names = {});

// Morphism terms over a presentation. Composition is diagrammatic:
// sequence(s, t) requires target(s) = source(t).
class CmcTerm {
public:
  static CmcTerm generator(std::size_t index);
  static CmcTerm identity(Multiset object);
  static CmcTerm tensor(CmcTerm lhs, CmcTerm rhs);
  static CmcTerm sequence(CmcTerm first, CmcTerm then);

  // (source, target), computed structurally; error ill-typed-compose when an
  // inner boundary mismatches.
  std::pair<Multiset, Multiset> boundary(const CmcPresentation& pres) const;

private:
  enum class Kind { generator, identity, tensor, sequence };

  CmcTerm(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::size_t generator_ = 0;
  Multiset object_;
  std::shared_ptr<const CmcTerm> lhs_;
  std::shared_ptr<const CmcTerm> rhs_;
};

// Bounded reachability by breadth-first search over markings, firing one
// transition per step; `firings` replays when reachable.
struct ReachabilityResult {
  bool reachable = false;
  std::vector<std::size_t> firings;
};

ReachabilityResult reachable(const PetriNet& p, const Multiset& from,
                             const Multiset& to, std::size_t max_steps);

}  // namespace ocs
