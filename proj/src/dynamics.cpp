#include "opencospan/dynamics.hpp"

#include "opencospan/linear_relation.hpp"

namespace ocs {

std::vector<Rational> mass_action_field(const PetriWithRates& net,
                                        const std::vector<Rational>& state) {
  const PetriNet& p = net.net;
  require(state.size() == p.places.size, ErrorKind::mismatched_boundary,
          "state must assign a concentration to every place");
  std::vector<Rational> field(p.places.size, Rational(0));
  for (std::size_t t = 0; t < p.transitions.size; ++t) {
    Rational speed = net.rates[t];
    for (std::size_t s = 0; s < p.places.size; ++s) {
      for (std::uint64_t k = 0; k < p.sources[t].counts[s]; ++k)
        speed *= state[s];
    }
    for (std::size_t s = 0; s < p.places.size; ++s) {
      Rational delta = Rational(static_cast<long>(p.targets[t].counts[s])) -
                       Rational(static_cast<long>(p.sources[t].counts[s]));
      field[s] += speed * delta;
    }
  }
  return field;
}

bool is_steady(const PetriWithRates& net, const std::vector<Rational>& state) {
  for (const Rational& v : mass_action_field(net, state)) {
    if (v != 0) return false;
  }
  return true;
}

EulerStep euler_step(const PetriWithRates& net,
                     const std::vector<Rational>& state, const Rational& step) {
  require(step > 0, ErrorKind::invalid_structure, "step size must be positive");
  std::vector<Rational> field = mass_action_field(net, state);
  EulerStep result;
  result.state.reserve(state.size());
  for (std::size_t s = 0; s < state.size(); ++s) {
    Rational next = state[s] + step * field[s];
    if (next < 0) {
      next = 0;
      result.clamped = true;
    }
    result.state.push_back(std::move(next));
  }
  return result;
}

std::vector<Rational> pushforward_field(const FinFunction& p,
                                        const std::vector<Rational>& w) {
  require(w.size() == p.dom().size, ErrorKind::mismatched_boundary,
          "field length differs from the function's domain");
  std::vector<Rational> out(p.cod().size, Rational(0));
  for (std::size_t i = 0; i < w.size(); ++i) out[p(i)] += w[i];
  return out;
}

std::vector<std::vector<Rational>> conserved_functionals(const PetriNet& net) {
  // c is conserved iff c . (target - source) = 0 for every transition.
  RatMatrix differences;
  differences.reserve(net.transitions.size);
  for (std::size_t t = 0; t < net.transitions.size; ++t) {
    RatVec row(net.places.size, Rational(0));
    for (std::size_t s = 0; s < net.places.size; ++s) {
      row[s] = Rational(static_cast<long>(net.targets[t].counts[s])) -
               Rational(static_cast<long>(net.sources[t].counts[s]));
    }
    differences.push_back(std::move(row));
  }
  if (differences.empty())
    differences.push_back(RatVec(net.places.size, Rational(0)));
  return kernel_basis(differences, net.places.size);
}

}  // namespace ocs
