#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "opencospan/rational.hpp"

namespace ocs {

using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;

// Reduced row echelon form with leading-one pivots; zero rows dropped.
// The unique canonical basis of a row space, so subspace equality is
// row-by-row comparison.
RatMatrix rref(RatMatrix m);

// Basis of { x : m x = 0 }, returned in rref.
RatMatrix kernel_basis(const RatMatrix& m, std::size_t columns);

// Rows spanning the annihilator of the row space of `span` inside Q^dim.
RatMatrix annihilator(const RatMatrix& span, std::size_t dim);

// A linear subspace of Q^dim_in (+) Q^dim_out in canonical reduced form,
// composed like a relation.
class LinearRelation {
public:
  LinearRelation(std::size_t dim_in, std::size_t dim_out, RatMatrix span);

  static LinearRelation identity(std::size_t n);
  static LinearRelation zero_space(std::size_t dim_in, std::size_t dim_out);

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  std::size_t dimension() const { return basis_.size(); }
  const RatMatrix& basis() const { return basis_; }

  bool contains(const RatVec& v) const;

  friend bool operator==(const LinearRelation&, const LinearRelation&) = default;

private:
  std::size_t dim_in_;
  std::size_t dim_out_;
  RatMatrix basis_;
};

// Kernel of the stacked constraint rows over `total_vars` variables,
// projected onto the `keep` coordinates; the elimination engine shared by
// relation composition and circuit black-boxing.
LinearRelation relation_from_constraints(std::size_t dim_in, std::size_t dim_out,
                                         const RatMatrix& constraints,
                                         std::size_t total_vars,
                                         const std::vector<std::size_t>& keep);

// { (v, u) : exists w with (v, w) in r1 and (w, u) in r2 }, computed by
// stacking constraints over (v, w, u) and eliminating w exactly.
LinearRelation compose_relations(const LinearRelation& r1,
                                 const LinearRelation& r2);

// Blockwise sum: inputs of r1 then of r2, outputs of r1 then of r2.
LinearRelation direct_sum(const LinearRelation& r1, const LinearRelation& r2);

// Reindexes boundary coordinates: new input i reads old input in_perm[i].
LinearRelation permute_boundary(const LinearRelation& r,
                                const std::vector<std::size_t>& in_perm,
                                const std::vector<std::size_t>& out_perm);

LinearRelation converse(const LinearRelation& r);

std::string relation_string(const LinearRelation& r);

}  // namespace ocs
