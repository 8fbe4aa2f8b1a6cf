#include "opencospan/linear_relation.hpp"

#include <algorithm>
#include <sstream>

#include "opencospan/error.hpp"

namespace ocs {

RatMatrix rref(RatMatrix m) {
  if (m.empty()) return m;
  const std::size_t cols = m[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.size() && m[found][col] == 0) ++found;
    if (found == m.size()) continue;
    std::swap(m[pivot_row], m[found]);
    Rational lead = m[pivot_row][col];
    for (auto& v : m[pivot_row]) v /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == pivot_row || m[r][col] == 0) continue;
      Rational factor = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= factor * m[pivot_row][c];
    }
    ++pivot_row;
  }
  m.erase(std::remove_if(m.begin(), m.end(),
                         [](const RatVec& row) {
                           return std::all_of(row.begin(), row.end(),
                                              [](const Rational& v) {
                                                return v == 0;
                                              });
                         }),
          m.end());
  return m;
}

RatMatrix kernel_basis(const RatMatrix& m, std::size_t columns) {
  RatMatrix reduced = rref(m);
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(columns, false);
  for (const RatVec& row : reduced) {
    for (std::size_t c = 0; c < columns; ++c) {
      if (row[c] != 0) {
        pivot_col.push_back(c);
        is_pivot[c] = true;
        break;
      }
    }
  }
  RatMatrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(columns, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < reduced.size(); ++r)
      v[pivot_col[r]] = -reduced[r][free];
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis));
}

RatMatrix annihilator(const RatMatrix& span, std::size_t dim) {
  if (span.empty()) {
    // Annihilator of the zero space is everything.
    RatMatrix full;
    for (std::size_t i = 0; i < dim; ++i) {
      RatVec v(dim, Rational(0));
      v[i] = 1;
      full.push_back(std::move(v));
    }
    return full;
  }
  return kernel_basis(span, dim);
}

LinearRelation::LinearRelation(std::size_t dim_in, std::size_t dim_out,
                               RatMatrix span)
    : dim_in_(dim_in), dim_out_(dim_out), basis_(rref(std::move(span))) {
  for (const RatVec& row : basis_) {
    require(row.size() == dim_in_ + dim_out_, ErrorKind::invalid_structure,
            "relation basis width differs from the boundary dimensions");
  }
}

LinearRelation LinearRelation::identity(std::size_t n) {
  RatMatrix span;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec v(2 * n, Rational(0));
    v[i] = 1;
    v[n + i] = 1;
    span.push_back(std::move(v));
  }
  return LinearRelation(n, n, std::move(span));
}

LinearRelation LinearRelation::zero_space(std::size_t dim_in,
                                          std::size_t dim_out) {
  return LinearRelation(dim_in, dim_out, {});
}

bool LinearRelation::contains(const RatVec& v) const {
  require(v.size() == dim_in_ + dim_out_, ErrorKind::mismatched_boundary,
          "vector width differs from the relation's boundary");
  RatVec residual = v;
  for (const RatVec& row : basis_) {
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (pivot == row.size()) continue;
    Rational factor = residual[pivot];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < row.size(); ++c)
      residual[c] -= factor * row[c];
  }
  return std::all_of(residual.begin(), residual.end(),
                     [](const Rational& x) { return x == 0; });
}

// Constraint rows over an extended variable list, then kernel projection
// onto selected coordinates; the workhorse behind compose and blackbox.
LinearRelation relation_from_constraints(std::size_t dim_in, std::size_t dim_out,
                                         const RatMatrix& constraints,
                                         std::size_t total_vars,
                                         const std::vector<std::size_t>& keep) {
  RatMatrix solutions = constraints.empty()
                            ? kernel_basis({RatVec(total_vars, Rational(0))},
                                           total_vars)
                            : kernel_basis(constraints, total_vars);
  RatMatrix projected;
  projected.reserve(solutions.size());
  for (const RatVec& sol : solutions) {
    RatVec row;
    row.reserve(keep.size());
    for (std::size_t k : keep) row.push_back(sol[k]);
    projected.push_back(std::move(row));
  }
  return LinearRelation(dim_in, dim_out, std::move(projected));
}

LinearRelation compose_relations(const LinearRelation& r1,
                                 const LinearRelation& r2) {
  require(r1.dim_out() == r2.dim_in(), ErrorKind::mismatched_boundary,
          "compose: middle boundary dimensions differ");
  const std::size_t m = r1.dim_in();
  const std::size_t k = r1.dim_out();
  const std::size_t n = r2.dim_out();
  // Variables (v, w, u).
  RatMatrix constraints;
  for (const RatVec& c : annihilator(r1.basis(), m + k)) {
    RatVec row(m + k + n, Rational(0));
    for (std::size_t i = 0; i < m + k; ++i) row[i] = c[i];
    constraints.push_back(std::move(row));
  }
  for (const RatVec& c : annihilator(r2.basis(), k + n)) {
    RatVec row(m + k + n, Rational(0));
    for (std::size_t i = 0; i < k + n; ++i) row[m + i] = c[i];
    constraints.push_back(std::move(row));
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m; ++i) keep.push_back(i);
  for (std::size_t i = 0; i < n; ++i) keep.push_back(m + k + i);
  return relation_from_constraints(m, n, constraints, m + k + n, keep);
}

LinearRelation direct_sum(const LinearRelation& r1, const LinearRelation& r2) {
  const std::size_t m1 = r1.dim_in(), n1 = r1.dim_out();
  const std::size_t m2 = r2.dim_in(), n2 = r2.dim_out();
  RatMatrix span;
  auto place = [&](const RatVec& row, bool first) {
    RatVec v(m1 + m2 + n1 + n2, Rational(0));
    if (first) {
      for (std::size_t i = 0; i < m1; ++i) v[i] = row[i];
      for (std::size_t i = 0; i < n1; ++i) v[m1 + m2 + i] = row[m1 + i];
    } else {
      for (std::size_t i = 0; i < m2; ++i) v[m1 + i] = row[i];
      for (std::size_t i = 0; i < n2; ++i) v[m1 + m2 + n1 + i] = row[m2 + i];
    }
    span.push_back(std::move(v));
  };
  for (const RatVec& row : r1.basis()) place(row, true);
  for (const RatVec& row : r2.basis()) place(row, false);
  return LinearRelation(m1 + m2, n1 + n2, std::move(span));
}

LinearRelation permute_boundary(const LinearRelation& r,
                                const std::vector<std::size_t>& in_perm,
                                const std::vector<std::size_t>& out_perm) {
  require(in_perm.size() == r.dim_in() && out_perm.size() == r.dim_out(),
          ErrorKind::mismatched_boundary,
          "permutation sizes differ from the boundary dimensions");
  RatMatrix span;
  span.reserve(r.basis().size());
  for (const RatVec& row : r.basis()) {
    RatVec v(row.size(), Rational(0));
    for (std::size_t i = 0; i < in_perm.size(); ++i) v[i] = row[in_perm[i]];
    for (std::size_t i = 0; i < out_perm.size(); ++i)
      v[r.dim_in() + i] = row[r.dim_in() + out_perm[i]];
    span.push_back(std::move(v));
  }
  return LinearRelation(r.dim_in(), r.dim_out(), std::move(span));
}

LinearRelation converse(const LinearRelation& r) {
  RatMatrix span;
  span.reserve(r.basis().size());
  for (const RatVec& row : r.basis()) {
    RatVec v(row.size(), Rational(0));
    for (std::size_t i = 0; i < r.dim_out(); ++i) v[i] = row[r.dim_in() + i];
    for (std::size_t i = 0; i < r.dim_in(); ++i) v[r.dim_out() + i] = row[i];
    span.push_back(std::move(v));
  }
  return LinearRelation(r.dim_out(), r.dim_in(), std::move(span));
}

std::string relation_string(const LinearRelation& r) {
  std::ostringstream out;
  out << "linear relation " << r.dim_in() << " -> " << r.dim_out()
      << " (subspace of Q^" << (r.dim_in() + r.dim_out()) << ", dimension "
      << r.dimension() << ")\n";
  for (const RatVec& row : r.basis()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << " ";
      out << rational_string(row[c]);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace ocs
