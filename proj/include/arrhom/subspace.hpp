#pragma once

#include <vector>

#include "arrhom/matrix.hpp"

namespace arrhom {

// A linear subspace of Q^d held in canonical form: the rows of `basis()` are
// a basis in reduced row echelon form with no zero rows. The representation
// is unique per row space, so set equality is representation equality --
// this is what makes lattice deduplication O(1).
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);
  // Canonicalises the given spanning rows (they need not be independent).
  static Subspace from_spanning_rows(int ambient_dim, const Mat& rows);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  bool contains(const Subspace& o) const;

  // Coordinates of row vectors lying in this subspace, w.r.t. the canonical
  // basis: out(i, j) = coefficient of basis row i in rows.row(j).
  // Throws std::invalid_argument if some row is not in the subspace.
  Mat coords_of_rows(const Mat& rows) const;

 private:
  int ambient_dim_ = 0;
  Mat basis_;  // dim x ambient, RREF, no zero rows
  std::vector<int> pivots_;
};

// ker(m) as a subspace of Q^cols.
Subspace kernel_subspace(const Mat& m);

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);

// U^{perp B} = {b in B : <b,u> = 0 for all u in U} w.r.t. the standard dot
// product; requires u inside b, and satisfies b = u (+) result.
Subspace orthogonal_complement_in(const Subspace& u, const Subspace& b);

// Matrix of the inclusion small <= big in the canonical bases: maps
// coordinates w.r.t. small's basis to coordinates w.r.t. big's basis.
// Shape big.dim() x small.dim().
Mat inclusion_matrix(const Subspace& small, const Subspace& big);

}  // namespace arrhom
