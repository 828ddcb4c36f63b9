#include "arrhom/subspace.hpp"

#include <stdexcept>

namespace arrhom {

Subspace Subspace::zero(int ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = Mat(0, ambient_dim);
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = Mat::Identity(ambient_dim, ambient_dim);
  s.pivots_.resize(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) s.pivots_[i] = i;
  return s;
}

Subspace Subspace::from_spanning_rows(int ambient_dim, const Mat& rows) {
  if (rows.cols() != ambient_dim)
    throw std::invalid_argument("subspace: spanning rows have wrong width");
  RrefResult r = rref(rows);
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = r.mat.topRows(r.rank);
  s.pivots_ = r.pivots;
  return s;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_dim_ == o.ambient_dim_ && pivots_ == o.pivots_ &&
         basis_ == o.basis_;
}

bool Subspace::contains(const Subspace& o) const {
  if (ambient_dim_ != o.ambient_dim_) return false;
  if (o.dim() > dim()) return false;
  return sum(*this, o) == *this;
}

Mat Subspace::coords_of_rows(const Mat& rows) const {
  if (rows.cols() != ambient_dim_)
    throw std::invalid_argument("coords_of_rows: wrong ambient dimension");
  // RREF basis: the coordinate of basis row k is just the entry at its
  // pivot column.
  Mat out(dim(), rows.rows());
  for (int j = 0; j < rows.rows(); ++j)
    for (int i = 0; i < dim(); ++i) out(i, j) = rows(j, pivots_[i]);
  // Membership check.
  Mat recon = dim() == 0 ? Mat(Mat::Zero(rows.rows(), ambient_dim_))
                         : Mat(out.transpose() * basis_);
  if (recon != rows)
    throw std::invalid_argument("coords_of_rows: vector not in subspace");
  return out;
}

Subspace kernel_subspace(const Mat& m) {
  return Subspace::from_spanning_rows(static_cast<int>(m.cols()),
                                      kernel_rows(m));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  // Over Q the row space of B is exactly the orthogonal complement of
  // ker(B); stacking the two kernel constraint sets cuts out u cap v.
  Mat cu = kernel_rows(u.basis());
  Mat cv = kernel_rows(v.basis());
  Mat stacked(cu.rows() + cv.rows(), u.ambient_dim());
  stacked << cu, cv;
  return kernel_subspace(stacked);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("sum: ambient dimension mismatch");
  Mat stacked(u.dim() + v.dim(), u.ambient_dim());
  stacked << u.basis(), v.basis();
  return Subspace::from_spanning_rows(u.ambient_dim(), stacked);
}

Subspace orthogonal_complement_in(const Subspace& u, const Subspace& b) {
  if (!b.contains(u))
    throw std::invalid_argument("orthogonal_complement_in: u not inside b");
  if (u.dim() == 0) return b;
  return intersect(b, kernel_subspace(u.basis()));
}

Mat inclusion_matrix(const Subspace& small, const Subspace& big) {
  if (!big.contains(small))
    throw std::invalid_argument("inclusion_matrix: not an inclusion");
  return big.coords_of_rows(small.basis());
}

}  // namespace arrhom
