#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <vector>

#include "arrhom/rational.hpp"

namespace arrhom {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using SpMat = Eigen::SparseMatrix<Rational>;
using Triplet = Eigen::Triplet<Rational>;

struct RrefResult {
  Mat mat;                  // reduced row echelon form
  int rank = 0;
  std::vector<int> pivots;  // pivot column of row i, i < rank
};

// Reduced row echelon form by exact Gauss-Jordan elimination. Idempotent;
// two matrices with equal row space reduce to the identical RREF.
RrefResult rref(const Mat& m);

int rank_of(const Mat& m);

// Exact rank of a sparse matrix; switches to Markowitz-pivoted sparse
// elimination, which is what makes order complexes on Boolean covers
// tractable (dense storage of those boundaries does not fit in memory).
long rank_of(const SpMat& m);

// Rows span ker(m) = {x : m x = 0}; returned in RREF. dim = cols - rank.
Mat kernel_rows(const Mat& m);

Rational det(const Mat& m);

// Solves a X = b exactly. Returns false if inconsistent.
bool solve(const Mat& a, const Mat& b, Mat& x);

// All j-subsets of {0..n-1} in lexicographic order of the increasing index
// tuple. This order is frozen: it indexes the bases of all exterior powers.
std::vector<std::vector<int>> subsets_lex(int n, int j);

Int binomial(int n, int k);
long binomial_long(int n, int k);

// j-th compound matrix: entry (R,C) = det of the submatrix on row set R and
// column set C, both running over lex-ordered j-subsets. Multiplicative in m
// (Cauchy-Binet). j = 0 gives the 1x1 identity; j > rows or j > cols gives a
// matrix with a zero dimension.
Mat exterior_power_matrix(const Mat& m, int j);

// Kronecker product, used for tensoring a sheaf with a constant space.
Mat kronecker(const Mat& a, const Mat& b);

bool is_zero(const SpMat& m);

}  // namespace arrhom
