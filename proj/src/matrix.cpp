#include "arrhom/matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace arrhom {

RrefResult rref(const Mat& m) {
  RrefResult res;
  res.mat = m;
  Mat& a = res.mat;
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (a(i, c) != 0) { piv = i; break; }
    }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const Rational inv = Rational(1) / a(r, c);
    a.row(r) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i != r && a(i, c) != 0) {
        const Rational f = a(i, c);  // copy: the entry is zeroed mid-update
        a.row(i) -= f * a.row(r);
      }
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

int rank_of(const Mat& m) { return rref(m).rank; }

Mat kernel_rows(const Mat& m) {
  const int cols = static_cast<int>(m.cols());
  RrefResult r = rref(m);
  std::vector<char> is_pivot(cols, 0);
  for (int p : r.pivots) is_pivot[p] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat k(static_cast<int>(free_cols.size()), cols);
  k.setZero();
  for (int i = 0; i < static_cast<int>(free_cols.size()); ++i) {
    const int f = free_cols[i];
    k(i, f) = 1;
    for (int row = 0; row < r.rank; ++row) {
      k(i, r.pivots[row]) = -r.mat(row, f);
    }
  }
  return rref(k).mat;
}

Rational det(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square");
  const int n = static_cast<int>(m.rows());
  Mat a = m;
  Rational d(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a(i, c) != 0) { piv = i; break; }
    if (piv < 0) return Rational(0);
    if (piv != c) { a.row(piv).swap(a.row(c)); d = -d; }
    d *= a(c, c);
    const Rational inv = Rational(1) / a(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c) != 0) {
        // Materialise: a(i,c)*inv as an expression template would alias the
        // entry being zeroed during the row update.
        const Rational f = a(i, c) * inv;
        a.row(i) -= f * a.row(c);
      }
    }
  }
  return d;
}

bool solve(const Mat& a, const Mat& b, Mat& x) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  const int n = static_cast<int>(a.cols());
  Mat aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  RrefResult r = rref(aug);
  // Any pivot in the b-block means inconsistency.
  for (int p : r.pivots)
    if (p >= n) return false;
  x = Mat::Zero(n, b.cols());
  for (int row = 0; row < r.rank; ++row) {
    x.row(r.pivots[row]) = r.mat.block(row, n, 1, b.cols());
  }
  return true;
}

std::vector<std::vector<int>> subsets_lex(int n, int j) {
  std::vector<std::vector<int>> out;
  if (j < 0 || j > n) return out;
  std::vector<int> cur(j);
  for (int i = 0; i < j; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = j - 1;
    while (i >= 0 && cur[i] == n - j + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int k = i + 1; k < j; ++k) cur[k] = cur[k - 1] + 1;
  }
  return out;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

long binomial_long(int n, int k) {
  return static_cast<long>(binomial(n, k));
}

Mat exterior_power_matrix(const Mat& m, int j) {
  if (j < 0) throw std::invalid_argument("exterior_power_matrix: j < 0");
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (j == 0) {
    Mat one(1, 1);
    one(0, 0) = 1;
    return one;
  }
  const auto row_sets = subsets_lex(rows, j);
  const auto col_sets = subsets_lex(cols, j);
  Mat out(static_cast<int>(row_sets.size()), static_cast<int>(col_sets.size()));
  Mat minor(j, j);
  for (size_t ri = 0; ri < row_sets.size(); ++ri) {
    for (size_t ci = 0; ci < col_sets.size(); ++ci) {
      for (int a = 0; a < j; ++a)
        for (int b = 0; b < j; ++b)
          minor(a, b) = m(row_sets[ri][a], col_sets[ci][b]);
      out(static_cast<int>(ri), static_cast<int>(ci)) = det(minor);
    }
  }
  return out;
}

Mat kronecker(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k)
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
  return out;
}

bool is_zero(const SpMat& m) {
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it)
      if (it.value() != 0) return false;
  return true;
}

namespace {

// Sparse exact elimination with Markowitz pivoting. Rows are kept as sorted
// (col, value) maps; a column index tracks which rows are active in each
// column so pivot search stays cheap.
class SparseEliminator {
 public:
  explicit SparseEliminator(const SpMat& m)
      : n_cols_(static_cast<int>(m.cols())) {
    rows_.resize(m.rows());
    for (int k = 0; k < m.outerSize(); ++k)
      for (SpMat::InnerIterator it(m, k); it; ++it)
        if (it.value() != 0) rows_[it.row()][it.col()] = it.value();
    col_rows_.resize(n_cols_);
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
      for (auto& [c, v] : rows_[r]) col_rows_[c].insert(r);
  }

  long rank() {
    long rank = 0;
    while (true) {
      int pr = -1, pc = -1;
      long best = -1;
      // Markowitz: minimise (row_nnz-1)*(col_nnz-1), scanning columns by
      // fill count. Capped candidate scan keeps pivot search linear-ish.
      int scanned = 0;
      for (int c = 0; c < n_cols_ && scanned < 64; ++c) {
        const auto& cr = col_rows_[c];
        if (cr.empty()) continue;
        for (int r : cr) {
          const long score =
              (static_cast<long>(rows_[r].size()) - 1) *
              (static_cast<long>(cr.size()) - 1);
          if (best < 0 || score < best) {
            best = score;
            pr = r;
            pc = c;
          }
          if (best == 0) break;
        }
        ++scanned;
        if (best == 0) break;
      }
      if (pr < 0) break;
      eliminate(pr, pc);
      ++rank;
    }
    return rank;
  }

 private:
  void eliminate(int pr, int pc) {
    const Rational piv = rows_[pr][pc];
    std::vector<int> targets(col_rows_[pc].begin(), col_rows_[pc].end());
    for (int r : targets) {
      if (r == pr) continue;
      const Rational factor = rows_[r][pc] / piv;
      for (auto& [c, v] : rows_[pr]) {
        auto it = rows_[r].find(c);
        if (it == rows_[r].end()) {
          Rational nv = -factor * v;
          if (nv != 0) {
            rows_[r][c] = std::move(nv);
            col_rows_[c].insert(r);
          }
        } else {
          it->second -= factor * v;
          if (it->second == 0) {
            rows_[r].erase(it);
            col_rows_[c].erase(r);
          }
        }
      }
    }
    // Retire the pivot row and column.
    for (auto& [c, v] : rows_[pr]) col_rows_[c].erase(pr);
    rows_[pr].clear();
  }

  int n_cols_;
  std::vector<std::map<int, Rational>> rows_;
  std::vector<std::set<int>> col_rows_;
};

}  // namespace

long rank_of(const SpMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.rows() <= 160 && m.cols() <= 160) {
    return rank_of(Mat(m));
  }
  SparseEliminator e(m);
  return e.rank();
}

}  // namespace arrhom
