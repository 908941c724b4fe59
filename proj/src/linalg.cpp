#include "bgbc/linalg.hpp"

namespace bgbc {

Eigen::Index rref_in_place(Mat& m, std::vector<Eigen::Index>* pivot_cols) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  if (pivot_cols) pivot_cols->clear();
  Eigen::Index lead = 0;
  for (Eigen::Index col = 0; col < cols && lead < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = lead; r < rows; ++r) {
      if (!m(r, col).is_zero()) { piv = r; break; }
    }
    if (piv < 0) continue;
    if (piv != lead) m.row(piv).swap(m.row(lead));
    Rational inv = Rational(1) / m(lead, col);
    for (Eigen::Index c = col; c < cols; ++c) m(lead, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == lead || m(r, col).is_zero()) continue;
      Rational f = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(lead, c);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++lead;
  }
  return lead;
}

Eigen::Index rank_of(Mat m) { return rref_in_place(m); }

Mat kernel_basis(const Mat& m) {
  Mat r = m;
  std::vector<Eigen::Index> pivots;
  Eigen::Index rank = rref_in_place(r, &pivots);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Mat k(cols, cols - rank);
  k.setConstant(Rational(0));
  Eigen::Index out = 0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    k(c, out) = Rational(1);
    for (Eigen::Index i = 0; i < rank; ++i) {
      k(pivots[static_cast<std::size_t>(i)], out) = -r(i, c);
    }
    ++out;
  }
  return k;
}

Mat to_dense(const SpMat& m) {
  Mat d(m.rows(), m.cols());
  d.setConstant(Rational(0));
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SpMat::InnerIterator it(m, k); it; ++it) d(it.row(), it.col()) = it.value();
  }
  return d;
}

Mat kernel_basis(const SpMat& m) { return kernel_basis(to_dense(m)); }

Mat column_echelonize(const Mat& m) {
  Mat t = m.transpose();
  Eigen::Index rank = rref_in_place(t);
  Mat out = t.topRows(rank).transpose();
  return out;
}

bool SpanBuilder::insert(Vec v) {
  reduce(v);
  Eigen::Index piv = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) { piv = i; break; }
  }
  if (piv < 0) return false;
  Rational inv = Rational(1) / v(piv);
  for (Eigen::Index i = piv; i < v.size(); ++i) v(i) *= inv;
  // keep rows mutually reduced so membership tests stay cheap
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational f = rows_[r](piv);
    if (!f.is_zero()) rows_[r] -= f * v;
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool SpanBuilder::contains(Vec v) const {
  reduce(v);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) return false;
  }
  return true;
}

void SpanBuilder::reduce(Vec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational f = v(pivots_[r]);
    if (!f.is_zero()) v -= f * rows_[r];
  }
}

}  // namespace bgbc
