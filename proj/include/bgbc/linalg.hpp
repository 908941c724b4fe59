#pragma once

#include "bgbc/rational.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <vector>

namespace Eigen {

template <>
struct NumTraits<bgbc::Rational> {
  using Real = bgbc::Rational;
  using NonInteger = bgbc::Rational;
  using Nested = bgbc::Rational;
  using Literal = bgbc::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30
  };
  static inline bgbc::Rational epsilon() { return bgbc::Rational(0); }
  static inline bgbc::Rational dummy_precision() { return bgbc::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace bgbc {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using SpMat = Eigen::SparseMatrix<Rational>;
using Triplet = Eigen::Triplet<Rational>;

// Reduced row echelon form, in place.  Pivot rule is fixed for
// reproducibility: scan columns left to right, pivot on the smallest row
// index with a nonzero entry.  Returns the rank; pivot_cols (if non-null)
// receives the pivot column of each pivot row.
Eigen::Index rref_in_place(Mat& m, std::vector<Eigen::Index>* pivot_cols = nullptr);

Eigen::Index rank_of(Mat m);

// Columns span the null space.  The basis is the standard one read off the
// RREF (one column per free variable, in column order), so it is
// deterministic.
Mat kernel_basis(const Mat& m);
Mat kernel_basis(const SpMat& m);

// Canonical basis of the column space: transpose, RREF, transpose back and
// drop zero columns.  Two matrices with the same column space produce the
// same result.
Mat column_echelonize(const Mat& m);

Mat to_dense(const SpMat& m);

// Incremental row-echelon span with the same pivot rule as rref_in_place.
// insert() reduces the vector against the accumulated rows and either
// absorbs it (returning true) or reports linear dependence (false).
class SpanBuilder {
public:
  explicit SpanBuilder(Eigen::Index ambient_dim) : ambient_(ambient_dim) {}

  bool insert(Vec v);
  bool contains(Vec v) const;
  Eigen::Index dim() const { return static_cast<Eigen::Index>(rows_.size()); }
  Eigen::Index ambient_dim() const { return ambient_; }
  const std::vector<Vec>& rows() const { return rows_; }

private:
  void reduce(Vec& v) const;

  Eigen::Index ambient_;
  std::vector<Vec> rows_;
  std::vector<Eigen::Index> pivots_;
};

}  // namespace bgbc
