#pragma once

#include "bgbc/linalg.hpp"
#include "bgbc/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bgbc {

// Exponent vector of a monomial in x_1..x_N; s[i] is the power of x_{i+1}.
using MultiIndex = std::vector<std::uint32_t>;

int total_degree(const MultiIndex& s);

// All exponent vectors with |s| = d over N variables, first exponent
// descending.  The order is fixed; basis enumeration and coordinate maps
// depend on it.
std::vector<MultiIndex> monomials_of_degree(int N, int d);

// Sparse polynomial with rational coefficients.
using Poly = std::map<MultiIndex, Rational>;

void poly_add_term(Poly& p, const MultiIndex& s, const Rational& c);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_diff(const Poly& p, int var); // d/dx_var, var 1-based

enum class AlgebraType : std::uint8_t { A, C };

// 'A' or 'C'; anything else throws.
AlgebraType algebra_type_from_letter(char t);
char algebra_type_letter(AlgebraType t);

// Polynomial vector field sum_j P_j d/dx_j on affine N-space.  Terms are
// keyed by (monomial, direction); directions are 1-based.
class PolyVectorField {
public:
  PolyVectorField() = default;
  explicit PolyVectorField(int N) : N_(N) {}

  int N() const { return N_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& s, int dir, const Rational& coef);
  const std::map<std::pair<MultiIndex, int>, Rational>& terms() const { return terms_; }

  // Coefficient polynomial of d/dx_dir.
  Poly component(int dir) const;

  // Homogeneous degree: every monomial has |s| = degree + 1.  Empty for the
  // zero field or a mix of degrees.  Constant fields have degree -1 and are
  // representable, though graded bases start at degree 0.
  std::optional<int> degree() const;

  PolyVectorField& operator+=(const PolyVectorField& o);
  PolyVectorField& operator-=(const PolyVectorField& o);
  PolyVectorField& operator*=(const Rational& c);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
  friend PolyVectorField operator*(const Rational& c, PolyVectorField v) { return v *= c; }
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
    return a.N_ == b.N_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const PolyVectorField& a, const PolyVectorField& b) { return !(a == b); }

private:
  int N_ = 0;
  std::map<std::pair<MultiIndex, int>, Rational> terms_;
};

// Lie bracket of vector fields,
//   [u, v] = sum_j ( sum_i  P_i dQ_j/dx_i - Q_i dP_j/dx_i ) d/dx_j
// for u = sum P_i d/dx_i, v = sum Q_j d/dx_j.
PolyVectorField bracket(const PolyVectorField& u, const PolyVectorField& v);

Poly divergence(const PolyVectorField& v);

// Differential form with polynomial coefficients, indexed by strictly
// increasing tuples of 1-based directions.
class PolyForm {
public:
  PolyForm() = default;
  explicit PolyForm(int N) : N_(N) {}

  // dx_1 ^ ... ^ dx_N.
  static PolyForm volume(int N);
  // sum_i dx_{2i-1} ^ dx_{2i}; throws for odd N.
  static PolyForm symplectic(int N);

  int N() const { return N_; }
  bool is_zero() const { return comps_.empty(); }

  // idx in any order; sorted with the wedge sign, repeated indices drop the
  // term.
  void add_term(std::vector<int> idx, const MultiIndex& s, const Rational& coef);
  const std::map<std::vector<int>, Poly>& components() const { return comps_; }

  PolyForm d() const;
  PolyForm contract(const PolyVectorField& v) const;

  PolyForm& operator+=(const PolyForm& o);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator*(const Rational& c, PolyForm w);
  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.N_ == b.N_ && a.comps_ == b.comps_;
  }
  friend bool operator!=(const PolyForm& a, const PolyForm& b) { return !(a == b); }

private:
  int N_ = 0;
  std::map<std::vector<int>, Poly> comps_;
};

// Cartan formula d(i_v w) + i_v(dw).
PolyForm lie_derivative(const PolyVectorField& v, const PolyForm& w);

// Closed-form dimension of the degree-n graded piece; type C requires even N.
long long vect_dim(AlgebraType type, int N, int n);

// Deterministic basis of the degree-n piece of the algebra: kernel of the
// structure-form constraint (volume form for type A, symplectic form for
// type C) on the span of x^s d/dx_j with |s| = n + 1.  Columns are ordered
// (monomials_of_degree(N, n + 1), then direction) and the kernel read-off
// uses the fixed pivot rule, so repeated calls agree exactly.
std::vector<PolyVectorField> basis_graded(AlgebraType type, int N, int n);

// Coordinates of a homogeneous degree-n field in the column order used by
// basis_graded.
Vec field_coordinates(const PolyVectorField& v, int n);

// The standard degree-1 witness x_1^2 d/dx_2, valid for both types.
PolyVectorField default_g1(int N);

struct GenerationReport {
  struct Row {
    int degree = 0;
    long long dim_target = 0;
    long long dim_achieved = 0;
  };
  AlgebraType type = AlgebraType::A;
  int N = 0;
  std::string g1_text;
  std::vector<Row> rows;

  bool full_rank() const;
};

// Checks that iterated brackets of the degree-0 piece with a single chosen
// degree-1 element span every graded piece up to n_max.  g1 defaults to
// default_g1(N) and must be a nonzero degree-1 element of the algebra.
GenerationReport generation_check(AlgebraType type, int N, int n_max,
                                  const std::optional<PolyVectorField>& g1 = std::nullopt);

// Degree-0 field as the N x N matrix M with M(a-1, b-1) = coefficient of
// x_a d/dx_b.  Throws unless the field is homogeneous of degree 0 (or zero).
Mat to_linear_matrix(const PolyVectorField& v);

// Text form, e.g. "2 x1^2 d2 - 1 x1 x2 d1"; terms print with an explicit
// coefficient, monomials first-exponent descending.  parse accepts the same
// shape with optional coefficients and signs.
std::string to_text(const PolyVectorField& v);
PolyVectorField parse_vector_field(const std::string& text, int N);

} // namespace bgbc
