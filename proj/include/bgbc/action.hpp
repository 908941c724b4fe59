#pragma once

#include "bgbc/vecfields.hpp"
#include "bgbc/vertex.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace bgbc {

// Action of a polynomial vector field as the zero mode of the state
//   Q_(0) ( sum_i P_i(gamma_(-1)) b^i_(-1) |0> ).
// Plus-flavored input is promoted; the result is full-flavored and the
// (k, l) grade is preserved.
State act_L(const PolyVectorField& v, const State& s);

// The substitute action built from gamma-tilde, c, b and beta fields,
//   sum_i ( : sum_j (dP_i/dx_j)(gt) c^j : b^i : + : P_i(gt) beta^i : )_(0).
// Preserves flavor and grade; on the plus flavor it never produces a
// gamma_(-1) factor.
State act_Lplus(const PolyVectorField& v, const State& s);

// The field operator behind act_Lplus, reusable across states.
FieldOperator lplus_operator(const PolyVectorField& v);

// Cached materialization of either action on weight spaces.
class ActionOperator {
public:
  enum class Variant { L, LPLUS };

  ActionOperator(PolyVectorField v, Variant variant);

  const PolyVectorField& field() const { return v_; }
  Variant variant() const { return variant_; }

  // LPLUS maps a space to itself.  L on the full flavor enlarges the gamma
  // bound by deg(v) + 1; the two-argument form pins the target exactly.
  SparseLinearMap matrix(const WeightSpacePtr& src) const;
  SparseLinearMap matrix(const WeightSpacePtr& src, const WeightSpacePtr& dst) const;

private:
  PolyVectorField v_;
  Variant variant_;
  int raise_;  // gamma-degree the action can add
  mutable std::mutex mu_;
  mutable std::map<std::pair<const WeightSpace*, const WeightSpace*>, SparseLinearMap> cache_;
};

// One element g t^n of the arc algebra of linear fields.  g must be
// homogeneous of degree 0.
struct ArcElement {
  PolyVectorField g;
  int t_power = 0;
};

// Derivation action on monomials by the mode-shift rules: for k = -mode,
//   g t^n  beta_(-k) -> beta^{g}_(-k+n)   when n < k, else 0,
// b and c alike, while gamma picks up the factor (k-1-n)/(k-1) and needs
// n < k - 1 so that no gamma_(-1) is ever produced; gamma_(-1) factors
// themselves are annihilated.  The rational factor is forced by the
// symmetric-algebra coordinates: the gamma slots are really modes of
// d gamma, with (d gamma)_(-l) = l gamma_(-l-1), and g t^n shifts those
// modes with coefficient one.  Direction labels transform by g for
// gamma/c and by -g^T for beta/b.  At n = 0 this is the ordinary degree
// zero action.
State act_arc(const ArcElement& e, const State& s);

// The ladder operators of the N = 2 analysis: K_1 and K_0 are weight-
// truncated sums of (gamma-mode) x (arc element) terms and K_n = [K_0,
// K_{n-1}] is applied recursively.
class KOperator {
public:
  explicit KOperator(int n);  // throws for n < 0
  int index() const { return n_; }
  State apply(const State& s) const;

private:
  int n_;
};

inline KOperator k_operator(int n) { return KOperator(n); }

// Terms of maximal SW-degree (count of c modes plus twice the count of
// gamma factors, the gamma_(-1) exponents included).
State top_sw_component(const State& s);

}  // namespace bgbc
