#pragma once

#include "bgbc/vertex.hpp"

#include <string>

namespace bgbc {

// Squared norm of a single creation mode: beta_(n) -> -n, gamma_(n) ->
// 1/(-n-1), b and c modes -> 1.  Squared norms keep everything rational;
// the orthonormal vectors would carry square roots.
Rational mode_norm_sq(const ModeSymbol& m);

// Squared norm of a canonical monomial: product over distinct bosonic
// symbols of mu! * mode_norm_sq^mu; fermionic symbols contribute 1.
Rational gram_norm_sq(const Monomial& m);

// Diagonal of the Gram matrix in the enumeration basis.  The form is
// diagonal there: distinct canonical monomials are orthogonal.
Vec gram_diagonal(const WeightSpacePtr& ws);

// Hermitian form on plus-flavored states.  Inhomogeneous states are fine;
// cross-grade pairs contribute 0.  Full-flavor input is rejected.
Rational inner(const State& a, const State& b);

enum class AdjointFamily { Q, J, L, D, Dprime };

AdjointFamily adjoint_family_from_letter(const std::string& name);

struct AdjointCheckResult {
  bool ok = true;
  std::string witness;  // first failing identity, empty when ok

  explicit operator bool() const { return ok; }
};

// Verifies the adjunction M(op_(n))^T Gram_dst = Gram_src M(op*_(n)) for one
// operator family on every grade with source and target weights <= k_max:
//   Q*_(n)  = G_(-n+1)
//   J*_(n)  = J_(-n)
//   L*_(n)  = L_(-n+2) - (n-1) J_(-n+1)
//   D*_(n)  = (-1)^{N(N-1)/2} E_(N-2-n)
//   D'*_(n) = -E'_(-n)
// flip_sign negates the adjoint side on purpose (negative-control hook).
AdjointCheckResult adjoint_check(AdjointFamily fam, int N, int k_max, bool flip_sign = false);

// The defining single-mode adjunctions, as matrix identities across adjacent
// grades: (beta_(n) A, B) = (A, n gamma_(-n-1) B) for n != 0, beta_(0) = 0,
// and (b_(n) A, B) = (A, c_(-n-1) B).
AdjointCheckResult single_mode_adjunction_check(int N, int k_max);

}  // namespace bgbc
