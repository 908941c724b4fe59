#pragma once

#include "bgbc/fock.hpp"

#include <memory>
#include <string>
#include <vector>

namespace bgbc {

// Formal operator field, evaluated mode by mode on states.  A field is an
// expression tree over primitive generator fields, divided derivatives
// (1/m!) d^m, and normally ordered products.  The tilde flag on a gamma
// primitive drops its (-1) mode, which is the substitute field used when a
// polynomial in the gamma zero-weight modes has already been split off.
class Field {
public:
  static Field identity();
  static Field primitive(Species sp, int dir, bool tilde = false);
  static Field derived(const Field& inner, int order);   // (1/order!) d^order
  static Field product(const Field& left, const Field& right);  // :left right:

  int weight() const;
  int parity() const;

  // out += scale * F_(n) s.  The expansion of a product mode is truncated by
  // the requirement that every intermediate state have weight >= 0.
  void apply_mode(long long n, const State& s, const Rational& scale, State& out) const;

  State mode(long long n, const State& s) const;

private:
  struct Node;
  explicit Field(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Linear combination of fields; applied by summing term applications.
struct FieldOperator {
  std::vector<std::pair<Rational, Field>> terms;
  State apply(long long n, const State& s) const;
};

// Field attached to a state by the state-field correspondence: for
// a = u_(-m-1) a', the field is :((1/m!) d^m u) a':, recursively.
Field field_of(const Monomial& m);

// a_(n) b through the state-field correspondence.  a must be homogeneous.
// If a carries gamma_(-1) factors and b is plus-flavored, b is promoted to
// the full flavor first; a plus pair stays plus.
State nth_product(const State& a, long long n, const State& b);

// a_(-1) b.
State normal_order(const State& a, const State& b);

enum class GeneratorName { Q, L, J, G, D, E, B, C, Dprime, Eprime };

GeneratorName generator_from_letter(const std::string& name);
std::string generator_letter(GeneratorName g);

// The distinguished states of Sigma-type sums of quadratic words; Dprime
// and Eprime require even N.
State generator_state(GeneratorName g, int N);

// Generating sets used for the span oracles: type 'A' all eight proper
// states plus Dprime/Eprime coincide pairwise at N = 2; type 'C' the
// symplectic six.
std::vector<GeneratorName> generator_set(char type);

struct SparseLinearMap {
  WeightSpacePtr src;
  WeightSpacePtr dst;
  SpMat mat;  // dst.dim() x src.dim()
};

// Matrix of a_(n) on a weight space.  For plus flavor the target space is
// derived from the grade shift; for full flavor a target with a sufficient
// gamma bound must be supplied.  Every produced monomial must land in the
// target space or the call throws.
SparseLinearMap mode_matrix(const State& a, long long n, const WeightSpacePtr& src);
SparseLinearMap mode_matrix(const State& a, long long n, const WeightSpacePtr& src,
                            const WeightSpacePtr& dst);

SparseLinearMap composite_zero_mode(const State& a, const WeightSpacePtr& src);

// Matrix of a single mode symbol (not a composite field).
SparseLinearMap symbol_matrix(const ModeSymbol& m, const WeightSpacePtr& src);
SparseLinearMap symbol_matrix(const ModeSymbol& m, const WeightSpacePtr& src,
                              const WeightSpacePtr& dst);

}  // namespace bgbc
