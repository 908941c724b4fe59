#pragma once

#include "bgbc/linalg.hpp"
#include "bgbc/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace bgbc {

// Four species of free-field modes.  beta/gamma are bosonic, b/c fermionic.
// The enumerator order is also the canonical sort order inside a monomial.
enum class Species : std::uint8_t { beta = 0, gamma = 1, b = 2, c = 3 };

bool species_is_odd(Species s);
char species_letter(Species s);

// One mode operator P^{dir}_{(mode)}.  dir is 1-based.
struct ModeSymbol {
  Species species;
  std::int32_t dir;
  std::int32_t mode;

  // Weight added to a state when this mode is applied.
  int weight_shift() const {
    return (species == Species::beta || species == Species::b) ? -mode : -mode - 1;
  }
  int charge() const {
    if (species == Species::b) return -1;
    if (species == Species::c) return 1;
    return 0;
  }
  bool is_odd() const { return species_is_odd(species); }
  bool is_creation() const { return weight_shift() >= 0 && mode < 0; }

  friend bool operator==(const ModeSymbol& a, const ModeSymbol& b) {
    return a.species == b.species && a.dir == b.dir && a.mode == b.mode;
  }
  friend bool operator<(const ModeSymbol& a, const ModeSymbol& b) {
    return std::tuple(a.species, a.dir, a.mode) < std::tuple(b.species, b.dir, b.mode);
  }
};

// Normally ordered word of creation modes applied to the vacuum, times a
// polynomial in the weight-zero modes gamma^i_(-1) recorded as an exponent
// vector.  The word is kept sorted in canonical order; odd species never
// repeat a symbol.
class Monomial {
public:
  Monomial() = default;
  static Monomial vacuum(int N);

  int N() const { return static_cast<int>(gamma_.size()); }
  const std::vector<ModeSymbol>& word() const { return word_; }
  const std::vector<std::uint32_t>& gamma() const { return gamma_; }
  std::vector<ModeSymbol>& mutable_word() { return word_; }
  std::vector<std::uint32_t>& mutable_gamma() { return gamma_; }

  bool is_vacuum() const;
  int weight() const;
  int charge() const;
  int parity() const;          // 0 even, 1 odd
  int gamma_degree() const;    // total gamma_(-1) exponent
  int sw_degree() const;       // #c-modes + 2 * #gamma-modes (word and poly part)

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.word_ == b.word_ && a.gamma_ == b.gamma_;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.word_ != b.word_) return a.word_ < b.word_;
    return a.gamma_ < b.gamma_;
  }

private:
  std::vector<ModeSymbol> word_;
  std::vector<std::uint32_t> gamma_;
};

enum class Flavor : std::uint8_t { plus = 0, full = 1 };

// Finite rational linear combination of monomials.
class State {
public:
  State() = default;
  State(Flavor f, int N) : flavor_(f), N_(N) {}
  static State vacuum(Flavor f, int N);
  static State single(Flavor f, const Monomial& m, Rational coef = Rational(1));

  Flavor flavor() const { return flavor_; }
  int N() const { return N_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c);
  State& operator+=(const State& o);
  State& operator-=(const State& o);
  State& operator*=(const Rational& c);
  friend State operator+(State a, const State& b) { a += b; return a; }
  friend State operator-(State a, const State& b) { a -= b; return a; }
  friend State operator*(const Rational& c, State s) { s *= c; return s; }
  friend bool operator==(const State& a, const State& b) {
    return a.N_ == b.N_ && a.terms_ == b.terms_;
  }

  int max_weight() const;  // 0 for the zero state
  State as_full() const;
  State as_plus() const;   // throws if any gamma_(-1) exponent is nonzero

private:
  Flavor flavor_ = Flavor::plus;
  int N_ = 0;
  std::map<Monomial, Rational> terms_;
};

// Applies one mode operator on the left.  Creation modes insert into the
// word with the parity sign; annihilation modes supercommute through the
// word picking up bracket terms; gamma^i_(-1) on a plus-flavored state is a
// domain error.
State apply_mode(const ModeSymbol& m, const State& s);

// Translation operator: [T, P_(-k)] = k P_(-k-1) on every species, T(vac)=0.
State translate(const State& s);

bool is_homogeneous(const State& s);

struct Grade {
  int weight;
  int charge;
  friend bool operator==(const Grade& a, const Grade& b) {
    return a.weight == b.weight && a.charge == b.charge;
  }
};

// Grade of a nonzero homogeneous state; nullopt for the zero state or a
// mixed one.
std::optional<Grade> grade_of(const State& s);

// Basis of one weight/charge component, in enumeration (= lexicographic)
// order.
struct WeightSpace {
  Flavor flavor;
  int N;
  int k;
  int l;
  int gamma_bound;  // only meaningful for full flavor
  std::vector<Monomial> basis;
  std::map<Monomial, Eigen::Index> index;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()); }
  Vec coords(const State& s) const;       // throws if a term is out of space
  State from_coords(const Vec& v) const;
};

using WeightSpacePtr = std::shared_ptr<const WeightSpace>;

// Cached enumeration.  For full flavor a gamma_degree bound is required.
WeightSpacePtr enumerate_basis(Flavor flavor, int N, int k, int l,
                               std::optional<int> gamma_bound = std::nullopt);

// All charges of one weight at once: map charge -> dimension.
std::map<int, Eigen::Index> weight_layer_dims(Flavor flavor, int N, int k,
                                              std::optional<int> gamma_bound = std::nullopt);

// Text form.  Species letters: B = beta, G = gamma, b, c; the gamma_(-1)
// exponent vector prints as g[e1,...,eN].  Examples: "1" (vacuum),
// "b{1,-2} c{2,-1} g[0,1]".
std::string to_text(const Monomial& m);
Monomial parse_monomial(const std::string& text, int N);

// States print as "<coef> <monomial> + <coef> <monomial> + ..." with exact
// rational coefficients; "0" for the zero state.
std::string to_text(const State& s);
State parse_state(const std::string& text, Flavor flavor, int N);

}  // namespace bgbc
