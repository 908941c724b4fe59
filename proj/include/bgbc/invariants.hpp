#pragma once

#include "bgbc/action.hpp"
#include "bgbc/character.hpp"
#include "bgbc/vecfields.hpp"
#include "bgbc/vertex.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bgbc {

// Invariants of one weight/charge component of the plus flavor.  The g0
// kernel comes from stacking the action of the full degree-0 basis; the full
// kernel cuts that down by a single degree-1 witness.  Both bases are
// column-echelonized so repeated runs agree exactly.
struct InvariantReport {
  AlgebraType type = AlgebraType::A;
  int N = 0;
  int k = 0;
  int l = 0;
  std::string g1_text;
  long long dim_g0 = 0;
  long long dim_full = 0;
  long long dim_oracle = 0;
  std::vector<State> g0_basis;
  std::vector<State> full_basis;
  // Intersection over whole bases of the degree 0, 1 and 2 pieces; filled in
  // cross-check mode and expected to equal dim_full.
  std::optional<long long> dim_cross_check;
};

InvariantReport invariant_space(AlgebraType type, int N, int k, int l,
                                const std::optional<PolyVectorField>& g1 = std::nullopt,
                                bool cross_check = false);

// Graded span of the vertex algebra generated by the distinguished states:
// seeds closed under translate and generator modes until no grade grows.
// Coordinates refer to enumerate_basis(plus, N, k, l); columns are the
// echelonized basis.
struct OracleSpan {
  AlgebraType type = AlgebraType::A;
  int N = 0;
  int k_max = 0;
  std::map<std::pair<int, int>, Mat> basis;

  long long dim(int k, int l) const;
  std::vector<State> basis_states(int k, int l) const;
};

const OracleSpan& oracle_span(AlgebraType type, int N, int k_max);

enum class CharacterSource { weight_spaces, invariants, oracle };

CharacterSource character_source_from_name(const std::string& name);
std::string character_source_name(CharacterSource s);

// Dimension table for the requested source, in the shared CharacterTable
// shape; only nonzero entries are stored.
CharacterTable character(CharacterSource source, AlgebraType type, int N, int k_max,
                         const std::optional<PolyVectorField>& g1 = std::nullopt);

// Per-grade comparison of the generated span against the computed invariants.
// Evidence only: MATCH/GAP rows plus witness vectors for any gap, and a
// vector-by-vector containment check of the span inside the invariants.
struct ConjectureReport {
  struct Row {
    int k = 0;
    int l = 0;
    long long dim_invariants = 0;
    long long dim_oracle = 0;
    bool match = false;
    std::vector<State> witnesses;  // invariant vectors outside the span
  };

  AlgebraType type = AlgebraType::A;
  int N = 0;
  int k_max = 0;
  std::string g1_text;
  std::vector<Row> rows;
  bool containment_ok = true;

  bool all_match() const;
};

ConjectureReport conjecture_evidence(int N = 3, int k_max = 2,
                                     AlgebraType type = AlgebraType::A,
                                     const std::optional<PolyVectorField>& g1 = std::nullopt);

}  // namespace bgbc
