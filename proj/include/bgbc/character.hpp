#pragma once

#include "bgbc/fock.hpp"

#include <map>
#include <utility>

namespace bgbc {

// Graded dimension table: (weight, charge) -> dimension, for weights up to
// k_max.  Grades that do not appear have dimension zero.
struct CharacterTable {
  int N = 0;
  int k_max = 0;
  std::map<std::pair<int, int>, long long> dims;

  long long at(int k, int l) const {
    auto it = dims.find({k, l});
    return it == dims.end() ? 0 : it->second;
  }
  friend bool operator==(const CharacterTable& a, const CharacterTable& b) {
    return a.N == b.N && a.k_max == b.k_max && a.dims == b.dims;
  }
};

// Free-field product formula
//   prod_{n>=1} (1+t q^{n-1})^N (1+t^{-1} q^n)^N (1-q^n)^{-2N}
// expanded to order q^{k_max}, grade (k, l) = (q-power, t-power).
CharacterTable product_character(int N, int k_max);

// Same table read off the monomial enumeration.
CharacterTable enumerated_character(int N, int k_max);

}  // namespace bgbc
