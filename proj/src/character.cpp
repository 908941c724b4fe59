#include "bgbc/character.hpp"

#include <stdexcept>

namespace bgbc {

namespace {

using Series = std::map<std::pair<int, int>, long long>;  // (q-power, t-power) -> coef

Series mul_truncated(const Series& a, const Series& b, int k_max) {
  Series out;
  for (const auto& [ga, ca] : a) {
    for (const auto& [gb, cb] : b) {
      int k = ga.first + gb.first;
      if (k > k_max) continue;
      out[{k, ga.second + gb.second}] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

Series pow_truncated(Series base, int e, int k_max) {
  Series acc{{{0, 0}, 1}};
  for (int i = 0; i < e; ++i) acc = mul_truncated(acc, base, k_max);
  return acc;
}

}  // namespace

CharacterTable product_character(int N, int k_max) {
  if (N < 1 || k_max < 0) throw std::invalid_argument("bad character arguments");
  Series acc{{{0, 0}, 1}};
  for (int n = 1; n - 1 <= k_max; ++n) {
    Series f{{{0, 0}, 1}, {{n - 1, 1}, 1}};
    acc = mul_truncated(acc, pow_truncated(f, N, k_max), k_max);
  }
  for (int n = 1; n <= k_max; ++n) {
    Series f{{{0, 0}, 1}, {{n, -1}, 1}};
    acc = mul_truncated(acc, pow_truncated(f, N, k_max), k_max);
  }
  for (int n = 1; n <= k_max; ++n) {
    Series f;
    for (int j = 0; n * j <= k_max; ++j) {
      f[{n * j, 0}] = binom(j + 2 * N - 1, 2 * N - 1);
    }
    acc = mul_truncated(acc, f, k_max);
  }
  CharacterTable t;
  t.N = N;
  t.k_max = k_max;
  t.dims = std::move(acc);
  return t;
}

CharacterTable enumerated_character(int N, int k_max) {
  CharacterTable t;
  t.N = N;
  t.k_max = k_max;
  for (int k = 0; k <= k_max; ++k) {
    for (const auto& [l, d] : weight_layer_dims(Flavor::plus, N, k)) {
      if (d != 0) t.dims[{k, l}] = static_cast<long long>(d);
    }
  }
  return t;
}

}  // namespace bgbc
