#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bgbc/vertex.hpp"

#include <utility>
#include <vector>

using namespace bgbc;

namespace {

State st(Flavor f, int N, std::vector<std::pair<Rational, const char*>> terms) {
  State s(f, N);
  for (const auto& [c, t] : terms) s.add_term(parse_monomial(t, N), c);
  return s;
}

std::vector<State> plus_basis_states(int N, int k_max) {
  std::vector<State> out;
  for (int k = 0; k <= k_max; ++k)
    for (int l = -N * (k + 1); l <= N * (k + 1); ++l) {
      auto ws = enumerate_basis(Flavor::plus, N, k, l);
      for (const auto& m : ws->basis) out.push_back(State::single(Flavor::plus, m));
    }
  return out;
}

}  // namespace

TEST_CASE("generator states have their expected expansions") {
  CHECK(generator_state(GeneratorName::Q, 2) ==
        st(Flavor::plus, 2, {{1, "B{1,-1} c{1,-1}"}, {1, "B{2,-1} c{2,-1}"}}));
  CHECK(generator_state(GeneratorName::J, 2) ==
        st(Flavor::plus, 2, {{-1, "b{1,-1} c{1,-1}"}, {-1, "b{2,-1} c{2,-1}"}}));
  CHECK(generator_state(GeneratorName::L, 1) ==
        st(Flavor::plus, 1, {{1, "B{1,-1} G{1,-2}"}, {-1, "b{1,-1} c{1,-2}"}}));
  CHECK(generator_state(GeneratorName::G, 1) == st(Flavor::plus, 1, {{1, "G{1,-2} b{1,-1}"}}));
  CHECK(generator_state(GeneratorName::D, 2) == st(Flavor::plus, 2, {{1, "b{1,-1} b{2,-1}"}}));
  CHECK(generator_state(GeneratorName::E, 2) == st(Flavor::plus, 2, {{1, "c{1,-1} c{2,-1}"}}));
  CHECK(generator_state(GeneratorName::B, 2) ==
        st(Flavor::plus, 2, {{1, "B{1,-1} b{2,-1}"}, {-1, "B{2,-1} b{1,-1}"}}));
  CHECK(generator_state(GeneratorName::C, 2) ==
        st(Flavor::plus, 2, {{1, "G{1,-2} c{2,-1}"}, {-1, "G{2,-2} c{1,-1}"}}));
  CHECK(generator_state(GeneratorName::Dprime, 2) == generator_state(GeneratorName::D, 2));
  CHECK(generator_state(GeneratorName::Eprime, 2) == generator_state(GeneratorName::E, 2));
  CHECK(generator_state(GeneratorName::Dprime, 4) ==
        st(Flavor::plus, 4, {{1, "b{1,-1} b{2,-1}"}, {1, "b{3,-1} b{4,-1}"}}));
  CHECK_THROWS_AS(generator_state(GeneratorName::Dprime, 3), std::invalid_argument);
  CHECK_THROWS_AS(generator_state(GeneratorName::Eprime, 1), std::invalid_argument);
}

TEST_CASE("generator grades and parities") {
  struct Row {
    GeneratorName g;
    int k, l, parity;
  };
  const Row rows[] = {
      {GeneratorName::Q, 1, 1, 1}, {GeneratorName::L, 2, 0, 0},  {GeneratorName::J, 1, 0, 0},
      {GeneratorName::G, 2, -1, 1}, {GeneratorName::D, 2, -2, 0}, {GeneratorName::E, 0, 2, 0},
      {GeneratorName::B, 2, -1, 1}, {GeneratorName::C, 1, 1, 1},
  };
  for (const auto& r : rows) {
    auto s = generator_state(r.g, 2);
    REQUIRE(is_homogeneous(s));
    auto gr = grade_of(s);
    REQUIRE(gr.has_value());
    CHECK(gr->weight == r.k);
    CHECK(gr->charge == r.l);
    for (const auto& [m, c] : s.terms()) {
      (void)c;
      CHECK(m.parity() == r.parity);
    }
  }
  CHECK(generator_set('A').size() == 8);
  CHECK(generator_set('C').size() == 6);
  CHECK_THROWS_AS(generator_set('B'), std::invalid_argument);
  CHECK(generator_from_letter("Dp") == GeneratorName::Dprime);
  CHECK(generator_letter(GeneratorName::Eprime) == "Ep");
}

TEST_CASE("creation identity against the vacuum") {
  const State vac = State::vacuum(Flavor::plus, 2);
  for (const auto& a : plus_basis_states(2, 2)) {
    CHECK(nth_product(a, -1, vac) == a);
    for (long long n = 0; n <= 2; ++n) CHECK(nth_product(a, n, vac).is_zero());
    CHECK(nth_product(a, -2, vac) == translate(a));
    State t2 = translate(translate(a));
    t2 *= Rational(1, 2);
    CHECK(nth_product(a, -3, vac) == t2);
  }
}

TEST_CASE("identity field from the vacuum state") {
  const State vac = State::vacuum(Flavor::plus, 1);
  for (const auto& b : plus_basis_states(1, 2)) {
    CHECK(nth_product(vac, -1, b) == b);
    CHECK(nth_product(vac, 0, b).is_zero());
    CHECK(nth_product(vac, -2, b).is_zero());
  }
}

TEST_CASE("gamma polynomial factors multiply and differentiate") {
  State g1 = st(Flavor::full, 2, {{1, "g[1,0]"}});
  State b = st(Flavor::full, 2, {{1, "B{1,-1} g[0,1]"}});
  // gamma^1_(-1) acting as multiplication.
  CHECK(nth_product(g1, -1, b) == st(Flavor::full, 2, {{1, "B{1,-1} g[1,1]"}}));
  // Other modes of the gamma field agree with apply_mode on the promotion.
  State q = generator_state(GeneratorName::Q, 2);
  for (long long n : {-2ll, 0ll, 1ll}) {
    State direct = apply_mode(ModeSymbol{Species::gamma, 1, static_cast<std::int32_t>(n)}, q.as_full());
    CHECK(nth_product(g1, n, q) == direct);
  }
}

TEST_CASE("translation covariance of products") {
  std::vector<State> as = {generator_state(GeneratorName::Q, 2), generator_state(GeneratorName::L, 2),
                           generator_state(GeneratorName::G, 2),
                           st(Flavor::full, 2, {{1, "B{1,-1} g[0,1]"}})};
  std::vector<State> bs = {State::vacuum(Flavor::plus, 2),
                           st(Flavor::plus, 2, {{1, "B{1,-2}"}}),
                           st(Flavor::plus, 2, {{1, "b{1,-1} c{2,-1}"}}),
                           st(Flavor::full, 2, {{1, "G{1,-2} g[2,0]"}})};
  for (const auto& a : as)
    for (const auto& b : bs)
      for (long long n = -2; n <= 3; ++n) {
        State lhs = nth_product(translate(a), n, b);
        State rhs = nth_product(a, n - 1, b);
        rhs *= Rational(-n);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("commutator formula on a reduced sweep") {
  const int N = 1;
  std::vector<State> gens = {generator_state(GeneratorName::Q, N), generator_state(GeneratorName::J, N),
                             generator_state(GeneratorName::L, N), generator_state(GeneratorName::G, N)};
  auto parity_of = [](const State& s) { return s.terms().begin()->first.parity(); };
  for (const auto& a : gens)
    for (const auto& b : gens) {
      const int sign = parity_of(a) * parity_of(b);
      for (const auto& c : plus_basis_states(N, 2))
        for (long long m = -2; m <= 2; ++m)
          for (long long n = -2; n <= 2; ++n) {
            State lhs = nth_product(a, m, nth_product(b, n, c));
            State swap = nth_product(b, n, nth_product(a, m, c));
            swap *= Rational(sign == 1 ? 1 : -1);
            lhs += swap;
            State rhs(Flavor::plus, N);
            const int imax = grade_of(a)->weight + grade_of(b)->weight;
            for (int i = 0; i <= imax; ++i) {
              State inner = nth_product(a, i, b);
              if (inner.is_zero()) continue;
              State term = nth_product(inner, m + n - i, c);
              term *= Rational(binom(m, i));
              rhs += term;
            }
            CHECK(lhs == rhs);
          }
    }
}

TEST_CASE("commutator formula with a gamma-carrying left factor") {
  const int N = 1;
  State a = st(Flavor::full, 1, {{1, "g[1]"}});
  State b = generator_state(GeneratorName::Q, 1);
  for (const auto& cp : plus_basis_states(N, 1)) {
    State c = cp.as_full();
    for (long long m = -1; m <= 1; ++m)
      for (long long n = -1; n <= 1; ++n) {
        State lhs = nth_product(a, m, nth_product(b, n, c));
        lhs -= nth_product(b, n, nth_product(a, m, c));
        State rhs(Flavor::full, N);
        for (int i = 0; i <= 1; ++i) {
          State inner = nth_product(a, i, b);
          if (inner.is_zero()) continue;
          State term = nth_product(inner, m + n - i, c);
          term *= Rational(binom(m, i));
          rhs += term;
        }
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("conformal weight and charge operators are diagonal") {
  State L = generator_state(GeneratorName::L, 2);
  State J = generator_state(GeneratorName::J, 2);
  for (int k = 0; k <= 3; ++k)
    for (int l = -2; l <= 2; ++l) {
      auto src = enumerate_basis(Flavor::plus, 2, k, l);
      if (src->dim() == 0) continue;
      Mat lm = to_dense(mode_matrix(L, 1, src).mat);
      Mat jm = to_dense(mode_matrix(J, 0, src).mat);
      Mat id = Mat::Identity(src->dim(), src->dim());
      CHECK(lm == Rational(k) * id);
      CHECK(jm == Rational(l) * id);
    }
}

TEST_CASE("mode zero of the Virasoro state is the translation operator") {
  State L = generator_state(GeneratorName::L, 2);
  for (const auto& s : plus_basis_states(2, 2)) CHECK(nth_product(L, 0, s) == translate(s));
}

TEST_CASE("the charged differential squares to zero") {
  State Q = generator_state(GeneratorName::Q, 2);
  for (const auto& s : plus_basis_states(2, 2))
    CHECK(nth_product(Q, 0, nth_product(Q, 0, s)).is_zero());
  for (int k = 0; k <= 1; ++k)
    for (int l = -2; l <= 2; ++l) {
      auto ws = enumerate_basis(Flavor::full, 2, k, l, 1);
      for (const auto& m : ws->basis) {
        State s = State::single(Flavor::full, m);
        CHECK(nth_product(Q, 0, nth_product(Q, 0, s)).is_zero());
      }
    }
}

TEST_CASE("mode matrices agree with direct products") {
  for (auto name : {GeneratorName::Q, GeneratorName::L, GeneratorName::G}) {
    State a = generator_state(name, 2);
    auto ga = grade_of(a);
    for (int k = 0; k <= 2; ++k)
      for (int l = -1; l <= 1; ++l)
        for (long long n = 0; n <= 2; ++n) {
          auto src = enumerate_basis(Flavor::plus, 2, k, l);
          if (src->dim() == 0) continue;
          auto map = mode_matrix(a, n, src);
          CHECK(map.dst->k == k + ga->weight - static_cast<int>(n) - 1);
          Mat dense = to_dense(map.mat);
          for (Eigen::Index j = 0; j < src->dim(); ++j) {
            State out = nth_product(a, n, State::single(Flavor::plus, src->basis[static_cast<std::size_t>(j)]));
            Vec expect = map.dst->k < 0 ? Vec(0) : map.dst->coords(out);
            for (Eigen::Index r = 0; r < dense.rows(); ++r) CHECK(dense(r, j) == expect[r]);
          }
        }
  }
}

TEST_CASE("symbol matrices agree with apply_mode") {
  for (const ModeSymbol sym : {ModeSymbol{Species::beta, 1, -1}, ModeSymbol{Species::c, 2, 0},
                               ModeSymbol{Species::b, 1, -2}, ModeSymbol{Species::gamma, 1, 1}}) {
    auto src = enumerate_basis(Flavor::plus, 2, 2, 0);
    auto map = symbol_matrix(sym, src);
    Mat dense = to_dense(map.mat);
    for (Eigen::Index j = 0; j < src->dim(); ++j) {
      State out = apply_mode(sym, State::single(Flavor::plus, src->basis[static_cast<std::size_t>(j)]));
      if (map.dst->dim() == 0) {
        CHECK(out.is_zero());
        continue;
      }
      Vec expect = map.dst->coords(out);
      for (Eigen::Index r = 0; r < dense.rows(); ++r) CHECK(dense(r, j) == expect[r]);
    }
  }
}

TEST_CASE("invalid inputs are rejected") {
  State mixed = generator_state(GeneratorName::Q, 2) + generator_state(GeneratorName::D, 2);
  CHECK_THROWS_AS(nth_product(mixed, 0, State::vacuum(Flavor::plus, 2)), std::invalid_argument);
  auto full_src = enumerate_basis(Flavor::full, 2, 1, 0, 1);
  CHECK_THROWS_AS(mode_matrix(generator_state(GeneratorName::L, 2), 1, full_src), std::invalid_argument);
  // Target with too small a gamma bound cannot absorb the image.
  State g1 = st(Flavor::full, 2, {{1, "g[1,0]"}});
  auto small_dst = enumerate_basis(Flavor::full, 2, 1, 0, 0);
  CHECK_THROWS(mode_matrix(g1, -1, full_src, small_dst));
}

TEST_CASE("normal order against the vacuum reproduces the state") {
  State L = generator_state(GeneratorName::L, 2);
  CHECK(normal_order(L, State::vacuum(Flavor::plus, 2)) == L);
  State g = st(Flavor::full, 2, {{1, "g[1,1]"}});
  CHECK(normal_order(g, State::vacuum(Flavor::full, 2)) == g);
}
