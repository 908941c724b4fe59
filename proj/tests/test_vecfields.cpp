#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bgbc/vecfields.hpp"

#include <random>
#include <sstream>

using namespace bgbc;

namespace {

PolyVectorField vf(const std::string& text, int N) { return parse_vector_field(text, N); }

PolyVectorField random_field(int N, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  PolyVectorField v(N);
  for (const auto& s : monomials_of_degree(N, deg + 1))
    for (int j = 1; j <= N; ++j) v.add_term(s, j, Rational(coef(rng)));
  return v;
}

PolyForm times_poly(const Poly& p, const PolyForm& base) {
  PolyForm out(base.N());
  for (const auto& [I, f] : base.components())
    for (const auto& [s, c] : f)
      for (const auto& [t, d] : p) {
        MultiIndex u(s.size());
        for (size_t i = 0; i < s.size(); ++i) u[i] = s[i] + t[i];
        out.add_term(I, u, c * d);
      }
  return out;
}

}  // namespace

TEST_CASE("bracket of linear fields") {
  auto u = vf("1 x1 d2", 2);
  auto v = vf("1 x2 d1", 2);
  CHECK(bracket(u, v) == vf("1 x1 d1 - 1 x2 d2", 2));
  CHECK(bracket(v, u) == vf("1 x2 d2 - 1 x1 d1", 2));
}

TEST_CASE("bracket of higher-degree fields") {
  for (int n = 1; n <= 4; ++n) {
    std::ostringstream lhs1, rhs;
    lhs1 << "1 x1^" << n << " d2";
    auto u = vf(lhs1.str(), 2);
    auto v = vf("1 x2^2 d1", 2);
    rhs << "2 x1^" << n << " x2 d1 - " << n << " ";
    if (n > 1) rhs << "x1^" << (n - 1) << " ";
    rhs << "x2^2 d2";
    CHECK(bracket(u, v) == parse_vector_field(rhs.str(), 2));
  }
}

TEST_CASE("bracket is alternating and bilinear") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int N = 1 + static_cast<int>(rng() % 3);
    int deg = static_cast<int>(rng() % 3);
    auto v = random_field(N, deg, rng);
    CHECK(bracket(v, v).is_zero());
    auto u = random_field(N, deg, rng);
    CHECK(bracket(u, v) == Rational(-1) * bracket(v, u));
    auto w = random_field(N, static_cast<int>(rng() % 3), rng);
    CHECK(bracket(u + v, w) == bracket(u, w) + bracket(v, w));
  }
}

TEST_CASE("Jacobi identity on random triples") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    int N = 1 + static_cast<int>(rng() % 3);
    auto u = random_field(N, static_cast<int>(rng() % 3), rng);
    auto v = random_field(N, static_cast<int>(rng() % 3), rng);
    auto w = random_field(N, static_cast<int>(rng() % 3), rng);
    auto jac = bracket(bracket(u, v), w) + bracket(bracket(v, w), u) + bracket(bracket(w, u), v);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("lie derivative of the volume form") {
  auto vol = PolyForm::volume(2);
  CHECK(lie_derivative(vf("1 x1 d2", 2), vol).is_zero());
  CHECK(lie_derivative(vf("1 x1 d1", 2), vol) == vol);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    int N = 1 + static_cast<int>(rng() % 3);
    auto v = random_field(N, static_cast<int>(rng() % 3), rng);
    auto volN = PolyForm::volume(N);
    CHECK(lie_derivative(v, volN) == times_poly(divergence(v), volN));
  }
}

TEST_CASE("exterior derivative squares to zero") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    int N = 2 + static_cast<int>(rng() % 2);
    PolyForm w(N);
    for (int a = 1; a <= N; ++a)
      for (const auto& s : monomials_of_degree(N, 2)) w.add_term({a}, s, Rational(coef(rng)));
    CHECK(w.d().d().is_zero());
    CHECK(!w.d().is_zero());  // generic one-forms here are not closed
  }
}

TEST_CASE("lie derivative respects the bracket") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    int N = 2 + static_cast<int>(rng() % 2);
    auto u = random_field(N, static_cast<int>(rng() % 2), rng);
    auto v = random_field(N, static_cast<int>(rng() % 2), rng);
    PolyForm w = N % 2 == 0 ? PolyForm::symplectic(N) : PolyForm::volume(N);
    auto lhs = lie_derivative(u, lie_derivative(v, w)) + Rational(-1) * lie_derivative(v, lie_derivative(u, w));
    CHECK(lhs == lie_derivative(bracket(u, v), w));
  }
}

TEST_CASE("graded basis dimensions match the closed forms") {
  CHECK(basis_graded(AlgebraType::A, 2, 0).size() == 3);
  CHECK(basis_graded(AlgebraType::A, 2, 1).size() == 4);
  CHECK(basis_graded(AlgebraType::C, 2, 1).size() == 4);
  for (int N = 1; N <= 4; ++N)
    for (int n = 0; n <= 3; ++n)
      CHECK(static_cast<long long>(basis_graded(AlgebraType::A, N, n).size()) == vect_dim(AlgebraType::A, N, n));
  for (int N = 2; N <= 4; N += 2)
    for (int n = 0; n <= 3; ++n)
      CHECK(static_cast<long long>(basis_graded(AlgebraType::C, N, n).size()) == vect_dim(AlgebraType::C, N, n));
}

TEST_CASE("graded basis elements satisfy the defining constraint") {
  for (int n = 0; n <= 2; ++n) {
    for (const auto& f : basis_graded(AlgebraType::A, 3, n)) {
      CHECK(divergence(f).empty());
      CHECK(lie_derivative(f, PolyForm::volume(3)).is_zero());
      CHECK(f.degree() == std::optional<int>(n));
    }
    for (const auto& f : basis_graded(AlgebraType::C, 4, n)) {
      CHECK(lie_derivative(f, PolyForm::symplectic(4)).is_zero());
      CHECK(f.degree() == std::optional<int>(n));
    }
  }
}

TEST_CASE("graded basis is deterministic and rejects bad input") {
  auto a = basis_graded(AlgebraType::C, 2, 2);
  auto b = basis_graded(AlgebraType::C, 2, 2);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(to_text(a[i]) == to_text(b[i]));
  CHECK_THROWS_AS(basis_graded(AlgebraType::C, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(basis_graded(AlgebraType::A, 2, -1), std::invalid_argument);
}

TEST_CASE("witness field lies in both degree-1 pieces at N=2") {
  auto g1 = default_g1(2);
  CHECK(to_text(g1) == "1 x1^2 d2");
  for (auto type : {AlgebraType::A, AlgebraType::C}) {
    SpanBuilder span(field_coordinates(g1, 1).size());
    for (const auto& f : basis_graded(type, 2, 1)) span.insert(field_coordinates(f, 1));
    CHECK(span.contains(field_coordinates(g1, 1)));
  }
}

TEST_CASE("bracket closes into the graded pieces") {
  for (auto type : {AlgebraType::A, AlgebraType::C}) {
    for (int n = 0; n <= 2; ++n)
      for (int m = n; m <= 2; ++m) {
        SpanBuilder span(static_cast<Eigen::Index>(monomials_of_degree(2, n + m + 1).size()) * 2);
        for (const auto& f : basis_graded(type, 2, n + m)) span.insert(field_coordinates(f, n + m));
        for (const auto& a : basis_graded(type, 2, n))
          for (const auto& b : basis_graded(type, 2, m)) {
            auto br = bracket(a, b);
            if (br.is_zero()) continue;
            CHECK(span.contains(field_coordinates(br, n + m)));
          }
      }
  }
}

TEST_CASE("generation from the linear piece and one degree-1 element") {
  auto ra = generation_check(AlgebraType::A, 2, 3);
  CHECK(ra.full_rank());
  auto rc = generation_check(AlgebraType::C, 2, 3);
  CHECK(rc.full_rank());
  REQUIRE(ra.rows.size() == rc.rows.size());
  for (size_t i = 0; i < ra.rows.size(); ++i) {
    CHECK(ra.rows[i].dim_target == rc.rows[i].dim_target);
    CHECK(ra.rows[i].dim_achieved == rc.rows[i].dim_achieved);
  }
  CHECK(generation_check(AlgebraType::A, 3, 2).full_rank());

  CHECK_THROWS_AS(generation_check(AlgebraType::A, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(generation_check(AlgebraType::A, 2, 2, PolyVectorField(2)), std::invalid_argument);
  CHECK_THROWS_AS(generation_check(AlgebraType::A, 2, 2, vf("1 x1 d1", 2)), std::invalid_argument);
}

TEST_CASE("linear fields as matrices") {
  auto u = vf("1 x1 d2", 2);
  auto v = vf("1 x2 d1", 2);
  Mat mu = to_linear_matrix(u), mv = to_linear_matrix(v);
  CHECK(mu(0, 1) == Rational(1));
  CHECK(mu(0, 0).is_zero());
  Mat comm = mu * mv - mv * mu;
  CHECK(comm == to_linear_matrix(bracket(u, v)));
  CHECK_THROWS_AS(to_linear_matrix(vf("1 x1^2 d2", 2)), std::invalid_argument);
}

TEST_CASE("text form round-trips") {
  const std::string s = "2 x1^2 d2 - 1 x1 x2 d1";
  CHECK(to_text(parse_vector_field(s, 2)) == s);
  CHECK(to_text(PolyVectorField(2)) == "0");
  CHECK(parse_vector_field("0", 2).is_zero());
  CHECK(parse_vector_field("x1 d2 + x2 d1", 2) == vf("1 x1 d2 + 1 x2 d1", 2));
  CHECK(parse_vector_field("- 3/2 x2 d2", 2) == parse_vector_field("-3/2 x2 d2", 2));

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    int N = 1 + static_cast<int>(rng() % 3);
    auto v = random_field(N, static_cast<int>(rng() % 3), rng);
    CHECK(parse_vector_field(to_text(v), N) == v);
  }

  CHECK_THROWS_AS(parse_vector_field("1 x3 d1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_vector_field("2 x1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_vector_field("1 x1 d0", 2), std::invalid_argument);
}
