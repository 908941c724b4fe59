#include "bgbc/properties.hpp"

#include "bgbc/hermitian.hpp"
#include "bgbc/linalg.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

namespace bgbc {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const std::string& text) {
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

struct GradeSweep {
  int k;
  int l;
  WeightSpacePtr ws;
};

std::vector<GradeSweep> plus_grades(int N, int k_max) {
  std::vector<GradeSweep> out;
  for (int k = 0; k <= k_max; ++k)
    for (int l = -N * (k + 1); l <= N * (k + 1); ++l) {
      auto ws = enumerate_basis(Flavor::plus, N, k, l);
      if (ws->dim() > 0) out.push_back({k, l, ws});
    }
  return out;
}

std::vector<State> plus_states(int N, int k_max) {
  std::vector<State> out;
  for (const auto& g : plus_grades(N, k_max))
    for (const auto& m : g.ws->basis) out.push_back(State::single(Flavor::plus, m));
  return out;
}

std::vector<State> full_states(int N, int k_max, int gamma_bound) {
  std::vector<State> out;
  for (int k = 0; k <= k_max; ++k)
    for (int l = -N * (k + 1); l <= N * (k + 1) + N * gamma_bound; ++l) {
      auto ws = enumerate_basis(Flavor::full, N, k, l, gamma_bound);
      for (const auto& m : ws->basis) out.push_back(State::single(Flavor::full, m));
    }
  return out;
}

std::string grade_tag(int k, int l) {
  std::ostringstream os;
  os << "(k=" << k << ", l=" << l << ")";
  return os.str();
}

// Scalar value of the supercommutator of two single modes.
Rational bracket_scalar(const ModeSymbol& a, const ModeSymbol& b) {
  if (a.dir != b.dir || a.mode + b.mode + 1 != 0) return Rational(0);
  if (a.species == Species::beta && b.species == Species::gamma) return Rational(1);
  if (a.species == Species::gamma && b.species == Species::beta) return Rational(-1);
  if (a.species == Species::b && b.species == Species::c) return Rational(1);
  if (a.species == Species::c && b.species == Species::b) return Rational(1);
  return Rational(0);
}

std::vector<GeneratorName> generator_names(int N) {
  std::vector<GeneratorName> names = {GeneratorName::Q, GeneratorName::L, GeneratorName::J,
                                      GeneratorName::G, GeneratorName::B, GeneratorName::C,
                                      GeneratorName::D, GeneratorName::E};
  if (N % 2 == 0) {
    names.push_back(GeneratorName::Dprime);
    names.push_back(GeneratorName::Eprime);
  }
  return names;
}

PolyVectorField random_field(std::mt19937_64& rng, int N, int degree_max) {
  std::uniform_int_distribution<int> coef(-3, 3);
  PolyVectorField v(N);
  for (int d = 0; d <= degree_max; ++d)
    for (const auto& s : monomials_of_degree(N, d + 1))
      for (int dir = 1; dir <= N; ++dir) v.add_term(s, dir, Rational(coef(rng)));
  return v;
}

PolyVectorField random_degree_one(std::mt19937_64& rng, AlgebraType type, int N) {
  auto basis = basis_graded(type, N, 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (;;) {
    PolyVectorField g(N);
    for (const auto& b : basis) g += Rational(coef(rng)) * b;
    if (!g.is_zero()) return g;
  }
}

// prod_a (gamma^a_(-1))^{m_a} on a full state.
State gamma_mul(const MultiIndex& m, const State& s) {
  State out(Flavor::full, s.N());
  for (const auto& [mon, c] : s.terms()) {
    Monomial t = mon;
    for (std::size_t a = 0; a < m.size(); ++a) t.mutable_gamma()[a] += m[a];
    out.add_term(t, c);
  }
  return out;
}

PolyVectorField diff_field(const PolyVectorField& v, const MultiIndex& m) {
  PolyVectorField out(v.N());
  for (int j = 1; j <= v.N(); ++j) {
    Poly p = v.component(j);
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::uint32_t e = 0; e < m[a]; ++e) p = poly_diff(p, static_cast<int>(a) + 1);
    for (const auto& [s, c] : p) out.add_term(s, j, c);
  }
  return out;
}

Rational multi_factorial(const MultiIndex& m) {
  Rational r(1);
  for (auto e : m) r = r * Rational(factorial(static_cast<int>(e)));
  return r;
}

std::vector<MultiIndex> multi_indices_up_to(int N, int d_max) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= d_max; ++d)
    for (const auto& m : monomials_of_degree(N, d)) out.push_back(m);
  return out;
}

std::optional<PolyVectorField> chosen_g1(const PropertyOptions& opt) {
  if (opt.g1_choice.empty()) return std::nullopt;
  return parse_vector_field(opt.g1_choice, opt.N);
}

using Check = void (*)(const PropertyOptions&, PropertyResult&);

void fail(PropertyResult& r, const std::string& witness) {
  if (!r.passed) return;  // keep the first witness
  r.passed = false;
  r.witness = witness;
}

// fock ----------------------------------------------------------------------

void check_character_product_formula(const PropertyOptions& opt, PropertyResult& r) {
  for (int N = 1; N <= std::min(opt.N, 3); ++N) {
    auto lhs = enumerated_character(N, 5);
    auto rhs = product_character(N, 5);
    if (lhs == rhs) continue;
    for (const auto& [grade, d] : rhs.dims)
      if (lhs.at(grade.first, grade.second) != d) {
        std::ostringstream os;
        os << "N=" << N << " " << grade_tag(grade.first, grade.second) << ": enumerated "
           << lhs.at(grade.first, grade.second) << ", product " << d;
        fail(r, os.str());
        return;
      }
    fail(r, "enumeration carries a grade outside the product expansion, N=" +
                std::to_string(N));
    return;
  }
}

void check_mode_bracket_scalars(const PropertyOptions& opt, PropertyResult& r) {
  const int N = opt.N;
  std::vector<ModeSymbol> symbols;
  for (int sp = 0; sp < 4; ++sp)
    for (int dir = 1; dir <= N; ++dir)
      for (int mode = -2; mode <= 2; ++mode)
        symbols.push_back({static_cast<Species>(sp), dir, mode});
  for (const auto& s : plus_states(N, std::min(opt.k_max, 3))) {
    const State sf = s.as_full();
    for (const auto& a : symbols)
      for (const auto& b : symbols) {
        State lhs = apply_mode(a, apply_mode(b, sf));
        State swapped = apply_mode(b, apply_mode(a, sf));
        const bool both_odd = a.is_odd() && b.is_odd();
        lhs += (both_odd ? Rational(1) : Rational(-1)) * swapped;
        State rhs = bracket_scalar(a, b) * sf;
        if (lhs == rhs) continue;
        std::ostringstream os;
        os << "[" << species_letter(a.species) << a.dir << "_(" << a.mode << "), "
           << species_letter(b.species) << b.dir << "_(" << b.mode << ")] on " << to_text(s);
        fail(r, os.str());
        return;
      }
  }
}

void check_mode_grade_shift(const PropertyOptions& opt, PropertyResult& r) {
  const int N = opt.N;
  for (const auto& s : plus_states(N, std::min(opt.k_max, 3))) {
    const State sf = s.as_full();
    const Grade g0 = *grade_of(sf);
    for (int sp = 0; sp < 4; ++sp)
      for (int dir = 1; dir <= N; ++dir)
        for (int mode = -2; mode <= 2; ++mode) {
          const ModeSymbol m{static_cast<Species>(sp), dir, mode};
          State out = apply_mode(m, sf);
          if (out.is_zero()) continue;
          const Grade g = *grade_of(out);
          if (g.weight == g0.weight + m.weight_shift() && g.charge == g0.charge + m.charge())
            continue;
          fail(r, "grade shift of " + std::string(1, species_letter(m.species)) +
                      std::to_string(m.dir) + "_(" + std::to_string(m.mode) + ") on " +
                      to_text(s));
          return;
        }
  }
}

void check_translate_weight_shift(const PropertyOptions& opt, PropertyResult& r) {
  for (const auto& s : plus_states(opt.N, std::min(opt.k_max + 1, 4))) {
    State out = translate(s);
    if (out.is_zero()) continue;
    const Grade g0 = *grade_of(s);
    const Grade g = *grade_of(out);
    if (g.weight == g0.weight + 1 && g.charge == g0.charge) continue;
    fail(r, "translate on " + to_text(s));
    return;
  }
}

// vertex --------------------------------------------------------------------

void check_creation_identity(const PropertyOptions& opt, PropertyResult& r) {
  for (int N = 1; N <= std::min(opt.N, 2); ++N) {
    const State vac = State::vacuum(Flavor::plus, N);
    for (const auto& a : plus_states(N, std::min(opt.k_max, 3)))
      if (nth_product(a, -1, vac) != a) {
        fail(r, "a_(-1)|0> != a for a = " + to_text(a) + ", N=" + std::to_string(N));
        return;
      }
  }
}

void check_commutator_formula(const PropertyOptions& opt, PropertyResult& r) {
  const int N = 2;  // the ten distinguished states live here
  const auto names = generator_names(N);
  std::vector<State> gens;
  for (auto g : names) gens.push_back(generator_state(g, N));
  auto pool = plus_states(N, std::min(opt.k_max, 2));
  std::mt19937_64 rng(opt.seed * 2654435761ULL + 1);
  std::uniform_int_distribution<std::size_t> pick_gen(0, gens.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_state(0, pool.size() - 1);
  std::uniform_int_distribution<int> pick_mode(-2, 2);
  auto parity_of = [](const State& s) { return s.terms().begin()->first.parity(); };
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t ia = pick_gen(rng);
    const std::size_t ib = pick_gen(rng);
    const State& a = gens[ia];
    const State& b = gens[ib];
    const State& c = pool[pick_state(rng)];
    const long long m = pick_mode(rng);
    const long long n = pick_mode(rng);
    const bool both_odd = parity_of(a) == 1 && parity_of(b) == 1;
    State lhs = nth_product(a, m, nth_product(b, n, c));
    State swapped = nth_product(b, n, nth_product(a, m, c));
    lhs += (both_odd ? Rational(1) : Rational(-1)) * swapped;
    State rhs(Flavor::plus, N);
    const int imax = grade_of(a)->weight + grade_of(b)->weight;
    for (int i = 0; i <= imax; ++i) {
      State inner = nth_product(a, i, b);
      if (inner.is_zero()) continue;
      State term = nth_product(inner, m + n - i, c);
      rhs += Rational(binom(m, i)) * term;
    }
    if (lhs == rhs) continue;
    std::ostringstream os;
    os << "trial " << trial << ": [" << generator_letter(names[ia]) << "_(" << m << "), "
       << generator_letter(names[ib]) << "_(" << n << ")] on " << to_text(c);
    fail(r, os.str());
    return;
  }
}

void check_derivative_compatibility(const PropertyOptions& opt, PropertyResult& r) {
  const int N = 2;
  std::vector<State> gens;
  for (auto g : generator_names(N)) gens.push_back(generator_state(g, N));
  auto pool = plus_states(N, std::min(opt.k_max, 2));
  for (const auto& a : gens)
    for (const auto& b : pool)
      for (long long n = -2; n <= 3; ++n) {
        State lhs = nth_product(translate(a), n, b);
        State rhs = Rational(-n) * nth_product(a, n - 1, b);
        if (lhs == rhs) continue;
        std::ostringstream os;
        os << "(Ta)_(" << n << ") on " << to_text(b);
        fail(r, os.str());
        return;
      }
}

void check_spectral_diagonal(const PropertyOptions& opt, PropertyResult& r) {
  const int N = opt.N;
  const State L = generator_state(GeneratorName::L, N);
  const State J = generator_state(GeneratorName::J, N);
  for (const auto& g : plus_grades(N, std::min(opt.k_max, 3))) {
    Mat l_mat = to_dense(mode_matrix(L, 1, g.ws).mat);
    Mat j_mat = to_dense(mode_matrix(J, 0, g.ws).mat);
    for (Eigen::Index i = 0; i < g.ws->dim(); ++i)
      for (Eigen::Index j = 0; j < g.ws->dim(); ++j) {
        const Rational le = i == j ? Rational(g.k) : Rational(0);
        const Rational je = i == j ? Rational(g.l) : Rational(0);
        if (l_mat(i, j) == le && j_mat(i, j) == je) continue;
        fail(r, "spectrum off at " + grade_tag(g.k, g.l));
        return;
      }
  }
}

// vecfields -----------------------------------------------------------------

void check_jacobi_random_triples(const PropertyOptions& opt, PropertyResult& r) {
  const int N = std::min(opt.N, 3);
  std::mt19937_64 rng(opt.seed);
  std::uint64_t digest = 14695981039346656037ULL;
  for (int trial = 0; trial < 50; ++trial) {
    PolyVectorField u = random_field(rng, N, 2);
    PolyVectorField v = random_field(rng, N, 2);
    PolyVectorField w = random_field(rng, N, 2);
    digest = fnv1a(digest, to_text(u));
    digest = fnv1a(digest, to_text(v));
    digest = fnv1a(digest, to_text(w));
    PolyVectorField total = bracket(bracket(u, v), w) + bracket(bracket(v, w), u) +
                            bracket(bracket(w, u), v);
    if (total.is_zero()) continue;
    fail(r, "jacobiator nonzero on trial " + std::to_string(trial));
    return;
  }
  if (r.passed) r.witness = "samples " + hex64(digest);
}

void check_bracket_closure(const PropertyOptions& opt, PropertyResult& r) {
  std::vector<std::pair<AlgebraType, int>> cases = {{AlgebraType::A, std::min(opt.N, 3)}};
  if (opt.N % 2 == 0) cases.push_back({AlgebraType::C, std::min(opt.N, 4)});
  for (const auto& [type, N] : cases)
    for (int n = 0; n <= 2; ++n)
      for (int m = n; n + m <= 3; ++m) {
        auto target = basis_graded(type, N, n + m);
        if (target.empty()) continue;
        SpanBuilder span(field_coordinates(target.front(), n + m).size());
        for (const auto& t : target) span.insert(field_coordinates(t, n + m));
        for (const auto& u : basis_graded(type, N, n))
          for (const auto& v : basis_graded(type, N, m)) {
            PolyVectorField w = bracket(u, v);
            if (w.is_zero()) continue;
            if (span.contains(field_coordinates(w, n + m))) continue;
            std::ostringstream os;
            os << "type " << algebra_type_letter(type) << " bracket of degrees " << n
               << ", " << m << " leaves the graded span";
            fail(r, os.str());
            return;
          }
      }
}

void check_vect_dim_formula_a(const PropertyOptions&, PropertyResult& r) {
  for (int N = 1; N <= 4; ++N)
    for (int n = 0; n <= 3; ++n) {
      const long long expect = N * binom(N + n, n + 1) - binom(N + n - 1, n);
      const long long dim = vect_dim(AlgebraType::A, N, n);
      const long long enumerated =
          static_cast<long long>(basis_graded(AlgebraType::A, N, n).size());
      if (dim == expect && enumerated == expect) continue;
      std::ostringstream os;
      os << "A N=" << N << " n=" << n << ": formula " << expect << ", vect_dim " << dim
         << ", basis " << enumerated;
      fail(r, os.str());
      return;
    }
}

void check_vect_dim_formula_c(const PropertyOptions&, PropertyResult& r) {
  for (int N = 2; N <= 4; N += 2)
    for (int n = 0; n <= 3; ++n) {
      const long long expect = binom(N + n + 1, n + 2);
      const long long dim = vect_dim(AlgebraType::C, N, n);
      const long long enumerated =
          static_cast<long long>(basis_graded(AlgebraType::C, N, n).size());
      if (dim == expect && enumerated == expect) continue;
      std::ostringstream os;
      os << "C N=" << N << " n=" << n << ": formula " << expect << ", vect_dim " << dim
         << ", basis " << enumerated;
      fail(r, os.str());
      return;
    }
}

// action --------------------------------------------------------------------

void check_lplus_grade_preservation(const PropertyOptions& opt, PropertyResult& r) {
  const int N = opt.N;
  std::vector<PolyVectorField> fields;
  for (int d = 0; d <= 2; ++d)
    for (const auto& v : basis_graded(AlgebraType::A, N, d)) fields.push_back(v);
  for (const auto& s : plus_states(N, std::min(opt.k_max, 3))) {
    const Grade g0 = *grade_of(s);
    for (const auto& v : fields) {
      State out = act_Lplus(v, s);
      if (out.is_zero()) continue;
      const Grade g = *grade_of(out);
      if (g == g0) continue;
      fail(r, "L+(" + to_text(v) + ") moves the grade of " + to_text(s));
      return;
    }
  }
}

void check_lie_homomorphism(const PropertyOptions& opt, PropertyResult& r) {
  const int N = 2;
  std::vector<PolyVectorField> fields;
  for (int d = 0; d <= 1; ++d)
    for (const auto& v : basis_graded(AlgebraType::A, N, d)) fields.push_back(v);
  auto pool = full_states(N, std::min(opt.k_max, 2), 1);
  for (const auto& u : fields)
    for (const auto& v : fields) {
      const PolyVectorField uv = bracket(u, v);
      for (const auto& s : pool) {
        State lhs = act_L(u, act_L(v, s)) - act_L(v, act_L(u, s));
        State rhs = uv.is_zero() ? State(Flavor::full, N) : act_L(uv, s);
        if (lhs == rhs) continue;
        fail(r, "[L(" + to_text(u) + "), L(" + to_text(v) + ")] on " + to_text(s));
        return;
      }
    }
}

void check_gamma_expansion(const PropertyOptions& opt, PropertyResult& r) {
  const int N = 2;
  const int gamma_bound = opt.k_max >= 2 ? 2 : 1;
  std::vector<PolyVectorField> fields;
  for (int d = 0; d <= 1; ++d)
    for (const auto& v : basis_graded(AlgebraType::A, N, d)) fields.push_back(v);
  auto pool = full_states(N, std::min(opt.k_max, 2), gamma_bound);
  const auto indices = multi_indices_up_to(N, 2);
  for (const auto& v : fields)
    for (const auto& s : pool) {
      State expand(Flavor::full, N);
      State invert(Flavor::full, N);
      for (const auto& m : indices) {
        PolyVectorField dv = diff_field(v, m);
        if (dv.is_zero()) continue;
        const Rational inv_fact = Rational(1) / multi_factorial(m);
        expand += inv_fact * gamma_mul(m, act_Lplus(dv, s));
        const int parity = total_degree(m) % 2 == 0 ? 1 : -1;
        invert += Rational(parity) * inv_fact * gamma_mul(m, act_L(dv, s));
      }
      if (act_L(v, s) != expand) {
        fail(r, "gamma expansion of L(" + to_text(v) + ") on " + to_text(s));
        return;
      }
      if (act_Lplus(v, s) != invert) {
        fail(r, "inverse expansion of L+(" + to_text(v) + ") on " + to_text(s));
        return;
      }
    }
}

void check_top_degree_annihilation(const PropertyOptions& opt, PropertyResult& r) {
  const int N = opt.N;
  const auto g0_basis = basis_graded(opt.type, N, 0);
  const auto g1 = chosen_g1(opt);
  for (int k = 0; k <= opt.k_max; ++k)
    for (int l = -N * (k + 1); l <= N * (k + 1); ++l) {
      auto rep = invariant_space(opt.type, N, k, l, g1);
      for (const auto& a : rep.full_basis) {
        const State top = top_sw_component(a);
        for (const auto& g : g0_basis) {
          if (act_arc({g, 1}, top).is_zero()) continue;
          fail(r, "top of " + to_text(a) + " at " + grade_tag(k, l) + " survives " +
                      to_text(g) + " t");
          return;
        }
      }
    }
}

// hermitian -----------------------------------------------------------------

void check_gram_positive(const PropertyOptions& opt, PropertyResult& r) {
  for (int N = 1; N <= opt.N; ++N)
    for (const auto& g : plus_grades(N, std::min(opt.k_max + 1, 4))) {
      const Vec diag = gram_diagonal(g.ws);
      for (Eigen::Index i = 0; i < diag.size(); ++i)
        if (!(diag(i) > Rational(0))) {
          fail(r, "gram entry <= 0 at " + grade_tag(g.k, g.l) + ", N=" + std::to_string(N));
          return;
        }
    }
}

void check_single_mode_adjunctions(const PropertyOptions& opt, PropertyResult& r) {
  auto res = single_mode_adjunction_check(opt.N, std::min(opt.k_max, 3));
  if (!res) fail(r, res.witness);
}

void check_adjoint_families(const PropertyOptions& opt, PropertyResult& r) {
  std::vector<AdjointFamily> fams = {AdjointFamily::Q, AdjointFamily::J, AdjointFamily::L,
                                     AdjointFamily::D};
  if (opt.N % 2 == 0) fams.push_back(AdjointFamily::Dprime);
  for (auto fam : fams) {
    auto res = adjoint_check(fam, opt.N, std::min(opt.k_max, 3), opt.inject_adjoint_sign_flip);
    if (!res) {
      fail(r, res.witness);
      return;
    }
  }
}

// invariants ----------------------------------------------------------------

void check_reduction_consistency(const PropertyOptions& opt, PropertyResult& r) {
  const int N = opt.N;
  const auto g1 = chosen_g1(opt);
  std::mt19937_64 rng(opt.seed + 7);
  std::vector<PolyVectorField> alternates;
  for (int i = 0; i < 5; ++i) alternates.push_back(random_degree_one(rng, opt.type, N));
  for (int k = 0; k <= std::min(opt.k_max, 3); ++k)
    for (int l = -N * (k + 1); l <= N * (k + 1); ++l) {
      auto rep = invariant_space(opt.type, N, k, l, g1, true);
      if (rep.dim_cross_check && *rep.dim_cross_check != rep.dim_full) {
        std::ostringstream os;
        os << grade_tag(k, l) << ": single-witness kernel " << rep.dim_full
           << ", full intersection " << *rep.dim_cross_check;
        fail(r, os.str());
        return;
      }
      for (const auto& alt : alternates) {
        auto other = invariant_space(opt.type, N, k, l, alt);
        if (other.dim_full == rep.dim_full) continue;
        std::ostringstream os;
        os << grade_tag(k, l) << ": dimension depends on the degree-1 witness ("
           << to_text(alt) << ")";
        fail(r, os.str());
        return;
      }
    }
}

void check_invariants_match_oracle(const PropertyOptions& opt, PropertyResult& r) {
  const int N = opt.N;
  const auto g1 = chosen_g1(opt);
  const OracleSpan& span = oracle_span(opt.type, N, opt.k_max);
  for (int k = 0; k <= opt.k_max; ++k)
    for (int l = -N * (k + 1); l <= N * (k + 1); ++l) {
      auto rep = invariant_space(opt.type, N, k, l, g1);
      if (rep.dim_full != span.dim(k, l)) {
        std::ostringstream os;
        os << grade_tag(k, l) << ": invariants " << rep.dim_full << ", span "
           << span.dim(k, l);
        fail(r, os.str());
        return;
      }
      if (rep.dim_full == 0) continue;
      auto ws = enumerate_basis(Flavor::plus, N, k, l);
      SpanBuilder kernel(ws->dim());
      for (const auto& b : rep.full_basis) kernel.insert(ws->coords(b));
      for (const auto& v : span.basis_states(k, l))
        if (!kernel.contains(ws->coords(v))) {
          fail(r, grade_tag(k, l) + ": span vector outside the invariant kernel");
          return;
        }
    }
}

void check_generator_annihilation(const PropertyOptions&, PropertyResult& r) {
  const int N = 2;
  std::vector<PolyVectorField> fields;
  for (int d = 0; d <= 1; ++d)
    for (const auto& v : basis_graded(AlgebraType::A, N, d)) fields.push_back(v);
  for (auto name : generator_set('A')) {
    const State s = generator_state(name, N);
    for (const auto& v : fields)
      if (!act_Lplus(v, s).is_zero()) {
        fail(r, "L+(" + to_text(v) + ") does not kill " + generator_letter(name));
        return;
      }
  }
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const PropertyOptions& opt) {
  const std::vector<std::pair<const char*, Check>> checks = {
      {"character_product_formula", check_character_product_formula},
      {"mode_bracket_scalars", check_mode_bracket_scalars},
      {"mode_grade_shift", check_mode_grade_shift},
      {"translate_weight_shift", check_translate_weight_shift},
      {"creation_identity", check_creation_identity},
      {"commutator_formula", check_commutator_formula},
      {"derivative_compatibility", check_derivative_compatibility},
      {"spectral_diagonal", check_spectral_diagonal},
      {"jacobi_random_triples", check_jacobi_random_triples},
      {"bracket_closure", check_bracket_closure},
      {"vect_dim_formula_a", check_vect_dim_formula_a},
      {"vect_dim_formula_c", check_vect_dim_formula_c},
      {"lplus_grade_preservation", check_lplus_grade_preservation},
      {"lie_homomorphism", check_lie_homomorphism},
      {"gamma_expansion", check_gamma_expansion},
      {"top_degree_annihilation", check_top_degree_annihilation},
      {"gram_positive", check_gram_positive},
      {"single_mode_adjunctions", check_single_mode_adjunctions},
      {"adjoint_check", check_adjoint_families},
      {"reduction_consistency", check_reduction_consistency},
      {"invariants_match_oracle", check_invariants_match_oracle},
      {"generator_annihilation", check_generator_annihilation},
  };
  std::vector<PropertyResult> out;
  out.reserve(checks.size());
  for (const auto& [name, fn] : checks) {
    PropertyResult r;
    r.name = name;
    fn(opt, r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace bgbc
