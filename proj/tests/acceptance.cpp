// Acceptance gate: one line per criterion, exit code counts failures.

#include "bgbc/hermitian.hpp"
#include "bgbc/invariants.hpp"
#include "bgbc/linalg.hpp"

#include "json.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace bgbc;

namespace {

std::string run_cli(const std::string& args, int& exit_code) {
  static int counter = 0;
  const std::string path = "/tmp/bgbc_accept_" + std::to_string(counter++) + ".out";
  const std::string cmd = std::string(BGBC_CLI_PATH) + " " + args + " > " + path;
  const int rc = std::system(cmd.c_str());
  exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  std::remove(path.c_str());
  return os.str();
}

struct GradeList {
  std::vector<std::pair<int, int>> grades;
};

GradeList sweep(int N, int k_max) {
  GradeList out;
  for (int k = 0; k <= k_max; ++k)
    for (int l = -N * (k + 1); l <= N * (k + 1); ++l) out.grades.push_back({k, l});
  return out;
}

// Projection to the gamma-free part, landing back in the plus flavor.
State proj_plus(const State& s) {
  State kept(Flavor::full, s.N());
  for (const auto& [mon, c] : s.terms())
    if (mon.gamma_degree() == 0) kept.add_term(mon, c);
  return kept.as_plus();
}

PolyVectorField random_degree_one(std::mt19937_64& rng, int N) {
  auto basis = basis_graded(AlgebraType::A, N, 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (;;) {
    PolyVectorField g(N);
    for (const auto& b : basis) g += Rational(coef(rng)) * b;
    if (!g.is_zero()) return g;
  }
}

bool criterion_1(std::string& note) {
  const auto t0 = std::chrono::steady_clock::now();
  const OracleSpan& span = oracle_span(AlgebraType::A, 2, 3);
  for (const auto& [k, l] : sweep(2, 3).grades) {
    const auto rep = invariant_space(AlgebraType::A, 2, k, l);
    if (rep.dim_full != span.dim(k, l)) {
      note = "dimension mismatch at (" + std::to_string(k) + ", " + std::to_string(l) +
             ")";
      return false;
    }
    if (rep.dim_full == 0) continue;
    const auto ws = enumerate_basis(Flavor::plus, 2, k, l);
    SpanBuilder kernel(ws->dim());
    for (const auto& v : rep.full_basis) kernel.insert(ws->coords(v));
    for (const auto& v : span.basis_states(k, l))
      if (!kernel.contains(ws->coords(v))) {
        note = "span vector escapes the kernel at (" + std::to_string(k) + ", " +
               std::to_string(l) + ")";
        return false;
      }
  }
  const auto t1 = std::chrono::steady_clock::now();
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(t1 - t0).count();
  note = "elapsed " + std::to_string(secs) + " s";
  return true;
}

bool criterion_2(std::string& note) {
  std::mt19937_64 rng(12345);
  std::vector<PolyVectorField> alternates;
  for (int i = 0; i < 5; ++i) alternates.push_back(random_degree_one(rng, 2));
  for (const auto& [k, l] : sweep(2, 3).grades) {
    const auto rep = invariant_space(AlgebraType::A, 2, k, l, std::nullopt, true);
    if (!rep.dim_cross_check || *rep.dim_cross_check != rep.dim_full) {
      note = "single-witness vs full-intersection split at (" + std::to_string(k) +
             ", " + std::to_string(l) + ")";
      return false;
    }
    for (const auto& alt : alternates)
      if (invariant_space(AlgebraType::A, 2, k, l, alt).dim_full != rep.dim_full) {
        note = "dimension depends on the witness at (" + std::to_string(k) + ", " +
               std::to_string(l) + ")";
        return false;
      }
  }
  return true;
}

bool criterion_3(std::string& note) {
  for (auto fam : {AdjointFamily::Q, AdjointFamily::J, AdjointFamily::L,
                   AdjointFamily::D, AdjointFamily::Dprime}) {
    const auto res = adjoint_check(fam, 2, 3);
    if (!res) {
      note = res.witness;
      return false;
    }
  }
  const auto single = single_mode_adjunction_check(2, 3);
  if (!single) {
    note = single.witness;
    return false;
  }
  for (const auto& [k, l] : sweep(2, 3).grades) {
    const auto ws = enumerate_basis(Flavor::plus, 2, k, l);
    const Vec diag = gram_diagonal(ws);
    for (Eigen::Index i = 0; i < diag.size(); ++i)
      if (!(diag(i) > Rational(0))) {
        note = "gram not positive at (" + std::to_string(k) + ", " + std::to_string(l) +
               ")";
        return false;
      }
  }
  return true;
}

bool criterion_4(std::string& note) {
  const int N = 2;
  std::vector<PolyVectorField> fields;
  for (int d = 0; d <= 1; ++d)
    for (const auto& v : basis_graded(AlgebraType::A, N, d)) fields.push_back(v);
  std::vector<State> pool;
  for (int k = 0; k <= 2; ++k)
    for (int l = -N * (k + 1); l <= N * (k + 1); ++l) {
      const auto ws = enumerate_basis(Flavor::full, N, k, l, 2);
      for (const auto& m : ws->basis) pool.push_back(State::single(Flavor::full, m));
    }
  // bracket identity, column by column over every basis vector
  for (const auto& u : fields)
    for (const auto& v : fields) {
      const PolyVectorField uv = bracket(u, v);
      for (const auto& s : pool) {
        State lhs = act_L(u, act_L(v, s)) - act_L(v, act_L(u, s));
        State rhs = uv.is_zero() ? State(Flavor::full, N) : act_L(uv, s);
        if (lhs == rhs) continue;
        note = "[L(" + to_text(u) + "), L(" + to_text(v) + ")] fails on " + to_text(s);
        return false;
      }
    }
  // gamma expansion of the full action in terms of the plus action
  std::vector<MultiIndex> indices;
  for (int d = 0; d <= 2; ++d)
    for (const auto& m : monomials_of_degree(N, d)) indices.push_back(m);
  auto gamma_mul = [](const MultiIndex& m, const State& s) {
    State out(Flavor::full, s.N());
    for (const auto& [mon, c] : s.terms()) {
      Monomial t = mon;
      for (std::size_t a = 0; a < m.size(); ++a) t.mutable_gamma()[a] += m[a];
      out.add_term(t, c);
    }
    return out;
  };
  auto diff_field = [](const PolyVectorField& v, const MultiIndex& m) {
    PolyVectorField out(v.N());
    for (int j = 1; j <= v.N(); ++j) {
      Poly p = v.component(j);
      for (std::size_t a = 0; a < m.size(); ++a)
        for (std::uint32_t e = 0; e < m[a]; ++e) p = poly_diff(p, static_cast<int>(a) + 1);
      for (const auto& [s, c] : p) out.add_term(s, j, c);
    }
    return out;
  };
  auto multi_factorial = [](const MultiIndex& m) {
    Rational r(1);
    for (auto e : m) r = r * Rational(factorial(static_cast<int>(e)));
    return r;
  };
  for (const auto& v : fields)
    for (const auto& s : pool) {
      State expand(Flavor::full, N);
      State invert(Flavor::full, N);
      for (const auto& m : indices) {
        const PolyVectorField dv = diff_field(v, m);
        if (dv.is_zero()) continue;
        const Rational inv_fact = Rational(1) / multi_factorial(m);
        expand += inv_fact * gamma_mul(m, act_Lplus(dv, s));
        const int parity = total_degree(m) % 2 == 0 ? 1 : -1;
        invert += Rational(parity) * inv_fact * gamma_mul(m, act_L(dv, s));
      }
      if (act_L(v, s) != expand) {
        note = "expansion of L(" + to_text(v) + ") fails on " + to_text(s);
        return false;
      }
      if (act_Lplus(v, s) != invert) {
        note = "inverse expansion of L+(" + to_text(v) + ") fails on " + to_text(s);
        return false;
      }
    }
  // the plus action is the gamma-free part of the full action
  for (const auto& v : fields)
    for (int k = 0; k <= 2; ++k)
      for (int l = -N * (k + 1); l <= N * (k + 1); ++l) {
        const auto ws = enumerate_basis(Flavor::plus, N, k, l);
        for (const auto& m : ws->basis) {
          const State a = State::single(Flavor::plus, m);
          if (proj_plus(act_L(v, a.as_full())) == act_Lplus(v, a)) continue;
          note = "gamma-free part of L(" + to_text(v) + ") fails on " + to_text(a);
          return false;
        }
      }
  return true;
}

bool criterion_5(std::string& note) {
  for (int N = 1; N <= 3; ++N)
    if (!(enumerated_character(N, 5) == product_character(N, 5))) {
      note = "character mismatch at N=" + std::to_string(N);
      return false;
    }
  return true;
}

bool criterion_6(std::string& note) {
  for (int N = 1; N <= 4; ++N)
    for (int n = 0; n <= 3; ++n) {
      const long long expect = N * binom(N + n, n + 1) - binom(N + n - 1, n);
      if (vect_dim(AlgebraType::A, N, n) != expect ||
          static_cast<long long>(basis_graded(AlgebraType::A, N, n).size()) != expect) {
        note = "type A dims off at N=" + std::to_string(N) + ", n=" + std::to_string(n);
        return false;
      }
    }
  for (int N = 2; N <= 4; N += 2)
    for (int n = 0; n <= 3; ++n) {
      const long long expect = binom(N + n + 1, n + 2);
      if (vect_dim(AlgebraType::C, N, n) != expect ||
          static_cast<long long>(basis_graded(AlgebraType::C, N, n).size()) != expect) {
        note = "type C dims off at N=" + std::to_string(N) + ", n=" + std::to_string(n);
        return false;
      }
    }
  // N = 1 has no degree-1 element to generate with; the graded pieces are
  // all zero there, which the formula loop above already pinned down.
  for (int N = 2; N <= 4; ++N)
    if (!generation_check(AlgebraType::A, N, 3).full_rank()) {
      note = "type A generation fails at N=" + std::to_string(N);
      return false;
    }
  for (int N = 2; N <= 4; N += 2)
    if (!generation_check(AlgebraType::C, N, 3).full_rank()) {
      note = "type C generation fails at N=" + std::to_string(N);
      return false;
    }
  return true;
}

bool criterion_7(std::string& note) {
  const auto g0_basis = basis_graded(AlgebraType::A, 2, 0);
  for (const auto& [k, l] : sweep(2, 3).grades) {
    const auto rep = invariant_space(AlgebraType::A, 2, k, l);
    for (const auto& a : rep.full_basis) {
      const State top = top_sw_component(a);
      for (const auto& g : g0_basis)
        if (!act_arc({g, 1}, top).is_zero()) {
          note = "top component survives " + to_text(g) + " t at (" + std::to_string(k) +
                 ", " + std::to_string(l) + ")";
          return false;
        }
    }
  }
  return true;
}

bool criterion_8(std::string& note) {
  const auto report = conjecture_evidence(3, 2, AlgebraType::A);
  nlohmann::ordered_json doc;
  doc["N"] = report.N;
  doc["k_max"] = report.k_max;
  doc["g1"] = report.g1_text;
  doc["containment_ok"] = report.containment_ok;
  doc["rows"] = nlohmann::ordered_json::array();
  int gaps = 0;
  for (const auto& row : report.rows) {
    nlohmann::ordered_json entry;
    entry["k"] = row.k;
    entry["l"] = row.l;
    entry["dim_invariants"] = row.dim_invariants;
    entry["dim_oracle"] = row.dim_oracle;
    entry["status"] = row.match ? "MATCH" : "GAP";
    if (!row.match) {
      ++gaps;
      entry["witnesses"] = nlohmann::ordered_json::array();
      for (const auto& w : row.witnesses) entry["witnesses"].push_back(to_text(w));
    }
    doc["rows"].push_back(entry);
  }
  const std::string path = "conjecture_evidence_n3.json";
  std::ofstream out(path);
  out << doc.dump(2) << "\n";
  out.close();
  std::ostringstream os;
  os << report.rows.size() << " grades, " << gaps << " gaps, archived to " << path;
  note = os.str();
  return report.containment_ok;
}

bool criterion_9(std::string& note) {
  int e1 = 0, e2 = 0;
  const std::string flags = "invariants --n 2 --kmax 2 --format json";
  const std::string a = run_cli(flags + " --threads 1", e1);
  const std::string b = run_cli(flags + " --threads 4", e2);
  if (e1 != 0 || e2 != 0) {
    note = "nonzero exit from the dispatcher";
    return false;
  }
  if (a != b) {
    note = "outputs differ between thread counts";
    return false;
  }
  note = std::to_string(a.size()) + " bytes each";
  return true;
}

}  // namespace

int main() {
  struct Entry {
    const char* desc;
    std::function<bool(std::string&)> fn;
  };
  const std::vector<Entry> criteria = {
      {"invariants match the generated span with containment, N=2, k<=3", criterion_1},
      {"reduction is witness independent, N=2, k<=3", criterion_2},
      {"adjunction relations and positive gram form, N=2, k<=3", criterion_3},
      {"full action is a Lie homomorphism compatible with the plus action", criterion_4},
      {"graded character equals the free-field product to q^5, N<=3", criterion_5},
      {"vector-field dimension formulas and generation, N<=4, n<=3", criterion_6},
      {"top filtration component of every invariant is killed by g t", criterion_7},
      {"N=3 span containment holds; match/gap table archived", criterion_8},
      {"dispatcher output is byte-identical across thread counts", criterion_9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    bool ok = false;
    try {
      ok = criteria[i].fn(note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << (i + 1) << ": " << (ok ? "PASS" : "FAIL") << " "
              << criteria[i].desc;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << "\n" << std::flush;
    if (!ok) ++failures;
  }
  return failures;
}
