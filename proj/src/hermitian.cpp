#include "bgbc/hermitian.hpp"

#include <sstream>
#include <stdexcept>

namespace bgbc {

Rational mode_norm_sq(const ModeSymbol& m) {
  if (!m.is_creation()) throw std::invalid_argument("mode_norm_sq: not a creation mode");
  switch (m.species) {
    case Species::beta:
      return Rational(-m.mode);
    case Species::gamma:
      return Rational(1, -m.mode - 1);
    default:
      return Rational(1);
  }
}

Rational gram_norm_sq(const Monomial& m) {
  if (m.gamma_degree() != 0)
    throw std::invalid_argument("gram_norm_sq: gamma_(-1) factors carry no Hermitian norm");
  Rational out(1);
  const auto& word = m.word();
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    const auto mu = static_cast<int>(j - i);
    const Rational base = mode_norm_sq(word[i]);
    Rational pw(1);
    for (int p = 0; p < mu; ++p) pw *= base;
    out *= Rational(factorial(mu)) * pw;
    i = j;
  }
  return out;
}

Vec gram_diagonal(const WeightSpacePtr& ws) {
  if (ws->flavor != Flavor::plus)
    throw std::invalid_argument("the Hermitian form lives on the plus flavor");
  Vec d = Vec::Constant(ws->dim(), Rational(0));
  for (Eigen::Index i = 0; i < ws->dim(); ++i)
    d[i] = gram_norm_sq(ws->basis[static_cast<std::size_t>(i)]);
  return d;
}

Rational inner(const State& a, const State& b) {
  if (a.flavor() != Flavor::plus || b.flavor() != Flavor::plus)
    throw std::invalid_argument("the Hermitian form lives on the plus flavor");
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& large = a.terms().size() <= b.terms().size() ? b : a;
  Rational out(0);
  for (const auto& [m, c] : small.terms()) {
    auto it = large.terms().find(m);
    if (it == large.terms().end()) continue;
    out += c * it->second * gram_norm_sq(m);
  }
  return out;
}

AdjointFamily adjoint_family_from_letter(const std::string& name) {
  if (name == "Q") return AdjointFamily::Q;
  if (name == "J") return AdjointFamily::J;
  if (name == "L") return AdjointFamily::L;
  if (name == "D") return AdjointFamily::D;
  if (name == "Dp") return AdjointFamily::Dprime;
  throw std::invalid_argument("unknown adjoint family: " + name);
}

namespace {

// Weighted-transpose comparison: lhs(j,i) * g_dst[j] vs g_src[i] * rhs(i,j).
bool check_pair(const SparseLinearMap& op, const SpMat& adj, const Vec& g_src, const Vec& g_dst,
                const std::string& label, std::string* witness) {
  Mat lhs = to_dense(op.mat);
  Mat rhs = to_dense(adj);
  for (Eigen::Index i = 0; i < lhs.cols(); ++i)
    for (Eigen::Index j = 0; j < lhs.rows(); ++j) {
      const Rational l = lhs(j, i) * g_dst[j];
      const Rational r = g_src[i] * rhs(i, j);
      if (l != r) {
        std::ostringstream os;
        os << label << ": entry (" << i << "," << j << ") " << to_string(l) << " != " << to_string(r);
        *witness = os.str();
        return false;
      }
    }
  return true;
}

// Charges with a nonempty space at some weight <= k_max.
std::vector<int> charge_band(int N, int k_max) {
  std::vector<int> out;
  for (int l = -(N * (k_max + 1) + N); l <= N * (k_max + 1) + N; ++l) out.push_back(l);
  return out;
}

struct FamilyOp {
  State state;
  long long n;
};

}  // namespace

AdjointCheckResult adjoint_check(AdjointFamily fam, int N, int k_max, bool flip_sign) {
  AdjointCheckResult res;
  const Rational flip = flip_sign ? Rational(-1) : Rational(1);

  State op_state, adj_state, extra_state;
  std::string label;
  switch (fam) {
    case AdjointFamily::Q:
      op_state = generator_state(GeneratorName::Q, N);
      adj_state = generator_state(GeneratorName::G, N);
      label = "Q";
      break;
    case AdjointFamily::J:
      op_state = generator_state(GeneratorName::J, N);
      adj_state = op_state;
      label = "J";
      break;
    case AdjointFamily::L:
      op_state = generator_state(GeneratorName::L, N);
      adj_state = op_state;
      extra_state = generator_state(GeneratorName::J, N);
      label = "L";
      break;
    case AdjointFamily::D:
      op_state = generator_state(GeneratorName::D, N);
      adj_state = generator_state(GeneratorName::E, N);
      label = "D";
      break;
    case AdjointFamily::Dprime:
      op_state = generator_state(GeneratorName::Dprime, N);
      adj_state = generator_state(GeneratorName::Eprime, N);
      label = "D'";
      break;
  }
  const Grade g = *grade_of(op_state);

  for (int k = 0; k <= k_max; ++k) {
    for (int l : charge_band(N, k_max)) {
      auto src = enumerate_basis(Flavor::plus, N, k, l);
      if (src->dim() == 0) continue;
      // Modes whose target weight stays within [0, k_max].
      for (long long n = k + g.weight - 1 - k_max; n <= k + g.weight - 1; ++n) {
        auto op = mode_matrix(op_state, n, src);

        SpMat adj;
        switch (fam) {
          case AdjointFamily::Q:
            adj = mode_matrix(adj_state, -n + 1, op.dst).mat;
            break;
          case AdjointFamily::J:
            adj = mode_matrix(adj_state, -n, op.dst).mat;
            break;
          case AdjointFamily::L: {
            adj = mode_matrix(adj_state, -n + 2, op.dst).mat;
            SpMat corr = mode_matrix(extra_state, -n + 1, op.dst).mat;
            adj = (adj - Rational(n - 1) * corr).pruned();
            break;
          }
          case AdjointFamily::D: {
            adj = mode_matrix(adj_state, N - 2 - n, op.dst).mat;
            if ((N * (N - 1) / 2) % 2 != 0) adj = (Rational(-1) * adj).eval();
            break;
          }
          case AdjointFamily::Dprime:
            adj = (Rational(-1) * mode_matrix(adj_state, -n, op.dst).mat).eval();
            break;
        }
        if (flip_sign) adj = (flip * adj).eval();

        std::ostringstream lab;
        lab << label << "* n=" << n << " grade (" << k << "," << l << ")";
        if (!check_pair(op, adj, gram_diagonal(src), gram_diagonal(op.dst), lab.str(), &res.witness)) {
          res.ok = false;
          return res;
        }
      }
    }
  }
  return res;
}

AdjointCheckResult single_mode_adjunction_check(int N, int k_max) {
  AdjointCheckResult res;
  for (int k = 0; k <= k_max; ++k) {
    for (int l : charge_band(N, k_max)) {
      auto src = enumerate_basis(Flavor::plus, N, k, l);
      if (src->dim() == 0) continue;
      const Vec g_src = gram_diagonal(src);
      for (int dir = 1; dir <= N; ++dir) {
        for (int n = k - k_max; n <= k; ++n) {
          {
            auto op = symbol_matrix(ModeSymbol{Species::beta, dir, n}, src);
            std::ostringstream lab;
            lab << "beta{" << dir << "," << n << "} grade (" << k << "," << l << ")";
            if (n == 0) {
              if (to_dense(op.mat) != Mat::Constant(op.dst->dim(), src->dim(), Rational(0))) {
                res.ok = false;
                res.witness = lab.str() + ": beta zero mode does not vanish";
                return res;
              }
            } else {
              SpMat adj =
                  (Rational(n) * symbol_matrix(ModeSymbol{Species::gamma, dir, -n - 1}, op.dst).mat)
                      .eval();
              if (!check_pair(op, adj, g_src, gram_diagonal(op.dst), lab.str(), &res.witness)) {
                res.ok = false;
                return res;
              }
            }
          }
          {
            auto op = symbol_matrix(ModeSymbol{Species::b, dir, n}, src);
            SpMat adj = symbol_matrix(ModeSymbol{Species::c, dir, -n - 1}, op.dst).mat;
            std::ostringstream lab;
            lab << "b{" << dir << "," << n << "} grade (" << k << "," << l << ")";
            if (!check_pair(op, adj, g_src, gram_diagonal(op.dst), lab.str(), &res.witness)) {
              res.ok = false;
              return res;
            }
          }
        }
      }
    }
  }
  return res;
}

}  // namespace bgbc
