#include "bgbc/invariants.hpp"

#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace bgbc {

namespace {

PolyVectorField checked_g1(AlgebraType type, int N,
                           const std::optional<PolyVectorField>& g1) {
  PolyVectorField v = g1.value_or(default_g1(N));
  if (v.is_zero()) throw std::invalid_argument("invariants: g1 must be nonzero");
  if (v.N() != N) throw std::invalid_argument("invariants: g1 has the wrong N");
  auto deg = v.degree();
  if (!deg || *deg != 1)
    throw std::invalid_argument("invariants: g1 must be homogeneous of degree 1");
  bool inside = type == AlgebraType::A
                    ? divergence(v).empty()
                    : lie_derivative(v, PolyForm::symplectic(N)).is_zero();
  if (!inside) throw std::invalid_argument("invariants: g1 is not in the algebra");
  return v;
}

SpMat lplus_matrix(const PolyVectorField& v, const WeightSpacePtr& src) {
  const FieldOperator op = lplus_operator(v);
  std::vector<Triplet> trips;
  for (Eigen::Index col = 0; col < src->dim(); ++col) {
    State out = op.apply(0, State::single(src->flavor, src->basis[static_cast<std::size_t>(col)]));
    for (const auto& [mon, coef] : out.terms()) {
      auto pos = src->index.find(mon);
      if (pos == src->index.end())
        throw std::logic_error("invariants: action left the weight space");
      trips.emplace_back(pos->second, col, coef);
    }
  }
  SpMat m(src->dim(), src->dim());
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

// Progressive kernel intersection: columns of K span the running kernel.
Mat restrict_kernel(Mat K, const std::vector<PolyVectorField>& fields,
                    const WeightSpacePtr& src) {
  for (const auto& v : fields) {
    if (K.cols() == 0) break;
    Mat MK = lplus_matrix(v, src) * K;
    K = K * kernel_basis(MK);
  }
  return K;
}

std::vector<State> states_of_columns(const Mat& K, const WeightSpacePtr& src) {
  std::vector<State> out;
  for (Eigen::Index c = 0; c < K.cols(); ++c) out.push_back(src->from_coords(K.col(c)));
  return out;
}

}  // namespace

InvariantReport invariant_space(AlgebraType type, int N, int k, int l,
                                const std::optional<PolyVectorField>& g1,
                                bool cross_check) {
  if (type == AlgebraType::C && N % 2 != 0)
    throw std::invalid_argument("invariants: type C needs even N");
  PolyVectorField w = checked_g1(type, N, g1);

  InvariantReport rep;
  rep.type = type;
  rep.N = N;
  rep.k = k;
  rep.l = l;
  rep.g1_text = to_text(w);

  auto src = enumerate_basis(Flavor::plus, N, k, l);
  if (src->dim() > 0) {
    Mat K = Mat::Identity(src->dim(), src->dim());
    K = column_echelonize(restrict_kernel(K, basis_graded(type, N, 0), src));
    rep.dim_g0 = K.cols();
    rep.g0_basis = states_of_columns(K, src);

    Mat F = column_echelonize(restrict_kernel(K, {w}, src));
    rep.dim_full = F.cols();
    rep.full_basis = states_of_columns(F, src);

    if (cross_check) {
      Mat C = Mat::Identity(src->dim(), src->dim());
      C = restrict_kernel(C, basis_graded(type, N, 0), src);
      C = restrict_kernel(C, basis_graded(type, N, 1), src);
      C = restrict_kernel(C, basis_graded(type, N, 2), src);
      rep.dim_cross_check = C.cols();
    }
  } else if (cross_check) {
    rep.dim_cross_check = 0;
  }

  rep.dim_oracle = oracle_span(type, N, k).dim(k, l);
  return rep;
}

long long OracleSpan::dim(int k, int l) const {
  auto it = basis.find({k, l});
  return it == basis.end() ? 0 : it->second.cols();
}

std::vector<State> OracleSpan::basis_states(int k, int l) const {
  auto it = basis.find({k, l});
  if (it == basis.end()) return {};
  return states_of_columns(it->second, enumerate_basis(Flavor::plus, N, k, l));
}

const OracleSpan& oracle_span(AlgebraType type, int N, int k_max) {
  static std::mutex mu;
  static std::map<std::tuple<char, int, int>, std::unique_ptr<OracleSpan>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(algebra_type_letter(type), N, k_max);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  auto out = std::make_unique<OracleSpan>();
  out->type = type;
  out->N = N;
  out->k_max = k_max;

  std::vector<State> gens;
  for (auto name : generator_set(algebra_type_letter(type)))
    gens.push_back(generator_state(name, N));

  std::map<std::pair<int, int>, SpanBuilder> spans;
  std::deque<State> queue;
  auto try_add = [&](const State& s) {
    if (s.is_zero()) return;
    auto g = grade_of(s);
    if (!g || g->weight > k_max) return;
    auto ws = enumerate_basis(Flavor::plus, N, g->weight, g->charge);
    auto [slot, fresh] = spans.try_emplace({g->weight, g->charge}, ws->dim());
    (void)fresh;
    if (slot->second.insert(ws->coords(s))) queue.push_back(s);
  };

  for (const auto& g : gens) try_add(g);
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    try_add(translate(s));
    const int ws = grade_of(s)->weight;
    for (const auto& g : gens) {
      const int wg = grade_of(g)->weight;
      for (long long n = wg + ws - 1 - k_max; n <= wg + ws - 1; ++n)
        try_add(nth_product(g, n, s));
    }
  }

  for (const auto& [grade, span] : spans) {
    if (span.dim() == 0) continue;
    Mat cols(span.ambient_dim(), span.dim());
    for (Eigen::Index c = 0; c < span.dim(); ++c)
      cols.col(c) = span.rows()[static_cast<std::size_t>(c)];
    out->basis.emplace(grade, column_echelonize(cols));
  }
  return *cache.emplace(key, std::move(out)).first->second;
}

CharacterSource character_source_from_name(const std::string& name) {
  if (name == "weight-spaces") return CharacterSource::weight_spaces;
  if (name == "invariants") return CharacterSource::invariants;
  if (name == "oracle") return CharacterSource::oracle;
  throw std::invalid_argument("unknown character source: " + name);
}

std::string character_source_name(CharacterSource s) {
  switch (s) {
    case CharacterSource::weight_spaces: return "weight-spaces";
    case CharacterSource::invariants: return "invariants";
    case CharacterSource::oracle: return "oracle";
  }
  throw std::logic_error("unreachable");
}

CharacterTable character(CharacterSource source, AlgebraType type, int N, int k_max,
                         const std::optional<PolyVectorField>& g1) {
  CharacterTable table;
  table.N = N;
  table.k_max = k_max;
  switch (source) {
    case CharacterSource::weight_spaces:
      for (int k = 0; k <= k_max; ++k)
        for (const auto& [l, d] : weight_layer_dims(Flavor::plus, N, k))
          if (d > 0) table.dims[{k, l}] = d;
      break;
    case CharacterSource::invariants:
      for (int k = 0; k <= k_max; ++k)
        for (int l = -N * (k + 1); l <= N * (k + 1); ++l) {
          auto rep = invariant_space(type, N, k, l, g1);
          if (rep.dim_full > 0) table.dims[{k, l}] = rep.dim_full;
        }
      break;
    case CharacterSource::oracle: {
      const OracleSpan& span = oracle_span(type, N, k_max);
      for (const auto& [grade, cols] : span.basis)
        if (cols.cols() > 0) table.dims[grade] = cols.cols();
      break;
    }
  }
  return table;
}

bool ConjectureReport::all_match() const {
  for (const auto& r : rows)
    if (!r.match) return false;
  return true;
}

ConjectureReport conjecture_evidence(int N, int k_max, AlgebraType type,
                                     const std::optional<PolyVectorField>& g1) {
  ConjectureReport rep;
  rep.type = type;
  rep.N = N;
  rep.k_max = k_max;
  rep.g1_text = to_text(checked_g1(type, N, g1));

  std::vector<PolyVectorField> annihilators = basis_graded(type, N, 0);
  for (const auto& v : basis_graded(type, N, 1)) annihilators.push_back(v);

  const OracleSpan& span = oracle_span(type, N, k_max);
  for (int k = 0; k <= k_max; ++k)
    for (int l = -N * (k + 1); l <= N * (k + 1); ++l) {
      auto inv = invariant_space(type, N, k, l, g1);
      long long od = span.dim(k, l);
      if (inv.dim_full == 0 && od == 0) continue;

      ConjectureReport::Row row;
      row.k = k;
      row.l = l;
      row.dim_invariants = inv.dim_full;
      row.dim_oracle = od;
      row.match = inv.dim_full == od;

      auto ws = enumerate_basis(Flavor::plus, N, k, l);
      SpanBuilder in_span(ws->dim());
      auto it = span.basis.find({k, l});
      if (it != span.basis.end())
        for (Eigen::Index c = 0; c < it->second.cols(); ++c) in_span.insert(it->second.col(c));
      if (!row.match)
        for (const auto& b : inv.full_basis)
          if (!in_span.contains(ws->coords(b))) row.witnesses.push_back(b);

      // Containment: every span vector is killed by the degree 0 and 1 bases.
      for (const auto& s : span.basis_states(k, l))
        for (const auto& v : annihilators)
          if (!act_Lplus(v, s).is_zero()) rep.containment_ok = false;

      rep.rows.push_back(std::move(row));
    }
  return rep;
}

}  // namespace bgbc
