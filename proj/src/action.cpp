#include "bgbc/action.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace bgbc {

namespace {

// Re-sorts a word after the symbol at position p changed, tracking the
// parity sign of odd-odd crossings.  Returns false when an odd symbol
// collides with an identical neighbour.
bool resort_word(std::vector<ModeSymbol>& w, std::size_t p, int& sign) {
  sign = 1;
  while (p + 1 < w.size() && w[p + 1] < w[p]) {
    if (w[p].is_odd() && w[p + 1].is_odd()) sign = -sign;
    std::swap(w[p], w[p + 1]);
    ++p;
  }
  while (p > 0 && w[p] < w[p - 1]) {
    if (w[p].is_odd() && w[p - 1].is_odd()) sign = -sign;
    std::swap(w[p], w[p - 1]);
    --p;
  }
  if (w[p].is_odd()) {
    if (p > 0 && w[p - 1] == w[p]) return false;
    if (p + 1 < w.size() && w[p + 1] == w[p]) return false;
  }
  return true;
}

State promote(const State& s) {
  return s.flavor() == Flavor::plus ? s.as_full() : s;
}

}  // namespace

namespace {

// The state whose zero mode is the action of v: Q_(0) applied to
// sum_i P_i(gamma_(-1)) b^i_(-1) |0>.
State l_state(const PolyVectorField& v, int N) {
  State sv(Flavor::full, N);
  for (const auto& [key, coef] : v.terms()) {
    Monomial m = Monomial::vacuum(N);
    for (int a = 0; a < N; ++a) m.mutable_gamma()[a] = key.first[a];
    m.mutable_word().push_back(ModeSymbol{Species::b, key.second, -1});
    sv.add_term(m, coef);
  }
  if (sv.is_zero()) return sv;
  return nth_product(generator_state(GeneratorName::Q, N), 0, sv);
}

}  // namespace

State act_L(const PolyVectorField& v, const State& s) {
  if (v.N() != s.N())
    throw std::invalid_argument("act_L: vector field and state disagree on N");
  const int N = s.N();
  State wv = l_state(v, N);
  if (wv.is_zero() || s.is_zero()) return State(Flavor::full, N);
  return nth_product(wv, 0, promote(s));
}

FieldOperator lplus_operator(const PolyVectorField& v) {
  FieldOperator op;
  for (const auto& [key, coef] : v.terms()) {
    const MultiIndex& s = key.first;
    const int i = key.second;
    const int N = static_cast<int>(s.size());

    auto wrap = [&](Field f, const MultiIndex& expo) {
      for (int a = N; a >= 1; --a)
        for (std::uint32_t e = 0; e < expo[a - 1]; ++e)
          f = Field::product(Field::primitive(Species::gamma, a, true), f);
      return f;
    };

    // : (dP_i/dx_j)(gt) c^j : b^i :
    for (int j = 1; j <= N; ++j) {
      if (s[j - 1] == 0) continue;
      MultiIndex ds = s;
      ds[j - 1] -= 1;
      Field chain = wrap(Field::primitive(Species::c, j), ds);
      op.terms.emplace_back(coef * Rational(static_cast<long long>(s[j - 1])),
                            Field::product(chain, Field::primitive(Species::b, i)));
    }
    // : P_i(gt) beta^i :
    op.terms.emplace_back(coef, wrap(Field::primitive(Species::beta, i), s));
  }
  return op;
}

State act_Lplus(const PolyVectorField& v, const State& s) {
  if (v.N() != s.N())
    throw std::invalid_argument("act_Lplus: vector field and state disagree on N");
  return lplus_operator(v).apply(0, s);
}

ActionOperator::ActionOperator(PolyVectorField v, Variant variant)
    : v_(std::move(v)), variant_(variant), raise_(0) {
  if (variant_ == Variant::L)
    for (const auto& [key, coef] : v_.terms())
      raise_ = std::max(raise_, total_degree(key.first));
}

SparseLinearMap ActionOperator::matrix(const WeightSpacePtr& src) const {
  if (variant_ == Variant::LPLUS) return matrix(src, src);
  if (src->flavor != Flavor::full)
    throw std::invalid_argument("ActionOperator: L matrices need full-flavored spaces");
  return matrix(src, enumerate_basis(Flavor::full, src->N, src->k, src->l,
                                     src->gamma_bound + raise_));
}

SparseLinearMap ActionOperator::matrix(const WeightSpacePtr& src,
                                       const WeightSpacePtr& dst) const {
  const auto key = std::make_pair(src.get(), dst.get());
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  if (variant_ == Variant::L && src->flavor != Flavor::full)
    throw std::invalid_argument("ActionOperator: L matrices need full-flavored spaces");
  const State wv = variant_ == Variant::L ? l_state(v_, src->N) : State();
  const FieldOperator op =
      variant_ == Variant::LPLUS ? lplus_operator(v_) : FieldOperator{};
  std::vector<Triplet> trips;
  for (Eigen::Index col = 0; col < src->dim(); ++col) {
    State in = State::single(src->flavor, src->basis[col]);
    State out = variant_ == Variant::L
                    ? (wv.is_zero() ? State(Flavor::full, src->N) : nth_product(wv, 0, in))
                    : op.apply(0, in);
    for (const auto& [mon, coef] : out.terms()) {
      auto pos = dst->index.find(mon);
      if (pos == dst->index.end())
        throw std::logic_error("ActionOperator: produced monomial outside target space");
      trips.emplace_back(pos->second, col, coef);
    }
  }
  SparseLinearMap map{src, dst, SpMat(dst->dim(), src->dim())};
  map.mat.setFromTriplets(trips.begin(), trips.end());
  return cache_.emplace(key, std::move(map)).first->second;
}

State act_arc(const ArcElement& e, const State& s) {
  if (e.t_power < 0) throw std::invalid_argument("act_arc: negative t power");
  if (e.g.N() != s.N())
    throw std::invalid_argument("act_arc: vector field and state disagree on N");
  const int N = s.N();
  const Mat M = to_linear_matrix(e.g);  // throws unless degree 0
  const int n = e.t_power;

  State out(s.flavor(), N);
  for (const auto& [mon, coef] : s.terms()) {
    const auto& word = mon.word();
    for (std::size_t p = 0; p < word.size(); ++p) {
      const ModeSymbol u = word[p];
      const int k = -u.mode;
      const int cut = u.species == Species::gamma ? k - 1 : k;
      if (n >= cut) continue;
      // The gamma ladder lives in derivative coordinates: the symmetric
      // algebra is generated by modes of the derivative field d gamma, and
      // (d gamma)_(-l) = l gamma_(-l-1).  Plain shifts of those modes
      // conjugate to the rational factor (k-1-n)/(k-1) on gamma_(-k).
      const Rational scale = u.species == Species::gamma && n > 0
                                 ? Rational(k - 1 - n, k - 1)
                                 : Rational(1);
      for (int d = 1; d <= N; ++d) {
        // beta and b transform by -g^T on the primed labels, gamma and c
        // by g itself.
        const Rational mc = (u.species == Species::beta || u.species == Species::b)
                                ? -M(u.dir - 1, d - 1)
                                : M(d - 1, u.dir - 1);
        if (mc.is_zero()) continue;
        Monomial t = mon;
        auto& tw = t.mutable_word();
        tw[p] = ModeSymbol{u.species, d, u.mode + n};
        int sign = 1;
        if (!resort_word(tw, p, sign)) continue;
        out.add_term(t, coef * scale * mc * Rational(sign));
      }
    }
    // gamma_(-1) exponents are annihilated by every g t^n: nothing to add.
  }
  return out;
}

namespace {

PolyVectorField arc_g0() {
  PolyVectorField g(2);
  g.add_term({1, 0}, 1, Rational(1));
  g.add_term({0, 1}, 2, Rational(-1));
  return g;
}

PolyVectorField arc_g1() {
  PolyVectorField g(2);
  g.add_term({1, 0}, 2, Rational(1));
  return g;
}

State apply_k1(const State& s) {
  static const PolyVectorField g1 = arc_g1();
  State out(s.flavor(), s.N());
  const int bound = s.max_weight() + 1;
  for (int l = 1; l <= bound; ++l)
    out += apply_mode(ModeSymbol{Species::gamma, 1, -l - 1}, act_arc({g1, l}, s));
  return out;
}

State apply_k0(const State& s) {
  static const PolyVectorField g0 = arc_g0();
  static const PolyVectorField g1 = arc_g1();
  State out(s.flavor(), s.N());
  const int bound = s.max_weight() + 1;
  for (int l = 1; l <= bound; ++l) {
    out += apply_mode(ModeSymbol{Species::gamma, 1, -l - 1}, act_arc({g0, l}, s));
    out -= apply_mode(ModeSymbol{Species::gamma, 2, -l - 1}, act_arc({g1, l}, s));
  }
  return out;
}

State apply_k(int n, const State& s) {
  if (n == 0) return apply_k0(s);
  if (n == 1) return apply_k1(s);
  return apply_k0(apply_k(n - 1, s)) - apply_k(n - 1, apply_k0(s));
}

}  // namespace

KOperator::KOperator(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("k_operator: negative index");
}

State KOperator::apply(const State& s) const {
  if (s.N() != 2) throw std::invalid_argument("KOperator: defined for N = 2");
  return apply_k(n_, s);
}

State top_sw_component(const State& s) {
  State out(s.flavor(), s.N());
  if (s.is_zero()) return out;
  int top = 0;
  for (const auto& [mon, coef] : s.terms()) top = std::max(top, mon.sw_degree());
  for (const auto& [mon, coef] : s.terms())
    if (mon.sw_degree() == top) out.add_term(mon, coef);
  return out;
}

}  // namespace bgbc
