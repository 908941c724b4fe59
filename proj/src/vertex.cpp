#include "bgbc/vertex.hpp"

#include <stdexcept>

namespace bgbc {

struct Field::Node {
  enum class Kind { identity, primitive, derived, product } kind;
  Species sp = Species::beta;
  int dir = 0;
  bool tilde = false;
  int order = 0;
  std::shared_ptr<const Node> a, b;
  int weight = 0;
  int parity = 0;
};

Field Field::identity() {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::identity;
  return Field(n);
}

Field Field::primitive(Species sp, int dir, bool tilde) {
  if (tilde && sp != Species::gamma) throw std::invalid_argument("tilde applies to gamma only");
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::primitive;
  n->sp = sp;
  n->dir = dir;
  n->tilde = tilde;
  n->weight = (sp == Species::beta || sp == Species::b) ? 1 : 0;
  n->parity = species_is_odd(sp) ? 1 : 0;
  return Field(n);
}

Field Field::derived(const Field& inner, int order) {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  if (order == 0) return inner;
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::derived;
  n->order = order;
  n->a = inner.node_;
  n->weight = inner.weight() + order;
  n->parity = inner.parity();
  return Field(n);
}

Field Field::product(const Field& left, const Field& right) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::product;
  n->a = left.node_;
  n->b = right.node_;
  n->weight = left.weight() + right.weight();
  n->parity = left.parity() ^ right.parity();
  return Field(n);
}

int Field::weight() const { return node_->weight; }
int Field::parity() const { return node_->parity; }

void Field::apply_mode(long long n, const State& s, const Rational& scale, State& out) const {
  if (s.is_zero() || scale.is_zero()) return;
  const Node& nd = *node_;
  switch (nd.kind) {
    case Node::Kind::identity: {
      if (n == -1) {
        for (const auto& [m, c] : s.terms()) out.add_term(m, c * scale);
      }
      return;
    }
    case Node::Kind::primitive: {
      if (nd.tilde && n == -1) return;
      if (n < -(1LL << 30) || n > (1LL << 30)) throw std::invalid_argument("mode out of range");
      State t = bgbc::apply_mode(ModeSymbol{nd.sp, nd.dir, static_cast<std::int32_t>(n)}, s);
      for (const auto& [m, c] : t.terms()) out.add_term(m, c * scale);
      return;
    }
    case Node::Kind::derived: {
      long long c = binom(n, nd.order);
      if (c == 0) return;
      if (nd.order % 2 == 1) c = -c;
      Field inner(nd.a);
      inner.apply_mode(n - nd.order, s, scale * Rational(c), out);
      return;
    }
    case Node::Kind::product: {
      Field A(nd.a), B(nd.b);
      int wmax = s.max_weight();
      long long kmin = n - wmax - B.weight();
      for (long long k = kmin; k <= -1; ++k) {
        State t = B.mode(n - k - 1, s);
        if (t.is_zero()) continue;
        A.apply_mode(k, t, scale, out);
      }
      Rational s2 = (A.parity() && B.parity()) ? -scale : scale;
      long long kmax2 = wmax + A.weight() - 1;
      for (long long k = 0; k <= kmax2; ++k) {
        State t = A.mode(k, s);
        if (t.is_zero()) continue;
        B.apply_mode(n - k - 1, t, s2, out);
      }
      return;
    }
  }
}

State Field::mode(long long n, const State& s) const {
  State out(s.flavor(), s.N());
  apply_mode(n, s, Rational(1), out);
  return out;
}

State FieldOperator::apply(long long n, const State& s) const {
  State out(s.flavor(), s.N());
  for (const auto& [c, f] : terms) f.apply_mode(n, s, c, out);
  return out;
}

Field field_of(const Monomial& m) {
  if (m.is_vacuum()) return Field::identity();
  Monomial rest = m;
  ModeSymbol u;
  if (!m.word().empty()) {
    u = m.word().front();
    rest.mutable_word().erase(rest.mutable_word().begin());
  } else {
    int dir = 0;
    for (std::size_t i = 0; i < m.gamma().size(); ++i) {
      if (m.gamma()[i] > 0) { dir = static_cast<int>(i) + 1; break; }
    }
    u = ModeSymbol{Species::gamma, dir, -1};
    rest.mutable_gamma()[static_cast<std::size_t>(u.dir - 1)] -= 1;
  }
  int order = -u.mode - 1;
  Field head = Field::derived(Field::primitive(u.species, u.dir), order);
  return Field::product(head, field_of(rest));
}

State nth_product(const State& a, long long n, const State& b) {
  if (a.N() != b.N() && !a.is_zero() && !b.is_zero()) {
    throw std::invalid_argument("nth_product: N mismatch");
  }
  if (!is_homogeneous(a)) throw std::invalid_argument("nth_product: left state not homogeneous");
  Flavor f = (a.flavor() == Flavor::full || b.flavor() == Flavor::full) ? Flavor::full : Flavor::plus;
  State out(f, b.N());
  if (f == Flavor::full && b.flavor() == Flavor::plus) {
    State promoted = b.as_full();
    for (const auto& [m, c] : a.terms()) field_of(m).apply_mode(n, promoted, c, out);
  } else {
    for (const auto& [m, c] : a.terms()) field_of(m).apply_mode(n, b, c, out);
  }
  return out;
}

State normal_order(const State& a, const State& b) { return nth_product(a, -1, b); }

GeneratorName generator_from_letter(const std::string& name) {
  if (name == "Q") return GeneratorName::Q;
  if (name == "L") return GeneratorName::L;
  if (name == "J") return GeneratorName::J;
  if (name == "G") return GeneratorName::G;
  if (name == "D") return GeneratorName::D;
  if (name == "E") return GeneratorName::E;
  if (name == "B") return GeneratorName::B;
  if (name == "C") return GeneratorName::C;
  if (name == "Dp") return GeneratorName::Dprime;
  if (name == "Ep") return GeneratorName::Eprime;
  throw std::invalid_argument("unknown generator: " + name);
}

std::string generator_letter(GeneratorName g) {
  switch (g) {
    case GeneratorName::Q: return "Q";
    case GeneratorName::L: return "L";
    case GeneratorName::J: return "J";
    case GeneratorName::G: return "G";
    case GeneratorName::D: return "D";
    case GeneratorName::E: return "E";
    case GeneratorName::B: return "B";
    case GeneratorName::C: return "C";
    case GeneratorName::Dprime: return "Dp";
    case GeneratorName::Eprime: return "Ep";
  }
  throw std::logic_error("bad generator");
}

namespace {

State prim_state(Species sp, int dir, int N) {
  if (sp == Species::gamma) {
    Monomial m = Monomial::vacuum(N);
    m.mutable_gamma()[static_cast<std::size_t>(dir - 1)] = 1;
    return State::single(Flavor::full, m);
  }
  Monomial m = Monomial::vacuum(N);
  m.mutable_word().push_back(ModeSymbol{sp, dir, -1});
  return State::single(Flavor::plus, m);
}

}  // namespace

State generator_state(GeneratorName g, int N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  auto dgamma = [&](int i) { return translate(prim_state(Species::gamma, i, N)).as_plus(); };
  auto dc = [&](int i) { return translate(prim_state(Species::c, i, N)); };
  switch (g) {
    case GeneratorName::Q: {
      State s(Flavor::plus, N);
      for (int i = 1; i <= N; ++i) {
        s += normal_order(prim_state(Species::beta, i, N), prim_state(Species::c, i, N));
      }
      return s;
    }
    case GeneratorName::J: {
      State s(Flavor::plus, N);
      for (int i = 1; i <= N; ++i) {
        s -= normal_order(prim_state(Species::b, i, N), prim_state(Species::c, i, N));
      }
      return s;
    }
    case GeneratorName::L: {
      State s(Flavor::plus, N);
      for (int i = 1; i <= N; ++i) {
        s += normal_order(prim_state(Species::beta, i, N), dgamma(i));
        s -= normal_order(prim_state(Species::b, i, N), dc(i));
      }
      return s;
    }
    case GeneratorName::G: {
      State s(Flavor::plus, N);
      for (int i = 1; i <= N; ++i) {
        s += normal_order(prim_state(Species::b, i, N), dgamma(i));
      }
      return s;
    }
    case GeneratorName::D: {
      State s = prim_state(Species::b, N, N);
      for (int i = N - 1; i >= 1; --i) s = normal_order(prim_state(Species::b, i, N), s);
      return s;
    }
    case GeneratorName::E: {
      State s = prim_state(Species::c, N, N);
      for (int i = N - 1; i >= 1; --i) s = normal_order(prim_state(Species::c, i, N), s);
      return s;
    }
    case GeneratorName::B:
      return nth_product(generator_state(GeneratorName::Q, N), 0, generator_state(GeneratorName::D, N));
    case GeneratorName::C:
      return nth_product(generator_state(GeneratorName::G, N), 0, generator_state(GeneratorName::E, N));
    case GeneratorName::Dprime: {
      if (N % 2 != 0) throw std::invalid_argument("Dprime requires even N");
      State s(Flavor::plus, N);
      for (int i = 1; 2 * i <= N; ++i) {
        s += normal_order(prim_state(Species::b, 2 * i - 1, N), prim_state(Species::b, 2 * i, N));
      }
      return s;
    }
    case GeneratorName::Eprime: {
      if (N % 2 != 0) throw std::invalid_argument("Eprime requires even N");
      State s(Flavor::plus, N);
      for (int i = 1; 2 * i <= N; ++i) {
        s += normal_order(prim_state(Species::c, 2 * i - 1, N), prim_state(Species::c, 2 * i, N));
      }
      return s;
    }
  }
  throw std::logic_error("bad generator");
}

std::vector<GeneratorName> generator_set(char type) {
  if (type == 'A') {
    return {GeneratorName::Q, GeneratorName::L, GeneratorName::J, GeneratorName::G,
            GeneratorName::D, GeneratorName::E, GeneratorName::B, GeneratorName::C};
  }
  if (type == 'C') {
    return {GeneratorName::Q, GeneratorName::L, GeneratorName::J,
            GeneratorName::G, GeneratorName::Dprime, GeneratorName::Eprime};
  }
  throw std::invalid_argument("type must be A or C");
}

namespace {

WeightSpacePtr empty_space(Flavor f, int N, int k, int l, int bound) {
  auto ws = std::make_shared<WeightSpace>();
  ws->flavor = f;
  ws->N = N;
  ws->k = k;
  ws->l = l;
  ws->gamma_bound = bound;
  return ws;
}

WeightSpacePtr derive_target(const WeightSpacePtr& src, long long n, int weight, int charge) {
  int dk = src->k + weight - static_cast<int>(n) - 1;
  int dl = src->l + charge;
  if (dk < 0) return empty_space(src->flavor, src->N, dk, dl, src->gamma_bound);
  return enumerate_basis(src->flavor, src->N, dk, dl,
                         src->flavor == Flavor::full ? std::optional<int>(src->gamma_bound)
                                                     : std::nullopt);
}

template <typename Apply>
SparseLinearMap materialize(const WeightSpacePtr& src, const WeightSpacePtr& dst, Apply&& apply) {
  std::vector<Triplet> trips;
  for (Eigen::Index j = 0; j < src->dim(); ++j) {
    State col = apply(State::single(src->flavor, src->basis[static_cast<std::size_t>(j)]));
    for (const auto& [m, c] : col.terms()) {
      auto it = dst->index.find(m);
      if (it == dst->index.end()) {
        throw std::logic_error("materialize: produced monomial outside target space: " + to_text(m));
      }
      trips.emplace_back(it->second, j, c);
    }
  }
  SpMat mat(dst->dim(), src->dim());
  mat.setFromTriplets(trips.begin(), trips.end());
  return SparseLinearMap{src, dst, std::move(mat)};
}

}  // namespace

SparseLinearMap mode_matrix(const State& a, long long n, const WeightSpacePtr& src) {
  auto g = grade_of(a);
  if (!g) throw std::invalid_argument("mode_matrix: state must be nonzero homogeneous");
  if (src->flavor == Flavor::full) {
    throw std::invalid_argument("mode_matrix: full flavor requires an explicit target space");
  }
  auto dst = derive_target(src, n, g->weight, g->charge);
  return mode_matrix(a, n, src, dst);
}

SparseLinearMap mode_matrix(const State& a, long long n, const WeightSpacePtr& src,
                            const WeightSpacePtr& dst) {
  auto g = grade_of(a);
  if (!g) throw std::invalid_argument("mode_matrix: state must be nonzero homogeneous");
  if (dst->k != src->k + g->weight - static_cast<int>(n) - 1 || dst->l != src->l + g->charge) {
    throw std::invalid_argument("mode_matrix: target grade inconsistent with mode shift");
  }
  std::vector<std::pair<Rational, Field>> fields;
  for (const auto& [m, c] : a.terms()) fields.emplace_back(c, field_of(m));
  return materialize(src, dst, [&](const State& v) {
    State s = (a.flavor() == Flavor::full && v.flavor() == Flavor::plus) ? v.as_full() : v;
    State out(dst->flavor, src->N);
    for (const auto& [c, f] : fields) f.apply_mode(n, s, c, out);
    return out;
  });
}

SparseLinearMap composite_zero_mode(const State& a, const WeightSpacePtr& src) {
  return mode_matrix(a, 0, src);
}

SparseLinearMap symbol_matrix(const ModeSymbol& m, const WeightSpacePtr& src) {
  auto dst = derive_target(src, -1, m.weight_shift(), m.charge());
  return symbol_matrix(m, src, dst);
}

SparseLinearMap symbol_matrix(const ModeSymbol& m, const WeightSpacePtr& src,
                              const WeightSpacePtr& dst) {
  if (dst->k != src->k + m.weight_shift() || dst->l != src->l + m.charge()) {
    throw std::invalid_argument("symbol_matrix: target grade inconsistent");
  }
  return materialize(src, dst, [&](const State& v) { return apply_mode(m, v); });
}

}  // namespace bgbc
