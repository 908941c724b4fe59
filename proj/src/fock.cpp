#include "bgbc/fock.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace bgbc {

bool species_is_odd(Species s) { return s == Species::b || s == Species::c; }

char species_letter(Species s) {
  switch (s) {
    case Species::beta: return 'B';
    case Species::gamma: return 'G';
    case Species::b: return 'b';
    case Species::c: return 'c';
  }
  throw std::logic_error("bad species");
}

Monomial Monomial::vacuum(int N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  Monomial m;
  m.gamma_.assign(static_cast<std::size_t>(N), 0);
  return m;
}

bool Monomial::is_vacuum() const {
  if (!word_.empty()) return false;
  for (auto e : gamma_) {
    if (e != 0) return false;
  }
  return true;
}

int Monomial::weight() const {
  int w = 0;
  for (const auto& u : word_) w += u.weight_shift();
  return w;
}

int Monomial::charge() const {
  int q = 0;
  for (const auto& u : word_) q += u.charge();
  return q;
}

int Monomial::parity() const {
  int p = 0;
  for (const auto& u : word_) p ^= u.is_odd() ? 1 : 0;
  return p;
}

int Monomial::gamma_degree() const {
  int d = 0;
  for (auto e : gamma_) d += static_cast<int>(e);
  return d;
}

int Monomial::sw_degree() const {
  int d = 0;
  for (const auto& u : word_) {
    if (u.species == Species::c) d += 1;
    if (u.species == Species::gamma) d += 2;
  }
  d += 2 * gamma_degree();
  return d;
}

State State::vacuum(Flavor f, int N) {
  State s(f, N);
  s.add_term(Monomial::vacuum(N), Rational(1));
  return s;
}

State State::single(Flavor f, const Monomial& m, Rational coef) {
  State s(f, m.N());
  s.add_term(m, coef);
  return s;
}

void State::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  if (N_ == 0) N_ = m.N();
  if (m.N() != N_) throw std::invalid_argument("monomial N mismatch");
  if (flavor_ == Flavor::plus && m.gamma_degree() != 0) {
    throw std::domain_error("gamma_(-1) factors in a plus-flavor state");
  }
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

State& State::operator+=(const State& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

State& State::operator-=(const State& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

State& State::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

int State::max_weight() const {
  int w = 0;
  for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
  return w;
}

State State::as_full() const {
  State s = *this;
  s.flavor_ = Flavor::full;
  return s;
}

State State::as_plus() const {
  for (const auto& [m, c] : terms_) {
    if (m.gamma_degree() != 0) {
      throw std::domain_error("state has gamma_(-1) factors, cannot demote to plus flavor");
    }
  }
  State s = *this;
  s.flavor_ = Flavor::plus;
  return s;
}

namespace {

// Pairing of an annihilation mode against a creation symbol in the word.
// Zero unless the species contract and the modes sum to -1.
int bracket_value(const ModeSymbol& a, const ModeSymbol& u) {
  if (a.dir != u.dir) return 0;
  if (a.mode + u.mode + 1 != 0) return 0;
  if (a.species == Species::beta && u.species == Species::gamma) return 1;
  if (a.species == Species::gamma && u.species == Species::beta) return -1;
  if (a.species == Species::b && u.species == Species::c) return 1;
  if (a.species == Species::c && u.species == Species::b) return 1;
  return 0;
}

// Inserts a creation symbol into a sorted word.  Returns false if an odd
// duplicate makes the term vanish; otherwise sign receives the parity sign
// of moving the symbol from the left into place.
bool insert_symbol(std::vector<ModeSymbol>& word, const ModeSymbol& u, int& sign) {
  sign = 1;
  auto pos = std::upper_bound(word.begin(), word.end(), u);
  if (u.is_odd()) {
    if (pos != word.begin() && *(pos - 1) == u) return false;
    int crossed = 0;
    for (auto it = word.begin(); it != pos; ++it) {
      if (it->is_odd()) ++crossed;
    }
    if (crossed % 2 == 1) sign = -1;
  }
  word.insert(pos, u);
  return true;
}

}  // namespace

State apply_mode(const ModeSymbol& m, const State& s) {
  if (m.dir < 1 || m.dir > s.N()) throw std::invalid_argument("mode direction out of range");
  State out(s.flavor(), s.N());
  if (m.mode < 0) {
    if (m.species == Species::gamma && m.mode == -1) {
      if (s.flavor() == Flavor::plus) {
        throw std::domain_error("gamma_(-1) cannot be applied to a plus-flavor state");
      }
      for (const auto& [mon, coef] : s.terms()) {
        Monomial t = mon;
        t.mutable_gamma()[static_cast<std::size_t>(m.dir - 1)] += 1;
        out.add_term(t, coef);
      }
      return out;
    }
    for (const auto& [mon, coef] : s.terms()) {
      Monomial t = mon;
      int sign = 1;
      if (!insert_symbol(t.mutable_word(), m, sign)) continue;
      out.add_term(t, sign < 0 ? -coef : coef);
    }
    return out;
  }
  // annihilation: supercommute left to right through the word
  for (const auto& [mon, coef] : s.terms()) {
    int sign = 1;
    const auto& word = mon.word();
    for (std::size_t j = 0; j < word.size(); ++j) {
      int br = bracket_value(m, word[j]);
      if (br != 0) {
        Monomial t = mon;
        t.mutable_word().erase(t.mutable_word().begin() + static_cast<std::ptrdiff_t>(j));
        out.add_term(t, coef * Rational(sign * br));
      }
      if (m.is_odd() && word[j].is_odd()) sign = -sign;
    }
    if (m.species == Species::beta && m.mode == 0) {
      auto e = mon.gamma()[static_cast<std::size_t>(m.dir - 1)];
      if (e > 0) {
        Monomial t = mon;
        t.mutable_gamma()[static_cast<std::size_t>(m.dir - 1)] -= 1;
        out.add_term(t, coef * Rational(sign * static_cast<int>(e)));
      }
    }
  }
  return out;
}

State translate(const State& s) {
  State out(s.flavor(), s.N());
  for (const auto& [mon, coef] : s.terms()) {
    const auto& word = mon.word();
    for (std::size_t j = 0; j < word.size(); ++j) {
      int k = -word[j].mode;
      Monomial t = mon;
      auto& tword = t.mutable_word();
      tword[j].mode -= 1;
      if (tword[j].is_odd() && j > 0 && tword[j - 1] == tword[j]) continue;
      // Restore sortedness: the decrement can only move the symbol past
      // identical copies of its old value, all even, so no sign arises.
      for (std::size_t p = j; p > 0 && tword[p] < tword[p - 1]; --p)
        std::swap(tword[p], tword[p - 1]);
      out.add_term(t, coef * Rational(k));
    }
    for (std::size_t i = 0; i < mon.gamma().size(); ++i) {
      auto e = mon.gamma()[i];
      if (e == 0) continue;
      Monomial t = mon;
      t.mutable_gamma()[i] -= 1;
      int sign = 1;
      ModeSymbol g{Species::gamma, static_cast<std::int32_t>(i + 1), -2};
      insert_symbol(t.mutable_word(), g, sign);
      out.add_term(t, coef * Rational(static_cast<int>(e)));
    }
  }
  return out;
}

bool is_homogeneous(const State& s) {
  bool first = true;
  int k = 0, l = 0;
  for (const auto& [m, c] : s.terms()) {
    if (first) {
      k = m.weight();
      l = m.charge();
      first = false;
    } else if (m.weight() != k || m.charge() != l) {
      return false;
    }
  }
  return true;
}

std::optional<Grade> grade_of(const State& s) {
  if (s.is_zero() || !is_homogeneous(s)) return std::nullopt;
  const auto& [m, c] = *s.terms().begin();
  return Grade{m.weight(), m.charge()};
}

Vec WeightSpace::coords(const State& s) const {
  Vec v(dim());
  v.setConstant(Rational(0));
  for (const auto& [m, c] : s.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw std::out_of_range("state term outside weight space: " + to_text(m));
    v(it->second) = c;
  }
  return v;
}

State WeightSpace::from_coords(const Vec& v) const {
  if (v.size() != dim()) throw std::invalid_argument("coordinate size mismatch");
  State s(flavor, N);
  for (Eigen::Index i = 0; i < v.size(); ++i) s.add_term(basis[static_cast<std::size_t>(i)], v(i));
  return s;
}

namespace {

struct Alphabet {
  std::vector<ModeSymbol> symbols;  // canonical order
  std::vector<int> weights;
};

Alphabet make_alphabet(int N, int k) {
  Alphabet a;
  for (int dir = 1; dir <= N; ++dir) {
    for (int mode = -k; mode <= -1; ++mode) a.symbols.push_back({Species::beta, dir, mode});
  }
  for (int dir = 1; dir <= N; ++dir) {
    for (int mode = -k - 1; mode <= -2; ++mode) a.symbols.push_back({Species::gamma, dir, mode});
  }
  for (int dir = 1; dir <= N; ++dir) {
    for (int mode = -k; mode <= -1; ++mode) a.symbols.push_back({Species::b, dir, mode});
  }
  for (int dir = 1; dir <= N; ++dir) {
    for (int mode = -k - 1; mode <= -1; ++mode) a.symbols.push_back({Species::c, dir, mode});
  }
  for (const auto& s : a.symbols) a.weights.push_back(s.weight_shift());
  return a;
}

void enumerate_words(const Alphabet& a, std::size_t start, int remaining, int N,
                     std::vector<ModeSymbol>& word, std::map<int, std::vector<Monomial>>& out) {
  if (remaining == 0) {
    Monomial m = Monomial::vacuum(N);
    m.mutable_word() = word;
    out[m.charge()].push_back(m);
  }
  for (std::size_t i = start; i < a.symbols.size(); ++i) {
    int w = a.weights[i];
    if (w > remaining) continue;
    const ModeSymbol& u = a.symbols[i];
    bool odd = u.is_odd();
    if (odd && !word.empty() && word.back() == u) continue;
    word.push_back(u);
    enumerate_words(a, odd ? i + 1 : i, remaining - w, N, word, out);
    word.pop_back();
  }
}

using LayerKey = std::tuple<int, int>;  // N, k
std::map<LayerKey, std::shared_ptr<const std::map<int, std::vector<Monomial>>>> layer_cache;
std::mutex layer_mutex;

std::shared_ptr<const std::map<int, std::vector<Monomial>>> plus_layer(int N, int k) {
  LayerKey key{N, k};
  {
    std::lock_guard<std::mutex> lock(layer_mutex);
    auto it = layer_cache.find(key);
    if (it != layer_cache.end()) return it->second;
  }
  auto result = std::make_shared<std::map<int, std::vector<Monomial>>>();
  Alphabet a = make_alphabet(N, k);
  std::vector<ModeSymbol> word;
  enumerate_words(a, 0, k, N, word, *result);
  for (auto& [l, v] : *result) std::sort(v.begin(), v.end());
  std::lock_guard<std::mutex> lock(layer_mutex);
  auto [it, inserted] = layer_cache.emplace(key, result);
  return it->second;
}

std::vector<std::vector<std::uint32_t>> gamma_vectors(int N, int bound) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(static_cast<std::size_t>(N), 0);
  // lexicographic enumeration of exponent vectors with total degree <= bound
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == N) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(e);
      rec(pos + 1, remaining - e);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, bound);
  return out;
}

using SpaceKey = std::tuple<int, int, int, int, int>;  // flavor, N, k, l, bound
std::map<SpaceKey, WeightSpacePtr> space_cache;
std::mutex space_mutex;

}  // namespace

WeightSpacePtr enumerate_basis(Flavor flavor, int N, int k, int l, std::optional<int> gamma_bound) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  if (k < 0) throw std::invalid_argument("negative weight");
  if (flavor == Flavor::full && !gamma_bound) {
    throw std::invalid_argument("full flavor enumeration requires a gamma_degree bound");
  }
  int bound = flavor == Flavor::full ? *gamma_bound : 0;
  if (bound < 0) throw std::invalid_argument("negative gamma bound");
  SpaceKey key{static_cast<int>(flavor), N, k, l, bound};
  {
    std::lock_guard<std::mutex> lock(space_mutex);
    auto it = space_cache.find(key);
    if (it != space_cache.end()) return it->second;
  }
  auto layer = plus_layer(N, k);
  auto ws = std::make_shared<WeightSpace>();
  ws->flavor = flavor;
  ws->N = N;
  ws->k = k;
  ws->l = l;
  ws->gamma_bound = bound;
  auto it = layer->find(l);
  if (it != layer->end()) {
    if (flavor == Flavor::plus) {
      ws->basis = it->second;
    } else {
      auto gammas = gamma_vectors(N, bound);
      for (const auto& w : it->second) {
        for (const auto& g : gammas) {
          Monomial m = w;
          m.mutable_gamma() = g;
          ws->basis.push_back(m);
        }
      }
      std::sort(ws->basis.begin(), ws->basis.end());
    }
  }
  for (std::size_t i = 0; i < ws->basis.size(); ++i) {
    ws->index.emplace(ws->basis[i], static_cast<Eigen::Index>(i));
  }
  std::lock_guard<std::mutex> lock(space_mutex);
  auto [cit, inserted] = space_cache.emplace(key, ws);
  return cit->second;
}

std::map<int, Eigen::Index> weight_layer_dims(Flavor flavor, int N, int k,
                                              std::optional<int> gamma_bound) {
  auto layer = plus_layer(N, k);
  std::map<int, Eigen::Index> dims;
  Eigen::Index mult = 1;
  if (flavor == Flavor::full) {
    if (!gamma_bound) throw std::invalid_argument("full flavor requires a gamma_degree bound");
    mult = static_cast<Eigen::Index>(gamma_vectors(N, *gamma_bound).size());
  }
  for (const auto& [l, v] : *layer) dims[l] = static_cast<Eigen::Index>(v.size()) * mult;
  return dims;
}

std::string to_text(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& u : m.word()) {
    if (!first) os << ' ';
    os << species_letter(u.species) << '{' << u.dir << ',' << u.mode << '}';
    first = false;
  }
  if (m.gamma_degree() > 0) {
    if (!first) os << ' ';
    os << "g[";
    for (std::size_t i = 0; i < m.gamma().size(); ++i) {
      if (i) os << ',';
      os << m.gamma()[i];
    }
    os << ']';
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

ModeSymbol parse_symbol(const std::string& tok, int N) {
  if (tok.size() < 6 || tok[1] != '{' || tok.back() != '}') {
    throw std::invalid_argument("malformed mode symbol: " + tok);
  }
  Species sp;
  switch (tok[0]) {
    case 'B': sp = Species::beta; break;
    case 'G': sp = Species::gamma; break;
    case 'b': sp = Species::b; break;
    case 'c': sp = Species::c; break;
    default: throw std::invalid_argument("unknown species letter in: " + tok);
  }
  std::string body = tok.substr(2, tok.size() - 3);
  std::size_t comma = body.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("malformed mode symbol: " + tok);
  int dir = std::stoi(body.substr(0, comma));
  int mode = std::stoi(body.substr(comma + 1));
  if (dir < 1 || dir > N) throw std::invalid_argument("direction out of range in: " + tok);
  if (mode >= 0) throw std::invalid_argument("word symbols must be creation modes: " + tok);
  if (sp == Species::gamma && mode == -1) {
    throw std::invalid_argument("gamma_(-1) belongs in the g[...] exponent block: " + tok);
  }
  return ModeSymbol{sp, dir, mode};
}

}  // namespace

Monomial parse_monomial(const std::string& text, int N) {
  auto toks = split_ws(text);
  if (toks.empty()) throw std::invalid_argument("empty monomial");
  Monomial m = Monomial::vacuum(N);
  if (toks.size() == 1 && toks[0] == "1") return m;
  bool saw_gamma = false;
  for (const auto& tok : toks) {
    if (tok == "1") throw std::invalid_argument("vacuum token mixed with symbols");
    if (tok.rfind("g[", 0) == 0) {
      if (saw_gamma) throw std::invalid_argument("duplicate g[...] block");
      if (tok.back() != ']') throw std::invalid_argument("malformed g[...] block: " + tok);
      saw_gamma = true;
      std::string body = tok.substr(2, tok.size() - 3);
      std::vector<std::uint32_t> exps;
      std::istringstream is(body);
      std::string part;
      while (std::getline(is, part, ',')) {
        int e = std::stoi(part);
        if (e < 0) throw std::invalid_argument("negative gamma exponent");
        exps.push_back(static_cast<std::uint32_t>(e));
      }
      if (static_cast<int>(exps.size()) != N) {
        throw std::invalid_argument("g[...] block must list exactly N exponents");
      }
      m.mutable_gamma() = exps;
      continue;
    }
    if (saw_gamma) throw std::invalid_argument("g[...] block must come last");
    ModeSymbol u = parse_symbol(tok, N);
    if (!m.word().empty()) {
      const ModeSymbol& prev = m.word().back();
      if (u < prev || (u == prev && u.is_odd())) {
        throw std::invalid_argument("monomial not in canonical order at: " + tok);
      }
    }
    m.mutable_word().push_back(u);
  }
  return m;
}

std::string to_text(const State& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    if (!first) os << " + ";
    os << to_string(c) << ' ' << to_text(m);
    first = false;
  }
  return os.str();
}

State parse_state(const std::string& text, Flavor flavor, int N) {
  State s(flavor, N);
  std::string trimmed = text;
  if (split_ws(trimmed).empty()) throw std::invalid_argument("empty state");
  if (trimmed == "0") return s;
  std::size_t pos = 0;
  while (pos != std::string::npos) {
    std::size_t next = trimmed.find(" + ", pos);
    std::string term = next == std::string::npos ? trimmed.substr(pos) : trimmed.substr(pos, next - pos);
    auto toks = split_ws(term);
    if (toks.empty()) throw std::invalid_argument("empty term in state");
    Rational coef(1);
    std::size_t start = 0;
    bool has_coef = true;
    try {
      coef = parse_rational(toks[0]);
    } catch (const std::invalid_argument&) {
      has_coef = false;
    }
    if (has_coef) start = 1;
    if (start >= toks.size()) throw std::invalid_argument("term has no monomial: " + term);
    std::ostringstream mon;
    for (std::size_t i = start; i < toks.size(); ++i) {
      if (i > start) mon << ' ';
      mon << toks[i];
    }
    Monomial m = parse_monomial(mon.str(), N);
    if (flavor == Flavor::plus && m.gamma_degree() != 0) {
      throw std::invalid_argument("gamma_(-1) exponents in a plus-flavor state");
    }
    s.add_term(m, coef);
    pos = next == std::string::npos ? next : next + 3;
  }
  return s;
}

}  // namespace bgbc
