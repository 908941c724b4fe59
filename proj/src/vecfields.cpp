#include "bgbc/vecfields.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bgbc {

int total_degree(const MultiIndex& s) {
  int d = 0;
  for (auto e : s) d += static_cast<int>(e);
  return d;
}

std::vector<MultiIndex> monomials_of_degree(int N, int d) {
  if (N <= 0 || d < 0) return {};
  std::vector<MultiIndex> out;
  MultiIndex cur(static_cast<size_t>(N), 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == N - 1) {
      cur[static_cast<size_t>(pos)] = static_cast<std::uint32_t>(rem);
      out.push_back(cur);
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[static_cast<size_t>(pos)] = static_cast<std::uint32_t>(e);
      self(self, pos + 1, rem - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

void poly_add_term(Poly& p, const MultiIndex& s, const Rational& c) {
  if (c.is_zero()) return;
  auto it = p.find(s);
  if (it == p.end()) {
    p.emplace(s, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [s, cs] : a) {
    for (const auto& [t, ct] : b) {
      MultiIndex u(s.size());
      for (size_t i = 0; i < s.size(); ++i) u[i] = s[i] + t[i];
      poly_add_term(out, u, cs * ct);
    }
  }
  return out;
}

Poly poly_diff(const Poly& p, int var) {
  Poly out;
  const size_t i = static_cast<size_t>(var - 1);
  for (const auto& [s, c] : p) {
    if (var < 1 || i >= s.size()) throw std::invalid_argument("poly_diff: variable out of range");
    if (s[i] == 0) continue;
    MultiIndex t = s;
    --t[i];
    poly_add_term(out, t, c * Rational(static_cast<long long>(s[i])));
  }
  return out;
}

AlgebraType algebra_type_from_letter(char t) {
  if (t == 'A' || t == 'a') return AlgebraType::A;
  if (t == 'C' || t == 'c') return AlgebraType::C;
  throw std::invalid_argument("algebra type must be A or C");
}

char algebra_type_letter(AlgebraType t) { return t == AlgebraType::A ? 'A' : 'C'; }

void PolyVectorField::add_term(const MultiIndex& s, int dir, const Rational& coef) {
  if (static_cast<int>(s.size()) != N_) throw std::invalid_argument("multi-index length != N");
  if (dir < 1 || dir > N_) throw std::invalid_argument("direction out of range");
  if (coef.is_zero()) return;
  auto key = std::make_pair(s, dir);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coef);
    return;
  }
  it->second += coef;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly PolyVectorField::component(int dir) const {
  Poly out;
  for (const auto& [key, c] : terms_)
    if (key.second == dir) out.emplace(key.first, c);
  return out;
}

std::optional<int> PolyVectorField::degree() const {
  std::optional<int> deg;
  for (const auto& [key, c] : terms_) {
    (void)c;
    int d = total_degree(key.first) - 1;
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
  if (N_ == 0) N_ = o.N_;
  if (o.N_ != 0 && o.N_ != N_) throw std::invalid_argument("mixed ambient dimensions");
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& o) {
  if (N_ == 0) N_ = o.N_;
  if (o.N_ != 0 && o.N_ != N_) throw std::invalid_argument("mixed ambient dimensions");
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

PolyVectorField& PolyVectorField::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, val] : terms_) {
    (void)key;
    val *= c;
  }
  return *this;
}

PolyVectorField bracket(const PolyVectorField& u, const PolyVectorField& v) {
  if (u.N() != v.N()) throw std::invalid_argument("mixed ambient dimensions");
  const int N = u.N();
  PolyVectorField out(N);
  std::vector<Poly> P(static_cast<size_t>(N) + 1), Q(static_cast<size_t>(N) + 1);
  for (int i = 1; i <= N; ++i) {
    P[static_cast<size_t>(i)] = u.component(i);
    Q[static_cast<size_t>(i)] = v.component(i);
  }
  for (int j = 1; j <= N; ++j) {
    Poly comp;
    for (int i = 1; i <= N; ++i) {
      for (const auto& [s, c] : poly_mul(P[static_cast<size_t>(i)], poly_diff(Q[static_cast<size_t>(j)], i)))
        poly_add_term(comp, s, c);
      for (const auto& [s, c] : poly_mul(Q[static_cast<size_t>(i)], poly_diff(P[static_cast<size_t>(j)], i)))
        poly_add_term(comp, s, -c);
    }
    for (const auto& [s, c] : comp) out.add_term(s, j, c);
  }
  return out;
}

Poly divergence(const PolyVectorField& v) {
  Poly out;
  for (int j = 1; j <= v.N(); ++j)
    for (const auto& [s, c] : poly_diff(v.component(j), j)) poly_add_term(out, s, c);
  return out;
}

PolyForm PolyForm::volume(int N) {
  if (N <= 0) throw std::invalid_argument("N must be positive");
  PolyForm w(N);
  std::vector<int> idx(static_cast<size_t>(N));
  for (int i = 0; i < N; ++i) idx[static_cast<size_t>(i)] = i + 1;
  w.add_term(idx, MultiIndex(static_cast<size_t>(N), 0), Rational(1));
  return w;
}

PolyForm PolyForm::symplectic(int N) {
  if (N <= 0 || N % 2 != 0) throw std::invalid_argument("symplectic form needs even N");
  PolyForm w(N);
  for (int i = 1; 2 * i <= N; ++i)
    w.add_term({2 * i - 1, 2 * i}, MultiIndex(static_cast<size_t>(N), 0), Rational(1));
  return w;
}

void PolyForm::add_term(std::vector<int> idx, const MultiIndex& s, const Rational& coef) {
  if (static_cast<int>(s.size()) != N_) throw std::invalid_argument("multi-index length != N");
  if (coef.is_zero()) return;
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i)
    for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || idx[i] > N_) throw std::invalid_argument("form index out of range");
    if (i > 0 && idx[i] == idx[i - 1]) return;
  }
  Poly& comp = comps_[idx];
  poly_add_term(comp, s, sign > 0 ? coef : -coef);
  if (comp.empty()) comps_.erase(idx);
}

PolyForm PolyForm::d() const {
  PolyForm out(N_);
  for (const auto& [I, f] : comps_) {
    for (const auto& [s, c] : f) {
      for (int m = 1; m <= N_; ++m) {
        const size_t mi = static_cast<size_t>(m - 1);
        if (s[mi] == 0) continue;
        MultiIndex t = s;
        --t[mi];
        std::vector<int> J;
        J.reserve(I.size() + 1);
        J.push_back(m);
        J.insert(J.end(), I.begin(), I.end());
        out.add_term(std::move(J), t, c * Rational(static_cast<long long>(s[mi])));
      }
    }
  }
  return out;
}

PolyForm PolyForm::contract(const PolyVectorField& v) const {
  if (v.N() != N_) throw std::invalid_argument("mixed ambient dimensions");
  PolyForm out(N_);
  std::vector<Poly> P(static_cast<size_t>(N_) + 1);
  for (int i = 1; i <= N_; ++i) P[static_cast<size_t>(i)] = v.component(i);
  for (const auto& [I, f] : comps_) {
    for (size_t pos = 0; pos < I.size(); ++pos) {
      const Poly& comp = P[static_cast<size_t>(I[pos])];
      if (comp.empty()) continue;
      Poly prod = poly_mul(f, comp);
      std::vector<int> J;
      J.reserve(I.size() - 1);
      for (size_t q = 0; q < I.size(); ++q)
        if (q != pos) J.push_back(I[q]);
      const Rational sgn = (pos % 2 == 0) ? Rational(1) : Rational(-1);
      for (const auto& [s, c] : prod) out.add_term(J, s, sgn * c);
    }
  }
  return out;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  if (N_ == 0) N_ = o.N_;
  if (o.N_ != 0 && o.N_ != N_) throw std::invalid_argument("mixed ambient dimensions");
  for (const auto& [I, f] : o.comps_)
    for (const auto& [s, c] : f) add_term(I, s, c);
  return *this;
}

PolyForm operator*(const Rational& c, PolyForm w) {
  if (c.is_zero()) return PolyForm(w.N());
  for (auto& [I, f] : w.comps_) {
    (void)I;
    for (auto& [s, v] : f) {
      (void)s;
      v *= c;
    }
  }
  return w;
}

PolyForm lie_derivative(const PolyVectorField& v, const PolyForm& w) {
  return w.contract(v).d() + w.d().contract(v);
}

long long vect_dim(AlgebraType type, int N, int n) {
  if (N <= 0 || n < 0) throw std::invalid_argument("vect_dim: need N >= 1, n >= 0");
  if (type == AlgebraType::A)
    return static_cast<long long>(N) * binom(N + n, n + 1) - binom(N + n - 1, n);
  if (N % 2 != 0) throw std::invalid_argument("type C needs even N");
  return binom(N + n + 1, n + 2);
}

namespace {

// Column order shared by basis_graded and field_coordinates: monomials of
// degree n + 1 in the fixed enumeration order, directions innermost.
struct ColumnIndex {
  std::vector<MultiIndex> mons;
  int N = 0;

  ColumnIndex(int N_, int n) : mons(monomials_of_degree(N_, n + 1)), N(N_) {}

  Eigen::Index size() const { return static_cast<Eigen::Index>(mons.size()) * N; }
  Eigen::Index of(const MultiIndex& s, int dir) const {
    auto it = std::lower_bound(mons.begin(), mons.end(), s,
                               [](const MultiIndex& a, const MultiIndex& b) { return a > b; });
    if (it == mons.end() || *it != s) throw std::logic_error("monomial outside the graded piece");
    return static_cast<Eigen::Index>(it - mons.begin()) * N + (dir - 1);
  }
  PolyVectorField field_of(const Vec& coords) const {
    PolyVectorField v(N);
    for (Eigen::Index c = 0; c < coords.size(); ++c)
      if (!coords[c].is_zero())
        v.add_term(mons[static_cast<size_t>(c / N)], static_cast<int>(c % N) + 1, coords[c]);
    return v;
  }
};

} // namespace

std::vector<PolyVectorField> basis_graded(AlgebraType type, int N, int n) {
  if (N <= 0) throw std::invalid_argument("N must be positive");
  if (n < 0) throw std::invalid_argument("graded basis starts at degree 0");
  if (type == AlgebraType::C && N % 2 != 0) throw std::invalid_argument("type C needs even N");

  const ColumnIndex cols(N, n);
  Mat constraint;
  if (type == AlgebraType::A) {
    const auto rows = monomials_of_degree(N, n);
    std::map<MultiIndex, Eigen::Index> row_of;
    for (size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], static_cast<Eigen::Index>(r));
    constraint = Mat::Constant(static_cast<Eigen::Index>(rows.size()), cols.size(), Rational(0));
    for (size_t mi = 0; mi < cols.mons.size(); ++mi) {
      const MultiIndex& s = cols.mons[mi];
      for (int j = 1; j <= N; ++j) {
        const size_t ji = static_cast<size_t>(j - 1);
        if (s[ji] == 0) continue;
        MultiIndex t = s;
        --t[ji];
        constraint(row_of.at(t), static_cast<Eigen::Index>(mi) * N + (j - 1)) +=
            Rational(static_cast<long long>(s[ji]));
      }
    }
  } else {
    const PolyForm omega = PolyForm::symplectic(N);
    const auto row_mons = monomials_of_degree(N, n);
    std::map<std::pair<std::vector<int>, MultiIndex>, Eigen::Index> row_of;
    for (int a = 1; a <= N; ++a)
      for (int b = a + 1; b <= N; ++b)
        for (const auto& s : row_mons)
          row_of.emplace(std::make_pair(std::vector<int>{a, b}, s),
                         static_cast<Eigen::Index>(row_of.size()));
    constraint = Mat::Constant(static_cast<Eigen::Index>(row_of.size()), cols.size(), Rational(0));
    for (size_t mi = 0; mi < cols.mons.size(); ++mi) {
      for (int j = 1; j <= N; ++j) {
        PolyVectorField e(N);
        e.add_term(cols.mons[mi], j, Rational(1));
        const PolyForm lv = lie_derivative(e, omega);
        for (const auto& [I, f] : lv.components())
          for (const auto& [s, c] : f)
            constraint(row_of.at({I, s}), static_cast<Eigen::Index>(mi) * N + (j - 1)) = c;
      }
    }
  }

  const Mat ker = kernel_basis(constraint);
  std::vector<PolyVectorField> out;
  out.reserve(static_cast<size_t>(ker.cols()));
  for (Eigen::Index c = 0; c < ker.cols(); ++c) out.push_back(cols.field_of(ker.col(c)));
  return out;
}

Vec field_coordinates(const PolyVectorField& v, int n) {
  const ColumnIndex cols(v.N(), n);
  Vec out = Vec::Constant(cols.size(), Rational(0));
  for (const auto& [key, c] : v.terms()) {
    if (total_degree(key.first) != n + 1)
      throw std::invalid_argument("field is not homogeneous of the requested degree");
    out[cols.of(key.first, key.second)] = c;
  }
  return out;
}

PolyVectorField default_g1(int N) {
  if (N < 2) throw std::invalid_argument("default degree-1 witness needs N >= 2");
  PolyVectorField v(N);
  MultiIndex s(static_cast<size_t>(N), 0);
  s[0] = 2;
  v.add_term(s, 2, Rational(1));
  return v;
}

bool GenerationReport::full_rank() const {
  for (const auto& row : rows)
    if (row.dim_achieved != row.dim_target) return false;
  return true;
}

GenerationReport generation_check(AlgebraType type, int N, int n_max,
                                  const std::optional<PolyVectorField>& g1) {
  if (n_max < 1) throw std::invalid_argument("generation check needs n_max >= 1");
  const PolyVectorField seed = g1 ? *g1 : default_g1(N);
  if (seed.N() != N) throw std::invalid_argument("g1 ambient dimension mismatch");
  if (seed.is_zero() || seed.degree() != std::optional<int>(1))
    throw std::invalid_argument("g1 must be a nonzero homogeneous degree-1 field");
  {
    const auto deg1 = basis_graded(type, N, 1);
    SpanBuilder check(field_coordinates(seed, 1).size());
    for (const auto& f : deg1) check.insert(field_coordinates(f, 1));
    if (!check.contains(field_coordinates(seed, 1)))
      throw std::invalid_argument("g1 is not an element of the degree-1 piece");
  }

  GenerationReport report;
  report.type = type;
  report.N = N;
  report.g1_text = to_text(seed);

  const auto g0 = basis_graded(type, N, 0);

  // achieved[n]: independent spanning set of what brackets reach in degree n.
  std::vector<std::vector<PolyVectorField>> achieved(static_cast<size_t>(n_max) + 1);
  std::vector<std::optional<SpanBuilder>> spans(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    spans[static_cast<size_t>(n)].emplace(static_cast<Eigen::Index>(monomials_of_degree(N, n + 1).size()) * N);

  auto push = [&](int n, const PolyVectorField& f) {
    if (f.is_zero()) return;
    if (spans[static_cast<size_t>(n)]->insert(field_coordinates(f, n)))
      achieved[static_cast<size_t>(n)].push_back(f);
  };
  auto close_under_g0 = [&](int n) {
    auto& list = achieved[static_cast<size_t>(n)];
    for (size_t i = 0; i < list.size(); ++i)
      for (const auto& h : g0) push(n, bracket(h, list[i]));
  };

  for (const auto& h : g0) push(0, h);
  push(1, seed);
  close_under_g0(1);
  for (int n = 2; n <= n_max; ++n) {
    for (int m = 1; m <= n - m; ++m)
      for (const auto& a : achieved[static_cast<size_t>(m)])
        for (const auto& b : achieved[static_cast<size_t>(n - m)]) push(n, bracket(a, b));
    close_under_g0(n);
  }

  for (int n = 0; n <= n_max; ++n) {
    GenerationReport::Row row;
    row.degree = n;
    row.dim_target = vect_dim(type, N, n);
    row.dim_achieved = spans[static_cast<size_t>(n)]->dim();
    report.rows.push_back(row);
  }
  return report;
}

Mat to_linear_matrix(const PolyVectorField& v) {
  const auto deg = v.degree();
  if (deg && *deg != 0) throw std::invalid_argument("not a linear vector field");
  Mat m = Mat::Constant(v.N(), v.N(), Rational(0));
  for (const auto& [key, c] : v.terms()) {
    int a = 0;
    for (size_t i = 0; i < key.first.size(); ++i)
      if (key.first[i] == 1) a = static_cast<int>(i) + 1;
    m(a - 1, key.second - 1) = c;
  }
  return m;
}

std::string to_text(const PolyVectorField& v) {
  if (v.is_zero()) return "0";
  // Terms with the leading exponent descending, matching monomials_of_degree.
  std::vector<std::pair<std::pair<MultiIndex, int>, Rational>> terms(v.terms().begin(), v.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms) {
    if (first) {
      if (c.sign() < 0) os << "- ";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    os << to_string(abs(c));
    for (size_t i = 0; i < key.first.size(); ++i) {
      if (key.first[i] == 0) continue;
      os << " x" << (i + 1);
      if (key.first[i] > 1) os << "^" << key.first[i];
    }
    os << " d" << key.second;
  }
  return os.str();
}

PolyVectorField parse_vector_field(const std::string& text, int N) {
  PolyVectorField out(N);
  std::istringstream is(text);
  std::vector<std::string> tokens;
  for (std::string tok; is >> tok;) tokens.push_back(tok);
  if (tokens.empty() || (tokens.size() == 1 && tokens[0] == "0")) return out;

  auto is_number = [](const std::string& t) {
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    return i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]));
  };

  size_t pos = 0;
  while (pos < tokens.size()) {
    Rational sign(1);
    while (pos < tokens.size() && (tokens[pos] == "+" || tokens[pos] == "-")) {
      if (tokens[pos] == "-") sign = -sign;
      ++pos;
    }
    if (pos >= tokens.size()) throw std::invalid_argument("dangling sign in vector field text");
    Rational coef(1);
    if (is_number(tokens[pos])) {
      coef = parse_rational(tokens[pos]);
      ++pos;
    }
    MultiIndex s(static_cast<size_t>(N), 0);
    bool closed = false;
    while (pos < tokens.size()) {
      const std::string& t = tokens[pos];
      if (t.size() >= 2 && t[0] == 'x') {
        size_t caret = t.find('^');
        int var = std::stoi(t.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        long e = caret == std::string::npos ? 1 : std::stol(t.substr(caret + 1));
        if (var < 1 || var > N || e < 0) throw std::invalid_argument("bad variable token: " + t);
        s[static_cast<size_t>(var - 1)] += static_cast<std::uint32_t>(e);
        ++pos;
      } else if (t.size() >= 2 && t[0] == 'd') {
        int dir = std::stoi(t.substr(1));
        if (dir < 1 || dir > N) throw std::invalid_argument("bad direction token: " + t);
        out.add_term(s, dir, sign * coef);
        ++pos;
        closed = true;
        break;
      } else {
        throw std::invalid_argument("unexpected token: " + t);
      }
    }
    if (!closed) throw std::invalid_argument("term missing its direction");
  }
  return out;
}

} // namespace bgbc
