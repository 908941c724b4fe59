#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace bgbc {

// Exact rational scalar used everywhere in the engine.  Wraps a
// boost::multiprecision rational behind non-greedy constructors so the type
// composes cleanly with Eigen expression templates.
class Rational {
public:
  using rep = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(n) {}
  Rational(long long num, long long den) : v_(num, den) {}
  explicit Rational(rep r) : v_(std::move(r)) {}

  const rep& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) { return Rational(a.v_ / b.v_); }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  rep v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::string to_string(const Rational& r);

// Parses "n", "-n", or "n/d".  Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

// Generalized binomial coefficient binom(n, m) for integer n (possibly
// negative) and m >= 0; always an integer.
long long binom(long long n, long long m);

// Exact factorial, small arguments only.
long long factorial(int n);

}  // namespace bgbc
