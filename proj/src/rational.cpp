#include "bgbc/rational.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bgbc {

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.value();
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.value();
  return os.str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Rational::rep(boost::multiprecision::cpp_int(text)));
    }
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(Rational::rep(num, den));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

long long binom(long long n, long long m) {
  if (m < 0) throw std::invalid_argument("binom: negative lower index");
  long long num = 1;
  long long den = 1;
  for (long long j = 0; j < m; ++j) {
    num *= n - j;
    den *= j + 1;
  }
  return num / den;
}

long long factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  long long r = 1;
  for (int j = 2; j <= n; ++j) r *= j;
  return r;
}

}  // namespace bgbc
