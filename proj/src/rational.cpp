#include "matcode/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace matcode {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const long long n = std::stoll(text.substr(0, slash));
    const long long d = std::stoll(text.substr(slash + 1));
    return Rational(n, d);
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    const std::string head = text.substr(0, dot);
    const std::string tail = text.substr(dot + 1);
    if (tail.size() > 18) throw std::invalid_argument("too many decimal places");
    long long den = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
    const bool negative = !head.empty() && head[0] == '-';
    const long long whole = head.empty() || head == "-" ? 0 : std::stoll(head);
    const long long frac = tail.empty() ? 0 : std::stoll(tail);
    const long long mag = (whole < 0 ? -whole : whole) * den + frac;
    return Rational(negative ? -mag : mag, den);
  }
  return Rational(std::stoll(text), 1);
}

bool scaled_geq(long long value, const Rational& r, long long scale) {
  const __int128 lhs = static_cast<__int128>(value) * r.den;
  const __int128 rhs = static_cast<__int128>(r.num) * scale;
  return lhs >= rhs;
}

}  // namespace matcode
