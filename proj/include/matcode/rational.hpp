#pragma once

#include <string>

namespace matcode {

// Small exact rational. Goodness thresholds are compared against integer
// counts, and those comparisons must not go through floating point.
struct Rational {
  long long num = 0;
  long long den = 1;  // always > 0, fraction always reduced

  Rational() = default;
  Rational(long long n, long long d);

  // Accepts "3", "1/2" and plain decimals like "0.05".
  static Rational parse(const std::string& text);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

// value >= r * scale, exactly.
bool scaled_geq(long long value, const Rational& r, long long scale);

}  // namespace matcode
