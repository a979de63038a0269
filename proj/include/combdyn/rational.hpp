#pragma once

#include <compare>
#include <string>

namespace combdyn {

// Exact rational number; orbit averages never touch floating point.
class Rational {
 public:
  Rational() = default;
  Rational(long long num, long long den = 1);

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational& operator+=(const Rational& o);
  friend Rational operator+(Rational x, const Rational& y) { return x += y; }

  friend bool operator==(const Rational&, const Rational&) = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  std::string str() const;  // "7/2", integers without denominator

 private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace combdyn
