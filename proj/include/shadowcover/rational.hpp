#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace shadowcover {

// Exact rational number, always in lowest terms with a positive denominator.
//
// Values whose numerator and denominator fit in 64 bits are stored inline and
// use 128-bit intermediate arithmetic; anything larger spills into a GMP mpq.
// The representation is canonical: a value that fits inline is never stored
// in the big form, so equality can compare representations directly.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  // Accepts "p" or "p/q" with an optional leading sign; throws
  // std::invalid_argument on anything else (including q == 0).
  static Rational parse(std::string_view text);

  std::string str() const;
  double to_double() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;

  Rational operator-() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_i128(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class q);
  bool is_big() const { return big_ != nullptr; }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace shadowcover
