#include "shadowcover/rational.hpp"

#include <cctype>
#include <climits>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace shadowcover {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

u128 gcd_u128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

mpz_class mpz_from_i128(i128 v) {
  const bool negative = v < 0;
  const u128 u = negative ? -static_cast<u128>(v) : static_cast<u128>(v);
  mpz_class hi = static_cast<unsigned long>(u >> 64);
  mpz_class lo = static_cast<unsigned long>(u & std::numeric_limits<std::uint64_t>::max());
  mpz_class r = (hi << 64) + lo;
  if (negative) r = -r;
  return r;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long long value) : num_(value) {
  if (value == std::numeric_limits<long long>::min()) {
    *this = from_i128(value, 1);
  }
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  *this = from_mpq(std::move(c));
}

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

Rational Rational::from_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Rational r;
  if (num == 0) return r;
  const u128 g = gcd_u128(num < 0 ? -static_cast<u128>(num) : static_cast<u128>(num),
                          static_cast<u128>(den));
  num /= static_cast<i128>(g);
  den /= static_cast<i128>(g);
  if (num > kMin64 && num <= kMax64 && den <= kMax64) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  r.big_ = std::make_unique<mpq_class>(mpz_from_i128(num), mpz_from_i128(den));
  return r;
}

Rational Rational::from_mpq(mpq_class q) {
  Rational r;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != LONG_MIN) {
    r.num_ = n.get_si();
    r.den_ = d.get_si();
    return r;
  }
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_part = body.substr(0, slash);
  const std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return from_mpq(std::move(q));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

mpz_class Rational::numerator() const {
  if (big_) return big_->get_num();
  return mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  if (big_) return big_->get_den();
  return mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  if (big_) return from_mpq(1 / *big_);
  return from_i128(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_i128(i128{a.num_} + b.num_, 1);
    return Rational::from_i128(i128{a.num_} * b.den_ + i128{b.num_} * a.den_,
                               i128{a.den_} * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_i128(i128{a.num_} - b.num_, 1);
    return Rational::from_i128(i128{a.num_} * b.den_ - i128{b.num_} * a.den_,
                               i128{a.den_} * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() - b.to_mpq());
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    return Rational::from_i128(i128{a.num_} * b.num_, i128{a.den_} * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!a.big_ && !b.big_) {
    return Rational::from_i128(i128{a.num_} * b.den_, i128{a.den_} * b.num_);
  }
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

Rational& Rational::operator+=(const Rational& rhs) { return *this = *this + rhs; }
Rational& Rational::operator-=(const Rational& rhs) { return *this = *this - rhs; }
Rational& Rational::operator*=(const Rational& rhs) { return *this = *this * rhs; }
Rational& Rational::operator/=(const Rational& rhs) { return *this = *this / rhs; }

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  if (a.big_ || b.big_) return false;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return i128{a.num_} * b.den_ <=> i128{b.num_} * a.den_;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace shadowcover
