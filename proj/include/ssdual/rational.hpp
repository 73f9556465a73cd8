#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "ssdual/error.hpp"

namespace ssdual {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar in canonical form: denominator > 0 and
/// gcd(|num|, den) == 1. Every operation is exact; there is no rounding
/// anywhere in this type.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(int n) : num_(n), den_(1) {}        // NOLINT
  explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

  /// Parses "7", "-2/5", "1/3". Whitespace is not accepted.
  static Rational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const noexcept { return num_ == 1 && den_ == 1; }
  bool is_negative() const noexcept { return num_ < 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

  /// Canonical text form: "7" when integral, otherwise "num/den".
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    Rational r;
    if (a.den_ == b.den_) {
      r.num_ = a.num_ + b.num_;
      r.den_ = a.den_;
    } else {
      r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
      r.den_ = a.den_ * b.den_;
    }
    r.reduce();
    return r;
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational nb = b;
    nb.num_ = -nb.num_;
    return a + nb;
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    // Cross-reduce first to keep intermediates small.
    BigInt g1 = boost::multiprecision::gcd(a.num_, b.den_);
    BigInt g2 = boost::multiprecision::gcd(b.num_, a.den_);
    Rational r;
    r.num_ = (a.num_ / g1) * (b.num_ / g2);
    r.den_ = (a.den_ / g2) * (b.den_ / g1);
    return r;
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("DivisionByZero", "rational division by zero");
    Rational inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    if (inv.den_ < 0) {
      inv.num_ = -inv.num_;
      inv.den_ = -inv.den_;
    }
    return a * inv;
  }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  void normalize() {
    if (den_ == 0) throw Error("DivisionByZero", "zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    reduce();
  }

  void reduce() {
    if (den_ == 1) return;
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

inline Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return Error("BadRational", "cannot parse rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  auto check_int = [&](std::string_view s) {
    if (s.empty()) throw bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw bad();
  };
  if (slash == std::string_view::npos) {
    check_int(text);
    return Rational(BigInt(std::string(text)));
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  return Rational(BigInt(std::string(num)), BigInt(std::string(den)));
}

}  // namespace ssdual

namespace Eigen {

template <>
struct NumTraits<ssdual::Rational> : GenericNumTraits<ssdual::Rational> {
  typedef ssdual::Rational Real;
  typedef ssdual::Rational NonInteger;
  typedef ssdual::Rational Nested;
  typedef long long Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
  static inline Real epsilon() { return ssdual::Rational(0); }
  static inline Real dummy_precision() { return ssdual::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
