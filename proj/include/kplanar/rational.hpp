#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kplanar {

using Int = boost::multiprecision::cpp_int;

enum class Rounding { down, up, half_even };

// Exact rational scalar. Always kept in lowest terms with a positive
// denominator, so equality is plain field comparison.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(long long n, long long d) : Rational(Int(n), Int(d)) {}
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const { return raw(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int lhs = a.num_ * b.den_;
    const Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  Int floor() const {
    Int q = num_ / den_;
    if (num_ < 0 && num_ % den_ != 0) --q;
    return q;
  }
  Int ceil() const { return -(-*this).floor(); }

  Rational pow(unsigned e) const {
    Rational r(1);
    Rational base = *this;
    for (; e; e >>= 1) {
      if (e & 1) r *= base;
      base *= base;
    }
    return r;
  }

  // Parses "p/q" or "p" (optional leading minus on p).
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(Int(s), Int(1));
      return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

  // "p/q" for non-integers, "p" otherwise. Round-trips through parse().
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  // Fixed-point decimal with explicit rounding; reporting-layer only.
  std::string decimal(int digits, Rounding mode = Rounding::half_even) const {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int scaled;
    const Rational v = *this * Rational(scale);
    switch (mode) {
      case Rounding::down: scaled = v.floor(); break;
      case Rounding::up: scaled = v.ceil(); break;
      case Rounding::half_even: {
        const Int fl = v.floor();
        const Rational frac = v - Rational(fl);
        if (frac * 2 < Rational(1)) scaled = fl;
        else if (frac * 2 > Rational(1)) scaled = fl + 1;
        else scaled = (fl % 2 == 0) ? fl : fl + 1;
        break;
      }
    }
    bool neg = scaled < 0;
    Int mag = neg ? Int(-scaled) : scaled;
    std::string t = mag.str();
    if (digits == 0) return (neg ? "-" : "") + t;
    if ((int)t.size() <= digits) t.insert(0, digits + 1 - t.size(), '0');
    t.insert(t.size() - digits, ".");
    return (neg ? "-" : "") + t;
  }

  double to_double() const {  // rendering only, never used in predicates
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

 private:
  static Rational raw(Int n, Int d) {
    Rational r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_, den_;
};

// floor(x^(1/k)) for x >= 0.
inline Int integer_root(const Int& x, unsigned k) {
  if (x < 0) throw std::domain_error("integer_root: negative radicand");
  if (x == 0 || x == 1 || k == 1) return x;
  Int lo = 0, hi = 1;
  while (boost::multiprecision::pow(hi, k) <= x) hi <<= 1;
  while (lo + 1 < hi) {
    Int mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, k) <= x) lo = mid;
    else hi = mid;
  }
  return lo;
}

}  // namespace kplanar
