#pragma once

// Exact rationals, always kept in lowest terms with positive denominator.

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include "walg/bigint.hpp"

namespace walg {

class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long v) : num_(v), den_(1) {}
  Rat(int v) : num_(v), den_(1) {}
  Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    normalize();
  }
  Rat(long long num, long long den) : Rat(Int(num), Int(den)) {}

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_negative() const { return num_.sign() < 0; }
  bool is_integer() const { return den_ == Int(1); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rat operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  double to_double() const { return num_.to_double() / den_.to_double(); }

  // "5", "-7/3"; integers print without denominator
  std::string to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

  // <int> | <int>/<int> | decimal literal, parsed exactly
  static Rat from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
      Int n = Int::from_string(s.substr(0, slash));
      Int d = Int::from_string(s.substr(slash + 1));
      return Rat(std::move(n), std::move(d));
    }
    auto dot = s.find('.');
    if (dot == std::string_view::npos) return Rat(Int::from_string(s), Int(1));
    std::string_view frac = s.substr(dot + 1);
    if (frac.empty()) throw std::invalid_argument("trailing decimal point");
    std::string digits(s.substr(0, dot));
    bool neg = !digits.empty() && digits[0] == '-';
    digits += frac;
    Int den(1);
    for (std::size_t i = 0; i < frac.size(); ++i) den *= Int(10);
    Int num = Int::from_string(digits);
    if (neg && num.is_zero()) return Rat();  // "-0.0"
    return Rat(std::move(num), std::move(den));
  }

private:
  Int num_;
  Int den_;  // > 0

  void normalize() {
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = Int(1);
      return;
    }
    Int g = Int::gcd(num_, den_);
    if (!(g == Int(1))) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
};

inline Rat abs(const Rat& x) { return x.is_negative() ? -x : x; }

}  // namespace walg
