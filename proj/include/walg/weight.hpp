#pragma once

// The weight object [0, inf]: exact nonnegative rationals extended with a
// distinguished infinity, under both monoidal closed structures.
//
// Sum and product absorb into infinity; the undetermined forms are fixed as
//   0 * inf = inf        (product; tensoring preserves the initial object)
//   0 bullet inf = 0     (the involution-conjugate product)
//   inf - inf = 0        (truncated subtraction)
//   0/0 = inf/inf = 0    (division)
// and every operation here is exact -- no floating point.

#include <cmath>
#include <compare>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "walg/rational.hpp"

namespace walg {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Weight {
public:
  Weight() : inf_(false), val_() {}
  Weight(long long v) : inf_(false), val_(v) { check_nonneg(); }
  Weight(int v) : Weight(static_cast<long long>(v)) {}
  explicit Weight(Rat v) : inf_(false), val_(std::move(v)) { check_nonneg(); }
  Weight(long long num, long long den) : inf_(false), val_(num, den) {
    check_nonneg();
  }

  static Weight infinity() {
    Weight w;
    w.inf_ = true;
    return w;
  }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }
  bool is_zero() const { return !inf_ && val_.is_zero(); }

  // value of a finite weight
  const Rat& rat() const {
    if (inf_) throw error("infinite weight has no rational value");
    return val_;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.val_ == b.val_;
  }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (a.inf_ && b.inf_) return std::strong_ordering::equal;
    if (a.inf_) return std::strong_ordering::greater;
    if (b.inf_) return std::strong_ordering::less;
    return a.val_ <=> b.val_;
  }

  friend Weight operator+(const Weight& a, const Weight& b) {
    if (a.inf_ || b.inf_) return infinity();
    return Weight(a.val_ + b.val_);
  }

  // 0 * inf = inf * 0 = inf
  friend Weight operator*(const Weight& a, const Weight& b) {
    if (a.inf_ || b.inf_) return infinity();
    return Weight(a.val_ * b.val_);
  }

  Weight& operator+=(const Weight& o) { return *this = *this + o; }
  Weight& operator*=(const Weight& o) { return *this = *this * o; }

  double to_double() const {
    return inf_ ? std::numeric_limits<double>::infinity() : val_.to_double();
  }

  std::string to_string() const { return inf_ ? "inf" : val_.to_string(); }

  // `inf` | <int> | <int>/<int> | decimal with at most 9 fractional digits
  static Weight from_string(std::string_view s) {
    if (s == "inf") return infinity();
    auto dot = s.find('.');
    if (dot != std::string_view::npos && s.size() - dot - 1 > 9)
      throw error("weight literal '" + std::string(s) +
                  "': more than 9 fractional digits");
    Rat r;
    try {
      r = Rat::from_string(s);
    } catch (const std::invalid_argument& e) {
      throw error("bad weight literal '" + std::string(s) + "': " + e.what());
    } catch (const std::domain_error& e) {
      throw error("bad weight literal '" + std::string(s) + "': " + e.what());
    }
    if (r.is_negative())
      throw error("weight literal '" + std::string(s) + "' is negative");
    return Weight(std::move(r));
  }

private:
  bool inf_;
  Rat val_;

  void check_nonneg() const {
    if (val_.is_negative()) throw error("negative weight");
  }
};

// involution: 0 <-> inf, otherwise the reciprocal
inline Weight inv(const Weight& w) {
  if (w.is_infinite()) return Weight(0);
  if (w.is_zero()) return Weight::infinity();
  return Weight(Rat(1) / w.rat());
}

// (a^-1 + b^-1)^-1; unit inf, absorbing 0
inline Weight harmonic(const Weight& a, const Weight& b) {
  return inv(inv(a) + inv(b));
}

// (a^-1 * b^-1)^-1; agrees with the product except 0 bullet inf = 0
inline Weight bullet(const Weight& a, const Weight& b) {
  return inv(inv(a) * inv(b));
}

// internal hom for the additive tensor: truncated subtraction nu - mu,
// with inf - inf = 0
inline Weight hom_plus(const Weight& mu, const Weight& nu) {
  if (mu.is_infinite()) return Weight(0);
  if (nu.is_infinite()) return Weight::infinity();
  Rat d = nu.rat() - mu.rat();
  return d.is_negative() ? Weight(0) : Weight(std::move(d));
}

// internal hom for the multiplicative tensor: nu / mu, with
// 0/0 = inf/inf = 0, nu/inf = 0, nu/0 = inf for nu > 0
inline Weight hom_dot(const Weight& mu, const Weight& nu) {
  if (mu.is_infinite()) return Weight(0);
  if (mu.is_zero()) return nu.is_zero() ? Weight(0) : Weight::infinity();
  if (nu.is_infinite()) return Weight::infinity();
  return Weight(nu.rat() / mu.rat());
}

// empty sup is 0 (terminal object)
inline Weight sup_of(std::span<const Weight> items) {
  Weight r(0);
  for (const Weight& w : items)
    if (w > r) r = w;
  return r;
}

// empty inf is infinity (initial object)
inline Weight inf_of(std::span<const Weight> items) {
  Weight r = Weight::infinity();
  for (const Weight& w : items)
    if (w < r) r = w;
  return r;
}

inline Weight sup_of(std::initializer_list<Weight> items) {
  return sup_of(std::span<const Weight>(items.begin(), items.size()));
}
inline Weight inf_of(std::initializer_list<Weight> items) {
  return inf_of(std::span<const Weight>(items.begin(), items.size()));
}

// P(w) = 1 iff w finite, Q(w) = 1 iff w is zero; Q implies P.
struct TruthPair {
  bool p;
  bool q;
  friend bool operator==(const TruthPair&, const TruthPair&) = default;
};

inline TruthPair classify(const Weight& w) {
  return {w.is_finite(), w.is_zero()};
}

// the covariant embedding of truth values: M(0) = inf, M(1) = 0
inline Weight truth_embed(bool b) { return b ? Weight(0) : Weight::infinity(); }

enum class Scale { probabilistic, relative };

// A weight pushed through exp/ln; inherently inexact.
struct FloatWeight {
  double value;
  Scale scale;
};

// probabilistic: p = exp(-w) in [0,1]; relative: x = ln(w) in [-inf,inf]
inline FloatWeight transform(const Weight& w, Scale target) {
  if (target == Scale::probabilistic) {
    double p = w.is_infinite() ? 0.0 : std::exp(-w.to_double());
    return {p, Scale::probabilistic};
  }
  double x;
  if (w.is_zero())
    x = -std::numeric_limits<double>::infinity();
  else if (w.is_infinite())
    x = std::numeric_limits<double>::infinity();
  else
    x = std::log(w.to_double());
  return {x, Scale::relative};
}

// A double-backed stand-in for a weight; `exact` stays false for anything
// that went through exp/ln, since those leave the rational field.
struct ApproxWeight {
  double value;
  bool exact;
};

inline ApproxWeight transform_back(const FloatWeight& fw) {
  if (fw.scale == Scale::probabilistic)
    return {fw.value == 0.0 ? std::numeric_limits<double>::infinity()
                            : -std::log(fw.value),
            false};
  return {std::exp(fw.value), false};
}

// Fixed evaluation grid: units, a value below 1, non-dyadic rationals and
// both absorbing elements.
inline const std::vector<Weight>& standard_grid() {
  static const std::vector<Weight> grid = {
      Weight(0),    Weight(1, 3), Weight(1, 2), Weight(1),
      Weight(3, 2), Weight(2),    Weight(7),    Weight::infinity()};
  return grid;
}

}  // namespace walg
