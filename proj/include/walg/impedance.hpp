#pragma once

// Exact arithmetic on the projective line over the Gaussian rationals, and
// the impedance calculus it carries: series composition adds impedances,
// parallel composition adds admittances (harmonic sum). The single point at
// infinity absorbs sum and product, inversion swaps 0 and infinity, and the
// undetermined forms of division follow the real conventions
// (0/0 = inf/inf = 0).

#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walg/report.hpp"
#include "walg/weight.hpp"

namespace walg {

struct GaussRat {
  Rat re;
  Rat im;

  friend bool operator==(const GaussRat&, const GaussRat&) = default;

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRat conj() const { return {re, -im}; }
  Rat norm2() const { return re * re + im * im; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

// A point of the projective line: a Gaussian rational or the single infinity.
class ProjValue {
public:
  ProjValue() : finite_(GaussRat{}) {}
  explicit ProjValue(GaussRat v) : finite_(std::move(v)) {}
  ProjValue(long long re, long long im) : finite_(GaussRat{Rat(re), Rat(im)}) {}
  explicit ProjValue(Rat re, Rat im = Rat())
      : finite_(GaussRat{std::move(re), std::move(im)}) {}

  static ProjValue infinity() {
    ProjValue v;
    v.finite_.reset();
    return v;
  }

  bool is_infinite() const { return !finite_.has_value(); }
  bool is_finite() const { return finite_.has_value(); }
  bool is_zero() const { return finite_ && finite_->is_zero(); }
  const GaussRat& value() const {
    if (!finite_) throw error("infinite projective value");
    return *finite_;
  }

  friend bool operator==(const ProjValue&, const ProjValue&) = default;

  // "a/b + c/d i" with the sign folded into the separator; "inf" at infinity
  std::string to_string() const {
    if (!finite_) return "inf";
    Rat im = finite_->im;
    std::string sep = im.is_negative() ? " - " : " + ";
    if (im.is_negative()) im = -im;
    return finite_->re.to_string() + sep + im.to_string() + " i";
  }

  std::string to_double_string() const {
    if (!finite_) return "inf";
    char buf[80];
    double re = finite_->re.to_double();
    double im = finite_->im.to_double();
    std::snprintf(buf, sizeof buf, "%.9g %s %.9g i", re,
                  im < 0 ? "-" : "+", im < 0 ? -im : im);
    return buf;
  }

private:
  std::optional<GaussRat> finite_;
};

inline ProjValue pc_add(const ProjValue& z, const ProjValue& w) {
  if (z.is_infinite() || w.is_infinite()) return ProjValue::infinity();
  return ProjValue(z.value() + w.value());
}

// infinity absorbs: 0 . inf = inf, as on the real weights
inline ProjValue pc_mul(const ProjValue& z, const ProjValue& w) {
  if (z.is_infinite() || w.is_infinite()) return ProjValue::infinity();
  return ProjValue(z.value() * w.value());
}

inline ProjValue pc_inv(const ProjValue& z) {
  if (z.is_infinite()) return ProjValue();
  if (z.is_zero()) return ProjValue::infinity();
  Rat n = z.value().norm2();
  GaussRat c = z.value().conj();
  return ProjValue(GaussRat{c.re / n, c.im / n});
}

// z'/z with 0/0 = inf/inf = 0; z/0 = inf for z != 0, z/inf = 0
inline ProjValue pc_div(const ProjValue& num, const ProjValue& den) {
  if (den.is_infinite()) return ProjValue();
  if (den.is_zero()) return num.is_zero() ? ProjValue() : ProjValue::infinity();
  if (num.is_infinite()) return ProjValue::infinity();
  return pc_mul(num, pc_inv(den));
}

// harmonic sum (z^-1 + w^-1)^-1: parallel composition
inline ProjValue pc_parallel(const ProjValue& z, const ProjValue& w) {
  return pc_inv(pc_add(pc_inv(z), pc_inv(w)));
}

// the involution of the cubical structure
inline ProjValue pc_star(const ProjValue& z) { return pc_inv(z); }

// dual operations x * y = (x* + y*)* and x bullet y = (x*.y*)*
inline ProjValue pc_harmonic(const ProjValue& z, const ProjValue& w) {
  return pc_parallel(z, w);
}
inline ProjValue pc_bullet(const ProjValue& z, const ProjValue& w) {
  return pc_inv(pc_mul(pc_inv(z), pc_inv(w)));
}

enum class ElementKind { resistor, inductor, capacitor };

// R -> R, L -> i.wL, C -> -i/(wC) at angular speed w
inline ProjValue element_impedance(ElementKind kind, const Rat& value,
                                   const Rat& omega) {
  if (!(value > Rat(0))) throw error("element value must be positive");
  if (!(omega > Rat(0))) throw error("omega must be positive");
  switch (kind) {
    case ElementKind::resistor: return ProjValue(value);
    case ElementKind::inductor: return ProjValue(Rat(0), omega * value);
    case ElementKind::capacitor:
      return ProjValue(Rat(0), -(Rat(1) / (omega * value)));
  }
  throw error("unreachable element kind");
}

// A series/parallel tree of R, L, C elements.
struct NetworkTree {
  enum class Node { element, series, parallel };

  Node node = Node::element;
  ElementKind kind = ElementKind::resistor;
  Rat value;  // element only
  std::vector<NetworkTree> children;

  static NetworkTree element(ElementKind kind, Rat value) {
    NetworkTree t;
    t.node = Node::element;
    t.kind = kind;
    t.value = std::move(value);
    return t;
  }
  static NetworkTree series(std::vector<NetworkTree> children) {
    if (children.empty()) throw error("series node needs children");
    NetworkTree t;
    t.node = Node::series;
    t.children = std::move(children);
    return t;
  }
  static NetworkTree parallel(std::vector<NetworkTree> children) {
    if (children.empty()) throw error("parallel node needs children");
    NetworkTree t;
    t.node = Node::parallel;
    t.children = std::move(children);
    return t;
  }
};

inline ProjValue reduce_network(const NetworkTree& net, const Rat& omega) {
  switch (net.node) {
    case NetworkTree::Node::element:
      return element_impedance(net.kind, net.value, omega);
    case NetworkTree::Node::series: {
      ProjValue z(0, 0);
      for (const auto& child : net.children)
        z = pc_add(z, reduce_network(child, omega));
      return z;
    }
    case NetworkTree::Node::parallel: {
      // sum of admittances, inverted once
      ProjValue y(0, 0);
      for (const auto& child : net.children)
        y = pc_add(y, pc_inv(reduce_network(child, omega)));
      return pc_inv(y);
    }
  }
  throw error("unreachable network node");
}

enum class PlaneKind { additive, multiplicative };

// z >=+ w: equal imaginary parts and Re z >= Re w, infinity initial;
// z >=. w: |z| >= |w| and equal argument, infinity initial, 0 terminal
inline bool cplane_geq(const ProjValue& z, const ProjValue& w,
                       PlaneKind kind) {
  if (kind == PlaneKind::additive) {
    if (z.is_infinite()) return true;
    if (w.is_infinite()) return false;
    return z.value().im == w.value().im && z.value().re >= w.value().re;
  }
  if (z.is_infinite() || w.is_zero()) return true;
  if (w.is_infinite() || z.is_zero()) return false;
  if (z.value().norm2() < w.value().norm2()) return false;
  GaussRat cross = z.value() * w.value().conj();
  return cross.im.is_zero() && !cross.re.is_negative();
}

inline bool cplane_leq(const ProjValue& z, const ProjValue& w,
                       PlaneKind kind) {
  return cplane_geq(w, z, kind);
}

// Internal hom of the two structures. The additive hom is truncated
// difference on the real part with the imaginary difference carried along;
// it is defined on the closed right half plane, and has no value at w = inf
// (nothing is below everything in the partial order), reported as nullopt.
inline std::optional<ProjValue> cplane_hom(const ProjValue& w,
                                           const ProjValue& w2,
                                           PlaneKind kind) {
  if (kind == PlaneKind::multiplicative) return pc_div(w2, w);
  auto in_domain = [](const ProjValue& v) {
    return v.is_infinite() || !v.value().re.is_negative();
  };
  if (!in_domain(w) || !in_domain(w2))
    throw error("additive hom needs arguments with nonnegative real part");
  if (w2.is_infinite()) return ProjValue::infinity();
  if (w.is_infinite()) return std::nullopt;
  Rat re = w2.value().re - w.value().re;
  if (re.is_negative()) re = Rat(0);
  return ProjValue(std::move(re), w2.value().im - w.value().im);
}

// The involutive-cubical-semiring identities on a sample: the involution
// fixes 1 and swaps 0 with infinity, infinity absorbs sum and product, and
// the starred operations agree with their defining duals computed by direct
// formulas.
inline CheckReport cubical_check(const std::vector<ProjValue>& samples) {
  CheckReport report;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) report.violations.push_back(what);
  };
  const ProjValue zero(0, 0), one(1, 0), inf = ProjValue::infinity();
  expect(pc_star(zero) == inf, "0* = inf");
  expect(pc_star(inf) == zero, "inf* = 0");
  expect(pc_star(one) == one, "1* = 1");
  for (const ProjValue& x : samples) {
    expect(pc_star(pc_star(x)) == x, "x** = x at " + x.to_string());
    expect(pc_add(x, inf) == inf, "x + inf = inf at " + x.to_string());
    expect(pc_mul(x, inf) == inf, "x.inf = inf at " + x.to_string());
    expect(pc_mul(inf, x) == inf, "inf.x = inf at " + x.to_string());
    // zeros of each structure absorb the other structure's operations
    expect(pc_harmonic(x, zero) == zero, "x * 0 = 0 at " + x.to_string());
    expect(pc_bullet(x, zero) == zero, "x bullet 0 = 0 at " + x.to_string());
  }
  for (const ProjValue& x : samples)
    for (const ProjValue& y : samples) {
      // x * y = (x* + y*)* against the direct formula xy/(x+y)
      ProjValue via_star = pc_harmonic(x, y);
      ProjValue direct;
      if (x.is_zero() || y.is_zero())
        direct = ProjValue(0, 0);
      else if (x.is_infinite())
        direct = y;
      else if (y.is_infinite())
        direct = x;
      else
        direct = pc_div(pc_mul(x, y), pc_add(x, y));
      expect(via_star == direct, "harmonic sum at " + x.to_string() + ", " +
                                     y.to_string());
      // x bullet y agrees with x.y except that 0 bullet inf = 0
      ProjValue vb = pc_bullet(x, y);
      ProjValue expected =
          (x.is_zero() && y.is_infinite()) || (y.is_zero() && x.is_infinite())
              ? ProjValue(0, 0)
              : pc_mul(x, y);
      expect(vb == expected,
             "bullet at " + x.to_string() + ", " + y.to_string());
    }
  return report;
}

}  // namespace walg
