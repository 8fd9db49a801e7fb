#pragma once

// Weighted categories and the algebraic path problem.
//
// A weight on a category is additive (|1| = 0, |ba| <= |a| + |b|),
// multiplicative (|1| <= 1, |ba| <= |a|.|b|) or sup-style
// (|1| = 0, |ba| <= |a| v |b|). best_cost computes, for a weighted graph,
// the infimum over finite paths of the accumulated edge weight in each of
// the three quantales: a Floyd-Warshall sweep, plus a zero-propagation round
// for the multiplicative kind, where a cycle of weight below 1 drives the
// infimum of every pair routed through it to an unattained 0.

#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "walg/report.hpp"
#include "walg/wset.hpp"

namespace walg {

enum class WeightKind { additive, multiplicative, sup };

inline Weight kind_unit(WeightKind k) {
  return k == WeightKind::multiplicative ? Weight(1) : Weight(0);
}

inline Weight kind_combine(WeightKind k, const Weight& a, const Weight& b) {
  switch (k) {
    case WeightKind::additive: return a + b;
    case WeightKind::multiplicative: return a * b;
    case WeightKind::sup: return a > b ? a : b;
  }
  throw error("unreachable weight kind");
}

inline const char* kind_name(WeightKind k) {
  switch (k) {
    case WeightKind::additive: return "additive";
    case WeightKind::multiplicative: return "multiplicative";
    case WeightKind::sup: return "sup";
  }
  return "?";
}

struct WGraph {
  struct Edge {
    std::size_t src;
    std::size_t dst;
    Weight weight;
  };

  std::vector<std::string> objects;
  std::vector<Edge> edges;

  std::size_t add_object(const std::string& id) {
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == id) return i;
    objects.push_back(id);
    return objects.size() - 1;
  }

  void add_edge(const std::string& src, const std::string& dst, Weight w) {
    std::size_t s = add_object(src);
    std::size_t d = add_object(dst);
    edges.push_back({s, d, std::move(w)});
  }

  // `<src> <dst> <weight>` per line, '#' comments; objects in order of first
  // appearance
  static WGraph from_string(std::string_view text) {
    WGraph g;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string src, dst, w, extra;
      if (!(ls >> src)) continue;
      if (src[0] == '#') continue;
      if (!(ls >> dst >> w) || (ls >> extra))
        throw error("graph line '" + line + "': want '<src> <dst> <weight>'");
      g.add_edge(src, dst, Weight::from_string(w));
    }
    return g;
  }
};

// Pairwise best costs. `attained(i, j)` is false exactly where the value is
// a strict infimum reached only in the limit (multiplicative sub-unit
// cycles).
class CostMatrix {
public:
  CostMatrix(std::vector<std::string> objects, WeightKind kind,
             std::vector<Weight> entries, std::vector<bool> attained = {})
      : objects_(std::move(objects)), kind_(kind), d_(std::move(entries)),
        attained_(std::move(attained)) {
    const std::size_t n = objects_.size();
    if (d_.size() != n * n) throw error("cost matrix: wrong entry count");
    if (attained_.empty()) attained_.assign(n * n, true);
    if (attained_.size() != n * n)
      throw error("cost matrix: wrong flag count");
    Weight unit = kind_unit(kind_);
    for (std::size_t i = 0; i < n; ++i)
      if (at(i, i) > unit)
        throw error("cost matrix: diagonal above the unit at " + objects_[i]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (at(i, k) > kind_combine(kind_, at(i, j), at(j, k)))
            throw error("cost matrix: triangle law fails through " +
                        objects_[j]);
  }

  std::size_t size() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  WeightKind kind() const { return kind_; }
  const Weight& at(std::size_t i, std::size_t j) const {
    return d_[i * objects_.size() + j];
  }
  bool attained(std::size_t i, std::size_t j) const {
    return attained_[i * objects_.size() + j];
  }

  // TSV with a labeled header row and row labels; 'inf' for infinity
  std::string to_tsv() const {
    std::string out;
    if (objects_.empty()) return out;
    for (const auto& o : objects_) out += "\t" + o;
    out += "\n";
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      out += objects_[i];
      for (std::size_t j = 0; j < objects_.size(); ++j)
        out += "\t" + at(i, j).to_string();
      out += "\n";
    }
    return out;
  }

private:
  std::vector<std::string> objects_;
  WeightKind kind_;
  std::vector<Weight> d_;
  std::vector<bool> attained_;
};

inline CostMatrix best_cost(const WGraph& g, WeightKind kind) {
  const std::size_t n = g.objects.size();
  std::vector<Weight> d(n * n, Weight::infinity());
  auto at = [&](std::size_t i, std::size_t j) -> Weight& {
    return d[i * n + j];
  };
  Weight unit = kind_unit(kind);
  for (std::size_t i = 0; i < n; ++i) at(i, i) = unit;  // empty path
  for (const auto& e : g.edges)
    if (e.weight < at(e.src, e.dst)) at(e.src, e.dst) = e.weight;

  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Weight via = kind_combine(kind, at(i, k), at(k, j));
        if (via < at(i, j)) at(i, j) = via;
      }

  std::vector<bool> attained(n * n, true);
  if (kind == WeightKind::multiplicative) {
    // A cycle of weight < 1 through k sends every pair routed through k to
    // 0: repeating it drives the value under any positive bound. The 0 is
    // attained only when some such cycle weighs exactly 0.
    std::vector<std::size_t> subunit, zero_cycle;
    for (std::size_t k = 0; k < n; ++k) {
      if (at(k, k) < Weight(1)) subunit.push_back(k);
      if (at(k, k).is_zero()) zero_cycle.push_back(k);
    }
    std::vector<Weight> base = d;
    auto base_at = [&](std::size_t i, std::size_t j) -> const Weight& {
      return base[i * n + j];
    };
    for (std::size_t k : subunit)
      for (std::size_t i = 0; i < n; ++i) {
        if (base_at(i, k).is_infinite()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (base_at(k, j).is_infinite()) continue;
          if (!at(i, j).is_zero()) {
            at(i, j) = Weight(0);
            attained[i * n + j] = false;
          }
        }
      }
    for (std::size_t k : zero_cycle)
      for (std::size_t i = 0; i < n; ++i) {
        if (base_at(i, k).is_infinite()) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!base_at(k, j).is_infinite()) attained[i * n + j] = true;
      }
  }
  return CostMatrix(g.objects, kind, std::move(d), std::move(attained));
}

// A finite category presentation: morphisms with endpoints and weights, an
// identity per object and a total composition table. Category laws are
// checked on construction.
class WCatPresentation {
public:
  struct Mor {
    std::string id;
    std::size_t src;
    std::size_t dst;
    Weight weight;
  };

  WCatPresentation(std::vector<std::string> objects, std::vector<Mor> mors,
                   std::vector<std::size_t> identity,
                   std::vector<std::vector<int>> comp)
      : objects_(std::move(objects)), mors_(std::move(mors)),
        identity_(std::move(identity)), comp_(std::move(comp)) {
    const std::size_t n = mors_.size();
    if (identity_.size() != objects_.size())
      throw error("category: one identity per object required");
    for (std::size_t x = 0; x < objects_.size(); ++x) {
      const Mor& id = mors_.at(identity_[x]);
      if (id.src != x || id.dst != x)
        throw error("category: identity of " + objects_[x] +
                    " has wrong endpoints");
    }
    if (comp_.size() != n) throw error("category: composition table size");
    for (const auto& row : comp_)
      if (row.size() != n) throw error("category: composition table size");
    for (std::size_t f = 0; f < n; ++f)
      for (std::size_t g = 0; g < n; ++g) {
        bool composable = mors_[f].dst == mors_[g].src;
        int c = comp_[g][f];
        if (!composable) {
          if (c != -1)
            throw error("category: composite defined for non-composable " +
                        mors_[g].id + " after " + mors_[f].id);
          continue;
        }
        if (c < 0 || c >= static_cast<int>(n))
          throw error("category: missing composite " + mors_[g].id +
                      " after " + mors_[f].id);
        if (mors_[c].src != mors_[f].src || mors_[c].dst != mors_[g].dst)
          throw error("category: composite endpoints wrong for " +
                      mors_[g].id + " after " + mors_[f].id);
      }
    for (std::size_t f = 0; f < n; ++f) {
      if (compose(identity_[mors_[f].dst], f) != f ||
          compose(f, identity_[mors_[f].src]) != f)
        throw error("category: identity law fails at " + mors_[f].id);
    }
    for (std::size_t f = 0; f < n; ++f)
      for (std::size_t g = 0; g < n; ++g) {
        if (mors_[f].dst != mors_[g].src) continue;
        for (std::size_t h = 0; h < n; ++h) {
          if (mors_[g].dst != mors_[h].src) continue;
          if (compose(h, compose(g, f)) != compose(compose(h, g), f))
            throw error("category: associativity fails at " + mors_[h].id +
                        ", " + mors_[g].id + ", " + mors_[f].id);
        }
      }
  }

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Mor>& morphisms() const { return mors_; }
  std::size_t identity_of(std::size_t object) const {
    return identity_[object];
  }
  std::size_t compose(std::size_t g, std::size_t f) const {
    return static_cast<std::size_t>(comp_[g][f]);
  }
  bool composable(std::size_t g, std::size_t f) const {
    return mors_[f].dst == mors_[g].src;
  }

private:
  std::vector<std::string> objects_;
  std::vector<Mor> mors_;
  std::vector<std::size_t> identity_;
  std::vector<std::vector<int>> comp_;  // comp[g][f] = g after f, -1 if not
};

// the thin category over a cost matrix: one morphism per ordered pair
inline WCatPresentation category_from_matrix(const CostMatrix& m) {
  const std::size_t n = m.size();
  std::vector<WCatPresentation::Mor> mors;
  std::vector<std::size_t> identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) identity[i] = mors.size();
      mors.push_back({"[" + m.objects()[i] + ">" + m.objects()[j] + "]", i, j,
                      m.at(i, j)});
    }
  std::vector<std::vector<int>> comp(mors.size(),
                                     std::vector<int>(mors.size(), -1));
  for (std::size_t f = 0; f < mors.size(); ++f)
    for (std::size_t g = 0; g < mors.size(); ++g)
      if (mors[f].dst == mors[g].src)
        comp[g][f] = static_cast<int>(mors[f].src * n + mors[g].dst);
  return WCatPresentation(m.objects(), std::move(mors), std::move(identity),
                          std::move(comp));
}

// every identity and composable pair violating the kind's axioms
inline CheckReport check_wcat(const WCatPresentation& c, WeightKind kind) {
  CheckReport report;
  for (std::size_t x = 0; x < c.objects().size(); ++x) {
    const auto& id = c.morphisms()[c.identity_of(x)];
    if (kind == WeightKind::multiplicative) {
      if (id.weight > Weight(1))
        report.violations.push_back("|1_" + c.objects()[x] + "| = " +
                                    id.weight.to_string() + " exceeds 1");
    } else if (!id.weight.is_zero()) {
      report.violations.push_back("|1_" + c.objects()[x] + "| = " +
                                  id.weight.to_string() + ", want 0");
    }
  }
  const auto& mors = c.morphisms();
  for (std::size_t f = 0; f < mors.size(); ++f)
    for (std::size_t g = 0; g < mors.size(); ++g) {
      if (!c.composable(g, f)) continue;
      const Weight& got = mors[c.compose(g, f)].weight;
      Weight bound = kind_combine(kind, mors[f].weight, mors[g].weight);
      if (got > bound)
        report.violations.push_back(
            "|" + mors[g].id + " . " + mors[f].id + "| = " + got.to_string() +
            " exceeds " + bound.to_string());
    }
  return report;
}

struct WFunctor {
  std::vector<std::size_t> object_map;
  std::vector<std::size_t> morphism_map;
};

class not_a_functor : public error {
public:
  using error::error;
};

// functoriality is an error, the weight condition |F(a)| <= |a| a report
inline CheckReport check_wfunctor(const WFunctor& f,
                                  const WCatPresentation& c,
                                  const WCatPresentation& d,
                                  WeightKind /*kind*/) {
  const auto& cm = c.morphisms();
  const auto& dm = d.morphisms();
  if (f.object_map.size() != c.objects().size() ||
      f.morphism_map.size() != cm.size())
    throw not_a_functor("functor: map sizes do not match the source");
  for (std::size_t o : f.object_map)
    if (o >= d.objects().size())
      throw not_a_functor("functor: object image out of range");
  for (std::size_t m : f.morphism_map)
    if (m >= dm.size())
      throw not_a_functor("functor: morphism image out of range");
  for (std::size_t m = 0; m < cm.size(); ++m) {
    const auto& img = dm[f.morphism_map[m]];
    if (img.src != f.object_map[cm[m].src] ||
        img.dst != f.object_map[cm[m].dst])
      throw not_a_functor("functor: endpoints not preserved at " + cm[m].id);
  }
  for (std::size_t x = 0; x < c.objects().size(); ++x)
    if (f.morphism_map[c.identity_of(x)] != d.identity_of(f.object_map[x]))
      throw not_a_functor("functor: identity of " + c.objects()[x] +
                          " not preserved");
  for (std::size_t a = 0; a < cm.size(); ++a)
    for (std::size_t b = 0; b < cm.size(); ++b) {
      if (!c.composable(b, a)) continue;
      if (f.morphism_map[c.compose(b, a)] !=
          d.compose(f.morphism_map[b], f.morphism_map[a]))
        throw not_a_functor("functor: composition not preserved at " +
                            cm[b].id + " after " + cm[a].id);
    }
  CheckReport report;
  for (std::size_t m = 0; m < cm.size(); ++m)
    if (dm[f.morphism_map[m]].weight > cm[m].weight)
      report.violations.push_back(
          "|F(" + cm[m].id + ")| = " + dm[f.morphism_map[m]].weight.to_string() +
          " exceeds |" + cm[m].id + "| = " + cm[m].weight.to_string());
  return report;
}

// Monotone piecewise-linear self-maps of [0, inf]. Breakpoints carry exact
// rational coordinates; past the last breakpoint the function continues with
// `tail_slope` (possibly infinite, jumping straight to infinity), and the
// value at infinity is stored explicitly since the finite part does not
// determine it.
class PLFunction {
public:
  PLFunction(std::vector<std::pair<Rat, Rat>> points, Weight tail_slope,
             Weight at_infinity)
      : pts_(std::move(points)), tail_slope_(std::move(tail_slope)),
        at_inf_(std::move(at_infinity)) {
    if (pts_.empty()) throw error("piecewise-linear: no breakpoints");
    if (!pts_.front().first.is_zero())
      throw error("piecewise-linear: first breakpoint must sit at 0");
    for (std::size_t i = 0; i + 1 < pts_.size(); ++i)
      if (!(pts_[i].first < pts_[i + 1].first))
        throw error("piecewise-linear: abscissae must increase");
    for (const auto& [x, y] : pts_)
      if (y.is_negative())
        throw error("piecewise-linear: negative value");
  }

  static PLFunction linear(const Rat& slope) {
    return PLFunction({{Rat(0), Rat(0)}, {Rat(1), slope}}, Weight(Rat(slope)),
                      slope.is_zero() ? Weight(0) : Weight::infinity());
  }
  // the two degenerate scalings: everything finite to 0, infinity by choice
  static PLFunction zero_hat(bool infinity_to_infinity) {
    return PLFunction({{Rat(0), Rat(0)}}, Weight(0),
                      infinity_to_infinity ? Weight::infinity() : Weight(0));
  }
  static PLFunction infinity_hat() {
    return PLFunction({{Rat(0), Rat(0)}}, Weight::infinity(),
                      Weight::infinity());
  }

  const std::vector<std::pair<Rat, Rat>>& points() const { return pts_; }
  const Weight& tail_slope() const { return tail_slope_; }
  const Weight& at_infinity() const { return at_inf_; }

  Weight eval(const Weight& s) const {
    if (s.is_infinite()) return at_inf_;
    const Rat& x = s.rat();
    for (std::size_t i = 0; i + 1 < pts_.size(); ++i)
      if (x <= pts_[i + 1].first) {
        if (x == pts_[i].first) return Weight(pts_[i].second);
        Rat t = (x - pts_[i].first) / (pts_[i + 1].first - pts_[i].first);
        return Weight(pts_[i].second +
                      t * (pts_[i + 1].second - pts_[i].second));
      }
    const auto& [lx, ly] = pts_.back();
    if (x == lx) return Weight(ly);
    if (tail_slope_.is_infinite()) return Weight::infinity();
    return Weight(ly + (x - lx) * tail_slope_.rat());
  }

  // derived slopes of the finite pieces, tail slope last
  std::vector<Weight> slopes() const {
    std::vector<Weight> out;
    for (std::size_t i = 0; i + 1 < pts_.size(); ++i) {
      Rat s = (pts_[i + 1].second - pts_[i].second) /
              (pts_[i + 1].first - pts_[i].first);
      if (s.is_negative())
        out.push_back(Weight(0));  // caller reports monotonicity separately
      else
        out.push_back(Weight(s));
    }
    out.push_back(tail_slope_);
    return out;
  }

  bool monotone() const {
    for (std::size_t i = 0; i + 1 < pts_.size(); ++i)
      if (pts_[i + 1].second < pts_[i].second) return false;
    Weight last(pts_.back().second);
    if (tail_slope_.is_infinite()) return at_inf_.is_infinite();
    if (!tail_slope_.is_zero()) return at_inf_.is_infinite();
    return at_inf_ >= last;
  }

  bool concave() const {
    std::vector<Weight> s = slopes();
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i + 1] > s[i]) return false;
    return true;
  }

private:
  std::vector<std::pair<Rat, Rat>> pts_;  // increasing abscissae, first at 0
  Weight tail_slope_;
  Weight at_inf_;
};

inline PLFunction compose(const PLFunction& outer, const PLFunction& inner) {
  // breakpoints: inner's, plus inner-preimages of outer's
  std::vector<Rat> xs;
  for (const auto& [x, y] : inner.points()) xs.push_back(x);
  const auto& ip = inner.points();
  auto add_preimages = [&](const Rat& target) {
    for (std::size_t i = 0; i + 1 < ip.size(); ++i) {
      const Rat& y0 = ip[i].second;
      const Rat& y1 = ip[i + 1].second;
      if (y0 == y1) continue;
      if ((y0 <= target && target <= y1) || (y1 <= target && target <= y0)) {
        Rat x = ip[i].first + (target - y0) / (y1 - y0) *
                                  (ip[i + 1].first - ip[i].first);
        xs.push_back(x);
      }
    }
    // tail piece
    if (inner.tail_slope().is_finite() && !inner.tail_slope().is_zero()) {
      const Rat& y0 = ip.back().second;
      if (target >= y0)
        xs.push_back(ip.back().first +
                     (target - y0) / inner.tail_slope().rat());
    }
  };
  for (const auto& [x, y] : outer.points()) add_preimages(x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<std::pair<Rat, Rat>> pts;
  for (const Rat& x : xs) {
    Weight v = outer.eval(inner.eval(Weight(x)));
    if (v.is_infinite()) break;  // monotone composite stays infinite
    pts.push_back({x, v.rat()});
  }
  if (pts.empty())
    throw error("composite is infinite at 0; not piecewise linear");
  Weight tail;
  if (pts.size() < xs.size()) {
    tail = Weight::infinity();  // hit infinity within the finite range
  } else if (inner.tail_slope().is_infinite()) {
    // past the last breakpoint the inner value is infinite, so the
    // composite is the constant outer(inf)
    const Weight& cap = outer.at_infinity();
    if (cap.is_infinite())
      tail = Weight::infinity();
    else if (cap == Weight(pts.back().second))
      tail = Weight(0);
    else
      throw error("composite jumps to a finite value; not piecewise linear");
  } else if (inner.tail_slope().is_zero()) {
    tail = Weight(0);
  } else if (outer.tail_slope().is_infinite()) {
    tail = Weight::infinity();
  } else {
    tail = Weight(Rat(outer.tail_slope().rat() * inner.tail_slope().rat()));
  }
  Weight at_inf = outer.eval(inner.at_infinity());
  return PLFunction(std::move(pts), std::move(tail), std::move(at_inf));
}

struct EndofunctorReport {
  CheckReport report;
  bool subadditivity_analytic;  // certified via concavity, else sampled
  bool ok() const { return report.ok(); }
};

// monotone, lambda(0) = 0, lambda(s) + lambda(t) >= lambda(s + t)
inline EndofunctorReport endofunctor_check(const PLFunction& f) {
  EndofunctorReport r{{}, false};
  if (!f.monotone())
    r.report.violations.push_back("not monotone increasing");
  Weight zero_val = f.eval(Weight(0));
  if (!zero_val.is_zero())
    r.report.violations.push_back("value at 0 is " + zero_val.to_string() +
                                  ", want 0");
  if (f.concave() && zero_val.is_zero()) {
    r.subadditivity_analytic = true;  // concave through the origin
    return r;
  }
  // sampled check on the breakpoint-sum grid
  std::vector<Weight> grid;
  for (const auto& [x, y] : f.points()) grid.push_back(Weight(x));
  std::size_t base = grid.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = i; j < base; ++j) grid.push_back(grid[i] + grid[j]);
  grid.push_back(Weight::infinity());
  for (const Weight& s : grid)
    for (const Weight& t : grid)
      if (f.eval(s) + f.eval(t) < f.eval(s + t)) {
        r.report.violations.push_back(
            "subadditivity fails at s = " + s.to_string() +
            ", t = " + t.to_string());
      }
  return r;
}

// all pairs violating lambda(d_X(x, x')) >= d_Y(f x, f x')
inline CheckReport fibered_check(const WMap& f, const PLFunction& scale,
                                 const CostMatrix& dx, const CostMatrix& dy) {
  if (f.source().ids() != dx.objects() || f.target().ids() != dy.objects())
    throw error("fibered check: carriers do not match the matrices");
  CheckReport report;
  for (std::size_t i = 0; i < dx.size(); ++i)
    for (std::size_t j = 0; j < dx.size(); ++j) {
      Weight lhs = scale.eval(dx.at(i, j));
      const Weight& rhs = dy.at(f.apply_index(i), f.apply_index(j));
      if (lhs < rhs)
        report.violations.push_back(
            "pair (" + dx.objects()[i] + ", " + dx.objects()[j] + "): " +
            lhs.to_string() + " < " + rhs.to_string());
    }
  return report;
}

// morphism of the fibered metric category: a map plus its scale certificate
struct MetricMorphism {
  WMap map;
  PLFunction scale;
};

inline MetricMorphism compose(const MetricMorphism& g,
                              const MetricMorphism& f) {
  return {compose(g.map, f.map), compose(g.scale, f.scale)};
}

}  // namespace walg
