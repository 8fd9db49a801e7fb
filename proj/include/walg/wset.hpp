#pragma once

// Finite weighted sets: carriers of named elements with a weight map into
// [0, inf]. Limits and colimits carry the forced weights (sup on products,
// inherited on sums, inf on quotients); the two tensor products add or
// multiply weights; hom-objects hold all mappings under the corresponding
// sup-of-hom weight.

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "walg/weight.hpp"

namespace walg {

enum class TensorKind { additive, multiplicative };

inline Weight tensor_combine(TensorKind kind, const Weight& a,
                             const Weight& b) {
  return kind == TensorKind::additive ? a + b : a * b;
}

inline Weight hom_of(TensorKind kind, const Weight& mu, const Weight& nu) {
  return kind == TensorKind::additive ? hom_plus(mu, nu) : hom_dot(mu, nu);
}

class WSet {
public:
  WSet() = default;
  WSet(std::vector<std::string> ids, std::vector<Weight> weights)
      : ids_(std::move(ids)), weights_(std::move(weights)) {
    if (ids_.size() != weights_.size())
      throw error("weighted set: ids and weights differ in length");
    std::set<std::string> seen;
    for (const auto& id : ids_)
      if (!seen.insert(id).second)
        throw error("weighted set: duplicate id '" + id + "'");
  }
  WSet(std::initializer_list<std::pair<std::string, Weight>> items) {
    for (auto& [id, w] : items) {
      ids_.push_back(id);
      weights_.push_back(w);
    }
    *this = WSet(std::move(ids_), std::move(weights_));
  }

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  const Weight& weight(std::size_t i) const { return weights_[i]; }

  std::size_t index_of(std::string_view id) const {
    for (std::size_t i = 0; i < ids_.size(); ++i)
      if (ids_[i] == id) return i;
    throw error("weighted set: no element '" + std::string(id) + "'");
  }
  bool contains(std::string_view id) const {
    for (const auto& x : ids_)
      if (x == id) return true;
    return false;
  }
  const Weight& weight_of(std::string_view id) const {
    return weights_[index_of(id)];
  }

  friend bool operator==(const WSet&, const WSet&) = default;

  // one `<id> <weight>` line per element
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i)
      out += ids_[i] + " " + weights_[i].to_string() + "\n";
    return out;
  }

  static WSet from_string(std::string_view text) {
    std::vector<std::string> ids;
    std::vector<Weight> weights;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string id, w, extra;
      if (!(ls >> id)) continue;  // blank line
      if (id[0] == '#') continue;
      if (!(ls >> w) || (ls >> extra))
        throw error("weighted set line '" + line + "': want '<id> <weight>'");
      ids.push_back(id);
      weights.push_back(Weight::from_string(w));
    }
    return WSet(std::move(ids), std::move(weights));
  }

private:
  std::vector<std::string> ids_;
  std::vector<Weight> weights_;
};

// An arbitrary mapping between carriers; contraction is a property
// (map_weight <= unit), not a requirement.
class WMap {
public:
  WMap(WSet source, WSet target, std::vector<std::size_t> assign)
      : source_(std::move(source)), target_(std::move(target)),
        assign_(std::move(assign)) {
    if (assign_.size() != source_.size())
      throw error("map: assignment does not cover the source");
    for (std::size_t t : assign_)
      if (t >= target_.size()) throw error("map: image out of range");
  }

  static WMap from_pairs(
      WSet source, WSet target,
      const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::size_t> assign(source.size(), 0);
    std::vector<bool> bound(source.size(), false);
    for (const auto& [s, t] : pairs) {
      std::size_t i = source.index_of(s);
      assign[i] = target.index_of(t);
      bound[i] = true;
    }
    for (std::size_t i = 0; i < source.size(); ++i)
      if (!bound[i])
        throw error("map: element '" + source.id(i) + "' has no image");
    return WMap(std::move(source), std::move(target), std::move(assign));
  }

  // `<src-id> -> <dst-id>` lines
  static WMap from_string(WSet source, WSet target, std::string_view text) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string s, arrow, t;
      if (!(ls >> s)) continue;
      if (s[0] == '#') continue;
      if (!(ls >> arrow >> t) || arrow != "->")
        throw error("map line '" + line + "': want '<src> -> <dst>'");
      pairs.emplace_back(s, t);
    }
    return from_pairs(std::move(source), std::move(target), pairs);
  }

  const WSet& source() const { return source_; }
  const WSet& target() const { return target_; }
  std::size_t apply_index(std::size_t i) const { return assign_[i]; }
  const std::string& apply(std::string_view id) const {
    return target_.id(assign_[source_.index_of(id)]);
  }
  const std::vector<std::size_t>& assignment() const { return assign_; }

private:
  WSet source_;
  WSet target_;
  std::vector<std::size_t> assign_;
};

inline WMap identity_map(const WSet& x) {
  std::vector<std::size_t> assign(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) assign[i] = i;
  return WMap(x, x, std::move(assign));
}

inline WMap compose(const WMap& g, const WMap& f) {
  if (f.target() != g.source())
    throw error("compose: middle carriers do not match");
  std::vector<std::size_t> assign(f.source().size());
  for (std::size_t i = 0; i < assign.size(); ++i)
    assign[i] = g.apply_index(f.apply_index(i));
  return WMap(f.source(), g.target(), std::move(assign));
}

namespace detail {
inline std::string tuple_id(const std::vector<std::string>& parts) {
  std::string id = "(";
  for (std::size_t i = 0; i < parts.size(); ++i)
    id += (i ? "," : "") + parts[i];
  return id + ")";
}
}  // namespace detail

// cartesian product, |(x_i)| = sup |x_i|; empty product is the 0-weighted
// singleton
inline WSet product(std::span<const WSet> factors) {
  for (const WSet& f : factors)
    if (f.size() == 0) return WSet();
  std::vector<std::string> ids;
  std::vector<Weight> weights;
  std::vector<std::size_t> idx(factors.size(), 0);
  while (true) {
    std::vector<std::string> parts;
    std::vector<Weight> ws;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      parts.push_back(factors[i].id(idx[i]));
      ws.push_back(factors[i].weight(idx[i]));
    }
    ids.push_back(detail::tuple_id(parts));
    weights.push_back(sup_of(ws));
    if (factors.empty()) break;
    std::size_t i = factors.size();
    bool done = false;
    while (i > 0) {
      --i;
      if (++idx[i] < factors[i].size()) break;
      idx[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return WSet(std::move(ids), std::move(weights));
}

// tagged disjoint union; weights inherited
inline WSet coproduct(std::span<const WSet> summands) {
  std::vector<std::string> ids;
  std::vector<Weight> weights;
  for (std::size_t k = 0; k < summands.size(); ++k)
    for (std::size_t i = 0; i < summands[k].size(); ++i) {
      ids.push_back(detail::tuple_id({summands[k].id(i), std::to_string(k)}));
      weights.push_back(summands[k].weight(i));
    }
  return WSet(std::move(ids), std::move(weights));
}

// one element per class, weighted by the inf over the class; the class id is
// its earliest member in carrier order
inline WSet quotient(const WSet& x,
                     const std::vector<std::vector<std::string>>& classes) {
  std::vector<int> owner(x.size(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (const std::string& id : classes[c]) {
      std::size_t i = x.index_of(id);
      if (owner[i] != -1)
        throw error("quotient: '" + id + "' appears in two classes");
      owner[i] = static_cast<int>(c);
    }
  for (std::size_t i = 0; i < x.size(); ++i)
    if (owner[i] == -1)
      throw error("quotient: '" + x.id(i) + "' not covered by the partition");

  std::vector<std::string> ids(classes.size());
  std::vector<Weight> weights(classes.size(), Weight::infinity());
  std::vector<bool> named(classes.size(), false);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t c = static_cast<std::size_t>(owner[i]);
    if (!named[c]) {
      ids[c] = x.id(i);
      named[c] = true;
      order.push_back(c);
    }
    if (x.weight(i) < weights[c]) weights[c] = x.weight(i);
  }
  std::vector<std::string> out_ids;
  std::vector<Weight> out_ws;
  for (std::size_t c : order) {
    out_ids.push_back(ids[c]);
    out_ws.push_back(weights[c]);
  }
  return WSet(std::move(out_ids), std::move(out_ws));
}

// carrier X x Y with |x (x) y| = |x| + |y| or |x|.|y|
inline WSet tensor(const WSet& x, const WSet& y, TensorKind kind) {
  std::vector<std::string> ids;
  std::vector<Weight> weights;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      ids.push_back(detail::tuple_id({x.id(i), y.id(j)}));
      weights.push_back(tensor_combine(kind, x.weight(i), y.weight(j)));
    }
  return WSet(std::move(ids), std::move(weights));
}

// |h|_0 = sup_y (|h(y)| - |y|), |h|_1 = sup_y (|h(y)| / |y|); empty sup is 0,
// so the empty map is a contraction
inline Weight map_weight(const WMap& h, TensorKind kind) {
  std::vector<Weight> parts;
  for (std::size_t i = 0; i < h.source().size(); ++i)
    parts.push_back(hom_of(kind, h.source().weight(i),
                           h.target().weight(h.apply_index(i))));
  return sup_of(parts);
}

inline bool is_contraction(const WMap& h) {
  for (std::size_t i = 0; i < h.source().size(); ++i)
    if (h.target().weight(h.apply_index(i)) > h.source().weight(i))
      return false;
  return true;
}

// all x with |x| <= radius, in carrier order
inline std::vector<std::string> ball(const WSet& x, const Weight& radius) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.weight(i) <= radius) out.push_back(x.id(i));
  return out;
}

// Materialized internal hom: the set of all mappings Y -> Z under the
// hom weight of the chosen structure. Carriers are kept at desk scale;
// |Z|^|Y| maps above the cap are refused rather than built.
class HomSet {
public:
  static constexpr std::size_t max_maps = 10000;

  HomSet(WSet y, WSet z, TensorKind kind)
      : y_(std::move(y)), z_(std::move(z)), kind_(kind) {
    double count = 1;
    for (std::size_t i = 0; i < y_.size(); ++i) {
      count *= static_cast<double>(z_.size());
      if (count > static_cast<double>(max_maps))
        throw error("hom-object would hold more than " +
                    std::to_string(max_maps) + " mappings");
    }
    n_maps_ = static_cast<std::size_t>(count);
    if (y_.size() > 0 && z_.size() == 0) n_maps_ = 0;

    std::vector<std::string> ids;
    std::vector<Weight> ws;
    for (std::size_t k = 0; k < n_maps_; ++k) {
      WMap m = map_at(k);
      ids.push_back(map_id(m));
      ws.push_back(map_weight(m, kind_));
    }
    carrier_ = WSet(std::move(ids), std::move(ws));
  }

  const WSet& carrier() const { return carrier_; }
  std::size_t count() const { return n_maps_; }

  // index k in odometer order: the image of the last source element varies
  // fastest
  WMap map_at(std::size_t k) const {
    std::vector<std::size_t> assign(y_.size());
    for (std::size_t i = y_.size(); i-- > 0;) {
      assign[i] = k % z_.size();
      k /= z_.size();
    }
    return WMap(y_, z_, std::move(assign));
  }

  std::size_t index_of_map(const WMap& m) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < y_.size(); ++i)
      k = k * z_.size() + m.apply_index(i);
    return k;
  }

  std::string map_id(const WMap& m) const {
    std::string id = "[";
    for (std::size_t i = 0; i < y_.size(); ++i)
      id += (i ? "," : "") + z_.id(m.apply_index(i));
    return id + "]";
  }

private:
  WSet y_;
  WSet z_;
  TensorKind kind_;
  std::size_t n_maps_ = 0;
  WSet carrier_;
};

}  // namespace walg
