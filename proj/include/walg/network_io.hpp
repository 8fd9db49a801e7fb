#pragma once

// JSON reader for series/parallel network descriptions:
//   {"series": [ {"R": "1"}, {"C": "1/4"}, {"parallel": [...]}, ... ]}
// Element values are rational literals, given as strings (or plain
// integers).

#include <json.hpp>

#include "walg/impedance.hpp"

namespace walg {

inline NetworkTree network_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1)
    throw error("network node must be an object with exactly one key");
  const std::string key = j.begin().key();
  const auto& val = j.begin().value();
  auto parse_value = [&](const nlohmann::json& v) -> Rat {
    if (v.is_string()) return Rat::from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
    throw error("element value must be a rational string");
  };
  if (key == "R")
    return NetworkTree::element(ElementKind::resistor, parse_value(val));
  if (key == "L")
    return NetworkTree::element(ElementKind::inductor, parse_value(val));
  if (key == "C")
    return NetworkTree::element(ElementKind::capacitor, parse_value(val));
  if (key == "series" || key == "parallel") {
    if (!val.is_array() || val.empty())
      throw error("'" + key + "' needs a nonempty array of children");
    std::vector<NetworkTree> children;
    for (const auto& c : val) children.push_back(network_from_json(c));
    return key == "series" ? NetworkTree::series(std::move(children))
                           : NetworkTree::parallel(std::move(children));
  }
  throw error("unknown network key '" + key + "'");
}

inline NetworkTree network_from_string(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw error(std::string("network file is not valid JSON: ") + e.what());
  }
  return network_from_json(j);
}

}  // namespace walg
