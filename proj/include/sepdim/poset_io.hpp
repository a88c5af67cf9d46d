#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sepdim/error.hpp"
#include "sepdim/interval_order.hpp"
#include "sepdim/poset.hpp"

namespace sepdim {

// Interval orders are written as
//   {"closed": false,
//    "elements": [[a, b], ...],            canonical (sorted) order
//    "relation": [[[a, b], [c, d]], ...],  sorted pairs x < y
//    "extensions": [[[a, b], ...], ...]}   realizer, optional
// Elements are referred to by their endpoint pairs throughout.

inline nlohmann::ordered_json interval_order_to_json(const IntervalOrder& c,
                                                     const Realizer* realizer = nullptr) {
  auto iv = [&](std::size_t e) {
    return nlohmann::ordered_json::array({c.intervals[e].first, c.intervals[e].second});
  };
  nlohmann::ordered_json j;
  j["closed"] = c.closed;
  j["elements"] = nlohmann::ordered_json::array();
  for (std::size_t e = 0; e < c.size(); ++e) j["elements"].push_back(iv(e));
  j["relation"] = nlohmann::ordered_json::array();
  for (auto [x, y] : c.order.relation()) j["relation"].push_back({iv(x), iv(y)});
  if (realizer) {
    j["extensions"] = nlohmann::ordered_json::array();
    for (const auto& ext : realizer->extensions) {
      auto seq = nlohmann::ordered_json::array();
      for (std::size_t e : ext) seq.push_back(iv(e));
      j["extensions"].push_back(std::move(seq));
    }
  }
  return j;
}

struct IntervalDocument {
  IntervalOrder order;
  Realizer realizer;
};

/// Reads the layout above. The relation is recomputed from the endpoints
/// and must match the stored one.
inline IntervalDocument interval_order_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::ordered_json::parse(text);
    std::vector<Interval> intervals;
    for (const auto& e : j.at("elements")) intervals.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    if (!std::is_sorted(intervals.begin(), intervals.end())) {
      throw ParseError("elements are not in canonical order");
    }
    IntervalDocument doc{make_interval_order(intervals, j.at("closed").get<bool>()), {}};
    auto index = [&](const nlohmann::ordered_json& e) {
      const Interval key{e.at(0).get<int>(), e.at(1).get<int>()};
      auto it = std::lower_bound(intervals.begin(), intervals.end(), key);
      if (it == intervals.end() || *it != key) throw ParseError("unknown element in document");
      return static_cast<std::size_t>(it - intervals.begin());
    };
    std::vector<std::pair<std::size_t, std::size_t>> stored;
    for (const auto& pr : j.at("relation")) stored.emplace_back(index(pr.at(0)), index(pr.at(1)));
    if (stored != doc.order.order.relation()) {
      throw ParseError("stored relation disagrees with the interval endpoints");
    }
    if (j.contains("extensions")) {
      for (const auto& seq : j.at("extensions")) {
        LinearExtension ext;
        for (const auto& e : seq) ext.push_back(index(e));
        doc.realizer.extensions.push_back(std::move(ext));
      }
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed interval order document: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("malformed interval order document: ") + e.what());
  }
}

}  // namespace sepdim
