#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sepdim/error.hpp"
#include "sepdim/permutation.hpp"

namespace sepdim {

/// A permutation family as stored on disk, together with how it was made.
struct FamilyDocument {
  PermutationFamily family;
  std::string generator;
  std::uint64_t seed = 0;
  nlohmann::ordered_json provenance = nlohmann::ordered_json::object();
};

/// Canonical JSON layout: fixed key order, one permutation per line,
/// provenance on a single line. parse_family(serialize_family(d)) yields a
/// document that serializes to the same bytes.
inline std::string serialize_family(const FamilyDocument& doc) {
  auto ids = [](std::span<const Vertex> vs) {
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(vs[i]);
    }
    return s + "]";
  };
  std::ostringstream out;
  out << "{\n";
  out << "  \"generator\": " << nlohmann::json(doc.generator).dump() << ",\n";
  out << "  \"seed\": " << doc.seed << ",\n";
  out << "  \"n\": " << doc.family.ground_set().size() << ",\n";
  out << "  \"ground_set\": " << ids(doc.family.ground_set()) << ",\n";
  out << "  \"permutations\": [";
  for (std::size_t i = 0; i < doc.family.size(); ++i) {
    out << (i ? ",\n    " : "\n    ") << ids(doc.family[i].order());
  }
  out << (doc.family.empty() ? "],\n" : "\n  ],\n");
  const auto& prov = doc.provenance.is_null() ? nlohmann::ordered_json::object() : doc.provenance;
  out << "  \"provenance\": " << prov.dump() << "\n";
  out << "}\n";
  return out.str();
}

inline FamilyDocument parse_family(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("family document is not valid JSON: ") + e.what());
  }
  try {
    FamilyDocument doc;
    doc.generator = j.at("generator").get<std::string>();
    doc.seed = j.at("seed").get<std::uint64_t>();
    const auto ground = j.at("ground_set").get<std::vector<Vertex>>();
    if (j.at("n").get<std::size_t>() != ground.size()) {
      throw ParseError("field n does not match the ground set size");
    }
    if (!std::is_sorted(ground.begin(), ground.end())) throw ParseError("ground_set is not sorted");
    doc.family = PermutationFamily(ground);
    for (const auto& perm : j.at("permutations")) {
      doc.family.add(Permutation(perm.get<std::vector<Vertex>>()));
    }
    if (j.contains("provenance")) doc.provenance = j.at("provenance");
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed family document: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("malformed family document: ") + e.what());
  }
}

}  // namespace sepdim
