#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "sepdim/degeneracy.hpp"
#include "sepdim/permutation.hpp"
#include "sepdim/suitability.hpp"
#include "sepdim/three_suitable.hpp"

namespace sepdim {

/// Labels for one star forest. `block[v]` is shared exactly by the vertices
/// of v's star; `inner[v]` is distinct within each star.
struct StarLabeling {
  std::map<Vertex, Vertex> block;
  std::map<Vertex, Vertex> inner;
  std::map<Vertex, Vertex> root_of;  // root of v's star
};

/// block = root id of the star, inner = the vertex's own id.
inline StarLabeling star_labels(const StarForest& c) {
  StarLabeling lab;
  for (const Star& s : c.stars) {
    lab.block[s.root] = s.root;
    lab.inner[s.root] = s.root;
    lab.root_of[s.root] = s.root;
    for (Vertex leaf : s.leaves) {
      lab.block[leaf] = s.root;
      lab.inner[leaf] = leaf;
      lab.root_of[leaf] = s.root;
    }
  }
  return lab;
}

/// The pair (sigma, sigma-bar) for one base permutation: stars become
/// contiguous blocks ordered by the base rank of their block label (reversed
/// for sigma-bar); inside a block the leaves follow the base rank of their
/// inner label and the root comes last.
inline std::pair<Permutation, Permutation> construct_sigma(const StarForest& c,
                                                           const Permutation& base,
                                                           const StarLabeling& lab) {
  struct Block {
    std::size_t key;
    std::vector<Vertex> members;
  };
  std::vector<Block> blocks;
  blocks.reserve(c.stars.size());
  for (const Star& s : c.stars) {
    const Vertex label = lab.block.at(s.root);
    if (!base.contains(label)) {
      throw InvalidArgument("label " + std::to_string(label) + " missing from base permutation");
    }
    std::vector<std::pair<std::size_t, Vertex>> leaves;
    for (Vertex leaf : s.leaves) {
      const Vertex inner = lab.inner.at(leaf);
      if (!base.contains(inner)) {
        throw InvalidArgument("label " + std::to_string(inner) + " missing from base permutation");
      }
      leaves.emplace_back(base.rank(inner), leaf);
    }
    std::sort(leaves.begin(), leaves.end());
    Block b{base.rank(label), {}};
    for (auto [r, v] : leaves) b.members.push_back(v);
    b.members.push_back(s.root);
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.key < b.key; });

  std::vector<Vertex> forward;
  std::vector<Vertex> backward;
  for (const Block& b : blocks) forward.insert(forward.end(), b.members.begin(), b.members.end());
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    backward.insert(backward.end(), it->members.begin(), it->members.end());
  }
  return {Permutation(std::move(forward)), Permutation(std::move(backward))};
}

/// Pairwise-suitable family for a k-degenerate graph, with the pieces that
/// determine its size.
struct DegenerateCover {
  PermutationFamily family;
  std::size_t k = 0;             // degeneracy actually found
  std::size_t star_forests = 0;  // s <= 2k
  std::size_t r = 0;             // size of the 3-suitable base family
  std::string base_generator;
  std::uint64_t seed = 0;
};

/// Decomposes g into star forests, builds a 3-suitable family over the
/// vertex ids, and emits (sigma, sigma-bar) for every (forest, base member)
/// pair, ordered by forest, then base member. Size is exactly 2 * s * r.
inline DegenerateCover theorem1_family(const Graph& g, std::uint64_t seed) {
  if (g.empty()) throw InvalidArgument("graph has no vertices");
  DegenerateCover out;
  out.seed = seed;
  out.k = degeneracy_order(g).k;
  const auto forests = star_forest_decomposition(g);
  out.star_forests = forests.size();

  // 3-suitable family over 1..n, relabelled onto the vertex ids.
  const auto base = build_3_suitable(g.vertex_count(), seed);
  out.r = base.family.size();
  out.base_generator = base.generator;
  std::vector<Permutation> base_on_ids;
  for (const auto& p : base.family.members()) {
    std::vector<Vertex> ids;
    ids.reserve(p.size());
    for (Vertex i : p.order()) ids.push_back(g.vertex_at(i - 1));
    base_on_ids.emplace_back(std::move(ids));
  }

  out.family = PermutationFamily(std::vector<Vertex>(g.vertices().begin(), g.vertices().end()));
  for (const auto& forest : forests) {
    const auto lab = star_labels(forest);
    for (const auto& b : base_on_ids) {
      auto [sigma, sigma_bar] = construct_sigma(forest, b, lab);
      out.family.add(std::move(sigma));
      out.family.add(std::move(sigma_bar));
    }
  }
  return out;
}

}  // namespace sepdim
