#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sepdim/graph.hpp"

namespace sepdim {

/// A bijection from a finite vertex set to ranks 1..n, stored as the
/// sequence of vertices in rank order.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Vertex> order) : order_(std::move(order)) {
    index_.reserve(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      index_.emplace_back(order_[i], static_cast<std::uint32_t>(i + 1));
    }
    std::sort(index_.begin(), index_.end());
    auto dup = std::adjacent_find(index_.begin(), index_.end(),
                                  [](const auto& a, const auto& b) { return a.first == b.first; });
    if (dup != index_.end()) {
      throw InvalidArgument("permutation repeats vertex " + std::to_string(dup->first));
    }
  }

  static Permutation identity(std::span<const Vertex> ground) {
    return Permutation(std::vector<Vertex>(ground.begin(), ground.end()));
  }

  std::span<const Vertex> order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  Vertex at(std::size_t position) const { return order_.at(position); }

  bool contains(Vertex v) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), std::pair<Vertex, std::uint32_t>{v, 0});
    return it != index_.end() && it->first == v;
  }

  /// 1-based rank of `v`.
  std::size_t rank(Vertex v) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), std::pair<Vertex, std::uint32_t>{v, 0});
    if (it == index_.end() || it->first != v) {
      throw InvalidArgument("vertex " + std::to_string(v) + " is outside the permutation");
    }
    return it->second;
  }

  /// Sorted vertex set this permutation ranks.
  std::vector<Vertex> ground_set() const {
    std::vector<Vertex> out;
    out.reserve(index_.size());
    for (auto [v, r] : index_) out.push_back(v);
    return out;
  }

  /// Ranks of `ground[i]` for each i; every entry of `ground` must be present.
  std::vector<std::uint32_t> ranks_over(std::span<const Vertex> ground) const {
    std::vector<std::uint32_t> out(ground.size());
    for (std::size_t i = 0; i < ground.size(); ++i) out[i] = static_cast<std::uint32_t>(rank(ground[i]));
    return out;
  }

  Permutation reversed() const {
    return Permutation(std::vector<Vertex>(order_.rbegin(), order_.rend()));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.order_ == b.order_; }
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.order_ <=> b.order_; }

 private:
  std::vector<Vertex> order_;
  std::vector<std::pair<Vertex, std::uint32_t>> index_;  // (vertex, rank), sorted by vertex
};

/// Ordered list of permutations over one shared ground set. Empty families
/// are allowed.
class PermutationFamily {
 public:
  PermutationFamily() = default;

  explicit PermutationFamily(std::vector<Vertex> ground_set,
                             std::vector<Permutation> members = {})
      : ground_(std::move(ground_set)) {
    std::sort(ground_.begin(), ground_.end());
    if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end()) {
      throw InvalidArgument("ground set repeats a vertex");
    }
    for (auto& p : members) add(std::move(p));
  }

  void add(Permutation p) {
    if (p.ground_set() != ground_) {
      throw InvalidArgument("permutation does not range over the family's ground set");
    }
    members_.push_back(std::move(p));
  }

  std::span<const Vertex> ground_set() const noexcept { return ground_; }
  std::span<const Permutation> members() const noexcept { return members_; }
  const Permutation& operator[](std::size_t i) const { return members_.at(i); }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  /// Replaces member `i`; the replacement must range over the same ground set.
  void replace(std::size_t i, Permutation p) {
    if (p.ground_set() != ground_) {
      throw InvalidArgument("permutation does not range over the family's ground set");
    }
    members_.at(i) = std::move(p);
  }

  friend bool operator==(const PermutationFamily&, const PermutationFamily&) = default;

 private:
  std::vector<Vertex> ground_;
  std::vector<Permutation> members_;
};

}  // namespace sepdim
