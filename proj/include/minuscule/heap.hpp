#pragma once

// Labeled heaps of words in the simple reflections.
//
// Elements are word positions 0..l-1 (0-based); labels are 1-based nodes.
// Word order is always a linear extension of the heap order.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "minuscule/cartan.hpp"
#include "minuscule/element_set.hpp"
#include "minuscule/error.hpp"
#include "minuscule/orbit.hpp"

namespace minuscule {

/// How equal-label letters are related when building the heap.
enum class EqualLabelRule {
  /// Equal labels are ordered by word position.
  Ordered,
  /// Only adjacent (non-commuting, distinct) labels are related.
  AdjacentOnly,
};

/// (label, occurrence within its label fiber), occurrence 1-based.
using CanonicalName = std::pair<int, int>;

struct Heap {
  std::vector<int> label;
  std::vector<ElementSet> below;  // strictly smaller elements
  std::vector<ElementSet> above;  // strictly larger elements
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)
  std::vector<std::size_t> rank;
  std::vector<CanonicalName> canonical_name;
  std::size_t node_count = 0;
  std::optional<Weight> highest_weight;

  std::size_t size() const { return label.size(); }
  bool less(std::size_t p, std::size_t q) const { return below[q].contains(p); }
  bool comparable(std::size_t p, std::size_t q) const { return less(p, q) || less(q, p); }
  ElementSet all() const { return ElementSet::first_n(size()); }

  std::size_t max_rank() const {
    std::size_t r = 0;
    for (auto x : rank) r = std::max(r, x);
    return r;
  }

  std::vector<std::size_t> minimal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < size(); ++p)
      if (below[p].empty()) out.push_back(p);
    return out;
  }
  std::vector<std::size_t> maximal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < size(); ++p)
      if (above[p].empty()) out.push_back(p);
    return out;
  }
};

inline Heap heap_from_word(const CartanDatum& cd, const std::vector<int>& word,
                           EqualLabelRule rule = EqualLabelRule::Ordered) {
  const std::size_t n = word.size();
  if (n > kMaxHeapElements)
    throw ResourceError("heap of " + std::to_string(n) + " elements exceeds the limit of " +
                        std::to_string(kMaxHeapElements));
  for (int i : word) cd.check_node(i);

  Heap h;
  h.label = word;
  h.node_count = cd.rank;
  h.below.assign(n, ElementSet{});
  h.above.assign(n, ElementSet{});
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t p = 0; p < q; ++p) {
      const bool same = word[p] == word[q];
      const bool related = same ? rule == EqualLabelRule::Ordered : !cd.commute(word[p], word[q]);
      if (related) {
        h.below[q].insert(p);
        h.below[q] |= h.below[p];
      }
    }
  }
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t p = 0; p < n; ++p)
      if (h.below[q].contains(p)) h.above[p].insert(q);

  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t p = 0; p < q; ++p) {
      if (!h.below[q].contains(p)) continue;
      // p is covered by q unless some r sits strictly between.
      if (!(h.above[p] & h.below[q]).empty()) continue;
      h.covers.emplace_back(p, q);
    }
  }

  h.rank.assign(n, 0);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t p = 0; p < q; ++p)
      if (h.below[q].contains(p)) h.rank[q] = std::max(h.rank[q], h.rank[p] + 1);

  std::map<int, int> seen;
  h.canonical_name.reserve(n);
  for (std::size_t p = 0; p < n; ++p) h.canonical_name.emplace_back(word[p], ++seen[word[p]]);
  return h;
}

/// The minuscule heap of omega_k (or any minuscule lambda) built from the
/// smallest-label saturated chain of its orbit.
inline Heap build_minuscule_heap(const CartanDatum& cd, const Weight& lambda,
                                 std::size_t orbit_cap = kDefaultOrbitCap) {
  const auto orbit = generate_orbit(cd, lambda, orbit_cap);
  const auto report = verify_minuscule(cd, orbit);
  if (!report.ok)
    throw DomainError("weight " + weight_to_string(lambda) + " of " + cd.name() +
                      " is not minuscule: " + report.failures.front());
  Heap h = heap_from_word(cd, saturated_chain(orbit));
  h.highest_weight = lambda;
  return h;
}

/// Elements labeled `node`, increasing in heap order.
inline std::vector<std::size_t> label_fiber(const Heap& h, int node) {
  std::vector<std::size_t> fiber;
  for (std::size_t p = 0; p < h.size(); ++p)
    if (h.label[p] == node) fiber.push_back(p);
  std::sort(fiber.begin(), fiber.end(), [&](auto a, auto b) { return h.less(a, b); });
  return fiber;
}

/// The label-preserving isomorphism h1 -> h2 matching canonical names,
/// if it is an order isomorphism.
inline std::optional<std::vector<std::size_t>> heaps_isomorphic(const Heap& h1, const Heap& h2) {
  if (h1.size() != h2.size()) return std::nullopt;
  std::map<CanonicalName, std::size_t> where;
  for (std::size_t q = 0; q < h2.size(); ++q) where[h2.canonical_name[q]] = q;
  std::vector<std::size_t> sigma(h1.size());
  for (std::size_t p = 0; p < h1.size(); ++p) {
    auto it = where.find(h1.canonical_name[p]);
    if (it == where.end()) return std::nullopt;
    sigma[p] = it->second;
  }
  for (std::size_t p = 0; p < h1.size(); ++p)
    for (std::size_t q = 0; q < h1.size(); ++q)
      if (h1.less(p, q) != h2.less(sigma[p], sigma[q])) return std::nullopt;
  return sigma;
}

/// A uniformly chosen minimal element is removed at each step.
template <class Rng>
std::vector<std::size_t> random_linear_extension(const Heap& h, const ElementSet& subset, Rng& rng) {
  std::vector<std::size_t> order;
  ElementSet placed;
  const std::size_t target = subset.count();
  while (order.size() < target) {
    std::vector<std::size_t> ready;
    for (std::size_t p = 0; p < h.size(); ++p)
      if (subset.contains(p) && !placed.contains(p) && (h.below[p] & subset).is_subset_of(placed))
        ready.push_back(p);
    if (ready.empty()) throw DomainError("subset is not an order ideal of the heap");
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const auto p = ready[pick(rng)];
    placed.insert(p);
    order.push_back(p);
  }
  return order;
}

template <class Rng>
std::vector<std::size_t> random_linear_extension(const Heap& h, Rng& rng) {
  return random_linear_extension(h, h.all(), rng);
}

inline std::vector<int> word_of(const Heap& h, const std::vector<std::size_t>& extension) {
  std::vector<int> word;
  word.reserve(extension.size());
  for (auto p : extension) word.push_back(h.label[p]);
  return word;
}

}  // namespace minuscule
