#pragma once

// Order ideals of a heap, toggles, the weight map phi and the
// rowmotion/gyration dynamics.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "minuscule/cartan.hpp"
#include "minuscule/element_set.hpp"
#include "minuscule/error.hpp"
#include "minuscule/heap.hpp"

namespace minuscule {

inline constexpr std::size_t kDefaultIdealCap = 1'000'000;

using OrderIdeal = ElementSet;

struct IdealCover {
  std::size_t lower;
  std::size_t upper;
  std::size_t element;
  friend bool operator==(const IdealCover&, const IdealCover&) = default;
};

struct IdealLattice {
  std::size_t heap_size = 0;
  std::vector<OrderIdeal> ideals;
  std::vector<IdealCover> covers;
  std::vector<Weight> phi_image;  // empty unless the heap carries lambda
  std::unordered_map<OrderIdeal, std::size_t, ElementSetHash> index;

  std::size_t size() const { return ideals.size(); }
  /// Maximal rank: the cardinality of the full ideal.
  std::size_t max_rank() const { return heap_size; }

  std::size_t index_of(const OrderIdeal& I) const {
    auto it = index.find(I);
    if (it == index.end()) throw InternalError("set is not an enumerated order ideal");
    return it->second;
  }
};

inline bool is_order_ideal(const Heap& h, const ElementSet& s) {
  for (std::size_t p = 0; p < h.size(); ++p)
    if (s.contains(p) && !h.below[p].is_subset_of(s)) return false;
  return true;
}

inline bool can_add(const Heap& h, const OrderIdeal& I, std::size_t p) {
  return !I.contains(p) && h.below[p].is_subset_of(I);
}
inline bool can_remove(const Heap& h, const OrderIdeal& I, std::size_t p) {
  return I.contains(p) && !h.above[p].intersects(I);
}

inline OrderIdeal toggle(const Heap& h, const OrderIdeal& I, std::size_t p) {
  if (can_add(h, I, p)) return I.with(p);
  if (can_remove(h, I, p)) return I.without(p);
  return I;
}

/// Toggles every element labeled `node`; the fiber is a chain without
/// covers, so the order of the toggles does not matter.
inline OrderIdeal toggle_label(const Heap& h, OrderIdeal I, int node) {
  for (std::size_t p = 0; p < h.size(); ++p)
    if (h.label[p] == node) I = toggle(h, I, p);
  return I;
}

inline Weight phi(const CartanDatum& cd, const Heap& h, const OrderIdeal& I) {
  if (!h.highest_weight) throw DomainError("heap carries no highest weight");
  Weight w = *h.highest_weight;
  for (std::size_t p = 0; p < h.size(); ++p)
    if (I.contains(p)) w = simple_reflection(cd, h.label[p], w);
  return w;
}

/// phi evaluated along an explicit linear extension of I.
inline Weight phi_along(const CartanDatum& cd, const Heap& h, const std::vector<std::size_t>& extension) {
  if (!h.highest_weight) throw DomainError("heap carries no highest weight");
  Weight w = *h.highest_weight;
  for (auto p : extension) w = simple_reflection(cd, h.label[p], w);
  return w;
}

inline IdealLattice enumerate_ideals(const Heap& h, std::size_t cap = kDefaultIdealCap) {
  IdealLattice L;
  L.heap_size = h.size();
  std::vector<OrderIdeal> found{OrderIdeal{}};
  std::unordered_map<OrderIdeal, std::size_t, ElementSetHash> seen{{OrderIdeal{}, 0}};
  for (std::size_t k = 0; k < found.size(); ++k) {
    const OrderIdeal I = found[k];
    for (std::size_t p = 0; p < h.size(); ++p) {
      if (!can_add(h, I, p)) continue;
      auto J = I.with(p);
      if (seen.count(J)) continue;
      if (found.size() >= cap)
        throw ResourceError("ideal count exceeds cap of " + std::to_string(cap));
      seen.emplace(J, found.size());
      found.push_back(J);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    const auto ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : bit_lex_less(a, b);
  });
  L.ideals = std::move(found);
  for (std::size_t i = 0; i < L.ideals.size(); ++i) L.index.emplace(L.ideals[i], i);
  for (std::size_t i = 0; i < L.ideals.size(); ++i)
    for (std::size_t p = 0; p < h.size(); ++p)
      if (can_add(h, L.ideals[i], p)) L.covers.push_back({i, L.index_of(L.ideals[i].with(p)), p});
  return L;
}

/// Enumerates the ideals and records phi on each of them.
inline IdealLattice enumerate_ideals(const CartanDatum& cd, const Heap& h,
                                     std::size_t cap = kDefaultIdealCap) {
  auto L = enumerate_ideals(h, cap);
  L.phi_image.reserve(L.size());
  for (const auto& I : L.ideals) L.phi_image.push_back(phi(cd, h, I));
  return L;
}

struct CommutationViolation {
  std::size_t ideal;
  int node;
  Weight lhs;  // phi(t_i(I))
  Weight rhs;  // s_i(phi(I))
};

struct CommutationReport {
  std::size_t instances = 0;
  std::vector<CommutationViolation> violations;
  bool ok() const { return violations.empty(); }
};

inline CommutationReport verify_commutation(const CartanDatum& cd, const Heap& h, const IdealLattice& L) {
  if (L.phi_image.size() != L.size()) throw DomainError("lattice has no phi table");
  CommutationReport report;
  for (std::size_t k = 0; k < L.size(); ++k) {
    for (int i = 1; i <= static_cast<int>(cd.rank); ++i) {
      ++report.instances;
      const auto moved = L.index_of(toggle_label(h, L.ideals[k], i));
      const auto expected = simple_reflection(cd, i, L.phi_image[k]);
      if (L.phi_image[moved] != expected) report.violations.push_back({k, i, L.phi_image[moved], expected});
    }
  }
  return report;
}

/// The ideal generated by the minimal elements of the complement.
inline OrderIdeal rowmotion(const Heap& h, const OrderIdeal& I) {
  OrderIdeal out;
  for (std::size_t p = 0; p < h.size(); ++p)
    if (can_add(h, I, p)) {
      out.insert(p);
      out |= h.below[p];
    }
  return out;
}

/// Rowmotion as a toggle sweep from the top of a linear extension down.
inline OrderIdeal rowmotion_by_toggles(const Heap& h, OrderIdeal I) {
  for (std::size_t p = h.size(); p-- > 0;) I = toggle(h, I, p);
  return I;
}

enum class GyrationOrder { EvenFirst, OddFirst };

inline OrderIdeal gyration(const Heap& h, OrderIdeal I, GyrationOrder order = GyrationOrder::EvenFirst) {
  const std::size_t first = order == GyrationOrder::EvenFirst ? 0 : 1;
  for (std::size_t phase = 0; phase < 2; ++phase) {
    const std::size_t parity = (first + phase) % 2;
    for (std::size_t p = 0; p < h.size(); ++p)
      if (h.rank[p] % 2 == parity) I = toggle(h, I, p);
  }
  return I;
}

using IdealAction = std::function<OrderIdeal(const OrderIdeal&)>;

/// Cycles of a bijective action, each starting at its smallest index and
/// listed by that index.
inline std::vector<std::vector<std::size_t>> action_orbits(const IdealLattice& L, const IdealAction& action) {
  std::vector<std::size_t> image(L.size());
  std::vector<bool> hit(L.size(), false);
  for (std::size_t k = 0; k < L.size(); ++k) {
    const auto it = L.index.find(action(L.ideals[k]));
    if (it == L.index.end()) throw InternalError("action leaves the ideal lattice");
    if (hit[it->second]) throw InternalError("action is not a bijection on ideals");
    hit[it->second] = true;
    image[k] = it->second;
  }
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> done(L.size(), false);
  for (std::size_t k = 0; k < L.size(); ++k) {
    if (done[k]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = k; !done[x]; x = image[x]) {
      done[x] = true;
      cycle.push_back(x);
    }
    orbits.push_back(std::move(cycle));
  }
  return orbits;
}

inline IdealAction rowmotion_action(const Heap& h) {
  return [&h](const OrderIdeal& I) { return rowmotion(h, I); };
}
inline IdealAction gyration_action(const Heap& h, GyrationOrder order = GyrationOrder::EvenFirst) {
  return [&h, order](const OrderIdeal& I) { return gyration(h, I, order); };
}

}  // namespace minuscule
