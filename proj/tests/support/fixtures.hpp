#pragma once

#include <cstddef>
#include <vector>

#include "minuscule/minuscule.hpp"
#include "support/oracles.hpp"

namespace fixtures {

using namespace minuscule;

inline CaseBundle bundle(Family f, std::size_t rank, int node) { return build_case({f, rank, node}); }

/// The heap as a strict order relation for the oracles.
inline oracle::Relation relation_of(const Heap& h) {
  oracle::Relation r(h.size(), std::vector<bool>(h.size(), false));
  for (std::size_t p = 0; p < h.size(); ++p)
    for (std::size_t q = 0; q < h.size(); ++q) r[p][q] = h.less(p, q);
  return r;
}

inline OrderIdeal ideal_of(std::initializer_list<std::size_t> elements) {
  OrderIdeal I;
  for (auto p : elements) I.insert(p);
  return I;
}

/// Two incomparable minimal elements below one top element, from the A3 word (1,3,2).
inline Heap v_poset() { return heap_from_word(build_cartan(Family::A, 3), {1, 3, 2}); }

/// One minimal element below three incomparable elements, from the D4 word (2,1,3,4).
inline Heap claw_poset() { return heap_from_word(build_cartan(Family::D, 4), {2, 1, 3, 4}); }

}  // namespace fixtures
