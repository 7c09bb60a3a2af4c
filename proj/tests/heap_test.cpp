#include <random>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

namespace {

using namespace minuscule;
using fixtures::relation_of;

TEST(HeapFromWord, AdjacentLabelsFormAChain) {
  const auto h = heap_from_word(build_cartan(Family::A, 2), {1, 2});
  ASSERT_EQ(h.size(), 2u);
  EXPECT_TRUE(h.less(0, 1));
  EXPECT_EQ(h.label, (std::vector<int>{1, 2}));
  EXPECT_EQ(h.covers, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
  EXPECT_EQ(h.rank, (std::vector<std::size_t>{0, 1}));
}

TEST(HeapFromWord, GridShapeInA3) {
  const auto h = heap_from_word(build_cartan(Family::A, 3), {2, 1, 3, 2});
  EXPECT_TRUE(h.less(0, 1));
  EXPECT_TRUE(h.less(0, 2));
  EXPECT_TRUE(h.less(1, 3));
  EXPECT_TRUE(h.less(2, 3));
  EXPECT_FALSE(h.comparable(1, 2));
  EXPECT_TRUE(oracle::find_isomorphism(relation_of(h), oracle::grid(2, 2)));
  EXPECT_EQ(h.covers.size(), 4u);
  EXPECT_EQ(h.rank, (std::vector<std::size_t>{0, 1, 1, 2}));
  EXPECT_EQ(h.canonical_name[3], (CanonicalName{2, 2}));
}

TEST(HeapFromWord, CommutingLettersFormAnAntichain) {
  const auto h = heap_from_word(build_cartan(Family::A, 3), {1, 3});
  EXPECT_FALSE(h.comparable(0, 1));
  EXPECT_TRUE(h.covers.empty());
}

TEST(HeapFromWord, EqualLabelRules) {
  const auto cd = build_cartan(Family::A, 2);
  // Non-reduced word: only the ordered rule relates the two letters.
  EXPECT_TRUE(heap_from_word(cd, {1, 1}).less(0, 1));
  EXPECT_FALSE(heap_from_word(cd, {1, 1}, EqualLabelRule::AdjacentOnly).comparable(0, 1));
  // Reduced: an intervening neighbour already orders them.
  EXPECT_EQ(heap_from_word(cd, {1, 2, 1}).below, heap_from_word(cd, {1, 2, 1}, EqualLabelRule::AdjacentOnly).below);
}

TEST(HeapFromWord, RejectsBadInput) {
  const auto cd = build_cartan(Family::A, 2);
  EXPECT_THROW(heap_from_word(cd, {1, 3}), ConfigurationError);
  EXPECT_THROW(heap_from_word(cd, std::vector<int>(kMaxHeapElements + 1, 1)), ResourceError);
}

TEST(BuildMinusculeHeap, SmallAndExceptional) {
  EXPECT_EQ(build_minuscule_heap(build_cartan(Family::A, 1), Weight{1}).size(), 1u);
  EXPECT_EQ(build_minuscule_heap(build_cartan(Family::E, 6), fundamental_weight(6, 6)).size(), 16u);
  EXPECT_EQ(build_minuscule_heap(build_cartan(Family::E, 7), fundamental_weight(7, 7)).size(), 27u);
}

TEST(BuildMinusculeHeap, TypeAIsAGrid) {
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 4; ++b) {
      const auto t = a + b - 1;
      const auto h = build_minuscule_heap(build_cartan(Family::A, t), fundamental_weight(t, static_cast<int>(a)));
      ASSERT_EQ(h.size(), a * b);
      EXPECT_TRUE(oracle::find_isomorphism(relation_of(h), oracle::grid(a, b))) << a << "x" << b;
      EXPECT_EQ(h.max_rank(), a + b - 2);
    }
}

TEST(BuildMinusculeHeap, RejectsNonMinuscule) {
  EXPECT_THROW(build_minuscule_heap(build_cartan(Family::D, 4), fundamental_weight(4, 2)), DomainError);
}

TEST(HeapsIsomorphic, Examples) {
  const auto cd = build_cartan(Family::A, 3);
  const auto h = heap_from_word(cd, {2, 1, 3, 2});
  const auto self = heaps_isomorphic(h, h);
  ASSERT_TRUE(self);
  EXPECT_EQ(*self, (std::vector<std::size_t>{0, 1, 2, 3}));

  const auto swapped = heaps_isomorphic(h, heap_from_word(cd, {2, 3, 1, 2}));
  ASSERT_TRUE(swapped);
  EXPECT_EQ(*swapped, (std::vector<std::size_t>{0, 2, 1, 3}));

  const auto a2 = build_cartan(Family::A, 2);
  EXPECT_FALSE(heaps_isomorphic(heap_from_word(a2, {1, 2}), heap_from_word(cd, {1, 3})));
  EXPECT_FALSE(heaps_isomorphic(heap_from_word(cd, {1, 2}), heap_from_word(cd, {1, 3})));
}

TEST(LabelFiber, Examples) {
  const auto a2 = build_minuscule_heap(build_cartan(Family::A, 2), Weight{1, 0});
  EXPECT_EQ(label_fiber(a2, 1), (std::vector<std::size_t>{0}));
  const auto grid = heap_from_word(build_cartan(Family::A, 3), {2, 1, 3, 2});
  EXPECT_EQ(label_fiber(grid, 2), (std::vector<std::size_t>{0, 3}));
  const auto unused = heap_from_word(build_cartan(Family::A, 3), {1, 2});
  EXPECT_TRUE(label_fiber(unused, 3).empty());
}

// Every linear extension is a reduced word for the same element, so its
// heap is isomorphic with identical canonical names.
TEST(HeapProperties, RandomLinearExtensionsRebuildIsomorphicHeaps) {
  std::mt19937_64 rng(2024);
  for (const auto& spec : default_catalog()) {
    const auto b = build_case(spec);
    auto names = b.heap.canonical_name;
    std::sort(names.begin(), names.end());
    for (int n = 0; n < 100; ++n) {
      const auto ext = random_linear_extension(b.heap, rng);
      const auto rebuilt = heap_from_word(b.cd, word_of(b.heap, ext));
      ASSERT_TRUE(heaps_isomorphic(b.heap, rebuilt)) << spec.name();
      auto rebuilt_names = rebuilt.canonical_name;
      std::sort(rebuilt_names.begin(), rebuilt_names.end());
      EXPECT_EQ(rebuilt_names, names);
      // Rebuilt words also walk a saturated chain in the orbit.
      EXPECT_EQ(b.orbit.find(phi_along(b.cd, b.heap, ext)), b.orbit.top);
    }
  }
}

TEST(HeapProperties, FibersAcrossTheCatalog) {
  for (const auto& spec : default_catalog()) {
    const auto b = build_case(spec);
    const auto& h = b.heap;
    for (std::size_t p = 0; p < h.size(); ++p)
      for (std::size_t q = p + 1; q < h.size(); ++q)
        if (h.label[p] == h.label[q]) {
          EXPECT_TRUE(h.less(p, q)) << spec.name();
        }
    for (auto [p, q] : h.covers) EXPECT_NE(h.label[p], h.label[q]) << spec.name();
    EXPECT_EQ(heap_from_word(b.cd, h.label, EqualLabelRule::AdjacentOnly).below, h.below) << spec.name();
    // Ranks: covers raise rank by exactly one (minuscule heaps are graded).
    for (auto [p, q] : h.covers) EXPECT_EQ(h.rank[q], h.rank[p] + 1) << spec.name();
  }
}

}  // namespace
