#include <doctest.h>

#include <functional>
#include <numeric>
#include <vector>

#include "ifam/constructions.hpp"
#include "ifam/properties.hpp"
#include "ifam/transversal.hpp"

using ifam::Err;
using ifam::Error;
using ifam::Label;
using ifam::SetFamily;

namespace {

bool throws_code(const std::function<void()>& fn, Err expected) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == expected;
  }
  return false;
}

std::vector<std::size_t> part_sizes(std::size_t k, std::size_t t) {
  ifam::CyclePartition cp = ifam::cycle_partition(k, t);
  std::vector<std::size_t> out;
  for (const auto& p : cp.parts) out.push_back(p.size());
  return out;
}

} // namespace

TEST_CASE("cycle partition part sizes") {
  CHECK(part_sizes(4, 2) == std::vector<std::size_t>{3, 4});
  CHECK(part_sizes(4, 3) == std::vector<std::size_t>{3, 3, 3});
  CHECK(part_sizes(5, 3) == std::vector<std::size_t>{4, 4, 4});
  CHECK(part_sizes(5, 4) == std::vector<std::size_t>{3, 3, 4, 4});
  CHECK(part_sizes(7, 2) == std::vector<std::size_t>{6, 7});
  CHECK(part_sizes(3, 1) == std::vector<std::size_t>{3});
}

TEST_CASE("walk family at k=4, t=2 is exactly the three expected blocks") {
  SetFamily f = ifam::circular_F(4, 2);
  SetFamily expected = ifam::family_from_label_blocks({
      {"X0:0", "X0:1", "X0:2", "X1:0"},
      {"X0:0", "X0:1", "X0:2", "X1:1"},
      {"X1:0", "X1:1", "X1:2", "X1:3"},
  });
  CHECK(f == expected);
  CHECK(f.point_count() == 7);
}

TEST_CASE("generator block counts") {
  struct Row { std::size_t k, t, f_blocks, g_blocks; };
  for (Row r : {Row{3, 2, 3, 4}, Row{4, 2, 3, 5}, Row{4, 3, 6, 9}, Row{5, 3, 6, 12},
                Row{5, 4, 12, 35}, Row{7, 2, 3, 8}}) {
    CAPTURE(r.k);
    CAPTURE(r.t);
    SetFamily f = ifam::circular_F(r.k, r.t);
    SetFamily g = ifam::circular_G(r.k, r.t);
    CHECK(f.size() == r.f_blocks);
    CHECK(g.size() == r.g_blocks);
    CHECK(f.uniform_k() == r.k);
    CHECK(g.uniform_k() == r.k);
    // Same labeled universe, so masks are directly comparable: F ⊆ G.
    REQUIRE(f.labels() == g.labels());
    for (const ifam::Mask& m : f.blocks()) CHECK(g.has_block(m));
  }
}

TEST_CASE("one-per-part family over the cycle partition") {
  ifam::CyclePartition cp = ifam::cycle_partition(4, 2);
  SetFamily h = ifam::one_per_part_family(cp);
  CHECK(h.size() == 3 * 4);
  CHECK(h.uniform_k() == 2);
  CHECK(h.point_count() == 7);
}

TEST_CASE("full product family has cover number t") {
  for (auto [k, t] : {std::pair<std::size_t, std::size_t>{3, 2}, {4, 2}, {4, 3}, {5, 3}}) {
    CAPTURE(k);
    CAPTURE(t);
    CHECK(ifam::tau(ifam::circular_G(k, t)) == t);
    CHECK(ifam::tau(ifam::circular_F(k, t)) == t);
  }
}

TEST_CASE("generators reject out-of-range parameters") {
  CHECK(throws_code([] { ifam::cycle_partition(4, 0); }, Err::InvalidParams));
  CHECK(throws_code([] { ifam::cycle_partition(4, 5); }, Err::InvalidParams));
  CHECK(throws_code([] { ifam::cycle_partition(0, 1); }, Err::InvalidParams));
  // Universe limit: 2 parts of 99 points each exceed the 128-point mask.
  CHECK(throws_code([] { ifam::circular_F(100, 2); }, Err::UniverseTooLarge));
  // Large k with small t stays comfortably inside the limit.
  CHECK(ifam::circular_F(40, 2).point_count() == 79); // parts of 39 and 40
}

TEST_CASE("small complete family") {
  SetFamily f = ifam::complete_cif(3, 2);
  CHECK(f.size() == 4);           // all 3-subsets of 4 points
  CHECK(f.point_count() == 4);
  CHECK(ifam::tau(f) == 2);
  SetFamily g = ifam::complete_cif(4, 1);
  CHECK(g.size() == 1);
  CHECK(ifam::tau(g) == 1);
  CHECK(throws_code([] { ifam::complete_cif(3, 3); }, Err::InvalidParams));
}

TEST_CASE("pointed variant") {
  SetFamily f = ifam::pointed_cif(3, 2);
  CHECK(f.size() == 4);
  CHECK(f.point_count() == 6); // 3 core points + 3 added symbols
  CHECK(f.uniform_k() == 3);
  CHECK(ifam::tau(f) == 2);
  CHECK(throws_code([] { ifam::pointed_cif(3, 1); }, Err::InvalidParams));
  CHECK(throws_code([] { ifam::pointed_cif(3, 3); }, Err::InvalidParams));
}

TEST_CASE("tiny maximal families") {
  CHECK(ifam::is_mif(ifam::mif_singleton()).holds);
  CHECK(ifam::is_mif(ifam::mif_triangle()).holds);
  CHECK(ifam::mif_singleton().size() == 1);
  CHECK(ifam::mif_triangle().size() == 3);
}

TEST_CASE("affine planes of prime order") {
  for (std::size_t n : {2ul, 3ul, 5ul}) {
    CAPTURE(n);
    ifam::AffinePlane plane = ifam::affine_plane(n);
    const SetFamily& lines = plane.lines;
    CHECK(lines.point_count() == n * n);
    CHECK(lines.size() == n * (n + 1));
    CHECK(lines.uniform_k() == n);
    REQUIRE(plane.classes.size() == n + 1);

    // Each class partitions the point set.
    for (const auto& cls : plane.classes) {
      REQUIRE(cls.size() == n);
      ifam::Mask covered;
      for (std::size_t i : cls) {
        CHECK_FALSE(covered.intersects(lines.blocks()[i]));
        covered |= lines.blocks()[i];
      }
      CHECK(covered == lines.universe_mask());
    }

    // Lines from different classes meet in exactly one point.
    for (std::size_t a = 0; a < plane.classes.size(); ++a)
      for (std::size_t b = a + 1; b < plane.classes.size(); ++b)
        for (std::size_t i : plane.classes[a])
          for (std::size_t j : plane.classes[b])
            CHECK((lines.blocks()[i] & lines.blocks()[j]).count() == 1);

    // Classes cover every line exactly once.
    std::size_t total = 0;
    for (const auto& cls : plane.classes) total += cls.size();
    CHECK(total == lines.size());
  }
  CHECK(throws_code([] { ifam::affine_plane(4); }, Err::UnsupportedOrder));
  CHECK(throws_code([] { ifam::affine_plane(1); }, Err::UnsupportedOrder));
  CHECK(throws_code([] { ifam::affine_plane(0); }, Err::UnsupportedOrder));
}
