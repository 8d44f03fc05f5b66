#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ifam/family.hpp"
#include "ifam/io.hpp"

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

SetFamily triangle() {
  return ifam::family_from_label_blocks({{"a", "b"}, {"a", "c"}, {"b", "c"}});
}

} // namespace

TEST_CASE("families canonicalize labels and blocks") {
  SetFamily f = ifam::family_from_label_blocks({{"c", "b"}, {"a", "b"}});
  CHECK(f.labels() == std::vector<Label>{"a", "b", "c"});
  CHECK(f.size() == 2);
  // Blocks sort by bitmask order over the sorted labels: {a,b} before {b,c}.
  CHECK(f.block_labels(0) == std::vector<Label>{"a", "b"});
  CHECK(f.block_labels(1) == std::vector<Label>{"b", "c"});
  CHECK(f.point_count() == 3);
  CHECK(f.uniform_k() == 2);
}

TEST_CASE("canonical form is invariant under input order and label renaming") {
  std::mt19937 rng(7);
  SetFamily base = ifam::family_from_label_blocks(
      {{"u", "v", "w"}, {"u", "x", "y"}, {"v", "x", "z"}, {"w", "y", "z"}});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<Label>> blocks;
    for (std::size_t i = 0; i < base.size(); ++i) blocks.push_back(base.block_labels(i));
    std::shuffle(blocks.begin(), blocks.end(), rng);
    for (auto& b : blocks) std::shuffle(b.begin(), b.end(), rng);
    CHECK(ifam::family_from_label_blocks(blocks) == base);
  }
}

TEST_CASE("construction rejects malformed input") {
  CHECK(throws_code([] { ifam::make_family({"a", "b"}, {{0}, {0}}); }, Err::DuplicateBlock));
  CHECK(throws_code([] { ifam::make_family({"a", "b"}, {{0, 1}, {1, 0}}); },
                    Err::DuplicateBlock));
  CHECK(throws_code([] { ifam::make_family({"a", "a"}, {{0}, {1}}); }, Err::DuplicateLabel));
  CHECK(throws_code([] { ifam::make_family({"a"}, {{}}); }, Err::EmptyBlock));
  CHECK(throws_code([] { ifam::make_family({"a", ""}, {{0}, {1}}); }, Err::EmptyLabel));
  CHECK(throws_code([] { ifam::make_family({"a", "b"}, {{0}}); }, Err::IsolatedPoint));
  CHECK(throws_code([] { ifam::make_family({"a"}, {{1}}); }, Err::IndexOutOfRange));
  std::vector<Label> big;
  for (int i = 0; i < 129; ++i) big.push_back("p" + std::to_string(i));
  std::vector<std::vector<ifam::PointId>> blocks;
  for (std::size_t i = 0; i + 1 < big.size(); ++i) blocks.push_back({i, i + 1});
  CHECK(throws_code([&] { ifam::make_family(big, blocks); }, Err::UniverseTooLarge));
}

TEST_CASE("member lists are treated as sets") {
  SetFamily f = ifam::make_family({"a", "b"}, {{0, 1, 0}});
  CHECK(f.size() == 1);
  CHECK(f.block_labels(0) == std::vector<Label>{"a", "b"});
}

TEST_CASE("lookup helpers") {
  SetFamily f = triangle();
  CHECK(f.index_of("b") == std::size_t{1});
  CHECK_FALSE(f.index_of("zz").has_value());
  CHECK(f.label(2) == "c");
  CHECK(f.has_block(f.blocks()[0]));
  ifam::Mask absent;
  absent.set(0);
  CHECK_FALSE(f.has_block(absent));
}

TEST_CASE("disjoint union keeps labels apart") {
  SetFamily t = triangle();
  SetFamily s = ifam::family_from_label_blocks({{"z"}});
  SetFamily u = ifam::disjoint_union(t, s);
  CHECK(u.point_count() == 4);
  CHECK(u.size() == 4);
  // No shared labels, so no prefixes were needed.
  CHECK(u.index_of("a").has_value());
  CHECK(u.index_of("z").has_value());

  SetFamily clash = ifam::disjoint_union(t, t);
  CHECK(clash.point_count() == 6);
  CHECK(clash.size() == 6);
  CHECK(clash.index_of("L:a").has_value());
  CHECK(clash.index_of("R:a").has_value());
}

TEST_CASE("union by shared labels rejects repeated blocks") {
  SetFamily t = triangle();
  SetFamily extra = ifam::family_from_label_blocks({{"a", "b", "c"}});
  SetFamily merged = ifam::union_families(t, extra);
  CHECK(merged.size() == 4);
  CHECK(merged.point_count() == 3);
  CHECK(throws_code([&] { ifam::union_families(t, t); }, Err::DuplicateBlock));
}

TEST_CASE("join forms all pairwise unions over separate universes") {
  SetFamily t = triangle();
  SetFamily s = ifam::family_from_label_blocks({{"z"}, {"y"}});
  SetFamily j = ifam::join(t, s);
  CHECK(j.size() == t.size() * s.size());
  CHECK(j.point_count() == 5);
  CHECK(j.uniform_k() == 3);
  CHECK(throws_code([&] { ifam::join(t, t); }, Err::OverlappingUniverses));
}

TEST_CASE("subfamily and prefixing") {
  SetFamily t = triangle();
  SetFamily sub = ifam::subfamily(t, {0, 2});
  CHECK(sub.size() == 2);
  SetFamily pre = ifam::prefix_labels(t, "A:");
  CHECK(pre.index_of("A:a") == std::size_t{0});
  // A common prefix preserves label order, so block order matches too.
  for (std::size_t i = 0; i < t.size(); ++i)
    CHECK(pre.block_members(i) == t.block_members(i));
}

TEST_CASE("json round trip") {
  SetFamily t = triangle();
  std::string text = ifam::to_json_string(t);
  SetFamily back = ifam::family_from_json_string(text);
  CHECK(back == t);
}

TEST_CASE("json reader flags malformed input") {
  CHECK(throws_code([] { ifam::family_from_json_string("not json"); }, Err::ParseError));
  CHECK(throws_code([] { ifam::family_from_json_string("{\"points\": []}"); }, Err::ParseError));
  CHECK(throws_code(
      [] { ifam::family_from_json_string("{\"points\": [\"a\"], \"blocks\": [[\"a\"]]}"); },
      Err::ParseError));
  CHECK(throws_code(
      [] { ifam::family_from_json_string("{\"points\": [\"a\",\"b\"], \"blocks\": [[0]]}"); },
      Err::ValidationError));
  CHECK(throws_code(
      [] { ifam::family_from_json_string("{\"points\": [\"a\"], \"blocks\": [[3]]}"); },
      Err::ValidationError));
}
