#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ifam/composers.hpp"
#include "ifam/constructions.hpp"
#include "ifam/isomorphism.hpp"

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

// Rename every point through a random bijection onto fresh labels.
SetFamily relabeled(const SetFamily& f, std::mt19937& rng) {
  std::vector<Label> fresh;
  for (std::size_t i = 0; i < f.point_count(); ++i) fresh.push_back("r" + std::to_string(i));
  std::shuffle(fresh.begin(), fresh.end(), rng);
  std::map<Label, Label> rename;
  for (std::size_t i = 0; i < f.point_count(); ++i) rename[f.label(i)] = fresh[i];
  std::vector<std::vector<Label>> blocks;
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<Label> b;
    for (const Label& l : f.block_labels(i)) b.push_back(rename.at(l));
    blocks.push_back(std::move(b));
  }
  return ifam::family_from_label_blocks(blocks);
}

SetFamily cycle6() {
  return ifam::family_from_label_blocks(
      {{"u1", "u2"}, {"u2", "u3"}, {"u3", "u4"}, {"u4", "u5"}, {"u5", "u6"}, {"u6", "u1"}});
}

SetFamily two_triangles() {
  return ifam::family_from_label_blocks(
      {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v1"}, {"v4", "v5"}, {"v5", "v6"}, {"v6", "v4"}});
}

} // namespace

TEST_CASE("degree profiles") {
  ifam::DegreeProfile p = ifam::degree_profile(ifam::mif_triangle());
  CHECK(p == ifam::DegreeProfile{{2, 3}});
  CHECK(ifam::profile_to_string(p) == "{2:3}");

  SetFamily star = ifam::family_from_label_blocks({{"a", "b"}, {"a", "c"}, {"a", "d"}});
  CHECK(ifam::profile_to_string(ifam::degree_profile(star)) == "{3:1, 1:3}");
}

TEST_CASE("isomorphism is reflexive and survives relabeling") {
  std::mt19937 rng(424242);
  for (const SetFamily& f : {ifam::circular_F(4, 2), ifam::complete_cif(3, 2), cycle6()}) {
    ifam::IsoResult self = ifam::are_isomorphic(f, f);
    CHECK(self.isomorphic);
    REQUIRE(self.mapping.has_value());
    CHECK(ifam::verify_isomorphism(f, f, *self.mapping));
    for (int trial = 0; trial < 5; ++trial) {
      SetFamily g = relabeled(f, rng);
      ifam::IsoResult r = ifam::are_isomorphic(f, g);
      ifam::IsoResult back = ifam::are_isomorphic(g, f);
      CHECK(r.isomorphic);
      CHECK(back.isomorphic);
      REQUIRE(r.mapping.has_value());
      CHECK(ifam::verify_isomorphism(f, g, *r.mapping));
    }
  }
}

TEST_CASE("cheap invariants separate where they can") {
  SetFamily tri = ifam::mif_triangle();
  SetFamily path = ifam::family_from_label_blocks({{"a", "b"}, {"b", "c"}});
  ifam::IsoResult r = ifam::are_isomorphic(tri, path);
  CHECK_FALSE(r.isomorphic);
  CHECK(r.separating_invariant == std::string("block_count"));

  SetFamily path4 = ifam::family_from_label_blocks({{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK(ifam::are_isomorphic(tri, path4).separating_invariant == std::string("point_count"));

  SetFamily mixed = ifam::family_from_label_blocks({{"a", "b"}, {"a", "b", "c"}});
  SetFamily pair2 = ifam::family_from_label_blocks({{"a", "b"}, {"a", "c"}});
  CHECK(ifam::are_isomorphic(mixed, pair2).separating_invariant == std::string("uniform_k"));

  SetFamily spread = ifam::family_from_label_blocks({{"a", "b", "c"}, {"d", "e", "f"},
                                                     {"a", "b", "d"}});
  SetFamily chain = ifam::family_from_label_blocks({{"a", "b", "c"}, {"c", "d", "e"},
                                                    {"e", "a", "f"}});
  ifam::IsoResult rd = ifam::are_isomorphic(spread, chain);
  CHECK_FALSE(rd.isomorphic);
  CHECK(rd.separating_invariant == std::string("intersection_distribution"));
}

TEST_CASE("exhaustive search decides when every invariant ties") {
  // Same point count, block count, uniformity, degree profile (all degree 2),
  // and intersection distribution; only the search can tell them apart.
  ifam::IsoResult r = ifam::are_isomorphic(cycle6(), two_triangles());
  CHECK_FALSE(r.isomorphic);
  CHECK_FALSE(r.separating_invariant.has_value());
  CHECK(r.detail.find("exhaustive") != std::string::npos);

  std::mt19937 rng(9);
  ifam::IsoResult ok = ifam::are_isomorphic(cycle6(), relabeled(cycle6(), rng));
  CHECK(ok.isomorphic);
}

TEST_CASE("the two 42-block maximal families are not isomorphic") {
  SetFamily a = ifam::embed(ifam::circular_F(4, 2), ifam::mif_triangle()).result;
  SetFamily b = ifam::embed(ifam::circular_F(4, 3), ifam::mif_singleton()).result;
  CHECK(ifam::profile_to_string(ifam::degree_profile(a)) == "{26:3, 14:5, 10:2}");
  CHECK(ifam::profile_to_string(ifam::degree_profile(b)) == "{36:1, 16:6, 12:3}");
  ifam::IsoResult r = ifam::are_isomorphic(a, b);
  CHECK_FALSE(r.isomorphic);
  CHECK(r.separating_invariant == std::string("degree_profile"));
}

TEST_CASE("mapping checker rejects wrong mappings") {
  SetFamily path = ifam::family_from_label_blocks({{"a", "b"}, {"b", "c"}});
  CHECK(ifam::verify_isomorphism(path, path, {{"a", "a"}, {"b", "b"}, {"c", "c"}}));
  CHECK(ifam::verify_isomorphism(path, path, {{"a", "c"}, {"b", "b"}, {"c", "a"}}));
  // b must map to the middle point
  CHECK_FALSE(ifam::verify_isomorphism(path, path, {{"a", "a"}, {"b", "c"}, {"c", "b"}}));
  // not a bijection
  CHECK_FALSE(ifam::verify_isomorphism(path, path, {{"a", "a"}, {"b", "a"}, {"c", "c"}}));
  // wrong size
  CHECK_FALSE(ifam::verify_isomorphism(path, path, {{"a", "a"}}));
  // unknown labels
  CHECK_FALSE(ifam::verify_isomorphism(path, path, {{"a", "zz"}, {"b", "b"}, {"c", "c"}}));
}

TEST_CASE("oversized inputs are refused") {
  std::vector<std::vector<Label>> chain;
  for (int i = 0; i + 1 < 33; ++i)
    chain.push_back({"p" + std::to_string(i), "p" + std::to_string(i + 1)});
  SetFamily big = ifam::family_from_label_blocks(chain);
  CHECK(big.point_count() == 33);
  CHECK(throws_code([&] { ifam::are_isomorphic(big, big); }, Err::BudgetExceeded));
}
