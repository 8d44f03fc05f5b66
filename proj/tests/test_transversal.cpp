#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "ifam/constructions.hpp"
#include "ifam/family.hpp"
#include "ifam/transversal.hpp"
#include "oracle.hpp"

using ifam::Err;
using ifam::Error;
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

TEST_CASE("cover number on simple families") {
  CHECK(ifam::tau(ifam::family_from_label_blocks({{"a"}})) == 1);
  CHECK(ifam::tau(triangle()) == 2);
  SetFamily star = ifam::family_from_label_blocks({{"a", "b"}, {"a", "c"}, {"a", "d"}});
  CHECK(ifam::tau(star) == 1);
  CHECK(ifam::tau(SetFamily{}) == 0);
}

TEST_CASE("cover number matches the power-set oracle on random families") {
  std::mt19937 rng(20260814);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t p = 6 + static_cast<std::size_t>(rng() % 7);  // 6..12 points
    std::size_t k = 2 + static_cast<std::size_t>(rng() % 3);  // block size 2..4
    if (k * 2 > p) k = 2;
    SetFamily f = oracle::random_intersecting(rng, p, k, 4 + rng() % 8);
    CAPTURE(trial);
    CHECK(ifam::tau(f) == oracle::tau(f));
  }
}

TEST_CASE("minimum blocking sets match the power-set oracle") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t p = 6 + static_cast<std::size_t>(rng() % 5);
    SetFamily f = oracle::random_intersecting(rng, p, 3, 4 + rng() % 6);
    ifam::TransversalReport rep = ifam::transversals(f);
    CHECK(rep.tau == oracle::tau(f));
    CHECK(oracle::blocks_as_label_lists(rep.transversals) ==
          oracle::to_labels(f, oracle::min_blockers(f)));
  }
}

TEST_CASE("triangle blocks itself: dual equals the family") {
  ifam::TransversalReport rep = ifam::transversals(triangle());
  CHECK(rep.tau == 2);
  CHECK(rep.transversals == triangle());
}

TEST_CASE("blocking sets of a fixed size in canonical order") {
  SetFamily t = triangle();
  SetFamily pairs = ifam::blocking_sets_of_size(t, 2);
  CHECK(pairs == t); // the three edges are exactly the 2-element blockers
  SetFamily triples = ifam::blocking_sets_of_size(t, 3);
  CHECK(triples.size() == 1); // the whole universe
  CHECK(throws_code([&] { ifam::blocking_sets_of_size(t, 0); }, Err::InvalidParams));
  CHECK(throws_code([&] { ifam::blocking_sets_of_size(t, 4); }, Err::InvalidParams));
}

TEST_CASE("fixed-size sweep matches the oracle and is independent of threads") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t p = 7 + static_cast<std::size_t>(rng() % 4);
    SetFamily f = oracle::random_intersecting(rng, p, 3, 5 + rng() % 5);
    for (std::size_t s = 1; s <= 4; ++s) {
      ifam::set_thread_cap(1);
      auto seq = ifam::blocking_set_masks_of_size(f, s);
      ifam::set_thread_cap(4);
      auto par = ifam::blocking_set_masks_of_size(f, s);
      ifam::set_thread_cap(1);
      CHECK(seq == par);
      SetFamily as_family = ifam::blocking_sets_of_size(f, s);
      CHECK(oracle::blocks_as_label_lists(as_family) ==
            oracle::to_labels(f, oracle::blockers_of_size(f, s)));
    }
  }
}

TEST_CASE("dual recomputation agrees with the fixed-size sweep") {
  for (auto [k, t] : {std::pair<std::size_t, std::size_t>{4, 2}, {4, 3}, {5, 3}}) {
    SetFamily f = ifam::circular_F(k, t);
    ifam::TransversalReport rep = ifam::transversals(f);
    CHECK(rep.transversals == ifam::blocking_sets_of_size(f, rep.tau));
  }
}

TEST_CASE("cycle-walk fixtures have the recorded dual sizes") {
  struct Row { std::size_t k, t, tau, dual; };
  for (Row row : {Row{4, 2, 2, 13}, Row{4, 3, 3, 36}, Row{5, 3, 3, 76}}) {
    SetFamily f = ifam::circular_F(row.k, row.t);
    ifam::TransversalReport rep = ifam::transversals(f);
    CAPTURE(row.k);
    CAPTURE(row.t);
    CHECK(rep.tau == row.tau);
    CHECK(rep.transversals.size() == row.dual);
  }
  ifam::TransversalReport g53 = ifam::transversals(ifam::circular_G(5, 3));
  CHECK(g53.tau == 3);
  CHECK(g53.transversals.size() == 64);
}

TEST_CASE("every reported transversal is minimal") {
  SetFamily f = ifam::circular_F(4, 3);
  ifam::TransversalReport rep = ifam::transversals(f);
  for (const ifam::Mask& m : rep.transversals.blocks()) {
    CHECK(ifam::is_blocking(m, f));
    for (std::size_t p : m.members()) {
      ifam::Mask smaller = m;
      smaller.reset(p);
      CHECK_FALSE(ifam::is_blocking(smaller, f));
    }
  }
}

TEST_CASE("blocking predicate accepts labels and rejects unknown ones") {
  SetFamily t = triangle();
  CHECK(ifam::is_blocking(std::vector<ifam::Label>{"a", "b"}, t));
  CHECK_FALSE(ifam::is_blocking(std::vector<ifam::Label>{"a"}, t));
  CHECK(throws_code([&] { ifam::is_blocking(std::vector<ifam::Label>{"zz"}, t); },
                    Err::IndexOutOfRange));
}

TEST_CASE("size ceiling check") {
  SetFamily t = triangle();
  ifam::PropertyVerdict v = ifam::check_upper_bound(t);
  CHECK(v.holds); // 3 <= 2^2
  CHECK(throws_code([] { ifam::check_upper_bound(ifam::family_from_label_blocks(
                             {{"a"}, {"a", "b"}})); },
                    Err::NotUniform));
}
