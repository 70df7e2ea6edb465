#include <algorithm>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "crosspart/covers.hpp"
#include "crosspart/enumerate.hpp"
#include "crosspart/family.hpp"
#include "crosspart/partition.hpp"

using crosspart::Family;
using crosspart::Partition;

namespace {

Family random_family(oracles::Rng& rng, const std::vector<Partition>& universe, int n, int k,
                     int max_members) {
  Family f(n, k);
  int want = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_members)));
  for (int i = 0; i < want; i++)
    f.add(universe[rng.below(universe.size())]);
  return f;
}

}  // namespace

TEST_SUITE("covers") {

TEST_CASE("cover membership test") {
  Family f(5, 3);
  f.add(Partition::parse("{1|2|3,4,5}"));
  f.add(Partition::parse("{1|2,3|4,5}"));
  CHECK(crosspart::is_t_cover(Partition::parse("{1}"), f, 1));
  CHECK(crosspart::is_t_cover(Partition::parse("{1|2|4,5}"), f, 2));
  // {2} covers the first member twice over, but the second shares only {1}.
  CHECK_FALSE(crosspart::is_t_cover(Partition::parse("{1|2}"), f, 2));
  CHECK_FALSE(crosspart::is_t_cover(Partition::parse("{2,3}"), f, 1));
  CHECK_FALSE(crosspart::is_t_cover(Partition::parse("{1}"), f, 2));
}

TEST_CASE("covering number of anchored families") {
  // Everything contains the singleton {1}: one block suffices.
  std::vector<Partition> members;
  for (const Partition& p : oracles::all_partitions(6, 3))
    if (p.contains_block(crosspart::element_mask(1))) members.push_back(p);
  crosspart::CoverResult r = crosspart::tau_t(members, 1, true);
  CHECK(r.tau == 1);
  REQUIRE(!r.witnesses.empty());
  for (const Partition& w : r.witnesses) {
    CHECK(w.size() == 1);
    CHECK(crosspart::is_t_cover(w, members, 1));
  }
  CHECK(std::find(r.witnesses.begin(), r.witnesses.end(), Partition::parse("{1}")) !=
        r.witnesses.end());
}

TEST_CASE("covering number agrees with the exhaustive oracle") {
  auto u63 = oracles::all_partitions(6, 3);
  auto u62 = oracles::all_partitions(6, 2);
  oracles::Rng rng(20240817);
  int checked = 0;
  for (int trial = 0; trial < 60; trial++) {
    bool three = (trial % 2 == 0);
    Family f = random_family(rng, three ? u63 : u62, 6, three ? 3 : 2, 7);
    for (int t = 1; t <= 2; t++) {
      int naive = oracles::tau(f, t);
      if (naive < 0) {
        CHECK_THROWS_AS(crosspart::tau_t(f, t), std::domain_error);
        continue;
      }
      crosspart::CoverResult r = crosspart::tau_t(f, t, true);
      CHECK(r.tau == naive);
      checked++;
      for (const Partition& w : r.witnesses) {
        CHECK(w.size() == naive);
        CHECK(crosspart::is_t_cover(w, f, t));
      }
      // the witness list is exactly the minimum covers, no duplicates
      std::vector<Partition> mc = crosspart::min_covers(f, t, naive);
      CHECK(mc.size() == r.witnesses.size());
      for (const Partition& w : mc)
        CHECK(std::find(r.witnesses.begin(), r.witnesses.end(), w) != r.witnesses.end());
    }
  }
  CHECK(checked > 40);  // the generator must mostly produce coverable inputs
}

TEST_CASE("two-block covers when one block can never share two") {
  // Every member contains both singletons {1} and {2}; a single block shares
  // at most one, so tau at threshold 2 is exactly 2.
  Family f(6, 3);
  for (const Partition& p : oracles::all_partitions(6, 3)) {
    bool one = p.contains_block(crosspart::element_mask(1));
    bool two = p.contains_block(crosspart::element_mask(2));
    if (one && two) f.add(p);
  }
  crosspart::CoverResult r = crosspart::tau_t(f, 2, false);
  CHECK(r.tau == 2);
  CHECK(r.witnesses.empty());  // not requested
}

TEST_CASE("size filter on enumerated covers") {
  Family f(5, 2);
  f.add(Partition::parse("{1|2,3,4,5}"));
  f.add(Partition::parse("{1,2|3,4,5}"));
  // sharing one block with both members needs either a common block (none)
  // or is impossible with one block; tau is 2
  int naive = oracles::tau(f, 1);
  crosspart::CoverResult r = crosspart::tau_t(f, 1, true);
  CHECK(r.tau == naive);
  CHECK(crosspart::min_covers(f, 1, 0).empty());
}

TEST_CASE("node budget aborts the search") {
  Family f(7, 3);
  for (const Partition& p : oracles::all_partitions(7, 3))
    if (p.contains_block(crosspart::element_mask(1))) f.add(p);
  CHECK_THROWS_AS(crosspart::tau_t(f, 1, false, 1), crosspart::BudgetError);
}

}  // TEST_SUITE
