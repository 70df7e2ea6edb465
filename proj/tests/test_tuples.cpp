#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "crosspart/constructions.hpp"
#include "crosspart/enumerate.hpp"
#include "crosspart/family.hpp"
#include "crosspart/partition.hpp"
#include "crosspart/stirling.hpp"
#include "crosspart/tuples.hpp"

using crosspart::BigCount;
using crosspart::Family;
using crosspart::Partition;

namespace {

// Library call emulated by the oracle: prepend {base} as its own family and
// take the minimum common-block count over full choices.
int oracle_min_shared(const Partition& base, const std::vector<Family>& others) {
  Family self(others.front().ground_n(), base.size(), {base});
  std::vector<const Family*> fams = {&self};
  for (const Family& f : others) fams.push_back(&f);
  return oracles::min_shared_over_choices(fams);
}

std::vector<Family> random_tuple(oracles::Rng& rng, int n, int r, int max_members) {
  std::vector<Family> out;
  for (int i = 0; i < r; i++) {
    int k = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    auto u = oracles::all_partitions(n, k);
    Family f(n, k);
    int want = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_members)));
    for (int j = 0; j < want; j++) f.add(u[rng.below(u.size())]);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

TEST_SUITE("tuples") {

TEST_CASE("choice minimum agrees with the product-loop oracle") {
  oracles::Rng rng(31001);
  int done = 0;
  while (done < 60) {
    int n = 3 + static_cast<int>(rng.below(3));  // 3..5
    int r = 2 + static_cast<int>(rng.below(2));  // 2..3
    std::vector<Family> others = random_tuple(rng, n, r, 5);
    int kb = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    auto u = oracles::all_partitions(n, kb);
    Partition base = u[rng.below(u.size())];
    int lib = crosspart::min_shared_over_choices(base, others);
    CHECK(lib == oracle_min_shared(base, others));
    CHECK(crosspart::min_shared_at_least(base, others, lib));
    CHECK_FALSE(crosspart::min_shared_at_least(base, others, lib + 1));
    done++;
  }
}

TEST_CASE("empty families and mismatched grounds are rejected") {
  Family good(5, 2, oracles::all_partitions(5, 2));
  Family empty(5, 3);
  Partition base = Partition::parse("{1|2,3,4,5}");
  CHECK_THROWS_AS(crosspart::min_shared_over_choices(base, std::vector<Family>{empty}),
                  std::invalid_argument);
  Family other_ground(6, 2, oracles::all_partitions(6, 2));
  CHECK_THROWS_AS(crosspart::min_shared_over_choices(base, std::vector<Family>{other_ground}),
                  std::invalid_argument);
  CHECK(crosspart::min_shared_over_choices(base, std::vector<Family>{good}) == 0);
}

TEST_CASE("cross-intersection test matches the oracle") {
  oracles::Rng rng(31002);
  for (int trial = 0; trial < 25; trial++) {
    int n = 4 + static_cast<int>(rng.below(2));  // 4..5
    std::vector<Family> fams = random_tuple(rng, n, 3, 4);
    std::vector<const Family*> ptrs;
    for (const Family& f : fams) ptrs.push_back(&f);
    for (int t = 1; t <= 2; t++)
      CHECK(crosspart::is_r_cross_intersecting(fams, t) == oracles::cross_intersecting(ptrs, t));
  }
}

TEST_CASE("per-position minimum choice-intersection sizes") {
  // Families anchored at nested singleton prefixes make s computable by hand.
  Family f1(6, 3);
  for (const Partition& p : oracles::all_partitions(6, 3))
    if (p.contains_block(crosspart::element_mask(1)) &&
        p.contains_block(crosspart::element_mask(2)))
      f1.add(p);
  Family f2(6, 4);
  for (const Partition& p : oracles::all_partitions(6, 4))
    if (p.contains_block(crosspart::element_mask(1)) &&
        p.contains_block(crosspart::element_mask(2)))
      f2.add(p);
  Family f3(6, 2);
  for (const Partition& p : oracles::all_partitions(6, 2))
    if (p.contains_block(crosspart::element_mask(1)))
      f3.add(p);
  std::vector<int> s = crosspart::s_values({f1, f2, f3});
  REQUIRE(s.size() == 3);
  // choices from the other two families always share the singleton {1}; the
  // pair (f1,f2) additionally always shares {2}
  CHECK(s[0] == 1);
  CHECK(s[1] == 1);
  CHECK(s[2] == 2);
}

TEST_CASE("maximal completion of one position") {
  Family c4 = crosspart::build_family(
      crosspart::ConstructionSpec::make(crosspart::ConstructionKind::C, 6, 4, 0, 1));
  Family c3 = crosspart::build_family(
      crosspart::ConstructionSpec::make(crosspart::ConstructionKind::C, 6, 3, 0, 1));
  Family d3 = crosspart::build_family(
      crosspart::ConstructionSpec::make(crosspart::ConstructionKind::D, 6, 3, 0, 1));
  std::vector<Family> tup = {c4, c3, d3};
  // completing the last position against the two anchored families recovers it
  Family completed = crosspart::tuple_dual(2, tup, 1);
  CHECK(completed == d3);
}

TEST_CASE("tuple maximality detects slack") {
  Family c4 = crosspart::build_family(
      crosspart::ConstructionSpec::make(crosspart::ConstructionKind::C, 7, 4, 0, 1));
  Family c3 = crosspart::build_family(
      crosspart::ConstructionSpec::make(crosspart::ConstructionKind::C, 7, 3, 0, 1));
  Family d3 = crosspart::build_family(
      crosspart::ConstructionSpec::make(crosspart::ConstructionKind::D, 7, 3, 0, 1));
  std::vector<Family> tup = {c4, c3, d3};
  CHECK(crosspart::is_r_cross_intersecting(tup, 1));
  CHECK(crosspart::is_tuple_maximal(tup, 1));
  // removing a member breaks maximality but not the intersection property
  Family smaller(7, 4);
  for (std::size_t i = 0; i + 1 < c4.size(); i++) smaller.add(c4.members()[i]);
  std::vector<Family> slack = {smaller, c3, d3};
  CHECK(crosspart::is_r_cross_intersecting(slack, 1));
  CHECK_FALSE(crosspart::is_tuple_maximal(slack, 1));
}

TEST_CASE("three-family anchored structure at the frozen product") {
  Family c4 = crosspart::build_family(
      crosspart::ConstructionSpec::make(crosspart::ConstructionKind::C, 7, 4, 0, 1));
  Family c3 = crosspart::build_family(
      crosspart::ConstructionSpec::make(crosspart::ConstructionKind::C, 7, 3, 0, 1));
  Family d3 = crosspart::build_family(
      crosspart::ConstructionSpec::make(crosspart::ConstructionKind::D, 7, 3, 0, 1));
  CHECK(c4.size() == 15);
  CHECK(c3.size() == 1);
  CHECK(d3.size() == 61);
  BigCount prod = BigCount(static_cast<unsigned long>(c4.size())) *
                  BigCount(static_cast<unsigned long>(c3.size())) *
                  BigCount(static_cast<unsigned long>(d3.size()));
  CHECK(prod == BigCount(915ul));
  CHECK(prod == crosspart::size_phi(2, 3, {4, 3, 3}, 1, 7));
  std::vector<const Family*> ptrs = {&c4, &c3, &d3};
  CHECK_FALSE(crosspart::is_trivial_tuple(ptrs, 1));
}

TEST_CASE("completion sweeps reach a fixed point") {
  // Start from single anchored members and sweep to stability.
  Family s1(6, 3, {Partition::parse("{1|2|3,4,5,6}")});
  Family s2(6, 3, {Partition::parse("{1|2,3|4,5,6}")});
  Family s3(6, 2, {Partition::parse("{1|2,3,4,5,6}")});
  crosspart::TupleSweepResult r = crosspart::tuple_fixed_point({s1, s2, s3}, 1);
  CHECK(r.fixed_point_reached);
  CHECK(r.sweeps >= 1);
  REQUIRE(r.families.size() == 3);
  CHECK(crosspart::is_r_cross_intersecting(r.families, 1));
  CHECK(crosspart::is_tuple_maximal(r.families, 1));
  // the starting members survive the completion
  CHECK(r.families[0].contains(Partition::parse("{1|2|3,4,5,6}")));
  CHECK(r.families[2].contains(Partition::parse("{1|2,3,4,5,6}")));
}

TEST_CASE("choice intersections materialize as partial partitions") {
  Family f1(5, 2);
  f1.add(Partition::parse("{1|2,3,4,5}"));
  f1.add(Partition::parse("{1,2|3,4,5}"));
  Family f2(5, 3);
  f2.add(Partition::parse("{1|2,3|4,5}"));
  std::vector<Family> fams = {f1, f2};
  std::vector<Partition> inter = crosspart::materialize_choice_intersections(1, fams, 1000);
  // choices from f1 alone: each member's own blocks
  REQUIRE(inter.size() == 2);
  CHECK_THROWS_AS(crosspart::materialize_choice_intersections(0, fams, 0),
                  crosspart::BudgetError);
}

}  // TEST_SUITE
