#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "crosspart/enumerate.hpp"
#include "crosspart/family.hpp"
#include "crosspart/partition.hpp"

using crosspart::Family;
using crosspart::Mask;
using crosspart::Partition;

TEST_SUITE("partitions") {

TEST_CASE("parse and print round trip") {
  const char* texts[] = {"{1,4|2|3,5}", "{1}", "{1,2,3}", "{1|2|3|4}", "{1,3|2,4}"};
  for (const char* s : texts) {
    Partition p = Partition::parse(s);
    CHECK(p.str() == s);
    CHECK(Partition::parse(p.str()) == p);
  }
}

TEST_CASE("blocks are normalized by minimum element") {
  Partition p = Partition::from_blocks({crosspart::element_mask(3) | crosspart::element_mask(5),
                                        crosspart::element_mask(1),
                                        crosspart::element_mask(2) | crosspart::element_mask(4)});
  CHECK(p.str() == "{1|2,4|3,5}");
  Partition q = Partition::from_elements({{3, 5}, {1}, {4, 2}});
  CHECK(p == q);
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(Partition::from_elements({{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_elements({{}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("1,2|3"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("{1,|2}"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("{1,x}"), std::invalid_argument);
}

TEST_CASE("partial partition queries") {
  Partition p = Partition::parse("{1,4|2|3,5}");
  CHECK(p.size() == 3);
  CHECK(p.max_element() == 5);
  CHECK(p.is_full_partition_of(5));
  CHECK_FALSE(p.is_full_partition_of(6));
  CHECK(p.contains_block(crosspart::element_mask(2)));
  CHECK_FALSE(p.contains_block(crosspart::element_mask(1)));
  CHECK(p.singletons() == Partition::parse("{2}"));
  CHECK(Partition::parse("{2|3,5}").subset_of(p));
  CHECK_FALSE(Partition::parse("{2,3}").subset_of(p));
  CHECK(crosspart::all_singletons(3) == Partition::parse("{1|2|3}"));
  CHECK(crosspart::singleton_range(2, 4) == Partition::parse("{2|3|4}"));
}

TEST_CASE("shared blocks agree with the double-loop oracle") {
  auto ps = oracles::all_partitions(5, 3);
  for (const Partition& a : ps)
    for (const Partition& b : ps) {
      CHECK(a.shared_count(b) == oracles::shared_count(a, b));
      CHECK(a.shared_blocks(b).size() == oracles::shared_count(a, b));
    }
}

TEST_CASE("enumeration matches direct element placement") {
  for (int n = 1; n <= 8; n++)
    for (int k = 1; k <= n; k++) {
      std::set<std::string> lib;
      crosspart::for_each_partition(n, k, [&](const std::vector<Mask>& blocks) {
        lib.insert(Partition::from_blocks(blocks).str());
        return true;
      });
      std::set<std::string> naive;
      for (const Partition& p : oracles::all_partitions(n, k)) naive.insert(p.str());
      CHECK(lib == naive);
      CHECK(lib.size() == oracles::stirling_table(n, k));
    }
}

TEST_CASE("enumeration order is strictly increasing in restricted-growth order") {
  std::vector<Partition> seq;
  crosspart::for_each_partition(6, 3, [&](const std::vector<Mask>& blocks) {
    seq.push_back(Partition::from_blocks(blocks));
    return true;
  });
  for (std::size_t i = 1; i < seq.size(); i++)
    CHECK(Partition::rgs_less(seq[i - 1], seq[i]));
  std::vector<int> first = crosspart::rgs_of(seq.front(), 6);
  CHECK(first[0] == 0);
}

TEST_CASE("early termination of the enumeration callback") {
  int seen = 0;
  crosspart::for_each_partition(7, 3, [&](const std::vector<Mask>&) {
    seen++;
    return seen < 10;
  });
  CHECK(seen == 10);
}

TEST_CASE("family keeps members sorted and deduplicated") {
  Family f(5, 3);
  Partition a = Partition::parse("{1,4|2|3,5}");
  Partition b = Partition::parse("{1|2,4|3,5}");
  f.add(a);
  f.add(b);
  f.add(a);
  CHECK(f.size() == 2);
  CHECK(Partition::rgs_less(f.members()[0], f.members()[1]));
  CHECK(f.contains(a));
  CHECK_THROWS_AS(f.add(Partition::parse("{1|2,3}")), std::invalid_argument);        // partial
  CHECK_THROWS_AS(f.add(Partition::parse("{1|2|3|4,5}")), std::invalid_argument);    // wrong k
}

TEST_CASE("family file round trip") {
  Family f(5, 2, oracles::all_partitions(5, 2));
  std::string path = "family_roundtrip.tmp";
  f.save_file(path);
  Family g = Family::load_file(path);
  CHECK(f == g);
  std::remove(path.c_str());
  CHECK_THROWS_AS(Family::load_file("does_not_exist.tmp"), std::invalid_argument);
}

TEST_CASE("common blocks and trivial tuples") {
  Family f(6, 3);
  f.add(Partition::parse("{1|2|3,4,5,6}"));
  f.add(Partition::parse("{1|2,3|4,5,6}"));
  Partition c = crosspart::common_blocks(f);
  CHECK(c == Partition::parse("{1}"));
  Family g(6, 2);
  g.add(Partition::parse("{1|2,3,4,5,6}"));
  CHECK(crosspart::common_blocks(f, g) == Partition::parse("{1}"));
  std::vector<const Family*> tup = {&f, &g};
  CHECK(crosspart::is_trivial_tuple(tup, 1));
  CHECK_FALSE(crosspart::is_trivial_tuple(tup, 2));
  Family e(6, 3);
  CHECK_THROWS(crosspart::common_blocks(e));
}

}  // TEST_SUITE
