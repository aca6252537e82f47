#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "partition.hpp"
#include "theory.hpp"

using namespace symfin;

TEST_CASE("construction validates and normalizes") {
  Partition p({3, 3, 2});
  CHECK(p.parts() == std::vector<int>{3, 3, 2});
  CHECK(p.total() == 8);

  Partition q({3, 2, 0, 0});
  CHECK(q.parts() == std::vector<int>{3, 2});
  CHECK(q.total() == 5);

  CHECK_THROWS_AS(Partition({2, 3}), invalid_input);
  CHECK_THROWS_AS(Partition({3, -1}), invalid_input);
  CHECK(Partition().empty());
  CHECK(Partition().total() == 0);
}

TEST_CASE("part_at pads with zeros") {
  Partition p({3, 2});
  CHECK(p.part_at(1) == 3);
  CHECK(p.part_at(2) == 2);
  CHECK(p.part_at(5) == 0);
  CHECK(Partition().part_at(1) == 0);
}

TEST_CASE("addition is part-wise") {
  CHECK(add(Partition({2, 2, 1}), Partition({1, 1})) == Partition({3, 3, 1}));
  Partition lambda({4, 2, 1});
  CHECK(add(lambda, Partition()) == lambda);

  // A decomposition must re-add to its sum, index by index.
  Partition a({1, 1, 1, 1}), b({4, 3, 3, 2});
  Partition sum = add(a, b);
  CHECK(sum == Partition({5, 4, 4, 3}));
  for (int i = 1; i <= sum.length(); ++i)
    CHECK(sum.part_at(i) == a.part_at(i) + b.part_at(i));
}

TEST_CASE("addition is commutative and associative on enumerated partitions") {
  const auto sets = enumerate_partitions(5);
  for (const auto& a : sets)
    for (const auto& b : sets) {
      CHECK(add(a, b) == add(b, a));
      for (const auto& c : enumerate_partitions(3))
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
    }
}

TEST_CASE("transpose") {
  CHECK(transpose(Partition({2, 2, 1})) == Partition({3, 2}));
  CHECK(transpose(Partition({1, 1, 1})) == Partition({3}));
  CHECK(transpose(Partition()) == Partition());
  for (const auto& p : enumerate_partitions(9)) {
    CHECK(transpose(transpose(p)) == p);
    CHECK(transpose(p).total() == p.total());
  }
}

TEST_CASE("multiplicity") {
  Partition p({3, 2, 2, 1, 1, 1, 1});
  CHECK(p.multiplicity(1) == 4);
  CHECK(p.multiplicity(2) == 2);
  CHECK(p.multiplicity(5) == 0);
}

TEST_CASE("gap check conventions") {
  CHECK(has_no_gaps(Partition({2, 2, 1})));
  CHECK_FALSE(has_no_gaps(Partition({3, 1, 1})));
  CHECK_FALSE(has_no_gaps(Partition({2, 2})));
  CHECK(has_no_gaps(Partition({2, 2}), GapRule::InteriorOnly));
  CHECK(has_no_gaps(Partition()));
}

TEST_CASE("sums of gap-free partitions have steps at most two") {
  std::vector<Partition> gapfree;
  for (int t = 0; t <= 9; ++t)
    for (const auto& p : enumerate_partitions(t))
      if (has_no_gaps(p)) gapfree.push_back(p);
  for (const auto& a : gapfree)
    for (const auto& b : gapfree) {
      const Partition s = add(a, b);
      for (int i = 1; i <= s.length(); ++i)
        CHECK(s.part_at(i) - s.part_at(i + 1) <= 2);
    }
}

TEST_CASE("lexicographic order") {
  CHECK(lex_greater(Partition({2, 2, 1}), Partition({1, 1, 1, 1, 1})));
  CHECK_FALSE(lex_greater(Partition({1, 1}), Partition({2})));
}
