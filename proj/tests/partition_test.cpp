#include <doctest.h>

#include "cocharlab/partition.hpp"

using namespace cocharlab;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("partitions_of enumerates in reverse-lex order") {
  auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == P({4}));
  CHECK(p4[1] == P({3, 1}));
  CHECK(p4[2] == P({2, 2}));
  CHECK(p4[3] == P({2, 1, 1}));
  CHECK(p4[4] == P({1, 1, 1, 1}));

  auto p52 = partitions_of(5, 2);
  REQUIRE(p52.size() == 3);
  CHECK(p52[0] == P({5}));
  CHECK(p52[1] == P({4, 1}));
  CHECK(p52[2] == P({3, 2}));

  auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0] == Partition());
}

TEST_CASE("partition counts match the partition-number sequence") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n)
    CHECK(partitions_of(n).size() == static_cast<size_t>(expected[n]));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(P({5, 3, 1, 1})) == P({4, 2, 2, 1, 1}));
  CHECK(conjugate(P({3})) == P({1, 1, 1}));
  CHECK(conjugate(Partition()) == Partition());
}

TEST_CASE("conjugate is an involution up to weight 12") {
  for (int n = 0; n <= 12; ++n)
    for (const Partition& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("hook dimensions") {
  CHECK(hook_dimension(P({5})) == 1);
  CHECK(hook_dimension(P({2, 1})) == 2);
  CHECK(hook_dimension(P({2, 2})) == 2);
}

TEST_CASE("sum of squared hook dimensions is n!") {
  for (int n = 0; n <= 8; ++n) {
    Int total = 0;
    for (const Partition& p : partitions_of(n)) {
      Int d = hook_dimension(p);
      total += d * d;
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("s_compositions excludes first part 1") {
  auto c22 = s_compositions(2, 2);
  REQUIRE(c22.size() == 2);
  CHECK(c22[0].parts == std::vector<int>{0, 2});
  CHECK(c22[1].parts == std::vector<int>{2, 0});

  auto c32 = s_compositions(3, 2);
  REQUIRE(c32.size() == 3);
  CHECK(c32[0].parts == std::vector<int>{0, 3});
  CHECK(c32[1].parts == std::vector<int>{2, 1});
  CHECK(c32[2].parts == std::vector<int>{3, 0});

  CHECK(s_compositions(1, 1).empty());
}

TEST_CASE("s_compositions count matches inclusion-exclusion") {
  // all compositions minus those with first part 1; the subtracted count is
  // C(t+k-3, k-2), which degenerates to [t == 1] when k = 1
  for (int t = 1; t <= 10; ++t)
    for (int k = 1; k <= 5; ++k) {
      Int first_part_one =
          k >= 2 ? binomial(t + k - 3, k - 2) : Int(t == 1 ? 1 : 0);
      Int expect = binomial(t + k - 1, k - 1) - first_part_one;
      CHECK(Int(s_compositions(t, k).size()) == expect);
    }
}

TEST_CASE("normalized drops degenerate printed shapes") {
  CHECK(Partition::normalized({4, 0, 0}) == P({4}));
  CHECK(Partition::normalized({0, 1, 1}) == std::nullopt);  // (n-2,1^2) at n=2
  CHECK(Partition::normalized({1, 2}) == std::nullopt);     // (n-2,2) at n=3
  CHECK(Partition::normalized({0, 0}) == Partition());
  CHECK(Partition::normalized({-1, 1}) == std::nullopt);
}

TEST_CASE("partition contract violations throw") {
  CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({0}), std::invalid_argument);
}
