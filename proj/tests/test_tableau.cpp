#include "sphgon/tableau.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace sphgon;

TEST_CASE("single column tableau") {
  auto list = enumerate_ssyt({1, 1});
  REQUIRE(list.size() == 1);
  CHECK(list[0].top == std::vector<int>{1});
  CHECK(list[0].bottom == std::vector<int>{2});
}

TEST_CASE("a value may appear at most once per column") {
  CHECK(enumerate_ssyt({2}).empty());
  CHECK(kostka({2}) == 0);
}

TEST_CASE("content (2,1,1,2) has exactly the two known fillings") {
  auto list = enumerate_ssyt({2, 1, 1, 2});
  REQUIRE(list.size() == 2);
  CHECK(list[0].top == std::vector<int>{1, 1, 2});
  CHECK(list[0].bottom == std::vector<int>{3, 4, 4});
  CHECK(list[1].top == std::vector<int>{1, 1, 3});
  CHECK(list[1].bottom == std::vector<int>{2, 4, 4});
  for (const Tableau& t : list) CHECK(t.valid());
}

TEST_CASE("row-major lexicographic output order") {
  auto list = enumerate_ssyt({1, 1, 1, 1, 1, 1});
  REQUIRE(list.size() == 5);
  auto key = [](const Tableau& t) {
    std::vector<int> word = t.top;
    word.insert(word.end(), t.bottom.begin(), t.bottom.end());
    return word;
  };
  for (size_t i = 1; i < list.size(); ++i) CHECK(key(list[i - 1]) < key(list[i]));
}

TEST_CASE("kostka equals tableau enumeration length") {
  CHECK(kostka({1, 1, 1, 1}) == 2);
  CHECK(kostka({2, 1, 1, 2}) == 2);
  CHECK(kostka({2, 2}) == 1);

  // Every composition with positive parts and entry sum <= 8.
  for (int sum = 1; sum <= 8; ++sum) {
    std::vector<MultiplicityVector> stack{{}};
    while (!stack.empty()) {
      MultiplicityVector part = std::move(stack.back());
      stack.pop_back();
      const long have = multiplicity_sum(part);
      if (have == sum) {
        CAPTURE(part);
        CHECK(kostka(part) == BigInt(enumerate_ssyt(part).size()));
        continue;
      }
      for (int next = 1; next + have <= sum; ++next) {
        MultiplicityVector longer = part;
        longer.push_back(next);
        stack.push_back(std::move(longer));
      }
    }
  }
}

TEST_CASE("kostka is invariant under content permutation") {
  std::mt19937 rng(2026);
  std::vector<MultiplicityVector> bases = {{2, 1, 1, 2}, {1, 2, 2, 1}, {3, 1, 2}, {1, 1, 2, 1, 1}};
  for (const auto& base : bases) {
    const BigInt reference = kostka(base);
    MultiplicityVector shuffled = base;
    for (int trial = 0; trial < 6; ++trial) {
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CAPTURE(shuffled);
      CHECK(kostka(shuffled) == reference);
    }
  }
}

TEST_CASE("zero multiplicities do not affect the count") {
  CHECK(kostka({1, 0, 1}) == kostka({1, 1}));
  CHECK(kostka({0, 2, 2, 0}) == kostka({2, 2}));
  CHECK(enumerate_ssyt({1, 0, 1}).size() == 1);
}

TEST_CASE("empty content has the single empty tableau") {
  auto list = enumerate_ssyt({});
  REQUIRE(list.size() == 1);
  CHECK(list[0].columns() == 0);
  CHECK(kostka({}) == 1);
}

TEST_CASE("all-ones content counts standard tableaux") {
  const BigInt expected[] = {1, 2, 5, 14, 42, 132};
  for (long d = 1; d <= 6; ++d) {
    MultiplicityVector ones(2 * d, 1);
    CHECK(kostka(ones) == expected[d - 1]);
    CHECK(catalan(d) == expected[d - 1]);
  }
}

TEST_CASE("catalan closed form") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(10) == 16796);
  CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("negative multiplicities are rejected") {
  CHECK_THROWS_AS(kostka({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_ssyt({-2}), std::invalid_argument);
}
