#include "doctest.h"
#include "forge/rng.hpp"
#include "forge/text_util.hpp"

using namespace forge;

TEST_CASE("word counting and truncation") {
  CHECK(word_count("") == 0);
  CHECK(word_count("  one\ttwo\nthree ") == 3);
  CHECK(truncate_words("a b  c d", 3) == "a b  c");
  CHECK(truncate_words("  a b ", 5) == "a b");
  CHECK(truncate_words("a b", 0).empty());
  CHECK(word_count(truncate_words("x y z w v", 2)) == 2);
}

TEST_CASE("case-insensitive helpers") {
  CHECK(iequals("See Also", "see also"));
  CHECK_FALSE(iequals("See", "see also"));
  CHECK(istarts_with("#redirect [[X]]", "#REDIRECT"));
}

TEST_CASE("rng draws are reproducible and in range") {
  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) {
    auto x = a.below(13);
    CHECK(x == b.below(13));
    CHECK(x < 13);
  }
  auto pick = Rng(3).choose(10, 4);
  CHECK(pick.size() == 4);
  std::sort(pick.begin(), pick.end());
  CHECK(std::adjacent_find(pick.begin(), pick.end()) == pick.end());
  CHECK(Rng(3).choose(3, 10).size() == 3);
}

TEST_CASE("rng below is close to uniform") {
  Rng r(11);
  int counts[5] = {};
  for (int i = 0; i < 50000; ++i) ++counts[r.below(5)];
  for (int c : counts) CHECK(std::abs(c - 10000) < 500);
}
