#include <doctest.h>

#include "oracles.hpp"
#include "skewsym/errors.hpp"
#include "skewsym/shapes.hpp"

using namespace skewsym;

namespace {

SkewShape S(const char* text) { return parse_shape(text); }

// Every raw pair inner <= outer inside a 4 x 4 box, including empty rows
// and columns that normalization has to remove.
template <class F>
void for_each_raw_shape(F&& f) {
  const auto parts = oracle::partitions_in_box(4, 4);
  for (const auto& outer : parts)
    for (const auto& inner : parts)
      if (oracle::inside(inner, outer)) f(outer, inner);
}

}  // namespace

TEST_CASE("normalize examples") {
  CHECK(normalize(Partition({4}), Partition({2})) == S("2"));
  CHECK(normalize(Partition({3, 2})) == S("3,2"));
  CHECK(normalize(Partition({3, 3, 1}), Partition({3, 1})).to_string() == "3,1/1");
  CHECK(normalize(Partition({2, 2}), Partition({2, 2})).to_string() == "0");
  CHECK_THROWS_AS(normalize(Partition({2}), Partition({3})), InvalidShape);
  CHECK_THROWS_AS(Partition({1, 2}), InvalidShape);
}

TEST_CASE("normalize agrees with cell-set compression") {
  int seen = 0;
  for_each_raw_shape([&](const std::vector<int>& outer, const std::vector<int>& inner) {
    const SkewShape s = normalize(Partition(outer), Partition(inner));
    const auto expected = oracle::compress(oracle::raw_cells(outer, inner));
    CHECK(oracle::cells_of(s) == expected);
    CHECK(s.cells() == static_cast<int>(expected.size()));
    CHECK(s.connected() == oracle::connected(expected));
    CHECK(normalize(s.outer(), s.inner()) == s);
    ++seen;
  });
  CHECK(seen > 1000);
}

TEST_CASE("rotation examples") {
  CHECK(rotate180(S("6,3,1/3,1")) == S("6,5,3/5,3"));
  CHECK(rotate180(S("2")) == S("2"));
  CHECK(rotate180(S("1")) == S("1"));
}

TEST_CASE("transpose examples") {
  CHECK(transpose(S("5,5,2")) == S("3,3,2,2,2"));
  CHECK(transpose(S("4,3,1/2")) == S("3,2,2,1/1,1"));
  CHECK(transpose(S("1")) == S("1"));
}

TEST_CASE("rotation and transpose agree with the cell-set oracle") {
  for_each_raw_shape([&](const std::vector<int>& outer, const std::vector<int>& inner) {
    const SkewShape s = normalize(Partition(outer), Partition(inner));
    const auto cells = oracle::cells_of(s);
    CHECK(oracle::cells_of(rotate180(s)) == oracle::rotate(cells));
    CHECK(oracle::cells_of(transpose(s)) == oracle::transpose(cells));
    CHECK(rotate180(rotate180(s)) == s);
    CHECK(transpose(transpose(s)) == s);
    CHECK(rotate180(transpose(s)) == transpose(rotate180(s)));
  });
}

TEST_CASE("bottleneck example") {
  const SkewShape s = S("5,5,4,2,2,2/4,2,1,1,1");
  CHECK(bottlenecks(s) == std::vector<int>{0, 3, 0, 0, 1});
  CHECK(bottlenecks(s, 2) == std::vector<int>{0, 0, 1, 0});
  CHECK(row_overlap(s, 2) == std::vector<int>{1, 2, 1, 1, 1});
  const auto prof = bottleneck_profile(s, 5);
  CHECK(prof.b == std::vector<int>{0, 3, 0, 0, 1});
  CHECK(prof.wide.at(5) == std::vector<int>{0});
  CHECK(prof.wide.at(3) == std::vector<int>{0, 0, 0});
  CHECK(prof.pair_sums == std::vector<int>{1, 3, 0});
  CHECK(prof.total() == 4);
  CHECK(prof.sum_of_squares() == 10);
  CHECK_THROWS_AS(bottleneck_profile(s, 6), InvalidArg);
  CHECK_THROWS_AS(bottleneck_profile(s, 0), InvalidArg);
}

TEST_CASE("bottlenecks and overlaps agree with the cell-set oracle") {
  for_each_raw_shape([&](const std::vector<int>& outer, const std::vector<int>& inner) {
    const SkewShape s = normalize(Partition(outer), Partition(inner));
    if (s.empty()) return;
    const auto cells = oracle::cells_of(s);
    for (int w = 1; w <= s.cols(); ++w) CHECK(bottlenecks(s, w) == oracle::bottlenecks(cells, w));
    for (int k = 2; k <= s.rows(); ++k) {
      const auto r = row_overlap(s, k);
      REQUIRE(static_cast<int>(r.size()) == s.rows() - k + 1);
      for (int i = 1; i + k - 1 <= s.rows(); ++i) {
        int common = 0;
        for (int c = 1; c <= s.cols(); ++c) {
          bool all = true;
          for (int j = i; j < i + k; ++j) all = all && cells.count({j, c});
          common += all;
        }
        CHECK(r[static_cast<std::size_t>(i - 1)] == common);
      }
    }
  });
}

TEST_CASE("rotation reverses bottlenecks and preserves pair sums") {
  for_each_raw_shape([&](const std::vector<int>& outer, const std::vector<int>& inner) {
    const SkewShape s = normalize(Partition(outer), Partition(inner));
    if (s.empty()) return;
    auto b = bottlenecks(s);
    const auto rb = bottlenecks(rotate180(s));
    std::reverse(b.begin(), b.end());
    CHECK(rb == b);
    CHECK(pair_sums(rb) == pair_sums(bottlenecks(s)));
  });
}

TEST_CASE("pair sums") {
  CHECK(pair_sums(std::vector<int>{1, 2, 3, 4}) == std::vector<int>{5, 5});
  CHECK(pair_sums(std::vector<int>{1, 2, 3}) == std::vector<int>{4, 2});
  CHECK(pair_sums(std::vector<int>{7}) == std::vector<int>{7});
  CHECK(pair_sums(std::vector<int>{}).empty());
}

TEST_CASE("shape text syntax") {
  CHECK(S("6,3,1/3,1").to_string() == "6,3,1/3,1");
  CHECK(S(" 6, 3 ,1 / 3,1 ").to_string() == "6,3,1/3,1");
  CHECK(S("4/2") == S("2"));
  CHECK(parse_partition("3,2,2") == Partition({3, 2, 2}));
  try {
    parse_shape("3,x/1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.token() == "x");
  }
  CHECK_THROWS_AS(parse_shape("2,3"), ParseError);
  CHECK_THROWS_AS(parse_shape("3/4"), Error);
  CHECK_THROWS_AS(parse_shape("3/1/1"), ParseError);
}

TEST_CASE("partition conjugate and containment") {
  CHECK(Partition({5, 2, 1, 1}).conjugate() == Partition({4, 2, 1, 1, 1}));
  CHECK(Partition({3, 2}).contains(Partition({2, 2})));
  CHECK_FALSE(Partition({3, 1}).contains(Partition({2, 2})));
  CHECK(Partition({3, 0, 0}).length() == 1);
}
