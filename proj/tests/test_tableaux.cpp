#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "skewsym/equivalence.hpp"
#include "skewsym/errors.hpp"
#include "skewsym/tableaux.hpp"

using namespace skewsym;

namespace {

SkewShape S(const char* text) { return parse_shape(text); }

template <class Enum>
int count(Enum&& e) {
  int n = 0;
  e([&](const Filling& f) {
    CHECK(f.valid());
    ++n;
  });
  return n;
}

oracle::Monomials library_table(const SkewShape& s, FillingKind kind, int k, int max_degree) {
  oracle::Monomials out;
  enumerate_weighted(s, kind, {.max_entry = k, .max_degree = max_degree, .content_cap = {}},
                     [&](const Filling& f, std::span<const int> counts) {
                       std::vector<int> e(counts.begin(), counts.end());
                       e.resize(static_cast<std::size_t>(k), 0);
                       const int sign = kind == FillingKind::SetValued && (f.size() - s.cells()) % 2 ? -1 : 1;
                       out[e] += sign;
                       const ExponentVector w = weight(f);
                       CHECK(oracle::trimmed(e) == std::vector<int>(w.exponents().begin(), w.exponents().end()));
                     });
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST_CASE("filling counts") {
  CHECK(count([](auto v) { enumerate_rpp(S("1"), 3, v); }) == 3);
  CHECK(count([](auto v) { enumerate_rpp(S("2,2/1"), 1, v); }) == 1);
  CHECK(count([](auto v) { enumerate_ssyt(S("1,1"), 2, v); }) == 1);
  CHECK(count([](auto v) { enumerate_ssyt(S("2"), 2, v); }) == 3);
  CHECK(count([](auto v) { enumerate_ssyt(S("2,1"), 3, v); }) == 8);
  CHECK(count([](auto v) { enumerate_svt(S("1"), 2, 2, v); }) == 3);
  CHECK(count([](auto v) { enumerate_svt(S("1,1"), 2, 2, v); }) == 1);
  CHECK_THROWS_AS(enumerate_svt(S("2,1"), 3, 2, [](const Filling&) {}), InvalidBound);
  CHECK_THROWS_AS(enumerate_rpp(S("2,1"), 64, [](const Filling&) {}), InvalidBound);
}

TEST_CASE("rpps of <2,1> with weight x1^2") {
  int n = 0;
  enumerate_rpp(S("2,1"), 2, [&](const Filling& f) {
    if (weight(f) == ExponentVector({2})) {
      CHECK(f.to_string() == "1 1 / 1");
      ++n;
    }
  });
  CHECK(n == 1);
}

TEST_CASE("weights of displayed fillings") {
  const auto t1 = Filling::from_rows(S("4,2,1"), FillingKind::SSYT, {{{1}, {1}, {4}, {7}}, {{2}, {6}}, {{9}}});
  CHECK(weight(t1) == parse_monomial("x1^2 x2 x4 x6 x7 x9"));
  const auto t2 =
      Filling::from_rows(S("5,4,2/2,1"), FillingKind::SSYT, {{{1}, {3}, {3}}, {{1}, {4}, {6}}, {{1}, {4}}});
  CHECK(weight(t2) == parse_monomial("x1^3 x3^2 x4^2 x6"));
  const auto svt = Filling::from_rows(S("4,2,2"), FillingKind::SetValued,
                                      {{{1, 2}, {2, 3}, {6}, {9}}, {{3}, {5}}, {{6}, {6, 7}}});
  CHECK(svt.size() == 11);
  CHECK(weight(svt) == parse_monomial("x1 x2^2 x3^2 x5 x6^3 x7 x9"));
  const auto rpp = Filling::from_rows(S("5,5,4/1,1"), FillingKind::RPP,
                                      {{{1}, {1}, {2}, {7}}, {{1}, {2}, {2}, {8}}, {{1}, {2}, {2}, {2}}});
  CHECK(weight(rpp) == parse_monomial("x1^3 x2^3 x7 x8"));
  CHECK(rpp.to_string() == "1 1 2 7 / 1 2 2 8 / 1 2 2 2");
  CHECK(svt.to_string() == "1,2 2,3 6 9 / 3 5 / 6 6,7");
}

TEST_CASE("from_rows rejects illegal fillings") {
  CHECK_THROWS_AS(Filling::from_rows(S("1,1"), FillingKind::SSYT, {{{1}}, {{1}}}), InvalidArg);
  CHECK_NOTHROW(Filling::from_rows(S("1,1"), FillingKind::RPP, {{{1}}, {{1}}}));
  CHECK_THROWS_AS(Filling::from_rows(S("2"), FillingKind::RPP, {{{2}, {1}}}), InvalidArg);
  CHECK_THROWS_AS(Filling::from_rows(S("2"), FillingKind::SSYT, {{{1}}}), InvalidArg);
  CHECK_THROWS_AS(Filling::from_rows(S("1"), FillingKind::SSYT, {{{1, 2}}}), InvalidArg);
  CHECK_THROWS_AS(Filling::from_rows(S("2"), FillingKind::SetValued, {{{1, 3}, {2}}}), InvalidArg);
}

TEST_CASE("enumerators agree with exhaustive assignment") {
  for (int cells = 1; cells <= 4; ++cells) {
    for (const SkewShape& s : shapes_of_size(cells)) {
      const auto cs = oracle::cells_of(s);
      for (int k = 1; k <= 3; ++k) {
        CHECK(library_table(s, FillingKind::SSYT, k, 1 << 20) == oracle::generating_function(cs, oracle::Kind::SSYT, k));
        CHECK(library_table(s, FillingKind::RPP, k, 1 << 20) == oracle::generating_function(cs, oracle::Kind::RPP, k));
        CHECK(library_table(s, FillingKind::SetValued, k, cells + 2) ==
              oracle::generating_function(cs, oracle::Kind::SVT, k, cells + 2));
      }
    }
  }
}

TEST_CASE("fillings are emitted once each in lexicographic order") {
  for (const SkewShape& s : shapes_of_size(4)) {
    for (FillingKind kind : {FillingKind::SSYT, FillingKind::SetValued, FillingKind::RPP}) {
      std::vector<std::vector<std::uint64_t>> seen;
      enumerate_weighted(s, kind, {.max_entry = 3, .max_degree = 6, .content_cap = {}},
                         [&](const Filling& f, std::span<const int>) {
                           std::vector<std::uint64_t> flat;
                           for (EntrySet e : f.entries()) {
                             auto v = e.values();
                             flat.push_back(static_cast<std::uint64_t>(v.size()));
                             for (int x : v) flat.push_back(static_cast<std::uint64_t>(x));
                           }
                           seen.push_back(flat);
                         });
      CHECK(std::set(seen.begin(), seen.end()).size() == seen.size());
      if (kind != FillingKind::SetValued) CHECK(std::is_sorted(seen.begin(), seen.end()));
    }
  }
}

TEST_CASE("count_by_content agrees with exhaustive assignment") {
  for (int cells = 1; cells <= 4; ++cells) {
    for (const SkewShape& s : shapes_of_size(cells)) {
      const auto cs = oracle::cells_of(s);
      const auto rpp = oracle::generating_function(cs, oracle::Kind::RPP, 3);
      for (const auto& [e, c] : rpp) CHECK(count_by_content(s, FillingKind::RPP, ExponentVector(e)) == c);
      const auto svt = oracle::generating_function(cs, oracle::Kind::SVT, 3, cells + 2);
      for (const auto& [e, c] : svt) CHECK(count_by_content(s, FillingKind::SetValued, ExponentVector(e)) == c);
    }
  }
  CHECK(count_by_content(S("2,1"), FillingKind::RPP, parse_monomial("x1^5")) == 0);
  CHECK(count_by_content(S("1"), FillingKind::SetValued, parse_monomial("x1 x2")) == -1);
}

TEST_CASE("lattice path of the displayed 1,2-RPP") {
  const SkewShape s = S("4,3,3,2/2");
  const auto f = Filling::from_rows(s, FillingKind::RPP, {{{2}, {2}}, {{1}, {1}, {2}}, {{1}, {1}, {2}}, {{1}, {2}}});
  const LatticePath p = rpp12_to_path(f);
  CHECK(p.interior_edges() == std::vector<std::pair<int, int>>{{3, 2}});
  CHECK(path_to_rpp12(p) == f);
}

TEST_CASE("boundary paths") {
  for (const SkewShape& s : shapes_of_size(5)) {
    std::vector<int> bottom, top;
    for (int c = 1; c <= s.cols(); ++c) {
      bottom.push_back(s.col_bottom(c));
      top.push_back(s.col_top(c) - 1);
    }
    const Filling ones = path_to_rpp12(LatticePath(s, bottom));
    const Filling twos = path_to_rpp12(LatticePath(s, top));
    for (EntrySet e : ones.entries()) CHECK(e == EntrySet::single(1));
    for (EntrySet e : twos.entries()) CHECK(e == EntrySet::single(2));
    CHECK(LatticePath(s, bottom).interior_edges().empty());
    CHECK(LatticePath(s, top).interior_edges().empty());
  }
}

TEST_CASE("1,2-RPPs and lattice paths are in bijection") {
  for (int cells = 1; cells <= 6; ++cells) {
    for (const SkewShape& s : shapes_of_size(cells)) {
      std::vector<Filling> rpps;
      enumerate_rpp(s, 2, [&](const Filling& f) { rpps.push_back(f); });
      const auto paths = all_lattice_paths(s);
      REQUIRE(paths.size() == rpps.size());
      for (const Filling& f : rpps) {
        const LatticePath p = rpp12_to_path(f);
        CHECK(path_to_rpp12(p) == f);
        int mixed = 0;
        for (int c = 1; c <= s.cols(); ++c) mixed += f.at(s.col_top(c), c) != f.at(s.col_bottom(c), c);
        CHECK(static_cast<int>(p.interior_edges().size()) == mixed);
      }
      for (const LatticePath& p : paths) CHECK(rpp12_to_path(path_to_rpp12(p)) == p);
    }
  }
}

TEST_CASE("lattice path validation") {
  const SkewShape s = S("2,2");
  CHECK_NOTHROW(LatticePath(s, {1, 1}));
  CHECK_THROWS_AS(LatticePath(s, {1, 2}), InvalidArg);
  CHECK_THROWS_AS(LatticePath(s, {3, 0}), InvalidArg);
  CHECK_THROWS_AS(LatticePath(s, {1}), InvalidArg);
  const auto f = Filling::from_rows(s, FillingKind::RPP, {{{1}, {3}}, {{2}, {3}}});
  CHECK_THROWS_AS(rpp12_to_path(f), InvalidArg);
}
