#include <doctest.h>

#include <json.hpp>
#include <map>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "skewsym/equivalence.hpp"
#include "skewsym/errors.hpp"
#include "skewsym/ribbons.hpp"

using namespace skewsym;

namespace {

SkewShape S(const char* text) { return parse_shape(text); }

// Shapes grouped by their exact g, computed from exhaustive RPP tables.
std::vector<std::vector<SkewShape>> exact_g_classes(int cells) {
  std::map<oracle::Monomials, std::vector<SkewShape>> by_poly;
  for (const SkewShape& s : shapes_of_size(cells))
    by_poly[oracle::generating_function(oracle::cells_of(s), oracle::Kind::RPP, cells)].push_back(s);
  std::vector<std::vector<SkewShape>> out;
  for (auto& [p, v] : by_poly) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("shapes_of_size matches a cell-set census") {
  const std::vector<std::size_t> expected{1, 3, 9, 28, 87, 272};
  for (int cells = 1; cells <= 6; ++cells) {
    std::set<oracle::CellSet> census;
    const auto parts = oracle::partitions_in_box(cells, cells);
    for (const auto& outer : parts)
      for (const auto& inner : parts)
        if (oracle::inside(inner, outer)) {
          const auto cs = oracle::raw_cells(outer, inner);
          if (static_cast<int>(cs.size()) == cells) census.insert(oracle::compress(cs));
        }
    const auto shapes = shapes_of_size(cells);
    CHECK(shapes.size() == census.size());
    CHECK(shapes.size() == expected[static_cast<std::size_t>(cells - 1)]);
    std::set<oracle::CellSet> mine;
    for (const SkewShape& s : shapes) mine.insert(oracle::cells_of(s));
    CHECK(mine == census);
  }
}

TEST_CASE("filter examples") {
  const auto rsw = necessary_filter(S("6,5,5,3,2,2/4,2,1,1"), S("6,5,5,4,4,2/4,3,3,1"));
  CHECK_FALSE(rsw.passed);
  REQUIRE(rsw.mismatches.size() >= 1);
  CHECK(rsw.mismatches[0].to_string() == "pair_sum[2]: 2 vs 1");
  CHECK(schur_filter(S("6,5,5,3,2,2/4,2,1,1"), S("6,5,5,4,4,2/4,3,3,1")).passed);

  const auto stair = necessary_filter(S("8,6,4,2/3,3,1"), S("8,6,4,2/5,1,1"));
  CHECK_FALSE(stair.passed);
  bool seen = false;
  for (const auto& m : stair.mismatches) seen = seen || m.to_string() == "pair_sum[4]: 1 vs 0";
  CHECK(seen);

  const auto rows = schur_filter(S("3"), S("3,1/1"));
  CHECK_FALSE(rows.passed);
  CHECK(rows.mismatches[0].invariant == "rows");
  CHECK(to_json(rows).find("\"passed\":false") != std::string::npos);
}

TEST_CASE("filters never separate g-equal shapes") {
  for (int cells = 1; cells <= 6; ++cells) {
    for (const auto& cls : exact_g_classes(cells)) {
      for (std::size_t i = 0; i < cls.size(); ++i) {
        CHECK(fingerprint(cls[i]) == fingerprint(cls[0]));
        const auto f = necessary_filter(cls[i], cls[0]);
        CHECK_MESSAGE(f.passed, cls[i].to_string() << " vs " << cls[0].to_string());
      }
    }
  }
}

TEST_CASE("filters accept every rotation") {
  for (int cells = 1; cells <= 7; ++cells)
    for (const SkewShape& s : shapes_of_size(cells)) {
      CHECK(necessary_filter(s, rotate180(s)).passed);
      CHECK(fingerprint(s) == fingerprint(rotate180(s)));
    }
}

TEST_CASE("g-equivalent shapes share rows, columns and bottleneck totals") {
  for (int cells = 1; cells <= 6; ++cells)
    for (const auto& cls : exact_g_classes(cells))
      for (const SkewShape& s : cls) {
        CHECK(s.rows() == cls[0].rows());
        CHECK(s.cols() == cls[0].cols());
        const auto b = bottlenecks(s);
        const auto b0 = bottlenecks(cls[0]);
        CHECK(std::accumulate(b.begin(), b.end(), 0) == std::accumulate(b0.begin(), b0.end(), 0));
      }
}

TEST_CASE("closed-form coefficients on connected shapes") {
  for (int cells = 1; cells <= 7; ++cells) {
    for (const SkewShape& s : shapes_of_size(cells)) {
      if (!s.connected()) continue;
      for (int r = 1; r <= s.cols(); ++r) CHECK(check_formula(CoeffFormula::TwoVar, s, r).agrees);
      CHECK(check_formula(CoeffFormula::X1SqX2n, s).agrees);
      CHECK(check_formula(CoeffFormula::X1CubeX2n, s).agrees);
    }
  }
}

TEST_CASE("closed-form examples") {
  const SkewShape s = S("5,5,4,2,2,2/4,2,1,1,1");
  CHECK(coeff_x1sq_x2n(s) == 8);
  CHECK(check_formula(CoeffFormula::X1SqX2n, s).brute_force == 8);
  CHECK(coeff_two_var(s, 1) == s.rows() - 1);
  CHECK(check_formula(CoeffFormula::X1CubeX2n, s).agrees);
  const auto x13 = check_formula(CoeffFormula::X1CubeX2nm1, s);
  CHECK(x13.brute_force == 15);
  CHECK(x13.closed_form == 21);
  CHECK(coeff_x1sq_x2n(S("4")) == 0);
  CHECK(coeff_x1cube_x2n(S("4")) == 0);
  for (int r = 1; r <= 4; ++r) CHECK(coeff_two_var(S("4"), r) == 0);
  CHECK(coeff_x1sq_x2n(shape_of(Ribbon::from_columns({2, 2}))) == 1);
  CHECK(check_formula(CoeffFormula::X1SqX2n, shape_of(Ribbon::from_columns({2, 2}))).brute_force == 1);
  CHECK_THROWS_AS(coeff_two_var(s, 0), InvalidArg);
  CHECK_THROWS_AS(coeff_two_var(s, 6), InvalidArg);
  CHECK_THROWS_AS(coeff_x1cube_x2nm1(S("1,1,1")), InvalidArg);
}

TEST_CASE("x1^3 x2^(n-1) counterexamples") {
  const auto small = check_formula(CoeffFormula::X1CubeX2nm1, S("2,2"));
  CHECK(small.closed_form == 1);
  CHECK(small.brute_force == 0);
  const auto wide = check_formula(CoeffFormula::X1CubeX2nm1, S("5,3,3/2,2"));
  CHECK(wide.closed_form == 2);
  CHECK(wide.brute_force == 0);
}

TEST_CASE("closed forms assume a connected shape") {
  const auto r = check_formula(CoeffFormula::TwoVar, S("2,1/1"), 1);
  CHECK(r.closed_form == 1);
  CHECK(r.brute_force == 0);
}

TEST_CASE("check_monomial recognises the families") {
  const SkewShape s = S("5,5,4,2,2,2/4,2,1,1,1");
  const auto a = check_monomial(s, parse_monomial("x1^2 x2^5"));
  REQUIRE(a.has_value());
  CHECK(a->formula == CoeffFormula::X1SqX2n);
  CHECK(a->closed_form == 8);
  const auto b = check_monomial(s, parse_monomial("x1^4 x2^2"));
  REQUIRE(b.has_value());
  CHECK(b->formula == CoeffFormula::TwoVar);
  CHECK(b->agrees);
  CHECK_FALSE(check_monomial(s, parse_monomial("x1 x2 x3")).has_value());
}

TEST_CASE("equivalence deciders") {
  const auto v = g_equivalent(S("6,3,1/3,1"), S("6,5,3/5,3"), 8);
  CHECK(v.equal);
  CHECK(v.evidence.to_string() == "Exact");
  const auto rsw = g_equivalent(S("6,5,5,3,2,2/4,2,1,1"), S("6,5,5,4,4,2/4,3,3,1"), 8);
  CHECK_FALSE(rsw.equal);
  CHECK(rsw.evidence.to_string() == "Exact");
  const auto G = G_equivalent(S("3,1"), S("3,3/2"), 3, 6);
  CHECK(G.equal);
  CHECK(G.evidence.to_string() == "PartialDegree(6)");
  CHECK_FALSE(G_equivalent(S("3"), S("2,1"), 3, 5).equal);
}

TEST_CASE("search finds exactly the g classes") {
  for (int cells = 1; cells <= 5; ++cells) {
    std::set<std::vector<SkewShape>> expected;
    for (auto cls : exact_g_classes(cells)) {
      std::sort(cls.begin(), cls.end(), [](const SkewShape& a, const SkewShape& b) { return a.to_string() < b.to_string(); });
      expected.insert(cls);
    }
    std::set<std::vector<SkewShape>> found;
    const auto classes = search_coincidences(cells, ShapeClass::Skew);
    for (const auto& c : classes) {
      CHECK(c.members.front() == c.representative);
      CHECK(c.evidence.to_string() == "Exact");
      found.insert(c.members);
    }
    CHECK(found == expected);
  }
  CHECK(search_coincidences(1, ShapeClass::Skew).size() == 1);
}

TEST_CASE("ribbon classes are reversal pairs") {
  for (int cells = 1; cells <= 6; ++cells) {
    const auto classes = search_coincidences(cells, ShapeClass::Ribbon);
    std::size_t members = 0;
    for (const auto& c : classes) {
      members += c.members.size();
      const Ribbon a = *ribbon_view(c.representative);
      CHECK(c.members.size() == (a == reverse(a) ? 1U : 2U));
      for (const SkewShape& s : c.members) CHECK((*ribbon_view(s) == a || *ribbon_view(s) == reverse(a)));
    }
    CHECK(members == std::size_t{1} << (cells - 1));
  }
}

TEST_CASE("search streams deterministically and in parallel") {
  std::vector<std::string> serial, parallel;
  SearchBudget one{.vars = 8, .time_limit_seconds = 0, .jobs = 1};
  SearchBudget four{.vars = 8, .time_limit_seconds = 0, .jobs = 4};
  const auto a = search_coincidences(6, ShapeClass::Skew, one, [&](const EquivClass& c) { serial.push_back(to_json(c, -1)); });
  const auto b = search_coincidences(6, ShapeClass::Skew, four, [&](const EquivClass& c) { parallel.push_back(to_json(c, -1)); });
  CHECK(serial == parallel);
  CHECK(a.classes == static_cast<int>(serial.size()));
  CHECK(a.shapes == 272);
  CHECK(a.classes == b.classes);
  CHECK_FALSE(a.timed_out);
  const auto rec = nlohmann::json::parse(serial.front());
  CHECK(rec.contains("shapes"));
  CHECK(rec.contains("verdict"));
  CHECK(rec.contains("evidence"));
  CHECK(rec.contains("invariants"));
  CHECK(rec["elapsed"].is_null());
}

TEST_CASE("staircase") {
  const auto r3 = check_staircase(3);
  CHECK(r3.cases.size() == 5);
  CHECK(r3.violations() == 0);
  const auto r2 = check_staircase(2);
  CHECK(r2.cases.size() == 2);
  CHECK(r2.violations() == 0);
  CHECK_THROWS_AS(check_staircase(1), InvalidArg);
  CHECK(partitions_inside(Partition({2, 1})).size() == 5);
  for (const auto& c : r3.cases) CHECK(c.transposed == transpose(c.shape));
}
