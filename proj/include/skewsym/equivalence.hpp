#pragma once

// Equivalence of skew shapes under s, g and G: cheap necessary conditions
// from bottleneck data, closed-form coefficients of g checked against
// enumeration, and the exhaustive coincidence / staircase sweeps.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewsym/monomial.hpp"
#include "skewsym/polynomials.hpp"
#include "skewsym/shapes.hpp"

namespace skewsym {

struct FilterMismatch {
  std::string invariant;  // "cells", "rows", "cols", "pair_sum", "sum_of_squares", "overlap"
  int index = 0;          // 1-based position for vector invariants (k for overlaps), else 0
  std::string left;
  std::string right;

  std::string to_string() const;
};

struct FilterReport {
  bool passed = true;
  std::vector<FilterMismatch> mismatches;
};

// Invariants shared by Schur-equivalent shapes: cells, rows, columns and the
// sorted row overlap compositions.
FilterReport schur_filter(const SkewShape& a, const SkewShape& b);
// schur_filter plus, when both shapes are connected, the bottleneck pair
// sums and the sum of squared bottleneck counts. A failed filter certifies
// g(a) != g(b).
FilterReport necessary_filter(const SkewShape& a, const SkewShape& b);

// Closed forms for coefficients of g.
long long coeff_two_var(const SkewShape& s, int r);  // x1^r x2^(n-r+1), 1 <= r <= n
long long coeff_x1sq_x2n(const SkewShape& s);        // x1^2 x2^n
long long coeff_x1cube_x2nm1(const SkewShape& s);    // x1^3 x2^(n-1), n >= 2
long long coeff_x1cube_x2n(const SkewShape& s);      // x1^3 x2^n

enum class CoeffFormula { TwoVar, X1SqX2n, X1CubeX2nm1, X1CubeX2n };
std::string to_string(CoeffFormula f);

struct CoeffFormulaReport {
  SkewShape shape;
  CoeffFormula formula = CoeffFormula::TwoVar;
  ExponentVector monomial;
  long long closed_form = 0;
  long long brute_force = 0;
  bool agrees = false;
};

// Evaluates a closed form and the enumeration oracle on the same monomial
// (r is only used by TwoVar).
CoeffFormulaReport check_formula(CoeffFormula f, const SkewShape& s, int r = 1);
// Recognises the monomial as one of the closed-form families, if any.
std::optional<CoeffFormulaReport> check_monomial(const SkewShape& s, const ExponentVector& monomial);

// Filter first (a failed filter is an exact negative), then compare g at
// min(budget_vars, cells) variables.
EqualityVerdict g_equivalent(const SkewShape& a, const SkewShape& b, int budget_vars);
// Compares G truncated at budget_degree in budget_vars variables.
EqualityVerdict G_equivalent(const SkewShape& a, const SkewShape& b, int budget_vars, int budget_degree);

// Every normalized skew shape with the given number of cells, sorted by
// their text form.
std::vector<SkewShape> shapes_of_size(int cells);

// Invariants shared by g-equivalent shapes. Raw b is left out because
// rotation reverses it. Pair sums and the sum of squares are only kept for
// connected shapes.
struct Fingerprint {
  int cells = 0;
  int rows = 0;
  int cols = 0;
  bool connected = true;
  std::vector<int> pair_sums;
  int sum_of_squares = 0;
  int total = 0;
  std::map<int, std::vector<int>> overlaps;  // sorted r^(k)

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const SkewShape& s);

struct EquivClass {
  SkewShape representative;
  std::vector<SkewShape> members;  // sorted by text, representative first
  Fingerprint fingerprint;
  Evidence evidence;               // how the members were shown g-equal
};

enum class ShapeClass { Skew, Ribbon };

struct SearchBudget {
  int vars = 8;
  double time_limit_seconds = 0;  // 0 = unlimited
  int jobs = 1;
};

struct SearchSummary {
  int shapes = 0;
  int classes = 0;
  int nontrivial = 0;  // classes not explained by rotation alone
  bool timed_out = false;
};

// Shapes are bucketed by fingerprint and each bucket is split by comparing g.
// Classes reach `emit` as soon as their bucket is resolved: buckets in
// fingerprint order, classes inside a bucket by representative text. The
// vector overload sorts all classes by representative text.
SearchSummary search_coincidences(int cells, ShapeClass cls, const SearchBudget& budget,
                                  const std::function<void(const EquivClass&)>& emit);
std::vector<EquivClass> search_coincidences(int cells, ShapeClass cls, const SearchBudget& budget = {});

struct StaircaseBudget {
  int g_vars = 8;        // g uses min(cells, g_vars) variables
  int G_vars = 4;
  int degree_slack = 2;  // G truncated at cells + degree_slack
};

struct StaircaseCase {
  Partition inner;
  SkewShape shape;
  SkewShape transposed;
  EqualityVerdict g;
  EqualityVerdict G;
  bool passed() const noexcept { return g.equal && G.equal; }
};

struct StaircaseReport {
  int n = 0;
  std::vector<StaircaseCase> cases;
  int violations() const noexcept;
};

// Every mu inside the staircase <n-1,...,1>, compared with its transpose.
// Throws InvalidArg for n < 2.
StaircaseReport check_staircase(int n, const StaircaseBudget& budget = {});

std::vector<Partition> partitions_inside(const Partition& outer);

// JSON-lines records. A negative elapsed time is written as null.
std::string to_json(const FilterReport& r);
std::string to_json(const CoeffFormulaReport& r);
std::string to_json(const EquivClass& c, double elapsed_seconds);
std::string to_json(const StaircaseCase& c, double elapsed_seconds);

}  // namespace skewsym
