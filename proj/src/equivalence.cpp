#include "skewsym/equivalence.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <json.hpp>

#include "skewsym/errors.hpp"
#include "skewsym/ribbons.hpp"
#include "skewsym/tableaux.hpp"

namespace skewsym {

namespace {

using json = nlohmann::ordered_json;

std::string seq_string(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::vector<int> sorted_overlap(const SkewShape& s, int k) {
  auto r = row_overlap(s, k);
  std::sort(r.begin(), r.end());
  return r;
}

void compare_scalar(FilterReport& rep, const char* name, int a, int b) {
  if (a != b) rep.mismatches.push_back({name, 0, std::to_string(a), std::to_string(b)});
}

long long choose2(long long x) { return x * (x - 1) / 2; }
long long choose3(long long x) { return x * (x - 1) * (x - 2) / 6; }

}  // namespace

std::string FilterMismatch::to_string() const {
  std::string out = invariant;
  if (index > 0) out += "[" + std::to_string(index) + "]";
  return out + ": " + left + " vs " + right;
}

FilterReport schur_filter(const SkewShape& a, const SkewShape& b) {
  FilterReport rep;
  compare_scalar(rep, "cells", a.cells(), b.cells());
  compare_scalar(rep, "rows", a.rows(), b.rows());
  compare_scalar(rep, "cols", a.cols(), b.cols());
  if (rep.mismatches.empty()) {
    for (int k = 2; k <= a.rows(); ++k) {
      const auto oa = sorted_overlap(a, k);
      const auto ob = sorted_overlap(b, k);
      if (oa != ob) rep.mismatches.push_back({"overlap", k, seq_string(oa), seq_string(ob)});
    }
  }
  rep.passed = rep.mismatches.empty();
  return rep;
}

FilterReport necessary_filter(const SkewShape& a, const SkewShape& b) {
  FilterReport rep = schur_filter(a, b);
  if (a.connected() && b.connected() && a.cols() == b.cols()) {
    const auto ba = bottlenecks(a);
    const auto bb = bottlenecks(b);
    const auto fa = pair_sums(ba);
    const auto fb = pair_sums(bb);
    for (std::size_t i = 0; i < fa.size(); ++i)
      if (fa[i] != fb[i])
        rep.mismatches.push_back({"pair_sum", static_cast<int>(i) + 1, std::to_string(fa[i]), std::to_string(fb[i])});
    int sa = 0, sb = 0;
    for (int x : ba) sa += x * x;
    for (int x : bb) sb += x * x;
    compare_scalar(rep, "sum_of_squares", sa, sb);
  }
  rep.passed = rep.mismatches.empty();
  return rep;
}

long long coeff_two_var(const SkewShape& s, int r) {
  const int n = s.cols();
  if (r < 1 || r > n) throw InvalidArg("r must lie in 1..n");
  const int k = (n + 1) / 2;
  if (r > k) r = n - r + 1;
  const auto f = pair_sums(bottlenecks(s));
  long long t = s.rows() - 1;
  for (int i = 2; i <= k; ++i) t += static_cast<long long>(std::min(i - 1, r - 1)) * f[static_cast<std::size_t>(i - 1)];
  return t;
}

long long coeff_x1sq_x2n(const SkewShape& s) {
  const auto b = bottlenecks(s);
  long long t = choose2(s.rows());
  for (int x : b) t -= choose2(x + 1);
  return t;
}

long long coeff_x1cube_x2nm1(const SkewShape& s) {
  const int n = s.cols();
  if (n < 2) throw InvalidArg("the x1^3 x2^(n-1) formula needs at least two columns");
  const long long m = s.rows();
  const auto b1 = bottlenecks(s, 1);
  const auto b2 = bottlenecks(s, 2);
  auto b = [&](int i) -> long long { return b1[static_cast<std::size_t>(i - 1)]; };
  auto w = [&](int i) -> long long { return b2[static_cast<std::size_t>(i - 1)]; };
  const long long mu1 = s.inner().conjugate().part(0);
  const long long lamn = s.outer().conjugate().part(static_cast<std::size_t>(n - 1));

  long long t = choose2(m);
  for (int i = 1; i <= n; ++i) t -= choose2(b(i) + 1);
  for (int i = 2; i <= n - 2; ++i) t += choose2(w(i) + 1);
  for (int i = 2; i <= n - 1; ++i) t += (m - 2) * b(i);
  long long sub = b(2) * (m - mu1 - 1) + b(n - 1) * (lamn - 1);
  for (int i = 2; i <= n - 2; ++i) sub += b(i) * b(i + 1);
  return t - sub;
}

long long coeff_x1cube_x2n(const SkewShape& s) {
  const int n = s.cols();
  const long long m = s.rows();
  const auto b1 = bottlenecks(s, 1);
  const auto b2 = bottlenecks(s, 2);
  auto b = [&](int i) -> long long { return b1[static_cast<std::size_t>(i - 1)]; };
  auto w = [&](int i) -> long long { return b2[static_cast<std::size_t>(i - 1)]; };

  long long t = choose3(m + 1);
  for (int i = 1; i <= n; ++i) t -= (m - 1) * choose2(b(i) + 1) - 2 * choose3(b(i)) - b(i) * (b(i) - 1);
  for (int i = 1; i <= n - 1; ++i)
    t -= choose3(w(i) + 2) + (b(i) + b(i + 1)) * choose2(w(i) + 1) + b(i) * w(i) * b(i + 1);
  return t;
}

std::string to_string(CoeffFormula f) {
  switch (f) {
    case CoeffFormula::TwoVar: return "two_var";
    case CoeffFormula::X1SqX2n: return "x1^2 x2^n";
    case CoeffFormula::X1CubeX2nm1: return "x1^3 x2^(n-1)";
    case CoeffFormula::X1CubeX2n: return "x1^3 x2^n";
  }
  return "?";
}

CoeffFormulaReport check_formula(CoeffFormula f, const SkewShape& s, int r) {
  const int n = s.cols();
  CoeffFormulaReport rep;
  rep.shape = s;
  rep.formula = f;
  switch (f) {
    case CoeffFormula::TwoVar:
      rep.closed_form = coeff_two_var(s, r);
      rep.monomial = ExponentVector({r, n - r + 1});
      break;
    case CoeffFormula::X1SqX2n:
      rep.closed_form = coeff_x1sq_x2n(s);
      rep.monomial = ExponentVector({2, n});
      break;
    case CoeffFormula::X1CubeX2nm1:
      rep.closed_form = coeff_x1cube_x2nm1(s);
      rep.monomial = ExponentVector({3, n - 1});
      break;
    case CoeffFormula::X1CubeX2n:
      rep.closed_form = coeff_x1cube_x2n(s);
      rep.monomial = ExponentVector({3, n});
      break;
  }
  rep.brute_force = count_by_content(s, FillingKind::RPP, rep.monomial);
  rep.agrees = rep.closed_form == rep.brute_force;
  return rep;
}

std::optional<CoeffFormulaReport> check_monomial(const SkewShape& s, const ExponentVector& monomial) {
  const int n = s.cols();
  if (n < 1 || monomial.num_vars() != 2) return std::nullopt;
  for (const auto& [e1, e2] : {std::pair{monomial[1], monomial[2]}, std::pair{monomial[2], monomial[1]}}) {
    if (e1 >= 1 && e2 >= 1 && e1 + e2 == n + 1) return check_formula(CoeffFormula::TwoVar, s, e1);
    if (e1 == 2 && e2 == n) return check_formula(CoeffFormula::X1SqX2n, s);
    if (e1 == 3 && e2 == n - 1 && n >= 2) return check_formula(CoeffFormula::X1CubeX2nm1, s);
    if (e1 == 3 && e2 == n) return check_formula(CoeffFormula::X1CubeX2n, s);
  }
  return std::nullopt;
}

EqualityVerdict g_equivalent(const SkewShape& a, const SkewShape& b, int budget_vars) {
  if (!necessary_filter(a, b).passed) return {false, {Evidence::Kind::Exact, 0}};
  const int m = std::min(budget_vars, a.cells());
  return equal(dual_grothendieck(a, m), dual_grothendieck(b, m));
}

EqualityVerdict G_equivalent(const SkewShape& a, const SkewShape& b, int budget_vars, int budget_degree) {
  return equal(grothendieck(a, budget_vars, budget_degree), grothendieck(b, budget_vars, budget_degree));
}

std::vector<SkewShape> shapes_of_size(int cells) {
  if (cells < 0) throw InvalidArg("cell count must be nonnegative");
  std::vector<SkewShape> out;
  if (cells == 0) {
    out.emplace_back();
    return out;
  }
  // Rows are chosen from the bottom up. Row i sits weakly right of row i+1
  // and must reach column lambda_{i+1} + 1 at most, or a column would be empty.
  std::vector<std::pair<int, int>> rows;  // (mu, lambda), bottom row first
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      std::vector<int> outer, inner;
      for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        inner.push_back(it->first);
        outer.push_back(it->second);
      }
      out.push_back(normalize(Partition(std::move(outer)), Partition(std::move(inner))));
      return;
    }
    const auto [pmu, plam] = rows.back();
    for (int mu = pmu; mu <= plam; ++mu) {
      for (int lam = std::max(plam, mu + 1); lam <= mu + left; ++lam) {
        rows.emplace_back(mu, lam);
        self(self, left - (lam - mu));
        rows.pop_back();
      }
    }
  };
  for (int len = 1; len <= cells; ++len) {
    rows.emplace_back(0, len);
    rec(rec, cells - len);
    rows.pop_back();
  }
  std::sort(out.begin(), out.end(), [](const SkewShape& x, const SkewShape& y) { return x.to_string() < y.to_string(); });
  return out;
}

Fingerprint fingerprint(const SkewShape& s) {
  Fingerprint fp;
  fp.cells = s.cells();
  fp.rows = s.rows();
  fp.cols = s.cols();
  fp.connected = s.connected();
  const auto b = bottlenecks(s);
  for (int x : b) fp.total += x;
  if (fp.connected) {
    fp.pair_sums = pair_sums(b);
    for (int x : b) fp.sum_of_squares += x * x;
  }
  for (int k = 2; k <= s.rows(); ++k) fp.overlaps[k] = sorted_overlap(s, k);
  return fp;
}

namespace {

std::vector<EquivClass> resolve_bucket(const Fingerprint& fp, const std::vector<SkewShape>& members, int vars) {
  const int m = std::min(vars, fp.cells);
  std::vector<std::pair<TruncatedSymPoly, std::vector<SkewShape>>> groups;
  for (const SkewShape& s : members) {
    auto g = dual_grothendieck(s, m);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& grp) { return grp.first == g; });
    if (it == groups.end())
      groups.emplace_back(std::move(g), std::vector<SkewShape>{s});
    else
      it->second.push_back(s);
  }
  std::vector<EquivClass> out;
  for (auto& [g, shapes] : groups) {
    EquivClass c;
    std::sort(shapes.begin(), shapes.end(),
              [](const SkewShape& x, const SkewShape& y) { return x.to_string() < y.to_string(); });
    c.representative = shapes.front();
    c.members = shapes;
    c.fingerprint = fp;
    c.evidence = m >= fp.cells ? Evidence{Evidence::Kind::Exact, 0} : Evidence{Evidence::Kind::PartialVars, m};
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const EquivClass& x, const EquivClass& y) {
    return x.representative.to_string() < y.representative.to_string();
  });
  return out;
}

bool explained_by_rotation(const EquivClass& c) {
  const SkewShape rot = rotate180(c.representative);
  return std::all_of(c.members.begin(), c.members.end(),
                     [&](const SkewShape& s) { return s == c.representative || s == rot; });
}

}  // namespace

SearchSummary search_coincidences(int cells, ShapeClass cls, const SearchBudget& budget,
                                  const std::function<void(const EquivClass&)>& emit) {
  std::vector<SkewShape> shapes;
  if (cls == ShapeClass::Ribbon) {
    if (cells >= 1)
      for (const Ribbon& r : ribbons_of_size(cells)) shapes.push_back(shape_of(r));
  } else {
    shapes = shapes_of_size(cells);
  }
  std::map<Fingerprint, std::vector<SkewShape>> buckets;
  for (const SkewShape& s : shapes) buckets[fingerprint(s)].push_back(s);

  SearchSummary summary;
  summary.shapes = static_cast<int>(shapes.size());
  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (budget.time_limit_seconds <= 0) return false;
    const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
    return spent.count() > budget.time_limit_seconds;
  };

  const std::size_t jobs = static_cast<std::size_t>(std::max(1, budget.jobs));
  auto it = buckets.begin();
  while (it != buckets.end()) {
    if (out_of_time()) {
      summary.timed_out = true;
      break;
    }
    std::vector<std::future<std::vector<EquivClass>>> batch;
    for (std::size_t j = 0; j < jobs && it != buckets.end(); ++j, ++it) {
      const auto* entry = &*it;
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 [entry, &budget] { return resolve_bucket(entry->first, entry->second, budget.vars); }));
    }
    for (auto& fut : batch) {
      for (const EquivClass& c : fut.get()) {
        ++summary.classes;
        if (!explained_by_rotation(c)) ++summary.nontrivial;
        emit(c);
      }
    }
  }
  return summary;
}

std::vector<EquivClass> search_coincidences(int cells, ShapeClass cls, const SearchBudget& budget) {
  std::vector<EquivClass> out;
  search_coincidences(cells, cls, budget, [&](const EquivClass& c) { out.push_back(c); });
  std::sort(out.begin(), out.end(), [](const EquivClass& x, const EquivClass& y) {
    return x.representative.to_string() < y.representative.to_string();
  });
  return out;
}

std::vector<Partition> partitions_inside(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int i) -> void {
    out.emplace_back(parts);
    if (i >= outer.length()) return;
    const int cap = std::min(outer.part(static_cast<std::size_t>(i)), parts.empty() ? outer.part(0) : parts.back());
    for (int v = 1; v <= cap; ++v) {
      parts.push_back(v);
      self(self, i + 1);
      parts.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int StaircaseReport::violations() const noexcept {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const StaircaseCase& c) { return !c.passed(); }));
}

StaircaseReport check_staircase(int n, const StaircaseBudget& budget) {
  if (n < 2) throw InvalidArg("staircase order must be at least 2");
  std::vector<int> stair;
  for (int k = n - 1; k >= 1; --k) stair.push_back(k);
  const Partition delta(std::move(stair));
  StaircaseReport rep;
  rep.n = n;
  for (const Partition& mu : partitions_inside(delta)) {
    StaircaseCase c;
    c.inner = mu;
    c.shape = normalize(delta, mu);
    c.transposed = transpose(c.shape);
    const int cells = c.shape.cells();
    const int m = std::min(cells, budget.g_vars);
    c.g = equal(dual_grothendieck(c.shape, m), dual_grothendieck(c.transposed, m));
    c.G = G_equivalent(c.shape, c.transposed, budget.G_vars, cells + budget.degree_slack);
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

namespace {

json verdict_json(const EqualityVerdict& v) { return {{"equal", v.equal}, {"evidence", v.evidence.to_string()}}; }

json invariants_json(const Fingerprint& fp) {
  json overlaps = json::object();
  for (const auto& [k, v] : fp.overlaps) overlaps[std::to_string(k)] = v;
  return {{"cells", fp.cells},
          {"rows", fp.rows},
          {"cols", fp.cols},
          {"connected", fp.connected},
          {"pair_sums", fp.pair_sums},
          {"sum_of_squares", fp.sum_of_squares},
          {"total", fp.total},
          {"overlaps", overlaps}};
}

// Negative means "not measured", which keeps records byte-identical across runs.
json elapsed_json(double seconds) {
  if (seconds < 0) return nullptr;
  return static_cast<double>(static_cast<long long>(seconds * 1000.0 + 0.5)) / 1000.0;
}

}  // namespace

std::string to_json(const FilterReport& r) {
  json mism = json::array();
  for (const auto& m : r.mismatches)
    mism.push_back({{"invariant", m.invariant}, {"index", m.index}, {"left", m.left}, {"right", m.right}});
  return json{{"passed", r.passed}, {"mismatches", mism}}.dump();
}

std::string to_json(const CoeffFormulaReport& r) {
  return json{{"shape", r.shape.to_string()},
              {"formula", to_string(r.formula)},
              {"monomial", r.monomial.to_string()},
              {"closed_form", r.closed_form},
              {"brute_force", r.brute_force},
              {"agrees", r.agrees}}
      .dump();
}

std::string to_json(const EquivClass& c, double elapsed_seconds) {
  json shapes = json::array();
  for (const auto& s : c.members) shapes.push_back(s.to_string());
  return json{{"shapes", shapes},
              {"verdict", c.members.size() > 1 ? "equal" : "singleton"},
              {"evidence", c.evidence.to_string()},
              {"invariants", invariants_json(c.fingerprint)},
              {"elapsed", elapsed_json(elapsed_seconds)}}
      .dump();
}

std::string to_json(const StaircaseCase& c, double elapsed_seconds) {
  return json{{"shapes", {c.shape.to_string(), c.transposed.to_string()}},
              {"inner", c.inner.to_string()},
              {"verdict", c.passed() ? "pass" : "violation"},
              {"evidence", {{"g", verdict_json(c.g)}, {"G", verdict_json(c.G)}}},
              {"invariants", invariants_json(fingerprint(c.shape))},
              {"elapsed", elapsed_json(elapsed_seconds)}}
      .dump();
}

}  // namespace skewsym
