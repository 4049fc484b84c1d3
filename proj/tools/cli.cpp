#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>

#include "skewsym/equivalence.hpp"
#include "skewsym/errors.hpp"
#include "skewsym/polynomials.hpp"
#include "skewsym/ribbons.hpp"
#include "skewsym/shapes.hpp"
#include "skewsym/tableaux.hpp"

namespace skewsym::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kDefaultVarCap = 8;

struct Options {
  std::string format = "text";
  std::string kind;
  std::string shape;
  std::vector<std::string> operands;
  std::string ribbon;
  std::string monomial;
  std::string suite;
  bool connected_only = false;
  std::string cls = "skew";
  std::string out_dir;
  int vars = -1;
  int degree = -1;
  int width = -1;
  int cells = -1;
  int n = -1;
  int G_vars = 4;
  int degree_slack = 2;
  int jobs = 1;
  double time_limit = 0;
  bool timing = false;
};

bool as_json(const Options& o) { return o.format == "json"; }

int vars_for(const Options& o, int cells) { return o.vars >= 0 ? o.vars : std::min(cells, kDefaultVarCap); }
int degree_for(const Options& o, int cells) { return o.degree >= 0 ? o.degree : cells + 2; }

std::string seq(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

TruncatedSymPoly make_poly(PolyKind kind, const SkewShape& s, const Options& o) {
  const int m = vars_for(o, s.cells());
  switch (kind) {
    case PolyKind::Schur: return schur(s, m);
    case PolyKind::DualGrothendieck: return dual_grothendieck(s, m);
    case PolyKind::Grothendieck: return grothendieck(s, m, degree_for(o, s.cells()));
  }
  throw InvalidArg("unknown polynomial kind");
}

int cmd_poly(const Options& o, std::ostream& out) {
  const SkewShape s = parse_shape(o.shape);
  const auto p = make_poly(parse_poly_kind(o.kind), s, o);
  if (as_json(o))
    out << to_json(p) << '\n';
  else
    out << to_text(p);
  return kOk;
}

int cmd_equal(const Options& o, std::ostream& out) {
  if (o.operands.size() != 2) throw InvalidArg("equal takes exactly two shapes");
  const SkewShape a = parse_shape(o.operands[0]);
  const SkewShape b = parse_shape(o.operands[1]);
  const PolyKind kind = parse_poly_kind(o.kind);
  const int cells = std::max(a.cells(), b.cells());
  FilterReport filter = kind == PolyKind::DualGrothendieck ? necessary_filter(a, b) : schur_filter(a, b);
  EqualityVerdict v;
  switch (kind) {
    case PolyKind::Schur: v = equal(schur(a, vars_for(o, cells)), schur(b, vars_for(o, cells))); break;
    case PolyKind::DualGrothendieck: v = g_equivalent(a, b, vars_for(o, cells)); break;
    case PolyKind::Grothendieck: {
      if (a.cells() != b.cells()) {
        v = {false, {Evidence::Kind::Exact, 0}};
        break;
      }
      v = G_equivalent(a, b, vars_for(o, cells), degree_for(o, cells));
      break;
    }
  }
  if (as_json(o)) {
    out << json{{"kind", o.kind},
                {"shapes", {a.to_string(), b.to_string()}},
                {"equal", v.equal},
                {"evidence", v.evidence.to_string()},
                {"filter", json::parse(to_json(filter))}}
               .dump()
        << '\n';
  } else {
    out << (v.equal ? "equal" : "not equal") << ", " << v.evidence.to_string() << '\n';
    for (const auto& m : filter.mismatches) out << "  " << m.to_string() << '\n';
  }
  return kOk;
}

int cmd_bottlenecks(const Options& o, std::ostream& out) {
  const SkewShape s = parse_shape(o.shape);
  const int width = o.width >= 0 ? o.width : std::min(2, std::max(1, s.cols()));
  const auto p = bottleneck_profile(s, width);
  if (as_json(o)) {
    json wide = json::object();
    for (const auto& [w, v] : p.wide) wide[std::to_string(w)] = v;
    json overlaps = json::object();
    for (const auto& [k, v] : p.overlaps) overlaps[std::to_string(k)] = v;
    out << json{{"shape", s.to_string()},
                {"rows", s.rows()},
                {"cols", s.cols()},
                {"b", p.b},
                {"wide", wide},
                {"pair_sums", p.pair_sums},
                {"overlaps", overlaps}}
               .dump()
        << '\n';
  } else {
    out << "shape = " << s.to_string() << "\nm = " << s.rows() << ", n = " << s.cols() << "\nb = " << seq(p.b) << '\n';
    for (const auto& [w, v] : p.wide)
      if (w > 1) out << "b^(" << w << ") = " << seq(v) << '\n';
    out << "pair_sums = " << seq(p.pair_sums) << '\n';
    for (const auto& [k, v] : p.overlaps) out << "r^(" << k << ") = " << seq(v) << '\n';
  }
  return kOk;
}

int cmd_factor(const Options& o, std::ostream& out) {
  const Ribbon r = parse_ribbon(o.ribbon);
  const auto f = irreducible_factorization(r);
  const bool ok = is_irreducible(f) && f.composed() == r;
  if (as_json(o)) {
    json factors = json::array();
    for (const auto& x : f.factors) factors.push_back(x.to_string());
    out << json{{"ribbon", r.to_string()}, {"factors", factors}, {"verified", ok}}.dump() << '\n';
  } else {
    out << r.to_string() << " = " << f.to_string() << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_expand(const Options& o, std::ostream& out) {
  const Ribbon r = parse_ribbon(o.ribbon);
  const auto terms = ribbon_schur_expansion(r);
  if (as_json(o)) {
    json arr = json::array();
    for (const auto& [c, k] : terms)
      arr.push_back({{"ribbon", c.to_string()}, {"columns", c.columns_string()}, {"coefficient", k.str()}});
    out << json{{"ribbon", r.to_string()}, {"columns", r.columns_string()}, {"terms", arr}}.dump() << '\n';
  } else {
    out << "g" << r.to_string() << " =\n";
    for (const auto& [c, k] : terms) out << "  " << k << " * s" << c.to_string() << "  " << c.columns_string() << '\n';
  }
  return kOk;
}

int cmd_coeff(const Options& o, std::ostream& out) {
  const SkewShape s = parse_shape(o.shape);
  const ExponentVector mono = parse_monomial(o.monomial);
  const std::string kind = o.kind.empty() ? "g" : o.kind;
  const PolyKind pk = parse_poly_kind(kind);
  const FillingKind fk = pk == PolyKind::Schur             ? FillingKind::SSYT
                         : pk == PolyKind::DualGrothendieck ? FillingKind::RPP
                                                            : FillingKind::SetValued;
  std::optional<CoeffFormulaReport> rep;
  if (pk == PolyKind::DualGrothendieck) rep = check_monomial(s, mono);
  const long long oracle = rep ? rep->brute_force : count_by_content(s, fk, mono);
  const bool agrees = !rep || rep->agrees;
  if (as_json(o)) {
    json j{{"shape", s.to_string()}, {"kind", kind}, {"monomial", mono.to_string()}};
    if (rep) {
      j["formula"] = to_string(rep->formula);
      j["closed_form"] = rep->closed_form;
    } else {
      j["formula"] = nullptr;
      j["closed_form"] = nullptr;
    }
    j["brute_force"] = oracle;
    j["agrees"] = agrees;
    out << j.dump() << '\n';
  } else {
    out << oracle << '\n';
    if (rep)
      out << "closed form (" << to_string(rep->formula) << ") = " << rep->closed_form << ", "
          << (rep->agrees ? "agrees" : "DISAGREES") << '\n';
  }
  return agrees ? kOk : kVerificationFailed;
}

std::ostream& sink(const Options& o, const std::string& name, std::ostream& out, std::ofstream& file) {
  if (o.out_dir.empty()) return out;
  std::filesystem::create_directories(o.out_dir);
  const auto path = std::filesystem::path(o.out_dir) / name;
  file.open(path);
  if (!file) throw InvalidArg("cannot write " + path.string());
  return file;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.cells < 0) throw InvalidArg("--cells is required");
  ShapeClass cls;
  if (o.cls == "skew")
    cls = ShapeClass::Skew;
  else if (o.cls == "ribbon")
    cls = ShapeClass::Ribbon;
  else
    throw ParseError("unknown shape class (expected skew or ribbon)", o.cls);
  SearchBudget budget{.vars = vars_for(o, o.cells), .time_limit_seconds = o.time_limit, .jobs = o.jobs};
  std::ofstream file;
  std::ostream& dest = sink(o, "search_" + o.cls + "_" + std::to_string(o.cells) + ".jsonl", out, file);
  auto last = std::chrono::steady_clock::now();
  const auto summary = search_coincidences(o.cells, cls, budget, [&](const EquivClass& c) {
    const auto now = std::chrono::steady_clock::now();
    const double elapsed = o.timing ? std::chrono::duration<double>(now - last).count() : -1.0;
    last = now;
    if (as_json(o)) {
      dest << to_json(c, elapsed) << '\n';
    } else {
      for (std::size_t i = 0; i < c.members.size(); ++i) dest << (i ? " ~ " : "") << c.members[i].to_string();
      dest << "  [" << c.evidence.to_string() << "]\n";
    }
    dest.flush();
  });
  err << "shapes " << summary.shapes << ", classes " << summary.classes << ", beyond rotation " << summary.nontrivial
      << (summary.timed_out ? ", stopped at time limit" : "") << '\n';
  return kOk;
}

int cmd_staircase(const Options& o, std::ostream& out) {
  if (o.n < 0) throw InvalidArg("--n is required");
  StaircaseBudget budget{.g_vars = o.vars >= 0 ? o.vars : kDefaultVarCap, .G_vars = o.G_vars, .degree_slack = o.degree_slack};
  const auto start = std::chrono::steady_clock::now();
  const auto rep = check_staircase(o.n, budget);
  const double elapsed = o.timing ? std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() : -1.0;
  std::ofstream file;
  std::ostream& dest = sink(o, "staircase_" + std::to_string(o.n) + ".jsonl", out, file);
  for (const auto& c : rep.cases) {
    if (as_json(o))
      dest << to_json(c, elapsed < 0 ? -1.0 : elapsed / static_cast<double>(rep.cases.size())) << '\n';
    else
      dest << (c.passed() ? "pass " : "FAIL ") << c.shape.to_string() << " vs " << c.transposed.to_string()
           << "  g: " << c.g.evidence.to_string() << ", G: " << c.G.evidence.to_string() << '\n';
  }
  if (!as_json(o)) dest << rep.cases.size() << " cases, " << rep.violations() << " violations\n";
  return rep.violations() == 0 ? kOk : kVerificationFailed;
}

constexpr std::size_t kMaxListedFailures = 20;

struct SuiteResult {
  long long checks = 0;
  std::vector<std::string> failures;
};

SuiteResult suite_rotation(int max_cells) {
  SuiteResult r;
  for (int c = 1; c <= max_cells; ++c) {
    for (const SkewShape& s : shapes_of_size(c)) {
      const SkewShape rot = rotate180(s);
      const auto v = equal(dual_grothendieck(s, c), dual_grothendieck(rot, c));
      ++r.checks;
      if (!v.equal || v.evidence.kind != Evidence::Kind::Exact) r.failures.push_back(s.to_string());
    }
  }
  return r;
}

SuiteResult suite_ribbon_theorem(int max_cells) {
  SuiteResult r;
  for (int c = 1; c <= max_cells; ++c) {
    const auto ribbons = ribbons_of_size(c);
    std::vector<TruncatedSymPoly> gs;
    for (const Ribbon& a : ribbons) gs.push_back(dual_grothendieck(shape_of(a), c));
    for (std::size_t i = 0; i < ribbons.size(); ++i) {
      for (std::size_t j = i + 1; j < ribbons.size(); ++j) {
        ++r.checks;
        const bool same = equal(gs[i], gs[j]).equal;
        if (same != g_equivalent(ribbons[i], ribbons[j]))
          r.failures.push_back(ribbons[i].to_string() + " " + ribbons[j].to_string());
      }
    }
  }
  return r;
}

SuiteResult suite_formulas(int max_cells, bool connected_only) {
  SuiteResult r;
  auto record = [&](const CoeffFormulaReport& rep) {
    ++r.checks;
    if (!rep.agrees)
      r.failures.push_back(rep.shape.to_string() + " " + to_string(rep.formula) + " " + rep.monomial.to_string() +
                           ": " + std::to_string(rep.closed_form) + " vs " + std::to_string(rep.brute_force));
  };
  for (int c = 1; c <= max_cells; ++c) {
    for (const SkewShape& s : shapes_of_size(c)) {
      if (connected_only && !s.connected()) continue;
      for (int rr = 1; rr <= s.cols(); ++rr) record(check_formula(CoeffFormula::TwoVar, s, rr));
      record(check_formula(CoeffFormula::X1SqX2n, s));
      if (s.cols() >= 2) record(check_formula(CoeffFormula::X1CubeX2nm1, s));
      record(check_formula(CoeffFormula::X1CubeX2n, s));
    }
  }
  return r;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteResult r;
  if (o.suite == "rotation")
    r = suite_rotation(o.cells >= 0 ? o.cells : 6);
  else if (o.suite == "ribbon-theorem")
    r = suite_ribbon_theorem(o.cells >= 0 ? o.cells : 6);
  else if (o.suite == "formulas")
    r = suite_formulas(o.cells >= 0 ? o.cells : 7, o.connected_only);
  else
    throw ParseError("unknown suite (expected rotation, ribbon-theorem or formulas)", o.suite);
  const bool ok = r.failures.empty();
  const std::size_t shown = std::min<std::size_t>(r.failures.size(), kMaxListedFailures);
  const std::vector<std::string> listed(r.failures.begin(), r.failures.begin() + static_cast<std::ptrdiff_t>(shown));
  if (as_json(o)) {
    out << json{{"suite", o.suite}, {"passed", ok}, {"checks", r.checks}, {"failure_count", r.failures.size()},
                {"failures", listed}}
               .dump()
        << '\n';
  } else {
    out << o.suite << ": " << (ok ? "pass" : "FAIL") << " (" << r.checks << " checks, " << r.failures.size()
        << " failures)\n";
    for (const auto& f : listed) out << "  " << f << '\n';
    if (shown < r.failures.size()) out << "  ... " << r.failures.size() - shown << " more\n";
  }
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Skew Schur, stable and dual stable Grothendieck polynomials of skew shapes", "skewsym"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto add_budgets = [&](CLI::App* sub) {
    sub->add_option("--vars", o.vars, "Number of variables (default: cells, at most 8)")->check(CLI::NonNegativeNumber);
    sub->add_option("--degree", o.degree, "Degree bound for G (default: cells + 2)")->check(CLI::NonNegativeNumber);
  };

  auto* poly = app.add_subcommand("poly", "Print s, g or G of a shape");
  poly->add_option("--kind", o.kind, "s, g or G")->required();
  poly->add_option("--shape", o.shape, "Skew shape, e.g. 6,3,1/3,1")->required();
  add_budgets(poly);

  auto* eq = app.add_subcommand("equal", "Compare s, g or G of two shapes");
  eq->add_option("--kind", o.kind, "s, g or G")->required();
  eq->add_option("shapes", o.operands, "Two skew shapes")->expected(2)->required();
  add_budgets(eq);

  auto* bn = app.add_subcommand("bottlenecks", "Print the bottleneck profile of a shape");
  bn->add_option("shape", o.shape, "Skew shape")->required();
  bn->add_option("--width", o.width, "Largest bottleneck width")->check(CLI::PositiveNumber);

  auto* fac = app.add_subcommand("factor", "Irreducible factorization of a ribbon");
  fac->add_option("ribbon", o.ribbon, "Ribbon, e.g. (2,1,2,3,1) or [1,2]")->required();

  auto* exp = app.add_subcommand("expand", "Schur expansion of g of a ribbon");
  exp->add_option("ribbon", o.ribbon, "Ribbon")->required();

  auto* co = app.add_subcommand("coeff", "Coefficient of a monomial, closed form and enumeration");
  co->add_option("shape", o.shape, "Skew shape")->required();
  co->add_option("--monomial", o.monomial, "Monomial, e.g. \"x1^2 x2^5\"")->required();
  co->add_option("--kind", o.kind, "s, g or G (default g)");

  auto* se = app.add_subcommand("search", "Sweep all shapes of a size for g-coincidences");
  se->add_option("--cells", o.cells, "Number of cells")->required()->check(CLI::NonNegativeNumber);
  se->add_option("--class", o.cls, "skew or ribbon");
  se->add_option("--vars", o.vars, "Variable cap for g")->check(CLI::NonNegativeNumber);
  se->add_option("--time-limit", o.time_limit, "Stop after this many seconds (0 = none)");
  se->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  se->add_option("--out-dir", o.out_dir, "Write records to a file in this directory");
  se->add_flag("--timing", o.timing, "Record elapsed seconds");

  auto* st = app.add_subcommand("staircase", "Compare every staircase skew shape with its transpose");
  st->add_option("--n", o.n, "Staircase order")->required()->check(CLI::PositiveNumber);
  st->add_option("--vars", o.vars, "Variable cap for g")->check(CLI::NonNegativeNumber);
  st->add_option("--G-vars", o.G_vars, "Variables for G")->check(CLI::NonNegativeNumber);
  st->add_option("--degree-slack", o.degree_slack, "G is truncated at cells + slack")->check(CLI::NonNegativeNumber);
  st->add_option("--out-dir", o.out_dir, "Write records to a file in this directory");
  st->add_flag("--timing", o.timing, "Record elapsed seconds");

  auto* ve = app.add_subcommand("verify", "Run a property suite");
  ve->add_option("--suite", o.suite, "rotation, ribbon-theorem or formulas")->required();
  ve->add_option("--cells", o.cells, "Largest shape size")->check(CLI::NonNegativeNumber);
  ve->add_flag("--connected-only", o.connected_only, "formulas: skip disconnected shapes");

  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format") {
      ++i;
      continue;
    }
    if (args[i].starts_with("-")) continue;
    if (app.get_subcommand_no_throw(args[i]) == nullptr) {
      err << "error: unknown command: '" << args[i] << "'\n";
      return kUsage;
    }
    break;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*poly) return cmd_poly(o, out);
    if (*eq) return cmd_equal(o, out);
    if (*bn) return cmd_bottlenecks(o, out);
    if (*fac) return cmd_factor(o, out);
    if (*exp) return cmd_expand(o, out);
    if (*co) return cmd_coeff(o, out);
    if (*se) return cmd_search(o, out, err);
    if (*st) return cmd_staircase(o, out);
    if (*ve) return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace skewsym::cli
