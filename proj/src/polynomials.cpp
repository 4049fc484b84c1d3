#include "skewsym/polynomials.hpp"

#include <algorithm>
#include <charconv>
#include <json.hpp>
#include <sstream>

#include "skewsym/errors.hpp"
#include "skewsym/tableaux.hpp"

namespace skewsym {

TruncatedSymPoly::TruncatedSymPoly(int num_vars, int degree_bound, bool degree_complete)
    : num_vars_(num_vars), degree_bound_(degree_bound), complete_(degree_complete) {
  if (num_vars < 0) throw InvalidBound("number of variables must be nonnegative");
  if (degree_bound < 0) throw InvalidBound("degree bound must be nonnegative");
}

TruncatedSymPoly TruncatedSymPoly::constant(int num_vars, const BigInt& c) {
  TruncatedSymPoly p(num_vars, 0, true);
  p.add(Partition{}, c);
  return p;
}

int TruncatedSymPoly::max_degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }

int TruncatedSymPoly::min_degree() const noexcept { return terms_.empty() ? -1 : terms_.begin()->first.size(); }

BigInt TruncatedSymPoly::coefficient(const Partition& key) const {
  const auto it = terms_.find(key);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt TruncatedSymPoly::coefficient(const ExponentVector& monomial) const {
  if (monomial.num_vars() > num_vars_) return 0;
  return coefficient(monomial.sorted());
}

void TruncatedSymPoly::add(const Partition& key, const BigInt& c) {
  if (key.length() > num_vars_) throw InvalidArg("monomial uses more variables than the polynomial has");
  if (key.size() > degree_bound_) throw InvalidArg("monomial exceeds the degree bound");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSymPoly TruncatedSymPoly::homogeneous_part(int degree) const {
  TruncatedSymPoly out(num_vars_, degree_bound_, complete_ || degree <= degree_bound_);
  for (const auto& [key, c] : terms_)
    if (key.size() == degree) out.terms_.emplace(key, c);
  return out;
}

TruncatedSymPoly TruncatedSymPoly::restrict(int k) const {
  if (k < 0 || k > num_vars_) throw InvalidArg("can only restrict to fewer variables");
  TruncatedSymPoly out(k, degree_bound_, complete_);
  for (const auto& [key, c] : terms_)
    if (key.length() <= k) out.terms_.emplace(key, c);
  return out;
}

void TruncatedSymPoly::check_compatible(const TruncatedSymPoly& other) const {
  if (num_vars_ != other.num_vars_ || degree_bound_ != other.degree_bound_ || complete_ != other.complete_)
    throw IncomparableTruncation("arithmetic needs equal variable counts and truncations");
}

TruncatedSymPoly& TruncatedSymPoly::operator+=(const TruncatedSymPoly& other) {
  check_compatible(other);
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

TruncatedSymPoly& TruncatedSymPoly::operator-=(const TruncatedSymPoly& other) {
  check_compatible(other);
  for (const auto& [key, c] : other.terms_) add(key, -c);
  return *this;
}

TruncatedSymPoly& TruncatedSymPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Number of distinct rearrangements of the exponent vector padded to m slots.
BigInt orbit_size(const Partition& key, int m) {
  BigInt size = factorial(m) / factorial(m - key.length());
  int run = 1;
  for (int i = 1; i <= key.length(); ++i) {
    if (i < key.length() && key.part(static_cast<std::size_t>(i)) == key.part(static_cast<std::size_t>(i - 1))) {
      ++run;
    } else {
      size /= factorial(run);
      run = 1;
    }
  }
  return size;
}

Partition key_of(std::span<const int> counts) { return Partition(std::vector<int>(counts.begin(), counts.end())); }

bool weakly_decreasing(std::span<const int> counts) {
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] > counts[i - 1]) return false;
  return true;
}

FillingKind filling_kind(PolyKind kind) {
  switch (kind) {
    case PolyKind::Schur: return FillingKind::SSYT;
    case PolyKind::DualGrothendieck: return FillingKind::RPP;
    case PolyKind::Grothendieck: return FillingKind::SetValued;
  }
  return FillingKind::SSYT;
}

// Each leaf contributes +-1, so 64-bit tallies cannot overflow within any
// feasible enumeration; they are widened once at the end.
template <bool OrbitKeysOnly>
std::map<std::vector<int>, long long> tally(const SkewShape& shape, FillingKind kind, int m, int D) {
  std::map<std::vector<int>, long long> acc;
  const int cells = shape.cells();
  const EnumerationBounds bounds{.max_entry = m, .max_degree = D, .content_cap = {}};
  std::vector<int> key;
  enumerate_weighted(shape, kind, bounds, [&](const Filling&, std::span<const int> counts) {
    if constexpr (OrbitKeysOnly) {
      if (!weakly_decreasing(counts)) return;
    }
    key.assign(counts.begin(), counts.end());
    long long sign = 1;
    if (kind == FillingKind::SetValued) {
      int degree = 0;
      for (int c : counts) degree += c;
      if ((degree - cells) % 2 != 0) sign = -1;
    }
    acc[key] += sign;
  });
  return acc;
}

TruncatedSymPoly build(const SkewShape& shape, PolyKind kind, int m, int D, bool complete) {
  TruncatedSymPoly p(m, D, complete);
  for (const auto& [counts, c] : tally<true>(shape, filling_kind(kind), m, D)) p.add(key_of(counts), c);
  return p;
}

void check_vars(int m) {
  if (m < 0 || m > EntrySet::kMaxValue) throw InvalidBound("number of variables must lie in 0..63");
}

}  // namespace

TruncatedSymPoly symmetrize(const RawPoly& raw) {
  TruncatedSymPoly p(raw.num_vars, raw.degree_bound, raw.degree_complete);
  std::map<Partition, BigInt> seen;
  for (const auto& [mono, c] : raw.terms) {
    if (c == 0) continue;
    if (mono.num_vars() > raw.num_vars) throw NotSymmetric("monomial " + mono.to_string() + " uses too many variables");
    const Partition key = mono.sorted();
    const BigInt rep = [&] {
      const auto it = raw.terms.find(ExponentVector(std::vector<int>(key.parts().begin(), key.parts().end())));
      return it == raw.terms.end() ? BigInt(0) : it->second;
    }();
    if (rep != c) throw NotSymmetric("coefficient of " + mono.to_string() + " differs from its orbit representative");
    seen[key] += 1;
  }
  for (const auto& [key, n] : seen) {
    if (n != orbit_size(key, raw.num_vars)) throw NotSymmetric("orbit of [" + key.to_string() + "] is incomplete");
    p.add(key, raw.terms.at(ExponentVector(std::vector<int>(key.parts().begin(), key.parts().end()))));
  }
  return p;
}

TruncatedSymPoly schur(const SkewShape& shape, int m) {
  check_vars(m);
  return build(shape, PolyKind::Schur, m, shape.cells(), true);
}

TruncatedSymPoly dual_grothendieck(const SkewShape& shape, int m, std::optional<int> max_degree) {
  check_vars(m);
  const int cells = shape.cells();
  const int D = max_degree ? std::min(*max_degree, cells) : cells;
  if (D < 0) throw InvalidBound("degree bound must be nonnegative");
  return build(shape, PolyKind::DualGrothendieck, m, D, D == cells);
}

TruncatedSymPoly grothendieck(const SkewShape& shape, int m, int D) {
  check_vars(m);
  if (D < shape.cells()) throw InvalidBound("degree bound is below the number of cells");
  // G of a nonempty shape has terms in every degree >= cells
  return build(shape, PolyKind::Grothendieck, m, D, shape.cells() == 0);
}

PolyKind parse_poly_kind(std::string_view text) {
  if (text == "s") return PolyKind::Schur;
  if (text == "g") return PolyKind::DualGrothendieck;
  if (text == "G") return PolyKind::Grothendieck;
  throw ParseError("unknown polynomial kind (expected s, g or G)", std::string(text));
}

std::string to_string(PolyKind kind) {
  switch (kind) {
    case PolyKind::Schur: return "s";
    case PolyKind::DualGrothendieck: return "g";
    case PolyKind::Grothendieck: return "G";
  }
  return "?";
}

RawPoly raw_generating_function(const SkewShape& shape, PolyKind kind, int m, int D) {
  check_vars(m);
  const int cells = shape.cells();
  if (kind != PolyKind::Grothendieck) D = cells;
  if (D < cells) throw InvalidBound("degree bound is below the number of cells");
  RawPoly raw{.num_vars = m,
              .degree_bound = D,
              .degree_complete = kind != PolyKind::Grothendieck || cells == 0,
              .terms = {}};
  for (const auto& [counts, c] : tally<false>(shape, filling_kind(kind), m, D))
    if (c != 0) raw.terms.emplace(ExponentVector(counts), c);
  return raw;
}

std::string Evidence::to_string() const {
  switch (kind) {
    case Kind::Exact: return "Exact";
    case Kind::PartialVars: return "PartialVars(" + std::to_string(bound) + ")";
    case Kind::PartialDegree: return "PartialDegree(" + std::to_string(bound) + ")";
  }
  return "?";
}

EqualityVerdict equal(const TruncatedSymPoly& a, const TruncatedSymPoly& b) {
  if (a.degree_bound() != b.degree_bound() && (!a.degree_complete() || !b.degree_complete()))
    throw IncomparableTruncation("degree truncations at " + std::to_string(a.degree_bound()) + " and " +
                                 std::to_string(b.degree_bound()) + " cannot be compared");
  const int m = std::min(a.num_vars(), b.num_vars());
  const auto ra = a.restrict(m);
  const auto rb = b.restrict(m);
  EqualityVerdict v;
  v.equal = ra.terms() == rb.terms();
  const int D = std::max(a.degree_bound(), b.degree_bound());
  if (!a.degree_complete() || !b.degree_complete())
    v.evidence = {Evidence::Kind::PartialDegree, D};
  else if (m >= D)
    v.evidence = {Evidence::Kind::Exact, 0};
  else
    v.evidence = {Evidence::Kind::PartialVars, m};
  return v;
}

std::map<Partition, BigInt, GradedOrder> schur_expand(const TruncatedSymPoly& p) {
  if (!p.degree_complete()) throw InvalidArg("Schur expansion needs a polynomial without degree truncation");
  if (p.num_vars() < p.max_degree()) throw InvalidArg("Schur expansion needs at least as many variables as the degree");
  std::map<Partition, BigInt, GradedOrder> out;
  auto rest = p;
  // Within a degree the first key is lexicographically largest; s_lambda has
  // leading monomial x^lambda and only lexicographically smaller terms.
  while (!rest.is_zero()) {
    const auto [lead, c] = *rest.terms().begin();
    out.emplace(lead, c);
    const auto s = schur(normalize(lead), p.num_vars());
    for (const auto& [key, k] : s.terms()) rest.add(key, -c * k);
  }
  return out;
}

std::map<Partition, BigInt, GradedOrder> schur_expand(const RawPoly& raw) { return schur_expand(symmetrize(raw)); }

std::string to_text(const TruncatedSymPoly& p) {
  std::ostringstream out;
  out << "poly vars=" << p.num_vars() << " degree=" << p.degree_bound() << ' '
      << (p.degree_complete() ? "complete" : "truncated") << '\n';
  for (const auto& [key, c] : p.terms()) out << '[' << (key.empty() ? "" : key.to_string()) << "] " << c << '\n';
  return out.str();
}

namespace {

int parse_int_field(std::string_view token, std::string_view prefix) {
  if (token.substr(0, prefix.size()) != prefix) throw ParseError("expected " + std::string(prefix), std::string(token));
  token.remove_prefix(prefix.size());
  int v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) throw ParseError("expected an integer", std::string(token));
  return v;
}

}  // namespace

TruncatedSymPoly parse_poly_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string head, vars, degree, flag;
  in >> head >> vars >> degree >> flag;
  if (head != "poly") throw ParseError("expected a poly header", head);
  if (flag != "complete" && flag != "truncated") throw ParseError("expected complete or truncated", flag);
  TruncatedSymPoly p(parse_int_field(vars, "vars="), parse_int_field(degree, "degree="), flag == "complete");
  std::string key, coeff;
  while (in >> key >> coeff) {
    if (key.size() < 2 || key.front() != '[' || key.back() != ']') throw ParseError("expected [partition]", key);
    BigInt c;
    try {
      c = BigInt(coeff);
    } catch (const std::exception&) {
      throw ParseError("expected an integer coefficient", coeff);
    }
    p.add(parse_partition(std::string_view(key).substr(1, key.size() - 2)), c);
  }
  return p;
}

std::string to_json(const TruncatedSymPoly& p) {
  nlohmann::ordered_json j;
  j["num_vars"] = p.num_vars();
  j["degree_bound"] = p.degree_bound();
  j["degree_complete"] = p.degree_complete();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [key, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["partition"] = std::vector<int>(key.parts().begin(), key.parts().end());
    t["coefficient"] = c.str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

}  // namespace skewsym
