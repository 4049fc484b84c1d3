#pragma once

// Truncated symmetric polynomials with exact integer coefficients, and the
// generating functions s, g and G of a skew shape.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "skewsym/monomial.hpp"
#include "skewsym/shapes.hpp"

namespace skewsym {

using BigInt = boost::multiprecision::cpp_int;

// Degree first, then lexicographically decreasing inside a degree, so the
// dominant monomial of each homogeneous part comes first.
struct GradedOrder {
  bool operator()(const Partition& a, const Partition& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  }
};

// A symmetric polynomial in x_1..x_m, stored as one coefficient per monomial
// orbit (keyed by the sorted exponent partition). Only terms of degree
// <= degree_bound are kept. degree_complete says whether the underlying
// series is known to have no terms above the bound; it is false for a
// genuinely truncated series such as G of a nonempty shape.
class TruncatedSymPoly {
 public:
  using Terms = std::map<Partition, BigInt, GradedOrder>;

  TruncatedSymPoly(int num_vars, int degree_bound, bool degree_complete);

  static TruncatedSymPoly constant(int num_vars, const BigInt& c);

  int num_vars() const noexcept { return num_vars_; }
  int degree_bound() const noexcept { return degree_bound_; }
  bool degree_complete() const noexcept { return complete_; }
  // Complete, and enough variables to pin down a symmetric function of the
  // bounded degree.
  bool determines_series() const noexcept { return complete_ && num_vars_ >= degree_bound_; }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // -1 for the zero polynomial.
  int max_degree() const noexcept;
  int min_degree() const noexcept;

  BigInt coefficient(const Partition& key) const;
  // Coefficient of an arbitrary monomial (0 if it needs more than num_vars variables).
  BigInt coefficient(const ExponentVector& monomial) const;

  // Adds c to the orbit `key`. Throws InvalidArg if the key has more than
  // num_vars parts or exceeds the degree bound.
  void add(const Partition& key, const BigInt& c);

  TruncatedSymPoly homogeneous_part(int degree) const;
  // Sets x_{k+1} = ... = x_m = 0 (k <= num_vars).
  TruncatedSymPoly restrict(int k) const;

  TruncatedSymPoly& operator+=(const TruncatedSymPoly& other);
  TruncatedSymPoly& operator-=(const TruncatedSymPoly& other);
  TruncatedSymPoly& operator*=(const BigInt& c);
  friend TruncatedSymPoly operator+(TruncatedSymPoly a, const TruncatedSymPoly& b) { return a += b; }
  friend TruncatedSymPoly operator-(TruncatedSymPoly a, const TruncatedSymPoly& b) { return a -= b; }
  friend TruncatedSymPoly operator*(TruncatedSymPoly a, const BigInt& c) { return a *= c; }

  friend bool operator==(const TruncatedSymPoly&, const TruncatedSymPoly&) = default;

 private:
  void check_compatible(const TruncatedSymPoly& other) const;

  int num_vars_;
  int degree_bound_;
  bool complete_;
  Terms terms_;
};

// Full (unsymmetrized) coefficient table, one entry per exponent vector.
struct RawPoly {
  int num_vars = 0;
  int degree_bound = 0;
  bool degree_complete = true;
  std::map<ExponentVector, BigInt> terms;
};

// Collapses a raw table to orbit keys. Throws NotSymmetric if some orbit is
// not constant or not fully present.
TruncatedSymPoly symmetrize(const RawPoly& raw);

// s over SSYT with entries <= m.
TruncatedSymPoly schur(const SkewShape& shape, int m);
// g over RPP with entries <= m; with max_degree set, only terms of degree
// <= max_degree are computed.
TruncatedSymPoly dual_grothendieck(const SkewShape& shape, int m, std::optional<int> max_degree = std::nullopt);
// G over set-valued tableaux with entries <= m and |T| <= D, with sign
// (-1)^(|T| - cells). Throws InvalidBound if D < cells.
TruncatedSymPoly grothendieck(const SkewShape& shape, int m, int D);

enum class PolyKind { Schur, DualGrothendieck, Grothendieck };
PolyKind parse_poly_kind(std::string_view text);  // "s", "g" or "G"
std::string to_string(PolyKind kind);

// The same generating functions without symmetrization.
RawPoly raw_generating_function(const SkewShape& shape, PolyKind kind, int m, int D);

struct Evidence {
  enum class Kind { Exact, PartialVars, PartialDegree };
  Kind kind = Kind::Exact;
  int bound = 0;  // variable count or degree for the partial kinds

  std::string to_string() const;  // "Exact", "PartialVars(5)", "PartialDegree(9)"
  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct EqualityVerdict {
  bool equal = false;
  Evidence evidence;
};

// Compares after restricting both sides to the smaller variable count.
// Throws IncomparableTruncation when the degree bounds differ and either
// side is a degree truncation.
EqualityVerdict equal(const TruncatedSymPoly& a, const TruncatedSymPoly& b);

// Coefficients c_nu with p = sum c_nu s_nu. Requires p complete with at
// least max_degree(p) variables (InvalidArg otherwise).
std::map<Partition, BigInt, GradedOrder> schur_expand(const TruncatedSymPoly& p);
// Same, starting from a raw table (throws NotSymmetric via symmetrize).
std::map<Partition, BigInt, GradedOrder> schur_expand(const RawPoly& raw);

// Line-oriented form:
//   poly vars=4 degree=9 complete|truncated
//   [2,1] 3
//   ...
std::string to_text(const TruncatedSymPoly& p);
TruncatedSymPoly parse_poly_text(std::string_view text);
// {"num_vars":..,"degree_bound":..,"degree_complete":..,"terms":[{"partition":[..],"coefficient":".."}]}
std::string to_json(const TruncatedSymPoly& p);

}  // namespace skewsym
