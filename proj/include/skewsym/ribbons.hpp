#pragma once

// Ribbons (connected skew shapes without a 2x2 square) as compositions, the
// products ., near-concatenation and composition, irreducible
// factorizations and the Schur/g equivalence deciders for ribbons.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewsym/polynomials.hpp"
#include "skewsym/shapes.hpp"

namespace skewsym {

// Row reading (alpha_1, ..., alpha_k): row lengths from the bottom row to the
// top row. The column reading [a_1, ..., a_n] lists column heights from left
// to right.
class Ribbon {
 public:
  // Throws InvalidArg on an empty list or a nonpositive part.
  explicit Ribbon(std::vector<int> rows);
  static Ribbon from_columns(const std::vector<int>& cols);

  const std::vector<int>& rows() const noexcept { return rows_; }
  std::vector<int> columns() const;
  int size() const noexcept;
  int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
  int num_cols() const noexcept { return size() - num_rows() + 1; }
  bool single_row() const noexcept { return rows_.size() == 1; }
  bool single_column() const noexcept;

  std::string to_string() const;          // "(6,5,3)"
  std::string columns_string() const;     // "[1,1,1,1,1,2,1,1,1,2,1,1]"

  friend bool operator==(const Ribbon&, const Ribbon&) = default;
  friend auto operator<=>(const Ribbon&, const Ribbon&) = default;

 private:
  std::vector<int> rows_;
};

Ribbon concat(const Ribbon& a, const Ribbon& b);
Ribbon near_concat(const Ribbon& a, const Ribbon& b);
Ribbon power(const Ribbon& a, int k);  // a near-concatenated with itself k times
Ribbon compose(const Ribbon& a, const Ribbon& b);
Ribbon reverse(const Ribbon& a);

SkewShape shape_of(const Ribbon& a);
// The row reading of a ribbon-shaped skew shape, or nothing.
std::optional<Ribbon> ribbon_view(const SkewShape& s);

// "(6,5,3)" or "[1,1,2]"; throws ParseError.
Ribbon parse_ribbon(std::string_view text);

// All ribbons of the given size in lexicographic order of row readings.
std::vector<Ribbon> ribbons_of_size(int size);

bool is_trivial_factorization(const Ribbon& left, const Ribbon& right);
// A nontrivial split a = left o right, if any. Candidates are tried with the
// right factor's size increasing, then lexicographically.
std::optional<std::pair<Ribbon, Ribbon>> nontrivial_split(const Ribbon& a);

struct Factorization {
  std::vector<Ribbon> factors;

  Ribbon composed() const;
  std::string to_string() const;  // "(1,2) o (2,1)"
};

Factorization irreducible_factorization(const Ribbon& a);
// No adjacent trivial pair and no factor with a nontrivial split.
bool is_irreducible(const Factorization& f);

bool schur_equivalent(const Ribbon& a, const Ribbon& b);
bool g_equivalent(const Ribbon& a, const Ribbon& b);

// prod_i C(a_i - 1, a_i - c_i) over column readings; 0 unless c <= a
// componentwise with the same number of columns.
BigInt g_schur_coefficient(const Ribbon& a, const Ribbon& c);
// Every (c, coefficient) with nonzero coefficient, c in lexicographic order
// of column readings, largest first.
std::vector<std::pair<Ribbon, BigInt>> ribbon_schur_expansion(const Ribbon& a);

}  // namespace skewsym
