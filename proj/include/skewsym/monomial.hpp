#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewsym/shapes.hpp"

namespace skewsym {

// Exponents of x_1, x_2, ... with trailing zeros trimmed, so equal monomials
// have equal representations.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> exps);

  // Multiplicity of x_i, i >= 1.
  int operator[](int i) const noexcept;
  std::span<const int> exponents() const noexcept { return exps_; }
  int num_vars() const noexcept { return static_cast<int>(exps_.size()); }
  int degree() const noexcept;
  // Number of variables with a positive exponent.
  int support() const noexcept;

  // Exponents weakly decreasing with no interior zero, i.e. the vector is
  // already the representative of its symmetric orbit.
  bool is_partition() const noexcept;
  // The orbit representative: positive exponents sorted decreasingly.
  Partition sorted() const;

  // "x1^2 x2 x4"; the constant monomial prints as "1".
  std::string to_string() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<int> exps_;
};

// Accepts "x1^6 x2^6 x3^3 x4", "x1^2*x2", or "1". Repeated variables add up.
ExponentVector parse_monomial(std::string_view text);

}  // namespace skewsym
