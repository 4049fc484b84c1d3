#pragma once

// Partitions, skew shapes and the shape-level invariants used by the
// equivalence filters (bottlenecks, row overlaps, rotation, transpose).
//
// Rows are numbered from the top and columns from the left, both starting
// at 1, matching English-notation Young diagrams.

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skewsym {

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped. Throws InvalidShape on negative or
  // increasing parts.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  // 0-based part access, zero-padded past the stored length.
  int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;
  bool contains(const Partition& other) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// A skew shape lambda/mu kept in normal form: no empty rows and no empty
// columns, so translated or padded copies of the same diagram compare equal.
// Instances are only produced by `normalize` and the shape operations.
class SkewShape {
 public:
  SkewShape() = default;  // the empty shape

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }

  int rows() const noexcept { return outer_.length(); }
  int cols() const noexcept { return outer_.part(0); }
  int cells() const noexcept { return outer_.size() - inner_.size(); }
  bool empty() const noexcept { return cells() == 0; }

  // Row r (1-based) occupies columns row_start(r)+1 .. row_end(r).
  int row_start(int r) const noexcept { return inner_.part(static_cast<std::size_t>(r - 1)); }
  int row_end(int r) const noexcept { return outer_.part(static_cast<std::size_t>(r - 1)); }
  // Column c (1-based) occupies rows col_top(c) .. col_bottom(c).
  int col_top(int c) const noexcept;
  int col_bottom(int c) const noexcept;
  int col_height(int c) const noexcept { return col_bottom(c) - col_top(c) + 1; }

  bool contains_cell(int r, int c) const noexcept;
  // Edge-connected (the empty shape counts as connected).
  bool connected() const noexcept;

  // "6,3,1/3,1"; the empty shape prints as "0".
  std::string to_string() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape& a, const SkewShape& b) {
    if (auto c = a.outer_ <=> b.outer_; c != 0) return c;
    return a.inner_ <=> b.inner_;
  }

 private:
  friend SkewShape normalize(const Partition&, const Partition&);
  Partition outer_;
  Partition inner_;
  std::vector<int> outer_conj_;
  std::vector<int> inner_conj_;
};

// Canonical form of raw_outer/raw_inner: empty rows and empty columns are
// deleted. Throws InvalidShape when raw_inner does not fit inside raw_outer.
SkewShape normalize(const Partition& raw_outer, const Partition& raw_inner = Partition{});

SkewShape rotate180(const SkewShape& s);
SkewShape transpose(const SkewShape& s);

struct BottleneckProfile {
  // b[i-1] = number of bottleneck edges in column i, i = 1..n.
  std::vector<int> b;
  // wide[w][i-1] = number of width-w bottlenecks in position i, i = 1..n-w+1.
  std::map<int, std::vector<int>> wide;
  // pair_sums[i-1] = b_i + b_{n-i+1} for i = 1..ceil(n/2); the middle
  // entry is b_k alone when n is odd.
  std::vector<int> pair_sums;
  // overlaps[k] = row overlap composition r^(k), k = 2..m.
  std::map<int, std::vector<int>> overlaps;

  int total() const noexcept;
  int sum_of_squares() const noexcept;
};

// Width-w bottleneck counts for one width (w = 1 gives b).
std::vector<int> bottlenecks(const SkewShape& s, int width = 1);
std::vector<int> row_overlap(const SkewShape& s, int k);
std::vector<int> pair_sums(std::span<const int> b);

// Throws InvalidArg unless 1 <= max_width <= max(1, n).
BottleneckProfile bottleneck_profile(const SkewShape& s, int max_width = 2);

// Text syntax. "5,3,1" is a partition; "6,3,1/3,1" a skew shape (the inner
// part is optional). Throws ParseError naming the offending token.
Partition parse_partition(std::string_view text);
SkewShape parse_shape(std::string_view text);

}  // namespace skewsym
