#pragma once

// Exhaustive enumeration of semistandard, set-valued and reverse-plane-
// partition fillings of a skew shape with bounded entries.
//
// Cells are visited in column-major order (left column first, top to bottom
// inside a column), so the left and upper neighbours of a cell are always
// filled before it. Candidates for each cell are tried in increasing
// lexicographic order, hence every enumerator emits fillings in
// lexicographic order of their flattened (column-major) contents.
//
// Enumerators are callback streams: the visitor sees a reference to a
// filling that is mutated in place after the callback returns, so copy it
// if it must outlive the call.

#include <bit>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewsym/errors.hpp"
#include "skewsym/monomial.hpp"
#include "skewsym/shapes.hpp"

namespace skewsym {

enum class FillingKind { SSYT, SetValued, RPP };

std::string to_string(FillingKind kind);

// A set of entries drawn from 1..63, stored as a bit mask.
class EntrySet {
 public:
  static constexpr int kMaxValue = 63;

  constexpr EntrySet() = default;
  static constexpr EntrySet single(int v) noexcept { return EntrySet(std::uint64_t{1} << v); }
  static EntrySet of(std::span<const int> values);

  constexpr bool empty() const noexcept { return bits_ == 0; }
  int size() const noexcept { return std::popcount(bits_); }
  int min() const noexcept { return std::countr_zero(bits_); }
  int max() const noexcept { return 63 - std::countl_zero(bits_); }
  bool contains(int v) const noexcept { return v >= 0 && v <= kMaxValue && ((bits_ >> v) & 1U); }
  std::vector<int> values() const;
  std::uint64_t bits() const noexcept { return bits_; }

  void insert(int v) noexcept { bits_ |= std::uint64_t{1} << v; }
  void erase(int v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }

  friend constexpr bool operator==(EntrySet, EntrySet) = default;

 private:
  constexpr explicit EntrySet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

// Column-major cell order of a shape together with neighbour indices.
struct CellLayout {
  struct Cell {
    int row;
    int col;
    int left;   // index of (row, col-1) or -1
    int above;  // index of (row-1, col) or -1
  };
  std::vector<Cell> cells;

  explicit CellLayout(const SkewShape& shape);
  int index_of(int row, int col) const;
};

class Filling {
 public:
  Filling(SkewShape shape, FillingKind kind);

  // Builds a filling from rows listed top to bottom, each row's cells left to
  // right, each cell a list of entries. Throws InvalidArg if the data does
  // not match the shape or violates the ordering rules of `kind`.
  static Filling from_rows(SkewShape shape, FillingKind kind, const std::vector<std::vector<std::vector<int>>>& rows);

  const SkewShape& shape() const noexcept { return shape_; }
  FillingKind kind() const noexcept { return kind_; }
  const CellLayout& layout() const noexcept { return *layout_; }

  std::span<const EntrySet> entries() const noexcept { return entries_; }
  EntrySet at(int row, int col) const;
  // Entry of a single-valued cell.
  int value(int row, int col) const { return at(row, col).min(); }

  // |T|: the number of entries summed over all cells.
  int size() const noexcept;
  bool valid() const;

  // Rows separated by '/', cells by ' ', set entries by ','.
  std::string to_string() const;

  void set(std::size_t index, EntrySet e) noexcept { entries_[index] = e; }

  friend bool operator==(const Filling& a, const Filling& b) {
    return a.kind_ == b.kind_ && a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }

 private:
  SkewShape shape_;
  FillingKind kind_;
  std::shared_ptr<const CellLayout> layout_;
  std::vector<EntrySet> entries_;
};

// x^T for tableaux (every occurrence counts) and x^P for reverse plane
// partitions (each column counts a value once).
ExponentVector weight(const Filling& f);

struct EnumerationBounds {
  int max_entry = 1;
  // Cap on the weight degree (|T| for set-valued tableaux).
  int max_degree = std::numeric_limits<int>::max();
  // Optional per-value cap on the weight: content_cap[v-1] bounds the
  // exponent of x_v. Empty means no cap.
  std::vector<int> content_cap;
};

namespace detail {

template <FillingKind Kind, class Visitor>
class Enumerator {
 public:
  Enumerator(const SkewShape& shape, const EnumerationBounds& bounds, Visitor& visitor)
      : filling_(shape, Kind), cells_(filling_.layout().cells), bounds_(bounds), visitor_(visitor),
        counts_(static_cast<std::size_t>(bounds.max_entry) + 1, 0) {
    // min_rest_[i]: least weight degree still to be added once cells [i, end) are filled
    min_rest_.assign(cells_.size() + 1, 0);
    for (std::size_t i = cells_.size(); i-- > 0;) {
      const bool adds = Kind != FillingKind::RPP || cells_[i].above < 0;
      min_rest_[i] = min_rest_[i + 1] + (adds ? 1 : 0);
    }
    cap_.assign(counts_.size(), std::numeric_limits<int>::max());
    for (std::size_t v = 0; v < bounds.content_cap.size() && v + 1 < cap_.size(); ++v)
      cap_[v + 1] = bounds.content_cap[v];
  }

  void run() {
    if (min_rest_[0] > bounds_.max_degree) return;
    place(0);
  }

 private:
  void place(std::size_t idx) {
    if (idx == cells_.size()) {
      visitor_(static_cast<const Filling&>(filling_), std::span<const int>(counts_).subspan(1));
      return;
    }
    const auto& cell = cells_[idx];
    const auto entries = filling_.entries();
    int lo = 1;
    if (cell.left >= 0) lo = std::max(lo, entries[static_cast<std::size_t>(cell.left)].max());
    if (cell.above >= 0) {
      const int up = entries[static_cast<std::size_t>(cell.above)].max();
      lo = std::max(lo, Kind == FillingKind::RPP ? up : up + 1);
    }
    if constexpr (Kind == FillingKind::SetValued) {
      for (int v = lo; v <= bounds_.max_entry; ++v) {
        EntrySet set = EntrySet::single(v);
        extend_set(idx, set, v);
      }
    } else {
      const int up = cell.above >= 0 ? entries[static_cast<std::size_t>(cell.above)].min() : 0;
      for (int v = lo; v <= bounds_.max_entry; ++v) {
        const bool fresh = Kind != FillingKind::RPP || v != up;
        const std::size_t vi = static_cast<std::size_t>(v);
        if (fresh) {
          if (counts_[vi] + 1 > cap_[vi] || degree_ + 1 + min_rest_[idx + 1] > bounds_.max_degree) continue;
          ++counts_[vi];
          ++degree_;
        }
        filling_.set(idx, EntrySet::single(v));
        place(idx + 1);
        if (fresh) {
          --counts_[vi];
          --degree_;
        }
      }
    }
  }

  // Emits `set` (whose largest element is `last`), then every extension of
  // it by larger elements, in lexicographic order.
  void extend_set(std::size_t idx, EntrySet& set, int last) {
    const std::size_t vi = static_cast<std::size_t>(last);
    if (counts_[vi] + 1 > cap_[vi] || degree_ + 1 + min_rest_[idx + 1] > bounds_.max_degree) return;
    ++counts_[vi];
    ++degree_;
    filling_.set(idx, set);
    place(idx + 1);
    for (int u = last + 1; u <= bounds_.max_entry; ++u) {
      set.insert(u);
      extend_set(idx, set, u);
      set.erase(u);
    }
    --counts_[vi];
    --degree_;
  }

  Filling filling_;
  const std::vector<CellLayout::Cell>& cells_;
  const EnumerationBounds& bounds_;
  Visitor& visitor_;
  std::vector<int> counts_;  // counts_[v] = exponent of x_v so far
  std::vector<int> cap_;
  std::vector<int> min_rest_;
  int degree_ = 0;
};

void check_bounds(const EnumerationBounds& bounds);

}  // namespace detail

// Core stream: visits every filling of `kind` within `bounds`. The visitor is
// called as visitor(const Filling&, std::span<const int> counts) where
// counts[v-1] is the exponent of x_v in the filling's weight.
template <class Visitor>
void enumerate_weighted(const SkewShape& shape, FillingKind kind, const EnumerationBounds& bounds, Visitor&& visitor) {
  detail::check_bounds(bounds);
  switch (kind) {
    case FillingKind::SSYT:
      detail::Enumerator<FillingKind::SSYT, std::remove_reference_t<Visitor>>(shape, bounds, visitor).run();
      break;
    case FillingKind::SetValued:
      detail::Enumerator<FillingKind::SetValued, std::remove_reference_t<Visitor>>(shape, bounds, visitor).run();
      break;
    case FillingKind::RPP:
      detail::Enumerator<FillingKind::RPP, std::remove_reference_t<Visitor>>(shape, bounds, visitor).run();
      break;
  }
}

template <class Visitor>
void enumerate_rpp(const SkewShape& shape, int max_entry, Visitor&& visit) {
  enumerate_weighted(shape, FillingKind::RPP, {.max_entry = max_entry, .max_degree = std::numeric_limits<int>::max(), .content_cap = {}},
                     [&](const Filling& f, std::span<const int>) { visit(f); });
}

template <class Visitor>
void enumerate_ssyt(const SkewShape& shape, int max_entry, Visitor&& visit) {
  enumerate_weighted(shape, FillingKind::SSYT, {.max_entry = max_entry, .max_degree = std::numeric_limits<int>::max(), .content_cap = {}},
                     [&](const Filling& f, std::span<const int>) { visit(f); });
}

// Set-valued tableaux with entries <= max_entry and |T| <= max_size. Throws
// InvalidBound when max_size < cells(shape).
template <class Visitor>
void enumerate_svt(const SkewShape& shape, int max_entry, int max_size, Visitor&& visit) {
  if (max_size < shape.cells()) throw InvalidBound("max_size is smaller than the number of cells");
  enumerate_weighted(shape, FillingKind::SetValued, {.max_entry = max_entry, .max_degree = max_size, .content_cap = {}},
                     [&](const Filling& f, std::span<const int>) { visit(f); });
}

// Number of fillings of `kind` whose weight is exactly `content`, with signs
// (-1)^(|T|-cells) for set-valued tableaux. This is the brute-force
// coefficient oracle used to check closed-form formulas.
long long count_by_content(const SkewShape& shape, FillingKind kind, const ExponentVector& content);

// A monotone lattice path from the upper-right to the lower-left corner of a
// shape. cut(c) is the height of the path's horizontal step in column c:
// the step lies below row cut(c), so cut(c) ranges over
// col_top(c)-1 .. col_bottom(c).
class LatticePath {
 public:
  // Throws InvalidArg if the cuts do not describe a path inside the shape.
  LatticePath(SkewShape shape, std::vector<int> cuts);

  const SkewShape& shape() const noexcept { return shape_; }
  std::span<const int> cuts() const noexcept { return cuts_; }
  int cut(int col) const { return cuts_.at(static_cast<std::size_t>(col - 1)); }

  // (height, column) of every horizontal step strictly between the top and
  // bottom boundary of its column, sorted.
  std::vector<std::pair<int, int>> interior_edges() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  SkewShape shape_;
  std::vector<int> cuts_;
};

// Throws InvalidArg unless f is an RPP with entries in {1, 2}.
LatticePath rpp12_to_path(const Filling& f);
Filling path_to_rpp12(const LatticePath& p);

// Every lattice path of the shape, in lexicographic order of the cuts.
std::vector<LatticePath> all_lattice_paths(const SkewShape& shape);

}  // namespace skewsym
