#include "skewsym/tableaux.hpp"

#include <algorithm>

namespace skewsym {

std::string to_string(FillingKind kind) {
  switch (kind) {
    case FillingKind::SSYT: return "ssyt";
    case FillingKind::SetValued: return "svt";
    case FillingKind::RPP: return "rpp";
  }
  return "?";
}

EntrySet EntrySet::of(std::span<const int> values) {
  EntrySet s;
  for (int v : values) {
    if (v < 1 || v > kMaxValue) throw InvalidArg("entries must lie in 1..63");
    s.insert(v);
  }
  return s;
}

std::vector<int> EntrySet::values() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

CellLayout::CellLayout(const SkewShape& shape) {
  for (int c = 1; c <= shape.cols(); ++c) {
    for (int r = shape.col_top(c); r <= shape.col_bottom(c); ++r) {
      Cell cell{r, c, -1, -1};
      if (shape.contains_cell(r, c - 1)) cell.left = index_of(r, c - 1);
      if (r > shape.col_top(c)) cell.above = static_cast<int>(cells.size()) - 1;
      cells.push_back(cell);
    }
  }
}

int CellLayout::index_of(int row, int col) const {
  // Cells are sorted by (col, row).
  const auto it = std::lower_bound(cells.begin(), cells.end(), std::pair{col, row},
                                   [](const Cell& c, std::pair<int, int> key) {
                                     return std::pair{c.col, c.row} < key;
                                   });
  if (it == cells.end() || it->row != row || it->col != col) return -1;
  return static_cast<int>(it - cells.begin());
}

Filling::Filling(SkewShape shape, FillingKind kind)
    : shape_(std::move(shape)), kind_(kind), layout_(std::make_shared<const CellLayout>(shape_)),
      entries_(layout_->cells.size()) {}

Filling Filling::from_rows(SkewShape shape, FillingKind kind, const std::vector<std::vector<std::vector<int>>>& rows) {
  Filling f(std::move(shape), kind);
  const SkewShape& s = f.shape();
  if (static_cast<int>(rows.size()) != s.rows()) throw InvalidArg("row count does not match the shape");
  for (int r = 1; r <= s.rows(); ++r) {
    const auto& row = rows[static_cast<std::size_t>(r - 1)];
    if (static_cast<int>(row.size()) != s.row_end(r) - s.row_start(r)) throw InvalidArg("row length does not match the shape");
    for (std::size_t k = 0; k < row.size(); ++k) {
      const int c = s.row_start(r) + 1 + static_cast<int>(k);
      const EntrySet e = EntrySet::of(row[k]);
      if (e.empty()) throw InvalidArg("cells must be nonempty");
      if (kind != FillingKind::SetValued && e.size() != 1) throw InvalidArg("only set-valued tableaux may hold several entries");
      f.entries_[static_cast<std::size_t>(f.layout_->index_of(r, c))] = e;
    }
  }
  if (!f.valid()) throw InvalidArg("filling violates the row/column ordering rules");
  return f;
}

EntrySet Filling::at(int row, int col) const {
  const int i = layout_->index_of(row, col);
  if (i < 0) throw InvalidArg("cell outside the shape");
  return entries_[static_cast<std::size_t>(i)];
}

int Filling::size() const noexcept {
  int total = 0;
  for (EntrySet e : entries_) total += e.size();
  return total;
}

bool Filling::valid() const {
  const auto& cells = layout_->cells;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const EntrySet e = entries_[i];
    if (e.empty() || e.min() < 1) return false;
    if (kind_ != FillingKind::SetValued && e.size() != 1) return false;
    if (cells[i].left >= 0 && entries_[static_cast<std::size_t>(cells[i].left)].max() > e.min()) return false;
    if (cells[i].above >= 0) {
      const int up = entries_[static_cast<std::size_t>(cells[i].above)].max();
      if (kind_ == FillingKind::RPP ? up > e.min() : up >= e.min()) return false;
    }
  }
  return true;
}

std::string Filling::to_string() const {
  std::string out;
  for (int r = 1; r <= shape_.rows(); ++r) {
    if (r > 1) out += " / ";
    for (int c = shape_.row_start(r) + 1; c <= shape_.row_end(r); ++c) {
      if (c > shape_.row_start(r) + 1) out += ' ';
      const auto vals = at(r, c).values();
      for (std::size_t k = 0; k < vals.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(vals[k]);
      }
    }
  }
  return out;
}

ExponentVector weight(const Filling& f) {
  std::vector<int> exps;
  auto bump = [&](int v) {
    if (exps.size() < static_cast<std::size_t>(v)) exps.resize(static_cast<std::size_t>(v), 0);
    ++exps[static_cast<std::size_t>(v - 1)];
  };
  const SkewShape& s = f.shape();
  if (f.kind() == FillingKind::RPP) {
    for (int c = 1; c <= s.cols(); ++c) {
      EntrySet seen;
      for (int r = s.col_top(c); r <= s.col_bottom(c); ++r) seen.insert(f.value(r, c));
      for (int v : seen.values()) bump(v);
    }
  } else {
    for (EntrySet e : f.entries())
      for (int v : e.values()) bump(v);
  }
  return ExponentVector(std::move(exps));
}

namespace detail {

void check_bounds(const EnumerationBounds& bounds) {
  if (bounds.max_entry < 0 || bounds.max_entry > EntrySet::kMaxValue) throw InvalidBound("max_entry must lie in 0..63");
  if (bounds.max_degree < 0) throw InvalidBound("max_degree must be nonnegative");
}

}  // namespace detail

long long count_by_content(const SkewShape& shape, FillingKind kind, const ExponentVector& content) {
  const auto exps = content.exponents();
  EnumerationBounds bounds{.max_entry = content.num_vars(),
                           .max_degree = content.degree(),
                           .content_cap = std::vector<int>(exps.begin(), exps.end())};
  long long count = 0;
  const int target = content.degree();
  enumerate_weighted(shape, kind, bounds, [&](const Filling&, std::span<const int> counts) {
    int degree = 0;
    for (int c : counts) degree += c;
    if (degree == target) ++count;
  });
  if (kind == FillingKind::SetValued && (target - shape.cells()) % 2 != 0) count = -count;
  return count;
}

namespace {

bool cuts_compatible(const SkewShape& s, int c, int cut_left, int cut_right) {
  // A 1 at (r, c+1) forces a 1 at (r, c) for every row shared by both columns.
  const int lo = std::max(s.col_top(c), s.col_top(c + 1));
  const int hi = std::min(s.col_bottom(c), s.col_bottom(c + 1));
  for (int r = lo; r <= hi; ++r)
    if (r <= cut_right && r > cut_left) return false;
  return true;
}

}  // namespace

LatticePath::LatticePath(SkewShape shape, std::vector<int> cuts) : shape_(std::move(shape)), cuts_(std::move(cuts)) {
  if (static_cast<int>(cuts_.size()) != shape_.cols()) throw InvalidArg("one cut per column is required");
  for (int c = 1; c <= shape_.cols(); ++c) {
    const int h = cut(c);
    if (h < shape_.col_top(c) - 1 || h > shape_.col_bottom(c)) throw InvalidArg("cut lies outside its column");
    if (c > 1 && !cuts_compatible(shape_, c - 1, cut(c - 1), h)) throw InvalidArg("cuts do not form a monotone path");
  }
}

std::vector<std::pair<int, int>> LatticePath::interior_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int c = 1; c <= shape_.cols(); ++c) {
    const int h = cut(c);
    if (h > shape_.col_top(c) - 1 && h < shape_.col_bottom(c)) out.emplace_back(h, c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticePath rpp12_to_path(const Filling& f) {
  if (f.kind() != FillingKind::RPP) throw InvalidArg("expected a reverse plane partition");
  const SkewShape& s = f.shape();
  std::vector<int> cuts;
  for (int c = 1; c <= s.cols(); ++c) {
    int ones = 0;
    for (int r = s.col_top(c); r <= s.col_bottom(c); ++r) {
      const int v = f.value(r, c);
      if (v != 1 && v != 2) throw InvalidArg("expected entries in {1, 2}");
      ones += v == 1;
    }
    // 1's sit on top of the 2's; the path runs below the last 1.
    cuts.push_back(s.col_top(c) - 1 + ones);
  }
  return LatticePath(s, std::move(cuts));
}

Filling path_to_rpp12(const LatticePath& p) {
  const SkewShape& s = p.shape();
  Filling f(s, FillingKind::RPP);
  const auto& cells = f.layout().cells;
  for (std::size_t i = 0; i < cells.size(); ++i)
    f.set(i, EntrySet::single(cells[i].row <= p.cut(cells[i].col) ? 1 : 2));
  return f;
}

std::vector<LatticePath> all_lattice_paths(const SkewShape& shape) {
  std::vector<LatticePath> out;
  std::vector<int> cuts;
  auto rec = [&](auto&& self, int c) -> void {
    if (c > shape.cols()) {
      out.emplace_back(shape, cuts);
      return;
    }
    for (int h = shape.col_top(c) - 1; h <= shape.col_bottom(c); ++h) {
      if (c > 1 && !cuts_compatible(shape, c - 1, cuts.back(), h)) continue;
      cuts.push_back(h);
      self(self, c + 1);
      cuts.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace skewsym
