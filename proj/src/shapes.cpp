#include "skewsym/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "skewsym/errors.hpp"

namespace skewsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidShape("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidShape("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> conj(static_cast<std::size_t>(part(0)), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.parts_.size(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

int SkewShape::col_top(int c) const noexcept {
  const auto i = static_cast<std::size_t>(c - 1);
  return (i < inner_conj_.size() ? inner_conj_[i] : 0) + 1;
}

int SkewShape::col_bottom(int c) const noexcept {
  const auto i = static_cast<std::size_t>(c - 1);
  return i < outer_conj_.size() ? outer_conj_[i] : 0;
}

bool SkewShape::contains_cell(int r, int c) const noexcept {
  return r >= 1 && r <= rows() && c > row_start(r) && c <= row_end(r);
}

bool SkewShape::connected() const noexcept {
  // Rows are intervals; consecutive rows are glued iff their intervals share
  // a column, and every other adjacency passes through consecutive rows.
  for (int r = 1; r < rows(); ++r)
    if (row_end(r + 1) <= row_start(r)) return false;
  return true;
}

std::string SkewShape::to_string() const {
  if (empty()) return "0";
  if (inner_.empty()) return outer_.to_string();
  return outer_.to_string() + "/" + inner_.to_string();
}

SkewShape normalize(const Partition& raw_outer, const Partition& raw_inner) {
  if (!raw_outer.contains(raw_inner)) throw InvalidShape("inner partition does not fit inside outer partition");

  std::vector<std::pair<int, int>> intervals;  // (start, end] per nonempty row
  for (int i = 0; i < raw_outer.length(); ++i) {
    const int lo = raw_inner.part(static_cast<std::size_t>(i));
    const int hi = raw_outer.part(static_cast<std::size_t>(i));
    if (hi > lo) intervals.emplace_back(lo, hi);
  }
  SkewShape s;
  if (intervals.empty()) return s;

  const int width = raw_outer.part(0);
  std::vector<int> occupied(static_cast<std::size_t>(width) + 1, 0);
  for (auto [lo, hi] : intervals)
    for (int c = lo + 1; c <= hi; ++c) occupied[static_cast<std::size_t>(c)] = 1;
  // renum[c] = number of occupied columns <= c
  std::vector<int> renum(occupied.size(), 0);
  for (std::size_t c = 1; c < occupied.size(); ++c) renum[c] = renum[c - 1] + occupied[c];

  std::vector<int> outer, inner;
  for (auto [lo, hi] : intervals) {
    outer.push_back(renum[static_cast<std::size_t>(hi)]);
    inner.push_back(renum[static_cast<std::size_t>(lo)]);
  }
  s.outer_ = Partition(std::move(outer));
  s.inner_ = Partition(std::move(inner));
  const Partition oc = s.outer_.conjugate();
  const Partition ic = s.inner_.conjugate();
  s.outer_conj_.assign(oc.parts().begin(), oc.parts().end());
  s.inner_conj_.assign(ic.parts().begin(), ic.parts().end());
  return s;
}

SkewShape rotate180(const SkewShape& s) {
  const int m = s.rows();
  const int width = s.cols();
  std::vector<int> outer(static_cast<std::size_t>(m)), inner(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    outer[static_cast<std::size_t>(i - 1)] = width - s.row_start(m - i + 1);
    inner[static_cast<std::size_t>(i - 1)] = width - s.row_end(m - i + 1);
  }
  return normalize(Partition(std::move(outer)), Partition(std::move(inner)));
}

SkewShape transpose(const SkewShape& s) {
  return normalize(s.outer().conjugate(), s.inner().conjugate());
}

int BottleneckProfile::total() const noexcept { return std::accumulate(b.begin(), b.end(), 0); }

int BottleneckProfile::sum_of_squares() const noexcept {
  int acc = 0;
  for (int x : b) acc += x * x;
  return acc;
}

std::vector<int> bottlenecks(const SkewShape& s, int width) {
  const int n = s.cols();
  const int m = s.rows();
  if (width < 1) throw InvalidArg("bottleneck width must be positive");
  std::vector<int> out(static_cast<std::size_t>(std::max(0, n - width + 1)), 0);
  // Row pair (j, j+1) contributes to position i when mu_j = i-1 and
  // lambda_{j+1} = i+w-1.
  for (int j = 1; j <= m - 1; ++j) {
    const int i = s.row_start(j) + 1;
    if (s.row_end(j + 1) == i + width - 1 && i <= n - width + 1) ++out[static_cast<std::size_t>(i - 1)];
  }
  return out;
}

std::vector<int> row_overlap(const SkewShape& s, int k) {
  const int m = s.rows();
  std::vector<int> out;
  for (int i = 1; i + k - 1 <= m; ++i) out.push_back(std::max(0, s.row_end(i + k - 1) - s.row_start(i)));
  return out;
}

std::vector<int> pair_sums(std::span<const int> b) {
  const auto n = b.size();
  const auto k = (n + 1) / 2;
  std::vector<int> f(k);
  for (std::size_t i = 0; i < k; ++i) f[i] = (i == n - 1 - i) ? b[i] : b[i] + b[n - 1 - i];
  return f;
}

BottleneckProfile bottleneck_profile(const SkewShape& s, int max_width) {
  if (max_width < 1 || max_width > std::max(1, s.cols()))
    throw InvalidArg("max_width must lie in [1, number of columns]");
  BottleneckProfile p;
  p.b = bottlenecks(s, 1);
  for (int w = 1; w <= max_width; ++w) p.wide[w] = bottlenecks(s, w);
  p.pair_sums = pair_sums(p.b);
  for (int k = 2; k <= s.rows(); ++k) p.overlaps[k] = row_overlap(s, k);
  return p;
}

namespace {

std::string_view trim(std::string_view t) {
  while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
  while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.remove_suffix(1);
  return t;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  text = trim(text);
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    const auto token = trim(text.substr(pos, end - pos));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
      throw ParseError("expected a nonnegative integer part", std::string(token));
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const InvalidShape&) {
    throw ParseError("parts must be weakly decreasing", std::string(text));
  }
}

SkewShape parse_shape(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty shape", std::string(text));
  const auto slash = text.find('/');
  const Partition outer = parse_partition(text.substr(0, slash));
  const Partition inner = slash == std::string_view::npos ? Partition{} : parse_partition(text.substr(slash + 1));
  try {
    return normalize(outer, inner);
  } catch (const InvalidShape&) {
    throw ParseError("inner partition does not fit inside outer", std::string(text));
  }
}

}  // namespace skewsym
