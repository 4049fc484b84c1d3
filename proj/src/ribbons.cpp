#include "skewsym/ribbons.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "skewsym/errors.hpp"

namespace skewsym {

namespace {

// Lengths of the runs produced by stacking `parts` so that consecutive
// parts overlap in exactly one position; this turns a row reading into a
// column reading and back.
std::vector<int> dual_reading(const std::vector<int>& parts) {
  int start = 0;
  std::vector<int> counts;
  for (int p : parts) {
    if (static_cast<int>(counts.size()) < start + p) counts.resize(static_cast<std::size_t>(start + p), 0);
    for (int i = start; i < start + p; ++i) ++counts[static_cast<std::size_t>(i)];
    start += p - 1;
  }
  return counts;
}

std::string join(const std::vector<int>& v, char open, char close) {
  std::string out(1, open);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + close;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Ribbon::Ribbon(std::vector<int> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw InvalidArg("a ribbon needs at least one row");
  for (int r : rows_)
    if (r <= 0) throw InvalidArg("ribbon rows must be positive");
}

Ribbon Ribbon::from_columns(const std::vector<int>& cols) {
  if (cols.empty()) throw InvalidArg("a ribbon needs at least one column");
  for (int c : cols)
    if (c <= 0) throw InvalidArg("ribbon columns must be positive");
  return Ribbon(dual_reading(cols));
}

std::vector<int> Ribbon::columns() const { return dual_reading(rows_); }

int Ribbon::size() const noexcept { return std::accumulate(rows_.begin(), rows_.end(), 0); }

bool Ribbon::single_column() const noexcept {
  return std::all_of(rows_.begin(), rows_.end(), [](int r) { return r == 1; });
}

std::string Ribbon::to_string() const { return join(rows_, '(', ')'); }

std::string Ribbon::columns_string() const { return join(columns(), '[', ']'); }

Ribbon concat(const Ribbon& a, const Ribbon& b) {
  std::vector<int> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return Ribbon(std::move(rows));
}

Ribbon near_concat(const Ribbon& a, const Ribbon& b) {
  std::vector<int> rows = a.rows();
  rows.back() += b.rows().front();
  rows.insert(rows.end(), b.rows().begin() + 1, b.rows().end());
  return Ribbon(std::move(rows));
}

Ribbon power(const Ribbon& a, int k) {
  if (k < 1) throw InvalidArg("near-concatenation power must be positive");
  Ribbon out = a;
  for (int i = 1; i < k; ++i) out = near_concat(out, a);
  return out;
}

Ribbon compose(const Ribbon& a, const Ribbon& b) {
  Ribbon out = power(b, a.rows().front());
  for (std::size_t i = 1; i < a.rows().size(); ++i) out = concat(out, power(b, a.rows()[i]));
  return out;
}

Ribbon reverse(const Ribbon& a) { return Ribbon(std::vector<int>(a.rows().rbegin(), a.rows().rend())); }

SkewShape shape_of(const Ribbon& a) {
  const auto& rows = a.rows();
  const std::size_t k = rows.size();
  std::vector<int> outer(k), inner(k);
  int start = 1;
  for (std::size_t j = 0; j < k; ++j) {
    outer[k - 1 - j] = start + rows[j] - 1;
    inner[k - 1 - j] = start - 1;
    start += rows[j] - 1;
  }
  return normalize(Partition(std::move(outer)), Partition(std::move(inner)));
}

std::optional<Ribbon> ribbon_view(const SkewShape& s) {
  if (s.empty()) return std::nullopt;
  for (int r = 1; r < s.rows(); ++r)
    if (s.row_end(r + 1) != s.row_start(r) + 1) return std::nullopt;
  std::vector<int> rows;
  for (int r = s.rows(); r >= 1; --r) rows.push_back(s.row_end(r) - s.row_start(r));
  return Ribbon(std::move(rows));
}

Ribbon parse_ribbon(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2) throw ParseError("expected a ribbon like (3,2) or [1,2]", std::string(text));
  const bool by_rows = text.front() == '(' && text.back() == ')';
  const bool by_cols = text.front() == '[' && text.back() == ']';
  if (!by_rows && !by_cols) throw ParseError("expected a ribbon like (3,2) or [1,2]", std::string(text));
  std::vector<int> parts;
  std::string_view body = text.substr(1, text.size() - 2);
  while (true) {
    const auto comma = body.find(',');
    std::string_view token = body.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || v <= 0)
      throw ParseError("expected a positive integer part", std::string(token));
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return by_rows ? Ribbon(std::move(parts)) : Ribbon::from_columns(parts);
}

std::vector<Ribbon> ribbons_of_size(int size) {
  if (size < 1) throw InvalidArg("ribbon size must be positive");
  std::vector<Ribbon> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      parts.push_back(p);
      self(self, left - p);
      parts.pop_back();
    }
  };
  rec(rec, size);
  return out;
}

bool is_trivial_factorization(const Ribbon& left, const Ribbon& right) {
  return left.size() == 1 || right.size() == 1 || (left.single_row() && right.single_row()) ||
         (left.single_column() && right.single_column());
}

std::optional<std::pair<Ribbon, Ribbon>> nontrivial_split(const Ribbon& a) {
  const int n = a.size();
  for (int q = 2; q <= n / 2; ++q) {
    if (n % q != 0) continue;
    const auto lefts = ribbons_of_size(n / q);
    for (const Ribbon& right : ribbons_of_size(q)) {
      for (const Ribbon& left : lefts) {
        if (is_trivial_factorization(left, right)) continue;
        if (compose(left, right) == a) return std::pair{left, right};
      }
    }
  }
  return std::nullopt;
}

Ribbon Factorization::composed() const {
  Ribbon out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = compose(out, factors[i]);
  return out;
}

std::string Factorization::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " o ";
    out += factors[i].to_string();
  }
  return out;
}

namespace {

void collect_factors(const Ribbon& a, std::vector<Ribbon>& out) {
  const auto split = nontrivial_split(a);
  if (!split) {
    out.push_back(a);
    return;
  }
  collect_factors(split->first, out);
  collect_factors(split->second, out);
}

}  // namespace

Factorization irreducible_factorization(const Ribbon& a) {
  std::vector<Ribbon> raw;
  collect_factors(a, raw);
  // Neighbouring rows (or columns) compose trivially into one row (column).
  Factorization f;
  for (const Ribbon& r : raw) {
    if (!f.factors.empty()) {
      Ribbon& last = f.factors.back();
      if ((last.single_row() && r.single_row()) || (last.single_column() && r.single_column())) {
        last = compose(last, r);
        continue;
      }
    }
    f.factors.push_back(r);
  }
  if (f.composed() != a) throw Error("factorization of " + a.to_string() + " does not recompose");
  return f;
}

bool is_irreducible(const Factorization& f) {
  if (f.factors.empty()) return false;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (nontrivial_split(f.factors[i])) return false;
    if (i + 1 < f.factors.size() && is_trivial_factorization(f.factors[i], f.factors[i + 1])) return false;
  }
  return true;
}

bool schur_equivalent(const Ribbon& a, const Ribbon& b) {
  if (a.size() != b.size()) return false;
  const auto fa = irreducible_factorization(a);
  const auto fb = irreducible_factorization(b);
  if (fa.factors.size() != fb.factors.size()) return false;
  for (std::size_t i = 0; i < fa.factors.size(); ++i)
    if (fa.factors[i] != fb.factors[i] && fa.factors[i] != reverse(fb.factors[i])) return false;
  return true;
}

bool g_equivalent(const Ribbon& a, const Ribbon& b) { return a == b || a == reverse(b); }

BigInt g_schur_coefficient(const Ribbon& a, const Ribbon& c) {
  const auto ac = a.columns();
  const auto cc = c.columns();
  if (ac.size() != cc.size()) return 0;
  BigInt out = 1;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (cc[i] > ac[i]) return 0;
    out *= binomial(ac[i] - 1, ac[i] - cc[i]);
  }
  return out;
}

std::vector<std::pair<Ribbon, BigInt>> ribbon_schur_expansion(const Ribbon& a) {
  const auto ac = a.columns();
  std::vector<std::pair<Ribbon, BigInt>> out;
  std::vector<int> cols(ac.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == ac.size()) {
      const Ribbon c = Ribbon::from_columns(cols);
      out.emplace_back(c, g_schur_coefficient(a, c));
      return;
    }
    for (int v = ac[i]; v >= 1; --v) {
      cols[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace skewsym
