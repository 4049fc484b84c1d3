#include "skewsym/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "skewsym/errors.hpp"

namespace skewsym {

ExponentVector::ExponentVector(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw InvalidArg("negative exponent");
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

int ExponentVector::operator[](int i) const noexcept {
  return i >= 1 && i <= num_vars() ? exps_[static_cast<std::size_t>(i - 1)] : 0;
}

int ExponentVector::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

int ExponentVector::support() const noexcept {
  return static_cast<int>(std::count_if(exps_.begin(), exps_.end(), [](int e) { return e > 0; }));
}

bool ExponentVector::is_partition() const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) return false;
    if (i > 0 && exps_[i] > exps_[i - 1]) return false;
  }
  return true;
}

Partition ExponentVector::sorted() const {
  std::vector<int> parts;
  for (int e : exps_)
    if (e > 0) parts.push_back(e);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::string ExponentVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
    throw ParseError("malformed monomial", std::string(whole));
  return value;
}

}  // namespace

ExponentVector parse_monomial(std::string_view text) {
  std::vector<int> exps;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) ++pos;
  };
  skip();
  if (text.substr(pos) == "1") return ExponentVector{};
  while (pos < text.size()) {
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '*') ++pos;
    const std::string_view token = text.substr(start, pos - start);
    if (token.size() < 2 || token[0] != 'x') throw ParseError("expected a factor like x3^2", std::string(token));
    const auto caret = token.find('^');
    const int var = parse_int(token.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), token);
    const int power = caret == std::string_view::npos ? 1 : parse_int(token.substr(caret + 1), token);
    if (var < 1) throw ParseError("variables are numbered from 1", std::string(token));
    if (exps.size() < static_cast<std::size_t>(var)) exps.resize(static_cast<std::size_t>(var), 0);
    exps[static_cast<std::size_t>(var - 1)] += power;
    skip();
  }
  return ExponentVector(std::move(exps));
}

}  // namespace skewsym
