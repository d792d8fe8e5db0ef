#include "mzv/index.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "mzv/errors.hpp"

namespace mzv {
namespace {

std::vector<IndexEntry> to_entries(std::span<const int> signed_entries) {
  std::vector<IndexEntry> out;
  out.reserve(signed_entries.size());
  for (const int s : signed_entries) {
    if (s == 0) throw DomainError("index entries must be nonzero");
    out.push_back({std::abs(s), s < 0 ? -1 : 1});
  }
  return out;
}

int parse_entry(std::string_view token, std::string_view whole) {
  const auto fail = [&] { return SyntaxError("malformed index entry '" + std::string(token) + "' in '" + std::string(whole) + "'"); };
  if (token.empty()) throw fail();
  std::string_view digits = token.front() == '-' ? token.substr(1) : token;
  if (digits.empty() || (digits.size() > 1 && digits.front() == '0')) throw fail();
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) throw fail();
  return value;
}

}  // namespace

SignedIndex::SignedIndex(IndexKind kind, std::vector<IndexEntry> entries) : kind_(kind), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.magnitude < 1 || (e.sign != 1 && e.sign != -1)) throw DomainError("invalid index entry");
  }
}

SignedIndex::SignedIndex(IndexKind kind, std::span<const int> signed_entries)
    : kind_(kind), entries_(to_entries(signed_entries)) {}

SignedIndex::SignedIndex(IndexKind kind, std::initializer_list<int> signed_entries)
    : SignedIndex(kind, std::span<const int>(signed_entries.begin(), signed_entries.size())) {}

int SignedIndex::weight() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0, [](int acc, const IndexEntry& e) { return acc + e.magnitude; });
}

bool SignedIndex::admissible() const noexcept {
  return entries_.empty() || entries_.front().sign < 0 || entries_.front().magnitude > 1;
}

int SignedIndex::leading_sign() const noexcept { return entries_.empty() ? 1 : entries_.front().sign; }

std::vector<int> SignedIndex::signed_entries() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.sign * e.magnitude);
  return out;
}

std::string SignedIndex::to_string() const {
  std::string out = kind_ == IndexKind::star ? "zetastar(" : "zeta(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i].sign * entries_[i].magnitude);
  }
  out += ')';
  return out;
}

SignedIndex parse_index(std::string_view text) {
  IndexKind kind;
  std::string_view rest;
  if (text.starts_with("zetastar(")) {
    kind = IndexKind::star;
    rest = text.substr(9);
  } else if (text.starts_with("zeta(")) {
    kind = IndexKind::strict;
    rest = text.substr(5);
  } else {
    throw SyntaxError("expected zeta(...) or zetastar(...): '" + std::string(text) + "'");
  }
  if (rest.empty() || rest.back() != ')') throw SyntaxError("missing ')' in '" + std::string(text) + "'");
  rest.remove_suffix(1);

  std::vector<int> values;
  if (!rest.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = rest.find(',', start);
      const auto token = rest.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      values.push_back(parse_entry(token, text));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  for (const int v : values) {
    if (v == 0) throw DomainError("index entries must be nonzero: '" + std::string(text) + "'");
  }
  return SignedIndex(kind, values);
}

IndexStats index_stats(const SignedIndex& index) { return {index.depth(), index.weight(), index.admissible()}; }

std::vector<int> repeat(int value, int count) { return std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), value); }

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace mzv
