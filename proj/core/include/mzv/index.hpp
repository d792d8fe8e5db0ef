#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

enum class IndexKind { strict, star };

struct IndexEntry {
  int magnitude = 1;  ///< |s_j| >= 1
  int sign = 1;       ///< +1, or -1 for a barred entry

  friend bool operator==(const IndexEntry&, const IndexEntry&) = default;
};

/// Composition of signed exponents (s_1, ..., s_k). A negative s_j is the
/// barred entry \bar{|s_j|} and contributes (-1)^{n_j} to each term. The kind
/// selects the strict sum n_1 > ... > n_k or the star sum n_1 >= ... >= n_k.
class SignedIndex {
 public:
  SignedIndex() = default;
  SignedIndex(IndexKind kind, std::vector<IndexEntry> entries);
  /// From signed integers, e.g. {-1, 1, -1}; throws DomainError on 0.
  SignedIndex(IndexKind kind, std::span<const int> signed_entries);
  SignedIndex(IndexKind kind, std::initializer_list<int> signed_entries);

  IndexKind kind() const noexcept { return kind_; }
  const std::vector<IndexEntry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  int depth() const noexcept { return static_cast<int>(entries_.size()); }
  int weight() const noexcept;
  /// The series converges: empty, or the first entry is barred or exceeds 1.
  bool admissible() const noexcept;
  /// Sign of the outermost entry; +1 for the empty index.
  int leading_sign() const noexcept;

  std::vector<int> signed_entries() const;
  SignedIndex with_kind(IndexKind kind) const { return SignedIndex(kind, entries_); }

  /// Canonical text: `zeta(s1,...,sk)` or `zetastar(s1,...,sk)`, no spaces.
  std::string to_string() const;

  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;

 private:
  IndexKind kind_ = IndexKind::strict;
  std::vector<IndexEntry> entries_;
};

struct IndexStats {
  int depth = 0;
  int weight = 0;
  bool admissible = true;

  friend bool operator==(const IndexStats&, const IndexStats&) = default;
};

/// Parses `zeta(<ints>)` or `zetastar(<ints>)` where <ints> is a possibly
/// empty comma-separated list of integers without spaces. Throws SyntaxError
/// on malformed text and DomainError when an entry is 0.
SignedIndex parse_index(std::string_view text);

IndexStats index_stats(const SignedIndex& index);

/// Concatenation helpers for building indices such as (-1, {1}_m, -1).
std::vector<int> repeat(int value, int count);
std::vector<int> concat(std::initializer_list<std::vector<int>> parts);

}  // namespace mzv
