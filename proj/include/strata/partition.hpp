#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace strata {

/// Weakly decreasing sequence of positive integers. Trailing zeros given to
/// the constructor are dropped; anything else out of order is rejected.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vector() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Number of parts equal to `value`.
  int multiplicity(int value) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Sequence lambda_1, lambda_2, ... with both the odd-indexed and the
/// even-indexed subsequences weakly decreasing. Stored with trailing zeros
/// trimmed; interior zeros are significant.
class Bipartition {
 public:
  Bipartition() = default;
  explicit Bipartition(std::vector<int> entries);
  Bipartition(std::initializer_list<int> entries) : Bipartition(std::vector<int>(entries)) {}
  static Bipartition from_partition(const Partition& p);

  std::span<const int> entries() const { return entries_; }
  const std::vector<int>& vector() const { return entries_; }
  int weight() const { return weight_; }
  std::size_t size() const { return entries_.size(); }
  /// Entry at 0-based index `i`, zero past the stored length.
  int at(std::size_t i) const { return i < entries_.size() ? entries_[i] : 0; }

  /// (lambda_1, lambda_3, ...) and (lambda_2, lambda_4, ...).
  Partition odd_track() const;
  Partition even_track() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  /// Lexicographic on entries; with trailing zeros trimmed this agrees with
  /// comparing the zero-padded infinite sequences.
  friend std::strong_ordering operator<=>(const Bipartition& a, const Bipartition& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
  int weight_ = 0;
};

struct Excess {
  int e = 0;
  int e_prime = 0;
  friend bool operator==(const Excess&, const Excess&) = default;
};

bool is_bipartition(std::span<const int> seq);
bool has_excess(const Bipartition& bp, Excess x);

/// Bipartitions of weight n with excess x, lexicographically descending.
std::vector<Bipartition> enumerate_bipartitions(int n, Excess x);

/// Partitions of n, lexicographically descending.
std::vector<Partition> enumerate_partitions(int n);

Bipartition bp_sum(const Bipartition& a, const Bipartition& b);
inline Bipartition operator+(const Bipartition& a, const Bipartition& b) { return bp_sum(a, b); }

/// Sum over k >= 1 of (half - (lambda_1 + ... + lambda_k)). This is the
/// Springer fibre dimension of the stratum labelled by `bp`.
/// Throws DomainError (weight_mismatch) unless weight(bp) == half.
int n_invariant(const Bipartition& bp, int half);

Partition conjugate(const Partition& p);

std::string to_string(const Partition& p);
std::string to_string(const Bipartition& bp);
std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const Bipartition& bp);

/// Parses "3,1,1" (empty string or "()" for the empty sequence).
std::vector<int> parse_int_list(const std::string& text);

}  // namespace strata
