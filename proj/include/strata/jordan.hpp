#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "strata/partition.hpp"

namespace strata {

/// Maximal run of equal positive parts. `origin` is the 1-based position of
/// its first part.
struct JordanString {
  int value = 0;
  int origin = 0;
  int length = 0;

  bool odd_origin() const { return origin % 2 == 1; }
  friend bool operator==(const JordanString&, const JordanString&) = default;
};

std::vector<JordanString> decompose_strings(const Partition& p);

/// Jordan type together with the {0,1} labels carried in characteristic 2 by
/// every even part value that occurs an even (nonzero) number of times.
/// Labels are keyed by part value. Unlabelled families keep `labels` empty.
struct LabeledPartition {
  Partition base;
  std::map<int, int> labels;

  LabeledPartition() = default;
  LabeledPartition(Partition p) : base(std::move(p)) {}
  LabeledPartition(Partition p, std::map<int, int> l) : base(std::move(p)), labels(std::move(l)) {}

  int weight() const { return base.weight(); }

  friend bool operator==(const LabeledPartition&, const LabeledPartition&) = default;
  friend auto operator<=>(const LabeledPartition& a, const LabeledPartition& b) {
    if (auto c = a.base <=> b.base; c != 0) return c;
    return a.labels <=> b.labels;
  }
};

/// Even values > 0 occurring an even number (> 0) of times, ascending.
std::vector<int> label_eligible_values(const Partition& p);

enum class JordanFamily {
  Z1,        ///< odd values have even multiplicity
  Z2,        ///< Z1 plus complete labels
  Z1_prime,  ///< even values have even multiplicity
  Z2_prime,  ///< Z2 with an even number of parts
};

std::string_view to_string(JordanFamily f);
JordanFamily parse_jordan_family(std::string_view name);

bool in_family(JordanFamily f, const LabeledPartition& nu);
/// Throws DomainError with the most specific code when `nu` is outside `f`.
void require_family(JordanFamily f, const LabeledPartition& nu);

/// Z1_N -> BP^{N/2}_{1,1}.
Bipartition z1_to_bp(const Partition& nu);
/// Z2_N -> BP^{N/2}_{2,2}.
Bipartition z2_to_bp(const LabeledPartition& nu);
/// 'Z1_N -> BP^{(N-1)/2}_{2,0}, N odd.
Bipartition z1p_to_bp_odd(const Partition& nu);
/// 'Z1_N -> BP^{N/2}_{0,2}, N even.
Bipartition z1p_to_bp_even(const Partition& nu);
/// 'Z2_N -> BP^{N/2}_{0,4}.
Bipartition z2p_to_bp(const LabeledPartition& nu);

struct Codomain {
  int weight = 0;
  Excess excess;
};

/// Weight and excess of the bipartitions the family's bijection lands in.
Codomain codomain(JordanFamily f, int N);

/// Dispatches to the bijection for `f`; Z1_prime picks the odd or even
/// variant from the weight of `nu`.
Bipartition jordan_to_bp(JordanFamily f, const LabeledPartition& nu);

/// Every member of the family of weight N, all label assignments included.
/// Ordered by partition (descending), then label 1 before label 0.
std::vector<LabeledPartition> enumerate_jordan(JordanFamily f, int N);

/// Unique preimage of `target` under jordan_to_bp over enumerate_jordan(f, N).
/// Throws Error(no_preimage) if none, ConsistencyError if several.
LabeledPartition invert_bijection(JordanFamily f, int N, const Bipartition& target);

std::string to_string(const LabeledPartition& nu);

}  // namespace strata
