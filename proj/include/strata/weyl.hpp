#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "strata/jordan.hpp"
#include "strata/partition.hpp"

namespace strata {

/// B also covers C: the class map depends only on the Weyl group.
enum class WeylSeries { A, B, D };

struct WeylType {
  WeylSeries series = WeylSeries::A;
  int rank = 1;
};

std::string_view to_string(WeylSeries s);
WeylSeries parse_weyl_series(std::string_view name);

/// Conjugacy class of a hyperoctahedral group: lengths of the positive and
/// of the negative cycles. A type-A class stores its cycle type in
/// `positive` and leaves `negative` empty. Type-D classes are unsplit.
struct SignedCycleType {
  Partition positive;
  Partition negative;

  int size() const { return positive.weight() + negative.weight(); }

  friend bool operator==(const SignedCycleType&, const SignedCycleType&) = default;
  friend auto operator<=>(const SignedCycleType& a, const SignedCycleType& b) {
    if (auto c = a.positive <=> b.positive; c != 0) return c;
    return a.negative <=> b.negative;
  }
};

/// "3,1;2" -> positive (3,1), negative (2). A bare "2,1" has no negative part.
SignedCycleType parse_signed_cycle_type(std::string_view text);
std::string to_string(const SignedCycleType& c);

/// Throws DomainError unless `c` is a class of `w`.
void validate_class(const WeylType& w, const SignedCycleType& c);

std::vector<SignedCycleType> enumerate_classes(const WeylType& w);

/// Cycle type of the class acting on the 2n-element set with its
/// fixed-point-free involution, with labels on paired even lengths.
LabeledPartition to_nu(const SignedCycleType& c);

/// Image of a class in the set of strata labels.
Bipartition phi_classical(const WeylType& w, const SignedCycleType& c);

/// Dimension of the fixed space in the reflection representation.
int m_of_class(const WeylType& w, const SignedCycleType& c);

struct ClassFiber {
  Bipartition label;
  std::vector<SignedCycleType> classes;
  SignedCycleType cross_section;  ///< the unique m-minimiser
};

/// Fibres of phi_classical, labels descending. Throws ConsistencyError if
/// some fibre has no unique m-minimiser.
std::vector<ClassFiber> fibers_and_cross_section(const WeylType& w);

}  // namespace strata
