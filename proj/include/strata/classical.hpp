#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "strata/jordan.hpp"
#include "strata/partition.hpp"

namespace strata {

enum class Series { GL, Sp, SO_odd, SO_even };

/// Only "2 or not 2" matters for the classification.
enum class Characteristic { zero, two, odd_prime };

struct GroupDescriptor {
  Series series = Series::GL;
  int dimension = 1;  ///< dimension of the natural module (n for GL_n)
  Characteristic characteristic = Characteristic::zero;
};

std::string_view to_string(Series s);
std::string_view to_string(Characteristic c);
Series parse_series(std::string_view name);
/// 0 -> zero, 2 -> two, any other prime -> odd_prime.
Characteristic characteristic_from_int(int p);

/// Throws DomainError if the dimension does not suit the series.
void validate(const GroupDescriptor& g);

/// Rank of the Weyl group's ambient bipartition: N/2 for Sp and SO_even,
/// (N-1)/2 for SO_odd, n for GL_n.
int half_rank(const GroupDescriptor& g);
int positive_roots(const GroupDescriptor& g);

/// Bipartition excess of the strata labels of the series.
Excess strata_excess(Series s);

enum class OrbitKind {
  generic,     ///< {x, 1/x} with x^2 != 1; any eigenvalue for GL
  involutive,  ///< x = 1 or x = -1
};

/// Jordan data of g on one generalized eigenspace (or eigenvalue pair).
struct EigenOrbit {
  std::string id;  ///< "1" / "-1" for involutive orbits, free text otherwise
  OrbitKind kind = OrbitKind::generic;
  LabeledPartition jordan;

  int d() const { return jordan.weight(); }
};

struct SpectralDatum {
  GroupDescriptor group;
  std::vector<EigenOrbit> orbits;
};

struct StratumResult {
  Bipartition bp;
  int n_e = 0;
  int springer_dim = 0;
  int class_dim = 0;
  bool iota_degenerate = false;

  friend bool operator==(const StratumResult&, const StratumResult&) = default;
};

/// Checks every invariant of the datum; throws DomainError with a specific code.
void validate(const SpectralDatum& datum);

StratumResult classify(const SpectralDatum& datum);

/// Stratum for a given label; fills n_E, class dimension and the
/// degeneracy flag.
StratumResult stratum_for(const GroupDescriptor& g, const Bipartition& bp);

/// All strata of the group, labels in descending order. Independent of the
/// characteristic.
std::vector<StratumResult> enumerate_strata(const GroupDescriptor& g);

std::set<int> dimension_set(const GroupDescriptor& g);

/// lambda_1 = lambda_2, lambda_3 = lambda_4, ...
bool iota_fixed(const Bipartition& bp);

}  // namespace strata
