#include "strata/classical.hpp"

#include <algorithm>
#include <cctype>

#include "strata/error.hpp"

namespace strata {

namespace {

bool is_involutive_id(const std::string& id) { return id == "1" || id == "-1"; }

// require_family reports a plain domain violation; inside a spectral datum
// the caller wants to know it is the family that is wrong.
void require_orbit_family(JordanFamily f, const EigenOrbit& orbit) {
  try {
    require_family(f, orbit.jordan);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::domain_violation)
      throw Error(ErrorCode::wrong_family, "orbit " + orbit.id + ": Jordan type " +
                                               to_string(orbit.jordan) + " is not in " +
                                               std::string(to_string(f)) + " (" + e.what() + ")");
    throw;
  }
}

void require_unlabelled(const EigenOrbit& orbit) {
  if (!orbit.jordan.labels.empty())
    throw Error(ErrorCode::extraneous_label, "orbit " + orbit.id + " must not carry labels");
}

GroupDescriptor symplectic_quotient(const GroupDescriptor& g) {
  return {Series::Sp, g.dimension - 1, g.characteristic};
}

bool reduces_to_symplectic(const GroupDescriptor& g) {
  return g.series == Series::SO_odd && g.characteristic == Characteristic::two;
}

// Family a unipotent block on the +-1 eigenspace must belong to.
JordanFamily involutive_family(const GroupDescriptor& g) {
  const bool two = g.characteristic == Characteristic::two;
  switch (g.series) {
    case Series::Sp: return two ? JordanFamily::Z2 : JordanFamily::Z1;
    case Series::SO_odd: return JordanFamily::Z1_prime;
    case Series::SO_even: return two ? JordanFamily::Z2_prime : JordanFamily::Z1_prime;
    case Series::GL: break;
  }
  return JordanFamily::Z1;
}

}  // namespace

std::string_view to_string(Series s) {
  switch (s) {
    case Series::GL: return "GL";
    case Series::Sp: return "Sp";
    case Series::SO_odd: return "SO_ODD";
    case Series::SO_even: return "SO_EVEN";
  }
  return "?";
}

std::string_view to_string(Characteristic c) {
  switch (c) {
    case Characteristic::zero: return "0";
    case Characteristic::two: return "2";
    case Characteristic::odd_prime: return "odd";
  }
  return "?";
}

Series parse_series(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  if (s == "GL") return Series::GL;
  if (s == "SP") return Series::Sp;
  if (s == "SO_ODD" || s == "SOODD" || s == "SO-ODD") return Series::SO_odd;
  if (s == "SO_EVEN" || s == "SOEVEN" || s == "SO-EVEN") return Series::SO_even;
  throw Error(ErrorCode::parse_error, "unknown series '" + std::string(name) + "'");
}

Characteristic characteristic_from_int(int p) {
  if (p == 0) return Characteristic::zero;
  if (p == 2) return Characteristic::two;
  if (p < 2) throw DomainError("characteristic must be 0 or a prime, got " + std::to_string(p));
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw DomainError("characteristic must be 0 or a prime, got " + std::to_string(p));
  return Characteristic::odd_prime;
}

void validate(const GroupDescriptor& g) {
  const int N = g.dimension;
  if (N < 1) throw DomainError("group dimension must be positive");
  switch (g.series) {
    case Series::GL: return;
    case Series::Sp:
      if (N % 2) throw DomainError("Sp needs an even dimension, got " + std::to_string(N));
      return;
    case Series::SO_odd:
      if (N % 2 == 0) throw DomainError("SO_ODD needs an odd dimension, got " + std::to_string(N));
      return;
    case Series::SO_even:
      if (N % 2) throw DomainError("SO_EVEN needs an even dimension, got " + std::to_string(N));
      return;
  }
}

int half_rank(const GroupDescriptor& g) {
  switch (g.series) {
    case Series::GL: return g.dimension;
    case Series::Sp:
    case Series::SO_even: return g.dimension / 2;
    case Series::SO_odd: return (g.dimension - 1) / 2;
  }
  return 0;
}

int positive_roots(const GroupDescriptor& g) {
  validate(g);
  const int n = half_rank(g);
  switch (g.series) {
    case Series::GL: return n * (n - 1) / 2;
    case Series::Sp:
    case Series::SO_odd: return n * n;
    case Series::SO_even: return n * n - n;
  }
  return 0;
}

Excess strata_excess(Series s) {
  switch (s) {
    case Series::GL: return {0, 0};
    case Series::Sp:
    case Series::SO_odd: return {2, 2};
    case Series::SO_even: return {0, 4};
  }
  return {};
}

bool iota_fixed(const Bipartition& bp) {
  for (std::size_t i = 0; i < bp.size(); i += 2)
    if (bp.at(i) != bp.at(i + 1)) return false;
  return true;
}

void validate(const SpectralDatum& datum) {
  validate(datum.group);
  // the quotient may be Sp_0 (SO_1), which is not itself a valid descriptor
  const GroupDescriptor g = reduces_to_symplectic(datum.group) ? symplectic_quotient(datum.group) : datum.group;

  const bool paired = g.series != Series::GL;
  int total = 0;
  std::vector<std::string> seen;
  for (const auto& orbit : datum.orbits) {
    if (std::find(seen.begin(), seen.end(), orbit.id) != seen.end())
      throw Error(ErrorCode::invalid_orbit, "duplicate orbit id '" + orbit.id + "'");
    seen.push_back(orbit.id);
    if (orbit.d() == 0)
      throw Error(ErrorCode::bookkeeping, "orbit " + orbit.id + " has an empty Jordan type");

    if (orbit.kind == OrbitKind::generic || g.series == Series::GL) {
      require_unlabelled(orbit);
      total += paired ? 2 * orbit.d() : orbit.d();
      continue;
    }

    if (!is_involutive_id(orbit.id))
      throw Error(ErrorCode::invalid_orbit, "involutive orbit id must be 1 or -1, got '" + orbit.id + "'");
    if (orbit.id == "-1" && g.characteristic == Characteristic::two)
      throw Error(ErrorCode::invalid_orbit, "-1 equals 1 in characteristic 2");
    require_orbit_family(involutive_family(g), orbit);

    if (g.series == Series::SO_odd) {
      const bool want_odd = orbit.id == "1";
      if ((orbit.d() % 2 == 1) != want_odd)
        throw Error(ErrorCode::bookkeeping, "the " + orbit.id + "-eigenspace of an odd orthogonal "
                                            "element must have " + (want_odd ? "odd" : "even") +
                                            " dimension");
    } else if (g.series == Series::SO_even && orbit.d() % 2) {
      throw Error(ErrorCode::bookkeeping, "the " + orbit.id + "-eigenspace of an even orthogonal "
                                          "element must have even dimension");
    }
    total += orbit.d();
  }

  if (total != g.dimension)
    throw Error(ErrorCode::bookkeeping, "orbit dimensions sum to " + std::to_string(total) +
                                            ", group dimension is " + std::to_string(g.dimension));
}

StratumResult stratum_for(const GroupDescriptor& g, const Bipartition& bp) {
  const int half = half_rank(g);
  if (!has_excess(bp, strata_excess(g.series)))
    throw DomainError(to_string(bp) + " is not a stratum label for " + std::string(to_string(g.series)));
  StratumResult r;
  r.bp = bp;
  r.n_e = n_invariant(bp, half);
  r.springer_dim = r.n_e;
  r.class_dim = 2 * positive_roots(g) - 2 * r.n_e;
  if (r.class_dim < 0)
    throw ConsistencyError("negative class dimension for " + to_string(bp));
  r.iota_degenerate = g.series == Series::SO_even && iota_fixed(bp);
  return r;
}

StratumResult classify(const SpectralDatum& datum) {
  validate(datum);
  // SO_{2n+1} and Sp_{2n} share root counts and strata, so only the summation
  // needs the quotient
  const GroupDescriptor g = reduces_to_symplectic(datum.group) ? symplectic_quotient(datum.group) : datum.group;

  Bipartition total;
  for (const auto& orbit : datum.orbits) {
    if (orbit.kind == OrbitKind::generic || g.series == Series::GL) {
      total = total + Bipartition::from_partition(orbit.jordan.base);
      continue;
    }
    const bool two = g.characteristic == Characteristic::two;
    switch (g.series) {
      case Series::Sp:
        total = total + (two ? z2_to_bp(orbit.jordan) : z1_to_bp(orbit.jordan.base));
        break;
      case Series::SO_odd:
        total = total + (orbit.id == "1" ? z1p_to_bp_odd(orbit.jordan.base)
                                         : z1p_to_bp_even(orbit.jordan.base));
        break;
      case Series::SO_even:
        total = total + (two ? z2p_to_bp(orbit.jordan) : z1p_to_bp_even(orbit.jordan.base));
        break;
      case Series::GL: break;
    }
  }
  try {
    return stratum_for(datum.group, total);
  } catch (const DomainError& e) {
    throw ConsistencyError(std::string("classified label falls outside the strata set: ") + e.what());
  }
}

std::vector<StratumResult> enumerate_strata(const GroupDescriptor& g) {
  validate(g);
  std::vector<StratumResult> out;
  for (const auto& bp : enumerate_bipartitions(half_rank(g), strata_excess(g.series)))
    out.push_back(stratum_for(g, bp));
  return out;
}

std::set<int> dimension_set(const GroupDescriptor& g) {
  std::set<int> out;
  for (const auto& s : enumerate_strata(g)) out.insert(s.class_dim);
  return out;
}

}  // namespace strata
