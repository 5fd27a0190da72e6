#include "strata/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "strata/error.hpp"

namespace strata {

std::string_view to_string(WeylSeries s) {
  switch (s) {
    case WeylSeries::A: return "A";
    case WeylSeries::B: return "B";
    case WeylSeries::D: return "D";
  }
  return "?";
}

WeylSeries parse_weyl_series(std::string_view name) {
  if (name == "A" || name == "a") return WeylSeries::A;
  if (name == "B" || name == "b" || name == "C" || name == "c") return WeylSeries::B;
  if (name == "D" || name == "d") return WeylSeries::D;
  throw Error(ErrorCode::parse_error, "unknown Weyl series '" + std::string(name) + "'");
}

SignedCycleType parse_signed_cycle_type(std::string_view text) {
  const std::string s(text);
  const auto semi = s.find(';');
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition(std::move(v));
  };
  if (semi == std::string::npos) return {sorted(parse_int_list(s)), {}};
  return {sorted(parse_int_list(s.substr(0, semi))), sorted(parse_int_list(s.substr(semi + 1)))};
}

std::string to_string(const SignedCycleType& c) {
  auto list = [](const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
    return out;
  };
  return list(c.positive) + ";" + list(c.negative);
}

void validate_class(const WeylType& w, const SignedCycleType& c) {
  if (w.rank < 0) throw DomainError("negative Weyl rank");
  switch (w.series) {
    case WeylSeries::A:
      if (!c.negative.empty()) throw DomainError("type A classes have no negative cycles");
      if (c.positive.weight() != w.rank + 1)
        throw DomainError("class " + to_string(c) + " is not a cycle type of S_" +
                          std::to_string(w.rank + 1));
      return;
    case WeylSeries::B:
    case WeylSeries::D:
      if (c.size() != w.rank)
        throw DomainError("class " + to_string(c) + " has size " + std::to_string(c.size()) +
                          ", rank is " + std::to_string(w.rank));
      if (w.series == WeylSeries::D && c.negative.size() % 2)
        throw DomainError("type D classes need an even number of negative cycles: " + to_string(c));
      return;
  }
}

std::vector<SignedCycleType> enumerate_classes(const WeylType& w) {
  std::vector<SignedCycleType> out;
  if (w.series == WeylSeries::A) {
    for (auto& p : enumerate_partitions(w.rank + 1)) out.push_back({std::move(p), {}});
    return out;
  }
  for (int a = w.rank; a >= 0; --a) {
    for (const auto& pos : enumerate_partitions(a)) {
      for (const auto& neg : enumerate_partitions(w.rank - a)) {
        if (w.series == WeylSeries::D && neg.size() % 2) continue;
        out.push_back({pos, neg});
      }
    }
  }
  return out;
}

LabeledPartition to_nu(const SignedCycleType& c) {
  // A positive l-cycle lifts to two l-cycles swapped by the involution; a
  // negative l-cycle lifts to one 2l-cycle that commutes with it.
  std::vector<int> parts;
  for (int l : c.positive.parts()) parts.insert(parts.end(), {l, l});
  for (int l : c.negative.parts()) parts.push_back(2 * l);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  Partition nu(std::move(parts));

  std::map<int, int> labels;
  for (int e : label_eligible_values(nu)) labels[e] = c.negative.multiplicity(e / 2) > 0 ? 1 : 0;
  return {std::move(nu), std::move(labels)};
}

Bipartition phi_classical(const WeylType& w, const SignedCycleType& c) {
  validate_class(w, c);
  switch (w.series) {
    case WeylSeries::A: return Bipartition::from_partition(c.positive);
    case WeylSeries::B: return z2_to_bp(to_nu(c));
    case WeylSeries::D: return z2p_to_bp(to_nu(c));
  }
  throw DomainError("unknown Weyl series");
}

int m_of_class(const WeylType& w, const SignedCycleType& c) {
  validate_class(w, c);
  if (w.series == WeylSeries::A) return static_cast<int>(c.positive.size()) - 1;
  return static_cast<int>(c.positive.size());
}

std::vector<ClassFiber> fibers_and_cross_section(const WeylType& w) {
  std::map<Bipartition, std::vector<SignedCycleType>, std::greater<>> groups;
  for (const auto& c : enumerate_classes(w)) groups[phi_classical(w, c)].push_back(c);

  std::vector<ClassFiber> out;
  for (auto& [label, classes] : groups) {
    int best = -1;
    int best_m = 0;
    bool tie = false;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const int m = m_of_class(w, classes[i]);
      if (best < 0 || m < best_m) {
        best = static_cast<int>(i);
        best_m = m;
        tie = false;
      } else if (m == best_m) {
        tie = true;
      }
    }
    if (tie)
      throw ConsistencyError("fibre over " + to_string(label) + " in type " +
                             std::string(to_string(w.series)) + std::to_string(w.rank) +
                             " has no unique m-minimiser");
    out.push_back({label, classes, classes[best]});
  }
  return out;
}

}  // namespace strata
