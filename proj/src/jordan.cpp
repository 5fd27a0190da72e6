#include "strata/jordan.hpp"

#include <algorithm>
#include <sstream>

#include "strata/error.hpp"

namespace strata {

namespace {

// Appends `length` entries alternating first, second, first, ...
void emit(std::vector<int>& out, int first, int second, int length) {
  for (int i = 0; i < length; ++i) out.push_back(i % 2 == 0 ? first : second);
}

bool odd_values_paired(const Partition& p) {
  for (const auto& s : decompose_strings(p))
    if (s.value % 2 == 1 && s.length % 2 == 1) return false;
  return true;
}

bool even_values_paired(const Partition& p) {
  for (const auto& s : decompose_strings(p))
    if (s.value % 2 == 0 && s.length % 2 == 1) return false;
  return true;
}

void check_labels(const LabeledPartition& nu) {
  const auto eligible = label_eligible_values(nu.base);
  for (int v : eligible) {
    const auto it = nu.labels.find(v);
    if (it == nu.labels.end())
      throw Error(ErrorCode::missing_label,
                  "missing label for part " + std::to_string(v) + " in " + to_string(nu));
    if (it->second != 0 && it->second != 1)
      throw DomainError("label for part " + std::to_string(v) + " must be 0 or 1");
  }
  for (const auto& [value, label] : nu.labels)
    if (!std::binary_search(eligible.begin(), eligible.end(), value))
      throw Error(ErrorCode::extraneous_label,
                  "part " + std::to_string(value) + " does not carry a label in " + to_string(nu));
}

void check_unlabelled(const LabeledPartition& nu) {
  if (!nu.labels.empty())
    throw Error(ErrorCode::extraneous_label, "labels given for an unlabelled family: " + to_string(nu));
}

// Final shape check on a bijection's output. Negative or out-of-shape entries
// would mean a rule was misapplied to a valid input.
Bipartition finish(std::vector<int> entries, std::string_view rule, const LabeledPartition& nu) {
  for (int v : entries)
    if (v < 0)
      throw ConsistencyError(std::string(rule) + " emitted a negative entry for " + to_string(nu));
  if (!is_bipartition(entries))
    throw ConsistencyError(std::string(rule) + " did not produce a bipartition for " + to_string(nu));
  return Bipartition(std::move(entries));
}

// Shared by the two 'Z1 maps; `swap` exchanges the roles of odd and even origin.
Bipartition z1p_rules(const Partition& nu, bool swap, std::string_view rule) {
  std::vector<int> out;
  for (const auto& s : decompose_strings(nu)) {
    const bool odd = s.odd_origin() != swap;
    const int a = s.value / 2;
    if (s.value % 2 == 0) {
      if (odd)
        emit(out, a - 1, a + 1, s.length);
      else
        emit(out, a, a, s.length);
    } else {
      if (odd)
        emit(out, a, a + 1, s.length);
      else
        emit(out, a + 1, a, s.length);
    }
  }
  return finish(std::move(out), rule, LabeledPartition(nu));
}

}  // namespace

std::vector<JordanString> decompose_strings(const Partition& p) {
  std::vector<JordanString> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!out.empty() && out.back().value == p[i])
      ++out.back().length;
    else
      out.push_back({p[i], static_cast<int>(i) + 1, 1});
  }
  return out;
}

std::vector<int> label_eligible_values(const Partition& p) {
  std::vector<int> out;
  for (const auto& s : decompose_strings(p))
    if (s.value % 2 == 0 && s.length % 2 == 0) out.push_back(s.value);
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(JordanFamily f) {
  switch (f) {
    case JordanFamily::Z1: return "Z1";
    case JordanFamily::Z2: return "Z2";
    case JordanFamily::Z1_prime: return "Z1'";
    case JordanFamily::Z2_prime: return "Z2'";
  }
  return "?";
}

JordanFamily parse_jordan_family(std::string_view name) {
  if (name == "Z1") return JordanFamily::Z1;
  if (name == "Z2") return JordanFamily::Z2;
  if (name == "Z1'" || name == "Z1p" || name == "Z1_PRIME" || name == "Z1_prime")
    return JordanFamily::Z1_prime;
  if (name == "Z2'" || name == "Z2p" || name == "Z2_PRIME" || name == "Z2_prime")
    return JordanFamily::Z2_prime;
  throw Error(ErrorCode::parse_error, "unknown Jordan family '" + std::string(name) + "'");
}

void require_family(JordanFamily f, const LabeledPartition& nu) {
  switch (f) {
    case JordanFamily::Z1:
      if (!odd_values_paired(nu.base))
        throw DomainError("odd part with odd multiplicity in " + to_string(nu));
      check_unlabelled(nu);
      return;
    case JordanFamily::Z2:
      if (!odd_values_paired(nu.base))
        throw DomainError("odd part with odd multiplicity in " + to_string(nu));
      check_labels(nu);
      return;
    case JordanFamily::Z1_prime:
      if (!even_values_paired(nu.base))
        throw DomainError("even part with odd multiplicity in " + to_string(nu));
      check_unlabelled(nu);
      return;
    case JordanFamily::Z2_prime:
      if (!odd_values_paired(nu.base))
        throw DomainError("odd part with odd multiplicity in " + to_string(nu));
      if (nu.base.size() % 2 != 0)
        throw DomainError("odd number of nonzero parts in " + to_string(nu));
      check_labels(nu);
      return;
  }
}

bool in_family(JordanFamily f, const LabeledPartition& nu) {
  try {
    require_family(f, nu);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Bipartition z1_to_bp(const Partition& nu) {
  const LabeledPartition labelled(nu);
  require_family(JordanFamily::Z1, labelled);
  std::vector<int> out;
  for (const auto& s : decompose_strings(nu)) {
    const int a = s.value / 2;
    if (s.value % 2 == 0)
      emit(out, a, a, s.length);
    else
      emit(out, a, a + 1, s.length);
  }
  return finish(std::move(out), "Z1 map", labelled);
}

Bipartition z2_to_bp(const LabeledPartition& nu) {
  require_family(JordanFamily::Z2, nu);
  std::vector<int> out;
  for (const auto& s : decompose_strings(nu.base)) {
    const int a = s.value / 2;
    if (s.value % 2 == 1) {
      emit(out, a, a + 1, s.length);
    } else if (s.length % 2 == 1 || nu.labels.at(s.value) == 1) {
      emit(out, a, a, s.length);
    } else {
      emit(out, a - 1, a + 1, s.length);
    }
  }
  return finish(std::move(out), "Z2 map", nu);
}

Bipartition z1p_to_bp_odd(const Partition& nu) {
  require_family(JordanFamily::Z1_prime, LabeledPartition(nu));
  if (nu.weight() % 2 == 0)
    throw DomainError("odd-weight 'Z1 map needs odd N, got " + std::to_string(nu.weight()));
  return z1p_rules(nu, false, "'Z1 odd map");
}

Bipartition z1p_to_bp_even(const Partition& nu) {
  require_family(JordanFamily::Z1_prime, LabeledPartition(nu));
  if (nu.weight() % 2 != 0)
    throw DomainError("even-weight 'Z1 map needs even N, got " + std::to_string(nu.weight()));
  return z1p_rules(nu, true, "'Z1 even map");
}

Bipartition z2p_to_bp(const LabeledPartition& nu) {
  require_family(JordanFamily::Z2_prime, nu);
  std::vector<int> out;
  for (const auto& s : decompose_strings(nu.base)) {
    const int a = s.value / 2;
    const bool odd = s.odd_origin();
    if (s.value % 2 == 1) {
      if (odd)
        emit(out, a + 1, a, s.length);
      else
        emit(out, a - 1, a + 2, s.length);
    } else if (s.length % 2 == 1 || nu.labels.at(s.value) == 1) {
      if (odd)
        emit(out, a + 1, a - 1, s.length);
      else
        emit(out, a - 1, a + 1, s.length);
    } else {
      if (odd)
        emit(out, a, a, s.length);
      else
        emit(out, a - 2, a + 2, s.length);
    }
  }
  return finish(std::move(out), "'Z2 map", nu);
}

Codomain codomain(JordanFamily f, int N) {
  switch (f) {
    case JordanFamily::Z1: return {N / 2, {1, 1}};
    case JordanFamily::Z2: return {N / 2, {2, 2}};
    case JordanFamily::Z1_prime:
      return N % 2 ? Codomain{(N - 1) / 2, {2, 0}} : Codomain{N / 2, {0, 2}};
    case JordanFamily::Z2_prime: return {N / 2, {0, 4}};
  }
  return {};
}

Bipartition jordan_to_bp(JordanFamily f, const LabeledPartition& nu) {
  switch (f) {
    case JordanFamily::Z1:
      check_unlabelled(nu);
      return z1_to_bp(nu.base);
    case JordanFamily::Z2: return z2_to_bp(nu);
    case JordanFamily::Z1_prime:
      check_unlabelled(nu);
      return nu.weight() % 2 ? z1p_to_bp_odd(nu.base) : z1p_to_bp_even(nu.base);
    case JordanFamily::Z2_prime: return z2p_to_bp(nu);
  }
  throw DomainError("unknown Jordan family");
}

std::vector<LabeledPartition> enumerate_jordan(JordanFamily f, int N) {
  if (N < 0) throw DomainError("negative N");
  if (f != JordanFamily::Z1_prime && N % 2 != 0)
    throw DomainError(std::string(to_string(f)) + " is defined for even N only");
  const bool labelled = f == JordanFamily::Z2 || f == JordanFamily::Z2_prime;
  const JordanFamily shape = labelled ? JordanFamily::Z1 : f;

  std::vector<LabeledPartition> out;
  for (auto& p : enumerate_partitions(N)) {
    if (!in_family(shape, LabeledPartition(p))) continue;
    if (f == JordanFamily::Z2_prime && p.size() % 2 != 0) continue;
    if (!labelled) {
      out.emplace_back(std::move(p));
      continue;
    }
    // Largest eligible value is the most significant bit; count down so that
    // label 1 precedes label 0.
    auto eligible = label_eligible_values(p);
    std::reverse(eligible.begin(), eligible.end());
    const unsigned k = static_cast<unsigned>(eligible.size());
    for (unsigned mask = (1u << k); mask-- > 0;) {
      std::map<int, int> labels;
      for (unsigned b = 0; b < k; ++b) labels[eligible[b]] = (mask >> (k - 1 - b)) & 1u;
      out.emplace_back(p, std::move(labels));
    }
  }
  return out;
}

LabeledPartition invert_bijection(JordanFamily f, int N, const Bipartition& target) {
  std::vector<LabeledPartition> hits;
  for (auto& nu : enumerate_jordan(f, N))
    if (jordan_to_bp(f, nu) == target) hits.push_back(std::move(nu));
  if (hits.empty())
    throw Error(ErrorCode::no_preimage, to_string(target) + " has no preimage in " +
                                            std::string(to_string(f)) + " for N=" + std::to_string(N));
  if (hits.size() > 1)
    throw ConsistencyError(to_string(target) + " has " + std::to_string(hits.size()) +
                           " preimages in " + std::string(to_string(f)) + " for N=" + std::to_string(N));
  return std::move(hits.front());
}

std::string to_string(const LabeledPartition& nu) {
  std::ostringstream os;
  os << to_string(nu.base);
  if (!nu.labels.empty()) {
    os << '{';
    bool first = true;
    for (const auto& [v, l] : nu.labels) {
      if (!first) os << ',';
      first = false;
      os << v << ':' << l;
    }
    os << '}';
  }
  return os.str();
}

}  // namespace strata
