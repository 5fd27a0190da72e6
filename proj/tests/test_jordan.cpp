#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "strata/error.hpp"
#include "strata/jordan.hpp"

using namespace strata;

namespace {

const JordanFamily kFamilies[] = {JordanFamily::Z1, JordanFamily::Z2, JordanFamily::Z1_prime,
                                  JordanFamily::Z2_prime};

int count_of(const std::vector<int>& v, int x) { return static_cast<int>(std::count(v.begin(), v.end(), x)); }

// Members of a family built from first principles: multiplicity conditions
// on every partition, then every {0,1} assignment on even values that occur
// an even number of times.
std::set<LabeledPartition> oracle_family(JordanFamily f, int N) {
  const bool labelled = f == JordanFamily::Z2 || f == JordanFamily::Z2_prime;
  std::set<LabeledPartition> out;
  for (const auto& p : enumerate_partitions(N)) {
    const auto& v = p.vector();
    bool ok = true;
    for (int x : v) {
      const bool odd_value = x % 2 == 1;
      const bool pair_needed = f == JordanFamily::Z1_prime ? !odd_value : odd_value;
      if (pair_needed && count_of(v, x) % 2) ok = false;
    }
    if (f == JordanFamily::Z2_prime && v.size() % 2) ok = false;
    if (!ok) continue;
    std::vector<int> eligible;
    if (labelled)
      for (int x : std::set<int>(v.begin(), v.end()))
        if (x % 2 == 0 && count_of(v, x) % 2 == 0) eligible.push_back(x);
    for (unsigned mask = 0; mask < (1u << eligible.size()); ++mask) {
      std::map<int, int> labels;
      for (std::size_t b = 0; b < eligible.size(); ++b) labels[eligible[b]] = (mask >> b) & 1u;
      out.insert(LabeledPartition(p, labels));
    }
  }
  return out;
}

std::vector<int> domain_sizes(JordanFamily f) {
  if (f == JordanFamily::Z1_prime) {
    std::vector<int> all;
    for (int N = 1; N <= 17; ++N) all.push_back(N);
    return all;
  }
  std::vector<int> even;
  for (int N = 0; N <= 16; N += 2) even.push_back(N);
  return even;
}

}  // namespace

TEST_CASE("string decomposition") {
  CHECK(decompose_strings(Partition{3, 3, 1, 1}) == std::vector<JordanString>{{3, 1, 2}, {1, 3, 2}});
  CHECK(decompose_strings(Partition{2}) == std::vector<JordanString>{{2, 1, 1}});
  CHECK(decompose_strings(Partition{4, 2, 2, 1, 1}) ==
        std::vector<JordanString>{{4, 1, 1}, {2, 2, 2}, {1, 4, 2}});
}

TEST_CASE("z1_to_bp examples") {
  CHECK(z1_to_bp(Partition{}) == Bipartition{});
  CHECK(z1_to_bp(Partition{3, 3}) == Bipartition{1, 2});
  CHECK(z1_to_bp(Partition{2, 1, 1}) == Bipartition{1, 0, 1});
}

TEST_CASE("z2_to_bp examples") {
  CHECK(z2_to_bp(Partition{4, 2}) == Bipartition{2, 1});
  CHECK(z2_to_bp({Partition{2, 2, 1, 1}, {{2, 0}}}) == Bipartition{0, 2, 0, 1});
  CHECK(z2_to_bp(Partition{2, 1, 1, 1, 1}) == Bipartition{1, 0, 1, 0, 1});
}

TEST_CASE("z1p_to_bp_odd examples") {
  CHECK(z1p_to_bp_odd(Partition{1}) == Bipartition{});
  CHECK(z1p_to_bp_odd(Partition{7}) == Bipartition{3});
  CHECK(z1p_to_bp_odd(Partition{3, 2, 2}) == Bipartition{1, 1, 1});
}

TEST_CASE("z1p_to_bp_even examples") {
  CHECK(z1p_to_bp_even(Partition{1, 1}) == Bipartition{1});
  CHECK(z1p_to_bp_even(Partition{2, 2}) == Bipartition{1, 1});
  CHECK(z1p_to_bp_even(Partition{3, 3}) == Bipartition{2, 1});
}

TEST_CASE("z2p_to_bp examples") {
  CHECK(z2p_to_bp(Partition{6, 2}) == Bipartition{4});
  CHECK(z2p_to_bp({Partition{4, 4}, {{4, 0}}}) == Bipartition{2, 2});
  CHECK(z2p_to_bp({Partition{2, 2, 1, 1, 1, 1}, {{2, 0}}}) == Bipartition{1, 1, 1, 0, 1, 0});
}

TEST_CASE("golden table: Z2, N = 6") {
  const std::vector<std::pair<LabeledPartition, Bipartition>> table = {
      {{Partition{6}}, {3}},
      {{Partition{4, 2}}, {2, 1}},
      {{Partition{4, 1, 1}}, {2, 0, 1}},
      {{Partition{3, 3}}, {1, 2}},
      {{Partition{2, 2, 2}}, {1, 1, 1}},
      {{Partition{2, 2, 1, 1}, {{2, 1}}}, {1, 1, 0, 1}},
      {{Partition{2, 2, 1, 1}, {{2, 0}}}, {0, 2, 0, 1}},
      {{Partition{2, 1, 1, 1, 1}}, {1, 0, 1, 0, 1}},
      {{Partition{1, 1, 1, 1, 1, 1}}, {0, 1, 0, 1, 0, 1}}};
  std::vector<LabeledPartition> domain;
  for (const auto& [nu, bp] : table) {
    CHECK(z2_to_bp(nu) == bp);
    domain.push_back(nu);
  }
  CHECK(enumerate_jordan(JordanFamily::Z2, 6) == domain);
}

TEST_CASE("golden table: Z2', N = 8") {
  const std::vector<std::pair<LabeledPartition, Bipartition>> table = {
      {{Partition{6, 2}}, {4, 0}},
      {{Partition{4, 4}, {{4, 1}}}, {3, 1}},
      {{Partition{4, 4}, {{4, 0}}}, {2, 2}},
      {{Partition{4, 2, 1, 1}}, {3, 0, 1, 0}},
      {{Partition{3, 3, 1, 1}}, {2, 1, 1, 0}},
      {{Partition{2, 2, 2, 2}, {{2, 1}}}, {2, 0, 2, 0}},
      {{Partition{2, 2, 2, 2}, {{2, 0}}}, {1, 1, 1, 1}},
      {{Partition{2, 2, 1, 1, 1, 1}, {{2, 1}}}, {2, 0, 1, 0, 1, 0}},
      {{Partition{2, 2, 1, 1, 1, 1}, {{2, 0}}}, {1, 1, 1, 0, 1, 0}},
      {{Partition{1, 1, 1, 1, 1, 1, 1, 1}}, {1, 0, 1, 0, 1, 0, 1, 0}}};
  std::vector<LabeledPartition> domain;
  for (const auto& [nu, bp] : table) {
    CHECK(z2p_to_bp(nu) == bp);
    domain.push_back(nu);
  }
  CHECK(enumerate_jordan(JordanFamily::Z2_prime, 8) == domain);
}

TEST_CASE("enumerate_jordan sizes and first-principles agreement") {
  CHECK(enumerate_jordan(JordanFamily::Z2, 6).size() == 9);
  CHECK(enumerate_jordan(JordanFamily::Z2_prime, 8).size() == 10);
  CHECK(enumerate_jordan(JordanFamily::Z1, 0) == std::vector<LabeledPartition>{LabeledPartition{}});
  for (auto f : kFamilies)
    for (int N : domain_sizes(f)) {
      const auto list = enumerate_jordan(f, N);
      CHECK(std::set<LabeledPartition>(list.begin(), list.end()) == oracle_family(f, N));
      CHECK(std::set<LabeledPartition>(list.begin(), list.end()).size() == list.size());
    }
}

TEST_CASE("bijections: weight halving, codomain and bijectivity") {
  for (auto f : kFamilies)
    for (int N : domain_sizes(f)) {
      CAPTURE(to_string(f));
      CAPTURE(N);
      const auto cod = codomain(f, N);
      CHECK(cod.weight == (f == JordanFamily::Z1_prime && N % 2 ? (N - 1) / 2 : N / 2));
      std::set<Bipartition> image;
      const auto domain = oracle_family(f, N);
      for (const auto& nu : domain) {
        const auto bp = jordan_to_bp(f, nu);
        CHECK(bp.weight() == cod.weight);
        CHECK(has_excess(bp, cod.excess));
        image.insert(bp);
      }
      CHECK(image.size() == domain.size());
      const auto expected = enumerate_bipartitions(cod.weight, cod.excess);
      CHECK(image == std::set<Bipartition>(expected.begin(), expected.end()));
    }
}

TEST_CASE("invert_bijection undoes the forward map") {
  for (auto f : kFamilies)
    for (int N : domain_sizes(f))
      for (const auto& nu : enumerate_jordan(f, N)) CHECK(invert_bijection(f, N, jordan_to_bp(f, nu)) == nu);
  CHECK(invert_bijection(JordanFamily::Z2, 6, Bipartition{3}) == LabeledPartition(Partition{6}));
  CHECK(invert_bijection(JordanFamily::Z2_prime, 8, Bipartition{3, 1}) ==
        LabeledPartition(Partition{4, 4}, {{4, 1}}));
  CHECK(invert_bijection(JordanFamily::Z1, 0, Bipartition{}) == LabeledPartition{});
  try {
    invert_bijection(JordanFamily::Z1, 4, Bipartition{0, 2});
    FAIL("expected no_preimage");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_preimage);
  }
}

TEST_CASE("family membership errors") {
  auto code_of = [](JordanFamily f, const LabeledPartition& nu) {
    try {
      require_family(f, nu);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::consistency;  // sentinel: accepted
  };
  CHECK(code_of(JordanFamily::Z1, Partition{3, 1}) == ErrorCode::domain_violation);
  CHECK(code_of(JordanFamily::Z2, Partition{2, 2}) == ErrorCode::missing_label);
  CHECK(code_of(JordanFamily::Z1, {Partition{2, 2}, {{2, 1}}}) == ErrorCode::extraneous_label);
  CHECK(code_of(JordanFamily::Z2, {Partition{2, 2, 2}, {{2, 1}}}) == ErrorCode::extraneous_label);
  CHECK(code_of(JordanFamily::Z2_prime, Partition{4, 1, 1}) == ErrorCode::domain_violation);
  CHECK(code_of(JordanFamily::Z1_prime, Partition{2, 1}) == ErrorCode::domain_violation);
  CHECK(in_family(JordanFamily::Z1_prime, Partition{3, 2, 2}));
  CHECK_THROWS_AS(z1p_to_bp_odd(Partition{1, 1}), DomainError);
  CHECK_THROWS_AS(enumerate_jordan(JordanFamily::Z2, 5), DomainError);
  CHECK(parse_jordan_family("Z2p") == JordanFamily::Z2_prime);
  CHECK(to_string(LabeledPartition(Partition{2, 2, 1, 1}, {{2, 0}})) == "(2,2,1,1){2:0}");
}
