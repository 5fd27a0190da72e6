#include "strata/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "strata/classical.hpp"
#include "strata/error.hpp"
#include "strata/jordan.hpp"
#include "strata/weyl.hpp"

namespace strata {

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

struct GoldenRow {
  LabeledPartition nu;
  Bipartition bp;
};

std::string check_golden(JordanFamily f, int N, const std::vector<GoldenRow>& rows) {
  for (const auto& row : rows) {
    require_family(f, row.nu);
    const auto got = jordan_to_bp(f, row.nu);
    expect(got == row.bp, to_string(row.nu) + " -> " + to_string(got) + ", table says " + to_string(row.bp));
  }
  const auto members = enumerate_jordan(f, N);
  expect(members.size() == rows.size(), "family has " + std::to_string(members.size()) +
                                            " members, table has " + std::to_string(rows.size()));
  return std::to_string(rows.size()) + " rows";
}

std::string golden_z2_n6(const Atlas&) {
  return check_golden(JordanFamily::Z2, 6,
                      {{{{6}}, {3}},
                       {{{4, 2}}, {2, 1}},
                       {{{4, 1, 1}}, {2, 0, 1}},
                       {{{3, 3}}, {1, 2}},
                       {{{2, 2, 2}}, {1, 1, 1}},
                       {{{2, 2, 1, 1}, {{2, 1}}}, {1, 1, 0, 1}},
                       {{{2, 2, 1, 1}, {{2, 0}}}, {0, 2, 0, 1}},
                       {{{2, 1, 1, 1, 1}}, {1, 0, 1, 0, 1}},
                       {{{1, 1, 1, 1, 1, 1}}, {0, 1, 0, 1, 0, 1}}});
}

std::string golden_z2p_n8(const Atlas&) {
  return check_golden(JordanFamily::Z2_prime, 8,
                      {{{{6, 2}}, {4, 0}},
                       {{{4, 4}, {{4, 1}}}, {3, 1}},
                       {{{4, 4}, {{4, 0}}}, {2, 2}},
                       {{{4, 2, 1, 1}}, {3, 0, 1, 0}},
                       {{{3, 3, 1, 1}}, {2, 1, 1, 0}},
                       {{{2, 2, 2, 2}, {{2, 1}}}, {2, 0, 2, 0}},
                       {{{2, 2, 2, 2}, {{2, 0}}}, {1, 1, 1, 1}},
                       {{{2, 2, 1, 1, 1, 1}, {{2, 1}}}, {2, 0, 1, 0, 1, 0}},
                       {{{2, 2, 1, 1, 1, 1}, {{2, 0}}}, {1, 1, 1, 0, 1, 0}},
                       {{{1, 1, 1, 1, 1, 1, 1, 1}}, {1, 0, 1, 0, 1, 0, 1, 0}}});
}

std::string bijectivity(const Atlas&) {
  struct Case {
    JordanFamily family;
    int first, last;
  };
  const Case cases[] = {{JordanFamily::Z1, 2, 16},
                        {JordanFamily::Z2, 2, 16},
                        {JordanFamily::Z1_prime, 1, 17},
                        {JordanFamily::Z1_prime, 2, 16},
                        {JordanFamily::Z2_prime, 2, 16}};
  std::size_t checked = 0;
  for (const auto& c : cases) {
    for (int N = c.first; N <= c.last; N += 2) {
      const auto cod = codomain(c.family, N);
      const auto expected = enumerate_bipartitions(cod.weight, cod.excess);
      std::set<Bipartition> image;
      const auto members = enumerate_jordan(c.family, N);
      for (const auto& nu : members) {
        const auto bp = jordan_to_bp(c.family, nu);
        expect(image.insert(bp).second,
               std::string(to_string(c.family)) + " N=" + std::to_string(N) + ": " + to_string(bp) + " hit twice");
      }
      expect(image == std::set<Bipartition>(expected.begin(), expected.end()),
             std::string(to_string(c.family)) + " N=" + std::to_string(N) + ": image has " +
                 std::to_string(image.size()) + " labels, codomain " + std::to_string(expected.size()));
      checked += members.size();
    }
  }
  return std::to_string(checked) + " Jordan types";
}

std::string sp4_strata(const Atlas&) {
  const GroupDescriptor sp4{Series::Sp, 4, Characteristic::zero};
  const auto strata = enumerate_strata(sp4);
  std::multiset<int> dims;
  for (const auto& s : strata) dims.insert(s.class_dim);
  expect(strata.size() == 5, std::to_string(strata.size()) + " strata");
  expect(dims == std::multiset<int>{8, 6, 4, 4, 0}, "class dimensions differ from {8,6,4,4,0}");

  const GroupDescriptor odd{Series::Sp, 4, Characteristic::odd_prime};
  const auto semisimple = classify({odd,
                                    {{"1", OrbitKind::involutive, {Partition{1, 1}}},
                                     {"-1", OrbitKind::involutive, {Partition{1, 1}}}}});
  const auto unipotent = classify({odd, {{"1", OrbitKind::involutive, {Partition{2, 1, 1}}}}});
  expect(semisimple.class_dim == 4 && unipotent.class_dim == 4, "examples do not land in dimension 4");
  expect(semisimple.bp != unipotent.bp, "examples land in the same stratum");
  return to_string(semisimple.bp) + " and " + to_string(unipotent.bp);
}

std::string dimension_equivalence(const Atlas&) {
  for (int n = 1; n <= 6; ++n) {
    const auto so = dimension_set({Series::SO_odd, 2 * n + 1, Characteristic::zero});
    const auto sp0 = dimension_set({Series::Sp, 2 * n, Characteristic::zero});
    const auto sp2 = dimension_set({Series::Sp, 2 * n, Characteristic::two});
    const GroupDescriptor g{Series::Sp, 2 * n, Characteristic::two};
    std::set<int> unipotent;
    for (const auto& nu : enumerate_jordan(JordanFamily::Z2, 2 * n))
      unipotent.insert(2 * positive_roots(g) - 2 * n_invariant(z2_to_bp(nu), n));
    const auto tag = " (n=" + std::to_string(n) + ")";
    expect(so == sp0, "SO_odd and Sp dimension sets differ" + tag);
    expect(sp0 == sp2, "characteristic 0 and 2 dimension sets differ" + tag);
    expect(sp2 == unipotent, "unipotent class dimensions differ from the strata dimensions" + tag);
  }
  return "n = 1..6";
}

std::string minimal_stratum(const Atlas&) {
  for (int n = 3; n <= 6; ++n) {
    for (const GroupDescriptor g : {GroupDescriptor{Series::Sp, 2 * n, Characteristic::zero},
                                   GroupDescriptor{Series::SO_odd, 2 * n + 1, Characteristic::zero}}) {
      int best = -1;
      for (const auto& s : enumerate_strata(g))
        if (s.class_dim > 0 && (best < 0 || s.class_dim < best)) best = s.class_dim;
      expect(best == 2 * n, std::string(to_string(g.series)) + " n=" + std::to_string(n) +
                                ": minimal nonzero dimension " + std::to_string(best));
    }
  }
  return "n = 3..6";
}

std::string e8_counts(const Atlas& atlas) {
  const auto g = ExceptionalGroup::E8;
  const auto rows = atlas.rows(g).size();
  const auto c0 = atlas.strata_for_characteristic(g, 0).size();
  const auto c2 = atlas.strata_for_characteristic(g, 2).size();
  const auto c3 = atlas.strata_for_characteristic(g, 3).size();
  std::ostringstream tally;
  tally << rows << " rows; " << c0 << "/" << c2 << "/" << c3 << " in char 0/2/3";
  expect(rows == 75 && c0 == 70 && c2 == 74 && c3 == 71, tally.str());
  return tally.str();
}

std::string star_inventory(const Atlas& atlas) {
  using Stars = std::set<std::string>;
  const std::map<ExceptionalGroup, Stars> expected = {
      {ExceptionalGroup::G2, {"1_3*3"}},
      {ExceptionalGroup::F4, {"9_6*2", "4_7*2", "4_8*2", "2_16*2"}},
      {ExceptionalGroup::E6, {}},
      {ExceptionalGroup::E7, {"84_15*2"}},
      {ExceptionalGroup::E8, {"1050_10*2", "840_14*2", "168_24*2", "972_32*2", "175_12*3"}}};
  for (const auto& [g, want] : expected) {
    Stars got;
    for (const auto& row : atlas.rows(g))
      if (row.rep.star)
        got.insert(std::to_string(row.rep.degree) + "_" + std::to_string(row.rep.n_e) + "*" +
                   std::to_string(row.rep.star));
    expect(got == want, std::string(to_string(g)) + " starred rows differ");
  }
  return "5 groups";
}

std::string table_endpoints(const Atlas& atlas) {
  for (auto g : kExceptionalGroups) {
    const auto bottom = atlas.phi(g, "A_0");
    const auto top = atlas.phi(g, coxeter_label(g));
    expect(bottom.degree == 1 && bottom.n_e == positive_roots(g),
           std::string(to_string(g)) + ": A_0 -> " + to_string(bottom));
    expect(top.degree == 1 && top.n_e == 0,
           std::string(to_string(g)) + ": " + coxeter_label(g) + " -> " + to_string(top));
  }
  return "5 groups";
}

std::string cross_section(const Atlas& atlas) {
  std::size_t fibres = 0;
  for (auto g : kExceptionalGroups)
    for (const auto& row : atlas.rows(g)) {
      atlas.cross_section(row.rep);
      ++fibres;
    }
  auto classical = [&](WeylSeries s, int first, int last) {
    for (int n = first; n <= last; ++n) fibres += fibers_and_cross_section({s, n}).size();
  };
  classical(WeylSeries::B, 1, 6);
  classical(WeylSeries::D, 4, 6);
  classical(WeylSeries::A, 1, 8);
  return std::to_string(fibres) + " fibres";
}

std::string phi_surjectivity(const Atlas&) {
  auto image_of = [](const WeylType& w) {
    std::set<Bipartition> image;
    for (const auto& c : enumerate_classes(w)) image.insert(phi_classical(w, c));
    return image;
  };
  auto check = [&](WeylSeries s, int n, int weight, Excess x) {
    const auto expected = enumerate_bipartitions(weight, x);
    expect(image_of({s, n}) == std::set<Bipartition>(expected.begin(), expected.end()),
           std::string(to_string(s)) + std::to_string(n) + ": image differs from the strata labels");
  };
  for (int n = 1; n <= 6; ++n) check(WeylSeries::B, n, n, {2, 2});
  for (int n = 4; n <= 6; ++n) check(WeylSeries::D, n, n, {0, 4});
  for (int n = 1; n <= 8; ++n) {
    const WeylType w{WeylSeries::A, n};
    for (const auto& c : enumerate_classes(w))
      expect(phi_classical(w, c) == Bipartition::from_partition(c.positive),
             "A" + std::to_string(n) + ": class " + to_string(c) + " is not sent to itself");
    check(WeylSeries::A, n, n + 1, {0, 0});
  }
  return "B1-6, D4-6, A1-8";
}

std::string gl_oracle(const Atlas&) {
  std::size_t checked = 0;
  for (int n = 1; n <= 12; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      int oracle = 0;
      const auto dual = conjugate(p);
      for (int c : dual.parts()) oracle += c * (c - 1) / 2;
      const int got = n_invariant(Bipartition::from_partition(p), n);
      expect(got == oracle, to_string(p) + ": " + std::to_string(got) + " vs " + std::to_string(oracle));
      ++checked;
    }
  return std::to_string(checked) + " partitions";
}

using Check = std::function<std::string(const Atlas&)>;

const std::map<int, Check>& checks() {
  static const std::map<int, Check> table = {
      {1, golden_z2_n6},     {2, golden_z2p_n8},  {3, bijectivity},      {4, sp4_strata},
      {5, dimension_equivalence}, {6, minimal_stratum}, {7, e8_counts}, {8, star_inventory},
      {9, table_endpoints},  {10, cross_section}, {11, phi_surjectivity}, {12, gl_oracle}};
  return table;
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> list = {
      {1, "golden-z2-n6", "Z2 N=6 table reproduced by z2_to_bp", 1.0},
      {2, "golden-z2p-n8", "'Z2 N=8 table reproduced by z2p_to_bp", 1.0},
      {3, "bijectivity", "five Jordan bijections, N <= 16 (odd N <= 17)", 10000.0},
      {4, "sp4-strata", "Sp4 has 5 strata, dims {8,6,4,4,0}", std::nullopt},
      {5, "dimension-equivalence", "SO_{2n+1} / Sp_{2n} char 0 / char 2 / unipotent dims agree, n <= 6", 5000.0},
      {6, "minimal-stratum", "minimal nonzero stratum dimension is 2n, n = 3..6", std::nullopt},
      {7, "e8-counts", "E8: 75 rows; 70 / 74 / 71 strata in char 0 / 2 / 3", std::nullopt},
      {8, "star-inventory", "starred rows of G2, F4, E6, E7, E8", std::nullopt},
      {9, "table-endpoints", "A_0 -> 1_N and Coxeter class -> 1_0", std::nullopt},
      {10, "cross-section", "unique m-minimiser in every fibre", 10000.0},
      {11, "phi-surjectivity", "phi_classical onto the strata labels", std::nullopt},
      {12, "gl-oracle", "GL n_E equals sum of binom(conjugate part, 2), n <= 12", 1000.0},
  };
  return list;
}

CriterionResult run_criterion(const Criterion& c, const Atlas& atlas) {
  CriterionResult r{c.number, std::string(c.name), false, 0, c.budget_ms, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = checks().at(c.number)(atlas);
    r.passed = true;
  } catch (const Failure& f) {
    r.detail = f.what;
  } catch (const std::exception& e) {
    r.detail = std::string("threw: ") + e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (r.passed && c.budget_ms && r.elapsed_ms > *c.budget_ms) {
    r.passed = false;
    std::ostringstream os;
    os << "over budget: " << r.elapsed_ms << " ms > " << *c.budget_ms << " ms";
    r.detail = os.str();
  }
  return r;
}

std::vector<CriterionResult> run_suite(std::string_view suite, const Atlas& atlas) {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria())
    if (suite == "all" || suite == c.name || suite == std::to_string(c.number)) out.push_back(run_criterion(c, atlas));
  if (out.empty()) throw DomainError("unknown verification suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace strata
