#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

enum class ExceptionalGroup { G2, F4, E6, E7, E8 };

inline constexpr std::array<ExceptionalGroup, 5> kExceptionalGroups = {
    ExceptionalGroup::G2, ExceptionalGroup::F4, ExceptionalGroup::E6, ExceptionalGroup::E7,
    ExceptionalGroup::E8};

std::string_view to_string(ExceptionalGroup g);
/// Accepts "E8" and "E_8".
ExceptionalGroup parse_exceptional_group(std::string_view name);
int rank(ExceptionalGroup g);
int positive_roots(ExceptionalGroup g);
/// Carter label of the Coxeter class, e.g. "E_8".
std::string coxeter_label(ExceptionalGroup g);

/// Weyl group class in Carter's notation. `raw` is normalised: tildes are
/// written "Ã" and primes trail the label.
struct CarterLabel {
  std::string raw;
  int parsed_rank = 0;

  friend bool operator==(const CarterLabel&, const CarterLabel&) = default;
};

/// Grammar: ['('] term ('+' term)* [')'] [primes], term := [mult]
/// ('Ã' | '~A' | letter) '_' index ['(a_' k ')']. Primes may also sit between letter and
/// index ("A''_5"). Rank is the sum of mult * index.
CarterLabel parse_carter(std::string_view raw);

/// Irreducible representation written d_n, with its S2 - S1 marker.
struct RepLabel {
  ExceptionalGroup group = ExceptionalGroup::G2;
  int degree = 0;
  int n_e = 0;
  int star = 0;          ///< 0, or the prime r of the *_r marker
  int synthetic_id = 0;  ///< separates rows sharing (degree, n_e)

  friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

/// "1050_10*2"; "#id" is appended when synthetic_id is nonzero.
std::string to_string(const RepLabel& rep);

struct AtlasRow {
  ExceptionalGroup group = ExceptionalGroup::G2;
  std::vector<CarterLabel> classes;
  RepLabel rep;
  std::string provenance;
};

/// The class-to-representation tables for G2, F4, E6, E7 and E8.
class Atlas {
 public:
  /// Parses the record-per-line format (see data/atlas.txt).
  static Atlas parse(std::string_view text);
  static Atlas from_file(const std::string& path);
  /// Tables compiled into the library.
  static const Atlas& builtin();
  static std::string_view builtin_text();

  std::span<const AtlasRow> rows(ExceptionalGroup g) const;
  std::size_t row_count() const;

  /// Representation attached to a class. Throws unknown_label, or
  /// ambiguous_label when the label sits in several rows and `variant`
  /// (0-based index among those rows, in table order) is not given.
  RepLabel phi(ExceptionalGroup g, std::string_view label,
               std::optional<int> variant = std::nullopt) const;

  const AtlasRow& row(const RepLabel& rep) const;
  std::vector<CarterLabel> fiber(const RepLabel& rep) const;

  /// Looks a representation up by (degree, n); star and id narrow the match.
  const RepLabel& find_rep(ExceptionalGroup g, int degree, int n_e,
                           std::optional<int> star = std::nullopt,
                           std::optional<int> synthetic_id = std::nullopt) const;

  /// Strata holding a unipotent class in characteristic r (0 or a prime).
  std::vector<RepLabel> strata_for_characteristic(ExceptionalGroup g, int r) const;

  /// Unique class of the fibre with the smallest fixed-space dimension
  /// rank(g) - parsed_rank. Throws ConsistencyError on a tie.
  CarterLabel cross_section(const RepLabel& rep) const;

  /// Serialises back to the record format; parse(dump()) == *this.
  std::string dump() const;

 private:
  std::string preamble_;
  std::array<std::vector<AtlasRow>, 5> rows_;
};

std::string format_row(const AtlasRow& row);

/// 64-bit FNV-1a, used to pin the shipped tables.
std::uint64_t fnv1a64(std::string_view bytes);

enum class IsolatedFlavor { pseudo_levi, double_isolated };

struct IsolatedSubgroupEntry {
  std::string group;
  IsolatedFlavor flavor = IsolatedFlavor::pseudo_levi;
  std::string subtype;

  friend bool operator==(const IsolatedSubgroupEntry&, const IsolatedSubgroupEntry&) = default;
};

IsolatedFlavor parse_isolated_flavor(std::string_view name);

/// Types of the reflection subgroups W_{e'} (pseudo-Levi) or W_{e,e'}
/// (double isolated) for isolated parameters of an irreducible root system
/// such as "E7", "B5" or "A3".
std::vector<IsolatedSubgroupEntry> isolated_subgroups(std::string_view root_type,
                                                      IsolatedFlavor flavor);

}  // namespace strata
