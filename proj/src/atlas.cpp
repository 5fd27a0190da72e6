#include "strata/atlas.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "strata/error.hpp"

namespace strata {

namespace {

#include "atlas_data.inc"

constexpr std::string_view kTilde = "\xC3\x83";  // U+00C3, the "A with tilde" of Carter's notation

std::size_t index_of(ExceptionalGroup g) { return static_cast<std::size_t>(g); }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string_view::npos ? s.npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

int to_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorCode::parse_error, "bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

bool is_prime(int r) {
  if (r < 2) return false;
  for (int d = 2; d * d <= r; ++d)
    if (r % d == 0) return false;
  return true;
}

[[noreturn]] void malformed(std::string_view raw, std::string_view why) {
  throw Error(ErrorCode::malformed_label,
              "malformed Carter label '" + std::string(raw) + "': " + std::string(why));
}

// One '+'-free term such as "2A_1", "Ã_2", "D_4(a_1)". Returns mult * index
// and appends the normalised spelling to `out`.
int parse_term(std::string_view raw, std::string_view term, std::string& out, int& primes) {
  std::size_t i = 0;
  int mult = 1;
  if (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
    std::size_t j = i;
    while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) ++j;
    mult = to_int(term.substr(i, j - i), "multiplicity");
    if (mult < 1) malformed(raw, "multiplicity must be positive");
    out += term.substr(i, j - i);
    i = j;
  }
  // "Ã" stands for a tilde-decorated A; "~A" is accepted as input.
  if (term.substr(i, 2) == "~A") {
    out += kTilde;
    i += 2;
  } else if (term.substr(i, kTilde.size()) == kTilde) {
    out += kTilde;
    i += kTilde.size();
  } else {
    if (i >= term.size() || term[i] < 'A' || term[i] > 'G') malformed(raw, "expected a series letter");
    out += term[i++];
  }
  while (i < term.size() && term[i] == '\'') {
    ++primes;
    ++i;
  }
  if (i >= term.size() || term[i] != '_') malformed(raw, "expected '_' after the series letter");
  ++i;
  std::size_t j = i;
  while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) ++j;
  if (j == i) malformed(raw, "expected an index");
  const int index = to_int(term.substr(i, j - i), "index");
  out += '_';
  out += term.substr(i, j - i);
  i = j;
  if (i < term.size() && term[i] == '(') {
    const auto close = term.find(')', i);
    if (close == std::string_view::npos) malformed(raw, "unclosed annotation");
    const auto note = term.substr(i, close - i + 1);
    if (note.size() < 5 || note.substr(0, 3) != "(a_") malformed(raw, "annotation must read (a_k)");
    to_int(note.substr(3, note.size() - 4), "annotation index");
    out += note;
    i = close + 1;
  }
  while (i < term.size() && term[i] == '\'') {
    ++primes;
    ++i;
  }
  if (i != term.size()) malformed(raw, "trailing characters in term '" + std::string(term) + "'");
  return mult * index;
}

void append_int(std::string& out, int v) { out += std::to_string(v); }

std::string join_factors(const std::vector<std::pair<char, int>>& factors) {
  std::string out;
  for (const auto& [letter, n] : factors) {
    if (n == 0) continue;
    out += letter;
    out += '_';
    append_int(out, n);
  }
  return out;
}

}  // namespace

std::string_view to_string(ExceptionalGroup g) {
  switch (g) {
    case ExceptionalGroup::G2: return "G2";
    case ExceptionalGroup::F4: return "F4";
    case ExceptionalGroup::E6: return "E6";
    case ExceptionalGroup::E7: return "E7";
    case ExceptionalGroup::E8: return "E8";
  }
  return "?";
}

ExceptionalGroup parse_exceptional_group(std::string_view name) {
  std::string s;
  for (char c : name)
    if (c != '_') s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (auto g : kExceptionalGroups)
    if (to_string(g) == s) return g;
  throw Error(ErrorCode::parse_error, "unknown exceptional group '" + std::string(name) + "'");
}

int rank(ExceptionalGroup g) {
  switch (g) {
    case ExceptionalGroup::G2: return 2;
    case ExceptionalGroup::F4: return 4;
    case ExceptionalGroup::E6: return 6;
    case ExceptionalGroup::E7: return 7;
    case ExceptionalGroup::E8: return 8;
  }
  return 0;
}

int positive_roots(ExceptionalGroup g) {
  switch (g) {
    case ExceptionalGroup::G2: return 6;
    case ExceptionalGroup::F4: return 24;
    case ExceptionalGroup::E6: return 36;
    case ExceptionalGroup::E7: return 63;
    case ExceptionalGroup::E8: return 120;
  }
  return 0;
}

std::string coxeter_label(ExceptionalGroup g) {
  const auto name = to_string(g);
  return std::string(1, name[0]) + "_" + std::string(name.substr(1));
}

CarterLabel parse_carter(std::string_view raw) {
  std::string_view s = raw;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) malformed(raw, "empty label");

  int outer_primes = 0;
  while (!s.empty() && s.back() == '\'') {
    ++outer_primes;
    s.remove_suffix(1);
  }
  bool wrapped = false;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    wrapped = true;
    s = s.substr(1, s.size() - 2);
  }

  // Split on '+' outside the "(a_k)" annotations.
  std::vector<std::string_view> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) malformed(raw, "unbalanced parentheses");
    if (s[i] == '+' && depth == 0) {
      terms.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) malformed(raw, "unbalanced parentheses");
  terms.push_back(s.substr(start));

  CarterLabel out;
  std::string body;
  int inner_primes = 0;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (terms[t].empty()) malformed(raw, "empty term");
    if (t) body += '+';
    out.parsed_rank += parse_term(raw, terms[t], body, inner_primes);
  }
  if (inner_primes && (terms.size() > 1 || outer_primes))
    malformed(raw, "primes inside a compound label");
  const int primes = outer_primes + inner_primes;
  if (primes > 2) malformed(raw, "at most two primes");
  if (terms.size() > 1 && primes && !wrapped) malformed(raw, "primed sums must be parenthesised");

  out.raw = wrapped ? "(" + body + ")" : body;
  out.raw.append(static_cast<std::size_t>(primes), '\'');
  return out;
}

std::string to_string(const RepLabel& rep) {
  std::string out = std::to_string(rep.degree) + "_" + std::to_string(rep.n_e);
  if (rep.star) out += "*" + std::to_string(rep.star);
  if (rep.synthetic_id) out += "#" + std::to_string(rep.synthetic_id);
  return out;
}

std::string format_row(const AtlasRow& row) {
  std::string out(to_string(row.group));
  out += " | ";
  for (std::size_t i = 0; i < row.classes.size(); ++i) {
    if (i) out += ", ";
    out += row.classes[i].raw;
  }
  out += " | " + std::to_string(row.rep.degree) + " | " + std::to_string(row.rep.n_e) + " | ";
  out += row.rep.star ? std::to_string(row.rep.star) : "-";
  out += " | " + std::to_string(row.rep.synthetic_id);
  if (!row.provenance.empty()) out += " | " + row.provenance;
  return out;
}

Atlas Atlas::parse(std::string_view text) {
  Atlas atlas;
  bool in_preamble = true;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') {
      if (in_preamble && !content.empty()) {
        atlas.preamble_ += line;
        atlas.preamble_ += '\n';
      }
      continue;
    }
    in_preamble = false;

    const auto where = " (line " + std::to_string(line_no) + ")";
    const auto fields = split(content, '|');
    if (fields.size() != 6 && fields.size() != 7)
      throw Error(ErrorCode::parse_error, "atlas record needs 6 or 7 fields" + where);
    AtlasRow row;
    row.group = parse_exceptional_group(fields[0]);
    for (const auto& c : split(fields[1], ',')) {
      row.classes.push_back(parse_carter(c));
      if (row.classes.back().parsed_rank > rank(row.group))
        throw Error(ErrorCode::parse_error, "class " + c + " exceeds the rank" + where);
    }
    row.rep.group = row.group;
    row.rep.degree = to_int(fields[2], "degree");
    row.rep.n_e = to_int(fields[3], "n");
    if (fields[4] != "-") {
      row.rep.star = to_int(fields[4], "star");
      if (row.rep.star != 2 && row.rep.star != 3)
        throw Error(ErrorCode::parse_error, "star must be -, 2 or 3" + where);
    }
    row.rep.synthetic_id = to_int(fields[5], "id");
    if (fields.size() == 7) row.provenance = fields[6];
    for (const auto& other : atlas.rows_[index_of(row.group)])
      if (other.rep == row.rep)
        throw Error(ErrorCode::parse_error, "duplicate representation " + to_string(row.rep) + where);
    atlas.rows_[index_of(row.group)].push_back(std::move(row));
  }
  return atlas;
}

Atlas Atlas::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open atlas file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string_view Atlas::builtin_text() { return kAtlasData; }

const Atlas& Atlas::builtin() {
  static const Atlas atlas = parse(kAtlasData);
  return atlas;
}

std::span<const AtlasRow> Atlas::rows(ExceptionalGroup g) const { return rows_[index_of(g)]; }

std::size_t Atlas::row_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

RepLabel Atlas::phi(ExceptionalGroup g, std::string_view label, std::optional<int> variant) const {
  const auto wanted = parse_carter(label).raw;
  std::vector<const AtlasRow*> hits;
  for (const auto& row : rows(g))
    for (const auto& c : row.classes)
      if (c.raw == wanted) hits.push_back(&row);
  if (hits.empty())
    throw Error(ErrorCode::unknown_label,
                "no class " + wanted + " in the " + std::string(to_string(g)) + " table");
  if (variant) {
    if (*variant < 0 || *variant >= static_cast<int>(hits.size()))
      throw Error(ErrorCode::unknown_label, "class " + wanted + " has no variant " + std::to_string(*variant));
    return hits[*variant]->rep;
  }
  if (hits.size() > 1) {
    std::string reps;
    for (const auto* h : hits) reps += (reps.empty() ? "" : ", ") + to_string(h->rep);
    throw Error(ErrorCode::ambiguous_label, "class " + wanted + " occurs in " +
                                                std::to_string(hits.size()) + " rows of the " +
                                                std::string(to_string(g)) + " table (" + reps +
                                                "); pass a variant index");
  }
  return hits.front()->rep;
}

const AtlasRow& Atlas::row(const RepLabel& rep) const {
  for (const auto& row : rows(rep.group))
    if (row.rep == rep) return row;
  throw Error(ErrorCode::unknown_rep,
              "no representation " + to_string(rep) + " in the " + std::string(to_string(rep.group)) + " table");
}

std::vector<CarterLabel> Atlas::fiber(const RepLabel& rep) const { return row(rep).classes; }

const RepLabel& Atlas::find_rep(ExceptionalGroup g, int degree, int n_e, std::optional<int> star,
                                std::optional<int> synthetic_id) const {
  std::vector<const RepLabel*> hits;
  for (const auto& row : rows(g)) {
    const auto& r = row.rep;
    if (r.degree != degree || r.n_e != n_e) continue;
    if (star && r.star != *star) continue;
    if (synthetic_id && r.synthetic_id != *synthetic_id) continue;
    hits.push_back(&r);
  }
  const auto name = std::to_string(degree) + "_" + std::to_string(n_e);
  if (hits.empty())
    throw Error(ErrorCode::unknown_rep, "no representation " + name + " in the " + std::string(to_string(g)) + " table");
  if (hits.size() > 1)
    throw Error(ErrorCode::ambiguous_label,
                name + " names " + std::to_string(hits.size()) + " rows; give a star or an id");
  return *hits.front();
}

std::vector<RepLabel> Atlas::strata_for_characteristic(ExceptionalGroup g, int r) const {
  if (r != 0 && !is_prime(r))
    throw DomainError("characteristic must be 0 or a prime, got " + std::to_string(r));
  std::vector<RepLabel> out;
  for (const auto& row : rows(g))
    if (row.rep.star == 0 || row.rep.star == r) out.push_back(row.rep);
  return out;
}

CarterLabel Atlas::cross_section(const RepLabel& rep) const {
  const auto& classes = row(rep).classes;
  const int n = rank(rep.group);
  const CarterLabel* best = nullptr;
  bool tie = false;
  for (const auto& c : classes) {
    const int m = n - c.parsed_rank;
    if (!best || m < n - best->parsed_rank) {
      best = &c;
      tie = false;
    } else if (m == n - best->parsed_rank) {
      tie = true;
    }
  }
  if (tie)
    throw ConsistencyError("fibre of " + to_string(rep) + " in " + std::string(to_string(rep.group)) +
                           " has no unique m-minimiser");
  return *best;
}

std::string Atlas::dump() const {
  std::string out = preamble_;
  for (const auto& group_rows : rows_)
    for (const auto& row : group_rows) out += format_row(row) + "\n";
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

IsolatedFlavor parse_isolated_flavor(std::string_view name) {
  std::string s;
  for (char c : name) s += c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "pseudo_levi") return IsolatedFlavor::pseudo_levi;
  if (s == "double_isolated") return IsolatedFlavor::double_isolated;
  throw Error(ErrorCode::parse_error, "unknown isolated-subgroup flavour '" + std::string(name) + "'");
}

std::vector<IsolatedSubgroupEntry> isolated_subgroups(std::string_view root_type, IsolatedFlavor flavor) {
  std::string name;
  for (char c : root_type)
    if (c != '_') name += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (name.size() < 2) throw DomainError("bad root system type '" + std::string(root_type) + "'");
  const char series = name[0];
  const int n = to_int(std::string_view(name).substr(1), "rank");
  const bool pl = flavor == IsolatedFlavor::pseudo_levi;
  const std::string group = std::string(1, series) + "_" + std::to_string(n);

  std::vector<std::string> types;
  auto not_one = [](int k) { return k != 1; };
  switch (series) {
    case 'A':
      if (n < 0) break;
      types = {group};
      break;
    case 'B':
    case 'C':
      if (n < 2) throw DomainError(group + " needs rank >= 2");
      if (pl && series == 'B') {
        for (int a = n; a >= 0; --a)
          if (not_one(n - a)) types.push_back(join_factors({{'B', a}, {'D', n - a}}));
      } else if (pl) {
        for (int a = n; 2 * a >= n; --a) types.push_back(join_factors({{'C', a}, {'C', n - a}}));
      } else {
        for (int ab = n; ab >= 0; --ab)
          for (int a = ab; 2 * a >= ab; --a)
            for (int c = n - ab; 2 * c >= n - ab; --c)
              if (not_one(c) && not_one(n - ab - c))
                types.push_back(join_factors({{'B', a}, {'B', ab - a}, {'D', c}, {'D', n - ab - c}}));
      }
      break;
    case 'D':
      if (n < 4) throw DomainError(group + " needs rank >= 4");
      if (pl) {
        for (int a = n; 2 * a >= n; --a)
          if (not_one(a) && not_one(n - a)) types.push_back(join_factors({{'D', a}, {'D', n - a}}));
      } else {
        for (int a = n; a >= 0; --a)
          for (int b = std::min(a, n - a); b >= 0; --b)
            for (int c = std::min(b, n - a - b); c >= 0; --c) {
              const int d = n - a - b - c;
              if (d > c || !not_one(a) || !not_one(b) || !not_one(c) || !not_one(d)) continue;
              types.push_back(join_factors({{'D', a}, {'D', b}, {'D', c}, {'D', d}}));
            }
      }
      break;
    case 'E':
      if (n == 6) types = {"E_6", "A_5A_1", "A_2A_2A_2"};
      else if (n == 7) {
        types = {"E_7", "D_6A_1", "A_7", "A_5A_2", "A_3A_3A_1"};
        if (!pl) types.push_back("D_4A_1A_1A_1");
      } else if (n == 8) {
        types = {"E_8", "E_7A_1", "E_6A_2", "D_5A_3", "A_4A_4", "A_5A_2A_1", "A_7A_1", "A_8", "D_8"};
        if (!pl) types.insert(types.end(), {"D_6D_2", "D_4D_4", "A_3A_3A_1A_1", "A_2A_2A_2A_2"});
      } else {
        throw DomainError("no root system " + group);
      }
      break;
    case 'F':
      if (n != 4) throw DomainError("no root system " + group);
      types = {"F_4", "B_3A_1", "A_2A_2", "A_3A_1", "B_4"};
      if (!pl) types.insert(types.end(), {"tau(A_3A_1)", "tau(B_4)", "B_2B_2"});
      break;
    case 'G':
      if (n != 2) throw DomainError("no root system " + group);
      types = {"G_2", "A_2", "A_1A_1"};
      if (!pl) types.push_back("tau(A_2)");
      break;
    default:
      throw DomainError("bad root system type '" + std::string(root_type) + "'");
  }

  std::vector<IsolatedSubgroupEntry> out;
  for (auto& t : types) out.push_back({group, flavor, std::move(t)});
  return out;
}

}  // namespace strata
