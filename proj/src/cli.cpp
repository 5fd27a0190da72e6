#include "strata/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "strata/atlas.hpp"
#include "strata/classical.hpp"
#include "strata/error.hpp"
#include "strata/jordan.hpp"
#include "strata/json_io.hpp"
#include "strata/verify.hpp"
#include "strata/weyl.hpp"

namespace strata::cli {

namespace {

constexpr const char* kAtlasEnv = "STRATA_ATLAS";

struct Outcome {
  json payload;
  std::vector<std::string> diagnostics;
  std::string table;
  int exit_code = ok;
};

struct Options {
  std::string format = "json";
  std::string data_path;

  std::string classify_input = "-";

  std::string phi_group, phi_type, phi_class;
  int phi_rank = 0;
  std::optional<int> phi_variant;

  std::string enum_series;
  int enum_dimension = 0;
  int enum_char = 0;

  std::string tables_group;
  std::optional<int> tables_char;
  bool tables_starred = false;
  bool tables_dump = false;
  std::string tables_isolated;

  std::string verify_suite = "all";

  std::string invert_family, invert_target;
  int invert_n = 0;
};

// Column-aligned text; the first row is the header.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

Atlas load_atlas(const Options& opt, std::vector<std::string>& diagnostics) {
  std::string path = opt.data_path;
  if (path.empty())
    if (const char* env = std::getenv(kAtlasEnv)) path = env;
  if (path.empty()) {
    diagnostics.push_back("atlas: builtin");
    return Atlas::builtin();
  }
  diagnostics.push_back("atlas: " + path);
  return Atlas::from_file(path);
}

json read_document(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("input is not JSON: ") + e.what());
  }
}

std::vector<std::string> stratum_cells(const StratumResult& s) {
  return {to_string(s.bp), std::to_string(s.n_e), std::to_string(s.class_dim), s.iota_degenerate ? "yes" : "no"};
}

Outcome do_classify(const Options& opt, std::istream& in) {
  Outcome o;
  const auto datum = spectral_datum_from_json(read_document(opt.classify_input, in));
  const auto result = classify(datum);
  if (datum.group.series == Series::SO_odd && datum.group.characteristic == Characteristic::two)
    o.diagnostics.push_back("SO_ODD in characteristic 2 classified through Sp_" +
                            std::to_string(datum.group.dimension - 1));
  o.payload = {{"input", to_json(datum)}, {"stratum", to_json(result)}};
  o.table = render_table({{"bp", "n_E", "class_dim", "iota_degenerate"}, stratum_cells(result)});
  return o;
}

Outcome do_phi(const Options& opt, std::vector<std::string>& diagnostics) {
  Outcome o;
  if (!opt.phi_group.empty()) {
    const auto atlas = load_atlas(opt, diagnostics);
    const auto g = parse_exceptional_group(opt.phi_group);
    const auto label = parse_carter(opt.phi_class);
    const auto rep = atlas.phi(g, label.raw, opt.phi_variant);
    const int m = rank(g) - label.parsed_rank;
    o.payload = {{"group", std::string(to_string(g))}, {"class", label.raw}, {"m", m}};
    const auto rep_json = to_json(rep);
    for (const auto& [k, v] : rep_json.items())
      if (k != "group") o.payload[k] = v;
    o.payload["class_dim"] = 2 * positive_roots(g) - 2 * rep.n_e;
    o.table = render_table({{"group", "class", "m", "rep", "class_dim"},
                            {std::string(to_string(g)), label.raw, std::to_string(m), to_string(rep),
                             std::to_string(2 * positive_roots(g) - 2 * rep.n_e)}});
    return o;
  }
  const WeylType w{parse_weyl_series(opt.phi_type), opt.phi_rank};
  const auto c = parse_signed_cycle_type(opt.phi_class);
  const auto bp = phi_classical(w, c);
  const int m = m_of_class(w, c);
  o.payload = {{"type", std::string(to_string(w.series))}, {"rank", w.rank}, {"class", to_json(c)},
               {"m", m}, {"bp", to_json(bp)}};
  o.table = render_table({{"type", "class", "m", "bp"},
                          {std::string(to_string(w.series)) + std::to_string(w.rank), to_string(c),
                           std::to_string(m), to_string(bp)}});
  return o;
}

// Family and weight of unipotent Jordan types for the group, if a single
// involutive orbit of full weight describes them.
std::optional<std::pair<JordanFamily, int>> unipotent_family(const GroupDescriptor& g) {
  const bool two = g.characteristic == Characteristic::two;
  switch (g.series) {
    case Series::GL: return std::nullopt;
    case Series::Sp: return std::pair{two ? JordanFamily::Z2 : JordanFamily::Z1, g.dimension};
    case Series::SO_odd:
      if (two) return std::pair{JordanFamily::Z2, g.dimension - 1};
      return std::pair{JordanFamily::Z1_prime, g.dimension};
    case Series::SO_even: return std::pair{two ? JordanFamily::Z2_prime : JordanFamily::Z1_prime, g.dimension};
  }
  return std::nullopt;
}

Outcome do_enumerate(const Options& opt) {
  Outcome o;
  const GroupDescriptor g{parse_series(opt.enum_series), opt.enum_dimension, characteristic_from_int(opt.enum_char)};
  const auto strata = enumerate_strata(g);

  // A unipotent witness per stratum, when the stratum has one.
  std::map<Bipartition, SpectralDatum> witness;
  if (g.series == Series::GL) {
    for (const auto& p : enumerate_partitions(g.dimension))
      witness[Bipartition::from_partition(p)] = {g, {{"1", OrbitKind::generic, {p}}}};
  } else if (const auto fam = unipotent_family(g)) {
    for (const auto& nu : enumerate_jordan(fam->first, fam->second))
      witness[jordan_to_bp(fam->first, nu)] =
          fam->second ? SpectralDatum{g, {{"1", OrbitKind::involutive, nu}}} : SpectralDatum{g, {}};
  }

  json list = json::array();
  std::vector<std::vector<std::string>> rows = {{"bp", "n_E", "class_dim", "iota_degenerate", "unipotent"}};
  for (const auto& s : strata) {
    auto entry = to_json(s);
    const auto it = witness.find(s.bp);
    entry["unipotent_datum"] = it == witness.end() ? json(nullptr) : to_json(it->second);
    list.push_back(entry);
    auto cells = stratum_cells(s);
    if (it == witness.end()) cells.push_back("-");
    else cells.push_back(it->second.orbits.empty() ? "()" : to_string(it->second.orbits.front().jordan));
    rows.push_back(cells);
  }
  std::vector<int> dims;
  for (const auto& s : strata) dims.push_back(s.class_dim);
  o.payload = {{"group", to_json(g)}, {"count", strata.size()}, {"class_dims", dims}, {"strata", list}};
  o.table = render_table(rows);
  return o;
}

json row_json(const Atlas& atlas, const AtlasRow& row) {
  json classes = json::array();
  for (const auto& c : row.classes) classes.push_back(c.raw);
  json out = {{"classes", classes}, {"rep", to_json(row.rep)},
              {"class_dim", 2 * positive_roots(row.group) - 2 * row.rep.n_e},
              {"cross_section", atlas.cross_section(row.rep).raw}};
  if (!row.provenance.empty()) out["provenance"] = row.provenance;
  return out;
}

Outcome do_tables(const Options& opt, std::vector<std::string>& diagnostics) {
  Outcome o;
  if (!opt.tables_isolated.empty()) {
    if (opt.tables_group.empty()) throw DomainError("--isolated needs --group");
    const auto flavor = parse_isolated_flavor(opt.tables_isolated);
    const auto entries = isolated_subgroups(opt.tables_group, flavor);
    json list = json::array();
    std::vector<std::vector<std::string>> rows = {{"group", "subtype"}};
    for (const auto& e : entries) {
      list.push_back(e.subtype);
      rows.push_back({e.group, e.subtype});
    }
    o.payload = {{"group", entries.empty() ? opt.tables_group : entries.front().group},
                 {"flavor", flavor == IsolatedFlavor::pseudo_levi ? "PSEUDO_LEVI" : "DOUBLE_ISOLATED"},
                 {"subtypes", list}};
    o.table = render_table(rows);
    return o;
  }

  const auto atlas = load_atlas(opt, diagnostics);
  if (opt.tables_dump) {
    if (!opt.tables_group.empty()) throw DomainError("--dump writes the whole atlas; drop --group");
    const auto text = atlas.dump();
    o.payload = {{"checksum", fnv1a64(text)}, {"rows", atlas.row_count()}, {"text", text}};
    o.table = text;
    return o;
  }
  if (opt.tables_group.empty()) throw DomainError("tables needs --group, --dump or --isolated");

  const auto g = parse_exceptional_group(opt.tables_group);
  std::vector<RepLabel> keep;
  if (opt.tables_char) keep = atlas.strata_for_characteristic(g, *opt.tables_char);
  json list = json::array();
  std::vector<std::vector<std::string>> rows = {{"rep", "class_dim", "cross_section", "classes"}};
  for (const auto& row : atlas.rows(g)) {
    if (opt.tables_starred && !row.rep.star) continue;
    if (opt.tables_char && std::find(keep.begin(), keep.end(), row.rep) == keep.end()) continue;
    const auto entry = row_json(atlas, row);
    list.push_back(entry);
    std::vector<std::string> classes;
    for (const auto& c : row.classes) classes.push_back(c.raw);
    rows.push_back({to_string(row.rep), std::to_string(entry["class_dim"].get<int>()),
                    entry["cross_section"].get<std::string>(), join(classes, ", ")});
  }
  o.payload = {{"group", std::string(to_string(g))}, {"count", list.size()}, {"rows", list}};
  o.table = render_table(rows);
  return o;
}

Outcome do_verify(const Options& opt, std::vector<std::string>& diagnostics) {
  Outcome o;
  const auto atlas = load_atlas(opt, diagnostics);
  const auto results = run_suite(opt.verify_suite, atlas);
  json list = json::array();
  std::vector<std::vector<std::string>> rows = {{"#", "criterion", "result", "ms", "detail"}};
  int failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    list.push_back({{"number", r.number}, {"name", r.name}, {"passed", r.passed},
                    {"elapsed_ms", r.elapsed_ms},
                    {"budget_ms", r.budget_ms ? json(*r.budget_ms) : json(nullptr)},
                    {"detail", r.detail}});
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(2) << r.elapsed_ms;
    rows.push_back({std::to_string(r.number), r.name, r.passed ? "PASS" : "FAIL", ms.str(), r.detail});
  }
  o.payload = {{"suite", opt.verify_suite}, {"passed", results.size() - failed}, {"failed", failed},
               {"criteria", list}};
  o.table = render_table(rows);
  if (failed) {
    o.exit_code = consistency_failure;
    o.diagnostics.push_back(std::to_string(failed) + " criterion(s) failed");
  }
  return o;
}

Outcome do_invert(const Options& opt) {
  Outcome o;
  const auto family = parse_jordan_family(opt.invert_family);
  const Bipartition target(parse_int_list(opt.invert_target));
  const auto nu = invert_bijection(family, opt.invert_n, target);
  o.payload = {{"family", std::string(to_string(family))}, {"N", opt.invert_n}, {"target", to_json(target)}};
  const auto nu_json = to_json(nu);
  for (const auto& [k, v] : nu_json.items()) o.payload[k] = v;
  o.table = render_table({{"family", "N", "target", "jordan"},
                          {std::string(to_string(family)), std::to_string(opt.invert_n), to_string(target),
                           to_string(nu)}});
  return o;
}

void emit(std::ostream& out, const std::string& format, const std::string& status, const json& payload,
          const std::vector<std::string>& diagnostics, const std::string& table) {
  if (format == "table") {
    out << table;
    for (const auto& d : diagnostics) out << "# " << d << '\n';
    return;
  }
  json envelope = {{"status", status}, {"payload", payload}, {"diagnostics", diagnostics}};
  out << envelope.dump(2) << '\n';
}

void emit_error(std::ostream& out, const std::string& format, std::string_view code, const std::string& message,
                const std::vector<std::string>& diagnostics) {
  const json payload = {{"code", std::string(code)}, {"message", message}};
  emit(out, format, "error", payload, diagnostics, "error [" + std::string(code) + "]: " + message + "\n");
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Strata of reductive groups: classification, class maps and tables", "strata"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--data", opt.data_path, std::string("Atlas data file (default: $") + kAtlasEnv + " or builtin)");

  auto* classify_cmd = app.add_subcommand("classify", "Stratum of a spectral datum (JSON document)");
  classify_cmd->add_option("input", opt.classify_input, "Path, or - for stdin");

  auto* phi_cmd = app.add_subcommand("phi", "Image of a Weyl group class");
  auto* group_opt = phi_cmd->add_option("--group", opt.phi_group, "Exceptional group G2|F4|E6|E7|E8");
  auto* type_opt = phi_cmd->add_option("--type", opt.phi_type, "Classical series A|B|C|D");
  auto* rank_opt = phi_cmd->add_option("--rank", opt.phi_rank, "Rank of the classical Weyl group");
  phi_cmd->add_option("--class", opt.phi_class, "Carter label, or signed cycle type \"3,1;2\"")->required();
  phi_cmd->add_option("--variant", opt.phi_variant, "Row index for a label listed twice");
  group_opt->excludes(type_opt)->excludes(rank_opt);
  type_opt->needs(rank_opt);
  rank_opt->needs(type_opt);

  auto* enum_cmd = app.add_subcommand("enumerate", "All strata of a classical group");
  enum_cmd->add_option("--series", opt.enum_series, "GL|Sp|SO_ODD|SO_EVEN")->required();
  enum_cmd->add_option("--dimension", opt.enum_dimension, "Natural module dimension")->required();
  enum_cmd->add_option("--char", opt.enum_char, "Characteristic: 0 or a prime");

  auto* tables_cmd = app.add_subcommand("tables", "Exceptional class tables");
  tables_cmd->add_option("--group", opt.tables_group, "Group, or root system type with --isolated");
  tables_cmd->add_option("--char", opt.tables_char, "Keep strata with a unipotent class in this characteristic");
  tables_cmd->add_flag("--starred", opt.tables_starred, "Only rows outside S_1");
  tables_cmd->add_flag("--dump", opt.tables_dump, "Write the atlas in its data-file format");
  tables_cmd->add_option("--isolated", opt.tables_isolated, "pseudo-levi|double-isolated");

  auto* verify_cmd = app.add_subcommand("verify", "Run acceptance checks");
  verify_cmd->add_option("--suite", opt.verify_suite, "all, a criterion name, or its number");

  auto* invert_cmd = app.add_subcommand("invert", "Jordan type mapped to a given bipartition");
  invert_cmd->add_option("--family", opt.invert_family, "Z1|Z2|Z1'|Z2'")->required();
  invert_cmd->add_option("--N", opt.invert_n, "Weight of the Jordan type")->required();
  invert_cmd->add_option("--target", opt.invert_target, "Bipartition, e.g. 1,1,0,1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    if (opt.format != "table") opt.format = "json";
    emit_error(out, opt.format, "usage", e.what(), {});
    return usage_error;
  }

  std::vector<std::string> diagnostics;
  try {
    Outcome o;
    if (*classify_cmd) o = do_classify(opt, in);
    else if (*phi_cmd) {
      if (opt.phi_group.empty() && opt.phi_type.empty()) {
        emit_error(out, opt.format, "usage", "phi needs --group or --type/--rank", {});
        return usage_error;
      }
      o = do_phi(opt, diagnostics);
    } else if (*enum_cmd) o = do_enumerate(opt);
    else if (*tables_cmd) o = do_tables(opt, diagnostics);
    else if (*verify_cmd) o = do_verify(opt, diagnostics);
    else o = do_invert(opt);
    diagnostics.insert(diagnostics.end(), o.diagnostics.begin(), o.diagnostics.end());
    emit(out, opt.format, o.exit_code == ok ? "ok" : "error", o.payload, diagnostics, o.table);
    return o.exit_code;
  } catch (const Error& e) {
    emit_error(out, opt.format, to_string(e.code()), e.what(), diagnostics);
    return e.code() == ErrorCode::consistency ? consistency_failure : domain_error;
  } catch (const std::exception& e) {
    emit_error(out, opt.format, "internal", e.what(), diagnostics);
    return consistency_failure;
  }
}

}  // namespace strata::cli
