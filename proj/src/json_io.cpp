#include "strata/json_io.hpp"

#include <string>

#include "strata/error.hpp"

namespace strata {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) bad(std::string("expected an object holding '") + key + "'");
  const auto it = obj.find(key);
  if (it == obj.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) bad(what + " must be an integer");
  return v.get<int>();
}

std::vector<int> int_array(const json& v, const std::string& what) {
  if (!v.is_array()) bad(what + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(as_int(x, what + " entry"));
  return out;
}

Characteristic characteristic_from_json(const json& v) {
  if (v.is_number_integer()) return characteristic_from_int(v.get<int>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "ODD_PRIME" || s == "odd") return Characteristic::odd_prime;
    if (s == "0") return Characteristic::zero;
    if (s == "2") return Characteristic::two;
  }
  bad("'char' must be 0, a prime or \"ODD_PRIME\"");
}

}  // namespace

json to_json(const Partition& p) { return p.vector(); }

json to_json(const Bipartition& bp) { return bp.vector(); }

json to_json(const LabeledPartition& nu) {
  json out = {{"parts", nu.base.vector()}};
  if (!nu.labels.empty()) {
    json labels = json::object();
    for (const auto& [value, label] : nu.labels) labels[std::to_string(value)] = label;
    out["labels"] = labels;
  }
  return out;
}

json to_json(const StratumResult& r) {
  return {{"bp", r.bp.vector()},
          {"n_E", r.n_e},
          {"springer_dim", r.springer_dim},
          {"class_dim", r.class_dim},
          {"iota_degenerate", r.iota_degenerate}};
}

json to_json(const RepLabel& rep) {
  return {{"group", std::string(to_string(rep.group))},
          {"d", rep.degree},
          {"n", rep.n_e},
          {"star", rep.star ? json(rep.star) : json(nullptr)},
          {"id", rep.synthetic_id},
          {"label", to_string(rep)}};
}

json to_json(const CarterLabel& c) { return {{"label", c.raw}, {"rank", c.parsed_rank}}; }

json to_json(const SignedCycleType& c) {
  return {{"positive", c.positive.vector()}, {"negative", c.negative.vector()}, {"label", to_string(c)}};
}

json to_json(const GroupDescriptor& g) {
  json ch;
  switch (g.characteristic) {
    case Characteristic::zero: ch = 0; break;
    case Characteristic::two: ch = 2; break;
    case Characteristic::odd_prime: ch = "ODD_PRIME"; break;
  }
  return {{"series", std::string(to_string(g.series))}, {"N", g.dimension}, {"char", ch}};
}

json to_json(const SpectralDatum& d) {
  json orbits = json::array();
  for (const auto& o : d.orbits) {
    json entry = {{"id", o.id}, {"kind", o.kind == OrbitKind::involutive ? "INVOLUTIVE" : "GENERIC"}};
    entry["parts"] = o.jordan.base.vector();
    if (!o.jordan.labels.empty()) entry["labels"] = to_json(o.jordan)["labels"];
    orbits.push_back(entry);
  }
  return {{"group", to_json(d.group)}, {"orbits", orbits}};
}

LabeledPartition labeled_partition_from_json(const json& doc) {
  auto parts = int_array(field(doc, "parts"), "'parts'");
  for (int p : parts)
    if (p < 0) bad("'parts' entries must be nonnegative");
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) bad("'parts' must be weakly decreasing");
  LabeledPartition nu{Partition(std::move(parts))};
  if (const auto it = doc.find("labels"); it != doc.end() && !it->is_null()) {
    if (!it->is_object()) bad("'labels' must map part values to 0 or 1");
    for (const auto& [key, value] : it->items()) {
      int part = 0;
      try {
        std::size_t used = 0;
        part = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::logic_error&) {
        bad("label key '" + key + "' is not an integer");
      }
      const int label = as_int(value, "label");
      if (label != 0 && label != 1) bad("labels must be 0 or 1");
      nu.labels[part] = label;
    }
  }
  return nu;
}

SpectralDatum spectral_datum_from_json(const json& doc) {
  const auto& g = field(doc, "group");
  const auto& series = field(g, "series");
  if (!series.is_string()) bad("'series' must be a string");

  SpectralDatum d;
  d.group.series = parse_series(series.get<std::string>());
  d.group.dimension = as_int(field(g, "N"), "'N'");
  d.group.characteristic = characteristic_from_json(field(g, "char"));

  const auto& orbits = field(doc, "orbits");
  if (!orbits.is_array()) bad("'orbits' must be an array");
  for (const auto& o : orbits) {
    EigenOrbit orbit;
    const auto& id = field(o, "id");
    if (id.is_string()) orbit.id = id.get<std::string>();
    else if (id.is_number_integer()) orbit.id = std::to_string(id.get<int>());
    else bad("orbit 'id' must be a string or an integer");

    if (const auto it = o.find("kind"); it != o.end()) {
      const auto kind = it->is_string() ? it->get<std::string>() : std::string();
      if (kind == "GENERIC") orbit.kind = OrbitKind::generic;
      else if (kind == "INVOLUTIVE") orbit.kind = OrbitKind::involutive;
      else bad("orbit 'kind' must be GENERIC or INVOLUTIVE");
    } else {
      orbit.kind = orbit.id == "1" || orbit.id == "-1" ? OrbitKind::involutive : OrbitKind::generic;
    }
    orbit.jordan = labeled_partition_from_json(o);
    d.orbits.push_back(std::move(orbit));
  }
  return d;
}

}  // namespace strata
