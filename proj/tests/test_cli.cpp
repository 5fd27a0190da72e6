#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "strata/cli.hpp"
#include "strata/json_io.hpp"

using strata::json;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "strata");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Run r;
  r.code = strata::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

}  // namespace

TEST_CASE("phi on an exceptional class") {
  const auto r = run({"phi", "--group", "E8", "--class", "D_7(a_1)"});
  REQUIRE(r.code == 0);
  const auto d = r.doc();
  CHECK(d["status"] == "ok");
  CHECK(d["payload"]["d"] == 1050);
  CHECK(d["payload"]["n"] == 10);
  CHECK(d["payload"]["star"] == 2);
  CHECK(d["payload"]["label"] == "1050_10*2");
  CHECK(d["payload"]["m"] == 1);
  CHECK(d["diagnostics"].is_array());
}

TEST_CASE("phi on a classical class") {
  const auto r = run({"phi", "--type", "B", "--rank", "2", "--class", ";2"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["payload"]["bp"] == json::parse("[2]"));
  CHECK(r.doc()["payload"]["m"] == 0);
}

TEST_CASE("a label listed twice is an error until a variant is chosen") {
  const auto r = run({"phi", "--group", "E7", "--class", "A_3+A_2"});
  CHECK(r.code == 1);
  CHECK(r.doc()["status"] == "error");
  CHECK(r.doc()["payload"]["code"] == "ambiguous_label");
  const auto v = run({"phi", "--group", "E7", "--class", "A_3+A_2", "--variant", "1"});
  CHECK(v.code == 0);
  CHECK(v.doc()["payload"]["label"] == "84_15*2");
}

TEST_CASE("enumerate Sp4") {
  const auto r = run({"enumerate", "--series", "Sp", "--dimension", "4"});
  REQUIRE(r.code == 0);
  const auto p = r.doc()["payload"];
  CHECK(p["count"] == 5);
  CHECK(p["class_dims"] == json::parse("[8, 6, 4, 4, 0]"));
}

TEST_CASE("enumerate witnesses classify back to their stratum") {
  for (const std::string series : {"GL", "Sp", "SO_ODD", "SO_EVEN"})
    for (const std::string ch : {"0", "2", "3"})
      for (int dim = 1; dim <= 8; ++dim) {
        if ((series == "Sp" || series == "SO_EVEN") && dim % 2) continue;
        if (series == "SO_ODD" && dim % 2 == 0) continue;
        if (series == "SO_EVEN" && dim < 2) continue;
        const auto r = run({"enumerate", "--series", series, "--dimension", std::to_string(dim), "--char", ch});
        CAPTURE(series);
        CAPTURE(dim);
        REQUIRE(r.code == 0);
        const auto doc = r.doc();
        for (const auto& s : doc["payload"]["strata"]) {
          if (s["unipotent_datum"].is_null()) continue;
          const auto c = run({"classify", "-"}, s["unipotent_datum"].dump());
          REQUIRE(c.code == 0);
          CHECK(c.doc()["payload"]["stratum"]["bp"] == s["bp"]);
          CHECK(c.doc()["payload"]["stratum"]["class_dim"] == s["class_dim"]);
        }
      }
}

TEST_CASE("classify from stdin and from a file") {
  const std::string doc =
      R"({"group": {"series": "Sp", "N": 4, "char": 0},
          "orbits": [{"id": "1", "parts": [2]}, {"id": "-1", "parts": [1, 1]}]})";
  const auto a = run({"classify"}, doc);
  REQUIRE(a.code == 0);
  // (2) -> (1) and (1,1) -> (0,1) under Z1, summed componentwise
  CHECK(a.doc()["payload"]["stratum"]["bp"] == json::parse("[1, 1]"));
  const auto b = run({"classify", temp_file("strata_classify.json", doc)});
  CHECK(b.out == a.out);
  CHECK(run({"classify"}, "{not json").code == 1);
  CHECK(run({"classify", "/nonexistent.json"}).doc()["payload"]["code"] == "io_error");
}

TEST_CASE("invert") {
  const auto r = run({"invert", "--family", "Z2", "--N", "6", "--target", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["payload"]["parts"] == json::parse("[6]"));
  const auto bad = run({"invert", "--family", "Z1", "--N", "4", "--target", "0,2"});
  CHECK(bad.code == 1);
  CHECK(bad.doc()["payload"]["code"] == "no_preimage");
}

TEST_CASE("tables") {
  const auto all = run({"tables", "--group", "E8"});
  REQUIRE(all.code == 0);
  CHECK(all.doc()["payload"]["rows"].size() == 75);
  CHECK(run({"tables", "--group", "E8", "--char", "2"}).doc()["payload"]["rows"].size() == 74);
  CHECK(run({"tables", "--group", "E8", "--starred"}).doc()["payload"]["rows"].size() == 5);
  CHECK(run({"tables", "--group", "E6", "--isolated", "pseudo-levi"}).doc()["payload"]["subtypes"].size() == 3);
  const auto dump = run({"tables", "--dump"});
  REQUIRE(dump.code == 0);
  const auto text = dump.doc()["payload"]["text"].get<std::string>();
  // a dump fed back through --data reproduces itself
  const auto path = temp_file("strata_dump.txt", text);
  const auto again = run({"--data", path, "tables", "--dump"});
  CHECK(again.doc()["payload"]["text"] == text);
  CHECK(again.doc()["payload"]["checksum"] == dump.doc()["payload"]["checksum"]);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"phi", "--group", "E8"}).code == 2);
  CHECK(run({"--format", "xml", "verify"}).code == 2);
  CHECK(run({"phi", "--group", "E8", "--class", "Q_9"}).code == 1);
  CHECK(run({"enumerate", "--series", "Sp", "--dimension", "5"}).code == 1);
  CHECK(run({"enumerate", "--series", "Sp", "--dimension", "4", "--char", "4"}).code == 1);
  CHECK(run({"verify", "--suite", "nope"}).code == 1);
  CHECK(run({"verify", "--suite", "e8-counts"}).code == 0);
  const auto usage = run({"frobnicate"});
  CHECK(usage.doc()["payload"]["code"] == "usage");
}

TEST_CASE("a broken atlas file is a data error, a falsified table a consistency failure") {
  const auto bad = temp_file("strata_bad_atlas.txt", "E8 | E_8 | 1 | 0 | 7 | 0\n");
  const auto r = run({"--data", bad, "tables", "--group", "E8"});
  CHECK(r.code == 1);
  CHECK(r.doc()["payload"]["code"] == "parse_error");

  // E8 with one row removed: the count check is falsified
  std::string text(strata::Atlas::builtin_text());
  const auto pos = text.find("E8 | A_1 |");
  REQUIRE(pos != std::string::npos);
  text.erase(pos, text.find('\n', pos) - pos + 1);
  const auto trimmed = temp_file("strata_trimmed_atlas.txt", text);
  const auto v = run({"--data", trimmed, "verify", "--suite", "e8-counts"});
  CHECK(v.code == 3);
  CHECK(v.doc()["status"] == "error");
}

TEST_CASE("STRATA_ATLAS selects the data file") {
  const auto bad = temp_file("strata_env_atlas.txt", "garbage\n");
  ::setenv("STRATA_ATLAS", bad.c_str(), 1);
  const auto r = run({"tables", "--group", "G2"});
  ::unsetenv("STRATA_ATLAS");
  CHECK(r.code == 1);
  CHECK(run({"tables", "--group", "G2"}).code == 0);
}

TEST_CASE("output is byte-stable") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"enumerate", "--series", "SO_EVEN", "--dimension", "8", "--char", "2"},
           {"tables", "--group", "F4"},
           {"--format", "table", "tables", "--group", "E7"},
           {"phi", "--group", "G2", "--class", "~A_1"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("table format") {
  const auto r = run({"--format", "table", "enumerate", "--series", "Sp", "--dimension", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("bp", 0) == 0);
  CHECK(r.out.find("\n# ") == std::string::npos);
  const auto t = run({"--format", "table", "tables", "--group", "G2"});
  CHECK(t.out.find("\n# atlas: builtin\n") != std::string::npos);
  const auto v = run({"--format", "table", "verify"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
}
