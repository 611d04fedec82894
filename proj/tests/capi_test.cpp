#include <doctest.h>

#include <bqg/bqg.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>

namespace {

using nlohmann::json;

struct Group {
  bqg_group* g = nullptr;
  ~Group() { bqg_group_free(g); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  bqg_string_free(s);
  return out;
}

bqg_options json_options() {
  bqg_options o;
  bqg_options_init(&o);
  o.format = BQG_FORMAT_JSON;
  return o;
}

json run(const char* command, const bqg_group* g, const bqg_options& o) {
  char* out = nullptr;
  const auto s = bqg_run(command, g, &o, &out);
  REQUIRE_MESSAGE(s == BQG_OK, bqg_last_error());
  return json::parse(take(out));
}

}  // namespace

TEST_CASE("options have documented defaults") {
  bqg_options o;
  bqg_options_init(&o);
  CHECK(o.q == 2);
  CHECK(o.prime == 0);
  CHECK(o.max_deg == -1);
  CHECK(o.coset_cap == 1000000);
  CHECK(o.format == BQG_FORMAT_TEXT);
}

TEST_CASE("group handles from catalog specs") {
  Group g;
  REQUIRE(bqg_group_from_spec("catalog:extraspecial_plus:2", &g.g) == BQG_OK);
  CHECK(bqg_group_order(g.g) == 32);
  const auto info = run("group-info", g.g, json_options());
  CHECK(info["order"] == 32);
  CHECK(info["center_order"] == 2);
  CHECK(info["census"]["prime_power_counts"]["2"] == 31);
}

TEST_CASE("higher limits through the C interface") {
  Group g;
  REQUIRE(bqg_group_from_spec("catalog:extraspecial_plus:2", &g.g) == BQG_OK);
  auto o = json_options();
  o.prime = 2;
  o.max_deg = 2;
  const auto r = run("higher-limits", g.g, o);
  REQUIRE(r["lim"].size() == 3);
  CHECK(r["lim"][0]["text"] == "Z^32");
  CHECK(r["lim"][1]["text"] == "(Z/2)^9");
  CHECK(r["lim"][2]["text"] == "0");
}

TEST_CASE("errors carry codes and messages") {
  bqg_group* g = nullptr;
  CHECK(bqg_group_from_spec("catalog:nonsense:3", &g) == BQG_ERR_UNKNOWN_NAME);
  CHECK(g == nullptr);
  CHECK(std::string(bqg_last_error()).find("nonsense") != std::string::npos);
  CHECK(bqg_group_from_spec("catalog:dihedral:7", &g) == BQG_ERR_UNSUPPORTED_PARAM);
  CHECK(bqg_group_from_json("{not json", &g) == BQG_ERR_INVALID_INPUT);
  CHECK(bqg_group_from_json(R"({"table": [[0,1],[0,1]]})", &g) == BQG_ERR_NOT_A_GROUP);
  CHECK(bqg_group_from_spec(nullptr, &g) == BQG_ERR_NULL_ARGUMENT);
  CHECK(std::string(bqg_status_name(BQG_ERR_TOO_LARGE)) == "TooLarge");
  CHECK(std::string(bqg_status_name(BQG_OK)) == "ok");

  Group d8;
  REQUIRE(bqg_group_from_spec("catalog:dihedral:8", &d8.g) == BQG_OK);
  char* out = nullptr;
  auto o = json_options();
  o.prime = 3;
  CHECK(bqg_run("homology", d8.g, &o, &out) == BQG_ERR_UNSUPPORTED_PARAM);
  CHECK(out == nullptr);
  o.prime = 0;
  o.coset_cap = 2000;
  CHECK(bqg_run("universal-cover", d8.g, &o, &out) == BQG_ERR_COLIMIT_NOT_FINITE);
  CHECK(bqg_run("no-such-command", d8.g, &o, &out) == BQG_ERR_UNKNOWN_NAME);
  CHECK(bqg_run("homology", nullptr, &o, &out) == BQG_ERR_NULL_ARGUMENT);
  CHECK(bqg_run("homology", d8.g, &o, &out) == BQG_OK);
  CHECK(std::string(bqg_last_error()).empty());
  bqg_string_free(out);
}

TEST_CASE("a group exported to JSON and read back gives identical reports") {
  Group g;
  REQUIRE(bqg_group_from_spec("catalog:symmetric:3", &g.g) == BQG_OK);
  const auto o = json_options();
  const auto info = run("group-info", g.g, o);
  Group back;
  REQUIRE(bqg_group_from_json(info.dump().c_str(), &back.g) == BQG_OK);
  for (const char* command : {"group-info", "poset", "homology", "higher-limits", "coset-poset",
                              "splitting", "ktheory"})
    CHECK(run(command, g.g, o) == run(command, back.g, o));

  const std::string path = "capi_roundtrip_group.json";
  {
    std::ofstream f(path);
    f << info.dump();
  }
  Group from_file;
  REQUIRE(bqg_group_from_spec(("@" + path).c_str(), &from_file.g) == BQG_OK);
  CHECK(run("homology", from_file.g, o) == run("homology", g.g, o));
  std::remove(path.c_str());
}

TEST_CASE("text output is deterministic") {
  Group g;
  REQUIRE(bqg_group_from_spec("catalog:abelian:2:2", &g.g) == BQG_OK);
  bqg_options o;
  bqg_options_init(&o);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(bqg_run("coset-poset", g.g, &o, &a) == BQG_OK);
  REQUIRE(bqg_run("coset-poset", g.g, &o, &b) == BQG_OK);
  const auto ta = take(a), tb = take(b);
  CHECK(ta == tb);
  CHECK(ta.find("spheres: 3") != std::string::npos);
}
