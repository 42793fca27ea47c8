#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "tsr/constructions.hpp"
#include "tsr/serialize.hpp"
#include "tsr/tsring.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = tsr::run_cli(std::move(args), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() / ("tsring-test-" + tag)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("cli: species table json payload") {
  CliResult r = run({"species-table", "--group", "C2", "-p", "2", "--format", "json",
                     "--no-cache"});
  REQUIRE(r.code == 0);
  tsr::Json payload = tsr::Json::parse(r.out);
  CHECK(payload.at("command") == "species-table");
  CHECK(payload.at("order") == 2);
  CHECK(payload.at("p") == 2);
  const tsr::Json& m = payload.at("matrix");
  REQUIRE(m.at("rows").size() == 2);
  REQUIRE(m.at("cols").size() == 2);
  CHECK(m.at("entries").at(0).at(0).at("m") == 1);
  CHECK(m.at("entries").at(0).at(0).at("coords") == tsr::Json::array({"2"}));
  CHECK(m.at("entries").at(0).at(1).at("coords") == tsr::Json::array({"1"}));
  CHECK(m.at("entries").at(1).at(0).at("coords") == tsr::Json::array({"0"}));
  CHECK(m.at("entries").at(1).at(1).at("coords") == tsr::Json::array({"1"}));
}

TEST_CASE("cli: brauer table json payload") {
  CliResult small = run({"brauer-table", "--group", "cyclic 3", "-p", "3", "--format", "json",
                         "--no-cache"});
  REQUIRE(small.code == 0);
  tsr::Json p1 = tsr::Json::parse(small.out);
  CHECK(p1.at("local") == 0);
  CHECK(p1.at("table").at("dims") == tsr::Json::array({1}));
  CHECK(p1.at("table").at("classes") == tsr::Json::array({"e"}));
  CHECK(p1.at("table").at("projectives").at(0).at(0).at("coords") == tsr::Json::array({"3"}));

  CliResult s3 = run({"brauer-table", "--group", "S3", "-p", "3", "--format", "json",
                      "--no-cache"});
  REQUIRE(s3.code == 0);
  tsr::Json p2 = tsr::Json::parse(s3.out);
  CHECK(p2.at("table").at("dims") == tsr::Json::array({1, 1}));
  const tsr::Json& proj = p2.at("table").at("projectives");
  CHECK(proj.at(0).at(0).at("coords") == tsr::Json::array({"3"}));
  CHECK(proj.at(0).at(1).at("coords") == tsr::Json::array({"3"}));
  CHECK(proj.at(1).at(0).at("coords") == tsr::Json::array({"1"}));
  CHECK(proj.at(1).at(1).at("coords") == tsr::Json::array({"-1"}));
  const tsr::Json& irr = p2.at("table").at("irreducibles");
  CHECK(irr.at(0).at(0).at("coords") == tsr::Json::array({"1"}));
  CHECK(irr.at(1).at(1).at("coords") == tsr::Json::array({"-1"}));

  CliResult text = run({"brauer-table", "--group", "S3", "-p", "3", "--no-cache"});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("irreducible brauer characters") != std::string::npos);

  CliResult oob = run({"brauer-table", "--group", "S3", "-p", "3", "--local", "5",
                       "--no-cache"});
  CHECK(oob.code == 2);
  CHECK(oob.err.find("out of range") != std::string::npos);
}

TEST_CASE("cli: linmap json payload") {
  CliResult r = run({"linmap", "--group", "C2", "-p", "2", "--format", "json", "--no-cache"});
  REQUIRE(r.code == 0);
  tsr::Json payload = tsr::Json::parse(r.out);
  const tsr::Json& m = payload.at("matrix");
  REQUIRE(m.at("cols").size() == 2);
  CHECK(m.at("entries").at(0).at(0).at("coords") == tsr::Json::array({"1"}));
  CHECK(m.at("entries").at(1).at(0).at("coords") == tsr::Json::array({"0"}));
  CHECK(m.at("entries").at(0).at(1).at("coords") == tsr::Json::array({"0"}));
  CHECK(m.at("entries").at(1).at(1).at("coords") == tsr::Json::array({"1"}));
}

TEST_CASE("cli: idempotents text output") {
  CliResult r = run({"idempotents", "--group", "C2", "-p", "2", "--no-cache"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("(1/2)*[") != std::string::npos);
  CHECK(r.out.find("(-1/2)*[") != std::string::npos);
  CHECK(r.out.find("e[") != std::string::npos);
}

TEST_CASE("cli: csv output shapes") {
  CliResult r = run({"species-table", "--group", "C2", "-p", "2", "--format", "csv",
                     "--no-cache"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("label,", 0) == 0);

  CliResult v = run({"verify", "--group", "C3", "-p", "3", "--format", "csv"});
  REQUIRE(v.code == 0);
  CHECK(v.out.rfind("name,pass,detail", 0) == 0);
}

TEST_CASE("cli: exit codes") {
  CliResult bad_group = run({"species-table", "--group", "(0 1", "-p", "2", "--no-cache"});
  CHECK(bad_group.code == 2);
  CHECK(!bad_group.err.empty());

  CHECK(run({"species-table", "--group", "C2", "-p", "4", "--no-cache"}).code == 2);
  CHECK(run({"species-table", "--group", "C2", "-p", "6", "--no-cache"}).code == 2);

  CliResult cap = run({"species-table", "--group", "symmetric 4", "-p", "2", "--max-order",
                       "20", "--no-cache"});
  CHECK(cap.code == 3);

  CHECK(run({"species-table", "-p", "2"}).code == 2);          // missing --group
  CHECK(run({"species-table", "--group", "C2", "-p", "2", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);                                    // missing subcommand
  CHECK(run({"--help"}).code == 0);

  // p coprime to |G| is allowed
  CHECK(run({"verify", "--group", "C3", "-p", "2"}).code == 0);
  CHECK(run({"species-table", "--group", "C3", "-p", "2", "--no-cache"}).code == 0);
}

TEST_CASE("cli: verify passes on small groups") {
  for (const char* spec : {"klein4", "S3"}) {
    CAPTURE(spec);
    CliResult r = run({"verify", "--group", spec, "-p", spec[0] == 'k' ? "2" : "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("properties passed") != std::string::npos);
  }
}

TEST_CASE("cli: deterministic output and cache round trips") {
  TempDir dir("cache");
  const std::string cache = dir.path.string();

  std::vector<std::string> base = {"species-table", "--group", "S3",       "-p", "3",
                                   "--format",      "json",    "--cache-dir", cache};
  CliResult fresh = run(base);
  REQUIRE(fresh.code == 0);

  // cache file landed under the content-derived key
  const std::string key = tsr::cache_key(tsr::parse_group_spec("S3"), 3, 0);
  CHECK(fs::exists(tsr::cache_path(dir.path, key, "species-table")));

  CliResult hit = run(base);
  REQUIRE(hit.code == 0);
  CHECK(hit.out == fresh.out);

  CliResult uncached = run({"species-table", "--group", "S3", "-p", "3", "--format", "json",
                            "--no-cache"});
  REQUIRE(uncached.code == 0);
  CHECK(uncached.out == fresh.out);

  // a different spelling of the same group maps to the same key and bytes
  CliResult respelled = run({"species-table", "--group", "symmetric 3", "-p", "3", "--format",
                             "json", "--cache-dir", cache});
  REQUIRE(respelled.code == 0);
  CHECK(respelled.out == fresh.out);

  // text and csv renders agree between miss and hit as well
  CliResult text1 = run({"linmap", "--group", "S3", "-p", "3", "--cache-dir", cache});
  CliResult text2 = run({"linmap", "--group", "S3", "-p", "3", "--cache-dir", cache});
  REQUIRE(text1.code == 0);
  CHECK(text1.out == text2.out);
}

TEST_CASE("cli: cached payload matches a fresh computation") {
  TempDir dir("roundtrip");
  CliResult r = run({"species-table", "--group", "S3", "-p", "3", "--format", "json",
                     "--cache-dir", dir.path.string()});
  REQUIRE(r.code == 0);

  tsr::Group G = tsr::parse_group_spec("S3");
  const std::string key = tsr::cache_key(G, 3, 0);
  tsr::Json payload;
  REQUIRE(tsr::cache_read(dir.path, key, "species-table", payload));

  tsr::Session S(std::move(G), 3, 0);
  tsr::CycloMatrix fresh = tsr::matrix_N(S).N;
  tsr::CycloMatrix cached = tsr::matrix_from_json(payload.at("matrix"));
  REQUIRE(cached.rows() == fresh.rows());
  REQUIRE(cached.cols() == fresh.cols());
  for (int i = 0; i < fresh.rows(); ++i)
    for (int j = 0; j < fresh.cols(); ++j) CHECK(cached.at(i, j) == fresh.at(i, j));
}

TEST_CASE("cli: damaged cache entries are recomputed") {
  TempDir dir("damaged");
  std::vector<std::string> args = {"idempotents", "--group", "S3",       "-p", "3",
                                   "--format",    "json",    "--cache-dir", dir.path.string()};
  CliResult fresh = run(args);
  REQUIRE(fresh.code == 0);

  const std::string key = tsr::cache_key(tsr::parse_group_spec("S3"), 3, 0);
  const fs::path entry = tsr::cache_path(dir.path, key, "idempotents");
  REQUIRE(fs::exists(entry));
  {
    std::ofstream f(entry, std::ios::trunc);
    f << "{ not json";
  }
  CliResult again = run(args);
  REQUIRE(again.code == 0);
  CHECK(again.out == fresh.out);
}

TEST_CASE("cli: brauer cache kind carries the local index") {
  TempDir dir("brauer");
  CliResult r = run({"brauer-table", "--group", "S3", "-p", "3", "--local", "1",
                     "--cache-dir", dir.path.string()});
  REQUIRE(r.code == 0);
  const std::string key = tsr::cache_key(tsr::parse_group_spec("S3"), 3, 0);
  CHECK(fs::exists(tsr::cache_path(dir.path, key, "brauer1")));
  CHECK(!fs::exists(tsr::cache_path(dir.path, key, "brauer0")));
}
