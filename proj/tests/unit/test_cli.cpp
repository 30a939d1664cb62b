#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "neckslime/cli.hpp"
#include "neckslime/json_io.hpp"

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = neckslime::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("code commands") {
  CHECK(run({"phi", "3,0,0"}).out == "2,1,0\n");
  CHECK(run({"phi", "--inverse", "2,1,0"}).out == "3,0,0\n");
  CHECK(run({"migrate", "--steps", "2", "1,1,2,1,0,1,0,3,0,0,2"}).out == "1,2,0,3,0,1,0,1,2,0,1\n");
  CHECK(run({"migrate", "--backward", "2,1,1,2,0,1,0,2,1,0,1"}).out == "1,1,2,1,0,1,0,3,0,0,2\n");
  CHECK(run({"ws", "4,2,1"}).out == "1\n");
  CHECK(run({"rotate", "--steps", "1", "1,2,3"}).out == "2,3,1\n");
  CHECK(run({"period", "1,0,1,0"}).out == "2\n");
  CHECK(run({"canon", "2,1,0"}).out == "0,2,1\n");
  CHECK(run({"word", "1,0,2"}).out == "BWBBWW\n");
  CHECK(run({"unword", "BWBBWW"}).out == "1,0,2\n");
  const auto j = nlohmann::json::parse(run({"--format", "json", "phi", "3,0,0"}).out);
  CHECK(j["entries"] == nlohmann::json::array({2, 1, 0}));
}

TEST_CASE("slimes") {
  const auto r = run({"slimes", "1,1,2,1,0,1,0,3,0,0,2"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["m"] == 3);
  CHECK(j["weight"] == 3);
  CHECK(j["slimes"].size() == 3);
}

TEST_CASE("count and enumeration") {
  const auto j = nlohmann::json::parse(run({"count", "5", "10"}).out);
  CHECK(j["formula"] == "201");
  CHECK(j["enumerated"] == 201);
  CHECK(run({"--format", "text", "count", "3", "3"}).out == "formula=4 enumerated=4\n");
  const auto codes = run({"enum", "codes", "3", "2", "--t", "0"});
  CHECK(codes.status == 0);
  CHECK(codes.out.find("0,1,1") != std::string::npos);
  CHECK(codes.out.find("1,1,0") == std::string::npos);
}

TEST_CASE("bijection output") {
  const auto a = run({"bijection", "3", "3", "--riwi", "slime"});
  const auto b = run({"bijection", "3", "3", "--riwi", "slime"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["pairs"].size() == 4);
  CHECK(j["pairs"][1]["necklace"] == nlohmann::json::array({0, 2, 1}));
  const auto csv = run({"--format", "csv", "bijection", "2", "4"});
  CHECK(csv.out.rfind("code,necklace,word\n", 0) == 0);
  CHECK(csv.out.find("\"0,4\",\"1,3\",BWBWWW") != std::string::npos);
}

TEST_CASE("composite n needs a map") {
  const auto r = run({"bijection", "4", "4"});
  CHECK(r.status == 1);
  CHECK(r.err.find("riwi-map") != std::string::npos);
}

TEST_CASE("custom maps through the CLI") {
  const auto good = write_temp("neckslime_rot43.json",
                               R"([{"from":[0,0,0,3],"to":[0,0,3,0]},{"from":[0,0,3,0],"to":[0,3,0,0]},)"
                               R"({"from":[0,3,0,0],"to":[3,0,0,0]},{"from":[3,0,0,0],"to":[0,0,0,3]}])");
  // Only the k = 3 codes with a single nonzero entry are listed, so the map
  // is not total and verification must fail.
  const auto partial = run({"verify-riwi", "--map", good.string(), "4", "3"});
  CHECK(partial.status == 1);
  CHECK(nlohmann::json::parse(partial.out)["verdict"] == "fail");

  const auto one = write_temp("neckslime_rot41.json",
                              R"([{"from":[0,0,0,1],"to":[1,0,0,0]},{"from":[1,0,0,0],"to":[0,1,0,0]},)"
                              R"({"from":[0,1,0,0],"to":[0,0,1,0]},{"from":[0,0,1,0],"to":[0,0,0,1]}])");
  const auto ok = run({"verify-riwi", "--map", one.string(), "4", "1"});
  CHECK(ok.status == 0);
  CHECK(nlohmann::json::parse(ok.out)["verdict"] == "pass");
  const auto table = run({"bijection", "4", "1", "--map", one.string()});
  CHECK(table.status == 0);
  CHECK(nlohmann::json::parse(table.out)["pairs"].size() == 1);

  const auto broken = write_temp("neckslime_broken.json", "{not json");
  CHECK(run({"verify-riwi", "--map", broken.string(), "4", "1"}).status != 0);
  CHECK(run({"verify-riwi", "--map", "/nonexistent/map.json", "4", "1"}).status != 0);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "5", "4", "--check", "riwi-slime"});
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["verdict"] == "pass");
  const auto t = run({"--format", "text", "verify", "3", "4"});
  CHECK(t.status == 0);
  CHECK(t.out.find("sigma-agreement") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).status == 2);
  CHECK(run({"bogus"}).status == 2);
  CHECK(run({"migrate", "-1,2"}).status == 2);
  CHECK(run({"unword", "WWW"}).status == 2);
  CHECK(run({"migrate", "1,1,1"}).status == 1);
  CHECK(run({"phi", "2,0,0,2,0,0"}).status == 1);
}
