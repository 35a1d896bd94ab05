#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#ifndef NOETHERLAB_CLI
#error "NOETHERLAB_CLI must point at the CLI binary"
#endif
#ifndef NOETHERLAB_SOURCE_DIR
#error "NOETHERLAB_SOURCE_DIR must point at the repo root"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(NOETHERLAB_CLI) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string data_path(const std::string& rel) {
  return std::string(NOETHERLAB_SOURCE_DIR) + "/data/" + rel;
}

nlohmann::json strip_volatile(nlohmann::json j) {
  j.erase("wall_ms");
  return j;
}

}  // namespace

TEST_CASE("davenport subcommand") {
  auto r = run_cli("davenport --group Z2xZ2xZ2 --k 2");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == 7);
  CHECK(j["group"] == "Z2xZ2xZ2");

  auto r2 = run_cli("davenport --group Z3xZ3 --k 2");
  CHECK(nlohmann::json::parse(r2.out)["value"] == 8);
}

TEST_CASE("noether subcommand") {
  auto r = run_cli("noether --rep " + data_path("reps/a4_perm4.json") + " --k 1 --cap 8");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["beta"] == 6);
  CHECK(j["witness_degree"] == 6);
}

TEST_CASE("classify subcommand") {
  auto r = run_cli("classify --group " + data_path("groups/z8.json"));
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["cases"] == nlohmann::json::array({"1"}));

  auto r2 = run_cli("classify --group " + data_path("groups/z7z3.json"));
  auto j2 = nlohmann::json::parse(r2.out);
  CHECK(j2["identified"] == "Z7:Z3");
  bool has3b = false;
  for (const auto& t : j2["cases"])
    if (t == "3b") has3b = true;
  CHECK(has3b);
}

TEST_CASE("bounds subcommand") {
  auto r = run_cli("bounds --group " + data_path("groups/a4.json") + " --k 1");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["upper"]["value"] == 6);
  CHECK(j["lower"]["value"] == 6);

  auto rt = run_cli("bounds --group " + data_path("groups/a4.json") + " --k 1 --emit text");
  CHECK(rt.out.find("a4-betak") != std::string::npos);
}

TEST_CASE("catalog subcommand") {
  auto r = run_cli("catalog --order-max 8 --emit csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Q8,8,Q8") != std::string::npos);
  CHECK(r.out.find("D8,8,D8") != std::string::npos);
}

TEST_CASE("exit codes distinguish input and budget problems") {
  CHECK(run_cli("davenport --group NotAGroup").exit_code == 2);
  CHECK(run_cli("davenport --group Z3xZ9 --k 3 --nodes 50").exit_code == 3);
  CHECK(run_cli("noether --rep /nonexistent.json").exit_code == 2);
}

TEST_CASE("cache gives byte-identical warm replies and survives corruption") {
  auto dir = std::filesystem::temp_directory_path() / "nlab-cache-test";
  std::filesystem::remove_all(dir);
  std::string flags = "davenport --group Z2xZ4 --k 2 --cache-dir " + dir.string();

  auto cold = run_cli(flags);
  auto warm = run_cli(flags);
  CHECK(cold.exit_code == 0);
  CHECK(cold.out == warm.out);  // byte-identical including the cached wall_ms

  // cold runs agree on everything except timing
  std::filesystem::remove_all(dir);
  auto cold2 = run_cli(flags);
  CHECK(strip_volatile(nlohmann::json::parse(cold.out)) ==
        strip_volatile(nlohmann::json::parse(cold2.out)));

  // corrupt every cache entry: must be treated as a miss, not reused
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    std::ofstream(f.path()) << "{\"key_hash\": \"junk\"}";
  }
  auto after = run_cli(flags);
  CHECK(after.exit_code == 0);
  CHECK(strip_volatile(nlohmann::json::parse(after.out)) ==
        strip_volatile(nlohmann::json::parse(cold.out)));
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify fast tier") {
  auto r = run_cli("verify --tier fast --emit json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["failures"] == 0);
  CHECK(j["seed"] == 20240917);
}
