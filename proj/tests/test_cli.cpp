#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(EISCYCLE_CLI_PATH) + " " + args + " 2>/dev/null";
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

json strip_timing(json j) {
  if (j.is_object()) {
    j.erase("timing_ms");
    for (auto& [k, v] : j.items()) v = strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

}  // namespace

TEST_CASE("exit status contract") {
  CHECK(run_cli("group --level 3").status == 0);
  CHECK(run_cli("group --level 4").status == 2);       // usage: even level
  CHECK(run_cli("group").status == 2);                 // missing --level
  CHECK(run_cli("verify boundary --level 3").status == 0);
  CHECK(run_cli("verify bogus --level 3").status == 2);
  CHECK(run_cli("eis --level 9 --point 3,3").status == 2);  // low order
  CHECK(run_cli("eis --level 9 --point 3,3 --allow-low-order").status == 0);
  // forcing the full unit range makes the boundary check honestly fail
  RunResult full = run_cli("verify boundary --level 3 --mu-domain full");
  CHECK(full.status == 1);
  CHECK(json::parse(full.out)[0]["status"] == "fail");
}

TEST_CASE("group listing") {
  RunResult r = run_cli("group --level 7");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["group"] == 168);
  CHECK(j["cusps"] == 24);
  CHECK(j["genus"] == 3);
  CHECK(j["dim"] == 29);

  RunResult csv = run_cli("group --level 3 --format csv");
  CHECK(csv.out == "group,cusps,genus,dim\n12,4,0,3\n");
}

TEST_CASE("cycle serialization") {
  RunResult r = run_cli("eis --level 3 --point 1,0");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["level"] == 3);
  CHECK(j["point"] == json::array({1, 0}));
  CHECK(j["chain"].size() == 12);  // dense: one entry per group element
  CHECK(j["boundary"].size() == 4);
  for (const auto& t : j["boundary"]) {
    if (t["cusp"] == json::array({1, 0}))
      CHECK(t["coeff"]["coeffs"][0] == "9/2");
    else
      CHECK(t["coeff"]["coeffs"][0] == "-3/2");
  }

  // the ±-class is canonicalized: (2,0) names the same cycle
  RunResult r2 = run_cli("eis --level 3 --point 2,0");
  CHECK(json::parse(r2.out) == j);
}

TEST_CASE("verify reports and cache idempotence") {
  auto cache = std::filesystem::temp_directory_path() / "eiscycle-cli-cache";
  std::filesystem::remove_all(cache);
  std::string args = "verify hecke --level 5 --cache-dir " + cache.string();

  RunResult first = run_cli(args);
  REQUIRE(first.status == 0);
  CHECK(std::filesystem::exists(cache));

  RunResult second = run_cli(args);  // warm cache
  REQUIRE(second.status == 0);
  CHECK(strip_timing(json::parse(first.out)) == strip_timing(json::parse(second.out)));

  std::filesystem::remove_all(cache);
  RunResult third = run_cli(args);  // cold cache again
  REQUIRE(third.status == 0);
  CHECK(strip_timing(json::parse(first.out)) == strip_timing(json::parse(third.out)));
  std::filesystem::remove_all(cache);

  json j = json::parse(first.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["check"] == "hecke_eigen");
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0]["level"] == 5);
  CHECK(j[0]["witness"]["prime"] == 11);
  CHECK(j[0].contains("timing_ms"));
}

TEST_CASE("retraction report carries the normalization") {
  RunResult r = run_cli("verify retraction --level 3");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j[0]["normalization"] == "1/6");
  CHECK(j[0]["status"] == "pass");
}

TEST_CASE("theta file flows through verify") {
  auto dir = std::filesystem::temp_directory_path();
  auto good = dir / "cli_theta3.txt";
  {
    std::FILE* f = std::fopen(good.string().c_str(), "w");
    // theta for determinant 3 (one valid solution)
    std::fputs("1 3 2 0 1\n1 3 0 0 1\n1 3 -2 0 1\n1 1 0 2 3\n1 1 0 0 3\n1 1 0 -2 3\n", f);
    std::fputs("-1 1 -2 2 -1\n-1 -1 -2 2 1\n", f);
    std::fclose(f);
  }
  RunResult r = run_cli("verify boundary --level 5 --theta-file " + good.string());
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  bool saw_gate = false, saw_fid = false;
  for (const auto& item : j) {
    if (item["check"] == "theta_gate") {
      saw_gate = true;
      CHECK(item["status"] == "pass");
    }
    if (item["check"] == "theta_F_identity") {
      saw_fid = true;
      CHECK(item["status"] == "pass");
    }
  }
  CHECK(saw_gate);
  CHECK(saw_fid);
  std::filesystem::remove(good);
}
