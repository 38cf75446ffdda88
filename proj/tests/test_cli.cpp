#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ikeda/serialize.hpp"

using namespace ikeda;

namespace {

const std::string kBin = IKEDA_CLI_PATH;

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with stderr discarded; stdout is captured.
Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + kBin + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string tmp(const std::string& name) { return "/tmp/ikeda_cli_test_" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("siegel-series prints F_11 at disc 121") {
  auto r = run("siegel-series --matrix \"[1,1,3,3,0,1,0,0,1,0]\" --prime 11");
  CHECK(r.code == 0);
  CHECK(r.out == "1 - 1452*X + 161051*X^2\n");
  auto path = tmp("ss.json");
  CHECK(run("siegel-series --matrix \"[2,2,2,2,2,1,0,1,1,2]\" --prime 11 --out " + path).code == 0);
  auto j = json::parse(slurp(path));
  CHECK(j["polynomial"] == "1 - 1452*X + 161051*X^2");
  CHECK(j["disc"] == 121);
}

TEST_CASE("exit codes") {
  CHECK(run("siegel-series --matrix \"[1,1,1,1,0,0,0,0,0,0]\" --prime 2").code == 2);  // genus 4, v = 2
  CHECK(run("siegel-series --matrix \"[1,2]\" --prime 2").code == 1);
  CHECK(run("siegel-series --matrix \"[1,1,1]\" --prime 4").code == 1);
  CHECK(run("lift --weight 12 --genus 2 --disc-bound 10").code == 1);
  CHECK(run("lift --weight 12 --genus 3 --disc-bound 10").code == 1);
  CHECK(run("lift --weight 11").code == 1);
  CHECK(run("stabilize --weight 12 --genus 4 --prime 2 --disc-bound 10").code == 1);  // not ordinary
  CHECK(run("stabilize --weight 12 --genus 4 --prime 11 --method operator --disc-bound 10").code == 2);
  CHECK(run("eisenstein --k 3 --n 2").code == 1);
  CHECK(run("lift --weight 12 --format xml").code == 1);
  CHECK(run("nonsense").code == 1);
  CHECK(run("lemma36 --disc -75 --prime 5").code == 0);
}

TEST_CASE("lift: empty table and round trip") {
  auto r = run("lift --weight 12 --genus 4 --disc-bound 0");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["entries"].empty());
  CHECK(j["genus"] == 4);

  auto path = tmp("lift.json");
  CHECK(run("lift --weight 12 --genus 4 --disc-bound 130 --jobs 3 --out " + path).code == 0);
  std::string first = slurp(path);
  CHECK(run("lift --weight 12 --genus 4 --disc-bound 130 --out " + path).code == 0);
  CHECK(slurp(path) == first);  // byte-identical across runs and thread counts
  FourierTable t = table_from_json(json::parse(first));
  CHECK(t.weight == 8);
  auto f = eigenforms(12, 40)[0];
  auto h = shimura_eigen_lift(f, 131);
  bool saw_T1 = false;
  for (const auto& [T, c] : t.entries) {
    CHECK(c == SatakeRing(ikeda_coeff(f, h, T, 2)));
    if (T.disc() == 121) {
      saw_T1 = true;
      CHECK(c == SatakeRing(NFElem(Int(534612 - 1452 * 1331))));
    }
  }
  CHECK(saw_T1);
  CHECK(table_to_json(t).dump() == [&] {
    auto j2 = json::parse(first);
    j2.erase("skipped");
    return j2.dump();
  }());
}

TEST_CASE("stabilize: quadratic-ring entries round trip") {
  auto path = tmp("stab.json");
  REQUIRE(run("stabilize --weight 18 --genus 2 --prime 17 --disc-bound 60 --out " + path).code == 0);
  auto j = json::parse(slurp(path));
  CHECK(j["level"] == 17);
  CHECK(j.contains("relation"));
  FourierTable t = table_from_json(j);
  auto f = eigenforms(18, 40)[0];
  auto h = shimura_eigen_lift(f, 61);
  REQUIRE(!t.entries.empty());
  for (const auto& [T, c] : t.entries) CHECK(c == semi_ordinary_coeff(f, h, T, 1, 17));
  auto op = tmp("stab_op.json");
  REQUIRE(run("stabilize --weight 18 --genus 2 --prime 17 --disc-bound 60 --method operator --out " + op).code == 0);
  auto jo = json::parse(slurp(op));
  CHECK(jo["entries"] == j["entries"]);
}

TEST_CASE("eigenform and halfint JSON round trip") {
  auto r = run("eigenform --weight 32 --precision 12");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["field"] == "x^2 - 39960*x - 2235350016");
  EigenformData f = eigenform_from_json(j);
  auto g = eigenforms(32, 12)[0];
  for (std::size_t m = 1; m < 12; ++m) CHECK(f.a(m) == g.a(m));

  auto rh = run("halfint --k 6 --precision 13");
  REQUIRE(rh.code == 0);
  HalfIntegralForm h = halfint_from_json(json::parse(rh.out));
  CHECK(h.c(1) == NFElem(1));
  CHECK(h.c(4) == NFElem(-56));
  CHECK(h.c(12) == NFElem(1440));
}

TEST_CASE("congruence scan output") {
  auto path = tmp("cong.csv");
  REQUIRE(run("congruence --weights 12,32 --genus 4 --prime 11 --disc-bound 130 --format csv --out " + path).code == 0);
  std::string csv = slurp(path);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "disc,matrix,valuation,verdict");
  int rows = 0, ok = 0;
  bool saw121 = false;
  while (std::getline(in, line)) {
    ++rows;
    if (line.size() >= 3 && line.substr(line.size() - 3) == ",ok") ++ok;
    if (line.rfind("121,", 0) == 0) saw121 = true;
  }
  CHECK(rows > 0);
  CHECK(ok == rows);
  CHECK(saw121);
  auto r = run("congruence --weights 12,16 --genus 4 --prime 11 --disc-bound 40");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["verdict"] == "violations");
}

TEST_CASE("config file from the environment") {
  auto cfg = tmp("cfg.json");
  std::ofstream(cfg) << R"({"disc_bound": 20, "format": "csv"})";
  auto r = run("lift --weight 12 --genus 4", "IKEDA_CONFIG=" + cfg);
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("disc,matrix,coeff\n", 0) == 0);
  auto j = json::parse(run("lift --weight 12 --genus 4 --format json", "IKEDA_CONFIG=" + cfg).out);
  for (const auto& e : j["entries"]) CHECK(e["disc"].get<i64>() <= 20);
  CHECK(run("lift --weight 12", "IKEDA_CONFIG=/nonexistent/cfg.json").code == 1);
}

TEST_CASE("eisenstein table") {
  auto r = run("eisenstein --k 6 --n 2 --disc-bound 121");
  REQUIRE(r.code == 0);
  auto t = table_from_json(json::parse(r.out));
  bool saw = false;
  for (const auto& [T, c] : t.entries) {
    CHECK(c == SatakeRing(NFElem(eisenstein_siegel_coeff(6, 2, T))));
    if (T.disc() == 121) saw = true;
  }
  CHECK(saw);
  auto s = json::parse(run("eisenstein --k 5 --n 1 --prime 5 --disc-bound 30").out);
  CHECK(s["level"] == 5);
  auto zero = HalfIntMatrix::from_gram(2, {0, 0, 0, 0});
  CHECK(s["constant_term"] == to_string(eisenstein_stabilized_coeff(5, 1, zero, 5)));
}
