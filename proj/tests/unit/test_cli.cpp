// Runs the built CLI as a subprocess and checks exit codes and records.

#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct run_result {
  int status = -1;
  std::string out;
};

run_result run(std::string const& args, std::string const& env = {}) {
  std::string const cmd = env + (env.empty() ? "" : " ") + FINSHEAF_CLI + " " + args + " 2>/dev/null";
  run_result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) {
    r.out.append(buf.data(), n);
  }
  int const st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(std::string const& f) { return std::string(FINSHEAF_DATA_DIR) + "/" + f; }

std::vector<nlohmann::json> json_lines(std::string const& s) {
  std::vector<nlohmann::json> out;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty()) {
      out.push_back(nlohmann::json::parse(line));
    }
  }
  return out;
}

std::string slurp(std::filesystem::path const& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("check-lattice accepts lattices and rejects non-lattices") {
  auto r = run("check-lattice " + data("bool4.lat"));
  CHECK(r.status == 0);
  CHECK(r.out.rfind("PASS check-lattice bool4", 0) == 0);

  r = run("--format json check-lattice " + data("n5.lat"));
  CHECK(r.status == 0);
  auto j = json_lines(r.out).at(0);
  CHECK(j["size"] == 5);
  CHECK(j["distributive"] == false);

  r = run("--format json check-lattice " + data("vee.pos"));
  CHECK(r.status == 1);
  CHECK(json_lines(r.out).at(0)["counterexample"] == "NoTop");
}

TEST_CASE("non-transitive matrix is a parse-stage error with a line number") {
  std::string const cmd = std::string(FINSHEAF_CLI) + " check-lattice " + data("bad.lat") + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 512> buf{};
  std::string msg;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) {
    msg.append(buf.data(), n);
  }
  int const st = pclose(p);
  CHECK(WEXITSTATUS(st) == 2);
  CHECK(msg.find("ParseError") != std::string::npos);
  CHECK(msg.find("line 2") != std::string::npos);
  CHECK(msg.find("NotTransitive") != std::string::npos);
}

TEST_CASE("check-algebra and con-lattice") {
  auto r = run("--format json check-algebra " + data("z4.alg"));
  CHECK(r.status == 0);
  CHECK(json_lines(r.out).at(0)["congruences"] == 3);

  r = run("--format json con-lattice --algebra set3");
  CHECK(r.status == 0);
  auto j = json_lines(r.out).at(0);
  CHECK(j["size"] == 5);
  CHECK(j["permutable"] == false);

  r = run("--format dot con-lattice " + data("z4.alg"));
  CHECK(r.status == 0);
  CHECK(r.out.find("digraph congruences") != std::string::npos);
  CHECK(r.out.find("{0,2|1,3}") != std::string::npos);
}

TEST_CASE("verify thm-gamma on the 3-element set over the Boolean square") {
  auto r = run("--format json verify thm-gamma --algebra set3 --lattice bool4");
  CHECK(r.status == 0);
  auto j = json_lines(r.out).at(0);
  CHECK(j["theorem"] == "thm-gamma");
  CHECK(j["instance"] == "set3@bool4");
  CHECK(j["pass"] == true);
  CHECK_FALSE(j.contains("counterexample"));
}

TEST_CASE("verify accepts files and every theorem name") {
  for (auto const* t : {"cor-main", "t-gen"}) {
    auto r = run(std::string("verify ") + t + " --algebra " + data("z4.alg") + " --lattice " +
                 data("n5.lat"));
    CHECK(r.status == 0);
    CHECK(r.out.find("z4@n5") != std::string::npos);
  }
  CHECK(run("verify wilker --lattice m3").status == 0);
  CHECK(run("verify hofmann-mislove --points 3").status == 0);
  CHECK(run("verify commute-triple --algebra set3").status == 0);
  CHECK(run("verify commute-triple --x " + data("vee.pos")).status == 0);
  CHECK(run("verify no-such-theorem").status != 0);
}

TEST_CASE("unknown names and cap violations exit nonzero") {
  CHECK(run("verify thm-gamma --algebra nope --lattice bool4").status == 2);
  CHECK(run("verify hofmann-mislove --points 4", "FINSHEAF_MAX_POINTS=3").status == 2);
  CHECK(run("gelfand --ring zn:20", "FINSHEAF_MAX_RING=12").status == 2);
  CHECK(run("gelfand --ring zn:12", "FINSHEAF_MAX_RING=0").status == 2);
  CHECK(run("--max-ring 12 gelfand --ring zn:12").status == 0);
}

TEST_CASE("compord bijection on the 2-chain") {
  auto r = run("--format json compord bijection --x " + data("chain2.pos") + " --y " +
               data("chain2.pos"));
  CHECK(r.status == 0);
  auto j = json_lines(r.out).at(0);
  CHECK(j["interpolating"] == 4);
  CHECK(j["commuting_frame_homs"] == 4);

  r = run("--format dot compord bijection --x chain2 --y " + data("antichain2.pos"));
  CHECK(r.status == 0);
  CHECK(r.out.find("digraph decomposition") != std::string::npos);
  CHECK(r.out.find("label=\"q\"") != std::string::npos);
}

TEST_CASE("gelfand on Z/12 reports a 4-element frame of Jacobson radical ideals") {
  auto r = run("gelfand --ring zn:12 --report json");
  CHECK(r.status == 0);
  auto lines = json_lines(r.out);
  REQUIRE(lines.size() > 1);
  CHECK(lines[0]["jrid_size"] == 4);
  CHECK(lines[0]["stalks"].size() == 2);
  for (auto const& l : lines) {
    CHECK(l["pass"] == true);
  }
}

TEST_CASE("pierce on a ring file") {
  auto r = run("--format json pierce --ring " + data("z6.ring"));
  CHECK(r.status == 0);
  auto j = json_lines(r.out).at(0);
  CHECK(j["instance"] == "z6");
  CHECK(j["factor_sizes"] == nlohmann::json::array({2, 3}));
}

TEST_CASE("generate-corpus is deterministic and matches the recount") {
  namespace fs = std::filesystem;
  auto const base = fs::temp_directory_path() / "finsheaf_corpus_test";
  fs::remove_all(base);
  auto a = run("--max-lattice 4 --seed 11 generate-corpus --out " + (base / "a").string());
  auto b = run("--seed 11 generate-corpus --out " + (base / "b").string(), "FINSHEAF_MAX_LATTICE=4");
  CHECK(a.status == 0);
  CHECK(b.status == 0);
  auto const ma = slurp(base / "a" / "manifest.json");
  CHECK_FALSE(ma.empty());
  CHECK(ma == slurp(base / "b" / "manifest.json"));
  auto m = nlohmann::json::parse(ma);
  CHECK(m["lattice_counts"] == nlohmann::json::array({1, 1, 1, 2}));
  CHECK(fs::exists(base / "a" / "lattices" / "L4_1.lat"));

  auto one = run("--format json --max-lattice 1 generate-corpus");
  auto lines = json_lines(one.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0]["lattice_counts"] == nlohmann::json::array({1}));
  CHECK(lines[1]["pass"] == true);

  auto other = run("--format json --seed 12 --max-lattice 1 generate-corpus");
  CHECK(json_lines(other.out).at(0)["sample"] != lines[0]["sample"]);
  CHECK(run("--format json --max-lattice 1 generate-corpus").out == one.out);
  fs::remove_all(base);
}
