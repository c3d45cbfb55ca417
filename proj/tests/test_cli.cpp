// Apache License, Version 2.0, refer to LICENSE.txt

#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "mwcr");
  std::ostringstream out;
  std::ostringstream err;
  const int code = mwcr::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("mwcr_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
                                        std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("sha256") {
  CHECK(mwcr::cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == mwcr::cli::kUsage);
  CHECK(run({"frobnicate"}).code == mwcr::cli::kUsage);
  CHECK(run({"simulate", "--scheme", "9"}).code == mwcr::cli::kUsage);
  CHECK(run({"simulate"}).code == mwcr::cli::kUsage);
  CHECK(run({"simulate", "--scheme", "1", "--cause-mode", "coin"}).code == mwcr::cli::kUsage);
  CHECK(run({"fit"}).code == mwcr::cli::kUsage);
  CHECK(run({"--help"}).code == mwcr::cli::kOk);
}

TEST_CASE("simulate writes the canonical dataset to stdout") {
  const Result r = run({"simulate", "--scheme", "2", "--seed", "5"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# n=200\ntime,cause,removed\n", 0) == 0);
  CHECK(r.out == run({"simulate", "--scheme", "2", "--seed", "5"}).out);
  CHECK(r.out != run({"simulate", "--scheme", "2", "--seed", "6"}).out);
}

TEST_CASE("fit, rerun and plot") {
  TempDir tmp;
  REQUIRE(run({"simulate", "--scheme", "2", "--seed", "3", "--out", tmp / "sim"}).code == 0);
  CHECK(fs::exists(tmp / "sim/dataset.csv"));
  CHECK(fs::exists(tmp / "sim/manifest.json"));

  const Result fit = run({"fit", tmp / "sim/dataset.csv", "--iterations", "300", "--seed", "7", "--out", tmp / "fit"});
  REQUIRE(fit.code == 0);
  CHECK(fit.out.find("lambda1") != std::string::npos);
  for (const char* f : {"chain.csv", "summary.txt", "summary.json", "manifest.json"}) CHECK(fs::exists(tmp.path / "fit" / f));

  const auto manifest = nlohmann::json::parse(slurp(tmp / "fit/manifest.json"));
  CHECK(manifest["command"] == "fit");
  CHECK(manifest["seed"] == 7);
  CHECK(manifest["input"]["sha256"] == mwcr::cli::sha256_hex(slurp(tmp / "sim/dataset.csv")));
  CHECK(manifest["outputs"].size() == 3);
  CHECK(manifest.contains("started_at"));
  CHECK(manifest.contains("finished_at"));
  CHECK(nlohmann::json::parse(slurp(tmp / "fit/summary.json")).size() == 4);

  REQUIRE(run({"rerun", tmp / "fit/manifest.json", "--out", tmp / "again"}).code == 0);
  CHECK(slurp(tmp / "fit/chain.csv") == slurp(tmp / "again/chain.csv"));

  REQUIRE(run({"plot", tmp / "fit/chain.csv", "--out", tmp / "plots"}).code == 0);
  int csv = 0;
  int svg = 0;
  int manifests = 0;
  for (const auto& e : fs::directory_iterator(tmp.path / "plots")) {
    csv += e.path().extension() == ".csv";
    svg += e.path().extension() == ".svg";
    manifests += e.path().filename() == "manifest.json";
  }
  CHECK(csv == 8);
  CHECK(svg == 8);
  CHECK(manifests == 1);
}

TEST_CASE("fit options") {
  TempDir tmp;
  spit(tmp / "d.csv", run({"simulate", "--scheme", "4", "--seed", "1"}).out);

  const Result multi = run({"fit", tmp / "d.csv", "--iterations", "200", "--chains", "2", "--seeds", "11,12", "--out",
                            tmp / "multi"});
  REQUIRE(multi.code == 0);
  CHECK(fs::exists(tmp / "multi/chain_1.csv"));
  CHECK(fs::exists(tmp / "multi/chain_2.csv"));
  CHECK(slurp(tmp / "multi/chain_1.csv") != slurp(tmp / "multi/chain_2.csv"));
  CHECK(multi.out.find("pooled over 2 chains") != std::string::npos);

  // Chains do not depend on which thread runs them.
  REQUIRE(run({"fit", tmp / "d.csv", "--iterations", "200", "--seed", "12", "--out", tmp / "single"}).code == 0);
  CHECK(slurp(tmp / "single/chain.csv") == slurp(tmp / "multi/chain_2.csv"));

  CHECK(run({"fit", tmp / "d.csv", "--chains", "2", "--seeds", "1", "--out", tmp / "x"}).code == mwcr::cli::kUsage);
  CHECK(run({"fit", tmp / "d.csv", "--gamma", "1.5", "--out", tmp / "x"}).code == mwcr::cli::kUsage);
  CHECK(run({"fit", tmp / "d.csv", "--width", "1,2", "--out", tmp / "x"}).code == mwcr::cli::kUsage);
  CHECK(run({"fit", tmp / "d.csv", "--iterations", "10", "--burn-in", "10", "--out", tmp / "x"}).code ==
        mwcr::cli::kUsage);

  const Result few = run({"fit", tmp / "d.csv", "--iterations", "50", "--out", tmp / "few"});
  CHECK(few.code == 0);
  CHECK(few.err.find("warning") != std::string::npos);

  const Result init = run({"fit", tmp / "d.csv", "--iterations", "20", "--init", "1,0.6,0.3,0.1", "--width", "0.5",
                           "--out", tmp / "init"});
  CHECK(init.code == 0);
}

TEST_CASE("config file values sit between flags and defaults") {
  TempDir tmp;
  spit(tmp / "d.csv", run({"simulate", "--scheme", "2", "--seed", "1"}).out);
  spit(tmp / "c.ini", "# defaults\niterations = 150\nseed=3\n");
  REQUIRE(run({"fit", tmp / "d.csv", "--config", tmp / "c.ini", "--seed", "9", "--out", tmp / "f"}).code == 0);
  const auto m = nlohmann::json::parse(slurp(tmp / "f/manifest.json"));
  CHECK(m["config"]["iterations"] == 150);
  CHECK(m["config"]["burn_in"] == 30);
  CHECK(m["seed"] == 9);

  spit(tmp / "bad.ini", "nonsense=1\n");
  CHECK(run({"fit", tmp / "d.csv", "--config", tmp / "bad.ini", "--out", tmp / "g"}).code == mwcr::cli::kUsage);
  spit(tmp / "noeq.ini", "iterations\n");
  CHECK(run({"fit", tmp / "d.csv", "--config", tmp / "noeq.ini", "--out", tmp / "g"}).code == mwcr::cli::kDataError);
}

TEST_CASE("data errors exit with 3") {
  TempDir tmp;
  CHECK(run({"fit", tmp / "missing.csv", "--out", tmp / "f"}).code == mwcr::cli::kDataError);
  spit(tmp / "one_cause.csv", "time,cause,removed\n1,1,0\n2,1,1\n");
  const Result r = run({"fit", tmp / "one_cause.csv", "--out", tmp / "f"});
  CHECK(r.code == mwcr::cli::kDataError);
  CHECK(r.err.find("prior degenerate") != std::string::npos);

  spit(tmp / "follic.txt", "resp stat dftime\nCR 0 1.5\n");
  const Result ing = run({"ingest", tmp / "follic.txt"});
  CHECK(ing.code == mwcr::cli::kDataError);
  CHECK(ing.err.find("line 1") != std::string::npos);
  CHECK(ing.err.find("relsite") != std::string::npos);

  spit(tmp / "chain.csv", "lambda1,lambda2,alpha,beta\n");
  CHECK(run({"plot", tmp / "chain.csv", "--out", tmp / "p"}).code == mwcr::cli::kDataError);

  spit(tmp / "file", "x");
  CHECK(run({"simulate", "--scheme", "1", "--out", tmp / "file/sub"}).code == mwcr::cli::kDataError);
}

TEST_CASE("ingest") {
  TempDir tmp;
  const Result r = run({"ingest", MWCR_DATA_DIR "/follic.txt", "--case", "2", "--out", tmp / "i"});
  REQUIRE(r.code == 0);
  const auto m = nlohmann::json::parse(slurp(tmp / "i/manifest.json"));
  CHECK(m["config"]["cause1"] == 272);
  CHECK(m["config"]["cause2"] == 76);
  CHECK(m["config"]["censored"] == 193);
  CHECK(m["config"]["perturbed_ties"].get<long>() > 0);
  CHECK(slurp(tmp / "i/dataset.csv").rfind("# n=541\n", 0) == 0);
  const Result c1 = run({"ingest", MWCR_DATA_DIR "/follic.txt", "--case", "1"});
  CHECK(c1.out.rfind("# n=348\n", 0) == 0);
  CHECK(run({"ingest", MWCR_DATA_DIR "/follic.txt", "--case", "3"}).code == mwcr::cli::kUsage);
}
