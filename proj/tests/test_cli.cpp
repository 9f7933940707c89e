#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using rancher::cli::run;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / "rancher_cli_tests";
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

std::string read_file(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CaptureStderr {
  std::stringstream ss;
  std::streambuf* old;
  CaptureStderr() : old(std::cerr.rdbuf(ss.rdbuf())) {}
  ~CaptureStderr() { std::cerr.rdbuf(old); }
};

struct CaptureStdout {
  std::stringstream ss;
  std::streambuf* old;
  CaptureStdout() : old(std::cout.rdbuf(ss.rdbuf())) {}
  ~CaptureStdout() { std::cout.rdbuf(old); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
  CaptureStderr err;
  CaptureStdout out;
  CHECK(run({}) == 1);
  CHECK(run({"simulate-rancher"}) == 1);  // missing --steps
  CHECK(run({"simulate-rancher", "--steps", "5", "--bogus"}) == 1);
  CHECK(run({"--help"}) == 0);
  CHECK(run({"simulate-rancher", "--steps", "5", "--out",
             "/nonexistent_dir_zz/x.csv"}) == 2);
  CHECK(run({"estimate-exponent", "--model", "nosuch"}) == 1);
  CHECK(run({"plot", "--in", "/nonexistent_dir_zz/x.csv"}) == 2);
}

TEST_CASE("simulate-rancher csv contract") {
  TempDir tmp;
  const auto out = tmp.file("r.csv");
  SUBCASE("zero steps yields header plus one row") {
    REQUIRE(run({"simulate-rancher", "--steps", "0", "--out", out}) == 0);
    const auto text = read_file(out);
    CHECK(text.substr(0, text.find('\n')) ==
          "n,x,y,norm,width,direction,alpha,alpha_prime,d,hull_size");
    CHECK(text ==
          "n,x,y,norm,width,direction,alpha,alpha_prime,d,hull_size\n"
          "0,0,0,0,,,,,,1\n");
    const json manifest = json::parse(read_file(out + ".manifest.json"));
    CHECK(manifest["command"] == "simulate-rancher");
    CHECK(manifest["rng"] == "pcg32-splitmix64");
    CHECK(manifest["version"] == "0.1.0");
    CHECK(manifest["parameters"]["steps"] == "0");
  }
  SUBCASE("reruns are byte identical") {
    const auto out2 = tmp.file("r2.csv");
    REQUIRE(run({"simulate-rancher", "--steps", "500", "--seed", "9", "--out",
                 out}) == 0);
    REQUIRE(run({"simulate-rancher", "--steps", "500", "--seed", "9", "--out",
                 out2}) == 0);
    CHECK(read_file(out) == read_file(out2));
  }
  SUBCASE("checkpoint flag variants") {
    REQUIRE(run({"simulate-rancher", "--steps", "10", "--checkpoints", "all",
                 "--out", out}) == 0);
    auto lines = read_file(out);
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 12);  // header + 11
    REQUIRE(run({"simulate-rancher", "--steps", "10", "--checkpoints",
                 "3,1,2", "--out", out}) == 0);
    lines = read_file(out);
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 4);
    CaptureStderr err;
    CHECK(run({"simulate-rancher", "--steps", "10", "--checkpoints", "20",
               "--out", out}) == 1);
    CHECK(run({"simulate-rancher", "--steps", "10", "--checkpoints", "x",
               "--out", out}) == 1);
  }
  SUBCASE("stdout when --out is omitted") {
    CaptureStdout cap;
    REQUIRE(run({"simulate-rancher", "--steps", "0"}) == 0);
    CHECK(cap.ss.str().find("n,x,y,norm") == 0);
  }
  SUBCASE("validate passes on a short run") {
    CaptureStderr err;
    REQUIRE(run({"simulate-rancher", "--steps", "300", "--seed", "4",
                 "--validate", "--out", out}) == 0);
    CHECK(err.ss.str().find("validation ok") != std::string::npos);
  }
}

TEST_CASE("simulate-investor csv contract") {
  TempDir tmp;
  const auto out = tmp.file("i.csv");
  SUBCASE("header and required alpha") {
    CaptureStderr err;
    CHECK(run({"simulate-investor", "--steps", "10"}) == 1);  // no --alpha
    REQUIRE(run({"simulate-investor", "--steps", "100", "--alpha", "0",
                 "--seed", "3", "--out", out}) == 0);
    const auto text = read_file(out);
    CHECK(text.substr(0, text.find('\n')) ==
          "n,x,rmax,rmin,width,ratio,status");
  }
  SUBCASE("blow-up writes a final marker row") {
    REQUIRE(run({"simulate-investor", "--steps", "2000", "--alpha", "4",
                 "--seed", "12", "--out", out}) == 0);
    const auto text = read_file(out);
    const auto last_start = text.rfind('\n', text.size() - 2);
    const auto last = text.substr(last_start + 1);
    CHECK(last.find(",blowup") != std::string::npos);
  }
  SUBCASE("validate cross-checks the naive scans") {
    CaptureStderr err;
    REQUIRE(run({"simulate-investor", "--steps", "200", "--alpha", "1",
                 "--validate", "--out", out}) == 0);
    CHECK(err.ss.str().find("validation ok") != std::string::npos);
  }
}

TEST_CASE("estimate-exponent json contract") {
  TempDir tmp;
  const auto out = tmp.file("e.json");
  REQUIRE(run({"estimate-exponent", "--model", "stub", "--exponent", "0.6",
               "--reps", "3", "--out", out}) == 0);
  const json doc = json::parse(read_file(out));
  CHECK(std::fabs(doc["slope"].get<double>() - 0.6) <= 1e-9);
  CHECK(doc.contains("stderr"));
  CHECK(doc.contains("intercept"));
  CHECK(doc.contains("points"));
  CHECK(doc.contains("dropped"));
  CHECK(doc.contains("manifest"));
  CHECK(doc["rng"] == "pcg32-splitmix64");
  CHECK(doc["points"].size() == 3);
  CHECK(doc["points"][0].contains("n"));
  CHECK(doc["points"][0].contains("w"));

  SUBCASE("thread count does not change the data") {
    const auto o1 = tmp.file("t1.json"), o4 = tmp.file("t4.json");
    const std::vector<std::string> base = {
        "estimate-exponent", "--model", "rancher", "--lengths", "200,400",
        "--reps",            "6",       "--seed",  "5"};
    auto a1 = base, a4 = base;
    a1.insert(a1.end(), {"--threads", "1", "--out", o1});
    a4.insert(a4.end(), {"--threads", "4", "--out", o4});
    REQUIRE(run(a1) == 0);
    REQUIRE(run(a4) == 0);
    const json d1 = json::parse(read_file(o1));
    const json d4 = json::parse(read_file(o4));
    CHECK(d1["slope"] == d4["slope"]);
    CHECK(d1["points"] == d4["points"]);
    CHECK(d1["raw_points"] == d4["raw_points"]);
  }
  SUBCASE("RANCHER_THREADS is the default for --threads") {
    setenv("RANCHER_THREADS", "3", 1);
    const auto o = tmp.file("env.json");
    REQUIRE(run({"estimate-exponent", "--model", "stub", "--reps", "2",
                 "--out", o}) == 0);
    unsetenv("RANCHER_THREADS");
    const json d = json::parse(read_file(o));
    CHECK(d["manifest"]["parameters"]["threads"] == "3");
  }
}

TEST_CASE("aggregator and alpha validation") {
  TempDir tmp;
  CaptureStderr err;
  CHECK(run({"estimate-exponent", "--model", "rancher", "--aggregator",
             "bogus"}) == 1);
  CHECK(run({"simulate-investor", "--steps", "10", "--alpha", "-1"}) == 1);
  for (const char* agg : {"mean", "per-walk-points"}) {
    const auto out = tmp.file(std::string("agg_") + agg + ".json");
    REQUIRE(run({"estimate-exponent", "--model", "stub", "--reps", "2",
                 "--aggregator", agg, "--out", out}) == 0);
    const json doc = json::parse(read_file(out));
    CHECK(std::fabs(doc["slope"].get<double>() - 0.75) <= 1e-9);
  }
}

TEST_CASE("drift-check json contract") {
  TempDir tmp;
  const auto out = tmp.file("d.json");
  REQUIRE(run({"drift-check", "--steps", "500", "--reps", "2", "--c",
               "0.1667", "--epsilon", "0.3", "--out", out}) == 0);
  const json doc = json::parse(read_file(out));
  CHECK(doc["manifest"]["parameters"]["c"] == "0.1667");
  CHECK(doc["manifest"]["parameters"]["epsilon"] == "0.3");
  CHECK(doc["summary"]["dx_violations"] == 0);
  CHECK(doc["conditions"].is_array());
  CHECK(doc["conditions"].size() >= 6);
  CHECK(doc["bins"].is_array());
  bool abs_dx_pass = false;
  for (const auto& c : doc["conditions"]) {
    if (c["name"] == "abs_delta_x_le_1") abs_dx_pass = c["pass"].get<bool>();
  }
  CHECK(abs_dx_pass);
}

TEST_CASE("plot") {
  TempDir tmp;
  SUBCASE("rancher csv renders path and hull") {
    const auto csv = tmp.file("r.csv");
    const auto svg = tmp.file("r.svg");
    REQUIRE(run({"simulate-rancher", "--steps", "300", "--seed", "7",
                 "--checkpoints", "all", "--out", csv}) == 0);
    REQUIRE(run({"plot", "--in", csv, "--out", svg}) == 0);
    const auto img = read_file(svg);
    CHECK(img.rfind("<svg", 0) == 0);
    CHECK(img.find("<polyline") != std::string::npos);
    CHECK(img.find("<polygon") != std::string::npos);
    CHECK(img.find("</svg>") != std::string::npos);
  }
  SUBCASE("simulate --plot emits the figure directly") {
    const auto csv = tmp.file("p.csv");
    const auto svg = tmp.file("p.svg");
    REQUIRE(run({"simulate-rancher", "--steps", "300", "--seed", "7", "--out",
                 csv, "--plot", svg}) == 0);
    const auto img = read_file(svg);
    CHECK(img.find("<polygon") != std::string::npos);
    // the run manifest rides along as an xml comment
    CHECK(img.find("<!--") != std::string::npos);
    CHECK(img.find("simulate-rancher") != std::string::npos);
  }
  SUBCASE("empty-but-headered csv yields axes only") {
    const auto csv = tmp.file("empty.csv");
    std::ofstream(csv) << "n,x,y,norm,width,direction,alpha,alpha_prime,d,"
                          "hull_size\n";
    const auto svg = tmp.file("empty.svg");
    REQUIRE(run({"plot", "--in", csv, "--out", svg}) == 0);
    const auto img = read_file(svg);
    CHECK(img.rfind("<svg", 0) == 0);
    CHECK(img.find("<rect") != std::string::npos);
    CHECK(img.find("<polyline") == std::string::npos);
  }
  SUBCASE("malformed csv reports the row number") {
    const auto csv = tmp.file("bad.csv");
    std::ofstream(csv) << "n,x,y,norm,width,direction,alpha,alpha_prime,d,"
                          "hull_size\n"
                       << "1,0.5,0.5,0.7,,,,,,2\n"
                       << "2,oops,0.5,0.7,,,,,,2\n";
    CaptureStderr err;
    CHECK(run({"plot", "--in", csv}) == 1);
    CHECK(err.ss.str().find("row 3") != std::string::npos);
  }
  SUBCASE("investor csv renders chains") {
    const auto csv = tmp.file("i.csv");
    const auto svg = tmp.file("i.svg");
    REQUIRE(run({"simulate-investor", "--steps", "200", "--alpha", "1",
                 "--seed", "2", "--checkpoints", "all", "--out", csv}) == 0);
    REQUIRE(run({"plot", "--in", csv, "--out", svg}) == 0);
    CHECK(read_file(svg).find("<polyline") != std::string::npos);
  }
  SUBCASE("exponent json renders a fitted scatter") {
    const auto j = tmp.file("e.json");
    const auto svg = tmp.file("e.svg");
    REQUIRE(run({"estimate-exponent", "--model", "stub", "--reps", "2",
                 "--out", j}) == 0);
    REQUIRE(run({"plot", "--in", j, "--out", svg}) == 0);
    const auto img = read_file(svg);
    CHECK(img.find("slope") != std::string::npos);
    CHECK(img.find("<circle") != std::string::npos);
  }
}

}  // TEST_SUITE
