#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "rookfft/cli.hpp"
#include "rookfft/errors.hpp"
#include "rookfft/io.hpp"

using namespace rookfft;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("rookfft_test_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("element JSON round trip") {
  std::mt19937_64 rng(6);
  const auto f = random_element(3, Basis::groupoid, rng, 0.5);
  const auto j = element_to_json(f);
  CHECK(j["basis"] == "groupoid");
  const auto g = element_from_json(parse_json(j.dump()));
  CHECK(oracle::max_coeff_difference(f, g) == 0.0);
  CHECK_THROWS_AS(parse_json("{not json"), ParseError);
  CHECK_THROWS_AS(element_from_json(parse_json(R"({"n":2,"basis":"semigroup"})")), ParseError);
  CHECK_THROWS_AS(element_from_json(parse_json(R"({"n":2,"basis":"other","terms":[]})")), ParseError);
}

TEST_CASE("coefficient JSON round trip") {
  std::mt19937_64 rng(7);
  const auto F = stein_fft(random_element(3, Basis::groupoid, rng));
  const auto j = coefficients_to_json(F, true);
  CHECK(j["blocks"].size() == F.labels.size());
  CHECK(j["blocks"][1].contains("cells"));
  const auto G = coefficients_from_json(parse_json(j.dump()));
  CHECK(G.family == Family::stein);
  CHECK(max_block_difference(F, G) == 0.0);
}

TEST_CASE("enumerate") {
  const auto r2 = run({"enumerate", "--n", "2"});
  CHECK(r2.code == 0);
  CHECK(count_lines(r2.out) == 8);  // 7 elements and the footer
  CHECK(r2.out.find("# size=7 size_recursive=7 match=true") != std::string::npos);
  CHECK(count_lines(run({"enumerate", "--n", "0"}).out) == 2);
  const auto r9 = run({"enumerate", "--n", "9"});
  CHECK(r9.code == kExitUsage);
  CHECK(r9.err.rfind("error[usage]:", 0) == 0);
  CHECK(count_lines(r9.err) == 1);
  const auto j = parse_json(run({"enumerate", "--n", "3", "--format", "json"}).out);
  CHECK(j["elements"].size() == 34);
}

TEST_CASE("transform, invert and convolve through the CLI") {
  TempDir dir;
  std::mt19937_64 rng(12);
  const auto f = random_element(3, Basis::groupoid, rng);
  const auto in = dir.write("f.json", element_to_json(f).dump());

  const auto naive = run({"transform", "--input", in, "--algorithm", "naive"});
  const auto stein = run({"transform", "--input", in, "--algorithm", "stein", "--output", dir.file("F.json")});
  REQUIRE(naive.code == 0);
  REQUIRE(stein.code == 0);
  const auto jn = parse_json(naive.out);
  const auto js = parse_json(read_file(dir.file("F.json")));
  CHECK(max_block_difference(coefficients_from_json(jn), coefficients_from_json(js)) < 1e-9);
  CHECK(jn["ops"] != js["ops"]);
  CHECK(js["bound_ok"] == true);

  const auto rec = run({"transform", "--input", in, "--algorithm", "recursive"});
  CHECK(rec.code == kExitUsage);
  CHECK(rec.err.rfind("error[usage]:", 0) == 0);
  const auto rec_conv = run({"transform", "--input", in, "--algorithm", "recursive", "--convert"});
  CHECK(rec_conv.code == 0);
  CHECK(parse_json(rec_conv.out)["bound_ok"] == true);

  const auto inv = run({"invert", "--input", dir.file("F.json")});
  REQUIRE(inv.code == 0);
  CHECK(oracle::max_coeff_difference(element_from_json(parse_json(inv.out)), f) < 1e-9);

  const auto g = random_element(3, Basis::groupoid, rng);
  const auto in2 = dir.write("g.json", element_to_json(g).dump());
  const auto conv = run({"convolve", "--input", in, "--input", in2});
  REQUIRE(conv.code == 0);
  CHECK(oracle::max_coeff_difference(element_from_json(parse_json(conv.out)), convolve_groupoid(f, g)) < 1e-9);

  const auto empty = dir.write("empty.json", R"({"n":2,"basis":"groupoid","terms":[]})");
  const auto ze = parse_json(run({"transform", "--input", empty}).out);
  for (const auto& b : ze["blocks"]) {
    for (const auto& row : b["rows"]) {
      for (const auto& v : row) CHECK(v["re"] == 0.0);
    }
  }
}

TEST_CASE("analyze and error paths") {
  TempDir dir;
  const auto ballots = dir.write("b.csv", "ballot,count\n2->1;4->4,12\n");
  const auto r = run({"analyze", "--input", ballots, "--n", "4"});
  REQUIRE(r.code == 0);
  const auto j = parse_json(r.out);
  double fractions = 0.0;
  for (const auto& l : j["labels"]) {
    fractions += l["fraction"].get<double>();
    if (l["k"] != 2) CHECK(l["energy"].get<double>() < 1e-12);
  }
  CHECK(j["association"] == "groupoid");
  CHECK(std::abs(fractions - 1.0) < 1e-9);
  const auto csv = run({"analyze", "--input", ballots, "--format", "csv"});
  CHECK(csv.out.rfind("lambda,k,energy,fraction\n", 0) == 0);

  const auto bad = dir.write("bad.csv", "ballot,count\n2->1;3->1,1\n");
  const auto e = run({"analyze", "--input", bad});
  CHECK(e.code == kExitParse);
  CHECK(e.err.rfind("error[parse]: line 2:", 0) == 0);
  CHECK(run({"analyze", "--input", dir.file("missing.csv")}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"transform", "--input", bad, "--algorithm", "fast"}).code == kExitUsage);
}

TEST_CASE("bench output is deterministic") {
  const auto a = run({"bench", "--n", "3", "--seed", "5"});
  const auto b = run({"bench", "--n", "3", "--seed", "5"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(count_lines(a.out) == 4);
  CHECK(a.out.find(",false") == std::string::npos);
  CHECK(run({"bench", "--n", "6"}).code == kExitUsage);
}
