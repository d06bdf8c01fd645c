#include "doctest.h"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("hcizlab_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Run run(const std::string& args, const std::string& env = "") {
  const fs::path err = work_dir() / "stderr.txt";
  const std::string command =
      "cd '" + work_dir().string() + "' && " + env + " '" + HCIZLAB_CLI_PATH + "' " + args + " 2> '" + err.string() + "'";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, n);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

json error_of(const Run& r) {
  const auto j = json::parse(r.err);
  REQUIRE(j.contains("error"));
  return j["error"];
}

}  // namespace

TEST_CASE("hurwitz subcommand") {
  const auto all = run("hurwitz --d 2 --g 0");
  REQUIRE(all.status == 0);
  const auto rows = json::parse(all.out)["rows"];
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) CHECK(row["value"] == "1");

  const auto closed = run("hurwitz --d 3 --g 0 --beta 1,1,1 --method closed_form --format csv");
  REQUIRE(closed.status == 0);
  CHECK(closed.out.find("\"3\",\"1,1,1\",0,4,closed_form") != std::string::npos);

  const auto brute = run("hurwitz --d 3 --g 0 --beta 1,1,1 --method brute_force --format csv");
  REQUIRE(brute.status == 0);
  CHECK(brute.out.find("\"3\",\"1,1,1\",0,4,brute_force") != std::string::npos);

  const auto trivial = json::parse(run("hurwitz --d 1 --g 1").out)["rows"];
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0]["value"] == "0");
}

TEST_CASE("weingarten subcommand") {
  const auto r = run("weingarten --d 2 --N 5 --format json");
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  std::vector<std::string> values;
  for (const auto& e : j["entries"]) values.push_back(e["value"]);
  CHECK(values == std::vector<std::string>{"-1/120", "1/24"});
  const auto unstable = run("weingarten --d 3 --N 2 --format csv");
  REQUIRE(unstable.status == 0);
  CHECK(unstable.out.rfind("rho,sigma,value\n", 0) == 0);
}

TEST_CASE("hciz subcommand and manifest") {
  const auto r = run("hciz --eval --z 0.1 --spectra uniform:8");
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["value"]["re"].get<double>() > 0.9);
  CHECK(j["value"]["re"].get<double>() < 1.0);
  CHECK(j["value"]["im"].get<double>() == 0.0);
  const auto manifest = json::parse(slurp(work_dir() / "hcizlab-hciz.manifest.json"));
  for (const char* key : {"command", "parameters", "seed", "precision_digits", "threads", "version", "wall_time_seconds"})
    CHECK(manifest.contains(key));
  CHECK(manifest["command"] == "hciz");
  CHECK(manifest["parameters"]["spectra"] == "uniform:8");
  CHECK(manifest["precision_digits"] == 50);

  // flags beat the environment, the environment beats the defaults
  run("hciz --z 0.1 --spectra uniform:4 --manifest env.json", "HCIZ_PRECISION=70 HCIZ_THREADS=3");
  const auto env = json::parse(slurp(work_dir() / "env.json"));
  CHECK(env["precision_digits"] == 70);
  CHECK(env["threads"] == 3);
  run("hciz --z 0.1 --spectra uniform:4 --manifest flag.json --precision 30 --threads 2", "HCIZ_PRECISION=70");
  const auto flag = json::parse(slurp(work_dir() / "flag.json"));
  CHECK(flag["precision_digits"] == 30);
  CHECK(flag["threads"] == 2);

  // spectra from a file match the inline form
  std::ofstream(work_dir() / "spec.json") << R"({"a": ["1/2", -1], "b": [0, 2]})";
  const auto from_file = run("hciz --z 0.2 --spectra-file spec.json --format csv");
  const auto inline_form = run("hciz --z 0.2 --a 0.5,-1 --b 0,2 --format csv");
  REQUIRE(from_file.status == 0);
  CHECK(from_file.out == inline_form.out);
}

TEST_CASE("outputs are reproducible") {
  const std::string mc = "hciz --monte-carlo 4000 --z 0.3 --z-im 0.1 --spectra cauchy:3 --seed 11 --format csv";
  const auto first = run(mc + " --threads 2"), second = run(mc + " --threads 2");
  REQUIRE(first.status == 0);
  CHECK(first.out == second.out);
  CHECK(run(mc + " --threads 1").out == run(mc + " --threads 1").out);
  CHECK(run("genfun --series s --order 15").out == run("genfun --series s --order 15").out);

  run("weingarten --d 3 --N 4 --out w.json");
  CHECK(fs::exists(work_dir() / "w.json.manifest.json"));
  CHECK(json::parse(slurp(work_dir() / "w.json"))["d"] == 3);
}

TEST_CASE("zeros subcommand") {
  const auto r = run("zeros --predict --N 2 --hbar 1 --b 0,1 --format json");
  REQUIRE(r.status == 0);
  const auto zeros = json::parse(r.out)["zeros"];
  REQUIRE(zeros.size() == 6);
  for (const auto& z : zeros) CHECK(z["im"].get<double>() == doctest::Approx(z["k"].get<int>() * 3.141592653589793));
  const auto verified = run("zeros --predict --b 0,1 --verify --format csv");
  CHECK(verified.out.rfind("N,i,j,k,im_z,residual\n", 0) == 0);
}

TEST_CASE("genfun subcommand") {
  const auto r = run("genfun --series s --order 5 --format csv");
  REQUIRE(r.status == 0);
  CHECK(r.out == "n,coefficient\n0,0\n1,1\n2,4\n3,28\n4,240\n5,2288\n");
}

TEST_CASE("errors are structured") {
  const auto missing = run("hurwitz --d 2");
  CHECK(missing.status == 2);
  CHECK(error_of(missing)["code"] == "usage");

  const auto capacity = run("hurwitz --d 20 --g 0");
  CHECK(capacity.status == 3);
  const auto e = error_of(capacity);
  CHECK(e["code"] == "capacity");
  CHECK(e["module"] == "monotone_hurwitz");
  CHECK(!e["message"].get<std::string>().empty());

  const auto repeated = run("hciz --a 1,1,2 --b 0,1,2 --z 0.1");
  CHECK(repeated.status == 2);
  CHECK(error_of(repeated)["code"] == "domain");

  CHECK(run("hciz --a 1,2 --b 0").status == 2);
  CHECK(run("zeros --predict --N 3 --b 0,1").status == 2);
  CHECK(run("verify --profile slow").status == 2);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("verify subcommand") {
  const auto quick = run("verify --profile quick");
  CHECK(quick.status == 0);
  CHECK(quick.out.find("all invariants passed") != std::string::npos);
  CHECK(quick.out.find("FAIL") == std::string::npos);

  const auto fault = run("verify --module characters --inject-fault character-table --format json");
  CHECK(fault.status == 1);
  const auto report = json::parse(fault.out);
  CHECK(report["passed"] == false);
  bool named = false;
  for (const auto& inv : report["invariants"])
    if (inv["name"] == "characters.column_orthogonality" && inv["passed"] == false) named = true;
  CHECK(named);
}
