#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>
#include <sys/wait.h>

#include <json.hpp>

#include "test_helpers.hpp"

using nlohmann::json;
using test_helpers::TempDir;
using test_helpers::read_file;
using test_helpers::write_file;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run_cli(const TempDir& dir, const std::string& args) {
  const std::string out_path = dir.file("stdout.txt");
  const std::string err_path = dir.file("stderr.txt");
  const std::string cmd =
      std::string(PARSA_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  CliResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  res.out = read_file(out_path);
  res.err = read_file(err_path);
  return res;
}

std::string running_example_libsvm(const TempDir& dir) {
  return write_file(dir.file("g.svm"), "1 0:1 1:1\n1 0:1\n1 1:1 2:1\n1 2:1\n");
}

}  // namespace

TEST_CASE("cli convert: reports |U| |V| |E| and is idempotent") {
  TempDir dir("cli_convert");
  const auto svm = write_file(dir.file("two.svm"), "1 0:1 1:1\n0 0:1\n");
  const auto r1 = run_cli(dir, "convert --input " + svm + " --format libsvm --out " +
                                   dir.file("g.bin"));
  REQUIRE(r1.exit_code == 0);
  CHECK(r1.out == "2 2 3\n");

  const auto first = read_file(dir.file("g.bin"));
  const auto r2 = run_cli(dir, "convert --input " + svm + " --format libsvm --out " +
                                   dir.file("g.bin"));
  REQUIRE(r2.exit_code == 0);
  CHECK(read_file(dir.file("g.bin")) == first);
}

TEST_CASE("cli convert: corrupt line gives exit 3 and a line number") {
  TempDir dir("cli_badline");
  const auto svm = write_file(dir.file("bad.svm"), "1 0:1\n1 nonsense\n");
  const auto r = run_cli(dir, "convert --input " + svm + " --format libsvm --out " +
                                  dir.file("g.bin"));
  CHECK(r.exit_code == 3);
  CHECK(r.err.find(":2:") != std::string::npos);
}

TEST_CASE("cli convert: unknown format is a config error") {
  TempDir dir("cli_badfmt");
  const auto svm = write_file(dir.file("g.svm"), "1 0:1\n");
  const auto r = run_cli(dir, "convert --input " + svm + " --format parquet --out x.bin");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli partition: golden metrics on the running example") {
  TempDir dir("cli_partition");
  const auto svm = running_example_libsvm(dir);
  const auto out = dir.file("run");
  const auto r = run_cli(dir, "partition --input " + svm +
                                  " --format libsvm --k 2 --a 0 --b 1 --seed 5 --workers 1"
                                  " --trials 0 --out " + out);
  REQUIRE(r.exit_code == 0);

  const json metrics = json::parse(read_file(out + "/metrics.json"));
  CHECK(metrics["k"] == 2);
  CHECK(metrics["max_u_size"] == 2);
  CHECK(metrics["m_max"] == 2);
  CHECK(metrics["t_max"] == 1);
  CHECK(metrics["t_sum"] == 2);

  CHECK(read_file(out + "/u_partition.txt") == "0 0\n1 0\n2 1\n3 1\n");
  CHECK(read_file(out + "/v_partition.txt") == "0 0\n1 0\n2 1\n");

  const json manifest = json::parse(read_file(out + "/manifest.json"));
  CHECK(manifest["k"] == 2);
  CHECK(manifest["seed"] == 5);
}

TEST_CASE("cli partition: byte-identical outputs across runs") {
  TempDir dir("cli_determinism");
  const auto svm = running_example_libsvm(dir);
  const std::string args = "partition --input " + svm +
                           " --format libsvm --k 2 --a 0 --b 1 --seed 7 --workers 1 --trials 2";
  REQUIRE(run_cli(dir, args + " --out " + dir.file("r1")).exit_code == 0);
  REQUIRE(run_cli(dir, args + " --out " + dir.file("r2")).exit_code == 0);
  CHECK(read_file(dir.file("r1/u_partition.txt")) == read_file(dir.file("r2/u_partition.txt")));
  CHECK(read_file(dir.file("r1/v_partition.txt")) == read_file(dir.file("r2/v_partition.txt")));
  CHECK(read_file(dir.file("r1/metrics.json")) == read_file(dir.file("r2/metrics.json")));
}

TEST_CASE("cli partition: manifest file reproduces a run") {
  TempDir dir("cli_manifest");
  const auto svm = running_example_libsvm(dir);
  REQUIRE(run_cli(dir, "partition --input " + svm +
                           " --format libsvm --k 2 --a 0 --b 1 --seed 9 --trials 0 --out " +
                           dir.file("orig")).exit_code == 0);
  const auto r = run_cli(dir, "partition --manifest " + dir.file("orig/manifest.json") +
                                  " --input ignored --out " + dir.file("replay"));
  REQUIRE(r.exit_code == 0);
  CHECK(read_file(dir.file("orig/u_partition.txt")) ==
        read_file(dir.file("replay/u_partition.txt")));
  CHECK(read_file(dir.file("orig/metrics.json")) == read_file(dir.file("replay/metrics.json")));
}

TEST_CASE("cli assign-v and evaluate round trip") {
  TempDir dir("cli_assign");
  const auto svm = running_example_libsvm(dir);
  REQUIRE(run_cli(dir, "partition --input " + svm +
                           " --format libsvm --k 2 --a 0 --b 1 --seed 5 --trials 0 --out " +
                           dir.file("run")).exit_code == 0);

  const auto ra = run_cli(dir, "assign-v --input " + svm + " --format libsvm --u-partition " +
                                   dir.file("run/u_partition.txt") + " --out " + dir.file("va"));
  REQUIRE(ra.exit_code == 0);
  CHECK(read_file(dir.file("va/v_partition.txt")) == read_file(dir.file("run/v_partition.txt")));

  const auto re = run_cli(dir, "evaluate --input " + svm + " --format libsvm --u-partition " +
                                   dir.file("run/u_partition.txt") + " --v-partition " +
                                   dir.file("va/v_partition.txt") + " --out " +
                                   dir.file("metrics.json"));
  REQUIRE(re.exit_code == 0);
  const json metrics = json::parse(read_file(dir.file("metrics.json")));
  CHECK(metrics["t_max"] == 1);
}

TEST_CASE("cli bench: single config emits one CSV row; trials=0 rejected") {
  TempDir dir("cli_bench");
  const auto r = run_cli(dir,
                         "bench --input u=200,v=100,edges=800,seed=1 --format synthetic"
                         " --k 4 --a 2 --b 2 --seed 1 --trials 2 --out " + dir.file("b.csv"));
  REQUIRE(r.exit_code == 0);
  const auto csv = read_file(dir.file("b.csv"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);  // header + one row

  const auto bad = run_cli(dir, "bench --input u=10,v=5,edges=20 --format synthetic --trials 0");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli bench: k sweep improves quality with k on a power-law graph") {
  TempDir dir("cli_bench_k");
  const auto r = run_cli(dir,
                         "bench --input u=3000,v=1500,edges=18000,zipf=1.5,seed=4"
                         " --format synthetic --k-list 2,16 --a 4 --b 4 --seed 4 --trials 3"
                         " --out " + dir.file("k.csv"));
  REQUIRE(r.exit_code == 0);
  // Parse the t_max improvement column for k=2 and k=16.
  const auto csv = read_file(dir.file("k.csv"));
  std::vector<double> imprv;
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream cs(line);
    std::string cell;
    while (std::getline(cs, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 11);
    imprv.push_back(std::stod(cells[8]));
  }
  REQUIRE(imprv.size() == 2);
  CHECK(imprv[1] >= imprv[0]);  // k=16 at least as good as k=2
}
