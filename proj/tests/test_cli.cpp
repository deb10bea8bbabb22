#include <doctest.h>

#include <cstdio>
#include <cstdlib>

#include "helpers.hpp"
#include "liftcount/runner.hpp"

using namespace liftcount;
using liftcount::testing::corpus_path;

namespace {

struct CliResult {
  int code;
  std::string out;
};

// Runs the installed binary; stderr folded into stdout.
CliResult cli(const std::string& args) {
  std::string cmd = std::string(LIFTCOUNT_BIN_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

CliResult runner(RunConfig cfg) {
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  return {code, out.str() + err.str()};
}

}  // namespace

TEST_CASE("count prints a single exact value") {
  auto r = cli("count " + corpus_path("phi1.lc") + " --algo lso --fixed-order --n 3");
  CHECK(r.code == 0);
  CHECK(r.out == "13\n");
}

TEST_CASE("sequence prints CSV rows") {
  auto r = cli("sequence " + corpus_path("top_ls.lc") +
               " --algo lso --fixed-order --from 1 --to 4");
  CHECK(r.code == 0);
  CHECK(r.out == "1,1\n2,2\n3,6\n4,24\n");
}

TEST_CASE("count formats: csv and json") {
  auto csv = cli("count " + corpus_path("phi1.lc") +
                 " --algo lso --fixed-order --n 3 --format csv");
  CHECK(csv.out == "3,13\n");
  auto json = cli("count " + corpus_path("phi1.lc") +
                  " --algo lso --fixed-order --n 3 --format json");
  CHECK(json.out == "{\"n\":3,\"value\":\"13\"}\n");
}

TEST_CASE("verify exits 0 on agreement") {
  auto r = cli("verify " + corpus_path("phi2.lc") + " --from 1 --to 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("ok") != std::string::npos);
}

TEST_CASE("exit code 1 on parse errors and missing files") {
  auto bad = cli("count /nonexistent.lc --n 2");
  CHECK(bad.code == 1);
  std::string tmp = "/tmp/liftcount_bad.lc";
  {
    std::ofstream f(tmp);
    f << "forall z. P(z,z,z)\n";
  }
  auto parse = cli("count " + tmp + " --n 2");
  CHECK(parse.code == 1);
  CHECK(parse.out.find("parse error") != std::string::npos);
}

TEST_CASE("exit code 2 on algorithm/axiom mismatches") {
  CHECK(cli("count " + corpus_path("phi1.lc") + " --algo fo2 --n 2").code == 2);
  CHECK(cli("count " + corpus_path("w_example.lc") + " --algo lso --n 2").code == 2);
  std::string tmp = "/tmp/liftcount_one_axiom.lc";
  {
    std::ofstream f(tmp);
    f << "#axiom successor S\nforall x. forall y. (S(x,y) | ~S(x,y))\n";
  }
  CHECK(cli("count " + tmp + " --algo oracle --n 2").code == 2);
}

TEST_CASE("auto algorithm picks lso for axiom sentences and fo2 otherwise") {
  auto lso = cli("count " + corpus_path("top_ls.lc") + " --fixed-order --n 3");
  CHECK(lso.out == "6\n");
  auto fo2 = cli("count " + corpus_path("w_example.lc") + " --n 2");
  CHECK(fo2.out == "441\n");
}

TEST_CASE("byte determinism across runs and thread counts") {
  std::string base = "count " + corpus_path("phi_train.lc") + " --algo lso --fixed-order --n 8";
  auto a = cli(base);
  auto b = cli(base);
  CHECK(a.out == b.out);
  // Worker count must not change output bytes.
  auto s2 = cli("count " + corpus_path("phi_train.lc") +
                " --algo lso --fixed-order --n 8 --threads 1");
  auto p2 = cli("count " + corpus_path("phi_train.lc") +
                " --algo lso --fixed-order --n 8 --threads 8");
  CHECK(s2.out == p2.out);
  CHECK(s2.out == a.out);

  auto env1 = cli("count " + corpus_path("phi2.lc") + " --algo lso --n 6");
  CliResult env8;
  {
    // env var path
    std::string cmd = "LIFTCOUNT_THREADS=8 " + std::string(LIFTCOUNT_BIN_PATH) + " count " +
                      corpus_path("phi2.lc") + " --algo lso --n 6";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) env8.out.append(buf, got);
    env8.code = WEXITSTATUS(pclose(pipe));
  }
  CHECK(env1.out == env8.out);
}

TEST_CASE("sequence reuses one DP run and matches per-n counts") {
  auto seq = cli("sequence " + corpus_path("phi_train.lc") +
                 " --algo lso --fixed-order --from 1 --to 9");
  CHECK(seq.out == "1,1\n2,2\n3,6\n4,19\n5,59\n6,180\n7,544\n8,1637\n9,4917\n");
}

TEST_CASE("dump flags emit the normal form, cells and a layer") {
  RunConfig cfg;
  cfg.command = RunConfig::Command::Count;
  cfg.input_path = corpus_path("phi_train.lc");
  cfg.algo = "lso";
  cfg.fixed_order = true;
  cfg.n = 3;
  cfg.dump_cells = true;
  cfg.dump_normal = true;
  cfg.dump_layers = 2;
  auto r = runner(cfg);
  CHECK(r.code == 0);
  CHECK(r.out.find("one-types: 9") != std::string::npos);
  CHECK(r.out.find("two-tables: 16") != std::string::npos);
  CHECK(r.out.find("#weight Sk0 1 -1") != std::string::npos);
  CHECK(r.out.find("layer m=2") != std::string::npos);
  CHECK(r.out.find("r[s][t][2]:") != std::string::npos);
  // the count itself is the last line
  CHECK(r.out.find("\n6\n") != std::string::npos);
}

TEST_CASE("bench emits one timing row per n") {
  auto r = cli("bench " + corpus_path("phi1.lc") +
               " --algo lso --fixed-order --from 2 --to 4");
  CHECK(r.code == 0);
  int rows = 0;
  for (char c : r.out)
    if (c == '\n') ++rows;
  CHECK(rows == 3);
  CHECK(r.out.rfind("2,", 0) == 0);
}

TEST_CASE("oracle algo is available through the CLI") {
  auto r = cli("count " + corpus_path("phi1.lc") + " --algo oracle --fixed-order --n 3");
  CHECK(r.out == "13\n");
  auto seq = cli("sequence " + corpus_path("top_ls.lc") +
                 " --algo oracle --fixed-order --from 1 --to 3");
  CHECK(seq.out == "1,1\n2,2\n3,6\n");
}

TEST_CASE("dumped normal form counts the same as the original") {
  RunConfig cfg;
  cfg.command = RunConfig::Command::Count;
  cfg.input_path = corpus_path("phi_train.lc");
  cfg.algo = "lso";
  cfg.fixed_order = true;
  cfg.n = 6;
  cfg.dump_normal = true;
  auto r = runner(cfg);
  REQUIRE(r.code == 0);
  // split off the final count line, feed the normal form back in
  auto last_newline = r.out.find_last_of('\n', r.out.size() - 2);
  std::string normal_form = r.out.substr(0, last_newline + 1);
  std::string count = r.out.substr(last_newline + 1);
  std::string tmp = "/tmp/liftcount_normal.lc";
  {
    std::ofstream f(tmp);
    f << normal_form;
  }
  auto again = cli("count " + tmp + " --algo lso --fixed-order --n 6");
  CHECK(again.code == 0);
  CHECK(again.out == count);
}
