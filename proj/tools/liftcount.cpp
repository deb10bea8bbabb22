#include <iostream>

#include <CLI11.hpp>

#include "liftcount/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact weighted first-order model counting for FO2 with a linear order and a "
               "successor axiom"};
  app.require_subcommand(1);

  liftcount::RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input_path, "sentence file")->required();
    sub->add_option("--algo", cfg.algo, "fo2 | lso | oracle | auto (default auto)");
    sub->add_flag("--fixed-order", cfg.fixed_order,
                  "keep L fixed to the natural order (gamma instead of n! * gamma)");
    sub->add_option("--format", cfg.format, "plain | csv | json");
    sub->add_flag("--dump-cells", cfg.dump_cells, "print 1-types, 2-table count and r-tables");
    sub->add_flag("--dump-normal", cfg.dump_normal, "print the Skolemized normal form");
    sub->add_option("--dump-layers", cfg.dump_layers, "print the DP layer for the given m");
    sub->add_flag("--no-inline", cfg.no_inline,
                  "disable definitional inlining during normalization");
    sub->add_option("--threads", cfg.threads,
                    "worker threads (default: LIFTCOUNT_THREADS or hardware)");
    sub->add_option("--oracle-max-n", cfg.oracle_max_n, "oracle domain size cap (default 6)");
    sub->add_option("--oracle-max-bits", cfg.oracle_max_bits,
                    "oracle free ground literal cap (default 24)");
  };

  CLI::App* count = app.add_subcommand("count", "print one exact WFOMC value");
  add_common(count);
  count->add_option("--n", cfg.n, "domain size")->required();

  CLI::App* sequence = app.add_subcommand("sequence", "print CSV n,value over a range");
  add_common(sequence);
  sequence->add_option("--from", cfg.from, "first domain size")->required();
  sequence->add_option("--to", cfg.to, "last domain size")->required();

  CLI::App* verify = app.add_subcommand("verify", "compare an algorithm against the oracle");
  add_common(verify);
  verify->add_option("--n", cfg.n, "single domain size");
  verify->add_option("--from", cfg.from, "first domain size");
  verify->add_option("--to", cfg.to, "last domain size");

  CLI::App* bench = app.add_subcommand("bench", "print CSV n,seconds over a range");
  add_common(bench);
  bench->add_option("--from", cfg.from, "first domain size")->required();
  bench->add_option("--to", cfg.to, "last domain size")->required();

  CLI11_PARSE(app, argc, argv);

  if (count->parsed()) cfg.command = liftcount::RunConfig::Command::Count;
  if (sequence->parsed()) cfg.command = liftcount::RunConfig::Command::Sequence;
  if (verify->parsed()) cfg.command = liftcount::RunConfig::Command::Verify;
  if (bench->parsed()) cfg.command = liftcount::RunConfig::Command::Bench;

  return liftcount::run(cfg, std::cout, std::cerr);
}
