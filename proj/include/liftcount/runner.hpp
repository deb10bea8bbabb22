#pragma once

#include <iosfwd>
#include <string>

namespace liftcount {

struct RunConfig {
  enum class Command { Count, Sequence, Verify, Bench };
  Command command = Command::Count;
  std::string input_path;
  unsigned long n = 0;
  unsigned long from = 0, to = 0;
  std::string algo = "auto";  // fo2 | lso | oracle | auto
  bool fixed_order = false;
  std::string format = "plain";  // plain | csv | json
  bool dump_cells = false;
  bool dump_normal = false;
  long dump_layers = -1;
  bool no_inline = false;
  std::size_t threads = 0;  // 0 = LIFTCOUNT_THREADS / hardware
  unsigned oracle_max_n = 6;
  unsigned oracle_max_bits = 24;
};

// Exit codes: 0 success, 1 parse error, 2 incompatible algorithm/axioms,
// 3 verification mismatch, 4 resource caps or other runtime failures.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace liftcount
