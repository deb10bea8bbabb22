#include "liftcount/runner.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "liftcount/cells.hpp"
#include "liftcount/fo2.hpp"
#include "liftcount/losucc.hpp"
#include "liftcount/normalize.hpp"
#include "liftcount/oracle.hpp"
#include "liftcount/parser.hpp"
#include "liftcount/printer.hpp"
#include "liftcount/threading.hpp"

namespace liftcount {

namespace {

struct RunnerState {
  Sentence original;
  Sentence skolemized;
  std::optional<UniversalSentence> universal;
  std::optional<CellTable> cells;
  std::string algo;  // resolved: fo2 | lso | oracle
};

void dump_cells(const CellTable& cells, std::ostream& out) {
  out << "one-types: " << cells.count() << '\n';
  for (int i = 0; i < cells.count(); ++i)
    out << "  C" << i + 1 << ": " << cells.describe_one_type(i)
        << "  [weight " << to_string(cells.type_weight(i)) << "]\n";
  out << "two-tables: " << cells.two_table_count() << '\n';
  out << "r[s][t]:\n";
  for (int s = 0; s < cells.count(); ++s) {
    out << " ";
    for (int t = 0; t < cells.count(); ++t) out << ' ' << to_string(cells.r_plain(s, t));
    out << '\n';
  }
  if (cells.axiom_mode()) {
    for (int k = 1; k <= 3; ++k) {
      out << "r[s][t][" << k << "]:\n";
      for (int s = 0; s < cells.count(); ++s) {
        out << " ";
        for (int t = 0; t < cells.count(); ++t) out << ' ' << to_string(cells.r_lso(s, t, k));
        out << '\n';
      }
    }
  }
}

void dump_layer(const DpLayer& layer, std::ostream& out) {
  out << "layer m=" << layer.m << " states=" << layer.table.size() << '\n';
  std::vector<const std::pair<const DpKey, Rational>*> entries;
  entries.reserve(layer.table.size());
  for (const auto& e : layer.table) entries.push_back(&e);
  std::sort(entries.begin(), entries.end(),
            [](const auto* a, const auto* b) { return a->first < b->first; });
  int u = layer.u;
  for (const auto* e : entries) {
    out << "  k=(";
    for (int i = 0; i < u; ++i) out << (i ? "," : "") << e->first[i];
    out << ") s=(";
    for (int i = 0; i < u * u; ++i) out << (i ? "," : "") << e->first[u + i];
    out << ") h=" << to_string(e->second) << '\n';
  }
}

void print_value(const RunConfig& cfg, unsigned long n, const Rational& value,
                 std::ostream& out) {
  if (cfg.format == "json")
    out << "{\"n\":" << n << ",\"value\":\"" << to_string(value) << "\"}\n";
  else if (cfg.format == "csv" || cfg.command != RunConfig::Command::Count)
    out << n << ',' << to_string(value) << '\n';
  else
    out << to_string(value) << '\n';
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ifstream file(config.input_path);
  if (!file) {
    err << "error: cannot open input file '" << config.input_path << "'\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();

  RunnerState st;
  try {
    st.original = parse_sentence(buffer.str());
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  }

  bool has_l = st.original.linear_order_pred() >= 0;
  bool has_s = st.original.successor_pred() >= 0;
  st.algo = config.algo;
  if (st.algo == "auto") st.algo = (has_l || has_s) ? "lso" : "fo2";
  if (st.algo == "lso" && !(has_l && has_s)) {
    err << "error: the lso algorithm needs both '#axiom linear_order' and '#axiom successor'\n";
    return 2;
  }
  if (st.algo == "fo2" && (has_l || has_s)) {
    err << "error: the fo2 algorithm only applies to sentences without axiom roles\n";
    return 2;
  }
  if ((st.algo == "oracle" || config.command == RunConfig::Command::Verify) && has_l != has_s) {
    err << "error: declare both axiom roles or neither\n";
    return 2;
  }
  if (config.command == RunConfig::Command::Verify && st.algo == "oracle") {
    err << "error: verify compares an algorithm against the oracle; pick fo2 or lso\n";
    return 2;
  }

  std::size_t threads = config.threads == 0 ? worker_count() : config.threads;
  OracleLimits oracle_limits{config.oracle_max_n, config.oracle_max_bits, threads};
  NormalizeOptions norm_opts{.inline_definitions = !config.no_inline};

  try {
    auto need_cells = [&]() -> const CellTable& {
      if (!st.cells) {
        st.skolemized = skolemize(st.original, norm_opts);
        st.universal = augment_axioms(to_universal_pair_form(st.skolemized));
        st.cells.emplace(*st.universal, CellTable::Options{.threads = threads});
      }
      return *st.cells;
    };

    if (config.dump_normal) {
      st.skolemized = skolemize(st.original, norm_opts);
      out << pretty_print(st.skolemized);
    }
    if (config.dump_cells) dump_cells(need_cells(), out);

    LosuccOptions lso_opts;
    lso_opts.threads = threads;
    if (config.dump_layers >= 0) {
      lso_opts.inspect = [&](const DpLayer& layer) {
        if (static_cast<long>(layer.m) == config.dump_layers) dump_layer(layer, out);
      };
    }

    auto compute = [&](unsigned long n) -> Rational {
      if (st.algo == "fo2") return wfomc_fo2(need_cells(), n, {.threads = threads});
      if (st.algo == "lso") return wfomc_losucc(need_cells(), n, config.fixed_order, lso_opts);
      return brute_force_wfomc(st.original, static_cast<unsigned>(n), config.fixed_order,
                               oracle_limits);
    };

    switch (config.command) {
      case RunConfig::Command::Count: {
        if (config.n < 1) {
          err << "error: count needs --n >= 1\n";
          return 4;
        }
        print_value(config, config.n, compute(config.n), out);
        return 0;
      }
      case RunConfig::Command::Sequence: {
        if (config.from < 1 || config.from > config.to) {
          err << "error: sequence needs 1 <= --from <= --to\n";
          return 4;
        }
        if (config.format == "json") out << "[";
        if (st.algo == "lso") {
          auto values =
              wfomc_losucc_sequence(need_cells(), config.from, config.to, config.fixed_order,
                                    lso_opts);
          for (unsigned long n = config.from; n <= config.to; ++n) {
            if (config.format == "json")
              out << (n == config.from ? "" : ",") << "{\"n\":" << n << ",\"value\":\""
                  << to_string(values[n - config.from]) << "\"}";
            else
              out << n << ',' << to_string(values[n - config.from]) << '\n';
          }
        } else {
          for (unsigned long n = config.from; n <= config.to; ++n) {
            Rational v = compute(n);
            if (config.format == "json")
              out << (n == config.from ? "" : ",") << "{\"n\":" << n << ",\"value\":\""
                  << to_string(v) << "\"}";
            else
              out << n << ',' << to_string(v) << '\n';
          }
        }
        if (config.format == "json") out << "]\n";
        return 0;
      }
      case RunConfig::Command::Verify: {
        unsigned long from = config.from, to = config.to;
        if (config.n >= 1) from = to = config.n;
        if (from < 1 || from > to) {
          err << "error: verify needs --n or 1 <= --from <= --to\n";
          return 4;
        }
        for (unsigned long n = from; n <= to; ++n) {
          Rational expected =
              brute_force_wfomc(st.original, static_cast<unsigned>(n), config.fixed_order,
                                oracle_limits);
          Rational got = compute(n);
          if (got == expected) {
            out << "n=" << n << " ok value=" << to_string(got) << '\n';
            continue;
          }
          out << "n=" << n << " MISMATCH " << st.algo << "=" << to_string(got)
              << " oracle=" << to_string(expected) << '\n';
          auto witness = oracle_witness(st.original, static_cast<unsigned>(n), oracle_limits);
          if (witness) out << "witness model: " << *witness << '\n';
          return 3;
        }
        return 0;
      }
      case RunConfig::Command::Bench: {
        if (config.from < 1 || config.from > config.to) {
          err << "error: bench needs 1 <= --from <= --to\n";
          return 4;
        }
        need_cells();  // setup cost is n-independent, keep it out of the timings
        for (unsigned long n = config.from; n <= config.to; ++n) {
          auto start = std::chrono::steady_clock::now();
          Rational v = compute(n);
          std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
          (void)v;
          out << n << ',' << std::fixed << std::setprecision(6) << dt.count() << '\n';
        }
        return 0;
      }
    }
    return 0;
  } catch (const NormalizeError& e) {
    err << "normalize error: " << e.what() << '\n';
    return 4;
  } catch (const OracleCapExceeded& e) {
    err << "oracle error: " << e.what() << '\n';
    return 4;
  } catch (const Fo2Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const LosuccError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CellError& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  }
}

}  // namespace liftcount
