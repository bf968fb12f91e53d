#include "dimspan/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "dimspan/engine.hpp"
#include "dimspan/error.hpp"
#include "dimspan/genbench.hpp"
#include "dimspan/graph_model.hpp"

namespace dimspan::cli {

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string metrics;
  std::optional<double> min_support;
  std::optional<std::size_t> min_frequency;
  bool undirected = false;
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  VerificationPosition verify = VerificationPosition::post_combine;
  std::vector<std::string> compress{"all"};
  bool no_branch_check = false;
  std::optional<std::size_t> max_edges;
  std::size_t guard = 10;
  std::size_t count = 100;
  std::uint64_t seed = 0;
};

class IoError : public Error {
 public:
  using Error::Error;
};

GraphCollection read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path + ": cannot open for reading");
  try {
    return parse_tlf(in);
  } catch (const ParseError& e) {
    throw IoError(path + ": " + e.what());
  }
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError(o.output + ": cannot open for writing");
  f << text;
  f.close();
  if (!f) throw IoError(o.output + ": write failed");
}

Packing packing_of(const std::vector<std::string>& flags) {
  Packing p;
  for (const auto& f : flags) {
    if (f == "all") {
      p = {true, true, true};
    } else if (f == "patterns") {
      p.patterns = true;
    } else if (f == "embeddings") {
      p.embeddings = true;
    } else if (f == "graphs") {
      p.graphs = true;
    }
  }
  return p;
}

MiningConfig config_of(const Options& o) {
  MiningConfig cfg;
  cfg.min_support = o.min_support;
  cfg.min_frequency = o.min_frequency;
  cfg.mode = o.undirected ? Mode::undirected : Mode::directed;
  cfg.workers = o.workers;
  cfg.verification = o.verify;
  cfg.compress = packing_of(o.compress);
  cfg.branch_check = !o.no_branch_check;
  cfg.max_edge_count = o.max_edges;
  return cfg;
}

std::string engine_text(const MiningResult& r) {
  std::ostringstream s;
  write_result(s, r);
  return s.str();
}

std::string oracle_text(const GraphCollection& c, const Options& o) {
  const MiningConfig cfg = config_of(o);
  const auto f_min = cfg.resolve_min_frequency(c.size());
  const auto r = oracle_mine(c, f_min, cfg.mode, o.guard);
  std::ostringstream s;
  write_result(s, r.frequent, r.vertex_dict, r.edge_dict);
  return s.str();
}

void add_support(CLI::App* cmd, Options& o) {
  auto* s = cmd->add_option("--min-support", o.min_support, "Relative minimum support in (0,1]")
                ->check(CLI::Range(0.0, 1.0));
  auto* f = cmd->add_option("--min-frequency", o.min_frequency, "Absolute minimum frequency")
                ->check(CLI::PositiveNumber);
  s->excludes(f);
  f->excludes(s);
  cmd->add_flag("--undirected", o.undirected, "Ignore edge direction");
  cmd->add_flag("--directed{false}", o.undirected, "Respect edge direction (default)");
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.input, "Input graphs (TLF)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--output", o.output, "Result file (default stdout)");
}

void add_engine(CLI::App* cmd, Options& o) {
  const std::map<std::string, VerificationPosition> positions{
      {"pre-report", VerificationPosition::pre_report},
      {"post-combine", VerificationPosition::post_combine},
      {"post-filter", VerificationPosition::post_filter}};
  cmd->add_option("--workers", o.workers, "Logical partitions")->check(CLI::PositiveNumber);
  cmd->add_option("--verify", o.verify, "Verification position")
      ->transform(CLI::CheckedTransformer(positions, CLI::ignore_case));
  cmd->add_option("--compress", o.compress, "none, patterns, embeddings, graphs or all")
      ->delimiter(',')
      ->check(CLI::IsMember({"none", "patterns", "embeddings", "graphs", "all"}));
  cmd->add_flag("--no-branch-check", o.no_branch_check, "Disable branch pruning");
  cmd->add_option("--max-edges", o.max_edges, "Largest pattern edge count")
      ->check(CLI::PositiveNumber);
}

void require_support(const CLI::App* cmd, const Options& o) {
  if (!o.min_support && !o.min_frequency) {
    throw CLI::RequiredError(cmd->get_name() + ": one of --min-support or --min-frequency");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frequent subgraph miner for directed labeled multigraphs", "dimspan"};
  app.require_subcommand(1);
  Options o;

  auto* mine_cmd = app.add_subcommand("mine", "Mine frequent patterns");
  add_input(mine_cmd, o);
  add_support(mine_cmd, o);
  add_engine(mine_cmd, o);
  mine_cmd->add_option("--metrics", o.metrics, "Metrics report (JSON)");

  auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic collection");
  gen_cmd->add_option("--count", o.count, "Number of graphs")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", o.seed, "Random seed");
  gen_cmd->add_option("--output", o.output, "TLF file (default stdout)");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth");
  add_input(oracle_cmd, o);
  add_support(oracle_cmd, o);
  oracle_cmd->add_option("--guard", o.guard, "Per-graph edge limit after label filtering");

  auto* check_cmd = app.add_subcommand("check", "Compare mine against oracle");
  add_input(check_cmd, o);
  add_support(check_cmd, o);
  add_engine(check_cmd, o);
  check_cmd->add_option("--guard", o.guard, "Per-graph edge limit after label filtering");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
    for (auto* cmd : {mine_cmd, oracle_cmd, check_cmd}) {
      if (cmd->parsed()) require_support(cmd, o);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      emit(o, write_tlf(generate({o.count, o.seed})), out);
    } else if (mine_cmd->parsed()) {
      const auto result = mine(read_input(o.input), config_of(o));
      emit(o, engine_text(result), out);
      if (!o.metrics.empty()) {
        std::ofstream m(o.metrics, std::ios::trunc);
        if (!m) throw IoError(o.metrics + ": cannot open for writing");
        write_metrics(m, result.metrics);
        m.close();
        if (!m) throw IoError(o.metrics + ": write failed");
      }
    } else if (oracle_cmd->parsed()) {
      emit(o, oracle_text(read_input(o.input), o), out);
    } else if (check_cmd->parsed()) {
      const auto c = read_input(o.input);
      const auto engine = engine_text(mine(c, config_of(o)));
      const auto oracle = oracle_text(c, o);
      if (engine != oracle) {
        std::istringstream a(engine), b(oracle);
        std::string la, lb;
        std::size_t line = 1;
        while (true) {
          const bool ga = static_cast<bool>(std::getline(a, la));
          const bool gb = static_cast<bool>(std::getline(b, lb));
          if (!ga && !gb) break;
          if (!ga || !gb || la != lb) {
            err << "mismatch at line " << line << "\n  mine:   " << (ga ? la : "<eof>")
                << "\n  oracle: " << (gb ? lb : "<eof>") << '\n';
            break;
          }
          ++line;
        }
        return kFailure;
      }
      std::size_t n = 0;
      for (const char ch : engine) n += ch == '\n';
      out << "identical: " << n << " frequent patterns\n";
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace dimspan::cli
