#include "kplex/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "kplex/oracle.hpp"

namespace kplex::cli {

namespace fs = std::filesystem;

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kOptimal: return "optimal";
    case RunStatus::kTimeout: return "timeout";
    case RunStatus::kError: return "error";
  }
  return "?";
}

int percent_color_permille(std::int64_t color_wins, std::int64_t partition_wins) {
  const std::int64_t total = color_wins + partition_wins;
  if (total == 0) return 0;
  return static_cast<int>(1000 * color_wins / total);
}

RunRecord make_record(std::string instance, int k, BoundKind bound, const SolveReport& report) {
  RunRecord r;
  r.instance = std::move(instance);
  r.k = k;
  r.bound = bound;
  r.status = report.optimal ? RunStatus::kOptimal : RunStatus::kTimeout;
  r.size = report.size;
  r.nodes = report.nodes;
  r.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count();
  r.color_wins = report.color_wins;
  r.partition_wins = report.partition_wins;
  r.percent_color = percent_color_permille(report.color_wins, report.partition_wins);
  return r;
}

std::string_view csv_header() {
  return "instance,k,bound,status,size,nodes,time_ms,color_wins,partition_wins,percent_color";
}

std::string to_csv_row(const RunRecord& r) {
  std::string name = r.instance;
  std::replace_if(
      name.begin(), name.end(), [](char c) { return c == ',' || c == '"' || c == '\n' || c == '\r'; }, '_');
  std::ostringstream row;
  row << name << ',' << r.k << ',' << to_string(r.bound) << ',' << to_string(r.status) << ',' << r.size << ','
      << r.nodes << ',' << r.time_ms << ',' << r.color_wins << ',' << r.partition_wins << ',' << r.percent_color;
  return row.str();
}

void append_csv(const fs::path& path, const std::vector<RunRecord>& rows) {
  std::error_code ec;
  const bool fresh = !fs::exists(path, ec) || fs::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  if (fresh) out << csv_header() << '\n';
  for (const auto& r : rows) out << to_csv_row(r) << '\n';
}

namespace {

struct CommonFlags {
  int k = 2;
  std::string bound = "relaxpub";
  double cutoff = kDefaultCutoff.count();
  std::string format = "auto";
  std::string csv;
};

InputFormat format_from(const std::string& name) {
  if (name == "dimacs") return InputFormat::kDimacs;
  if (name == "edgelist") return InputFormat::kEdgeList;
  return InputFormat::kAuto;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_k(int k) {
  if (k < 1) throw UsageError("k must be ≥ 1");
}

BoundKind require_bound(const std::string& name) {
  auto kind = parse_bound_kind(name);
  if (!kind) throw UsageError("unknown bound '" + name + "' (gcb|norules|relaxgcb|disepub|gcbpub|relaxpub)");
  return *kind;
}

std::string format_vertices(const Graph& g, const std::vector<Vertex>& verts) {
  std::ostringstream s;
  for (std::size_t i = 0; i < verts.size(); ++i) s << (i ? " " : "") << g.label(verts[i]);
  return s.str();
}

int cmd_solve(const std::string& path, const CommonFlags& flags, std::ostream& out) {
  require_k(flags.k);
  const BoundKind bound = require_bound(flags.bound);
  const Graph g = load_graph(path, format_from(flags.format));
  const SolveReport report = solve(g, flags.k, bound, Seconds(flags.cutoff));
  const RunRecord record = make_record(fs::path(path).filename().string(), flags.k, bound, report);

  out << "instance       " << record.instance << " (n=" << g.n() << ", m=" << g.m() << ")\n"
      << "k              " << flags.k << '\n'
      << "bound          " << to_string(bound) << '\n'
      << "status         " << to_string(record.status) << '\n'
      << "size           " << report.size << '\n'
      << "kplex          " << format_vertices(g, report.best) << '\n'
      << "heuristic lb   " << report.heuristic_size << '\n'
      << "nodes          " << report.nodes << '\n'
      << "bound calls    " << report.bound_calls << '\n'
      << "time ms        " << record.time_ms << '\n'
      << "seesaw         color " << report.color_wins << " / partition " << report.partition_wins << " ("
      << record.percent_color << " permille color)\n";
  if (!flags.csv.empty()) append_csv(flags.csv, {record});
  return 0;
}

int cmd_oracle(const std::string& path, const CommonFlags& flags, std::ostream& out) {
  require_k(flags.k);
  const Graph g = load_graph(path, format_from(flags.format));
  if (g.n() > oracle::kMaxGraphSize)
    throw UsageError("instance has " + std::to_string(g.n()) + " vertices; the oracle is limited to " +
                     std::to_string(oracle::kMaxGraphSize));
  const auto result = oracle::max_kplex_bruteforce(g, flags.k);
  out << "size " << result.size << '\n' << "witness " << format_vertices(g, result.witness) << '\n';
  return 0;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + item + "' in list");
    }
  }
  return values;
}

std::vector<std::string> parse_name_list(const std::string& text) {
  std::vector<std::string> names;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) names.push_back(item);
  return names;
}

struct BenchFlags {
  std::string k_list = "2";
  std::string bound_list = "relaxpub";
  double cutoff = kDefaultCutoff.count();
  std::string format = "auto";
  std::string csv = "results.csv";
  int jobs = 1;
};

int cmd_bench(const std::string& dir, const BenchFlags& flags, std::ostream& out, std::ostream& err) {
  const auto ks = parse_int_list(flags.k_list);
  if (ks.empty()) throw UsageError("empty --k-list");
  for (int k : ks) require_k(k);
  std::vector<BoundKind> bounds;
  for (const auto& name : parse_name_list(flags.bound_list)) bounds.push_back(require_bound(name));
  if (bounds.empty()) throw UsageError("empty --bound-list");
  if (!fs::is_directory(dir)) throw UsageError("not a directory: " + dir);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  if (files.empty()) err << "warning: no instance files in " << dir << '\n';

  struct Task {
    std::size_t file;
    int k;
    BoundKind bound;
  };
  std::vector<Task> tasks;
  for (std::size_t f = 0; f < files.size(); ++f)
    for (int k : ks)
      for (BoundKind b : bounds) tasks.push_back({f, k, b});

  // graphs are parsed once and shared read-only by every task on that file
  std::vector<std::shared_ptr<const Graph>> graphs(files.size());
  std::vector<std::string> parse_errors(files.size());
  for (std::size_t f = 0; f < files.size(); ++f) {
    try {
      graphs[f] = std::make_shared<const Graph>(load_graph(files[f].string(), format_from(flags.format)));
    } catch (const std::exception& e) {
      parse_errors[f] = e.what();
      err << "error: " << files[f].filename().string() << ": " << e.what() << '\n';
    }
  }

  std::vector<RunRecord> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      const Task& t = tasks[i];
      const std::string name = files[t.file].filename().string();
      if (!graphs[t.file]) {
        rows[i].instance = name;
        rows[i].k = t.k;
        rows[i].bound = t.bound;
        rows[i].status = RunStatus::kError;
        continue;
      }
      rows[i] = make_record(name, t.k, t.bound, solve(*graphs[t.file], t.k, t.bound, Seconds(flags.cutoff)));
    }
  };
  const int jobs = std::max(1, flags.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  append_csv(flags.csv, rows);

  // solved counts per (k, bound)
  std::map<std::pair<int, int>, int> solved;
  for (const auto& r : rows)
    if (r.status == RunStatus::kOptimal) ++solved[{r.k, static_cast<int>(r.bound)}];
  out << "solved instances (of " << files.size() << ")\n" << std::left << std::setw(6) << "k";
  for (BoundKind b : bounds) out << std::setw(10) << to_string(b);
  out << '\n';
  for (int k : ks) {
    out << std::setw(6) << k;
    for (BoundKind b : bounds) out << std::setw(10) << solved[{k, static_cast<int>(b)}];
    out << '\n';
  }
  out << "wrote " << rows.size() << " rows to " << flags.csv << '\n';
  return 0;
}

int cmd_gen(int n, double p, std::uint64_t seed, const std::string& output, std::ostream& out) {
  if (n < 0) throw UsageError("n must be >= 0");
  if (p < 0.0 || p > 1.0) throw UsageError("p must lie in [0, 1]");
  const Graph g = random_graph(n, p, seed);
  if (output.empty()) {
    write_dimacs(g, out);
    return 0;
  }
  std::ofstream file(output);
  if (!file) throw UsageError("cannot write '" + output + "'");
  file << "c G(" << n << ", " << p << ") seed " << seed << '\n';
  write_dimacs(g, file);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact maximum k-plex solver"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"auto", "dimacs", "edgelist"};

  CommonFlags solve_flags;
  std::string solve_path;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("instance", solve_path, "Instance file")->required();
  solve_cmd->add_option("--k", solve_flags.k, "Plex parameter")->capture_default_str();
  solve_cmd->add_option("--bound", solve_flags.bound, "gcb|norules|relaxgcb|disepub|gcbpub|relaxpub")
      ->capture_default_str();
  solve_cmd->add_option("--cutoff", solve_flags.cutoff, "Time limit in seconds")->capture_default_str();
  solve_cmd->add_option("--format", solve_flags.format, "Input format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  solve_cmd->add_option("--csv", solve_flags.csv, "Append a result row to this CSV file");

  BenchFlags bench_flags;
  std::string bench_dir;
  auto* bench_cmd = app.add_subcommand("bench", "Run every instance in a directory");
  bench_cmd->add_option("dir", bench_dir, "Instance directory")->required();
  bench_cmd->add_option("--k-list", bench_flags.k_list, "Comma-separated k values")->capture_default_str();
  bench_cmd->add_option("--bound-list", bench_flags.bound_list, "Comma-separated bound names")
      ->capture_default_str();
  bench_cmd->add_option("--cutoff", bench_flags.cutoff, "Time limit per run in seconds")->capture_default_str();
  bench_cmd->add_option("--format", bench_flags.format, "Input format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  bench_cmd->add_option("--csv", bench_flags.csv, "CSV output (appended)")->capture_default_str();
  bench_cmd->add_option("--jobs", bench_flags.jobs, "Concurrent runs")->capture_default_str();

  CommonFlags oracle_flags;
  std::string oracle_path;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force maximum k-plex of a small instance");
  oracle_cmd->add_option("instance", oracle_path, "Instance file")->required();
  oracle_cmd->add_option("--k", oracle_flags.k, "Plex parameter")->capture_default_str();
  oracle_cmd->add_option("--format", oracle_flags.format, "Input format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();

  int gen_n = 0;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded G(n, p) instance in DIMACS format");
  gen_cmd->add_option("--n", gen_n, "Vertex count")->required();
  gen_cmd->add_option("--p", gen_p, "Edge probability")->capture_default_str();
  gen_cmd->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("-o,--output", gen_out, "Output file (stdout when omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_path, solve_flags, out);
    if (*bench_cmd) return cmd_bench(bench_dir, bench_flags, out, err);
    if (*oracle_cmd) return cmd_oracle(oracle_path, oracle_flags, out);
    if (*gen_cmd) return cmd_gen(gen_n, gen_p, gen_seed, gen_out, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace kplex::cli
