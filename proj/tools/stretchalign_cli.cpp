// Command-line front end: generate test data, corrupt it, compare sequence
// files, run batch experiments and reshape their CSV output for plotting.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stretchalign/generate.hpp"
#include "stretchalign/harness.hpp"
#include "stretchalign/incremental.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace stretchalign;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // experiment assertions failed
constexpr int kExitParse = 2;    // unreadable or malformed input data
constexpr int kExitConfig = 3;   // bad flags or parameters

struct CliError : std::runtime_error {
  CliError(int code, const std::string& what) : std::runtime_error(what), exit_code(code) {}
  int exit_code;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitParse, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError(kExitConfig, "cannot write '" + path.string() + "'");
  out << bytes;
  if (!out) throw CliError(kExitConfig, "short write to '" + path.string() + "'");
}

Sequence load_sequence(const fs::path& path, SequenceFormat format, std::size_t alphabet) {
  try {
    return parse_sequence(read_file(path), format, alphabet);
  } catch (const ParseError& e) {
    throw CliError(kExitParse, path.string() + ": " + e.what());
  }
}

std::size_t batch_threads() {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("STRETCHALIGN_THREADS")) {
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || parsed == 0) {
      throw CliError(kExitConfig, "STRETCHALIGN_THREADS must be a positive integer");
    }
    threads = std::min<std::size_t>(threads, parsed);
  }
  return threads;
}

struct AlignFlags {
  std::string format = "dec";
  std::size_t alphabet = kDefaultAlphabetSize;
  std::string mode = "exact";
  std::string tail = "pad";
  std::string window = "unlimited";

  void attach(CLI::App& cmd) {
    cmd.add_option("--format", format, "Sequence file format: dec, hex, raw4, raw8")
        ->capture_default_str();
    cmd.add_option("--alphabet", alphabet, "Alphabet size")->capture_default_str();
    cmd.add_option("--mode", mode, "Cost comparisons: exact or exponent")
        ->check(CLI::IsMember({"exact", "exponent"}))
        ->capture_default_str();
    cmd.add_option("--tail", tail, "Leftover handling: pad or tail")
        ->check(CLI::IsMember({"pad", "tail"}))
        ->capture_default_str();
    cmd.add_option("--window", window, "Forward-search window: a count or 'unlimited'")
        ->capture_default_str();
  }

  AlignerConfig config() const {
    AlignerConfig cfg;
    cfg.alphabet_size = alphabet;
    cfg.cost_mode = mode == "exact" ? CostMode::exact : CostMode::exponent_only;
    cfg.tail_policy = tail == "pad" ? TailPolicy::pad : TailPolicy::tail;
    if (window == "unlimited") {
      cfg.window = kUnlimitedWindow;
    } else {
      try {
        cfg.window = std::stoull(window);
      } catch (const std::exception&) {
        throw CliError(kExitConfig, "--window expects a count or 'unlimited'");
      }
      if (cfg.window < 1) throw CliError(kExitConfig, "--window must be at least 1");
    }
    return cfg;
  }

  SequenceFormat sequence_format() const { return sequence_format_from_string(format); }
};

double rounded(double value, int places) { return std::stod(format_fixed(value, places)); }

json pair_json(const PairResult& p) {
  json j;
  j["id1"] = p.row.id1;
  j["id2"] = p.row.id2;
  j["len1"] = p.row.len1;
  j["len2"] = p.row.len2;
  j["tail_len"] = p.row.tail_len;
  j["a"] = rounded(p.row.a, 4);
  j["log2_b"] = rounded(p.row.log2_b, 2);
  j["cost_is_zero"] = p.row.cost_is_zero;
  j["quadrant"] = to_string(p.row.quadrant);
  j["runs1"] = p.row.runs1;
  j["runs2"] = p.row.runs2;
  j["longest_run"] = p.row.longest_run;
  j["nu"] = rounded(p.collective.nu, 6);
  j["b_exact"] = {{"num", p.collective.b_num.to_decimal()}, {"den", p.collective.b_den}};
  j["sequence1"] = {{"a", rounded(p.seq1.a, 4)},
                    {"log2_b", rounded(p.seq1.log2_b, 2)},
                    {"cost_is_zero", p.seq1.cost_is_zero}};
  j["sequence2"] = {{"a", rounded(p.seq2.a, 4)},
                    {"log2_b", rounded(p.seq2.log2_b, 2)},
                    {"cost_is_zero", p.seq2.cost_is_zero}};
  return j;
}

std::string run_histogram(const std::vector<GapRun>& runs) {
  std::map<std::size_t, std::size_t> counts;
  for (const GapRun& r : runs) ++counts[r.length];
  if (counts.empty()) return "-";
  std::string out;
  for (const auto& [length, count] : counts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(length) + ":" + std::to_string(count);
  }
  return out;
}

void print_pair_report(const PairResult& p, const AlignmentResult& aligned) {
  std::cout << "pair: " << p.row.id1 << " vs " << p.row.id2 << "\n";
  std::cout << "lengths: L1=" << p.row.len1 << " L2=" << p.row.len2
            << " Lt=" << p.row.tail_len << "\n";
  std::cout << "collective: a=" << format_fixed(p.row.a, 4)
            << " log2_b=" << format_fixed(p.row.log2_b, 2)
            << " cost_zero=" << (p.row.cost_is_zero ? "true" : "false")
            << " quadrant=" << to_string(p.row.quadrant)
            << " nu=" << format_fixed(p.collective.nu, 6) << "\n";
  std::cout << "sequence1: a=" << format_fixed(p.seq1.a, 4)
            << " log2_b=" << format_fixed(p.seq1.log2_b, 2)
            << " cost_zero=" << (p.seq1.cost_is_zero ? "true" : "false") << "\n";
  std::cout << "sequence2: a=" << format_fixed(p.seq2.a, 4)
            << " log2_b=" << format_fixed(p.seq2.log2_b, 2)
            << " cost_zero=" << (p.seq2.cost_is_zero ? "true" : "false") << "\n";
  std::cout << "gap_runs: seq1=" << p.row.runs1 << " seq2=" << p.row.runs2
            << " longest=" << p.row.longest_run << "\n";
  std::cout << "run_histogram_1: " << run_histogram(aligned.runs1) << "\n";
  std::cout << "run_histogram_2: " << run_histogram(aligned.runs2) << "\n";
}

// Splits one CSV line honouring RFC-style quoted fields.
std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"') {
        if (k + 1 < line.size() && line[k + 1] == '"') {
          cur += '"';
          ++k;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

int cmd_generate(const std::string& dist, double mean, double sigma, double lambda,
                 std::int64_t lo, std::int64_t hi, std::size_t len, std::uint64_t seed,
                 std::size_t alphabet, const std::string& format, const std::string& out) {
  DistributionSpec spec;
  if (dist == "gauss") {
    spec = DistributionSpec::gauss(mean, sigma, len, seed);
  } else if (dist == "uniform") {
    spec = DistributionSpec::uniform(lo, hi, len, seed);
  } else if (dist == "rayleigh") {
    spec = DistributionSpec::rayleigh(sigma, len, seed);
  } else if (dist == "poisson") {
    spec = DistributionSpec::poisson(lambda, len, seed);
  } else {
    throw CliError(kExitConfig, "--dist must be gauss, uniform, rayleigh or poisson");
  }
  const Sequence sequence = generate(spec, alphabet);
  const std::string bytes = write_sequence(sequence, sequence_format_from_string(format));
  if (out.empty()) {
    std::cout << bytes;
  } else {
    write_file(out, bytes);
  }
  return kExitOk;
}

int cmd_corrupt(const std::string& in, const std::string& out, unsigned value,
                std::size_t count, const std::string& position, std::size_t truncate_to,
                std::size_t alphabet, const std::string& format) {
  const SequenceFormat fmt = sequence_format_from_string(format);
  const Sequence host = load_sequence(in, fmt, alphabet);
  InsertionSpec spec;
  spec.value = static_cast<Symbol>(value);
  spec.count = count;
  if (position == "front") {
    spec.position = 0;
  } else {
    try {
      spec.position = std::stoull(position);
    } catch (const std::exception&) {
      throw CliError(kExitConfig, "--position expects an index or 'front'");
    }
  }
  spec.truncate_to = truncate_to == 0 ? host.size() : truncate_to;
  if (spec.value >= alphabet) {
    throw CliError(kExitConfig, "--value must fit the alphabet");
  }
  const Sequence result = corrupt(host, spec);
  write_file(out, write_sequence(result, fmt));
  return kExitOk;
}

int cmd_compare(const std::string& file_a, const std::string& file_b,
                const AlignFlags& flags, const std::string& emit_alignment, bool as_json,
                bool as_csv) {
  const AlignerConfig cfg = flags.config();
  const SequenceFormat fmt = flags.sequence_format();
  const Sequence a = load_sequence(file_a, fmt, cfg.alphabet_size);
  const Sequence b = load_sequence(file_b, fmt, cfg.alphabet_size);

  const std::string id1 = fs::path(file_a).filename().string();
  const std::string id2 = fs::path(file_b).filename().string();
  const AlignmentResult aligned = align(a, b, cfg);
  PairResult pair;
  pair.collective = collective_metrics(aligned);
  pair.seq1 = per_sequence_metrics(aligned, 1);
  pair.seq2 = per_sequence_metrics(aligned, 2);
  pair.row = make_result_row(id1, id2, aligned, pair.collective);

  if (!emit_alignment.empty()) {
    write_file(emit_alignment, write_alignment(aligned));
  }
  if (as_json) {
    std::cout << pair_json(pair).dump(2) << "\n";
  } else if (as_csv) {
    std::cout << write_csv({pair.row});
  } else {
    print_pair_report(pair, aligned);
  }
  return kExitOk;
}

int cmd_batch(const std::string& dir, const std::string& out, const AlignFlags& flags) {
  const AlignerConfig cfg = flags.config();
  const SequenceFormat fmt = flags.sequence_format();
  if (!fs::is_directory(dir)) {
    throw CliError(kExitConfig, "'" + dir + "' is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  if (files.empty()) throw CliError(kExitConfig, "no input files in '" + dir + "'");

  std::vector<std::pair<std::string, Sequence>> inputs;
  inputs.reserve(files.size());
  for (const fs::path& path : files) {
    inputs.emplace_back(path.filename().string(), load_sequence(path, fmt, cfg.alphabet_size));
  }

  const std::vector<PairResult> results = run_all_pairs(inputs, cfg, batch_threads());
  std::vector<ResultRow> rows;
  rows.reserve(results.size());
  for (const PairResult& r : results) rows.push_back(r.row);
  write_file(out, write_csv(std::move(rows)));
  std::cout << "wrote " << results.size() << " rows to " << out << "\n";
  return kExitOk;
}

int cmd_table1(std::uint64_t seed) {
  const std::vector<Table1Row> rows = table1_experiment(seed);
  bool all_pass = true;
  std::cout << "ins      a        expect_a  log2_b      expect_log2b  result\n";
  for (const Table1Row& row : rows) {
    all_pass = all_pass && row.pass;
    char line[160];
    if (row.expect_zero_cost) {
      std::snprintf(line, sizeof line, "%-8zu %-8s %-9s %-11s %-13s %s", row.insertions,
                    format_fixed(row.pair.collective.a, 4).c_str(), "1.0000", "zero-cost",
                    "zero-cost", row.pass ? "PASS" : "FAIL");
    } else {
      std::snprintf(line, sizeof line, "%-8zu %-8s %-9s %-11s %-13s %s", row.insertions,
                    format_fixed(row.pair.collective.a, 4).c_str(),
                    format_fixed(row.expected_a, 4).c_str(),
                    format_fixed(row.pair.collective.log2_b, 2).c_str(),
                    format_fixed(row.expected_log2_b, 2).c_str(),
                    row.pass ? "PASS" : "FAIL");
    }
    std::cout << line << "\n";
  }
  return all_pass ? kExitOk : kExitFailure;
}

int cmd_plot_data(const std::string& in, const std::string& out) {
  std::ifstream csv(in);
  if (!csv) throw CliError(kExitParse, "cannot open '" + in + "'");
  std::string line;
  if (!std::getline(csv, line)) throw CliError(kExitParse, "'" + in + "' is empty");
  const std::vector<std::string> header = split_csv_line(line);
  std::size_t col_a = header.size();
  std::size_t col_b = header.size();
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (header[k] == "a") col_a = k;
    if (header[k] == "log2_b") col_b = k;
  }
  if (col_a == header.size() || col_b == header.size()) {
    throw CliError(kExitParse, "'" + in + "' lacks the a/log2_b columns");
  }
  std::string data;
  std::size_t row_index = 1;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() <= std::max(col_a, col_b)) {
      throw CliError(kExitParse, "'" + in + "': short row " + std::to_string(row_index));
    }
    data += fields[col_a] + " " + fields[col_b] + "\n";
    ++row_index;
  }
  write_file(out, data);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutual sequence alignment with exponential gap cost: stretch ratio and "
               "stretch cost metrics for random-sequence similarity assessment"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a pseudorandom sequence file");
  std::string gen_dist = "gauss";
  double gen_mean = 0.0, gen_sigma = 1.0, gen_lambda = 2.0;
  std::int64_t gen_lo = 0, gen_hi = 15;
  std::size_t gen_len = 5000, gen_alphabet = kDefaultAlphabetSize;
  std::uint64_t gen_seed = 0;
  std::string gen_format = "dec", gen_out;
  gen->add_option("--dist", gen_dist, "gauss, uniform, rayleigh or poisson")->required();
  gen->add_option("--mean", gen_mean, "Gauss mean");
  gen->add_option("--sigma", gen_sigma, "Gauss / Rayleigh sigma");
  gen->add_option("--lambda", gen_lambda, "Poisson lambda");
  gen->add_option("--lo", gen_lo, "Uniform lower bound (inclusive)");
  gen->add_option("--hi", gen_hi, "Uniform upper bound (inclusive)");
  gen->add_option("--len", gen_len, "Sequence length")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();
  gen->add_option("--alphabet", gen_alphabet, "Alphabet size")->capture_default_str();
  gen->add_option("--format", gen_format, "Output format")->capture_default_str();
  gen->add_option("--out", gen_out, "Output path (stdout when omitted)");

  // corrupt
  auto* cor = app.add_subcommand("corrupt", "Insert a block of symbols and truncate");
  std::string cor_in, cor_out, cor_position = "front", cor_format = "dec";
  unsigned cor_value = 7;
  std::size_t cor_count = 0, cor_truncate = 0, cor_alphabet = kDefaultAlphabetSize;
  cor->add_option("--in", cor_in, "Host sequence file")->required();
  cor->add_option("--out", cor_out, "Output path")->required();
  cor->add_option("--value", cor_value, "Symbol to insert")->capture_default_str();
  cor->add_option("--count", cor_count, "Number of copies")->required();
  cor->add_option("--position", cor_position, "Insertion index or 'front'")
      ->capture_default_str();
  cor->add_option("--truncate-to", cor_truncate,
                  "Final length (defaults to the host length)");
  cor->add_option("--alphabet", cor_alphabet, "Alphabet size")->capture_default_str();
  cor->add_option("--format", cor_format, "Sequence file format")->capture_default_str();

  // compare
  auto* cmp = app.add_subcommand("compare", "Align two sequence files and report metrics");
  std::string cmp_a, cmp_b, cmp_emit;
  bool cmp_json = false, cmp_csv = false;
  AlignFlags cmp_flags;
  cmp->add_option("fileA", cmp_a, "First sequence file")->required();
  cmp->add_option("fileB", cmp_b, "Second sequence file")->required();
  cmp_flags.attach(*cmp);
  cmp->add_option("--emit-alignment", cmp_emit, "Write the stretched sequences here");
  cmp->add_flag("--json", cmp_json, "Report as JSON");
  cmp->add_flag("--csv", cmp_csv, "Report as a one-row CSV");

  // batch
  auto* bat = app.add_subcommand("batch", "All-pairs comparison over a directory");
  std::string bat_dir, bat_out;
  AlignFlags bat_flags;
  bat->add_option("--dir", bat_dir, "Directory of sequence files")->required();
  bat->add_option("--out", bat_out, "CSV output path")->required();
  bat_flags.attach(*bat);

  // table1
  auto* tab = app.add_subcommand("table1", "Run the insertion experiment and check it");
  std::uint64_t tab_seed = 1;
  tab->add_option("--seed", tab_seed, "Host generator seed")->capture_default_str();

  // plot-data
  auto* plot = app.add_subcommand("plot-data", "Reduce a batch CSV to (a, log2_b) pairs");
  std::string plot_in, plot_out;
  plot->add_option("--in", plot_in, "Batch CSV")->required();
  plot->add_option("--out", plot_out, "Two-column scatter output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (gen->parsed()) {
      return cmd_generate(gen_dist, gen_mean, gen_sigma, gen_lambda, gen_lo, gen_hi,
                          gen_len, gen_seed, gen_alphabet, gen_format, gen_out);
    }
    if (cor->parsed()) {
      return cmd_corrupt(cor_in, cor_out, cor_value, cor_count, cor_position, cor_truncate,
                         cor_alphabet, cor_format);
    }
    if (cmp->parsed()) {
      if (cmp_json && cmp_csv) throw CliError(kExitConfig, "--json and --csv are exclusive");
      return cmd_compare(cmp_a, cmp_b, cmp_flags, cmp_emit, cmp_json, cmp_csv);
    }
    if (bat->parsed()) return cmd_batch(bat_dir, bat_out, bat_flags);
    if (tab->parsed()) return cmd_table1(tab_seed);
    if (plot->parsed()) return cmd_plot_data(plot_in, plot_out);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
