// Command-line front end: distances and witness transformations, isometric-
// word checks, cube construction/export, integer sequences, and the summary
// table with golden verification.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tildecube/tildecube.hpp"

namespace tc = tildecube;
using nlohmann::ordered_json;

namespace {

// Bad command-line input (exit 2), as opposed to a domain/resource error
// (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

tc::BinaryWord parse_word(const std::string& literal, const char* what) {
  try {
    return tc::BinaryWord::from_string(literal);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

tc::Metric parse_metric(const std::string& name) {
  if (name == "ham") return tc::Metric::Hamming;
  if (name == "tilde") return tc::Metric::Tilde;
  throw UsageError("metric must be 'ham' or 'tilde'");
}

// ---- dist ----------------------------------------------------------------

void run_dist(const std::string& u_lit, const std::string& v_lit, const std::string& metric_name,
              bool explain) {
  const tc::BinaryWord u = parse_word(u_lit, "dist");
  const tc::BinaryWord v = parse_word(v_lit, "dist");
  if (u.length() != v.length()) throw UsageError("dist: words must have equal length");
  const tc::Metric metric = parse_metric(metric_name);
  std::cout << tc::metric_distance(metric, u, v) << '\n';
  if (!explain) return;
  tc::Transformation t;
  if (metric == tc::Metric::Tilde) {
    t = tc::first_minimal_transformation(u, v);
  } else {
    t.start = u;
    for (int i = 1; i <= u.length(); ++i)
      if (u[i] != v[i]) t.ops.push_back(tc::EditOp{tc::EditKind::Replace, i});
  }
  std::cout << t.arrow_chain() << '\n';
}

// ---- check / classify ----------------------------------------------------

void guard_pair_budget(const tc::BinaryWord& f, int max_n, std::uint64_t max_pairs) {
  const std::uint64_t n_words = tc::count_f_free(max_n, f);
  if (n_words > 100'000'000ull || n_words * (n_words - 1) / 2 > max_pairs)
    throw DomainError("check would examine more than " + std::to_string(max_pairs) +
                      " word pairs at n=" + std::to_string(max_n) +
                      "; raise --max-pairs to allow it");
}

std::string verdict_text(const tc::IsometryVerdict& verdict) {
  if (verdict.isometric()) return "isometric-up-to n=" + std::to_string(verdict.checked_max_n);
  const tc::IsometryWitness& w = *verdict.witness;
  const std::string d_sub =
      w.subgraph_distance ? std::to_string(*w.subgraph_distance) : std::string("unreachable");
  return "non-isometric n=" + std::to_string(verdict.checked_max_n) + "  witness=" + w.u.str() +
         "," + w.v.str() + "  d_sub=" + d_sub + "  d_ambient=" + std::to_string(w.ambient_distance);
}

ordered_json verdict_json(const tc::BinaryWord& word, const char* metric,
                          const tc::IsometryVerdict& verdict) {
  ordered_json j;
  j["word"] = word.str();
  j["metric"] = metric;
  j["status"] = verdict.isometric() ? "isometric" : "non-isometric";
  j["checked_max_n"] = verdict.checked_max_n;
  if (verdict.witness) {
    const tc::IsometryWitness& w = *verdict.witness;
    ordered_json jw;
    jw["u"] = w.u.str();
    jw["v"] = w.v.str();
    if (w.subgraph_distance)
      jw["d_sub"] = *w.subgraph_distance;
    else
      jw["d_sub"] = nullptr;
    jw["d_ambient"] = w.ambient_distance;
    j["witness"] = jw;
  }
  return j;
}

void run_check(const std::string& f_lit, int max_n, const std::string& metric_name,
               const std::string& format, std::uint64_t max_pairs) {
  const tc::BinaryWord f = parse_word(f_lit, "check");
  if (f.empty()) throw UsageError("check: word must be non-empty");
  if (max_n == 0) max_n = f.length() + 4;
  if (max_n < f.length()) throw UsageError("check: --max-n must be at least |f|");
  guard_pair_budget(f, max_n, max_pairs);

  const bool want_tilde = metric_name == "tilde" || metric_name == "both";
  const bool want_ham = metric_name == "ham" || metric_name == "both";
  if (!want_tilde && !want_ham) throw UsageError("metric must be 'ham', 'tilde' or 'both'");

  std::vector<std::pair<const char*, tc::IsometryVerdict>> results;
  if (want_tilde) results.emplace_back("tilde", tc::check_tilde_isometric(f, max_n));
  if (want_ham) results.emplace_back("ham", tc::check_ham_isometric(f, max_n));

  if (format == "json") {
    if (results.size() == 1) {
      std::cout << verdict_json(f, results[0].first, results[0].second).dump(2) << '\n';
    } else {
      ordered_json arr = ordered_json::array();
      for (const auto& [name, verdict] : results) arr.push_back(verdict_json(f, name, verdict));
      std::cout << arr.dump(2) << '\n';
    }
  } else {
    for (const auto& [name, verdict] : results)
      std::cout << f.str() << "  " << name << "  " << verdict_text(verdict) << '\n';
  }
}

void run_classify(int length, int max_n, const std::string& format, std::uint64_t max_pairs) {
  if (length < 2 || length > 5) throw UsageError("classify: --length must be in 2..5");
  if (max_n == 0) max_n = length + 4;
  if (max_n < length) throw UsageError("classify: --max-n must be at least the length");
  guard_pair_budget(tc::BinaryWord::from_bits(0, length), max_n, max_pairs);
  const auto table = tc::classify_all_words(length, max_n);
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& row : table) {
      ordered_json j;
      j["word"] = row.word.str();
      j["tilde"] = verdict_json(row.word, "tilde", row.tilde);
      j["ham"] = verdict_json(row.word, "ham", row.ham);
      j["tilde"].erase("word");
      j["tilde"].erase("metric");
      j["ham"].erase("word");
      j["ham"].erase("metric");
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << '\n';
  } else {
    for (const auto& row : table) {
      std::cout << row.word.str() << "  tilde: " << verdict_text(row.tilde)
                << "  |  ham: " << verdict_text(row.ham) << '\n';
    }
  }
}

// ---- build / diameter ----------------------------------------------------

tc::CubeGraph build_checked(int n, const std::string& metric_name,
                            const std::string& avoid_lit, int ceiling_override) {
  if (n < 1) throw UsageError("order must be >= 1");
  const tc::Metric metric = parse_metric(metric_name);
  std::optional<tc::BinaryWord> avoided;
  if (!avoid_lit.empty()) {
    avoided = parse_word(avoid_lit, "--avoid");
    if (avoided->empty()) throw UsageError("--avoid: word must be non-empty");
  }
  const int ceiling = ceiling_override > 0 ? ceiling_override : (avoided ? 20 : 16);
  if (n > ceiling)
    throw DomainError("order " + std::to_string(n) + " exceeds the ceiling of " +
                      std::to_string(ceiling) + " for " +
                      (avoided ? "avoiding cubes" : "full cubes") +
                      "; raise it with --max-n");
  return tc::build(n, metric, avoided);
}

void run_build(int n, const std::string& metric_name, const std::string& avoid_lit,
               const std::string& format, const std::string& out_path, int ceiling_override) {
  const tc::CubeGraph g = build_checked(n, metric_name, avoid_lit, ceiling_override);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw DomainError("cannot open output file: " + out_path);
    os = &file;
  }
  if (format == "dot")
    tc::write_dot(g, *os);
  else
    tc::write_edge_list(g, *os);
}

void run_diameter(int n, const std::string& metric_name, const std::string& avoid_lit,
                  int ceiling_override) {
  const tc::CubeGraph g = build_checked(n, metric_name, avoid_lit, ceiling_override);
  std::cout << tc::diameter(g) << '\n';
}

// ---- seq -------------------------------------------------------------------

void run_seq(const std::string& name, int n_max) {
  if (n_max < 1) throw UsageError("seq: n_max must be >= 1");
  tc::BigInt (*fn)(int) = nullptr;
  if (name == "fib") fn = tc::fibonacci;
  else if (name == "Vfib") fn = tc::fibonacci_cube_vertices;
  else if (name == "EQ") fn = tc::edges_hypercube;
  else if (name == "EQtilde") fn = tc::edges_tilde_hypercube;
  else if (name == "EF") fn = tc::edges_fibonacci;
  else if (name == "EFtilde") fn = tc::edges_tilde_fibonacci;
  else throw UsageError("seq: unknown sequence '" + name +
                        "' (expected fib, Vfib, EQ, EQtilde, EF or EFtilde)");
  for (int n = 1; n <= n_max; ++n) std::cout << n << ' ' << fn(n).str() << '\n';
}

// ---- table1 ----------------------------------------------------------------

const std::vector<std::pair<std::string, std::vector<std::string>>> table1_rows(
    const std::vector<tc::Table1Column>& cols) {
  auto ratio = [](const tc::Real& r) { return tc::round_to_decimals(r, 3); };
  std::vector<std::pair<std::string, std::vector<std::string>>> rows(10);
  rows[0].first = "n";
  rows[1].first = "|V(Q_n)|";
  rows[2].first = "|E(Q_n)|";
  rows[3].first = "|E(Q~_n)|";
  rows[4].first = "|V(Q~_n(11100))|";
  rows[5].first = "|E(Q~_n(11100))|";
  rows[6].first = "R_~(11100)";
  rows[7].first = "|V(Q_n(1010))|";
  rows[8].first = "|E(Q_n(1010))|";
  rows[9].first = "R_H(1010)";
  for (const auto& c : cols) {
    rows[0].second.push_back(std::to_string(c.n));
    rows[1].second.push_back(c.hypercube_vertices.str());
    rows[2].second.push_back(c.hypercube_edges.str());
    rows[3].second.push_back(c.tilde_hypercube_edges.str());
    rows[4].second.push_back(c.tilde_avoiding_vertices.str());
    rows[5].second.push_back(c.tilde_avoiding_edges.str());
    rows[6].second.push_back(ratio(c.tilde_ratio));
    rows[7].second.push_back(c.ham_avoiding_vertices.str());
    rows[8].second.push_back(c.ham_avoiding_edges.str());
    rows[9].second.push_back(ratio(c.ham_ratio));
  }
  return rows;
}

void run_table1(int n_from, int n_to, const std::string& format, bool verify) {
  if (n_from < 4 || n_to < n_from) throw UsageError("table1: need 4 <= n_from <= n_to");
  if (verify && n_to > 16)
    throw UsageError("table1: --verify only covers n = 4..16");
  const auto cols = tc::table1(n_from, n_to);
  if (verify) {
    const auto mismatches = tc::verify_table1(cols);
    if (mismatches.empty()) {
      std::cout << "all " << tc::table1_cell_count(cols) << " cells match\n";
      return;
    }
    for (const auto& m : mismatches)
      std::cout << "MISMATCH " << m.row << " at n=" << m.n << ": expected " << m.expected
                << ", got " << m.actual << '\n';
    throw DomainError(std::to_string(mismatches.size()) + " cell(s) differ from the reference");
  }
  const auto rows = table1_rows(cols);
  if (format == "csv") {
    for (const auto& [label, cells] : rows) {
      std::cout << label;
      for (const auto& cell : cells) std::cout << ',' << cell;
      std::cout << '\n';
    }
  } else {
    std::size_t label_w = 0;
    for (const auto& [label, cells] : rows) label_w = std::max(label_w, label.size());
    std::vector<std::size_t> col_w(cols.size(), 0);
    for (const auto& [label, cells] : rows)
      for (std::size_t i = 0; i < cells.size(); ++i) col_w[i] = std::max(col_w[i], cells[i].size());
    for (const auto& [label, cells] : rows) {
      std::cout << std::left << std::setw(static_cast<int>(label_w)) << label << std::right;
      for (std::size_t i = 0; i < cells.size(); ++i)
        std::cout << "  " << std::setw(static_cast<int>(col_w[i])) << cells[i];
      std::cout << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swap-and-mismatch (tilde) distance, tilde-hypercubes and isometric words"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "worker threads for pair checks (0 = auto)")
      ->envname("TILDECUBE_THREADS");

  // dist
  auto* dist = app.add_subcommand("dist", "distance between two words");
  std::string dist_u, dist_v, dist_metric = "tilde";
  bool dist_explain = false;
  dist->add_option("u", dist_u, "first word")->required();
  dist->add_option("v", dist_v, "second word")->required();
  dist->add_option("--metric", dist_metric, "ham or tilde")->default_val("tilde");
  dist->add_flag("--explain", dist_explain, "also print one minimal transformation");

  // check
  auto* check = app.add_subcommand("check", "bounded isometricity check for a word");
  std::string check_f, check_metric = "both", check_format = "text";
  int check_max_n = 0;
  std::uint64_t check_max_pairs = 200'000'000ull;
  check->add_option("f", check_f, "word to check")->required();
  check->add_option("--max-n", check_max_n, "largest length searched (default |f|+4)");
  check->add_option("--metric", check_metric, "ham, tilde or both")->default_val("both");
  check->add_option("--format", check_format, "text or json")->default_val("text");
  check->add_option("--max-pairs", check_max_pairs, "refuse checks beyond this many word pairs");

  // classify
  auto* classify = app.add_subcommand("classify", "verdicts for every word of a length");
  int classify_length = 0, classify_max_n = 0;
  std::string classify_format = "text";
  std::uint64_t classify_max_pairs = 200'000'000ull;
  classify->add_option("--length", classify_length, "word length (2..5)")->required();
  classify->add_option("--max-n", classify_max_n, "largest length searched (default length+4)");
  classify->add_option("--format", classify_format, "text or json")->default_val("text");
  classify->add_option("--max-pairs", classify_max_pairs,
                       "refuse checks beyond this many word pairs");

  // build
  auto* build_cmd = app.add_subcommand("build", "construct a cube and export it");
  int build_n = 0, build_ceiling = 0;
  std::string build_metric = "tilde", build_avoid, build_format = "edges", build_out;
  build_cmd->add_option("n", build_n, "order")->required();
  build_cmd->add_option("--metric", build_metric, "ham or tilde")->default_val("tilde");
  build_cmd->add_option("--avoid", build_avoid, "keep only words avoiding this factor");
  build_cmd->add_option("--format", build_format, "edges or dot")->default_val("edges");
  build_cmd->add_option("-o,--output", build_out, "write to file instead of stdout");
  build_cmd->add_option("--max-n", build_ceiling,
                        "raise the order ceiling (defaults: 16 full, 20 avoiding)");

  // diameter
  auto* diam = app.add_subcommand("diameter", "diameter of a cube");
  int diam_n = 0, diam_ceiling = 0;
  std::string diam_metric = "tilde", diam_avoid;
  diam->add_option("n", diam_n, "order")->required();
  diam->add_option("--metric", diam_metric, "ham or tilde")->default_val("tilde");
  diam->add_option("--avoid", diam_avoid, "keep only words avoiding this factor");
  diam->add_option("--max-n", diam_ceiling, "raise the order ceiling");

  // seq
  auto* seq = app.add_subcommand("seq", "exact integer sequences");
  std::string seq_name;
  int seq_n_max = 0;
  seq->add_option("name", seq_name, "fib, Vfib, EQ, EQtilde, EF or EFtilde")->required();
  seq->add_option("n_max", seq_n_max, "last index")->required();

  // table1
  auto* table = app.add_subcommand("table1", "summary table of cube sizes and ratios");
  int table_from = 4, table_to = 16;
  std::string table_format = "text";
  bool table_verify = false;
  table->add_option("n_from", table_from, "first order (default 4)");
  table->add_option("n_to", table_to, "last order (default 16)");
  table->add_option("--format", table_format, "text or csv")->default_val("text");
  table->add_flag("--verify", table_verify, "compare against the golden reference values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (threads > 0) tc::set_worker_count(threads);

  try {
    if (app.got_subcommand(dist)) run_dist(dist_u, dist_v, dist_metric, dist_explain);
    else if (app.got_subcommand(check))
      run_check(check_f, check_max_n, check_metric, check_format, check_max_pairs);
    else if (app.got_subcommand(classify))
      run_classify(classify_length, classify_max_n, classify_format, classify_max_pairs);
    else if (app.got_subcommand(build_cmd))
      run_build(build_n, build_metric, build_avoid, build_format, build_out, build_ceiling);
    else if (app.got_subcommand(diam)) run_diameter(diam_n, diam_metric, diam_avoid, diam_ceiling);
    else if (app.got_subcommand(seq)) run_seq(seq_name, seq_n_max);
    else if (app.got_subcommand(table)) run_table1(table_from, table_to, table_format, table_verify);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
