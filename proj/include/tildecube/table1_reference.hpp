#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tildecube/counting.hpp"

namespace tildecube {

/// A published ratio cell: its decimal text and the number of printed
/// decimals (the reference table mixes 0, 2 and 3). Computed ratios are
/// rounded half-up to exactly that many decimals before comparison.
struct ReferenceRatioCell {
  const char* text;
  int decimals;
};

/// Golden column of reference values for order n. Integer cells are exact
/// counts; ratio cells carry their printed precision.
struct Table1ReferenceColumn {
  int n;
  std::uint64_t hypercube_vertices;
  std::uint64_t hypercube_edges;
  std::uint64_t tilde_hypercube_edges;
  std::uint64_t tilde_avoiding_vertices;  // Q~_n(11100)
  std::uint64_t tilde_avoiding_edges;
  ReferenceRatioCell tilde_ratio;
  std::uint64_t ham_avoiding_vertices;    // Q_n(1010)
  std::uint64_t ham_avoiding_edges;
  ReferenceRatioCell ham_ratio;
};

/// Reference columns for n = 4..16; every `table1 --verify` cell comes from
/// here. Layout per column:
///   { n, |V(Q_n)|, |E(Q_n)|, |E(Q~_n)|,
///     |V(Q~_n(11100))|, |E(Q~_n(11100))|, R_~(11100),
///     |V(Q_n(1010))|, |E(Q_n(1010))|, R_H(1010) }
inline const std::array<Table1ReferenceColumn, 13>& table1_reference() {
  static const std::array<Table1ReferenceColumn, 13> columns = {{
      {4, 16, 32, 44, 16, 44, {"1", 0}, 15, 28, {"0.96", 2}},
      {5, 32, 80, 112, 31, 106, {"0.99", 2}, 28, 62, {"0.92", 2}},
      {6, 64, 192, 272, 60, 245, {"0.98", 2}, 53, 138, {"0.91", 2}},
      {7, 128, 448, 640, 116, 550, {"0.97", 2}, 100, 299, {"0.90", 2}},
      {8, 256, 1024, 1472, 224, 1208, {"0.96", 2}, 188, 632, {"0.89", 2}},
      {9, 512, 2304, 3328, 432, 2609, {"0.96", 2}, 354, 1323, {"0.88", 2}},
      {10, 1024, 5120, 7424, 833, 5569, {"0.95", 2}, 667, 2746, {"0.88", 2}},
      {11, 2048, 11264, 16384, 1606, 11773, {"0.95", 2}, 1256, 5645, {"0.87", 2}},
      {12, 4096, 24576, 35840, 3096, 24691, {"0.944", 3}, 2365, 11520, {"0.869", 3}},
      {13, 8192, 53248, 77824, 5968, 51440, {"0.941", 3}, 4454, 23377, {"0.866", 3}},
      {14, 16384, 114688, 167936, 11504, 106566, {"0.939", 3}, 8388, 47192, {"0.863", 3}},
      {15, 32768, 245760, 360448, 22175, 219696, {"0.937", 3}, 15796, 94830, {"0.861", 3}},
      {16, 65536, 524288, 770048, 42744, 451005, {"0.935", 3}, 29747, 189808, {"0.859", 3}},
  }};
  return columns;
}

struct CellMismatch {
  std::string row;
  int n;
  std::string expected;
  std::string actual;
};

namespace detail {

inline void check_int_cell(std::vector<CellMismatch>& out, const char* row, int n,
                           std::uint64_t expected, const BigInt& actual) {
  if (actual != expected)
    out.push_back(CellMismatch{row, n, std::to_string(expected), actual.str()});
}

inline void check_ratio_cell(std::vector<CellMismatch>& out, const char* row, int n,
                             const ReferenceRatioCell& expected, const Real& actual) {
  const std::string rounded = round_to_decimals(actual, expected.decimals);
  if (rounded != expected.text)
    out.push_back(CellMismatch{row, n, expected.text, rounded});
}

}  // namespace detail

/// Number of golden cells covered by the given columns (ten rows per column,
/// counting the order row itself).
inline int table1_cell_count(const std::vector<Table1Column>& columns) {
  return 10 * static_cast<int>(columns.size());
}

/// Compares computed columns against the golden values. Columns outside the
/// reference range 4..16 are rejected. Returns every mismatching cell.
inline std::vector<CellMismatch> verify_table1(const std::vector<Table1Column>& columns) {
  std::vector<CellMismatch> mismatches;
  for (const Table1Column& col : columns) {
    if (col.n < 4 || col.n > 16) {
      mismatches.push_back(CellMismatch{"n", col.n, "4..16", std::to_string(col.n)});
      continue;
    }
    const Table1ReferenceColumn& ref = table1_reference()[static_cast<std::size_t>(col.n - 4)];
    detail::check_int_cell(mismatches, "|V(Q_n)|", col.n, ref.hypercube_vertices,
                           col.hypercube_vertices);
    detail::check_int_cell(mismatches, "|E(Q_n)|", col.n, ref.hypercube_edges,
                           col.hypercube_edges);
    detail::check_int_cell(mismatches, "|E(Q~_n)|", col.n, ref.tilde_hypercube_edges,
                           col.tilde_hypercube_edges);
    detail::check_int_cell(mismatches, "|V(Q~_n(11100))|", col.n, ref.tilde_avoiding_vertices,
                           col.tilde_avoiding_vertices);
    detail::check_int_cell(mismatches, "|E(Q~_n(11100))|", col.n, ref.tilde_avoiding_edges,
                           col.tilde_avoiding_edges);
    detail::check_ratio_cell(mismatches, "R_~(11100)", col.n, ref.tilde_ratio, col.tilde_ratio);
    detail::check_int_cell(mismatches, "|V(Q_n(1010))|", col.n, ref.ham_avoiding_vertices,
                           col.ham_avoiding_vertices);
    detail::check_int_cell(mismatches, "|E(Q_n(1010))|", col.n, ref.ham_avoiding_edges,
                           col.ham_avoiding_edges);
    detail::check_ratio_cell(mismatches, "R_H(1010)", col.n, ref.ham_ratio, col.ham_ratio);
  }
  return mismatches;
}

}  // namespace tildecube
