#include <catch2/catch_amalgamated.hpp>

#include <utility>

#include "tildecube/counting.hpp"
#include "tildecube/table1_reference.hpp"

using tildecube::BigInt;
using tildecube::BinaryWord;
using tildecube::build;
using tildecube::Metric;
using tildecube::Real;

namespace {

// independent Fibonacci oracle: fast doubling instead of iteration
// (0-indexed F with F(0)=0, F(1)=1; the library's f_n is F(n))
std::pair<BigInt, BigInt> fib_doubling(unsigned k) {
  if (k == 0) return {0, 1};
  const auto [a, b] = fib_doubling(k / 2);  // F(m), F(m+1) with m = k/2
  const BigInt c = a * (2 * b - a);         // F(2m)
  const BigInt d = a * a + b * b;           // F(2m+1)
  if (k % 2 == 0) return {c, d};
  return {d, c + d};
}

BinaryWord W(const std::string& s) { return BinaryWord::from_string(s); }

}  // namespace

TEST_CASE("fibonacci") {
  REQUIRE(tildecube::fibonacci(1) == 1);
  REQUIRE(tildecube::fibonacci(2) == 1);
  REQUIRE(tildecube::fibonacci(6) == 8);
  REQUIRE_THROWS_AS(tildecube::fibonacci(0), std::invalid_argument);
  for (int n : {3, 10, 47, 90, 200, 1000})
    REQUIRE(tildecube::fibonacci(n) == fib_doubling(static_cast<unsigned>(n)).first);
  REQUIRE(tildecube::fibonacci_cube_vertices(4) == 8);
}

TEST_CASE("edge-count sequences: closed form vs recurrence") {
  REQUIRE(tildecube::edges_hypercube(4) == 32);
  REQUIRE(tildecube::edges_hypercube(16) == 524288);
  REQUIRE(tildecube::edges_fibonacci(1) == 1);
  REQUIRE(tildecube::edges_fibonacci(2) == 2);
  REQUIRE(tildecube::edges_fibonacci(4) == 10);
  REQUIRE(tildecube::edges_tilde_hypercube(1) == 1);
  REQUIRE(tildecube::edges_tilde_hypercube(4) == 44);
  REQUIRE(tildecube::edges_tilde_hypercube(16) == 770048);
  REQUIRE(tildecube::edges_tilde_fibonacci(1) == 1);
  REQUIRE(tildecube::edges_tilde_fibonacci(2) == 3);
  REQUIRE(tildecube::edges_tilde_fibonacci(4) == 15);

  for (int n = 1; n <= 200; ++n) {
    REQUIRE(tildecube::edges_fibonacci(n) == tildecube::edges_fibonacci_recurrence(n));
    REQUIRE(tildecube::edges_tilde_hypercube(n) == tildecube::edges_tilde_hypercube_recurrence(n));
    REQUIRE(tildecube::edges_tilde_fibonacci(n) == tildecube::edges_tilde_fibonacci_recurrence(n));
    if (n >= 2) REQUIRE(tildecube::edges_tilde_hypercube(n) > tildecube::edges_hypercube(n));
  }

  // |E(F~_n)| starts 1, 3, 7, 15, 30, 58, 109 (hand-applied recurrence)
  const long expected[] = {1, 3, 7, 15, 30, 58, 109};
  for (int n = 1; n <= 7; ++n) REQUIRE(tildecube::edges_tilde_fibonacci(n) == expected[n - 1]);
}

TEST_CASE("closed forms match constructed graphs") {
  for (int n = 1; n <= 10; ++n) {
    REQUIRE(build(n, Metric::Hamming).edge_count() == tildecube::edges_hypercube(n));
    REQUIRE(build(n, Metric::Tilde).edge_count() == tildecube::edges_tilde_hypercube(n));
    const auto fib_cube = build(n, Metric::Hamming, W("11"));
    REQUIRE(fib_cube.vertex_count() == tildecube::fibonacci_cube_vertices(n));
    REQUIRE(fib_cube.edge_count() == tildecube::edges_fibonacci(n));
    const auto tilde_fib = build(n, Metric::Tilde, W("11"));
    REQUIRE(tilde_fib.vertex_count() == tildecube::fibonacci_cube_vertices(n));
    REQUIRE(tilde_fib.edge_count() == tildecube::edges_tilde_fibonacci(n));
  }
}

TEST_CASE("interpolated edge counts") {
  REQUIRE_THROWS_AS(tildecube::tilde_eq_interpolated(Real(1)), std::invalid_argument);
  REQUIRE(boost::multiprecision::abs(tildecube::tilde_eq_interpolated(Real(2)) - 1) < 1e-30);
  REQUIRE(boost::multiprecision::abs(tildecube::tilde_eq_interpolated(Real(16)) - 44) < 1e-30);
  REQUIRE(boost::multiprecision::abs(tildecube::tilde_eq_interpolated(Real(65536)) - 770048) <
          1e-25);
  REQUIRE(boost::multiprecision::abs(tildecube::ham_eq_interpolated(Real(16)) - 32) < 1e-30);
}

TEST_CASE("tilde-Fibonacci to tilde-hypercube edge ratio") {
  REQUIRE_THROWS_AS(tildecube::fibo_tilde_ratio(2), std::invalid_argument);

  // value at n=200 cross-checked against an independent 60-digit evaluation;
  // it sits just above 0.86 — the (0.85, 0.86) band is reached near n = 270
  const Real r200 = tildecube::fibo_tilde_ratio(200);
  REQUIRE(boost::multiprecision::abs(r200 - Real("0.860289795084421319961505616607592673604")) <
          1e-35);
  for (int n : {300, 500, 1000}) {
    const Real r = tildecube::fibo_tilde_ratio(n);
    REQUIRE(r > Real("0.85"));
    REQUIRE(r < Real("0.86"));
  }
  // successive values settle down quickly
  Real prev_gap = -1;
  for (int n : {100, 101, 110, 120}) {
    const Real gap =
        boost::multiprecision::abs(tildecube::fibo_tilde_ratio(n) - tildecube::fibo_tilde_ratio(n + 1));
    if (prev_gap >= 0) REQUIRE(gap < prev_gap);
    prev_gap = gap;
  }
}

TEST_CASE("round_to_decimals") {
  REQUIRE(tildecube::round_to_decimals(Real(1), 0) == "1");
  REQUIRE(tildecube::round_to_decimals(Real("0.9556"), 2) == "0.96");
  REQUIRE(tildecube::round_to_decimals(Real("0.94417"), 3) == "0.944");
  REQUIRE(tildecube::round_to_decimals(Real("0.004"), 2) == "0.00");
  REQUIRE(tildecube::round_to_decimals(Real("12.5"), 0) == "13");  // half rounds up
  REQUIRE(tildecube::round_to_decimals(Real("2.0"), 3) == "2.000");
  REQUIRE_THROWS_AS(tildecube::round_to_decimals(Real(-1), 2), std::invalid_argument);
}

TEST_CASE("table columns and golden verification") {
  REQUIRE_THROWS_AS(tildecube::table1(3, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(tildecube::table1(6, 5), std::invalid_argument);

  auto cols = tildecube::table1(4, 6);
  REQUIRE(cols.size() == 3);
  REQUIRE(tildecube::table1_cell_count(cols) == 30);
  REQUIRE(tildecube::verify_table1(cols).empty());

  REQUIRE(cols[0].tilde_avoiding_edges == 44);
  REQUIRE(cols[2].ham_avoiding_vertices == 53);
  REQUIRE(tildecube::round_to_decimals(cols[0].tilde_ratio, 0) == "1");
  REQUIRE(tildecube::round_to_decimals(cols[1].ham_ratio, 2) == "0.92");

  SECTION("a corrupted cell is reported") {
    cols[1].tilde_avoiding_edges += 1;
    const auto mismatches = tildecube::verify_table1(cols);
    REQUIRE(mismatches.size() == 1);
    REQUIRE(mismatches[0].row == "|E(Q~_n(11100))|");
    REQUIRE(mismatches[0].n == 5);
    REQUIRE(mismatches[0].expected == "106");
    REQUIRE(mismatches[0].actual == "107");
  }
  SECTION("columns outside the reference range are rejected") {
    auto wide = tildecube::table1(16, 17);
    REQUIRE_FALSE(tildecube::verify_table1(wide).empty());
  }
}
