#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "tildecube/cube.hpp"
#include "tildecube/word.hpp"

namespace tildecube {

/// Exact unbounded integer; every count in this module is exact.
using BigInt = boost::multiprecision::cpp_int;

/// High-precision real (50 significant decimal digits) used for the
/// interpolated edge formulas and ratios, so that interval claims like
/// "strictly between 0.85 and 0.86" are decided without floating-point doubt.
using Real = boost::multiprecision::cpp_bin_float_50;

/// f_1 = 1, f_2 = 1, f_i = f_{i-1} + f_{i-2}. Indexed from 1.
inline BigInt fibonacci(int n) {
  if (n < 1) throw std::invalid_argument("fibonacci: indexed from 1");
  BigInt a = 1, b = 1;  // f_1, f_2
  for (int i = 3; i <= n; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return n == 1 ? a : b;
}

/// |V(F_n)| = |V(F~_n)| = f_{n+2}.
inline BigInt fibonacci_cube_vertices(int n) {
  if (n < 1) throw std::invalid_argument("fibonacci_cube_vertices: n must be >= 1");
  return fibonacci(n + 2);
}

/// |E(Q_n)| = n * 2^{n-1}.
inline BigInt edges_hypercube(int n) {
  if (n < 1) throw std::invalid_argument("edges_hypercube: n must be >= 1");
  return BigInt(n) << (n - 1);
}

/// |E(F_n)| = (2(n+1) f_n + n f_{n+1}) / 5, closed form.
inline BigInt edges_fibonacci(int n) {
  if (n < 1) throw std::invalid_argument("edges_fibonacci: n must be >= 1");
  const BigInt num = 2 * BigInt(n + 1) * fibonacci(n) + BigInt(n) * fibonacci(n + 1);
  if (num % 5 != 0) throw std::logic_error("edges_fibonacci: numerator not divisible by 5");
  return num / 5;
}

/// |E(F_1)| = 1, |E(F_2)| = 2, |E(F_n)| = |E(F_{n-1})| + |E(F_{n-2})| + f_n.
inline BigInt edges_fibonacci_recurrence(int n) {
  if (n < 1) throw std::invalid_argument("edges_fibonacci_recurrence: n must be >= 1");
  if (n == 1) return 1;
  BigInt prev = 1, cur = 2;          // E(F_1), E(F_2)
  BigInt fib_prev = 1, fib_cur = 1;  // f_1, f_2
  for (int i = 3; i <= n; ++i) {
    BigInt f = fib_prev + fib_cur;  // f_i
    fib_prev = fib_cur;
    fib_cur = f;
    BigInt next = cur + prev + fib_cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// |E(Q~_n)| = (3n - 1) * 2^{n-2}, closed form (= 1 at n = 1).
inline BigInt edges_tilde_hypercube(int n) {
  if (n < 1) throw std::invalid_argument("edges_tilde_hypercube: n must be >= 1");
  if (n == 1) return 1;
  return BigInt(3 * n - 1) << (n - 2);
}

/// |E(Q~_1)| = 1, |E(Q~_n)| = 2|E(Q~_{n-1})| + 2^{n-1} + 2^{n-2}.
inline BigInt edges_tilde_hypercube_recurrence(int n) {
  if (n < 1) throw std::invalid_argument("edges_tilde_hypercube_recurrence: n must be >= 1");
  BigInt e = 1;
  for (int i = 2; i <= n; ++i) e = 2 * e + (BigInt(1) << (i - 1)) + (BigInt(1) << (i - 2));
  return e;
}

/// |E(F~_n)| = ((n+1) f_{n+3} + (n-2) f_{n+1}) / 5, closed form.
inline BigInt edges_tilde_fibonacci(int n) {
  if (n < 1) throw std::invalid_argument("edges_tilde_fibonacci: n must be >= 1");
  const BigInt num = BigInt(n + 1) * fibonacci(n + 3) + BigInt(n - 2) * fibonacci(n + 1);
  if (num % 5 != 0) throw std::logic_error("edges_tilde_fibonacci: numerator not divisible by 5");
  return num / 5;
}

/// |E(F~_1)| = 1, |E(F~_2)| = 3, |E(F~_n)| = |E(F~_{n-1})| + |E(F~_{n-2})| + f_{n+1}.
inline BigInt edges_tilde_fibonacci_recurrence(int n) {
  if (n < 1) throw std::invalid_argument("edges_tilde_fibonacci_recurrence: n must be >= 1");
  if (n == 1) return 1;
  BigInt prev = 1, cur = 3;     // E(F~_1), E(F~_2)
  BigInt fib_a = 1, fib_b = 2;  // f_2, f_3
  for (int i = 3; i <= n; ++i) {
    BigInt f = fib_a + fib_b;  // f_{i+1}
    fib_a = fib_b;
    fib_b = f;
    BigInt next = cur + prev + fib_b;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace detail {

inline const Real& ln2() {
  static const Real value = boost::multiprecision::log(Real(2));
  return value;
}

inline Real log2_real(const Real& x) { return boost::multiprecision::log(x) / ln2(); }

}  // namespace detail

/// Edge count of a tilde-hypercube interpolated to N vertices:
/// EQ~(N) = N (3 log2 N - 1) / 4. Exact (an integer) when N = 2^n. N >= 2.
inline Real tilde_eq_interpolated(const Real& N) {
  if (N < 2) throw std::invalid_argument("tilde_eq_interpolated: N must be >= 2");
  return N * (3 * detail::log2_real(N) - 1) / 4;
}

/// Hamming counterpart: EQ(N) = N log2(N) / 2. N >= 2.
inline Real ham_eq_interpolated(const Real& N) {
  if (N < 2) throw std::invalid_argument("ham_eq_interpolated: N must be >= 2");
  return N * detail::log2_real(N) / 2;
}

/// |E(F~_n)| / EQ~(f_{n+2}): the tilde-Fibonacci cube's edge count against a
/// tilde-hypercube interpolated to the same number of vertices. Tends to a
/// constant strictly inside (0.85, 0.86).
inline Real fibo_tilde_ratio(int n) {
  if (n < 3) throw std::invalid_argument("fibo_tilde_ratio: n must be >= 3");
  const Real numerator(edges_tilde_fibonacci(n));
  const Real denominator = tilde_eq_interpolated(Real(fibonacci(n + 2)));
  return numerator / denominator;
}

/// Decimal string of x rounded half-up to `decimals` places ("1" for
/// decimals = 0). x must be non-negative.
inline std::string round_to_decimals(const Real& x, int decimals) {
  if (decimals < 0 || x < 0) throw std::invalid_argument("round_to_decimals: bad arguments");
  Real scaled = x;
  for (int i = 0; i < decimals; ++i) scaled *= 10;
  const BigInt units = boost::multiprecision::floor(scaled + Real(1) / 2).convert_to<BigInt>();
  std::string digits = units.str();
  if (decimals == 0) return digits;
  if (static_cast<int>(digits.size()) <= decimals)
    digits.insert(digits.begin(), static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
  digits.insert(digits.size() - static_cast<std::size_t>(decimals), 1, '.');
  return digits;
}

/// One column (one order n) of the summary table: counts for the full cubes,
/// for Q~_n(11100) and Q_n(1010), and the two edge-density ratios.
struct Table1Column {
  int n = 0;
  BigInt hypercube_vertices;        // |V(Q_n)| = |V(Q~_n)|
  BigInt hypercube_edges;           // |E(Q_n)|
  BigInt tilde_hypercube_edges;     // |E(Q~_n)|
  BigInt tilde_avoiding_vertices;   // |V(Q~_n(11100))|
  BigInt tilde_avoiding_edges;      // |E(Q~_n(11100))|
  Real tilde_ratio;                 // |E(Q~_n(11100))| / EQ~(|V(Q~_n(11100))|)
  BigInt ham_avoiding_vertices;     // |V(Q_n(1010))|
  BigInt ham_avoiding_edges;        // |E(Q_n(1010))|
  Real ham_ratio;                   // |E(Q_n(1010))| / EQ(|V(Q_n(1010))|)
};

/// Computes the table columns for n_from..n_to by constructing the four
/// graphs of every order. n_from >= 4 (the ratios need N >= 2 and the
/// published table starts there); orders beyond 16 are allowed, just slow.
inline std::vector<Table1Column> table1(int n_from, int n_to) {
  if (n_from < 4 || n_to < n_from)
    throw std::invalid_argument("table1: need 4 <= n_from <= n_to");
  const BinaryWord f_tilde = BinaryWord::from_string("11100");
  const BinaryWord f_ham = BinaryWord::from_string("1010");
  std::vector<Table1Column> columns;
  columns.reserve(static_cast<std::size_t>(n_to - n_from + 1));
  for (int n = n_from; n <= n_to; ++n) {
    const CubeGraph q = build(n, Metric::Hamming);
    const CubeGraph qt = build(n, Metric::Tilde);
    const CubeGraph qt_f = build(n, Metric::Tilde, f_tilde);
    const CubeGraph q_f = build(n, Metric::Hamming, f_ham);
    Table1Column col;
    col.n = n;
    col.hypercube_vertices = q.vertex_count();
    col.hypercube_edges = q.edge_count();
    col.tilde_hypercube_edges = qt.edge_count();
    col.tilde_avoiding_vertices = qt_f.vertex_count();
    col.tilde_avoiding_edges = qt_f.edge_count();
    col.tilde_ratio =
        Real(col.tilde_avoiding_edges) / tilde_eq_interpolated(Real(col.tilde_avoiding_vertices));
    col.ham_avoiding_vertices = q_f.vertex_count();
    col.ham_avoiding_edges = q_f.edge_count();
    col.ham_ratio =
        Real(col.ham_avoiding_edges) / ham_eq_interpolated(Real(col.ham_avoiding_vertices));
    columns.push_back(std::move(col));
  }
  return columns;
}

}  // namespace tildecube
