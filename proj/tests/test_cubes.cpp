#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "tildecube/cube.hpp"
#include "tildecube/graph_io.hpp"

using tildecube::BinaryWord;
using tildecube::build;
using tildecube::CubeGraph;
using tildecube::Metric;

namespace {

BinaryWord W(const std::string& s) { return BinaryWord::from_string(s); }

using EdgeSet = std::set<std::pair<std::string, std::string>>;

EdgeSet edge_words(const CubeGraph& g) {
  EdgeSet es;
  for (const auto& [i, j] : g.edges()) es.insert({g.vertex(i).str(), g.vertex(j).str()});
  return es;
}

// all-pairs oracle: adjacency straight from the metric-distance definition
EdgeSet edges_by_definition(const CubeGraph& g) {
  EdgeSet es;
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (tildecube::metric_distance(g.metric(), g.vertex(i), g.vertex(j)) == 1)
        es.insert({g.vertex(i).str(), g.vertex(j).str()});
  return es;
}

}  // namespace

TEST_CASE("build: orders, counts, validation") {
  const CubeGraph qt4 = build(4, Metric::Tilde);
  REQUIRE(qt4.vertex_count() == 16);
  REQUIRE(qt4.edge_count() == 44);

  const CubeGraph q4 = build(4, Metric::Hamming);
  REQUIRE(q4.vertex_count() == 16);
  REQUIRE(q4.edge_count() == 32);

  const CubeGraph ft4 = build(4, Metric::Tilde, W("11"));
  REQUIRE(ft4.vertex_count() == 8);
  REQUIRE(ft4.edge_count() == 15);

  const CubeGraph q4_1010 = build(4, Metric::Hamming, W("1010"));
  REQUIRE(q4_1010.vertex_count() == 15);
  REQUIRE(q4_1010.edge_count() == 28);

  REQUIRE_THROWS_AS(build(0, Metric::Tilde), std::invalid_argument);
  REQUIRE_THROWS_AS(build(3, Metric::Tilde, W("")), std::invalid_argument);

  REQUIRE(std::is_sorted(qt4.vertices().begin(), qt4.vertices().end()));
  for (int i = 0; i < qt4.vertex_count(); ++i) {
    REQUIRE(std::is_sorted(qt4.neighbors(i).begin(), qt4.neighbors(i).end()));
    REQUIRE(qt4.vertex_index(qt4.vertex(i)) == i);
  }
  REQUIRE_FALSE(ft4.contains(W("1100")));
  REQUIRE(ft4.contains(W("1001")));
}

TEST_CASE("build: candidate-scan adjacency equals all-pairs-distance adjacency") {
  for (int n = 1; n <= 8; ++n) {
    for (Metric m : {Metric::Hamming, Metric::Tilde}) {
      const CubeGraph full = build(n, m);
      REQUIRE(edge_words(full) == edges_by_definition(full));
    }
  }
  for (const char* f : {"11", "1010", "010"}) {
    for (int n = 4; n <= 8; ++n) {
      for (Metric m : {Metric::Hamming, Metric::Tilde}) {
        const CubeGraph g = build(n, m, W(f));
        REQUIRE(edge_words(g) == edges_by_definition(g));
      }
    }
  }
}

TEST_CASE("recursive tilde-hypercube") {
  const CubeGraph q1 = tildecube::build_tilde_hypercube_recursive(1);
  REQUIRE(q1.vertex_count() == 2);
  REQUIRE(edge_words(q1) == EdgeSet{{"0", "1"}});

  const CubeGraph q2 = tildecube::build_tilde_hypercube_recursive(2);
  REQUIRE(edge_words(q2) ==
          EdgeSet{{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}, {"01", "10"}});

  REQUIRE_THROWS_AS(tildecube::build_tilde_hypercube_recursive(0), std::invalid_argument);

  for (int n = 1; n <= 9; ++n)
    REQUIRE(tildecube::build_tilde_hypercube_recursive(n) == build(n, Metric::Tilde));
}

TEST_CASE("recursive tilde-Fibonacci cube") {
  const CubeGraph f1 = tildecube::build_tilde_fibonacci_recursive(1);
  REQUIRE(edge_words(f1) == EdgeSet{{"0", "1"}});

  const CubeGraph f2 = tildecube::build_tilde_fibonacci_recursive(2);
  REQUIRE(f2.vertex_count() == 3);
  REQUIRE(edge_words(f2) == EdgeSet{{"00", "01"}, {"00", "10"}, {"01", "10"}});

  const CubeGraph f4 = tildecube::build_tilde_fibonacci_recursive(4);
  REQUIRE(f4.vertex_count() == 8);
  REQUIRE(f4.edge_count() == 15);
  REQUIRE(f4 == build(4, Metric::Tilde, W("11")));

  REQUIRE_THROWS_AS(tildecube::build_tilde_fibonacci_recursive(0), std::invalid_argument);

  for (int n = 1; n <= 12; ++n)
    REQUIRE(tildecube::build_tilde_fibonacci_recursive(n) == build(n, Metric::Tilde, W("11")));
}

TEST_CASE("tilde-Fibonacci vertex split by final symbol") {
  // among the f_{n+2} vertices, f_{n+1} end in 0 and f_n end in 1
  std::vector<long> fib{0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377};
  for (int n = 2; n <= 12; ++n) {
    const CubeGraph g = tildecube::build_tilde_fibonacci_recursive(n);
    long end0 = 0, end1 = 0;
    for (const BinaryWord& w : g.vertices()) (w[n] == 0 ? end0 : end1)++;
    REQUIRE(end0 == fib[n + 1]);
    REQUIRE(end1 == fib[n]);
    REQUIRE(g.vertex_count() == fib[n + 2]);
  }
}

TEST_CASE("hypercube is a strict subgraph of the tilde-hypercube") {
  for (int n = 2; n <= 8; ++n) {
    const EdgeSet plain = edge_words(build(n, Metric::Hamming));
    const EdgeSet tilde = edge_words(build(n, Metric::Tilde));
    REQUIRE(std::includes(tilde.begin(), tilde.end(), plain.begin(), plain.end()));
    REQUIRE(tilde.size() > plain.size());
    // the canonical extra edge 0^{n-2}01 -- 0^{n-2}10
    const std::string zeros(n - 2, '0');
    const auto extra = std::make_pair(zeros + "01", zeros + "10");
    REQUIRE(tilde.count(extra) == 1);
    REQUIRE(plain.count(extra) == 0);
  }
}

TEST_CASE("bfs distances") {
  const CubeGraph qt4 = build(4, Metric::Tilde);
  REQUIRE(tildecube::bfs_distance(qt4, W("1011"), W("0110")) == 2);
  REQUIRE(tildecube::bfs_distance(qt4, W("1011"), W("1011")) == 0);
  REQUIRE_THROWS_AS(tildecube::bfs_distance(qt4, W("10111"), W("0110")), std::invalid_argument);

  const CubeGraph g = build(5, Metric::Tilde, W("1010"));
  REQUIRE_THROWS_AS(tildecube::bfs_distance(g, W("10100"), W("11000")), std::invalid_argument);
  REQUIRE(tildecube::bfs_distance(g, W("11000"), W("10110")) == 3);
  REQUIRE(tildecube::tilde_distance(W("11000"), W("10110")) == 2);  // the isometricity gap

  SECTION("BFS distance in the tilde-hypercube equals the tilde distance") {
    for (int n = 1; n <= 7; ++n) {
      const CubeGraph g2 = build(n, Metric::Tilde);
      for (int s = 0; s < g2.vertex_count(); ++s) {
        const auto dist = tildecube::bfs_distances(g2, s);
        for (int t = 0; t < g2.vertex_count(); ++t)
          REQUIRE(dist[t] == tildecube::tilde_distance(g2.vertex(s), g2.vertex(t)));
      }
    }
  }
}

TEST_CASE("diameter") {
  REQUIRE(tildecube::diameter(build(1, Metric::Tilde)) == 1);
  for (int n = 2; n <= 9; ++n) {
    REQUIRE(tildecube::diameter(build(n, Metric::Hamming, W("11"))) == n);
    REQUIRE(tildecube::diameter(build(n, Metric::Tilde, W("11"))) == (n + 1) / 2);
  }
  SECTION("disconnected graphs are reported with a witness pair") {
    const CubeGraph lone = tildecube::detail::make_graph(
        1, Metric::Tilde, std::nullopt,
        {W("0"), W("1")}, {});
    REQUIRE_THROWS_WITH(tildecube::diameter(lone),
                        Catch::Matchers::ContainsSubstring("disconnected"));
    REQUIRE_FALSE(tildecube::bfs_distance(lone, W("0"), W("1")).has_value());
  }
}

TEST_CASE("graph export") {
  std::ostringstream edges;
  tildecube::write_edge_list(build(1, Metric::Hamming), edges);
  REQUIRE(edges.str() == "0 1\n");

  std::ostringstream dot;
  tildecube::write_dot(build(2, Metric::Tilde, W("11")), dot);
  const std::string out = dot.str();
  REQUIRE(out.find("// Q~_2(11): 3 vertices, 3 edges\n") == 0);
  REQUIRE(out.find("\"00\" -- \"01\";") != std::string::npos);
  REQUIRE(out.back() == '\n');

  std::ostringstream el;
  tildecube::write_edge_list(build(2, Metric::Tilde, W("11")), el);
  REQUIRE(el.str() == "00 01\n00 10\n01 10\n");
}
