#pragma once

#include <atomic>
#include <climits>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "tildecube/cube.hpp"
#include "tildecube/distance.hpp"
#include "tildecube/parallel.hpp"
#include "tildecube/word.hpp"

namespace tildecube {

enum class IsometryStatus { IsometricUpTo, NonIsometric };

/// A pair of f-free words refuting isometricity: their distance inside the
/// avoiding subgraph differs from their distance in the ambient cube (an
/// unreachable pair counts as differing).
struct IsometryWitness {
  BinaryWord u;
  BinaryWord v;
  std::optional<int> subgraph_distance;  // empty = unreachable
  int ambient_distance = 0;
};

/// Outcome of a bounded isometricity search. Finite search can refute but
/// never prove the unbounded property, so the positive status is always
/// "isometric up to checked_max_n".
struct IsometryVerdict {
  IsometryStatus status;
  int checked_max_n;
  std::optional<IsometryWitness> witness;

  bool isometric() const { return status == IsometryStatus::IsometricUpTo; }
};

namespace detail {

struct Violation {
  int u_idx;
  int v_idx;
  int d_sub;  // -1 = unreachable
  int d_metric;
};

/// Scans all vertex pairs of `sub` for one whose subgraph BFS distance
/// differs from the metric distance, returning the lexicographically first
/// such pair (vertex order is lexicographic, so index order is too).
///
/// The pair space is partitioned by source vertex across workers; each worker
/// keeps its best candidate and the reduction takes the overall minimum, so
/// the result is independent of the partitioning. Pairs at metric distance
/// <= 1 are skipped: distinct vertices at distance 1 are adjacent in the
/// induced subgraph by construction.
inline std::optional<Violation> find_first_violation(const CubeGraph& sub, Metric metric) {
  const int n_vertices = sub.vertex_count();
  const int workers = std::min(worker_count(), std::max(1, n_vertices / 64));

  // flat CSR copy of the adjacency; the BFS inner loop is the hot path
  std::vector<int> offsets(static_cast<std::size_t>(n_vertices) + 1, 0);
  std::vector<int> targets;
  targets.reserve(static_cast<std::size_t>(2 * sub.edge_count()));
  for (int i = 0; i < n_vertices; ++i) {
    const auto& row = sub.neighbors(i);
    targets.insert(targets.end(), row.begin(), row.end());
    offsets[static_cast<std::size_t>(i) + 1] = static_cast<int>(targets.size());
  }

  std::atomic<int> next_source{0};
  std::atomic<int> best_source{INT_MAX};
  std::mutex found_mutex;
  std::vector<Violation> found;

  run_on_workers(workers, [&](int) {
    std::vector<int> dist;
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n_vertices));
    for (;;) {
      const int s = next_source.fetch_add(1, std::memory_order_relaxed);
      if (s >= n_vertices) break;
      if (s > best_source.load(std::memory_order_relaxed)) continue;

      // BFS into reusable buffers
      dist.assign(static_cast<std::size_t>(n_vertices), -1);
      queue.clear();
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const int at = queue[head];
        const int d = dist[static_cast<std::size_t>(at)] + 1;
        for (int e = offsets[static_cast<std::size_t>(at)];
             e < offsets[static_cast<std::size_t>(at) + 1]; ++e) {
          const int nb = targets[static_cast<std::size_t>(e)];
          if (dist[static_cast<std::size_t>(nb)] >= 0) continue;
          dist[static_cast<std::size_t>(nb)] = d;
          queue.push_back(nb);
        }
      }

      const BinaryWord wu = sub.vertex(s);
      for (int t = s + 1; t < n_vertices; ++t) {
        const int dm = metric_distance(metric, wu, sub.vertex(t));
        if (dm <= 1) continue;
        if (dist[static_cast<std::size_t>(t)] == dm) continue;
        {
          std::lock_guard<std::mutex> lock(found_mutex);
          found.push_back(Violation{s, t, dist[static_cast<std::size_t>(t)], dm});
        }
        int cur = best_source.load(std::memory_order_relaxed);
        while (s < cur && !best_source.compare_exchange_weak(cur, s)) {
        }
        break;  // later t for this source cannot be lexicographically smaller
      }
    }
  });

  if (found.empty()) return std::nullopt;
  const Violation* best = &found.front();
  for (const Violation& cand : found)
    if (cand.u_idx < best->u_idx || (cand.u_idx == best->u_idx && cand.v_idx < best->v_idx))
      best = &cand;
  return *best;
}

}  // namespace detail

/// Decides whether `sub` is an isometric subgraph of the ambient cube over
/// the same vertex-word length: every pair's subgraph distance must equal the
/// metric distance (which is the ambient-cube distance). The witness, when
/// present, is the lexicographically first failing pair.
inline IsometryVerdict is_isometric_subgraph(const CubeGraph& sub, Metric ambient_metric) {
  if (sub.metric() != ambient_metric)
    throw std::invalid_argument("is_isometric_subgraph: subgraph metric differs from ambient");
  const auto v = detail::find_first_violation(sub, ambient_metric);
  if (!v) return IsometryVerdict{IsometryStatus::IsometricUpTo, sub.order(), std::nullopt};
  return IsometryVerdict{
      IsometryStatus::NonIsometric, sub.order(),
      IsometryWitness{sub.vertex(v->u_idx), sub.vertex(v->v_idx),
                      v->d_sub < 0 ? std::nullopt : std::optional<int>(v->d_sub), v->d_metric}};
}

namespace detail {

inline void check_f_and_range(const BinaryWord& f, int max_n, const char* who) {
  if (f.empty()) throw std::invalid_argument(std::string(who) + ": word must be non-empty");
  if (max_n < f.length())
    throw std::invalid_argument(std::string(who) + ": max_n must be at least |f|");
}

inline IsometryVerdict check_isometric_by_cubes(const BinaryWord& f, int max_n, Metric metric) {
  for (int n = f.length(); n <= max_n; ++n) {
    const CubeGraph sub = build(n, metric, f);
    IsometryVerdict verdict = is_isometric_subgraph(sub, metric);
    if (!verdict.isometric()) return verdict;
  }
  return IsometryVerdict{IsometryStatus::IsometricUpTo, max_n, std::nullopt};
}

}  // namespace detail

/// Exhaustively verifies that Q~_n(f) is an isometric subgraph of Q~_n for
/// every n from |f| to max_n. A word is tilde-isometric iff this holds for
/// all n, so a clean run only certifies "isometric up to max_n", while any
/// failure definitively classifies f as tilde-non-isometric.
inline IsometryVerdict check_tilde_isometric(const BinaryWord& f, int max_n) {
  detail::check_f_and_range(f, max_n, "check_tilde_isometric");
  return detail::check_isometric_by_cubes(f, max_n, Metric::Tilde);
}

/// Same scheme over Q_n(f) inside Q_n with the Hamming distance.
inline IsometryVerdict check_ham_isometric(const BinaryWord& f, int max_n) {
  detail::check_f_and_range(f, max_n, "check_ham_isometric");
  return detail::check_isometric_by_cubes(f, max_n, Metric::Hamming);
}

namespace detail {

/// True iff some minimal (position-disjoint, length = tilde distance)
/// transformation from u to v keeps every intermediate word f-free. DFS over
/// useful operations; a branch is cut when the intermediate contains f or
/// when the op does not reduce the remaining distance. Words proven dead are
/// memoized — the remaining budget is a function of the word, so the word
/// alone is a sound key.
inline bool exists_f_free_minimal_transformation(const BinaryWord& u, const BinaryWord& v,
                                                 const BinaryWord& f, int distance) {
  std::unordered_set<std::uint64_t> dead;
  auto rec = [&](auto&& self, const BinaryWord& w, int remaining) -> bool {
    if (remaining == 0) return w == v;
    bool ok = false;
    for_each_useful_op(w, v, [&](EditOp op) {
      if (ok) return;
      const BinaryWord w2 = apply(op, w);
      if (tilde_distance(w2, v) != remaining - 1) return;
      if (remaining >= 2) {  // w2 is an intermediate word
        if (contains_factor(w2, f)) return;
        if (dead.count(w2.bits())) return;
      }
      if (self(self, w2, remaining - 1)) {
        ok = true;
        return;
      }
      dead.insert(w2.bits());
    });
    return ok;
  };
  return rec(rec, u, distance);
}

}  // namespace detail

/// The definitional check at a single length n: for every pair of f-free
/// words of length n, some minimal tilde-transformation must stay f-free
/// throughout. Independent of the graph-based route, so the two can be used
/// as oracles for each other.
inline IsometryVerdict check_tilde_isometric_by_transformations(const BinaryWord& f, int n) {
  if (f.empty())
    throw std::invalid_argument("check_tilde_isometric_by_transformations: word must be non-empty");
  if (n < f.length() || n > 14)
    throw std::invalid_argument(
        "check_tilde_isometric_by_transformations: n must be in |f|..14");
  const std::vector<BinaryWord> words = enumerate_f_free(n, f);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const int d = tilde_distance(words[i], words[j]);
      if (d <= 1) continue;  // endpoints are f-free and there is no intermediate
      if (detail::exists_f_free_minimal_transformation(words[i], words[j], f, d)) continue;
      const CubeGraph sub = build(n, Metric::Tilde, f);
      const auto d_sub = bfs_distance(sub, words[i], words[j]);
      return IsometryVerdict{IsometryStatus::NonIsometric, n,
                             IsometryWitness{words[i], words[j], d_sub, d}};
    }
  }
  return IsometryVerdict{IsometryStatus::IsometricUpTo, n, std::nullopt};
}

/// Predicts Ham-isometricity from overlaps alone: f is Ham-isometric exactly
/// when no prefix/suffix pair of f lies at Hamming distance 2. Requires
/// |f| >= 2. Cross-validated against check_ham_isometric in the test suite.
inline bool ham_isometric_by_overlap(const BinaryWord& f) {
  if (f.length() < 2)
    throw std::invalid_argument("ham_isometric_by_overlap: word must have length >= 2");
  return !has_two_error_overlap(f);
}

struct WordClassification {
  BinaryWord word;
  IsometryVerdict tilde;
  IsometryVerdict ham;
};

/// Tilde- and Ham-verdicts for every word of the given length (2..5), in
/// lexicographic order, each searched up to max_n.
inline std::vector<WordClassification> classify_all_words(int length, int max_n) {
  if (length < 2 || length > 5)
    throw std::invalid_argument("classify_all_words: length must be in 2..5");
  if (max_n < length)
    throw std::invalid_argument("classify_all_words: max_n must be at least the length");
  std::vector<WordClassification> table;
  table.reserve(std::size_t{1} << length);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
    const BinaryWord w = BinaryWord::from_bits(bits, length);
    table.push_back(WordClassification{w, check_tilde_isometric(w, max_n),
                                       check_ham_isometric(w, max_n)});
  }
  return table;
}

}  // namespace tildecube
