#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tildecube/word.hpp"

namespace tildecube {

enum class Metric { Hamming, Tilde };

inline constexpr const char* to_string(Metric m) {
  return m == Metric::Hamming ? "ham" : "tilde";
}

enum class EditKind { Replace, Swap };

/// A single edit: R_i negates the symbol at position i, S_i exchanges the
/// (distinct) symbols at positions i and i+1. Positions are 1-based.
struct EditOp {
  EditKind kind;
  int pos;

  friend constexpr bool operator==(const EditOp&, const EditOp&) = default;
};

inline std::string to_string(EditOp op) {
  return (op.kind == EditKind::Replace ? "R" : "S") + std::to_string(op.pos);
}

inline constexpr bool is_valid(EditOp op, const BinaryWord& w) {
  if (op.kind == EditKind::Replace) return op.pos >= 1 && op.pos <= w.length();
  return op.pos >= 1 && op.pos <= w.length() - 1 && w[op.pos] != w[op.pos + 1];
}

/// Applies op to w; rejects out-of-range positions and swaps on equal
/// adjacent symbols.
inline constexpr BinaryWord apply(EditOp op, const BinaryWord& w) {
  if (!is_valid(op, w))
    throw std::invalid_argument("apply: operation " +
                                std::string(op.kind == EditKind::Replace ? "R" : "S") +
                                std::to_string(op.pos) + " invalid on " +
                                (w.empty() ? std::string("the empty word") : w.str()));
  return op.kind == EditKind::Replace ? w.with_flipped(op.pos) : w.with_swapped(op.pos);
}

/// An edit sequence applied from `start`; each op must be valid on the word
/// produced by the previous ones.
struct Transformation {
  BinaryWord start;
  std::vector<EditOp> ops;

  /// The full word sequence w_0, w_1, ..., w_h (validating every step).
  std::vector<BinaryWord> words() const {
    std::vector<BinaryWord> ws{start};
    for (EditOp op : ops) ws.push_back(apply(op, ws.back()));
    return ws;
  }

  BinaryWord result() const {
    BinaryWord w = start;
    for (EditOp op : ops) w = apply(op, w);
    return w;
  }

  int length() const { return static_cast<int>(ops.size()); }

  /// True iff the touched-position sets of the ops are pairwise disjoint
  /// (a swap touches two positions).
  bool position_disjoint() const {
    std::uint64_t touched = 0;
    for (EditOp op : ops) {
      std::uint64_t m = std::uint64_t{1} << (op.pos - 1);
      if (op.kind == EditKind::Swap) m |= std::uint64_t{1} << op.pos;
      if (touched & m) return false;
      touched |= m;
    }
    return true;
  }

  /// "u →S1 w1 →R4 w2" rendering of the word chain.
  std::string arrow_chain() const {
    std::string s = start.empty() ? "ε" : start.str();
    BinaryWord w = start;
    for (EditOp op : ops) {
      w = apply(op, w);
      s += " →" + to_string(op) + " " + (w.empty() ? "ε" : w.str());
    }
    return s;
  }
};

/// Number of positions where u and v differ. Lengths must match.
inline int hamming(const BinaryWord& u, const BinaryWord& v) {
  if (u.length() != v.length())
    throw std::invalid_argument("hamming: words must have equal length");
  return __builtin_popcountll(u.bits() ^ v.bits());
}

/// Minimum number of replacements and swaps turning u into v.
///
/// Left-to-right recurrence: D[0] = 0, D[1] = [u1 != v1], and for i >= 2
///   D[i] = D[i-1] + [ui != vi], improved to min(D[i], D[i-2] + 1) whenever
///   u[i-1..i] and v[i-1..i] form a swap pattern (u[i-1] = v[i],
///   u[i] = v[i-1], u[i-1] != u[i]).
/// The swap-pattern positions are precomputed as a bitmask: with both
/// positions mismatched, the pattern is equivalent to u alternating there.
inline int tilde_distance(const BinaryWord& u, const BinaryWord& v) {
  const int n = u.length();
  if (n != v.length())
    throw std::invalid_argument("tilde_distance: words must have equal length");
  if (n == 0) return 0;
  const std::uint64_t mism = u.bits() ^ v.bits();
  const std::uint64_t alt = u.bits() ^ (u.bits() >> 1);
  const std::uint64_t swp = mism & (mism >> 1) & alt;  // bit n-i => pattern at (i-1, i)
  if (swp == 0) return __builtin_popcountll(mism);  // no swap ever applies: D[n] is the mismatch count
  int d_prev2 = 0;
  int d_prev = static_cast<int>((mism >> (n - 1)) & 1u);
  for (int i = 2; i <= n; ++i) {
    const int b = n - i;
    int d = d_prev + static_cast<int>((mism >> b) & 1u);
    if ((swp >> b) & 1u) d = std::min(d, d_prev2 + 1);
    d_prev2 = d_prev;
    d_prev = d;
  }
  return d_prev;
}

inline int metric_distance(Metric m, const BinaryWord& u, const BinaryWord& v) {
  return m == Metric::Hamming ? hamming(u, v) : tilde_distance(u, v);
}

namespace detail {

// Ops that can appear in a position-disjoint minimal transformation toward v:
// every op must leave its touched positions at their final value, because a
// later op may not touch them again. Candidates are emitted in (position,
// Replace-before-Swap) order, giving a deterministic enumeration.
template <typename Visit>
constexpr void for_each_useful_op(const BinaryWord& w, const BinaryWord& v, Visit visit) {
  const int n = w.length();
  for (int i = 1; i <= n; ++i) {
    if (w[i] != v[i]) visit(EditOp{EditKind::Replace, i});
    if (i < n && w[i] != w[i + 1] && w[i] == v[i + 1] && w[i + 1] == v[i])
      visit(EditOp{EditKind::Swap, i});
  }
}

}  // namespace detail

/// All position-disjoint transformations from u to v of length exactly
/// tilde_distance(u, v), over every operation multiset and every application
/// order, in lexicographic order of the op sequences.
///
/// The binary case always admits at least one; an empty result with positive
/// distance would contradict that and raises logic_error instead of being
/// silently returned. Supported for |u| <= 24 (the enumeration is exponential
/// in the distance; it exists as an oracle and for witness display).
inline std::vector<Transformation> minimal_transformations(const BinaryWord& u,
                                                           const BinaryWord& v) {
  if (u.length() != v.length())
    throw std::invalid_argument("minimal_transformations: words must have equal length");
  if (u.length() > 24)
    throw std::invalid_argument("minimal_transformations: supported only for |u| <= 24");
  const int d = tilde_distance(u, v);
  std::vector<Transformation> out;
  std::vector<EditOp> seq;
  auto rec = [&](auto&& self, const BinaryWord& w) -> void {
    if (static_cast<int>(seq.size()) == d) {
      out.push_back(Transformation{u, seq});
      return;
    }
    const int remaining = d - static_cast<int>(seq.size());
    detail::for_each_useful_op(w, v, [&](EditOp op) {
      const BinaryWord w2 = apply(op, w);
      if (tilde_distance(w2, v) != remaining - 1) return;
      seq.push_back(op);
      self(self, w2);
      seq.pop_back();
    });
  };
  rec(rec, u);
  if (out.empty() && d > 0)
    throw std::logic_error("minimal_transformations: no minimal tilde-transformation from " +
                           u.str() + " to " + v.str() + " (distance " + std::to_string(d) +
                           "); this contradicts a known property of the binary case");
  return out;
}

/// First minimal transformation in the same ordering, without enumerating the
/// rest; cheap enough for any length.
inline Transformation first_minimal_transformation(const BinaryWord& u, const BinaryWord& v) {
  if (u.length() != v.length())
    throw std::invalid_argument("first_minimal_transformation: words must have equal length");
  const int d = tilde_distance(u, v);
  Transformation t{u, {}};
  BinaryWord w = u;
  while (static_cast<int>(t.ops.size()) < d) {
    const int remaining = d - static_cast<int>(t.ops.size());
    bool advanced = false;
    detail::for_each_useful_op(w, v, [&](EditOp op) {
      if (advanced) return;
      const BinaryWord w2 = apply(op, w);
      if (tilde_distance(w2, v) != remaining - 1) return;
      t.ops.push_back(op);
      w = w2;
      advanced = true;
    });
    if (!advanced)
      throw std::logic_error("first_minimal_transformation: stuck before reaching " + v.str());
  }
  return t;
}

}  // namespace tildecube
