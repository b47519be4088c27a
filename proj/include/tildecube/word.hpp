#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tildecube {

/// A fixed-length binary word over {0,1}, bit-packed into a single machine
/// word (at most 64 symbols, which covers every graph that fits in memory).
///
/// Positions are 1-based throughout the library: w[1] is the leftmost symbol
/// and w[length()] the rightmost. Internally symbol i is stored at bit
/// (length - i), so that for words of equal length lexicographic order
/// coincides with numeric order of the packed value.
class BinaryWord {
 public:
  static constexpr int max_length = 64;

  /// The empty word.
  constexpr BinaryWord() = default;

  /// Builds a word of `length` symbols from the low `length` bits of `bits`
  /// (most significant of those bits = first symbol).
  static constexpr BinaryWord from_bits(std::uint64_t bits, int length) {
    if (length < 0 || length > max_length)
      throw std::invalid_argument("BinaryWord: length out of range");
    return BinaryWord(bits & low_mask(length), length);
  }

  /// Parses a plain 0/1 literal such as "1011". Rejects any other character.
  static constexpr BinaryWord from_string(std::string_view s) {
    if (s.size() > static_cast<std::size_t>(max_length))
      throw std::invalid_argument("BinaryWord: literal longer than 64 symbols");
    std::uint64_t bits = 0;
    for (char c : s) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("BinaryWord: literal must contain only 0 and 1");
      bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BinaryWord(bits, static_cast<int>(s.size()));
  }

  constexpr int length() const { return len_; }
  constexpr bool empty() const { return len_ == 0; }

  /// Packed value; the first symbol sits at bit (length - 1).
  constexpr std::uint64_t bits() const { return bits_; }

  /// Symbol at 1-based position i, returned as 0 or 1.
  constexpr int operator[](int i) const {
    check_position(i, 1, len_);
    return static_cast<int>((bits_ >> (len_ - i)) & 1u);
  }

  /// w extended on the right by one symbol.
  constexpr BinaryWord append(int symbol) const {
    if (symbol != 0 && symbol != 1)
      throw std::invalid_argument("BinaryWord::append: symbol must be 0 or 1");
    if (len_ == max_length)
      throw std::invalid_argument("BinaryWord::append: word already at max length");
    return BinaryWord((bits_ << 1) | static_cast<std::uint64_t>(symbol), len_ + 1);
  }

  /// pre_l(w): the prefix of length l (0 <= l <= length).
  constexpr BinaryWord prefix(int l) const {
    check_position(l, 0, len_);
    return BinaryWord(l == 0 ? 0 : bits_ >> (len_ - l), l);
  }

  /// suf_l(w): the suffix of length l (0 <= l <= length).
  constexpr BinaryWord suffix(int l) const {
    check_position(l, 0, len_);
    return BinaryWord(bits_ & low_mask(l), l);
  }

  /// w[i..j], 1-based and inclusive; requires 1 <= i <= j <= length.
  constexpr BinaryWord factor(int i, int j) const {
    if (i < 1 || j < i || j > len_)
      throw std::invalid_argument("BinaryWord::factor: bad index range");
    const int l = j - i + 1;
    return BinaryWord((bits_ >> (len_ - j)) & low_mask(l), l);
  }

  /// Copy with symbol i negated.
  constexpr BinaryWord with_flipped(int i) const {
    check_position(i, 1, len_);
    return BinaryWord(bits_ ^ (std::uint64_t{1} << (len_ - i)), len_);
  }

  /// Copy with symbols i and i+1 exchanged; they must differ.
  constexpr BinaryWord with_swapped(int i) const {
    check_position(i, 1, len_ - 1);
    if ((*this)[i] == (*this)[i + 1])
      throw std::invalid_argument("BinaryWord::with_swapped: adjacent symbols equal");
    return BinaryWord(bits_ ^ (std::uint64_t{3} << (len_ - i - 1)), len_);
  }

  std::string str() const {
    std::string s(static_cast<std::size_t>(len_), '0');
    for (int i = 1; i <= len_; ++i)
      if ((*this)[i]) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
  }

  friend constexpr bool operator==(const BinaryWord&, const BinaryWord&) = default;

  /// Lexicographic order; a proper prefix precedes its extensions.
  friend constexpr std::strong_ordering operator<=>(const BinaryWord& a,
                                                    const BinaryWord& b) {
    const int common = a.len_ < b.len_ ? a.len_ : b.len_;
    const std::uint64_t pa = common == 0 ? 0 : a.bits_ >> (a.len_ - common);
    const std::uint64_t pb = common == 0 ? 0 : b.bits_ >> (b.len_ - common);
    if (pa != pb) return pa <=> pb;
    return a.len_ <=> b.len_;
  }

 private:
  constexpr BinaryWord(std::uint64_t bits, int length) : bits_(bits), len_(length) {}

  static constexpr std::uint64_t low_mask(int l) {
    return l >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << l) - 1;
  }

  static constexpr void check_position(int i, int lo, int hi) {
    if (i < lo || i > hi)
      throw std::invalid_argument("BinaryWord: position out of range");
  }

  std::uint64_t bits_ = 0;
  int len_ = 0;
};

/// w̄: every symbol negated.
inline constexpr BinaryWord complement(const BinaryWord& w) {
  return w.empty() ? w
                   : BinaryWord::from_bits(~w.bits(), w.length());
}

/// w read right to left.
inline constexpr BinaryWord reverse(const BinaryWord& w) {
  std::uint64_t r = 0;
  for (int i = 1; i <= w.length(); ++i) r = (r << 1) | static_cast<std::uint64_t>(w[w.length() - i + 1]);
  return BinaryWord::from_bits(r, w.length());
}

/// True iff f occurs in w as a contiguous factor. The empty word is a factor
/// of every word.
inline constexpr bool contains_factor(const BinaryWord& w, const BinaryWord& f) {
  if (f.empty()) return true;
  if (f.length() > w.length()) return false;
  const std::uint64_t mask = f.length() >= 64 ? ~std::uint64_t{0}
                                              : (std::uint64_t{1} << f.length()) - 1;
  for (int i = 0; i <= w.length() - f.length(); ++i)
    if (((w.bits() >> (w.length() - f.length() - i)) & mask) == f.bits()) return true;
  return false;
}

namespace detail {

/// KMP transition table for the factor f over the binary alphabet:
/// state = length of the longest prefix of f matching a suffix of the text
/// read so far; reaching state |f| means f occurred.
struct FactorAutomaton {
  int accept;
  std::vector<std::array<int, 2>> next;

  explicit FactorAutomaton(const BinaryWord& f) : accept(f.length()), next(f.length()) {
    const int m = f.length();
    std::vector<int> fail(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 2; i <= m; ++i) {
      int k = fail[i - 1];
      while (k > 0 && f[k + 1] != f[i]) k = fail[k];
      if (f[k + 1] == f[i]) ++k;
      fail[i] = k;
    }
    for (int s = 0; s < m; ++s) {
      for (int c = 0; c < 2; ++c) {
        int k = s;
        while (k > 0 && f[k + 1] != c) k = fail[k];
        if (f[k + 1] == c) ++k;
        next[s][c] = k;
      }
    }
  }
};

}  // namespace detail

/// All f-free words of length n, in lexicographic order. Generated by a DFS
/// over the factor automaton, so branches that already contain f are pruned
/// instead of filtered afterwards.
inline std::vector<BinaryWord> enumerate_f_free(int n, const BinaryWord& f) {
  if (f.empty())
    throw std::invalid_argument("enumerate_f_free: avoided factor must be non-empty");
  if (n < 0 || n > BinaryWord::max_length)
    throw std::invalid_argument("enumerate_f_free: length out of range");
  const detail::FactorAutomaton aut(f);
  std::vector<BinaryWord> out;
  auto rec = [&](auto&& self, std::uint64_t bits, int len, int state) -> void {
    if (len == n) {
      out.push_back(BinaryWord::from_bits(bits, n));
      return;
    }
    for (int c = 0; c < 2; ++c) {
      const int s = aut.next[state][c];
      if (s == aut.accept) continue;
      self(self, (bits << 1) | static_cast<std::uint64_t>(c), len + 1, s);
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

/// Number of f-free words of length n (same automaton, counting DP).
inline std::uint64_t count_f_free(int n, const BinaryWord& f) {
  if (f.empty())
    throw std::invalid_argument("count_f_free: avoided factor must be non-empty");
  if (n < 0 || n > BinaryWord::max_length)
    throw std::invalid_argument("count_f_free: length out of range");
  const detail::FactorAutomaton aut(f);
  std::vector<std::uint64_t> cur(static_cast<std::size_t>(aut.accept), 0);
  cur[0] = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<std::uint64_t> nxt(cur.size(), 0);
    for (int s = 0; s < aut.accept; ++s) {
      if (cur[s] == 0) continue;
      for (int c = 0; c < 2; ++c) {
        const int t = aut.next[s][c];
        if (t != aut.accept) nxt[t] += cur[s];
      }
    }
    cur = std::move(nxt);
  }
  std::uint64_t total = 0;
  for (std::uint64_t v : cur) total += v;
  return total;
}

/// Hamming distance between pre_l(w) and suf_l(w); requires 1 <= l <= |w|-1.
inline int overlap_errors(const BinaryWord& w, int l) {
  if (l < 1 || l > w.length() - 1)
    throw std::invalid_argument("overlap_errors: l must be in 1..|w|-1");
  const std::uint64_t pre = w.prefix(l).bits();
  const std::uint64_t suf = w.suffix(l).bits();
  return __builtin_popcountll(pre ^ suf);
}

/// True iff some prefix/suffix pair of equal length is at Hamming distance
/// exactly 2. Requires |w| >= 2.
inline bool has_two_error_overlap(const BinaryWord& w) {
  if (w.length() < 2)
    throw std::invalid_argument("has_two_error_overlap: word must have length >= 2");
  for (int l = 1; l <= w.length() - 1; ++l)
    if (overlap_errors(w, l) == 2) return true;
  return false;
}

}  // namespace tildecube

template <>
struct std::hash<tildecube::BinaryWord> {
  std::size_t operator()(const tildecube::BinaryWord& w) const noexcept {
    // splitmix64 over (bits, length)
    std::uint64_t x = w.bits() + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(w.length() + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};
