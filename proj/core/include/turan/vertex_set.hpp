#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace turan {

/// Fixed-width set of vertex labels, also used as the edge representation.
/// Sized for the largest ground sets in this project (the feasible-region
/// computations go up to n = 240); all set algebra is word-parallel.
class VertexSet {
 public:
  static constexpr int kMaxVertices = 256;
  static constexpr int kWords = kMaxVertices / 64;

  constexpr VertexSet() : words_{} {}

  static VertexSet single(int v) {
    VertexSet s;
    s.set(v);
    return s;
  }

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.set(v);
    return s;
  }

  /// {0, 1, ..., n-1}.
  static VertexSet first_n(int n) {
    VertexSet s;
    for (int w = 0; w < kWords; ++w) {
      int lo = w * 64;
      if (n <= lo) break;
      int bits = n - lo >= 64 ? 64 : n - lo;
      s.words_[w] = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
    }
    return s;
  }

  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// other is a subset of this.
  bool contains(const VertexSet& other) const {
    for (int i = 0; i < kWords; ++i)
      if (other.words_[i] & ~words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  /// Smallest member, or -1 when empty.
  int lowest() const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    return -1;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic order on the sorted tuples of members: the set holding the
  /// smallest element of the symmetric difference comes first. This is the
  /// canonical edge order everywhere in the project.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t d = a.words_[i] ^ b.words_[i];
      if (d) return a.words_[i] & (d & -d);
    }
    return false;
  }

  template <typename F>
  void for_each(F&& fn) const {
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        fn(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_;
};

struct VertexSetLexLess {
  bool operator()(const VertexSet& a, const VertexSet& b) const { return lex_less(a, b); }
};

}  // namespace turan
