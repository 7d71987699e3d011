#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace tsid {

using word_t = std::uint64_t;
inline constexpr int word_bits = 64;

constexpr int words_for(int n) { return (n + word_bits - 1) / word_bits; }

inline int popcount(std::span<const word_t> row) {
  int c = 0;
  for (word_t w : row) c += std::popcount(w);
  return c;
}

/// Calls f(i) for every set bit i of a packed row, in increasing order.
template <typename F>
void for_each_bit(std::span<const word_t> row, F&& f) {
  for (std::size_t wi = 0; wi < row.size(); ++wi) {
    word_t w = row[wi];
    while (w != 0) {
      int b = std::countr_zero(w);
      f(static_cast<int>(wi) * word_bits + b);
      w &= w - 1;
    }
  }
}

/// A subset of 0..n-1 stored as a packed bit row.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_(static_cast<std::size_t>(words_for(n)), 0) {}
  VertexSet(int n, std::initializer_list<int> members);
  VertexSet(int n, std::span<const int> members);

  static VertexSet full(int n);

  int universe() const { return n_; }
  bool contains(int v) const {
    return v >= 0 && v < n_ && ((words_[static_cast<std::size_t>(v / word_bits)] >> (v % word_bits)) & 1U);
  }
  void insert(int v);
  void erase(int v);
  int size() const { return popcount(words_); }
  bool empty() const { return size() == 0; }

  std::vector<int> members() const;
  std::span<const word_t> words() const { return words_; }

  bool operator==(const VertexSet&) const = default;

private:
  int n_ = 0;
  std::vector<word_t> words_;
};

}  // namespace tsid
