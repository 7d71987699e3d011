#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "tsid/vertex_set.hpp"

namespace tsid {

struct Edge {
  int from = 0;
  int to = 0;

  auto operator<=>(const Edge&) const = default;
};

class UndirectedGraph;

// An oriented graph on vertices 0..n-1: no loops, no antiparallel pairs.
// Out- and in-neighbourhoods are kept as packed rows so that candidate sets
// in the counting kernels are word-wise intersections.
class Digraph {
public:
  Digraph() = default;
  explicit Digraph(int n);
  /// Throws PreconditionError on loops, antiparallel pairs, duplicates or
  /// out-of-range endpoints.
  Digraph(int n, std::span<const Edge> edges);
  Digraph(int n, std::initializer_list<Edge> edges)
      : Digraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }
  int words_per_row() const { return words_; }

  bool has_edge(int u, int v) const {
    return (out_[row_offset(u) + static_cast<std::size_t>(v / word_bits)] >> (v % word_bits)) & 1U;
  }
  bool adjacent(int u, int v) const { return has_edge(u, v) || has_edge(v, u); }

  std::span<const word_t> out_row(int v) const {
    return {out_.data() + row_offset(v), static_cast<std::size_t>(words_)};
  }
  std::span<const word_t> in_row(int v) const {
    return {in_.data() + row_offset(v), static_cast<std::size_t>(words_)};
  }
  int out_degree(int v) const { return popcount(out_row(v)); }
  int in_degree(int v) const { return popcount(in_row(v)); }
  int degree(int v) const { return out_degree(v) + in_degree(v); }

  VertexSet out_neighbors(int v) const;
  VertexSet in_neighbors(int v) const;

  /// All edges, sorted lexicographically by (from, to).
  std::vector<Edge> edges() const;

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && out_ == other.out_;
  }

private:
  friend class DigraphBuilder;

  std::size_t row_offset(int v) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
  }

  int n_ = 0;
  int words_ = 0;
  int edge_count_ = 0;
  std::vector<word_t> out_;
  std::vector<word_t> in_;
};

/// Incremental construction with the same validation as the Digraph
/// constructor, applied per edge.
class DigraphBuilder {
public:
  explicit DigraphBuilder(int n);
  explicit DigraphBuilder(const Digraph& start);

  DigraphBuilder& add_edge(int u, int v);
  bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
  bool adjacent(int u, int v) const { return g_.adjacent(u, v); }
  int order() const { return g_.order(); }

  Digraph build() const& { return g_; }
  Digraph build() && { return std::move(g_); }

private:
  Digraph g_;
};

/// A complete oriented graph. The wrapped digraph is immutable.
class Tournament {
public:
  /// Throws PreconditionError unless every pair carries exactly one edge.
  explicit Tournament(Digraph g);

  /// Bit p of code orients the p-th pair (i<j, lexicographic): 1 means i->j.
  static Tournament from_code(int n, std::uint64_t code);
  static Tournament from_bits(int n, const std::vector<bool>& bits);
  static Tournament transitive(int n);

  const Digraph& graph() const { return g_; }
  int order() const { return g_.order(); }
  bool beats(int u, int v) const { return g_.has_edge(u, v); }

  /// Orientation bits in TRN/1 pair order.
  std::vector<bool> bits() const;

  bool operator==(const Tournament&) const = default;

private:
  Digraph g_;
};

/// Index of pair (i,j), i<j, in lexicographic pair order over 0..n-1.
constexpr std::uint64_t pair_index(int n, int i, int j) {
  const auto ii = static_cast<std::uint64_t>(i);
  return ii * static_cast<std::uint64_t>(n) - ii * (ii + 1) / 2 + static_cast<std::uint64_t>(j - i - 1);
}
constexpr std::uint64_t pair_count(int n) {
  return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n > 0 ? n - 1 : 0) / 2;
}

struct FillStrategy {
  enum class Kind { Lexicographic, SeededRandom };
  Kind kind = Kind::Lexicographic;
  std::uint64_t seed = 0;

  static FillStrategy lexicographic() { return {}; }
  static FillStrategy seeded(std::uint64_t seed) { return {Kind::SeededRandom, seed}; }
};

Digraph reverse(const Digraph& d);
Tournament reverse(const Tournament& t);
UndirectedGraph underlying(const Digraph& d);
bool is_transitive(const Digraph& d);

/// Vertex (v, copy c) of the blowup is labelled v*m + c.
Digraph blowup(const Digraph& d, int m);

/// Lexicographic puts u->v for u<v on every empty pair; SeededRandom draws
/// pair p's orientation from the counter RNG at (seed, p).
Tournament fill_to_tournament(const Digraph& d, FillStrategy strategy = {});

/// Vertices of d2 are shifted by d1.order().
Digraph disjoint_union(const Digraph& d1, const Digraph& d2);

Digraph induced_subgraph(const Digraph& d, std::span<const int> vertices);

/// Image graph under the bijection perm (old vertex v becomes perm[v]).
Digraph relabel(const Digraph& d, std::span<const int> perm);

/// Flips the edge on {u,v}.
Tournament flip_pair(const Tournament& t, int u, int v);

}  // namespace tsid
