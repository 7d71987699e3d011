#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tsid/vertex_set.hpp"

namespace tsid {

/// Simple undirected graph on 0..n-1 with symmetric packed rows.
class UndirectedGraph {
public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int n);
  /// Throws PreconditionError on loops, duplicates or bad endpoints.
  UndirectedGraph(int n, std::span<const std::pair<int, int>> edges);
  UndirectedGraph(int n, std::initializer_list<std::pair<int, int>> edges)
      : UndirectedGraph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

  static UndirectedGraph complete(int n);

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }

  bool has_edge(int u, int v) const {
    return (rows_[offset(u) + static_cast<std::size_t>(v / word_bits)] >> (v % word_bits)) & 1U;
  }
  std::span<const word_t> row(int v) const {
    return {rows_.data() + offset(v), static_cast<std::size_t>(words_)};
  }
  int degree(int v) const { return popcount(row(v)); }

  void add_edge(int u, int v);

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  UndirectedGraph complement() const;

  /// Vertex sets of the connected components, each sorted, ordered by
  /// smallest member.
  std::vector<std::vector<int>> components() const;

  bool is_tree() const;

  bool operator==(const UndirectedGraph& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }

private:
  std::size_t offset(int v) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
  }

  int n_ = 0;
  int words_ = 0;
  int edge_count_ = 0;
  std::vector<word_t> rows_;
};

}  // namespace tsid
