#include "tsid/undirected.hpp"

#include <algorithm>
#include <string>

#include "tsid/errors.hpp"

namespace tsid {

UndirectedGraph::UndirectedGraph(int n) : n_(n), words_(words_for(n)) {
  if (n < 0) throw PreconditionError("negative vertex count");
  rows_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
}

UndirectedGraph::UndirectedGraph(int n, std::span<const std::pair<int, int>> edges) : UndirectedGraph(n) {
  for (auto [u, v] : edges) {
    if (u >= 0 && v >= 0 && u < n && v < n && u != v && has_edge(u, v))
      throw PreconditionError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    add_edge(u, v);
  }
}

UndirectedGraph UndirectedGraph::complete(int n) {
  UndirectedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

void UndirectedGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw PreconditionError("edge endpoint outside 0.." + std::to_string(n_ - 1));
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  rows_[offset(u) + static_cast<std::size_t>(v / word_bits)] |= word_t{1} << (v % word_bits);
  rows_[offset(v) + static_cast<std::size_t>(u / word_bits)] |= word_t{1} << (u % word_bits);
  ++edge_count_;
}

std::vector<std::pair<int, int>> UndirectedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for_each_bit(row(u), [&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

UndirectedGraph UndirectedGraph::complement() const {
  UndirectedGraph c(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) c.add_edge(u, v);
  return c;
}

std::vector<std::vector<int>> UndirectedGraph::components() const {
  std::vector<int> comp(static_cast<std::size_t>(n_), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n_; ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> members{s};
    comp[static_cast<std::size_t>(s)] = id;
    for (std::size_t head = 0; head < members.size(); ++head)
      for_each_bit(row(members[head]), [&](int w) {
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = id;
          members.push_back(w);
        }
      });
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool UndirectedGraph::is_tree() const {
  return n_ >= 1 && edge_count_ == n_ - 1 && components().size() == 1;
}

}  // namespace tsid
