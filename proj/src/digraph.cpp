#include "tsid/digraph.hpp"

#include <algorithm>
#include <string>

#include "tsid/errors.hpp"
#include "tsid/random.hpp"
#include "tsid/undirected.hpp"

namespace tsid {

namespace {

void set_bit(std::vector<word_t>& words, std::size_t offset, int v) {
  words[offset + static_cast<std::size_t>(v / word_bits)] |= word_t{1} << (v % word_bits);
}

std::string edge_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

VertexSet::VertexSet(int n, std::initializer_list<int> members) : VertexSet(n) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(int n, std::span<const int> members) : VertexSet(n) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::full(int n) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= n_) throw PreconditionError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
  words_[static_cast<std::size_t>(v / word_bits)] |= word_t{1} << (v % word_bits);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= n_) return;
  words_[static_cast<std::size_t>(v / word_bits)] &= ~(word_t{1} << (v % word_bits));
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for_each_bit(words_, [&](int v) { out.push_back(v); });
  return out;
}

Digraph::Digraph(int n) : n_(n), words_(words_for(n)) {
  if (n < 0) throw PreconditionError("negative vertex count");
  out_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
  in_ = out_;
}

Digraph::Digraph(int n, std::span<const Edge> edges) : Digraph(n) {
  DigraphBuilder b(*this);
  for (const Edge& e : edges) b.add_edge(e.from, e.to);
  *this = std::move(b).build();
}

VertexSet Digraph::out_neighbors(int v) const {
  VertexSet s(n_);
  for_each_bit(out_row(v), [&](int w) { s.insert(w); });
  return s;
}

VertexSet Digraph::in_neighbors(int v) const {
  VertexSet s(n_);
  for_each_bit(in_row(v), [&](int w) { s.insert(w); });
  return s;
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u) for_each_bit(out_row(u), [&](int v) { out.push_back({u, v}); });
  return out;
}

DigraphBuilder::DigraphBuilder(int n) : g_(n) {}
DigraphBuilder::DigraphBuilder(const Digraph& start) : g_(start) {}

DigraphBuilder& DigraphBuilder::add_edge(int u, int v) {
  const int n = g_.n_;
  if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("edge " + edge_text(u, v) + " has an endpoint outside 0.." + std::to_string(n - 1));
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  if (g_.has_edge(u, v)) throw PreconditionError("duplicate edge " + edge_text(u, v));
  if (g_.has_edge(v, u)) throw PreconditionError("edge " + edge_text(u, v) + " would be antiparallel to " + edge_text(v, u));
  set_bit(g_.out_, g_.row_offset(u), v);
  set_bit(g_.in_, g_.row_offset(v), u);
  ++g_.edge_count_;
  return *this;
}

Tournament::Tournament(Digraph g) : g_(std::move(g)) {
  const int n = g_.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g_.adjacent(i, j))
        throw PreconditionError("not a tournament: pair {" + std::to_string(i) + "," + std::to_string(j) + "} carries no edge");
}

Tournament Tournament::from_code(int n, std::uint64_t code) {
  if (pair_count(n) > 64) throw SizeGuardError("tournament codes cover at most 64 pairs (n <= 11)");
  DigraphBuilder b(n);
  std::uint64_t p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p) {
      if ((code >> p) & 1U) b.add_edge(i, j);
      else b.add_edge(j, i);
    }
  return Tournament(std::move(b).build());
}

Tournament Tournament::from_bits(int n, const std::vector<bool>& bits) {
  if (bits.size() != pair_count(n)) throw PreconditionError("expected " + std::to_string(pair_count(n)) + " orientation bits");
  DigraphBuilder b(n);
  std::size_t p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p) {
      if (bits[p]) b.add_edge(i, j);
      else b.add_edge(j, i);
    }
  return Tournament(std::move(b).build());
}

Tournament Tournament::transitive(int n) {
  DigraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return Tournament(std::move(b).build());
}

std::vector<bool> Tournament::bits() const {
  std::vector<bool> out;
  out.reserve(pair_count(order()));
  for (int i = 0; i < order(); ++i)
    for (int j = i + 1; j < order(); ++j) out.push_back(g_.has_edge(i, j));
  return out;
}

Digraph reverse(const Digraph& d) {
  DigraphBuilder b(d.order());
  for (const Edge& e : d.edges()) b.add_edge(e.to, e.from);
  return std::move(b).build();
}

Tournament reverse(const Tournament& t) { return Tournament(reverse(t.graph())); }

UndirectedGraph underlying(const Digraph& d) {
  UndirectedGraph g(d.order());
  for (const Edge& e : d.edges()) g.add_edge(e.from, e.to);
  return g;
}

bool is_transitive(const Digraph& d) {
  // Violation: x->y->z with z->x present. Missing {x,z} edges are fine.
  const int n = d.order();
  std::vector<word_t> scratch(static_cast<std::size_t>(d.words_per_row()));
  for (int y = 0; y < n; ++y) {
    for_each_bit(d.in_row(y), [&](int x) {
      // z in N+(y) ∩ N-(x) closes a directed triangle.
      auto oy = d.out_row(y);
      auto ix = d.in_row(x);
      for (std::size_t w = 0; w < scratch.size(); ++w) scratch[w] |= oy[w] & ix[w];
    });
  }
  for (word_t w : scratch)
    if (w != 0) return false;
  return true;
}

Digraph blowup(const Digraph& d, int m) {
  if (m < 1) throw PreconditionError("blowup factor must be positive");
  DigraphBuilder b(d.order() * m);
  for (const Edge& e : d.edges())
    for (int a = 0; a < m; ++a)
      for (int c = 0; c < m; ++c) b.add_edge(e.from * m + a, e.to * m + c);
  return std::move(b).build();
}

Tournament fill_to_tournament(const Digraph& d, FillStrategy strategy) {
  const int n = d.order();
  DigraphBuilder b(d);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (d.adjacent(i, j)) continue;
      bool forward = true;
      if (strategy.kind == FillStrategy::Kind::SeededRandom)
        forward = (draw(strategy.seed, pair_index(n, i, j)) & 1U) != 0;
      if (forward) b.add_edge(i, j);
      else b.add_edge(j, i);
    }
  return Tournament(std::move(b).build());
}

Digraph disjoint_union(const Digraph& d1, const Digraph& d2) {
  const int off = d1.order();
  DigraphBuilder b(d1.order() + d2.order());
  for (const Edge& e : d1.edges()) b.add_edge(e.from, e.to);
  for (const Edge& e : d2.edges()) b.add_edge(e.from + off, e.to + off);
  return std::move(b).build();
}

Digraph induced_subgraph(const Digraph& d, std::span<const int> vertices) {
  std::vector<int> index(static_cast<std::size_t>(d.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= d.order() || index[static_cast<std::size_t>(v)] != -1)
      throw PreconditionError("induced_subgraph: vertex list must be distinct and in range");
    index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  DigraphBuilder b(static_cast<int>(vertices.size()));
  for (const Edge& e : d.edges()) {
    const int a = index[static_cast<std::size_t>(e.from)];
    const int c = index[static_cast<std::size_t>(e.to)];
    if (a >= 0 && c >= 0) b.add_edge(a, c);
  }
  return std::move(b).build();
}

Digraph relabel(const Digraph& d, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != d.order()) throw PreconditionError("relabel: permutation size mismatch");
  std::vector<char> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= d.order() || seen[static_cast<std::size_t>(p)]) throw PreconditionError("relabel: not a permutation");
    seen[static_cast<std::size_t>(p)] = 1;
  }
  DigraphBuilder b(d.order());
  for (const Edge& e : d.edges()) b.add_edge(perm[static_cast<std::size_t>(e.from)], perm[static_cast<std::size_t>(e.to)]);
  return std::move(b).build();
}

Tournament flip_pair(const Tournament& t, int u, int v) {
  const int n = t.order();
  if (u == v || u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("flip_pair: bad pair");
  DigraphBuilder b(n);
  for (const Edge& e : t.graph().edges()) {
    if ((e.from == u && e.to == v) || (e.from == v && e.to == u)) b.add_edge(e.to, e.from);
    else b.add_edge(e.from, e.to);
  }
  return Tournament(std::move(b).build());
}

}  // namespace tsid
