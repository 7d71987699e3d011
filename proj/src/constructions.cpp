#include "tsid/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "tsid/errors.hpp"
#include "tsid/isomorphism.hpp"

namespace tsid {

namespace {

std::string str(long long x) { return std::to_string(x); }

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

void add_balanced_star(DigraphBuilder& b, int offset, int k) {
  if (k <= 1) return;
  const int u = (k - 1) / 2;
  const int w = k - 1 - u;
  for (int i = 0; i < u; ++i) b.add_edge(offset + 1 + i, offset);
  for (int i = 0; i < w; ++i) b.add_edge(offset, offset + 1 + u + i);
  add_balanced_star(b, offset + 1, u);
  add_balanced_star(b, offset + 1 + u, w);
}

void check_homogeneous(const Digraph& d1, const VertexSet& i, const Digraph& d2, const char* op) {
  const std::string name(op);
  require(i.universe() == d1.order(), name + ": vertex set is over a different vertex count");
  require(i.size() == d2.order(), name + ": |I| = " + str(i.size()) + " but v(D2) = " + str(d2.order()));
  const auto members = i.members();
  for (int u : members)
    for (int v : members) require(!d1.has_edge(u, v), name + ": I is not independent");
  if (members.empty()) return;
  const int first = members.front();
  for (int v : members)
    require(d1.out_neighbors(v) == d1.out_neighbors(first) && d1.in_neighbors(v) == d1.in_neighbors(first),
            name + ": vertices " + str(first) + " and " + str(v) + " of I have different neighbourhoods");
}

Digraph install_on(const Digraph& d1, const VertexSet& i, const Digraph& d2) {
  const auto members = i.members();
  DigraphBuilder b(d1);
  for (const Edge& e : d2.edges()) b.add_edge(members[static_cast<std::size_t>(e.from)], members[static_cast<std::size_t>(e.to)]);
  return std::move(b).build();
}

// Rooted pass: detach leaf pairs below deepest internal vertices.
void orient_rooted(const UndirectedGraph& g, int root, const std::vector<char>& part, DigraphBuilder& out) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -1), depth(static_cast<std::size_t>(n), -1);
  std::vector<int> queue{root};
  depth[static_cast<std::size_t>(root)] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int v = queue[h];
    for_each_bit(g.row(v), [&](int w) {
      if (!part[static_cast<std::size_t>(w)] || depth[static_cast<std::size_t>(w)] >= 0) return;
      depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
      parent[static_cast<std::size_t>(w)] = v;
      queue.push_back(w);
    });
  }
  std::vector<char> alive(static_cast<std::size_t>(n), 0);
  for (int v : queue) alive[static_cast<std::size_t>(v)] = 1;
  for (;;) {
    int deepest = 0;
    for (int v : queue)
      if (alive[static_cast<std::size_t>(v)]) deepest = std::max(deepest, depth[static_cast<std::size_t>(v)]);
    if (deepest == 0) return;
    int v = n;
    for (int c = 0; c < n; ++c)
      if (alive[static_cast<std::size_t>(c)] && depth[static_cast<std::size_t>(c)] == deepest)
        v = std::min(v, parent[static_cast<std::size_t>(c)]);
    std::vector<int> kids;
    for (int c = 0; c < n && kids.size() < 2; ++c)
      if (alive[static_cast<std::size_t>(c)] && parent[static_cast<std::size_t>(c)] == v && depth[static_cast<std::size_t>(c)] == deepest) kids.push_back(c);
    if (kids.size() < 2) throw PreconditionError("tree_anti_orientation: vertex " + str(v) + " has an odd number of children");
    out.add_edge(kids[0], v);
    out.add_edge(v, kids[1]);
    alive[static_cast<std::size_t>(kids[0])] = 0;
    alive[static_cast<std::size_t>(kids[1])] = 0;
  }
}

std::vector<char> side_of(const UndirectedGraph& g, int start, int blocked) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> queue{start};
  seen[static_cast<std::size_t>(start)] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for_each_bit(g.row(queue[h]), [&](int w) {
      if (seen[static_cast<std::size_t>(w)] || (queue[h] == start && w == blocked)) return;
      seen[static_cast<std::size_t>(w)] = 1;
      queue.push_back(w);
    });
  return seen;
}

UndirectedGraph graph_from_params(const std::vector<long long>& p, const std::string& family) {
  require(!p.empty() && p.size() % 2 == 1, family + ": expected n followed by endpoint pairs");
  UndirectedGraph g(static_cast<int>(p[0]));
  for (std::size_t k = 1; k + 1 < p.size(); k += 2) {
    require(!g.has_edge(static_cast<int>(p[k]), static_cast<int>(p[k + 1])) || p[k] == p[k + 1], family + ": duplicate edge");
    g.add_edge(static_cast<int>(p[k]), static_cast<int>(p[k + 1]));
  }
  return g;
}

std::string kebab(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isupper(static_cast<unsigned char>(c))) {
      if (!out.empty()) out += '-';
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      out += c == '_' ? '-' : c;
    }
  }
  return out;
}

}  // namespace

Digraph directed_path(int k) {
  require(k >= 0, "directed_path: k must be non-negative");
  DigraphBuilder b(k + 1);
  for (int i = 0; i < k; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Digraph directed_cycle(int r) {
  require(r >= 3, "directed_cycle: length must be at least 3");
  DigraphBuilder b(r);
  for (int i = 0; i < r; ++i) b.add_edge(i, (i + 1) % r);
  return std::move(b).build();
}

Digraph transitive_tournament(int k) {
  require(k >= 0, "transitive_tournament: k must be non-negative");
  return Tournament::transitive(k).graph();
}

Digraph transitive_minus_edge(int k, int i, int j) {
  require(1 <= i && i < j && j <= k, "transitive_minus_edge: need 1 <= i < j <= k, got (" + str(i) + "," + str(j) + ") with k = " + str(k));
  DigraphBuilder b(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v)
      if (!(u == i - 1 && v == j - 1)) b.add_edge(u, v);
  return std::move(b).build();
}

Digraph star(int d_out, int d_in) {
  require(d_out >= 0 && d_in >= 0 && d_out + d_in >= 1, "star: need d_out, d_in >= 0 and d_out + d_in >= 1");
  DigraphBuilder b(1 + d_out + d_in);
  for (int i = 0; i < d_out; ++i) b.add_edge(0, 1 + i);
  for (int i = 0; i < d_in; ++i) b.add_edge(1 + d_out + i, 0);
  return std::move(b).build();
}

Digraph iterated_balanced_star(int k) {
  require(k >= 1, "iterated_balanced_star: k must be at least 1");
  DigraphBuilder b(k);
  add_balanced_star(b, 0, k);
  Digraph d = std::move(b).build();
  if (d.edge_count() != iterated_balanced_star_edges_closed(k))
    throw Error("iterated_balanced_star: edge count " + str(d.edge_count()) + " disagrees with the closed form for k = " + str(k));
  return d;
}

long long iterated_balanced_star_edges_recursive(int k) {
  if (k <= 1) return 0;
  return k - 1 + iterated_balanced_star_edges_recursive((k - 1) / 2) + iterated_balanced_star_edges_recursive(k - 1 - (k - 1) / 2);
}

long long iterated_balanced_star_edges_closed(int k) {
  long long t = 0;
  while ((2LL << t) <= static_cast<long long>(k) + 1) ++t;
  return t * (k + 1LL) - (2LL << t) + 2;
}

SubsetBipartite subset_bipartite(int k) {
  require(k >= 1, "subset_bipartite: k must be at least 1");
  if (k > subset_bipartite_guard) throw SizeGuardError("subset_bipartite: k above " + str(subset_bipartite_guard));
  const int m = 1 << k;
  DigraphBuilder b(k + m);
  for (int c = 0; c < m; ++c)
    for (int a = 0; a < k; ++a) {
      if ((c >> a) & 1) b.add_edge(k + c, a);
      else b.add_edge(a, k + c);
    }
  SubsetBipartite out{std::move(b).build(), VertexSet(k + m)};
  for (int a = 0; a < k; ++a) out.a_part.insert(a);
  return out;
}

Digraph all_orientations_union(const UndirectedGraph& a) {
  const auto edges = a.edges();
  const int e = static_cast<int>(edges.size());
  if (e > orientation_union_guard) throw SizeGuardError("all_orientations_union: " + str(e) + " edges exceeds " + str(orientation_union_guard));
  const int k = a.order();
  DigraphBuilder b(k << e);
  for (int mask = 0; mask < (1 << e); ++mask)
    for (int i = 0; i < e; ++i) {
      auto [u, v] = edges[static_cast<std::size_t>(i)];
      if ((mask >> i) & 1) std::swap(u, v);
      b.add_edge(mask * k + u, mask * k + v);
    }
  return std::move(b).build();
}

Digraph d_family(int k) {
  require(k >= 0, "d_family: k must be non-negative");
  DigraphBuilder b(k + 2);
  for (int i = 0; i < k; ++i) {
    b.add_edge(0, 2 + i);
    b.add_edge(2 + i, 1);
  }
  return std::move(b).build();
}

Digraph cycle_with_chord(int k) {
  require(k >= 3 && k % 2 == 1, "cycle_with_chord: half-length k must be odd and at least 3, got " + str(k));
  DigraphBuilder b(directed_cycle(2 * k));
  b.add_edge(0, k);
  return std::move(b).build();
}

UniqueHomLayout unique_hom_layout(int k) {
  require(k >= 2, "unique_hom_digraph: k must be at least 2");
  int s = 0;
  while ((1LL << s) < k) ++s;
  const int t = k - s - 1;
  require(t <= (1 << s), "unique_hom_digraph: t = " + str(t) + " exceeds 2^s = " + str(1LL << s));
  require(t > 2 * s + 1, "unique_hom_digraph: need t > 2s+1, got t = " + str(t) + ", 2s+1 = " + str(2 * s + 1));
  return {s, t};
}

Digraph unique_hom_digraph(int k) {
  const auto [s, t] = unique_hom_layout(k);
  const int x = k - 1;
  DigraphBuilder b(k);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) b.add_edge(i, j);
  for (int i = 0; i < t; ++i) b.add_edge(x, s + i);
  for (int i = 0; i < s; ++i) b.add_edge(i, x);
  const unsigned full = (1U << s) - 1U;
  for (int i = 0; i < t; ++i) {
    const unsigned c = static_cast<unsigned>(i / 2);
    const unsigned subset = i % 2 == 0 ? c : (~c & full);
    for (int a = 0; a < s; ++a) {
      if ((subset >> a) & 1U) b.add_edge(s + i, a);
      else b.add_edge(a, s + i);
    }
  }
  return std::move(b).build();
}

Digraph subdivided_star(int k) {
  require(k >= 2 && k % 2 == 0, "subdivided_star: k must be even and positive, got " + str(k));
  DigraphBuilder b(1 + 4 * k);
  for (int i = 0; i < 2 * k; ++i) {
    const int mid = 1 + 2 * i, leaf = 2 + 2 * i;
    switch (i / (k / 2)) {
      case 0: b.add_edge(0, mid).add_edge(mid, leaf); break;
      case 1: b.add_edge(leaf, mid).add_edge(mid, 0); break;
      case 2: b.add_edge(0, mid).add_edge(leaf, mid); break;
      default: b.add_edge(mid, 0).add_edge(mid, leaf); break;
    }
  }
  return std::move(b).build();
}

Digraph tree_anti_orientation(const UndirectedGraph& tree) {
  require(tree.is_tree(), "tree_anti_orientation: input is not a tree");
  const int n = tree.order();
  std::vector<int> even;
  for (int v = 0; v < n; ++v)
    if (tree.degree(v) % 2 == 0) even.push_back(v);
  if (even.size() > 1)
    throw PreconditionError("tree_anti_orientation: unsupported tree, " + str(static_cast<long long>(even.size())) + " vertices of even degree");
  DigraphBuilder out(n);
  if (even.size() == 1) {
    orient_rooted(tree, even[0], std::vector<char>(static_cast<std::size_t>(n), 1), out);
    return std::move(out).build();
  }
  int w = -1;
  for_each_bit(tree.row(0), [&](int v) {
    if (w < 0) w = v;
  });
  out.add_edge(0, w);
  orient_rooted(tree, 0, side_of(tree, 0, w), out);
  orient_rooted(tree, w, side_of(tree, w, 0), out);
  return std::move(out).build();
}

Digraph anti_extend(const Digraph& d1, const VertexSet& i, const Digraph& d2) {
  check_homogeneous(d1, i, d2, "anti_extend");
  return install_on(d1, i, d2);
}

Digraph sid_extend(const Digraph& d1, const VertexSet& i, const Digraph& d2) {
  check_homogeneous(d1, i, d2, "sid_extend");
  return install_on(d1, i, d2);
}

PinnedDigraph glue(const PinnedDigraph& p1, const PinnedDigraph& p2, const std::vector<int>& identification) {
  const Digraph& d1 = p1.digraph;
  const Digraph& d2 = p2.digraph;
  const auto i1 = p1.pinned.members();
  require(p1.pinned.universe() == d1.order() && p2.pinned.universe() == d2.order(), "glue: pinned sets do not match their digraphs");
  require(identification.size() == i1.size(), "glue: identification must map every vertex of I1");
  require(d2.order() >= static_cast<int>(i1.size()), "glue: v(D2) < |I1|");
  for (int u : i1)
    for (int v : i1) require(!d1.has_edge(u, v), "glue: I1 is not independent in D1");

  std::vector<int> image(static_cast<std::size_t>(d1.order()), -1);
  std::vector<char> hit(static_cast<std::size_t>(d2.order()), 0);
  for (std::size_t r = 0; r < i1.size(); ++r) {
    const int w = identification[r];
    require(w >= 0 && w < d2.order(), "glue: identification target " + str(w) + " outside D2");
    require(!hit[static_cast<std::size_t>(w)], "glue: two vertices of I1 identified with D2 vertex " + str(w));
    hit[static_cast<std::size_t>(w)] = 1;
    image[static_cast<std::size_t>(i1[r])] = w;
  }
  int next = d2.order();
  for (int v = 0; v < d1.order(); ++v)
    if (image[static_cast<std::size_t>(v)] < 0) image[static_cast<std::size_t>(v)] = next++;

  DigraphBuilder b(next);
  for (const Edge& e : d2.edges()) b.add_edge(e.from, e.to);
  for (const Edge& e : d1.edges()) {
    const int u = image[static_cast<std::size_t>(e.from)], v = image[static_cast<std::size_t>(e.to)];
    require(!b.adjacent(u, v), "glue: edge (" + str(e.from) + "," + str(e.to) + ") of D1 collides with an edge of D2");
    b.add_edge(u, v);
  }
  PinnedDigraph out{std::move(b).build(), VertexSet(next)};
  for (int v : p2.pinned.members()) out.pinned.insert(v);
  return out;
}

Digraph join(const Digraph& d1, const Digraph& d2) {
  DigraphBuilder b(disjoint_union(d1, d2));
  for (int u = 0; u < d1.order(); ++u)
    for (int v = 0; v < d2.order(); ++v) b.add_edge(u, d1.order() + v);
  return std::move(b).build();
}

Digraph substitute(const Digraph& d1, int v_star, const Digraph& d2) {
  require(v_star >= 0 && v_star < d1.order(), "substitute: v* = " + str(v_star) + " is not a vertex of D1");
  const int rest = d1.order() - 1;
  auto shift = [&](int v) { return v < v_star ? v : v - 1; };
  DigraphBuilder b(rest + d2.order());
  for (const Edge& e : d1.edges()) {
    if (e.from == v_star) {
      for (int w = 0; w < d2.order(); ++w) b.add_edge(rest + w, shift(e.to));
    } else if (e.to == v_star) {
      for (int w = 0; w < d2.order(); ++w) b.add_edge(shift(e.from), rest + w);
    } else {
      b.add_edge(shift(e.from), shift(e.to));
    }
  }
  for (const Edge& e : d2.edges()) b.add_edge(rest + e.from, rest + e.to);
  return std::move(b).build();
}

Digraph add_dominating_vertex(const Digraph& d, Domination direction) {
  const int n = d.order();
  DigraphBuilder b(n + 1);
  const int off = direction == Domination::Source ? 1 : 0;
  for (const Edge& e : d.edges()) b.add_edge(e.from + off, e.to + off);
  for (int v = 0; v < n; ++v) {
    if (direction == Domination::Source) b.add_edge(0, v + 1);
    else b.add_edge(v, n);
  }
  return std::move(b).build();
}

Digraph transitive_minus_edge_pipeline(int k, int i, int j) {
  require(1 <= i && i < j && j <= k, "transitive_minus_edge_pipeline: need 1 <= i < j <= k");
  const int m = j - i - 1;
  const Digraph base = d_family(m);
  VertexSet middle(base.order());
  for (int r = 0; r < m; ++r) middle.insert(2 + r);
  Digraph d = sid_extend(base, middle, transitive_tournament(m));
  for (int r = 0; r < i - 1; ++r) d = add_dominating_vertex(d, Domination::Source);
  for (int r = 0; r < k - j; ++r) d = add_dominating_vertex(d, Domination::Sink);
  return d;
}

std::optional<std::pair<Digraph, Digraph>> symmetric_edge_add(const Digraph& d, int v, int w) {
  require(v >= 0 && w >= 0 && v < d.order() && w < d.order() && v != w, "symmetric_edge_add: bad vertex pair");
  require(!d.adjacent(v, w), "symmetric_edge_add: pair {" + str(v) + "," + str(w) + "} already carries an edge");
  DigraphBuilder b1(d), b2(d);
  b1.add_edge(w, v);
  b2.add_edge(v, w);
  Digraph d1 = std::move(b1).build(), d2 = std::move(b2).build();
  if (!are_isomorphic(d1, d2)) return std::nullopt;
  return std::make_pair(std::move(d1), std::move(d2));
}

Digraph impartial_i4() { return Digraph(4, {{0, 1}, {2, 1}, {3, 2}}); }

std::vector<std::string> family_names() {
  return {"directed-path", "directed-cycle", "transitive-tournament", "transitive-minus-edge", "star",
          "iterated-balanced-star", "subset-bipartite", "all-orientations-union", "d-family",
          "cycle-with-chord", "unique-hom-digraph", "impartial-i4", "subdivided-star", "tree-orientation"};
}

Construction construct(const std::string& family_in, const std::vector<long long>& p) {
  const std::string family = kebab(family_in);
  auto arity = [&](std::size_t want) {
    require(p.size() == want, family + ": expected " + str(static_cast<long long>(want)) + " parameter(s), got " + str(static_cast<long long>(p.size())));
  };
  auto at = [&](std::size_t k) { return static_cast<int>(p[k]); };
  Construction c{family, p, {}, {}};
  if (family == "directed-path") { arity(1); c.digraph = directed_path(at(0)); }
  else if (family == "directed-cycle") { arity(1); c.digraph = directed_cycle(at(0)); }
  else if (family == "transitive-tournament") { arity(1); c.digraph = transitive_tournament(at(0)); }
  else if (family == "transitive-minus-edge") {
    arity(3);
    c.digraph = transitive_minus_edge(at(0), at(1), at(2));
    if (!transitive_minus_edge_eligible(at(1), at(2))) c.notes.push_back("j-i=2: outside the Sidorenko transitive-minus-edge family");
  }
  else if (family == "star") { arity(2); c.digraph = star(at(0), at(1)); }
  else if (family == "iterated-balanced-star") { arity(1); c.digraph = iterated_balanced_star(at(0)); }
  else if (family == "subset-bipartite") { arity(1); c.digraph = subset_bipartite(at(0)).digraph; }
  else if (family == "all-orientations-union") { c.digraph = all_orientations_union(graph_from_params(p, family)); }
  else if (family == "d-family") { arity(1); c.digraph = d_family(at(0)); }
  else if (family == "impartial-i4") { arity(0); c.digraph = impartial_i4(); }
  else if (family == "cycle-with-chord") { arity(1); c.digraph = cycle_with_chord(at(0)); }
  else if (family == "unique-hom-digraph" || family == "unique-hom") { arity(1); c.family = "unique-hom-digraph"; c.digraph = unique_hom_digraph(at(0)); }
  else if (family == "subdivided-star") { arity(1); c.digraph = subdivided_star(at(0)); }
  else if (family == "tree-orientation") { c.digraph = tree_anti_orientation(graph_from_params(p, family)); }
  else throw PreconditionError("unknown family '" + family_in + "'");
  return c;
}

}  // namespace tsid
