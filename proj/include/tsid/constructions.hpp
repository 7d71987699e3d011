#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsid/digraph.hpp"
#include "tsid/undirected.hpp"

namespace tsid {

// Canonical labelings are documented on each constructor; they are a
// convention of this library so that serialized outputs are stable.

/// k+1 vertices, edges i -> i+1.
Digraph directed_path(int k);

/// r >= 3 vertices, edges i -> i+1 mod r.
Digraph directed_cycle(int r);

/// Edges i -> j for i < j.
Digraph transitive_tournament(int k);

/// TT_k without the edge (i, j), given 1-indexed with 1 <= i < j <= k.
/// Vertex i of [k] is labelled i-1.
Digraph transitive_minus_edge(int k, int i, int j);

/// Deleting (i, j) with j - i = 2 is outside the family known to be
/// Sidorenko (it can leave a 2-edge path).
constexpr bool transitive_minus_edge_eligible(int i, int j) { return j - i != 2; }

/// Center 0, out-leaves 1..d_out, then in-leaves.
Digraph star(int d_out, int d_in);

/// S_k on k vertices: center 0, in-part U = 1..floor((k-1)/2), out-part W
/// after it; each part carries the iterated balanced star of its size.
Digraph iterated_balanced_star(int k);
/// Edge count from e(S_k) = k-1 + e(S_floor) + e(S_ceil), e(S_0)=e(S_1)=0.
long long iterated_balanced_star_edges_recursive(int k);
/// t(k+1) - 2^{t+1} + 2 with t maximal such that 2^t <= k+1.
long long iterated_balanced_star_edges_closed(int k);

inline constexpr int subset_bipartite_guard = 16;

struct SubsetBipartite {
  Digraph digraph;
  VertexSet a_part;  // 0..k-1
};

/// A = 0..k-1; B vertex k+c has out-neighbourhood {a : bit a of c set} and
/// in-neighbourhood the rest of A.
SubsetBipartite subset_bipartite(int k);

inline constexpr int orientation_union_guard = 10;

/// Disjoint union of all 2^e orientations of a. Copy number `mask` occupies
/// vertices mask*v(a) ..; bit i of mask reverses the i-th sorted edge (u<v
/// becomes v->u).
Digraph all_orientations_union(const UndirectedGraph& a);

/// a = 0, b = 1, v_i = i+1; edges a -> v_i -> b.
Digraph d_family(int k);

/// The impartial tree on a=0, b=1, c=2, d=3 with edges a->b, c->b, d->c.
Digraph impartial_i4();

/// C_{2k} on 0..2k-1 plus the chord 0 -> k. Requires k odd, k >= 3.
Digraph cycle_with_chord(int k);

struct UniqueHomLayout {
  int s = 0;
  int t = 0;
};
/// s = ceil(log2 k), t = k - s - 1; throws PreconditionError naming the
/// failed inequality unless t <= 2^s and t > 2s + 1.
UniqueHomLayout unique_hom_layout(int k);

/// A1 = 0..s-1 (transitive), A2 = s..s+t-1, x = k-1. Edges x -> A2,
/// A1 -> x, and u_i -> a for a in S_i, a -> u_i otherwise, where S_{2c}
/// has the bits of c and S_{2c+1} = A1 \ S_{2c}.
Digraph unique_hom_digraph(int k);

/// 1-subdivision of K_{1,2k}, k even: center 0, spoke i has middle 1+2i and
/// leaf 2+2i. Spokes come in four blocks of k/2: center->mid->leaf,
/// leaf->mid->center, center->mid<-leaf, center<-mid->leaf.
Digraph subdivided_star(int k);

/// Orientation of a tree with at most one even-degree vertex, built by
/// repeatedly detaching two leaf children x, y of a deepest internal vertex
/// v as x -> v -> y (smallest indices first). With no even vertex the edge
/// from 0 to its smallest neighbour is oriented 0 -> w and both sides are
/// handled separately.
Digraph tree_anti_orientation(const UndirectedGraph& tree);

/// Installs d2 on the homogeneous independent set i of d1 (d2's vertex r
/// goes to the r-th smallest member of i).
Digraph anti_extend(const Digraph& d1, const VertexSet& i, const Digraph& d2);
Digraph sid_extend(const Digraph& d1, const VertexSet& i, const Digraph& d2);

struct PinnedDigraph {
  Digraph digraph;
  VertexSet pinned;
};

/// Identifies each vertex of p1.pinned with identification[r] in p2 (r-th
/// smallest pinned vertex). Output labels: d2's vertices first, then the
/// unpinned vertices of d1 in increasing order. The pinned set of the
/// result is p2's.
PinnedDigraph glue(const PinnedDigraph& p1, const PinnedDigraph& p2, const std::vector<int>& identification);

/// d2 shifted by v(d1), with every edge d1 -> d2.
Digraph join(const Digraph& d1, const Digraph& d2);

/// d1 minus v_star keeps its relative order, d2 follows.
Digraph substitute(const Digraph& d1, int v_star, const Digraph& d2);

enum class Domination { Source, Sink };
/// A source becomes vertex 0 (d shifted up); a sink becomes vertex n.
Digraph add_dominating_vertex(const Digraph& d, Domination direction);

/// Builds TT_k minus (i, j) from d_family(j-i-1) with TT_{j-i-1} on its
/// middle vertices, then i-1 sources and k-j sinks.
Digraph transitive_minus_edge_pipeline(int k, int i, int j);

/// (D + (w,v), D + (v,w)) when the two are isomorphic.
std::optional<std::pair<Digraph, Digraph>> symmetric_edge_add(const Digraph& d, int v, int w);

/// Named family with integer parameters, as used by the command line.
struct Construction {
  std::string family;
  std::vector<long long> params;
  Digraph digraph;
  std::vector<std::string> notes;
};

std::vector<std::string> family_names();
/// Families taking a graph (all-orientations-union, tree-orientation) read
/// params as n followed by edge endpoint pairs.
Construction construct(const std::string& family, const std::vector<long long>& params);

}  // namespace tsid
