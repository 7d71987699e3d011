#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsid/count_kernel.hpp"
#include "tsid/digraph.hpp"
#include "tsid/undirected.hpp"

namespace tsid {

struct Biclique {
  VertexSet a;
  VertexSet b;
  bool operator==(const Biclique&) const = default;
};

struct BicliqueCover {
  int host_n = 0;
  std::vector<Biclique> parts;
  bool operator==(const BicliqueCover&) const = default;
};

struct CoverCheck {
  bool ok = true;
  std::optional<std::pair<int, int>> uncovered;  // host edge in no biclique
  std::optional<std::pair<int, int>> extraneous;  // biclique edge missing from the host
  std::optional<int> overlapping_part;            // A_i and B_i intersect
};

/// Throws PreconditionError when sizes differ.
CoverCheck verify_cover(const UndirectedGraph& h, const BicliqueCover& c);

long long cover_weight(const BicliqueCover& c);

/// f(v) is the number of parts containing v; profile[t] = |{v : f(v) = t}|.
std::vector<int> coverage_multiplicity(const BicliqueCover& c);
std::map<int, int> tt_profile(const BicliqueCover& c);

struct TtRow {
  int t = 0;
  int size = 0;        // |T_t|
  double bound = 0;    // 2^t + sqrt(s 2^{t+1}), approximate
  double slack = 0;    // bound - size, approximate
  bool holds = true;   // decided in exact integer arithmetic
};

struct TtClaimReport {
  long long s = 0;  // non-edges of the host
  bool holds = true;
  std::vector<TtRow> rows;  // t = 1 .. number of parts
};

/// Throws PreconditionError when c does not verify against h.
TtClaimReport check_tt_claim(const UndirectedGraph& h, const BicliqueCover& c);

/// n log2 n - n log2((s+n)/n). The lower-order -O(n) term is not included.
double leading_lower_bound(long long n, long long s);
inline constexpr std::string_view leading_lower_bound_note =
    "leading terms only; the -O(n) correction has no explicit constant and is omitted";

/// n log2 n - n log2((n+2s)/n), approximate.
double remark_bound(long long n, long long s);
/// Exact comparison weight == n log2 n - n log2((n+2s)/n). Returns nullopt
/// when n or (n+2s)/n is not a power of two, since the logarithms are then
/// irrational.
std::optional<bool> remark_identity_exact(long long n, long long s, long long weight);

inline constexpr int hypercube_guard = 14;

struct HypercubeCover {
  UndirectedGraph host;
  BicliqueCover cover;
};

/// Vertices are r-bit strings read as integers; part i is (bit i = 0,
/// bit i = 1) for i < k. The host is the union of the parts, so its
/// complement is 2^k disjoint cliques of size 2^{r-k}; this is asserted.
HypercubeCover hypercube_cover(int r, int k);

/// True when the graph is a disjoint union of `count` cliques of `size`.
bool is_disjoint_cliques(const UndirectedGraph& g, int count, int size);

struct TwoPathCheck {
  bool ok = true;
  std::optional<std::pair<int, int>> bad_pair;
};

/// Every pair of distinct vertices is adjacent or joined by a directed
/// 2-path in some direction.
TwoPathCheck two_path_condition(const Digraph& d);

struct MultiplicityProbe {
  std::uint64_t trials = 0;
  int max_count = 0;  // capped at 2
  std::uint64_t argmax_trial = 0;
  int designed_count = 0;  // capped at 2
  std::vector<int> counts;  // per trial, capped at 2
};

/// Seeded random tournaments on v(D) vertices (trial t uses
/// derive_seed(seed, t)); homomorphism counts stop at 2. Also counts the
/// lexicographic fill of D itself.
MultiplicityProbe homomorphism_multiplicity_probe(const Digraph& d, std::uint64_t trials, std::uint64_t seed,
                                                  int threads = 1, const CountOptions& opts = {});

// BCV/1: "n k" then k lines "|A| a1 a2 .. | |B| b1 b2 ..".
std::string to_bcv(const BicliqueCover& c);
BicliqueCover parse_bcv(std::string_view text);

}  // namespace tsid
