#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tsid/count_kernel.hpp"
#include "tsid/digraph.hpp"
#include "tsid/numeric.hpp"

namespace tsid {

/// A pattern with an independent set of pinned vertices and their host
/// images. anchor[i] is the image of the i-th smallest member of pinned.
struct PinnedPattern {
  Digraph pattern;
  VertexSet pinned;
  std::vector<int> anchor;

  /// Throws PreconditionError unless pinned is an independent set of the
  /// pattern and anchor is an injective map into 0..host_n-1 of the right
  /// length. host_n < 0 skips the range check.
  void validate(int host_n = -1) const;
};

struct CountResult {
  BigInt value;
  Rational bound;
  Rational ratio;
};

/// 2^{-e(D)} n^{v(D)-pinned}.
Rational anti_bound(const Digraph& d, int n, int pinned = 0);

BigInt count_homomorphisms(const Digraph& d, const Tournament& t, const CountOptions& opts = {});
CountResult count_labeled(const Digraph& d, const Tournament& t, const CountOptions& opts = {});
CountResult count_labeled_pinned(const PinnedPattern& p, const Tournament& t, const CountOptions& opts = {});

/// h_D(T) / n^{v(D)}.
Rational density(const Digraph& d, const Tournament& t, const CountOptions& opts = {});

inline constexpr int exhaustive_size_guard = 7;

struct ImpartialResult {
  bool impartial = true;
  /// The common labeled count for each n in 0..n_max that was completed.
  std::vector<BigInt> count_by_n;
  /// Two hosts on the same vertex count with different counts.
  std::optional<std::pair<Tournament, Tournament>> witness;
};

/// Exhaustive over all tournaments with n <= n_max (guard: 7).
ImpartialResult is_impartial_upto(const Digraph& d, int n_max, const CountOptions& opts = {});

/// Brute-force reference count over all n^{v(D)} maps, no pruning. Shares
/// no code with the backtracking kernel. Refuses searches above the
/// budget before starting.
BigInt oracle_count(const Digraph& d, const Digraph& host, CountMode mode, std::uint64_t budget = default_work_budget);

}  // namespace tsid
