#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tsid/digraph.hpp"
#include "tsid/numeric.hpp"

namespace tsid {

enum class CountMode { Homomorphisms, Labeled };

inline constexpr std::uint64_t default_work_budget = 1'000'000'000ULL;

struct CountOptions {
  /// Ceiling on candidate expansions for one call.
  std::uint64_t budget = default_work_budget;
  /// Stop as soon as the running count reaches this value. The returned
  /// count is then a lower bound that is at least stop_at.
  std::optional<std::uint64_t> stop_at;
};

// Backtracking counter for maps pattern -> host that preserve edges and
// their orientation. The pattern is compiled once and can then be run
// against many hosts.
//
// Vertex order: pinned vertices first, then maximum back-degree (ties by
// degree, then index). In homomorphism mode an independent set of
// low-degree vertices is moved to the end; once the rest is placed their
// candidate sets are independent and contribute a product of popcounts.
// Homomorphism counts also factor over connected components.
class PatternCounter {
public:
  PatternCounter(const Digraph& pattern, CountMode mode, std::vector<int> pinned = {});

  const Digraph& pattern() const { return pattern_; }
  CountMode mode() const { return mode_; }
  std::span<const int> pinned() const { return pinned_; }

  /// anchor[i] is the host image of pinned()[i]. Throws PreconditionError
  /// on a bad anchor and BudgetExceeded when the budget runs out.
  BigInt count(const Digraph& host, std::span<const int> anchor = {}, const CountOptions& opts = {}) const;

  struct Block {
    std::vector<int> vertices;  // search order, pinned first
    int pinned_count = 0;
    int tail_start = 0;
    // constraints[level] lists (earlier level, true if edge runs from the
    // earlier vertex to this one)
    std::vector<std::vector<std::pair<int, bool>>> constraints;
  };

private:
  Digraph pattern_;
  CountMode mode_;
  std::vector<int> pinned_;
  std::vector<Block> blocks_;
  int free_isolated_ = 0;  // unpinned isolated vertices, factor n each (hom mode)
};

}  // namespace tsid
