#pragma once

#include <cstdint>

#include "tsid/digraph.hpp"
#include "tsid/numeric.hpp"

namespace tsid {

inline constexpr int quasirandom_exact_guard = 20;

// max over disjoint A, B of (e(A,B) - e(B,A)) / n^2. For a fixed A the best
// B is every vertex outside A that receives more edges from A than it
// sends to A, so the exact mode is a Gray-code walk over the 2^n sets A.
struct EpsilonResult {
  Rational epsilon;
  long long excess = 0;  // e(A,B) - e(B,A) at the maximiser
  VertexSet a;
  VertexSet b;
  bool exact = true;
  std::uint64_t samples = 0;
};

EpsilonResult quasirandom_epsilon_exact(const Tournament& t);

/// Random A (fair coin per vertex) with the optimal B, best of `count`
/// draws: a lower bound on the exact value.
EpsilonResult quasirandom_epsilon_sampled(const Tournament& t, std::uint64_t count, std::uint64_t seed);

}  // namespace tsid
