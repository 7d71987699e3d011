#include "tsid/quasirandom.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "tsid/errors.hpp"
#include "tsid/random.hpp"

namespace tsid {

namespace {

Rational over_n2(long long excess, int n) {
  if (n == 0) return Rational(0);
  return Rational(BigInt(excess), BigInt(static_cast<long long>(n) * n));
}

// gain[b] = e(A,b) - e(b,A) for the current A.
long long best_b(const std::vector<int>& gain, const std::vector<char>& in_a, VertexSet* b) {
  long long total = 0;
  for (std::size_t v = 0; v < gain.size(); ++v)
    if (!in_a[v] && gain[v] > 0) {
      total += gain[v];
      if (b != nullptr) b->insert(static_cast<int>(v));
    }
  return total;
}

}  // namespace

EpsilonResult quasirandom_epsilon_exact(const Tournament& t) {
  const int n = t.order();
  if (n > quasirandom_exact_guard)
    throw SizeGuardError("exact epsilon scans 2^n sets; n = " + std::to_string(n) + " exceeds " + std::to_string(quasirandom_exact_guard));
  const Digraph& g = t.graph();
  std::vector<int> gain(static_cast<std::size_t>(n), 0);
  std::vector<char> in_a(static_cast<std::size_t>(n), 0);
  long long best = 0;
  std::uint64_t best_gray = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int v = std::countr_zero(i);
    const int sign = in_a[static_cast<std::size_t>(v)] ? -1 : 1;
    in_a[static_cast<std::size_t>(v)] ^= 1;
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      gain[static_cast<std::size_t>(w)] += sign * (g.has_edge(v, w) ? 1 : -1);
    }
    const long long value = best_b(gain, in_a, nullptr);
    if (value > best) {
      best = value;
      best_gray = i ^ (i >> 1);
    }
  }
  EpsilonResult r;
  r.excess = best;
  r.epsilon = over_n2(best, n);
  r.a = VertexSet(n);
  r.b = VertexSet(n);
  std::fill(in_a.begin(), in_a.end(), 0);
  std::fill(gain.begin(), gain.end(), 0);
  for (int v = 0; v < n; ++v)
    if ((best_gray >> v) & 1U) {
      r.a.insert(v);
      in_a[static_cast<std::size_t>(v)] = 1;
      for (int w = 0; w < n; ++w)
        if (w != v) gain[static_cast<std::size_t>(w)] += g.has_edge(v, w) ? 1 : -1;
    }
  best_b(gain, in_a, &r.b);
  return r;
}

EpsilonResult quasirandom_epsilon_sampled(const Tournament& t, std::uint64_t count, std::uint64_t seed) {
  const int n = t.order();
  const Digraph& g = t.graph();
  CounterRng rng(seed);
  EpsilonResult r;
  r.exact = false;
  r.samples = count;
  r.a = VertexSet(n);
  r.b = VertexSet(n);
  std::vector<int> gain(static_cast<std::size_t>(n));
  std::vector<char> in_a(static_cast<std::size_t>(n));
  std::vector<char> best_a;
  for (std::uint64_t s = 0; s < count; ++s) {
    for (int v = 0; v < n; ++v) in_a[static_cast<std::size_t>(v)] = rng.coin() ? 1 : 0;
    for (int w = 0; w < n; ++w) {
      int x = 0;
      for (int v = 0; v < n; ++v)
        if (in_a[static_cast<std::size_t>(v)] && v != w) x += g.has_edge(v, w) ? 1 : -1;
      gain[static_cast<std::size_t>(w)] = x;
    }
    const long long value = best_b(gain, in_a, nullptr);
    if (best_a.empty() || value > r.excess) {
      r.excess = value;
      best_a = in_a;
    }
  }
  if (!best_a.empty()) {
    for (int w = 0; w < n; ++w) {
      int x = 0;
      for (int v = 0; v < n; ++v)
        if (best_a[static_cast<std::size_t>(v)] && v != w) x += g.has_edge(v, w) ? 1 : -1;
      gain[static_cast<std::size_t>(w)] = x;
      if (best_a[static_cast<std::size_t>(w)]) r.a.insert(w);
    }
    r.excess = best_b(gain, best_a, &r.b);
  }
  r.epsilon = over_n2(r.excess, n);
  return r;
}

}  // namespace tsid
