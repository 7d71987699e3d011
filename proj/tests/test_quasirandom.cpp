#include <doctest.h>

#include "test_support.hpp"
#include "tsid/errors.hpp"
#include "tsid/quasirandom.hpp"

using namespace tsid;

namespace {

// max over all disjoint (A, B) by a base-3 assignment per vertex
Rational brute_epsilon(const Tournament& t) {
  const int n = t.order();
  if (n == 0) return 0;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  long long best = 0;
  for (long long code = 0; code < total; ++code) {
    std::vector<int> side(static_cast<std::size_t>(n));
    long long c = code;
    for (int i = 0; i < n; ++i, c /= 3) side[static_cast<std::size_t>(i)] = static_cast<int>(c % 3);
    long long excess = 0;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (side[static_cast<std::size_t>(u)] == 1 && side[static_cast<std::size_t>(v)] == 2 && u != v)
          excess += t.beats(u, v) ? 1 : -1;
    best = std::max(best, excess);
  }
  return Rational(best, static_cast<long long>(n) * n);
}

long long excess_of(const Tournament& t, const VertexSet& a, const VertexSet& b) {
  long long e = 0;
  for (int u : a.members())
    for (int v : b.members()) e += t.beats(u, v) ? 1 : -1;
  return e;
}

}  // namespace

TEST_SUITE("quasirandom") {
  TEST_CASE("transitive tournaments") {
    CHECK(quasirandom_epsilon_exact(Tournament::transitive(10)).epsilon == Rational(1, 4));
    CHECK(quasirandom_epsilon_exact(Tournament::transitive(1)).epsilon == 0);
    CHECK(quasirandom_epsilon_exact(Tournament::transitive(0)).epsilon == 0);
    for (int n = 1; n <= 12; ++n)
      CHECK(quasirandom_epsilon_exact(Tournament::transitive(n)).epsilon == Rational((n / 2) * ((n + 1) / 2), n * n));
  }

  TEST_CASE("exact scan agrees with brute force over disjoint pairs") {
    for (int n = 1; n <= 5; ++n)
      for (const Tournament& t : testing::all_tournaments(n)) REQUIRE(quasirandom_epsilon_exact(t).epsilon == brute_epsilon(t));
    for (std::uint64_t s = 0; s < 10; ++s) {
      const Tournament t = testing::random_tournament(8, s);
      CHECK(quasirandom_epsilon_exact(t).epsilon == brute_epsilon(t));
    }
  }

  TEST_CASE("the maximiser is reported") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Tournament t = testing::random_tournament(11, s);
      const EpsilonResult r = quasirandom_epsilon_exact(t);
      CHECK(r.exact);
      for (int v : r.a.members()) CHECK_FALSE(r.b.contains(v));
      CHECK(excess_of(t, r.a, r.b) == r.excess);
      CHECK(r.epsilon == Rational(r.excess, 121));
    }
  }

  TEST_CASE("invariance under relabelling and reversal") {
    for (std::uint64_t s = 0; s < 25; ++s) {
      const Tournament t = testing::random_tournament(10, s);
      const Rational e = quasirandom_epsilon_exact(t).epsilon;
      const auto p = testing::random_permutation(10, s + 7);
      CHECK(quasirandom_epsilon_exact(Tournament(relabel(t.graph(), p))).epsilon == e);
      CHECK(quasirandom_epsilon_exact(reverse(t)).epsilon == e);
    }
  }

  TEST_CASE("sampling is a lower bound and reproducible") {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const Tournament t = testing::random_tournament(14, s);
      const EpsilonResult ex = quasirandom_epsilon_exact(t);
      const EpsilonResult sa = quasirandom_epsilon_sampled(t, 200, s);
      CHECK_FALSE(sa.exact);
      CHECK(sa.samples == 200);
      CHECK(sa.epsilon <= ex.epsilon);
      CHECK(excess_of(t, sa.a, sa.b) == sa.excess);
      CHECK(quasirandom_epsilon_sampled(t, 200, s).epsilon == sa.epsilon);
    }
    const Tournament big = testing::random_tournament(200, 1);
    const EpsilonResult r = quasirandom_epsilon_sampled(big, 500, 3);
    CHECK(r.epsilon < Rational(1, 8));
    CHECK(quasirandom_epsilon_sampled(Tournament::transitive(200), 500, 3).epsilon > r.epsilon);
  }

  TEST_CASE("size guard") {
    CHECK_THROWS_AS(quasirandom_epsilon_exact(Tournament::transitive(21)), SizeGuardError);
  }
}
