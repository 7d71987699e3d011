// Acceptance run: one PASS/FAIL line per criterion.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "test_support.hpp"
#include "tsid/constructions.hpp"
#include "tsid/count_kernel.hpp"
#include "tsid/counting.hpp"
#include "tsid/covers.hpp"
#include "tsid/isomorphism.hpp"
#include "tsid/property.hpp"
#include "tsid/quasirandom.hpp"
#include "tsid/report.hpp"

using namespace tsid;

namespace {

struct Settings {
  int threads = 0;
};

struct Outcome {
  bool pass = false;
  std::string detail;
  Json report;
};

struct Criterion {
  int id = 0;
  std::string title;
  double limit_seconds = 0;
  std::function<Outcome(const Settings&)> run;
};

// Criteria that cannot pass as stated; see the README.
const std::set<int> known_unattainable{5};

// Pinned constants.
constexpr std::uint64_t mc_samples = 100'000;
constexpr double mc_sigmas = 3.0;
constexpr std::uint64_t two_block_seed = 7;
constexpr std::uint64_t mc_seed = 7;
constexpr std::uint64_t probe_seed = 2024;
constexpr std::uint64_t probe_trials = 100;
constexpr std::uint64_t invariance_hosts = 50;
constexpr std::uint64_t random_cover_count = 200;
constexpr int sidorenko_slack = 5;  // min ratio >= 1 - 5/n

ScanOptions scan(const Settings& s) {
  ScanOptions o;
  o.threads = s.threads;
  return o;
}

std::string str(const Rational& q) { return q.str(); }

Tournament regular5() {
  DigraphBuilder b(5);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, (i + 2) % 5);
  }
  return Tournament(std::move(b).build());
}

// Max and min of a count over all tournaments on n vertices.
std::pair<BigInt, BigInt> count_extremes(const PatternCounter& c, int n, const Settings& s) {
  const ScanOptions o = scan(s);
  const int workers = resolved_threads(o);
  std::vector<BigInt> hi(static_cast<std::size_t>(workers), -1), lo(static_cast<std::size_t>(workers), -1);
  for_each_tournament(n, o, [&](int w, std::uint64_t, const Digraph& t) {
    const BigInt v = c.count(t);
    auto& h = hi[static_cast<std::size_t>(w)];
    auto& l = lo[static_cast<std::size_t>(w)];
    if (h < 0 || v > h) h = v;
    if (l < 0 || v < l) l = v;
  });
  BigInt h = -1, l = -1;
  for (int w = 0; w < workers; ++w) {
    if (hi[static_cast<std::size_t>(w)] < 0) continue;
    if (h < 0 || hi[static_cast<std::size_t>(w)] > h) h = hi[static_cast<std::size_t>(w)];
    if (l < 0 || lo[static_cast<std::size_t>(w)] < l) l = lo[static_cast<std::size_t>(w)];
  }
  return {h, l};
}

Outcome oracle_equivalence(const Settings&) {
  const auto catalog = testing::catalog_upto(4);
  std::uint64_t comparisons = 0, mismatches = 0;
  for (const Digraph& d : catalog)
    for (const CountMode mode : {CountMode::Labeled, CountMode::Homomorphisms}) {
      const PatternCounter counter(d, mode);
      for (int n = 0; n <= 5; ++n)
        for (const Tournament& t : testing::all_tournaments(n)) {
          ++comparisons;
          if (counter.count(t.graph()) != oracle_count(d, t.graph(), mode)) ++mismatches;
        }
    }
  Outcome o;
  o.pass = catalog.size() == 52 && mismatches == 0;
  o.detail = std::to_string(catalog.size()) + " classes, " + std::to_string(comparisons) + " comparisons, " +
             std::to_string(mismatches) + " mismatches";
  o.report = Json{{"classes", catalog.size()}, {"comparisons", comparisons}, {"mismatches", mismatches}};
  return o;
}

Outcome path_bound(const Settings& s) {
  Outcome o;
  o.pass = true;
  o.report = Json::array();
  Rational worst = 0;
  for (int k = 1; k <= 3; ++k) {
    const PatternCounter c(directed_path(k), CountMode::Labeled);
    for (int n = 1; n <= 6; ++n) {
      const BigInt hi = count_extremes(c, n, s).first;
      // n (n/2)^k
      const Rational exact_bound = Rational(ipow(BigInt(n), static_cast<unsigned>(k + 1)), ipow(BigInt(2), static_cast<unsigned>(k)));
      const bool ok = Rational(hi) <= exact_bound;
      o.pass = o.pass && ok;
      worst = std::max(worst, Rational(hi) / exact_bound);
      o.report.push_back(Json{{"k", k}, {"n", n}, {"max_count", hi.str()}, {"bound", to_json(exact_bound)}, {"holds", ok}});
    }
  }
  o.detail = "k=1..3, n<=6, max count/bound = " + str(worst);
  return o;
}

Outcome cycle_dichotomy(const Settings& s) {
  Outcome o;
  o.pass = true;
  o.report = Json::array();
  std::ostringstream d;
  for (const auto& [r, n_max] : std::vector<std::pair<int, int>>{{3, 6}, {5, 6}, {6, 6}, {7, 7}}) {
    const PropertyReport rep = check_anti_exhaustive(directed_cycle(r), n_max, scan(s));
    const bool ok = rep.verdict == Verdict::HoldsUpTo;
    o.pass = o.pass && ok;
    d << "C" << r << "(n<=" << n_max << ") max ratio " << str(rep.extremal_ratio) << (ok ? "" : " VIOLATED") << "; ";
    o.report.push_back(to_json(rep));
  }
  o.detail = d.str();
  return o;
}

Outcome balanced_star(const Settings& s) {
  Outcome o;
  o.pass = true;
  o.report = Json::object();
  std::ostringstream d;
  for (int k = 1; k <= 2; ++k) {
    const Digraph st = star(k, k);
    const PropertyReport rep = check_strong_anti(st, VertexSet(st.order(), {0}), 6, scan(s));
    o.pass = o.pass && rep.verdict == Verdict::HoldsUpTo;
    d << "star(" << k << "," << k << ") max pinned ratio " << str(rep.extremal_ratio) << "; ";
    o.report["star_" + std::to_string(k)] = to_json(rep);
    if (k == 1) {
      const CountResult eq = count_labeled_pinned({st, VertexSet(3, {0}), {0}}, regular5());
      const BigInt at5 = rep.curve[4].max_value;
      const bool equality = eq.value == 4 && at5 == 4;
      o.pass = o.pass && equality;
      d << "regular T5 count " << eq.value.str() << " = d1*d2 = 4, n=5 maximum " << at5.str() << " (bound "
        << str(eq.bound) << "); ";
      o.report["regular5"] = to_json(eq);
    }
  }
  o.detail = d.str();
  return o;
}

Outcome impartiality(const Settings&) {
  const PropertyReport rep = check_impartial(impartial_i4(), 6);
  Outcome o;
  bool constant = rep.verdict == Verdict::HoldsUpTo;
  std::ostringstream d;
  d << "constants";
  for (int n = 4; n <= 6; ++n) {
    const RatioPoint& p = rep.curve[static_cast<std::size_t>(n)];
    constant = constant && p.max_value == p.min_value;
    d << " n=" << n << ":" << p.max_value.str();
  }
  const BigInt c6 = rep.curve[6].max_value;
  const Rational lo = Rational(8, 100) * 1296, hi = Rational(18, 100) * 1296;
  const bool bracket = Rational(c6) >= lo && Rational(c6) <= hi;
  const bool fixture = c6 == 45;
  o.pass = constant && bracket && fixture;
  d << "; constant " << (constant ? "yes" : "NO") << "; n=6 value " << c6.str() << " vs bracket [" << to_double(lo) << ", "
    << to_double(hi) << "] " << (bracket ? "inside" : "OUTSIDE");
  o.detail = d.str();
  o.report = Json{{"impartial", to_json(rep)}, {"bracket", Json::array({to_json(lo), to_json(hi)})}, {"in_bracket", bracket}};
  return o;
}

Outcome blowup_falsifier(const Settings&) {
  Outcome o;
  const auto f = falsify_by_blowup(transitive_tournament(7));
  if (!f) {
    o.detail = "falsifier not applicable";
    return o;
  }
  const Rational k_k = Rational(1, 823543);
  o.pass = f->host.order() == 14 && f->density >= k_k && k_k > pow2(-21);
  o.detail = "14-vertex host density " + str(f->density) + " ~ " + std::to_string(to_double(f->density)) + " >= 7^-7 > 2^-21";
  o.report = to_json(*f);
  return o;
}

Outcome star_classification(const Settings& s) {
  Outcome o;
  o.pass = true;
  o.report = Json::object();
  std::ostringstream d;

  // Sidorenko side in homomorphism form: t >= ((n-1)/n)^k >= 1 - 5/n for k <= 4.
  Json sid = Json::array();
  Rational worst_margin = 1;
  for (int k = 1; k <= 4; ++k)
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{k, 0}, {0, k}}) {
      const StarClass cls = classify_star(a, b);
      const PropertyReport rep = check_sidorenko_scan(star(a, b), 6, scan(s), CountMode::Homomorphisms);
      bool ok = cls.sidorenko;
      for (const RatioPoint& p : rep.curve) {
        const Rational floor = 1 - Rational(sidorenko_slack, p.n);
        ok = ok && p.min_ratio >= floor;
        worst_margin = std::min(worst_margin, Rational(p.min_ratio - floor));
      }
      o.pass = o.pass && ok;
      sid.push_back(to_json(rep));
    }
  o.report["sidorenko_scans"] = sid;
  d << "(k,0),(0,k) k<=4: min ratio - (1-5/n) >= " << to_double(worst_margin) << "; ";

  Json anti = Json::array();
  for (int k = 1; k <= 2; ++k) {
    const PropertyReport rep = check_anti_exhaustive(star(k, k), 6, scan(s));
    const bool ok = classify_star(k, k).anti && rep.verdict == Verdict::HoldsUpTo;
    o.pass = o.pass && ok;
    anti.push_back(to_json(rep));
    d << "(" << k << "," << k << ") max " << str(rep.extremal_ratio) << "; ";
  }
  o.report["anti_scans"] = anti;

  const Digraph s13 = star(1, 3);
  const StarClass cls = classify_star(1, 3);
  const Rational fp = star_f_derivative_at_zero(1, 3);
  const TwoBlockParams params{120, Rational(1, 10), two_block_seed};
  const Tournament host = two_block_tournament(params);
  const Rational exact = density(s13, host);
  const McEstimate mc =
      sample_density(s13, 120, [&](int i, int j) { return host.beats(i, j); }, mc_samples, mc_seed);
  // The violation is certified by the exact density; the sampled estimate
  // must agree with it within 3 standard errors and lie above 1/16.
  const double baseline = 1.0 / 16;
  const double z_violation = (mc.mean - baseline) / mc.std_error;
  const bool mc_violation = mc.mean > baseline;
  const bool mc_agrees = std::abs(mc.mean - to_double(exact)) <= mc_sigmas * mc.std_error;
  const bool ok13 = !cls.anti && !cls.sidorenko && fp == 1 && exact > pow2(-4) && mc_violation && mc_agrees;
  o.pass = o.pass && ok13;
  d << "(1,3): f'(0)=" << str(fp) << ", n=120 c=1/10 exact " << to_double(exact) << " > 1/16, MC " << mc.mean << " +- "
    << mc.std_error << " (" << z_violation << " se above 1/16)";
  o.report["star_1_3"] = Json{{"class", cls.label()},
                              {"f_prime_zero", to_json(fp)},
                              {"host", Json{{"n", 120}, {"c", to_json(params.c)}, {"seed", two_block_seed}}},
                              {"exact_density", to_json(exact)},
                              {"mc_mean", mc.mean},
                              {"mc_std_error", mc.std_error},
                              {"mc_samples", mc.samples},
                              {"mc_violation", mc_violation},
                              {"mc_z_above_baseline", z_violation},
                              {"mc_agrees_with_exact", mc_agrees}};
  o.detail = d.str();
  return o;
}

Outcome balanced_star_formula(const Settings&) {
  Outcome o;
  o.pass = true;
  Json rows = Json::array();
  for (int k = 1; k <= 64; ++k) {
    const long long closed = iterated_balanced_star_edges_closed(k);
    const long long rec = iterated_balanced_star_edges_recursive(k);
    const int built = iterated_balanced_star(k).edge_count();
    o.pass = o.pass && closed == rec && built == closed;
    rows.push_back(Json::array({k, closed}));
  }
  o.detail = "k=1..64 closed form = recursion = constructed edge count";
  o.report = rows;
  return o;
}

Outcome pipeline(const Settings&) {
  Outcome o;
  o.pass = true;
  int checked = 0;
  Json rows = Json::array();
  for (int k = 2; k <= 6; ++k)
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        if (!transitive_minus_edge_eligible(i, j)) continue;
        const bool iso = are_isomorphic(transitive_minus_edge_pipeline(k, i, j), transitive_minus_edge(k, i, j)).has_value();
        o.pass = o.pass && iso;
        ++checked;
        rows.push_back(Json{{"k", k}, {"i", i}, {"j", j}, {"isomorphic", iso}});
      }
  o.detail = std::to_string(checked) + " eligible (k,i,j) with k<=6 isomorphic";
  o.report = rows;
  return o;
}

Outcome d2_deficit(const Settings& s) {
  const Digraph d2 = d_family(2);
  const PatternCounter counter(d2, CountMode::Labeled);
  const ScanOptions opts = scan(s);
  const int workers = resolved_threads(opts);
  struct Part {
    bool any = false;
    BigInt min_count;
    bool s_nonneg = true;
    bool diff_constant = true;
    Rational diff;
  };
  std::vector<std::vector<Part>> per_n;
  for (int n = 1; n <= 6; ++n) {
    std::vector<Part> parts(static_cast<std::size_t>(workers));
    for_each_tournament(n, opts, [&](int w, std::uint64_t, const Digraph& t) {
      // S(T) * 16 with a_xy = 2*1_xy - 1 and a_xx = -1
      long long s16 = 0;
      for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
          long long m = 0;
          for (int y = 0; y < n; ++y) {
            const int axy = x == y ? -1 : (t.has_edge(x, y) ? 1 : -1);
            const int ayz = y == z ? -1 : (t.has_edge(y, z) ? 1 : -1);
            m += axy * ayz;
          }
          s16 += m * m;
        }
      const BigInt c = counter.count(t);
      const Rational diff = Rational(c) - Rational(s16, 16);
      Part& p = parts[static_cast<std::size_t>(w)];
      p.s_nonneg = p.s_nonneg && s16 >= 0;
      if (!p.any) {
        p.any = true;
        p.min_count = c;
        p.diff = diff;
      } else {
        p.min_count = std::min(p.min_count, c);
        p.diff_constant = p.diff_constant && diff == p.diff;
      }
    });
    per_n.push_back(std::move(parts));
  }

  Outcome o;
  o.pass = true;
  Json rows = Json::array();
  Rational c_const = 0;
  std::vector<BigInt> minima;
  std::vector<Rational> diffs;
  for (int n = 1; n <= 6; ++n) {
    Part all;
    for (const Part& p : per_n[static_cast<std::size_t>(n - 1)]) {
      if (!p.any) continue;
      all.s_nonneg = all.s_nonneg && p.s_nonneg;
      all.diff_constant = all.diff_constant && p.diff_constant && (!all.any || p.diff == all.diff);
      if (!all.any || p.min_count < all.min_count) all.min_count = p.min_count;
      if (!all.any) all.diff = p.diff;
      all.any = true;
    }
    const Rational lead = Rational(ipow(BigInt(n), 4), 16);
    c_const = std::max(c_const, (lead - Rational(all.min_count)) / ipow(BigInt(n), 3));
    minima.push_back(all.min_count);
    diffs.push_back(all.diff);
    o.pass = o.pass && all.s_nonneg && all.diff_constant;
    rows.push_back(Json{{"n", n},
                        {"min_count", all.min_count.str()},
                        {"s_nonnegative", all.s_nonneg},
                        {"count_minus_s_constant", all.diff_constant},
                        {"count_minus_s", to_json(all.diff)}});
  }
  // the derived constant certifies the bound at every n
  bool bound_ok = true;
  for (int n = 1; n <= 6; ++n)
    bound_ok = bound_ok && Rational(minima[static_cast<std::size_t>(n - 1)]) >=
                               Rational(ipow(BigInt(n), 4), 16) - c_const * ipow(BigInt(n), 3);
  // regression fixtures
  const bool frozen = c_const == Rational(7, 24) && diffs[2] == Rational(-33, 16) && diffs[3] == -4 &&
                      diffs[4] == Rational(-65, 16) && diffs[5] == Rational(3, 2);
  o.pass = o.pass && bound_ok && frozen;
  o.detail = "C = " + str(c_const) + "; S(T) >= 0; N_L - S constant per n (" + str(diffs[2]) + ", " + str(diffs[3]) +
             ", " + str(diffs[4]) + ", " + str(diffs[5]) + " for n=3..6)";
  o.report = Json{{"c", to_json(c_const)}, {"rows", rows}};
  return o;
}

Outcome orientation_partition(const Settings& s) {
  const Digraph all = all_orientations_union(UndirectedGraph(3, {{0, 1}, {1, 2}}));
  std::vector<PatternCounter> counters;
  for (int c = 0; c < 4; ++c) {
    const std::vector<int> block{3 * c, 3 * c + 1, 3 * c + 2};
    counters.emplace_back(induced_subgraph(all, block), CountMode::Labeled);
  }
  const ScanOptions opts = scan(s);
  std::vector<std::uint64_t> bad(static_cast<std::size_t>(resolved_threads(opts)), 0);
  std::uint64_t hosts = 0;
  for (int n = 1; n <= 6; ++n) {
    const BigInt target = BigInt(n) * (n - 1) * (n - 2);
    for_each_tournament(n, opts, [&](int w, std::uint64_t, const Digraph& t) {
      BigInt sum = 0;
      for (const PatternCounter& c : counters) sum += c.count(t);
      if (sum != target) ++bad[static_cast<std::size_t>(w)];
    });
    hosts += std::uint64_t{1} << pair_count(n);
  }
  std::uint64_t failures = 0;
  for (auto b : bad) failures += b;
  Outcome o;
  o.pass = failures == 0;
  o.detail = std::to_string(hosts) + " tournaments, " + std::to_string(failures) + " failures";
  o.report = Json{{"hosts", hosts}, {"failures", failures}};
  return o;
}

Outcome biclique_suite(const Settings&) {
  Outcome o;
  o.pass = true;
  Json rows = Json::array();
  int covers = 0;
  for (int r = 1; r <= 5; ++r)
    for (int k = 1; k <= r; ++k) {
      const HypercubeCover h = hypercube_cover(r, k);
      const long long n = 1LL << r;
      const long long s = n * (n - 1) / 2 - h.host.edge_count();
      const long long w = cover_weight(h.cover);
      const bool ok = verify_cover(h.host, h.cover).ok && w == k * n &&
                      is_disjoint_cliques(h.host.complement(), 1 << k, 1 << (r - k)) &&
                      remark_identity_exact(n, s, w) == true && check_tt_claim(h.host, h.cover).holds;
      o.pass = o.pass && ok;
      ++covers;
      rows.push_back(Json{{"r", r}, {"k", k}, {"s", s}, {"weight", w}, {"ok", ok}});
    }
  // seeded random covers of their union graphs
  int random_ok = 0;
  for (std::uint64_t seed = 0; seed < random_cover_count; ++seed) {
    CounterRng rng(seed);
    const int n = 4 + static_cast<int>(rng.below(9));
    const int parts = 1 + static_cast<int>(rng.below(4));
    BicliqueCover c{n, {}};
    UndirectedGraph h(n);
    for (int i = 0; i < parts; ++i) {
      Biclique p{VertexSet(n), VertexSet(n)};
      for (int v = 0; v < n; ++v) {
        const auto side = rng.below(3);
        if (side == 1) p.a.insert(v);
        if (side == 2) p.b.insert(v);
      }
      for (int u : p.a.members())
        for (int v : p.b.members())
          if (!h.has_edge(u, v)) h.add_edge(u, v);
      c.parts.push_back(p);
    }
    if (verify_cover(h, c).ok && check_tt_claim(h, c).holds) ++random_ok;
  }
  o.pass = o.pass && random_ok == static_cast<int>(random_cover_count);
  o.detail = std::to_string(covers) + " hypercube covers (r<=5) verified with exact identity; T_t claim on " +
             std::to_string(random_ok) + "/" + std::to_string(random_cover_count) + " random covers";
  o.report = Json{{"hypercube", rows}, {"random_covers_holding", random_ok}};
  return o;
}

Outcome uniqueness(const Settings& s) {
  const Digraph d = unique_hom_digraph(16);
  const TwoPathCheck tp = two_path_condition(d);
  const MultiplicityProbe p = homomorphism_multiplicity_probe(d, probe_trials, probe_seed, std::max(1, s.threads));
  Outcome o;
  o.pass = tp.ok && p.designed_count == 1 && p.max_count <= 1 && p.trials == probe_trials;
  o.detail = std::string("two-path ") + (tp.ok ? "ok" : "FAILS") + ", designed host " + std::to_string(p.designed_count) +
             ", max over " + std::to_string(p.trials) + " random hosts " + std::to_string(p.max_count);
  o.report = Json{{"two_path", to_json(tp)}, {"probe", to_json(p)}};
  return o;
}

Outcome quasirandomness(const Settings&) {
  Outcome o;
  const EpsilonResult tt10 = quasirandom_epsilon_exact(Tournament::transitive(10));
  const bool eps_ok = tt10.epsilon == Rational(1, 4);

  const Tournament lo = Tournament::transitive(5), hi = reverse(lo);
  const Digraph tt3 = transitive_tournament(3);
  const BigInt h_lo = count_homomorphisms(tt3, lo), h_hi = count_homomorphisms(tt3, hi);
  const InterpolationResult walk = interpolate_to_density(tt3, lo, hi, VertexSet(5), Rational(h_lo));
  const BigInt spec_bound = 9 * 125;
  bool steps_ok = walk.max_delta <= walk.step_bound && walk.max_delta <= spec_bound;
  // every integer target between the trace extremes is crossed by a consecutive pair
  BigInt t_min = walk.trace.front().h, t_max = t_min;
  for (const auto& st : walk.trace) {
    t_min = std::min(t_min, st.h);
    t_max = std::max(t_max, st.h);
  }
  bool brackets = walk.crossing_step == std::size_t{0};
  for (BigInt target = t_min; target <= t_max; ++target) {
    bool hit = walk.trace.front().h == target;
    for (std::size_t i = 1; i < walk.trace.size() && !hit; ++i) {
      const BigInt a = walk.trace[i - 1].h, b = walk.trace[i].h;
      hit = (a <= target && target <= b) || (b <= target && target <= a);
    }
    brackets = brackets && hit;
  }

  // a walk that changes h: TT5 to the regular tournament
  const InterpolationResult to_regular =
      interpolate_to_density(tt3, lo, regular5(), VertexSet(5), Rational(count_homomorphisms(tt3, regular5())));
  steps_ok = steps_ok && to_regular.max_delta <= to_regular.step_bound && to_regular.crossing_step.has_value();

  bool invariant = true;
  for (std::uint64_t seed = 0; seed < invariance_hosts; ++seed) {
    const Tournament t = testing::random_tournament(12, seed);
    const Rational e = quasirandom_epsilon_exact(t).epsilon;
    const auto perm = testing::random_permutation(12, derive_seed(seed, 1));
    invariant = invariant && quasirandom_epsilon_exact(Tournament(relabel(t.graph(), perm))).epsilon == e &&
                quasirandom_epsilon_exact(reverse(t)).epsilon == e;
  }
  o.pass = eps_ok && steps_ok && brackets && invariant && h_lo == h_hi;
  o.detail = "eps(TT10) = " + str(tt10.epsilon) + "; TT3 walk h " + h_lo.str() + " -> " + h_hi.str() + ", " +
             std::to_string(walk.trace.size() - 1) + " flips, max |dh| " + walk.max_delta.str() + " <= " +
             walk.step_bound.str() + " <= 1125; TT5 -> regular max |dh| " + to_regular.max_delta.str() +
             "; invariance on " + std::to_string(invariance_hosts) + " hosts " +
             (invariant ? "ok" : "FAILS");
  o.report = Json{{"epsilon_tt10", to_json(tt10)}, {"interpolation", to_json(walk)},
                  {"interpolation_to_regular", to_json(to_regular)}, {"invariance_hosts", invariance_hosts},
                  {"invariant", invariant}};
  return o;
}

std::vector<Criterion> criteria() {
  return {
      {1, "oracle equivalence", 120, oracle_equivalence},
      {2, "directed-path bound", 60, path_bound},
      {3, "cycle dichotomy, anti side", 600, cycle_dichotomy},
      {4, "balanced-star strong anti", 600, balanced_star},
      {5, "impartiality", 120, impartiality},
      {6, "blowup falsifier", 60, blowup_falsifier},
      {7, "star classification", 600, star_classification},
      {8, "iterated balanced star edge formula", 10, balanced_star_formula},
      {9, "transitive-minus-edge pipeline", 60, pipeline},
      {10, "D2 deficit", 180, d2_deficit},
      {11, "orientation partition", 600, orientation_partition},
      {12, "biclique suite", 60, biclique_suite},
      {13, "uniqueness construction", 600, uniqueness},
      {14, "quasirandomness", 600, quasirandomness},
  };
}

struct Line {
  int id;
  std::string title;
  bool pass;
  double seconds;
  double limit;
  std::string detail;
};

void print(const Line& l) {
  std::printf("criterion %2d  %s  %7.2fs  %s: %s\n", l.id, l.pass ? "PASS" : "FAIL", l.seconds, l.title.c_str(),
              l.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  Settings settings;
  std::string report_path;
  std::vector<int> only;
  app.add_option("--threads", settings.threads, "Scan threads (0 = hardware)");
  app.add_option("--report", report_path, "Write all criterion reports as JSON");
  app.add_option("--only", only, "Run only these criteria (no determinism rerun)");
  CLI11_PARSE(app, argc, argv);

  using clock = std::chrono::steady_clock;
  std::vector<Line> lines;
  std::vector<std::string> dumps;
  Json all = Json::array();
  const auto list = criteria();
  for (const Criterion& c : list) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = clock::now();
    Outcome out;
    try {
      out = c.run(settings);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    if (secs > c.limit_seconds) {
      out.pass = false;
      out.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + "s limit)";
    }
    Line l{c.id, c.title, out.pass, secs, c.limit_seconds, out.detail};
    print(l);
    lines.push_back(l);
    dumps.push_back(out.report.dump());
    all.push_back(Json{{"criterion", c.id}, {"title", c.title}, {"pass", out.pass}, {"detail", out.detail},
                       {"report", std::move(out.report)}});
  }

  if (only.empty()) {
    // same seeds, different thread count
    Settings again = settings;
    again.threads = settings.threads == 1 ? 2 : 1;
    const auto t0 = clock::now();
    std::size_t identical = 0;
    std::vector<int> differing;
    for (std::size_t i = 0; i < list.size(); ++i) {
      std::string dump;
      try {
        dump = list[i].run(again).report.dump();
      } catch (const std::exception& e) {
        dump = std::string("error: ") + e.what();
      }
      if (dump == dumps[i]) ++identical;
      else differing.push_back(list[i].id);
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    std::string detail = std::to_string(identical) + "/" + std::to_string(list.size()) +
                         " reports byte-identical on re-execution with threads=" + std::to_string(again.threads);
    for (int id : differing) detail += " differs:" + std::to_string(id);
    Line l{15, "determinism", differing.empty(), secs, 0, detail};
    print(l);
    lines.push_back(l);
    all.push_back(Json{{"criterion", 15}, {"title", l.title}, {"pass", l.pass}, {"detail", detail}});
  }

  int passed = 0, unexpected = 0;
  std::string expected_failures;
  for (const Line& l : lines) {
    if (l.pass) ++passed;
    else if (known_unattainable.count(l.id)) expected_failures += " " + std::to_string(l.id);
    else ++unexpected;
  }
  std::printf("%d/%zu criteria passed; known unattainable:%s; unexpected failures: %d\n", passed, lines.size(),
              expected_failures.empty() ? " none" : expected_failures.c_str(), unexpected);

  if (!report_path.empty()) {
    std::ofstream f(report_path);
    f << all.dump(2) << "\n";
  }
  return unexpected == 0 ? 0 : 1;
}
