#include "tsid/property.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <mutex>
#include <thread>

#include "tsid/errors.hpp"
#include "tsid/quasirandom.hpp"
#include "tsid/random.hpp"

namespace tsid {

namespace {

struct Extremes {
  bool any = false;
  std::uint64_t hosts = 0;
  BigInt max_value, min_value;
  std::uint64_t max_code = 0, min_code = 0;
  std::vector<int> max_anchor;

  void offer(const BigInt& value, std::uint64_t code, const std::vector<int>* anchor = nullptr) {
    ++hosts;
    if (!any || value > max_value || (value == max_value && code < max_code)) {
      max_value = value;
      max_code = code;
      if (anchor != nullptr) max_anchor = *anchor;
    }
    if (!any || value < min_value || (value == min_value && code < min_code)) {
      min_value = value;
      min_code = code;
    }
    any = true;
  }

  void merge(const Extremes& o) {
    if (!o.any) return;
    const std::uint64_t h = hosts + o.hosts;
    if (!any) {
      *this = o;
      return;
    }
    if (o.max_value > max_value || (o.max_value == max_value && o.max_code < max_code)) {
      max_value = o.max_value;
      max_code = o.max_code;
      max_anchor = o.max_anchor;
    }
    if (o.min_value < min_value || (o.min_value == min_value && o.min_code < min_code)) {
      min_value = o.min_value;
      min_code = o.min_code;
    }
    hosts = h;
  }
};

Rational safe_ratio(const BigInt& v, const Rational& bound) {
  return bound == 0 ? Rational(0) : Rational(v) / bound;
}

RatioPoint point_from(int n, const Extremes& e, const Rational& bound) {
  RatioPoint p;
  p.n = n;
  p.hosts = e.hosts;
  p.max_value = e.max_value;
  p.min_value = e.min_value;
  p.bound = bound;
  p.max_ratio = safe_ratio(e.max_value, bound);
  p.min_ratio = safe_ratio(e.min_value, bound);
  p.argmax_code = e.max_code;
  p.argmin_code = e.min_code;
  return p;
}

void guard_exhaustive(int n_max, int guard, const char* what) {
  if (n_max > guard)
    throw SizeGuardError(std::string(what) + ": exhaustive enumeration is limited to n <= " + std::to_string(guard));
  if (n_max < 1) throw PreconditionError(std::string(what) + ": n_max must be at least 1");
}

bool sorted_scores(const Digraph& g) {
  for (int v = 1; v < g.order(); ++v)
    if (g.out_degree(v - 1) > g.out_degree(v)) return false;
  return true;
}

PropertyReport exhaustive_scan(const Digraph& d, int n_max, const ScanOptions& opts, Property property, CountMode mode) {
  guard_exhaustive(n_max, exhaustive_size_guard, "exhaustive scan");
  const PatternCounter counter(d, mode);
  PropertyReport r;
  r.digraph = d;
  r.property = property;
  r.mode = mode;
  r.regime.kind = Regime::Kind::Exhaustive;
  r.regime.n_max = n_max;
  const int workers = resolved_threads(opts);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Extremes> part(static_cast<std::size_t>(workers));
    for_each_tournament(n, opts, [&](int w, std::uint64_t code, const Digraph& t) {
      part[static_cast<std::size_t>(w)].offer(counter.count(t, {}, opts.count), code);
    });
    Extremes all;
    for (const auto& e : part) all.merge(e);
    r.curve.push_back(point_from(n, all, anti_bound(d, n)));
  }
  return r;
}

}  // namespace

int resolved_threads(const ScanOptions& opts) {
  if (opts.threads > 0) return opts.threads;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void for_each_tournament(int n, const ScanOptions& opts,
                         const std::function<void(int, std::uint64_t, const Digraph&)>& visit) {
  if (pair_count(n) > 40) throw SizeGuardError("tournament enumeration beyond n = 9 is not supported");
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(resolved_threads(opts)), total));
  auto run = [&](int w) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
    const std::uint64_t hi = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
    for (std::uint64_t code = lo; code < hi; ++code) {
      const Tournament t = Tournament::from_code(n, code);
      if (opts.dedup && !sorted_scores(t.graph())) continue;
      visit(w, code, t.graph());
    }
  };
  if (workers <= 1) {
    run(0);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex m;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        run(w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(m);
        if (!failure) failure = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

PropertyReport check_anti_exhaustive(const Digraph& d, int n_max, const ScanOptions& opts) {
  PropertyReport r = exhaustive_scan(d, n_max, opts, Property::AntiSidorenkoUpTo, CountMode::Labeled);
  r.extremal_ratio = 0;
  for (const RatioPoint& p : r.curve) {
    r.extremal_ratio = std::max(r.extremal_ratio, p.max_ratio);
    if (p.max_ratio > 1 && !r.witness) {
      r.verdict = Verdict::ViolatedBy;
      r.witness = Tournament::from_code(p.n, p.argmax_code);
      r.witness_ratio = p.max_ratio;
    }
  }
  if (opts.dedup) r.notes.push_back("score-sorted representatives only");
  return r;
}

PropertyReport check_sidorenko_scan(const Digraph& d, int n_max, const ScanOptions& opts, CountMode mode) {
  PropertyReport r = exhaustive_scan(d, n_max, opts, Property::SidorenkoRatioScan, mode);
  r.verdict = Verdict::ScanOnly;
  const int n_from = mode == CountMode::Labeled ? d.order() : 1;
  bool first = true;
  for (const RatioPoint& p : r.curve) {
    if (p.n < n_from) continue;
    if (first || p.min_ratio < r.extremal_ratio) r.extremal_ratio = p.min_ratio;
    first = false;
  }
  r.notes.push_back(mode == CountMode::Labeled ? "minimum ratio over n >= v(D); no verdict at fixed n"
                                                : "minimum ratio over all n; no verdict at fixed n");
  if (opts.dedup) r.notes.push_back("score-sorted representatives only");
  return r;
}

PropertyReport check_impartial(const Digraph& d, int n_max, const CountOptions& opts) {
  const ImpartialResult res = is_impartial_upto(d, n_max, opts);
  PropertyReport r;
  r.digraph = d;
  r.property = Property::Impartial;
  r.mode = CountMode::Labeled;
  r.regime.kind = Regime::Kind::Exhaustive;
  r.regime.n_max = n_max;
  for (std::size_t n = 0; n < res.count_by_n.size(); ++n) {
    const int ni = static_cast<int>(n);
    Extremes e;
    e.offer(res.count_by_n[n], 0);
    e.hosts = std::uint64_t{1} << pair_count(ni);
    r.curve.push_back(point_from(ni, e, anti_bound(d, ni)));
  }
  if (!r.curve.empty()) r.extremal_ratio = r.curve.back().max_ratio;
  if (!res.impartial) {
    r.verdict = Verdict::ViolatedBy;
    r.witness = res.witness->second;
    r.witness_ratio = safe_ratio(count_labeled(d, *r.witness, opts).value, anti_bound(d, r.witness->order()));
    r.notes.push_back("witness count differs from the all-forward host (code 0) of the same size");
  }
  return r;
}

bool two_block_beats(const TwoBlockParams& p, int i, int j) {
  if (i == j) return false;
  const int lo = std::min(i, j), hi = std::max(i, j);
  const Rational cn = p.c * p.n;
  const BigInt cut_big = boost::multiprecision::numerator(cn) / boost::multiprecision::denominator(cn);
  const int cut = cut_big.convert_to<int>();
  bool forward;
  if (lo < cut && hi >= cut) forward = true;
  else forward = (draw(p.seed, pair_index(p.n, lo, hi)) & 1U) != 0;
  return forward == (i == lo);
}

Tournament two_block_tournament(const TwoBlockParams& p) {
  if (p.c < 0 || p.c > 1) throw PreconditionError("two_block_tournament: c must lie in [0, 1]");
  if (p.n < 0) throw PreconditionError("two_block_tournament: negative n");
  DigraphBuilder b(p.n);
  for (int i = 0; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j) {
      if (two_block_beats(p, i, j)) b.add_edge(i, j);
      else b.add_edge(j, i);
    }
  return Tournament(std::move(b).build());
}

Tournament HostFamily::host(int n) const {
  switch (kind) {
    case Kind::Transitive:
      return Tournament::transitive(n);
    case Kind::Blowup: {
      const int k = base.order();
      if (k == 0 || n % k != 0)
        throw PreconditionError("blowup family: host size " + std::to_string(n) + " is not a multiple of " + std::to_string(k));
      return fill_to_tournament(blowup(base, n / k));
    }
    case Kind::TwoBlock:
      return two_block_tournament({n, c, seed});
  }
  throw PreconditionError("unknown host family");
}

std::string HostFamily::name() const {
  switch (kind) {
    case Kind::Transitive: return "transitive";
    case Kind::Blowup: return "blowup";
    case Kind::TwoBlock: return "two-block";
  }
  return "?";
}

PropertyReport check_anti_on_family(const Digraph& d, const HostFamily& family, const std::vector<int>& n_list,
                                    CountMode mode, const CountOptions& opts) {
  PropertyReport r;
  r.digraph = d;
  r.property = Property::AntiSidorenkoUpTo;
  r.mode = mode;
  r.regime.kind = Regime::Kind::Family;
  r.regime.family = family.name();
  for (int n : n_list) r.regime.params.push_back(std::to_string(n));
  if (family.kind == HostFamily::Kind::TwoBlock) {
    r.regime.params.push_back("c=" + family.c.str());
    r.regime.seed = family.seed;
  }
  const PatternCounter counter(d, mode);
  bool first = true;
  for (int n : n_list) {
    const Tournament t = family.host(n);
    const BigInt value = counter.count(t.graph(), {}, opts);
    Extremes e;
    e.offer(value, 0);
    RatioPoint p = point_from(n, e, anti_bound(d, n));
    if (first || p.max_ratio > r.extremal_ratio) r.extremal_ratio = p.max_ratio;
    first = false;
    if (p.max_ratio > 1 && !r.witness) {
      r.verdict = Verdict::ViolatedBy;
      r.witness = t;
      r.witness_ratio = p.max_ratio;
    }
    r.curve.push_back(std::move(p));
  }
  if (mode == CountMode::Homomorphisms) r.notes.push_back("homomorphism counts against 2^-e n^v");
  return r;
}

std::optional<BlowupFalsifier> falsify_by_blowup(const Digraph& d, int m, const CountOptions& opts) {
  const int k = d.order();
  if (k == 0) return std::nullopt;
  // e >= k log2 k  <=>  2^e >= k^k
  if (ipow(BigInt(2), static_cast<unsigned>(d.edge_count())) < ipow(BigInt(k), static_cast<unsigned>(k))) return std::nullopt;
  BlowupFalsifier f{fill_to_tournament(blowup(d, m)), m, {}, Rational(BigInt(1), ipow(BigInt(k), static_cast<unsigned>(k)))};
  f.density = density(d, f.host, opts);
  if (f.density < f.threshold) throw Error("blowup host density fell below k^-k; counting is inconsistent");
  return f;
}

PropertyReport check_strong_anti(const Digraph& d, const VertexSet& pinned, int n_max, const ScanOptions& opts) {
  guard_exhaustive(n_max, 6, "strong anti check");
  const auto pins = pinned.members();
  PinnedPattern probe{d, pinned, {}};
  probe.anchor.assign(pins.size(), 0);
  for (std::size_t i = 0; i < pins.size(); ++i) probe.anchor[i] = static_cast<int>(i);
  {
    // independence and shape checks; anchor range is checked per host
    PinnedPattern shape = probe;
    shape.validate();
  }
  const PatternCounter counter(d, CountMode::Labeled, pins);
  PropertyReport r;
  r.digraph = d;
  r.property = Property::StrongAntiUpTo;
  r.mode = CountMode::Labeled;
  r.pinned = pins;
  r.regime.kind = Regime::Kind::Exhaustive;
  r.regime.n_max = n_max;
  r.extremal_ratio = 0;
  const int workers = resolved_threads(opts);
  const std::size_t p = pins.size();
  for (int n = 1; n <= n_max; ++n) {
    if (static_cast<int>(p) > n) continue;
    std::vector<Extremes> part(static_cast<std::size_t>(workers));
    for_each_tournament(n, opts, [&](int w, std::uint64_t code, const Digraph& t) {
      std::vector<int> anchor(p, 0);
      std::vector<char> used(static_cast<std::size_t>(n), 0);
      // odometer over injective anchors
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == p) {
          part[static_cast<std::size_t>(w)].offer(counter.count(t, anchor, opts.count), code, &anchor);
          return;
        }
        for (int v = 0; v < n; ++v) {
          if (used[static_cast<std::size_t>(v)]) continue;
          used[static_cast<std::size_t>(v)] = 1;
          anchor[i] = v;
          rec(i + 1);
          used[static_cast<std::size_t>(v)] = 0;
        }
      };
      rec(0);
    });
    Extremes all;
    for (const auto& e : part) all.merge(e);
    RatioPoint pt = point_from(n, all, anti_bound(d, n, static_cast<int>(p)));
    r.extremal_ratio = std::max(r.extremal_ratio, pt.max_ratio);
    if (pt.max_ratio > 1 && !r.witness) {
      r.verdict = Verdict::ViolatedBy;
      r.witness = Tournament::from_code(n, all.max_code);
      r.witness_anchor = all.max_anchor;
      r.witness_ratio = pt.max_ratio;
    }
    r.curve.push_back(std::move(pt));
  }
  return r;
}

std::string StarClass::label() const {
  if (sidorenko && anti) return "both";
  if (sidorenko) return "sidorenko";
  if (anti) return "anti-sidorenko";
  return "neither";
}

StarClass classify_star(int d_out, int d_in) {
  if (d_out < 0 || d_in < 0 || d_out + d_in < 1) throw PreconditionError("classify_star: need d_out + d_in >= 1");
  return {std::min(d_out, d_in) == 0, std::abs(d_out - d_in) <= 1};
}

Rational star_f(const Rational& c, int d_out, int d_in) {
  auto pw = [](const Rational& x, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
  };
  return pw(c, 1 + d_in) * pw(2 - c, d_out) + pw(1 - c, 1 + d_out) * pw(1 + c, d_in);
}

Rational star_expected_density(const Rational& c, int d_out, int d_in) {
  return star_f(c, d_out, d_in) * pow2(-(d_out + d_in));
}

Rational star_f_derivative_at_zero(int d_out, int d_in) {
  // degree of f is at most d_out + d_in + 1
  const int deg = d_out + d_in + 1;
  std::vector<Rational> diff;
  for (int x = 0; x <= deg; ++x) diff.push_back(star_f(Rational(x), d_out, d_in));
  Rational result = 0;
  for (int k = 1; k <= deg; ++k) {
    for (int i = 0; i + k <= deg; ++i) diff[static_cast<std::size_t>(i)] = diff[static_cast<std::size_t>(i) + 1] - diff[static_cast<std::size_t>(i)];
    const Rational term = diff[0] / k;
    result += k % 2 == 1 ? term : -term;
  }
  return result;
}

McEstimate sample_density(const Digraph& d, int n, const std::function<bool(int, int)>& beats,
                          std::uint64_t samples, std::uint64_t seed) {
  if (n <= 0 || samples == 0) throw PreconditionError("sample_density: need n >= 1 and samples >= 1");
  const auto edges = d.edges();
  CounterRng rng(seed);
  std::vector<int> map(static_cast<std::size_t>(d.order()));
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (auto& x : map) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    bool ok = true;
    for (const Edge& e : edges)
      if (!beats(map[static_cast<std::size_t>(e.from)], map[static_cast<std::size_t>(e.to)])) {
        ok = false;
        break;
      }
    if (ok) ++hits;
  }
  McEstimate m;
  m.samples = samples;
  m.mean = static_cast<double>(hits) / static_cast<double>(samples);
  m.std_error = std::sqrt(m.mean * (1 - m.mean) / static_cast<double>(samples));
  return m;
}

InterpolationResult interpolate_to_density(const Digraph& d, const Tournament& t_lo, const Tournament& t_hi,
                                           const VertexSet& exclude, const Rational& target, const CountOptions& opts) {
  const int n = t_lo.order();
  if (t_hi.order() != n) throw PreconditionError("interpolate: endpoint tournaments differ in size");
  const PatternCounter counter(d, CountMode::Homomorphisms);
  const BigInt h_lo = counter.count(t_lo.graph(), {}, opts);
  const BigInt h_hi = counter.count(t_hi.graph(), {}, opts);
  const Rational lo = Rational(std::min(h_lo, h_hi)), hi = Rational(std::max(h_lo, h_hi));
  if (target < lo || target > hi)
    throw PreconditionError("interpolate: target " + target.str() + " not bracketed by h = " + h_lo.str() + " and " + h_hi.str());
  const bool upward = h_lo <= h_hi;
  auto crosses = [&](const BigInt& h) { return upward ? Rational(h) >= target : Rational(h) <= target; };

  InterpolationResult r{t_lo, std::nullopt, {}, 0, 0};
  r.step_bound = n >= 2 || d.order() >= 2
                     ? BigInt(d.order()) * d.order() * (d.order() >= 2 ? ipow(BigInt(n), static_cast<unsigned>(d.order() - 2)) : BigInt(0))
                     : BigInt(0);
  r.trace.push_back({-1, -1, h_lo, 0});
  if (crosses(h_lo)) r.crossing_step = 0;

  Tournament cur = t_lo;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (exclude.contains(i) || exclude.contains(j)) continue;
      if (cur.beats(i, j) == t_hi.beats(i, j)) continue;
      cur = flip_pair(cur, i, j);
      const BigInt h = counter.count(cur.graph(), {}, opts);
      const BigInt prev = r.trace.back().h;
      const BigInt delta = h >= prev ? BigInt(h - prev) : BigInt(prev - h);
      r.max_delta = std::max(r.max_delta, delta);
      r.trace.push_back({i, j, h, delta});
      if (!r.crossing_step && crosses(h)) {
        r.crossing_step = r.trace.size() - 1;
        r.crossing = cur;
      }
    }
  return r;
}

std::vector<ForcingRow> forcing_probe(const Digraph& d, const std::vector<std::pair<std::string, Tournament>>& hosts,
                                      std::uint64_t seed, std::uint64_t eps_samples, const CountOptions& opts) {
  std::vector<ForcingRow> rows;
  const Rational baseline = pow2(-d.edge_count());
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    const auto& [name, t] = hosts[i];
    ForcingRow row;
    row.n = t.order();
    row.host = name;
    row.density = density(d, t, opts);
    row.deviation = row.density >= baseline ? Rational(row.density - baseline) : Rational(baseline - row.density);
    if (t.order() <= quasirandom_exact_guard) {
      row.epsilon = to_double(quasirandom_epsilon_exact(t).epsilon);
      row.epsilon_exact = true;
    } else {
      row.epsilon = to_double(quasirandom_epsilon_sampled(t, eps_samples, derive_seed(seed, i)).epsilon);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace tsid
