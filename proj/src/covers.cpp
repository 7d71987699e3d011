#include "tsid/covers.hpp"

#include <bit>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "tsid/errors.hpp"
#include "tsid/numeric.hpp"
#include "tsid/random.hpp"

namespace tsid {

namespace {

bool is_power_of_two(long long x) { return x > 0 && std::has_single_bit(static_cast<unsigned long long>(x)); }

int log2_exact(long long x) { return std::countr_zero(static_cast<unsigned long long>(x)); }

}  // namespace

CoverCheck verify_cover(const UndirectedGraph& h, const BicliqueCover& c) {
  if (c.host_n != h.order())
    throw PreconditionError("cover is for " + std::to_string(c.host_n) + " vertices, host has " + std::to_string(h.order()));
  CoverCheck r;
  const int n = h.order();
  UndirectedGraph covered(n);
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    const Biclique& p = c.parts[i];
    if (p.a.universe() != n || p.b.universe() != n) throw PreconditionError("biclique part over the wrong vertex count");
    const auto as = p.a.members();
    const auto bs = p.b.members();
    for (int a : as)
      if (p.b.contains(a)) {
        r.ok = false;
        if (!r.overlapping_part) r.overlapping_part = static_cast<int>(i);
      }
    for (int a : as)
      for (int b : bs) {
        if (a == b) continue;
        if (!h.has_edge(a, b)) {
          r.ok = false;
          if (!r.extraneous) r.extraneous = std::pair{std::min(a, b), std::max(a, b)};
          continue;
        }
        if (!covered.has_edge(a, b)) covered.add_edge(a, b);
      }
  }
  for (const auto& [u, v] : h.edges())
    if (!covered.has_edge(u, v)) {
      r.ok = false;
      r.uncovered = std::pair{u, v};
      break;
    }
  return r;
}

long long cover_weight(const BicliqueCover& c) {
  long long w = 0;
  for (const Biclique& p : c.parts) w += p.a.size() + p.b.size();
  return w;
}

std::vector<int> coverage_multiplicity(const BicliqueCover& c) {
  std::vector<int> f(static_cast<std::size_t>(c.host_n), 0);
  for (const Biclique& p : c.parts) {
    for (int v : p.a.members()) ++f[static_cast<std::size_t>(v)];
    for (int v : p.b.members()) ++f[static_cast<std::size_t>(v)];
  }
  return f;
}

std::map<int, int> tt_profile(const BicliqueCover& c) {
  std::map<int, int> profile;
  for (int t : coverage_multiplicity(c)) ++profile[t];
  return profile;
}

TtClaimReport check_tt_claim(const UndirectedGraph& h, const BicliqueCover& c) {
  const CoverCheck check = verify_cover(h, c);
  if (!check.ok) throw PreconditionError("check_tt_claim: the cover does not verify against the host");
  TtClaimReport r;
  const long long n = h.order();
  r.s = n * (n - 1) / 2 - h.edge_count();
  const auto profile = tt_profile(c);
  const int parts = static_cast<int>(c.parts.size());
  for (int t = 1; t <= parts; ++t) {
    TtRow row;
    row.t = t;
    const auto it = profile.find(t);
    row.size = it == profile.end() ? 0 : it->second;
    // |T_t| <= 2^t + sqrt(s 2^{t+1})  <=>  |T_t| <= 2^t or (|T_t| - 2^t)^2 <= s 2^{t+1}
    const BigInt two_t = ipow(BigInt(2), static_cast<unsigned>(t));
    const BigInt excess = BigInt(row.size) - two_t;
    row.holds = excess <= 0 || excess * excess <= BigInt(r.s) * two_t * 2;
    row.bound = std::ldexp(1.0, t) + std::sqrt(static_cast<double>(r.s) * std::ldexp(1.0, t + 1));
    row.slack = row.bound - row.size;
    r.holds = r.holds && row.holds;
    r.rows.push_back(row);
  }
  return r;
}

double leading_lower_bound(long long n, long long s) {
  if (n < 1 || s < 0) throw PreconditionError("leading_lower_bound: need n >= 1 and s >= 0");
  const double dn = static_cast<double>(n);
  return dn * std::log2(dn) - dn * std::log2((static_cast<double>(s) + dn) / dn);
}

double remark_bound(long long n, long long s) {
  if (n < 1 || s < 0) throw PreconditionError("remark_bound: need n >= 1 and s >= 0");
  const double dn = static_cast<double>(n);
  return dn * std::log2(dn) - dn * std::log2((dn + 2.0 * static_cast<double>(s)) / dn);
}

std::optional<bool> remark_identity_exact(long long n, long long s, long long weight) {
  if (!is_power_of_two(n) || (n + 2 * s) % n != 0) return std::nullopt;
  const long long q = (n + 2 * s) / n;
  if (!is_power_of_two(q)) return std::nullopt;
  return weight == n * log2_exact(n) - n * log2_exact(q);
}

bool is_disjoint_cliques(const UndirectedGraph& g, int count, int size) {
  const auto comps = g.components();
  if (static_cast<int>(comps.size()) != count) return false;
  for (const auto& comp : comps) {
    if (static_cast<int>(comp.size()) != size) return false;
    for (int v : comp)
      if (g.degree(v) != size - 1) return false;
  }
  return true;
}

HypercubeCover hypercube_cover(int r, int k) {
  if (r > hypercube_guard) throw SizeGuardError("hypercube_cover: r above " + std::to_string(hypercube_guard));
  if (k < 1 || k > r) throw PreconditionError("hypercube_cover: need 1 <= k <= r");
  const int n = 1 << r;
  HypercubeCover out{UndirectedGraph(n), BicliqueCover{n, {}}};
  for (int i = 0; i < k; ++i) {
    Biclique p{VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v) {
      if ((v >> i) & 1) p.b.insert(v);
      else p.a.insert(v);
    }
    out.cover.parts.push_back(std::move(p));
  }
  const int low = (1 << k) - 1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (((u ^ v) & low) != 0) out.host.add_edge(u, v);
  if (!is_disjoint_cliques(out.host.complement(), 1 << k, 1 << (r - k)))
    throw Error("hypercube_cover: complement is not 2^k disjoint cliques");
  return out;
}

TwoPathCheck two_path_condition(const Digraph& d) {
  TwoPathCheck r;
  const int n = d.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (d.adjacent(u, v)) continue;
      const auto ou = d.out_row(u), iu = d.in_row(u), ov = d.out_row(v), iv = d.in_row(v);
      bool joined = false;
      for (std::size_t w = 0; w < ou.size() && !joined; ++w) joined = ((ou[w] & iv[w]) | (ov[w] & iu[w])) != 0;
      if (!joined) {
        r.ok = false;
        r.bad_pair = std::pair{u, v};
        return r;
      }
    }
  return r;
}

MultiplicityProbe homomorphism_multiplicity_probe(const Digraph& d, std::uint64_t trials, std::uint64_t seed,
                                                  int threads, const CountOptions& opts) {
  if (trials < 1) throw PreconditionError("multiplicity probe: trials must be at least 1");
  const int k = d.order();
  const PatternCounter counter(d, CountMode::Homomorphisms);
  CountOptions capped = opts;
  capped.stop_at = 2;
  auto capped_count = [&](const Tournament& t) {
    const BigInt c = counter.count(t.graph(), {}, capped);
    return c >= 2 ? 2 : c.convert_to<int>();
  };

  MultiplicityProbe r;
  r.trials = trials;
  r.counts.assign(trials, 0);
  r.designed_count = capped_count(fill_to_tournament(d));

  const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(threads, 1)), trials));
  std::exception_ptr failure;
  std::mutex m;
  auto run = [&](int w) {
    try {
      for (std::uint64_t t = static_cast<std::uint64_t>(w); t < trials; t += static_cast<std::uint64_t>(workers))
        r.counts[t] = capped_count(fill_to_tournament(Digraph(k), FillStrategy::seeded(derive_seed(seed, t))));
    } catch (...) {
      std::lock_guard<std::mutex> lock(m);
      if (!failure) failure = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  for (std::uint64_t t = 0; t < trials; ++t)
    if (r.counts[t] > r.max_count) {
      r.max_count = r.counts[t];
      r.argmax_trial = t;
    }
  return r;
}

std::string to_bcv(const BicliqueCover& c) {
  std::string out = std::to_string(c.host_n) + " " + std::to_string(c.parts.size()) + "\n";
  for (const Biclique& p : c.parts) {
    out += std::to_string(p.a.size());
    for (int v : p.a.members()) out += " " + std::to_string(v);
    out += " | " + std::to_string(p.b.size());
    for (int v : p.b.members()) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

namespace {

VertexSet parse_side(std::istringstream& in, int n, int line, const char* side) {
  long long count = 0;
  if (!(in >> count) || count < 0 || count > n)
    throw ParseError(line, std::string("bad member count for ") + side);
  VertexSet s(n);
  for (long long i = 0; i < count; ++i) {
    long long v = 0;
    if (!(in >> v)) throw ParseError(line, std::string("expected ") + std::to_string(count) + " members for " + side);
    if (v < 0 || v >= n) throw ParseError(line, "vertex " + std::to_string(v) + " out of range");
    if (s.contains(static_cast<int>(v))) throw ParseError(line, "vertex " + std::to_string(v) + " repeated");
    s.insert(static_cast<int>(v));
  }
  return s;
}

}  // namespace

BicliqueCover parse_bcv(std::string_view text) {
  std::istringstream all{std::string(text)};
  std::string line;
  int number = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(all, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line.front() == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(number + 1, "missing BCV/1 header 'n k'");
  std::istringstream header(line);
  long long n = 0, k = 0;
  std::string rest;
  if (!(header >> n >> k) || n < 0 || k < 0 || n > 1'000'000 || (header >> rest))
    throw ParseError(number, "expected header 'n k'");
  BicliqueCover c;
  c.host_n = static_cast<int>(n);
  for (long long i = 0; i < k; ++i) {
    if (!next_line()) throw ParseError(number + 1, "expected " + std::to_string(k) + " biclique lines");
    std::istringstream in(line);
    Biclique p;
    p.a = parse_side(in, c.host_n, number, "A");
    std::string bar;
    if (!(in >> bar) || bar != "|") throw ParseError(number, "expected '|' between the parts");
    p.b = parse_side(in, c.host_n, number, "B");
    if (in >> rest) throw ParseError(number, "trailing text '" + rest + "'");
    c.parts.push_back(std::move(p));
  }
  return c;
}

}  // namespace tsid
