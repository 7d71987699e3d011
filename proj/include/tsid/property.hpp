#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tsid/count_kernel.hpp"
#include "tsid/counting.hpp"
#include "tsid/digraph.hpp"
#include "tsid/numeric.hpp"

namespace tsid {

enum class Property { AntiSidorenkoUpTo, SidorenkoRatioScan, StrongAntiUpTo, Impartial, QuasirandomDirection };

/// ScanOnly is used where no boolean verdict is meaningful at fixed n
/// (Sidorenko ratio scans, quasirandomness measurements).
enum class Verdict { HoldsUpTo, ViolatedBy, ScanOnly };

struct Regime {
  enum class Kind { Exhaustive, Family, Sampled };
  Kind kind = Kind::Exhaustive;
  int n_max = 0;
  std::string family;
  std::vector<std::string> params;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};

/// Extremal values at one host size.
struct RatioPoint {
  int n = 0;
  std::uint64_t hosts = 0;
  BigInt max_value;
  BigInt min_value;
  Rational bound;
  Rational max_ratio;
  Rational min_ratio;
  std::uint64_t argmax_code = 0;  // exhaustive scans only
  std::uint64_t argmin_code = 0;
};

struct PropertyReport {
  Digraph digraph;
  std::string provenance;
  Property property = Property::AntiSidorenkoUpTo;
  CountMode mode = CountMode::Labeled;
  std::vector<int> pinned;
  Regime regime;
  Verdict verdict = Verdict::HoldsUpTo;
  /// max value/bound for anti checks, min for Sidorenko scans.
  Rational extremal_ratio;
  std::optional<Tournament> witness;
  std::vector<int> witness_anchor;
  Rational witness_ratio;
  std::vector<RatioPoint> curve;
  std::vector<std::string> notes;
};

struct ScanOptions {
  /// 0 means std::thread::hardware_concurrency().
  int threads = 0;
  /// Restrict to tournaments whose score sequence is non-decreasing in the
  /// vertex label. Every isomorphism class keeps at least one member.
  bool dedup = false;
  CountOptions count;
};

/// Calls visit(code, t) for every tournament code on n vertices, split
/// over threads in contiguous code ranges. visit receives the worker index
/// as its first argument.
void for_each_tournament(int n, const ScanOptions& opts,
                         const std::function<void(int worker, std::uint64_t code, const Digraph& t)>& visit);
int resolved_threads(const ScanOptions& opts);

/// Labeled-count scan over all tournaments on 1..n_max vertices (guard 7).
PropertyReport check_anti_exhaustive(const Digraph& d, int n_max, const ScanOptions& opts = {});

/// Same enumeration; reports the minimum ratio per n, verdict ScanOnly.
/// Labeled scans take the minimum over n >= v(D) only.
PropertyReport check_sidorenko_scan(const Digraph& d, int n_max, const ScanOptions& opts = {},
                                    CountMode mode = CountMode::Labeled);

/// Labeled counts constant over all tournaments at each n = 0..n_max
/// (guard 7). The curve holds the constant; a violation carries the first
/// tournament whose count differs from the n-vertex transitive-code host.
PropertyReport check_impartial(const Digraph& d, int n_max, const CountOptions& opts = {});

struct TwoBlockParams {
  int n = 0;
  Rational c;
  std::uint64_t seed = 0;
};

/// Vertices 0..floor(cn)-1 beat every later vertex; all other pairs are
/// oriented by the counter RNG at (seed, pair index).
bool two_block_beats(const TwoBlockParams& p, int i, int j);
Tournament two_block_tournament(const TwoBlockParams& p);

struct HostFamily {
  enum class Kind { Transitive, Blowup, TwoBlock };
  Kind kind = Kind::Transitive;
  Digraph base;          // Blowup: hosts are lexicographic fills of blowup(base, n / v(base))
  Rational c;            // TwoBlock
  std::uint64_t seed = 0;

  Tournament host(int n) const;
  std::string name() const;
};

/// Ratio scan of value/bound over hosts of the family at the listed sizes.
/// Homomorphism mode compares h_D(T) with 2^{-e} n^v.
PropertyReport check_anti_on_family(const Digraph& d, const HostFamily& family, const std::vector<int>& n_list,
                                    CountMode mode = CountMode::Labeled, const CountOptions& opts = {});

struct BlowupFalsifier {
  Tournament host;
  int m = 0;
  Rational density;
  Rational threshold;  // k^{-k}
};

/// When e(D) >= v log2 v, returns the lexicographic fill of blowup(D, m)
/// and its exact density, which is at least v^{-v}.
std::optional<BlowupFalsifier> falsify_by_blowup(const Digraph& d, int m = 2, const CountOptions& opts = {});

/// Every tournament on 1..n_max vertices (guard 6), every injective anchor.
PropertyReport check_strong_anti(const Digraph& d, const VertexSet& pinned, int n_max, const ScanOptions& opts = {});

struct StarClass {
  bool sidorenko = false;  // min(d_out, d_in) = 0
  bool anti = false;       // |d_out - d_in| <= 1
  std::string label() const;
};
StarClass classify_star(int d_out, int d_in);

/// f(c) = c^{1+d_in} (2-c)^{d_out} + (1-c)^{1+d_out} (1+c)^{d_in}.
Rational star_f(const Rational& c, int d_out, int d_in);
/// 2^{-(d_out+d_in)} f(c).
Rational star_expected_density(const Rational& c, int d_out, int d_in);
/// f'(0) from Newton forward differences at the integers, exact.
Rational star_f_derivative_at_zero(int d_out, int d_in);

struct McEstimate {
  double mean = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
};

/// Fraction of uniformly random maps V(D) -> [n] that are homomorphisms.
McEstimate sample_density(const Digraph& d, int n, const std::function<bool(int, int)>& beats,
                          std::uint64_t samples, std::uint64_t seed);

struct InterpolationStep {
  int u = -1;  // flipped pair, -1 for the starting tournament
  int v = -1;
  BigInt h;
  BigInt delta;  // |h - previous h|
};

struct InterpolationResult {
  Tournament crossing;
  std::optional<std::size_t> crossing_step;
  std::vector<InterpolationStep> trace;
  BigInt step_bound;  // v(D)^2 n^{v(D)-2}
  BigInt max_delta;
};

/// Walks from t_lo to t_hi re-orienting one pair per step (pairs avoiding
/// exclude, lexicographic order). target is a homomorphism count and must
/// lie between h(t_lo) and h(t_hi).
InterpolationResult interpolate_to_density(const Digraph& d, const Tournament& t_lo, const Tournament& t_hi,
                                           const VertexSet& exclude, const Rational& target,
                                           const CountOptions& opts = {});

struct ForcingRow {
  int n = 0;
  std::string host;
  Rational density;
  Rational deviation;  // |t_D - 2^{-e}|
  double epsilon = 0;
  bool epsilon_exact = false;
};

/// Exact epsilon for n <= 20, otherwise a sampled high-water mark.
std::vector<ForcingRow> forcing_probe(const Digraph& d, const std::vector<std::pair<std::string, Tournament>>& hosts,
                                      std::uint64_t seed, std::uint64_t eps_samples = 4096, const CountOptions& opts = {});

}  // namespace tsid
