#include "tsid/counting.hpp"

#include <stdexcept>
#include <string>

#include "tsid/errors.hpp"

namespace tsid {

namespace {

// An empty host with a nonempty pattern has bound 0 and value 0.
Rational ratio_of(const BigInt& value, const Rational& bound) {
  return bound == 0 ? Rational(0) : Rational(value) / bound;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  auto digits = [&](const std::string& part, bool allow_sign) {
    std::size_t i = allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const std::string bad = "not an exact number: '" + s + "'";
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false) || BigInt(den) == 0) throw std::invalid_argument(bad);
    return Rational(BigInt(num), BigInt(den));
  }
  const auto dot = s.find('.');
  std::string whole = s.substr(0, dot);
  const std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
  const bool negative = !whole.empty() && whole[0] == '-';
  if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
  if (!digits(whole, true) || (dot != std::string::npos && !digits(frac, false))) throw std::invalid_argument(bad);
  Rational r{BigInt(whole)};
  if (!frac.empty()) {
    const Rational part(BigInt(frac), ipow(BigInt(10), static_cast<unsigned>(frac.size())));
    r += negative ? Rational(-part) : part;
  }
  return r;
}

void PinnedPattern::validate(int host_n) const {
  if (pinned.universe() != pattern.order()) throw PreconditionError("pinned set is over a different vertex count than the pattern");
  const auto members = pinned.members();
  for (int u : members)
    for (int v : members)
      if (pattern.has_edge(u, v))
        throw PreconditionError("pinned set is not independent: edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  if (anchor.size() != members.size())
    throw PreconditionError("anchor defines " + std::to_string(anchor.size()) + " images for " + std::to_string(members.size()) + " pinned vertices");
  for (std::size_t i = 0; i < anchor.size(); ++i) {
    if (anchor[i] < 0 || (host_n >= 0 && anchor[i] >= host_n)) throw PreconditionError("anchor image " + std::to_string(anchor[i]) + " out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (anchor[i] == anchor[j]) throw PreconditionError("anchor is not injective");
  }
}

Rational anti_bound(const Digraph& d, int n, int pinned) {
  return Rational(ipow(BigInt(n), static_cast<unsigned>(d.order() - pinned))) * pow2(-d.edge_count());
}

BigInt count_homomorphisms(const Digraph& d, const Tournament& t, const CountOptions& opts) {
  return PatternCounter(d, CountMode::Homomorphisms).count(t.graph(), {}, opts);
}

CountResult count_labeled(const Digraph& d, const Tournament& t, const CountOptions& opts) {
  CountResult r;
  r.value = PatternCounter(d, CountMode::Labeled).count(t.graph(), {}, opts);
  r.bound = anti_bound(d, t.order());
  r.ratio = ratio_of(r.value, r.bound);
  return r;
}

CountResult count_labeled_pinned(const PinnedPattern& p, const Tournament& t, const CountOptions& opts) {
  p.validate(t.order());
  CountResult r;
  r.value = PatternCounter(p.pattern, CountMode::Labeled, p.pinned.members()).count(t.graph(), p.anchor, opts);
  r.bound = anti_bound(p.pattern, t.order(), p.pinned.size());
  r.ratio = ratio_of(r.value, r.bound);
  return r;
}

Rational density(const Digraph& d, const Tournament& t, const CountOptions& opts) {
  const BigInt h = count_homomorphisms(d, t, opts);
  if (t.order() == 0) return Rational(d.order() == 0 ? 1 : 0);
  return Rational(h, ipow(BigInt(t.order()), static_cast<unsigned>(d.order())));
}

ImpartialResult is_impartial_upto(const Digraph& d, int n_max, const CountOptions& opts) {
  if (n_max > exhaustive_size_guard)
    throw SizeGuardError("impartiality scan is exhaustive; n_max must be at most " + std::to_string(exhaustive_size_guard));
  ImpartialResult out;
  const PatternCounter counter(d, CountMode::Labeled);
  for (int n = 0; n <= n_max; ++n) {
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    const Tournament first = Tournament::from_code(n, 0);
    const BigInt base = counter.count(first.graph(), {}, opts);
    for (std::uint64_t code = 1; code < total; ++code) {
      const Tournament t = Tournament::from_code(n, code);
      if (counter.count(t.graph(), {}, opts) != base) {
        out.impartial = false;
        out.witness.emplace(first, t);
        return out;
      }
    }
    out.count_by_n.push_back(base);
  }
  return out;
}

}  // namespace tsid
