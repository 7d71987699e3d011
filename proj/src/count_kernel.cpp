#include "tsid/count_kernel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "tsid/errors.hpp"
#include "tsid/undirected.hpp"

namespace tsid {

namespace {

__extension__ typedef unsigned __int128 u128;

BigInt to_big(u128 x) {
  BigInt hi = static_cast<std::uint64_t>(x >> 64);
  return (hi << 64) | BigInt(static_cast<std::uint64_t>(x));
}
BigInt to_big(const BigInt& x) { return x; }

bool reached(u128 total, std::uint64_t stop) { return total >= stop; }
bool reached(const BigInt& total, std::uint64_t stop) { return total >= stop; }

PatternCounter::Block make_block(const Digraph& d, const std::vector<int>& comp, const std::vector<int>& pins, bool hom) {
  PatternCounter::Block b;
  std::vector<char> in_comp(static_cast<std::size_t>(d.order()), 0), is_pin(in_comp.size(), 0), taken(in_comp.size(), 0);
  for (int v : comp) in_comp[static_cast<std::size_t>(v)] = 1;
  for (int v : pins)
    if (in_comp[static_cast<std::size_t>(v)]) {
      is_pin[static_cast<std::size_t>(v)] = 1;
      b.vertices.push_back(v);
      taken[static_cast<std::size_t>(v)] = 1;
    }
  b.pinned_count = static_cast<int>(b.vertices.size());

  std::vector<int> tail;
  if (hom) {
    std::vector<int> byDegree;
    for (int v : comp)
      if (!is_pin[static_cast<std::size_t>(v)]) byDegree.push_back(v);
    std::stable_sort(byDegree.begin(), byDegree.end(), [&](int a, int c) { return d.degree(a) < d.degree(c); });
    std::vector<char> in_tail(in_comp.size(), 0);
    for (int v : byDegree) {
      bool free = true;
      for (int t : tail)
        if (d.adjacent(v, t)) free = false;
      if (!free) continue;
      tail.push_back(v);
      in_tail[static_cast<std::size_t>(v)] = 1;
    }
    // A tail covering the whole component leaves nothing to anchor it.
    if (b.pinned_count == 0 && tail.size() == comp.size()) tail.clear();
    for (int v : tail) taken[static_cast<std::size_t>(v)] = 1;
  }

  const std::size_t prefix_target = comp.size() - tail.size();
  while (b.vertices.size() < prefix_target) {
    int best = -1, best_back = -1, best_deg = -1;
    for (int v : comp) {
      if (taken[static_cast<std::size_t>(v)]) continue;
      int back = 0;
      for (int u : b.vertices)
        if (d.adjacent(u, v)) ++back;
      const int deg = d.degree(v);
      if (back > best_back || (back == best_back && deg > best_deg)) {
        best = v;
        best_back = back;
        best_deg = deg;
      }
    }
    b.vertices.push_back(best);
    taken[static_cast<std::size_t>(best)] = 1;
  }
  b.tail_start = static_cast<int>(b.vertices.size());
  for (int v : tail) b.vertices.push_back(v);

  b.constraints.resize(b.vertices.size());
  for (std::size_t l = 0; l < b.vertices.size(); ++l) {
    const int v = b.vertices[l];
    const std::size_t limit = static_cast<int>(l) >= b.tail_start ? static_cast<std::size_t>(b.tail_start) : l;
    for (std::size_t e = 0; e < limit; ++e) {
      const int u = b.vertices[e];
      if (d.has_edge(u, v)) b.constraints[l].push_back({static_cast<int>(e), true});
      else if (d.has_edge(v, u)) b.constraints[l].push_back({static_cast<int>(e), false});
    }
  }
  return b;
}

template <typename Acc>
class Search {
public:
  Search(const PatternCounter::Block& b, const Digraph& host, bool labeled, const CountOptions& opts, std::uint64_t& nodes)
      : b_(b), host_(host), labeled_(labeled), opts_(opts), nodes_(nodes),
        w_(static_cast<std::size_t>(host.words_per_row())), size_(static_cast<int>(b.vertices.size())),
        image_(b.vertices.size(), -1), cand_((b.vertices.size() + 1) * w_, 0), used_(w_, 0), mask_(w_, ~word_t{0}) {
    const int n = host.order();
    if (n % word_bits != 0 && w_ > 0) mask_[w_ - 1] = (word_t{1} << (n % word_bits)) - 1;
  }

  Acc run(std::span<const int> pin_images) {
    for (int l = 0; l < b_.pinned_count; ++l) {
      const int w = pin_images[static_cast<std::size_t>(l)];
      for (auto [e, forward] : b_.constraints[static_cast<std::size_t>(l)]) {
        const int x = image_[static_cast<std::size_t>(e)];
        if (forward ? !host_.has_edge(x, w) : !host_.has_edge(w, x)) return Acc(0);
      }
      image_[static_cast<std::size_t>(l)] = w;
      set(w);
    }
    extend(b_.pinned_count);
    return total_;
  }

private:
  word_t* row(int level) { return cand_.data() + static_cast<std::size_t>(level) * w_; }

  void set(int w) { used_[static_cast<std::size_t>(w / word_bits)] |= word_t{1} << (w % word_bits); }
  void clear(int w) { used_[static_cast<std::size_t>(w / word_bits)] &= ~(word_t{1} << (w % word_bits)); }

  void tick() {
    if (++nodes_ > opts_.budget)
      throw BudgetExceeded("work budget of " + std::to_string(opts_.budget) + " candidate expansions exhausted");
  }

  int fill(int level, word_t* out) {
    std::copy(mask_.begin(), mask_.end(), out);
    for (auto [e, forward] : b_.constraints[static_cast<std::size_t>(level)]) {
      const int x = image_[static_cast<std::size_t>(e)];
      auto r = forward ? host_.out_row(x) : host_.in_row(x);
      for (std::size_t i = 0; i < w_; ++i) out[i] &= r[i];
    }
    int c = 0;
    if (labeled_)
      for (std::size_t i = 0; i < w_; ++i) c += std::popcount(out[i] &= ~used_[i]);
    else
      for (std::size_t i = 0; i < w_; ++i) c += std::popcount(out[i]);
    return c;
  }

  void add(const Acc& x) {
    total_ += x;
    if (opts_.stop_at && reached(total_, *opts_.stop_at)) stopped_ = true;
  }

  void extend(int level) {
    if (stopped_) return;
    if (!labeled_ && level == b_.tail_start) {
      Acc prod = 1;
      for (int l = level; l < size_; ++l) {
        tick();
        const int c = fill(l, row(size_));
        if (c == 0) return;
        prod *= static_cast<unsigned>(c);
      }
      add(prod);
      return;
    }
    if (level == size_) {
      add(Acc(1));
      return;
    }
    word_t* cand = row(level);
    const int c = fill(level, cand);
    if (c == 0) return;
    if (labeled_ && level == size_ - 1) {
      tick();
      add(Acc(static_cast<unsigned>(c)));
      return;
    }
    for (std::size_t wi = 0; wi < w_; ++wi) {
      word_t bits = cand[wi];
      while (bits != 0) {
        const int w = static_cast<int>(wi) * word_bits + std::countr_zero(bits);
        bits &= bits - 1;
        tick();
        image_[static_cast<std::size_t>(level)] = w;
        if (labeled_) set(w);
        extend(level + 1);
        if (labeled_) clear(w);
        if (stopped_) return;
      }
    }
  }

  const PatternCounter::Block& b_;
  const Digraph& host_;
  bool labeled_;
  const CountOptions& opts_;
  std::uint64_t& nodes_;
  std::size_t w_;
  int size_;
  std::vector<int> image_;
  std::vector<word_t> cand_;
  std::vector<word_t> used_;
  std::vector<word_t> mask_;
  Acc total_ = 0;
  bool stopped_ = false;
};

}  // namespace

PatternCounter::PatternCounter(const Digraph& pattern, CountMode mode, std::vector<int> pinned)
    : pattern_(pattern), mode_(mode), pinned_(std::move(pinned)) {
  std::vector<char> seen(static_cast<std::size_t>(pattern.order()), 0);
  for (int v : pinned_) {
    if (v < 0 || v >= pattern.order()) throw PreconditionError("pinned vertex " + std::to_string(v) + " outside the pattern");
    if (seen[static_cast<std::size_t>(v)]) throw PreconditionError("pinned vertex " + std::to_string(v) + " listed twice");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  const bool hom = mode == CountMode::Homomorphisms;
  if (!hom) {
    std::vector<int> all(static_cast<std::size_t>(pattern.order()));
    for (int v = 0; v < pattern.order(); ++v) all[static_cast<std::size_t>(v)] = v;
    blocks_.push_back(make_block(pattern, all, pinned_, false));
    return;
  }
  for (const auto& comp : underlying(pattern).components()) {
    if (comp.size() == 1) {
      if (!seen[static_cast<std::size_t>(comp[0])]) ++free_isolated_;
      continue;
    }
    blocks_.push_back(make_block(pattern, comp, pinned_, true));
  }
}

BigInt PatternCounter::count(const Digraph& host, std::span<const int> anchor, const CountOptions& opts) const {
  const int n = host.order();
  if (anchor.size() != pinned_.size())
    throw PreconditionError("anchor has " + std::to_string(anchor.size()) + " images for " + std::to_string(pinned_.size()) + " pinned vertices");
  std::vector<int> image_of(static_cast<std::size_t>(pattern_.order()), -1);
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < anchor.size(); ++i) {
    const int w = anchor[i];
    if (w < 0 || w >= n) throw PreconditionError("anchor image " + std::to_string(w) + " outside the host");
    if (hit[static_cast<std::size_t>(w)]) throw PreconditionError("anchor is not injective");
    hit[static_cast<std::size_t>(w)] = 1;
    image_of[static_cast<std::size_t>(pinned_[i])] = w;
  }

  const bool labeled = mode_ == CountMode::Labeled;
  std::uint64_t nodes = 0;
  BigInt result = ipow(BigInt(n), static_cast<unsigned>(free_isolated_));
  for (const Block& b : blocks_) {
    if (result == 0) break;
    std::vector<int> pins(static_cast<std::size_t>(b.pinned_count));
    for (int l = 0; l < b.pinned_count; ++l) pins[static_cast<std::size_t>(l)] = image_of[static_cast<std::size_t>(b.vertices[static_cast<std::size_t>(l)])];
    const double free_vertices = static_cast<double>(b.vertices.size()) - b.pinned_count;
    const bool fits = n <= 1 || free_vertices * std::log2(static_cast<double>(n)) < 120.0;
    BigInt part;
    if (fits) {
      Search<u128> s(b, host, labeled, opts, nodes);
      part = to_big(s.run(pins));
    } else {
      Search<BigInt> s(b, host, labeled, opts, nodes);
      part = to_big(s.run(pins));
    }
    result *= part;
  }
  return result;
}

}  // namespace tsid
