#include "tsid/isomorphism.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tsid/errors.hpp"

namespace tsid {

namespace {

using Signature = std::pair<int, int>;  // (out-degree, in-degree)

// One round of neighbourhood refinement on top of the degree pair: the
// sorted multiset of out- and in-neighbour degree pairs. Isomorphisms must
// preserve it, so it only prunes impossible branches and the search below
// still finds the lexicographically least witness.
std::vector<std::vector<int>> refined_colours(const Digraph& d) {
  const int n = d.order();
  std::vector<Signature> base(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) base[static_cast<std::size_t>(v)] = {d.out_degree(v), d.in_degree(v)};
  std::vector<std::vector<int>> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<Signature> outs;
    std::vector<Signature> ins;
    for_each_bit(d.out_row(v), [&](int w) { outs.push_back(base[static_cast<std::size_t>(w)]); });
    for_each_bit(d.in_row(v), [&](int w) { ins.push_back(base[static_cast<std::size_t>(w)]); });
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    auto& c = colour[static_cast<std::size_t>(v)];
    c.push_back(base[static_cast<std::size_t>(v)].first);
    c.push_back(base[static_cast<std::size_t>(v)].second);
    for (auto [a, b] : outs) { c.push_back(a); c.push_back(b); }
    c.push_back(-1);
    for (auto [a, b] : ins) { c.push_back(a); c.push_back(b); }
  }
  return colour;
}

class Matcher {
public:
  Matcher(const Digraph& a, const Digraph& b)
      : a_(a), b_(b), ca_(refined_colours(a)), cb_(refined_colours(b)),
        map_(static_cast<std::size_t>(a.order()), -1), used_(static_cast<std::size_t>(a.order()), 0) {}

  bool search(int v) {
    const int n = a_.order();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used_[static_cast<std::size_t>(w)] || ca_[static_cast<std::size_t>(v)] != cb_[static_cast<std::size_t>(w)]) continue;
      if (!consistent(v, w)) continue;
      map_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = 1;
      if (search(v + 1)) return true;
      used_[static_cast<std::size_t>(w)] = 0;
    }
    map_[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  std::vector<int> mapping() const { return map_; }

private:
  bool consistent(int v, int w) const {
    for (int u = 0; u < v; ++u) {
      const int x = map_[static_cast<std::size_t>(u)];
      if (a_.has_edge(u, v) != b_.has_edge(x, w) || a_.has_edge(v, u) != b_.has_edge(w, x)) return false;
    }
    return true;
  }

  const Digraph& a_;
  const Digraph& b_;
  std::vector<std::vector<int>> ca_;
  std::vector<std::vector<int>> cb_;
  std::vector<int> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Digraph& d1, const Digraph& d2) {
  if (d1.order() > isomorphism_size_guard || d2.order() > isomorphism_size_guard)
    throw SizeGuardError("are_isomorphic is limited to " + std::to_string(isomorphism_size_guard) + " vertices");
  if (d1.order() != d2.order() || d1.edge_count() != d2.edge_count()) return std::nullopt;
  auto sa = refined_colours(d1);
  auto sb = refined_colours(d2);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  Matcher m(d1, d2);
  if (!m.search(0)) return std::nullopt;
  return m.mapping();
}

}  // namespace tsid
