// Reference counter for validating the backtracking kernel. Deliberately
// naive: odometer over every map, edge test per pattern edge.

#include <cmath>
#include <string>

#include "tsid/counting.hpp"
#include "tsid/errors.hpp"

namespace tsid {

BigInt oracle_count(const Digraph& d, const Digraph& host, CountMode mode, std::uint64_t budget) {
  const int v = d.order();
  const int n = host.order();
  if (v == 0) return 1;
  if (n == 0) return 0;
  const double volume = std::pow(static_cast<double>(n), v);
  if (volume > static_cast<double>(budget))
    throw BudgetExceeded("oracle would enumerate " + std::to_string(n) + "^" + std::to_string(v) + " maps");

  const auto edges = d.edges();
  std::vector<int> map(static_cast<std::size_t>(v), 0);
  BigInt total = 0;
  for (;;) {
    bool ok = true;
    if (mode == CountMode::Labeled)
      for (int i = 0; i < v && ok; ++i)
        for (int j = i + 1; j < v && ok; ++j)
          if (map[static_cast<std::size_t>(i)] == map[static_cast<std::size_t>(j)]) ok = false;
    for (std::size_t k = 0; k < edges.size() && ok; ++k)
      if (!host.has_edge(map[static_cast<std::size_t>(edges[k].from)], map[static_cast<std::size_t>(edges[k].to)])) ok = false;
    if (ok) ++total;

    int pos = 0;
    while (pos < v && ++map[static_cast<std::size_t>(pos)] == n) map[static_cast<std::size_t>(pos++)] = 0;
    if (pos == v) break;
  }
  return total;
}

}  // namespace tsid
