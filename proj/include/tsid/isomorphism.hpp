#pragma once

#include <optional>
#include <vector>

#include "tsid/digraph.hpp"

namespace tsid {

inline constexpr int isomorphism_size_guard = 12;

/// Bijection f with (u,v) in E(d1) iff (f[u],f[v]) in E(d2), or nullopt.
/// The returned witness is the lexicographically least one. Inputs above
/// isomorphism_size_guard vertices are refused with SizeGuardError.
std::optional<std::vector<int>> are_isomorphic(const Digraph& d1, const Digraph& d2);

}  // namespace tsid
