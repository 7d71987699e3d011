#pragma once

#include <string>
#include <string_view>

#include "tsid/digraph.hpp"

namespace tsid {

// DGF/1: "n m\n" then m lines "u v\n" (u->v), sorted lexicographically.
// TRN/1: "n\n" then one line of n(n-1)/2 characters over {0,1} in
// lexicographic pair order, '1' meaning i->j for i<j.
//
// Parsers accept '#' comment lines before the header and report the
// offending line on error.

std::string to_dgf(const Digraph& d);
Digraph parse_dgf(std::string_view text);

std::string to_trn(const Tournament& t);
Tournament parse_trn(std::string_view text);

/// Only the orientation string of TRN/1 (the second line).
std::string trn_bits(const Tournament& t);

}  // namespace tsid
