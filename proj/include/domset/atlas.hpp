#pragma once

#include "domset/graph.hpp"

namespace domset {

/// All non-isomorphic simple graphs on exactly k vertices, built by
/// extending each (k-1)-vertex representative with every possible
/// neighborhood of a new vertex and deduplicating by canonical form.
/// Counts for k = 1..7: 1, 2, 4, 11, 34, 156, 1044.
std::vector<Pattern> all_patterns_of_order(int k);

/// Concatenation of all_patterns_of_order(1..k).
std::vector<Pattern> all_patterns_up_to(int k);

}  // namespace domset
