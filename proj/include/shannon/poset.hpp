#pragma once

#include <cstddef>
#include <vector>

namespace shannon {

// Minimum chain cover of a finite poset given by its strict order matrix
// less[i * n + j] (i < j). By Dilworth's theorem the number of chains equals
// the width. Computed from a maximum matching in the comparability
// bipartite graph (Fulkerson's reduction).
std::vector<std::vector<std::size_t>> minimum_chain_cover(std::size_t n,
                                                          const std::vector<char>& less);

std::size_t poset_width(std::size_t n, const std::vector<char>& less);

}  // namespace shannon
