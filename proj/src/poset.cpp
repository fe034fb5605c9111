#include "shannon/poset.hpp"

#include <functional>

namespace shannon {

std::vector<std::vector<std::size_t>> minimum_chain_cover(std::size_t n,
                                                          const std::vector<char>& less) {
  // Kuhn's augmenting paths on the bipartite graph left i -> right j for i < j.
  std::vector<long> match_right(n, -1);  // right j -> left i
  std::vector<long> match_left(n, -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) -> bool {
    for (std::size_t j = 0; j < n; ++j) {
      if (!less[i * n + j] || seen[j]) continue;
      seen[j] = 1;
      if (match_right[j] < 0 || augment(static_cast<std::size_t>(match_right[j]))) {
        match_right[j] = static_cast<long>(i);
        match_left[i] = static_cast<long>(j);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    seen.assign(n, 0);
    augment(i);
  }
  // Each chain starts at an element that is nobody's successor.
  std::vector<std::vector<std::size_t>> chains;
  for (std::size_t s = 0; s < n; ++s) {
    if (match_right[s] >= 0) continue;
    std::vector<std::size_t> chain{s};
    for (long next = match_left[s]; next >= 0; next = match_left[static_cast<std::size_t>(next)])
      chain.push_back(static_cast<std::size_t>(next));
    chains.push_back(std::move(chain));
  }
  return chains;
}

std::size_t poset_width(std::size_t n, const std::vector<char>& less) {
  return minimum_chain_cover(n, less).size();
}

}  // namespace shannon
