#ifndef LORENTZ_CLIQUE_HPP
#define LORENTZ_CLIQUE_HPP

#include <cstdint>
#include <vector>

#include "lorentz/graph.hpp"

namespace lorentz {

inline constexpr std::uint32_t kMaxCliqueVertices = 30;

// A maximum clique, vertices ascending. Branch and bound with greedy
// colouring bounds over bitsets. Throws std::length_error for more than
// kMaxCliqueVertices vertices.
std::vector<std::uint32_t> max_clique(const Graph& g);

// omega(G); 0 for the empty graph.
std::uint32_t clique_number(const Graph& g);

}  // namespace lorentz

#endif  // LORENTZ_CLIQUE_HPP
