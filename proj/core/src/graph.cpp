#include "lorentz/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace lorentz {

Graph::Graph(std::uint32_t n, std::vector<Edge> edges) : n_(n) {
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    if (a >= n || b >= n) {
      throw std::invalid_argument("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                  ") has an endpoint >= " + std::to_string(n));
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + ", " +
                                std::to_string(dup->second) + ")");
  }
  edges_ = std::move(edges);
}

Graph Graph::complete(std::uint32_t n) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph Graph::path(std::uint32_t n) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(std::uint32_t n) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph Graph::petersen() {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph(10, std::move(e));
}

bool Graph::adjacent(std::uint32_t a, std::uint32_t b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::size_t Graph::edge_index(std::uint32_t a, std::uint32_t b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b});
  if (it == edges_.end() || *it != Edge{a, b}) throw std::out_of_range("edge not in graph");
  return static_cast<std::size_t>(it - edges_.begin());
}

}  // namespace lorentz
