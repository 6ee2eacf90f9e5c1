#ifndef LORENTZ_GRAPH_HPP
#define LORENTZ_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lorentz {

/// Simple undirected graph on vertices 0..n-1. Edges are stored as (i, j)
/// with i < j in lexicographic order; that order fixes the y_ij variable
/// layout of every gadget.
class Graph {
 public:
  using Edge = std::pair<std::uint32_t, std::uint32_t>;

  Graph() = default;
  // Throws std::invalid_argument on self-loops, duplicates or out-of-range
  // endpoints. Endpoints may be given in either order.
  Graph(std::uint32_t n, std::vector<Edge> edges);

  static Graph complete(std::uint32_t n);
  static Graph path(std::uint32_t n);
  static Graph cycle(std::uint32_t n);
  static Graph petersen();

  std::uint32_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(std::uint32_t a, std::uint32_t b) const;
  // Position of edge {a, b} in edges(); throws if absent.
  std::size_t edge_index(std::uint32_t a, std::uint32_t b) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace lorentz

#endif  // LORENTZ_GRAPH_HPP
