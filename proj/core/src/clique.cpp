#include "lorentz/clique.hpp"

#include <bit>
#include <stdexcept>

namespace lorentz {

namespace {

using Set = std::uint32_t;

class Solver {
 public:
  explicit Solver(const Graph& g) : n_(g.vertex_count()), adj_(n_, 0) {
    for (const auto& [a, b] : g.edges()) {
      adj_[a] |= Set{1} << b;
      adj_[b] |= Set{1} << a;
    }
  }

  Set solve() {
    const Set all = n_ == 32 ? ~Set{0} : (Set{1} << n_) - 1;
    expand(0, all);
    return best_;
  }

 private:
  // Greedy sequential colouring of `cand`; order[i] is the i-th vertex and
  // bound[i] the number of colours used up to and including it.
  void colour(Set cand, std::vector<std::uint32_t>& order, std::vector<std::uint32_t>& bound) const {
    std::uint32_t colours = 0;
    while (cand) {
      ++colours;
      Set q = cand;
      while (q) {
        const auto v = static_cast<std::uint32_t>(std::countr_zero(q));
        q &= ~(Set{1} << v);
        q &= ~adj_[v];
        cand &= ~(Set{1} << v);
        order.push_back(v);
        bound.push_back(colours);
      }
    }
  }

  void expand(Set clique, Set cand) {
    std::vector<std::uint32_t> order, bound;
    colour(cand, order, bound);
    const int size = std::popcount(clique);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + static_cast<int>(bound[i]) <= std::popcount(best_)) return;
      const std::uint32_t v = order[i];
      const Set next = clique | (Set{1} << v);
      const Set rest = cand & adj_[v];
      if (rest == 0) {
        if (std::popcount(next) > std::popcount(best_)) best_ = next;
      } else {
        expand(next, rest);
      }
      cand &= ~(Set{1} << v);
    }
  }

  std::uint32_t n_;
  std::vector<Set> adj_;
  Set best_ = 0;
};

}  // namespace

std::vector<std::uint32_t> max_clique(const Graph& g) {
  if (g.vertex_count() > kMaxCliqueVertices) {
    throw std::length_error("max_clique: at most " + std::to_string(kMaxCliqueVertices) +
                            " vertices supported");
  }
  std::vector<std::uint32_t> out;
  Set best = Solver(g).solve();
  while (best) {
    const auto v = static_cast<std::uint32_t>(std::countr_zero(best));
    out.push_back(v);
    best &= best - 1;
  }
  return out;
}

std::uint32_t clique_number(const Graph& g) {
  return static_cast<std::uint32_t>(max_clique(g).size());
}

}  // namespace lorentz
