#ifndef LORENTZ_DIRECTIONAL_HPP
#define LORENTZ_DIRECTIONAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lorentz/graph.hpp"
#include "lorentz/polynomial.hpp"

namespace lorentz {

// z^3 + b z + c is log-concave on the nonnegative ray iff 4 b^3 >= 27 c^2.
// Throws std::invalid_argument for b < 0 or c < 0.
bool depressed_cubic_log_concave(const Rational& b, const Rational& c);

/// f(x, z) = z^3 + 3 |x|^2 z + 2 q(x) with z the last variable.
struct DirectionalGadget {
  Polynomial q;          // homogeneous cubic (or zero), nonnegative coefficients
  Polynomial assembled;  // q.num_vars() + 1 variables
};

// Throws std::invalid_argument when q is not a zero-or-homogeneous cubic
// with nonnegative coefficients.
DirectionalGadget build_directional_gadget(const Polynomial& q);

/// Directional gadget for q = q_G / l(k). When l(k) = 0 and G has edges the
/// scaled cubic is undefined and `gadget` is empty.
struct GraphDirectionalInstance {
  Graph graph;
  std::uint32_t k = 0;
  Rational ell;
  std::optional<DirectionalGadget> gadget;
};

// Requires 1 <= k <= n.
GraphDirectionalInstance build_graph_directional_gadget(const Graph& g, std::uint32_t k);

// Sign test of f D_v^2 f - (D_v f)^2 at base, the numerator of D_v^2 log f.
// Requires base >= 0 entrywise (std::invalid_argument) and f(base) > 0
// (std::domain_error).
bool directional_lc_at(const Polynomial& f, std::span<const Rational> base,
                       std::span<const Rational> v);

// Exact value of f D_v^2 f - (D_v f)^2 at base, without preconditions.
Rational directional_lc_numerator(const Polynomial& f, std::span<const Rational> base,
                                  std::span<const Rational> v);

struct CliqueMaxInfo {
  std::uint32_t omega = 0;
  Rational ell;
};

struct DirectionalVerdict {
  bool log_concave = true;
  bool exact = false;  // decided by the clique formula rather than a scan
  // Grid scan only: first failing simplex point, as integer coordinates
  // summing to `grid`, and the point itself.
  std::optional<std::vector<std::uint32_t>> grid_coordinates;
  std::optional<RationalVector> witness;
  std::uint32_t grid = 0;
  std::uint64_t points_scanned = 0;
  std::uint64_t boundary_points = 0;  // q(x) = 0, where f(x, 0) vanishes
};

// Grid density used when none is given: 20 subdivisions when there are at
// most four variables, otherwise the largest density <= 20 whose simplex
// grid has at most `max_points` points (and at least 1).
std::uint32_t default_grid(std::size_t num_vars, std::uint64_t max_points = 200000);

// Number of grid points with nonnegative integer coordinates summing to
// `grid` in `num_vars` dimensions, saturating at UINT64_MAX.
std::uint64_t simplex_grid_size(std::size_t num_vars, std::uint32_t grid);

// Log-concavity in the z direction. With clique data the answer is exact:
// max_{|x| = 1} q = a(omega) / l, so the test is l >= a(omega). Otherwise the
// nonnegative unit-sum simplex is scanned at the given density and each
// point x is checked with depressed_cubic_log_concave(3 |x|^2, 2 q(x)); such
// a verdict can only falsify.
DirectionalVerdict gadget_directional_verdict(const DirectionalGadget& gadget,
                                              const std::optional<CliqueMaxInfo>& clique = std::nullopt,
                                              std::optional<std::uint32_t> grid = std::nullopt);

// Exact graph verdict (also covers l(k) = 0): l(k) >= a(omega).
bool graph_directional_verdict(const Rational& ell, std::uint32_t omega);

}  // namespace lorentz

#endif  // LORENTZ_DIRECTIONAL_HPP
