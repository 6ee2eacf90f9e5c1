#ifndef LORENTZ_LORENTZIAN_HPP
#define LORENTZ_LORENTZIAN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/inertia.hpp"
#include "lorentz/monomial.hpp"
#include "lorentz/polynomial.hpp"

namespace lorentz {

enum class FailureKind {
  decomposable,
  bad_inertia,
  negative_coefficient,
  not_homogeneous,
  zero_polynomial,
};

std::string to_string(FailureKind kind);

struct FailureWitness {
  Monomial alpha;  // the derivative d^alpha f that fails
  FailureKind kind = FailureKind::decomposable;
  // Support-graph component count of d^alpha f (decomposable witnesses).
  std::size_t components = 0;
  // Hessian inertia of d^alpha f when alpha has order d - 2.
  std::optional<Inertia> inertia;
};

struct LorentzianVerdict {
  bool is_lorentzian = false;
  std::optional<FailureWitness> failure;  // present iff !is_lorentzian
  std::size_t derivatives_checked = 0;

  // "α=(0,…,0): bad-inertia (2 positive eigenvalues)" style summary.
  std::string describe(std::size_t num_vars) const;
};

/// Co-occurrence graph of the variables of f: vertices are the variables
/// with d_i f != 0, and i ~ j when some monomial contains both.
struct SupportGraph {
  std::vector<std::uint32_t> active_vars;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::size_t components = 0;

  bool connected() const { return components <= 1; }
};

SupportGraph support_graph(const Polynomial& f);

// Number of connected components of the support graph, without listing
// edges (union-find over the variables of each monomial).
std::size_t support_components(const Polynomial& f);

// Throws std::invalid_argument for the zero polynomial.
bool is_indecomposable(const Polynomial& f);

// f homogeneous quadratic with nonnegative coefficients, f != 0: true iff the
// constant Hessian has exactly one positive eigenvalue.
bool quadratic_is_log_concave(const Polynomial& f);

// Decides complete log-concavity of a homogeneous polynomial with
// nonnegative coefficients. For degree d >= 2 every nonzero d^alpha f with
// |alpha| <= d - 2 must have a connected support graph, and each nonzero
// quadratic d^alpha f with |alpha| = d - 2 must have a Hessian with exactly
// one positive eigenvalue. Multi-indices are visited in ascending graded lex
// order and the first failure is reported; at a single alpha the support
// test precedes the inertia test. Degrees 0 and 1 are accepted iff f is
// nonzero with nonnegative coefficients. O(n^(d+1)) for fixed d.
LorentzianVerdict is_lorentzian(const Polynomial& f);

// Log-concavity on the positive orthant for a homogeneous cubic with
// nonnegative coefficients (equivalent to complete log-concavity in degree
// three). Throws std::invalid_argument on other inputs.
bool cubic_is_log_concave(const Polynomial& f);

// Pointwise test for homogeneous f of degree >= 2 with f(w) > 0: the
// Hessian at w has exactly one positive eigenvalue. Throws
// std::domain_error if f(w) <= 0.
bool log_concave_at(const Polynomial& f, std::span<const Rational> w);

}  // namespace lorentz

#endif  // LORENTZ_LORENTZIAN_HPP
