#ifndef LORENTZ_SAMPLING_HPP
#define LORENTZ_SAMPLING_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lorentz/inertia.hpp"
#include "lorentz/linear_map.hpp"
#include "lorentz/polynomial.hpp"
#include "lorentz/unipoly.hpp"

namespace lorentz {

/// A polynomial given either directly or as p(M x). The composed form keeps
/// restrictions of p~ = p(M x) cheap: they are restrictions of p along
/// (M x, M v), so the expanded p~ is never touched.
class RestrictionSource {
 public:
  explicit RestrictionSource(Polynomial p);
  RestrictionSource(Polynomial p, LinearMap map);

  std::size_t num_vars() const;
  std::uint32_t degree() const { return degree_; }
  const Polynomial& base_polynomial() const { return p_; }
  const std::optional<LinearMap>& map() const { return map_; }

  Rational evaluate(std::span<const Rational> x) const;
  // t -> f(base + t dir), exact.
  UniPoly restriction(std::span<const Rational> base, std::span<const Rational> dir) const;
  // Coefficients of t -> f(base + t dir) in double, index = power of t.
  std::vector<double> restriction_approx(std::span<const double> base,
                                         std::span<const double> dir) const;

 private:
  struct ApproxTerm {
    double coefficient;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;
  };
  struct ApproxEntry {
    std::size_t row, col;
    double value;
  };

  void build_approx();
  std::vector<double> apply_approx(std::span<const double> x) const;

  Polynomial p_;
  std::optional<LinearMap> map_;
  std::uint32_t degree_ = 0;
  std::vector<ApproxTerm> approx_terms_;
  std::vector<ApproxEntry> approx_map_;  // nonzero entries of the map
};

enum class SampleVerdict { falsified, not_falsified };

std::string to_string(SampleVerdict v);

struct SampleWitness {
  RationalVector point;
  std::optional<RationalVector> direction;
  std::optional<UniPoly> restriction;  // restriction samplers
  std::optional<Inertia> inertia;      // Hessian samplers
  // Index of the exact check that produced the witness (0-based).
  std::uint64_t trial = 0;
};

struct SampleReport {
  SampleVerdict verdict = SampleVerdict::not_falsified;
  std::optional<SampleWitness> witness;  // present iff falsified
  std::uint64_t samples_tried = 0;       // exact checks performed
  std::uint64_t seed = 0;

  bool falsified() const { return verdict == SampleVerdict::falsified; }
};

struct SamplerOptions {
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  // Sample numerators are uniform in [-2^bits, 2^bits] over 2^bits; positive
  // samples are uniform in [0, 2^bits] over 2^bits, shifted by 2^-bits.
  unsigned bits = 8;
  // Local searches run before the random trials. Each maximizes a
  // floating-point measure of how far the restriction is from being
  // real-rooted, then re-checks the rounded point exactly; every exact
  // check counts as a sample.
  std::uint32_t refine_starts = 0;
  std::uint32_t refine_iterations = 3000;
};

// Independent generator for trial `index`; a run is reproducible for any
// thread count because every trial draws only from its own stream.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream = 0);

Rational sample_rational(std::mt19937_64& rng, unsigned bits);
Rational sample_positive_rational(std::mt19937_64& rng, unsigned bits);

// Falsifies hyperbolicity of homogeneous p with respect to e by looking for
// x with p(x + t e) not real-rooted. Throws std::domain_error if p(e) <= 0
// and std::invalid_argument if p is not homogeneous.
SampleReport hyperbolicity_sampler(const RestrictionSource& p, std::span<const Rational> e,
                                   const SamplerOptions& options);
SampleReport hyperbolicity_sampler(const Polynomial& p, std::span<const Rational> e,
                                   const SamplerOptions& options);

// Falsifies real stability of homogeneous p: a positive direction v and base
// x with p(x + t v) not real-rooted, or with p(v) = 0. Throws
// std::invalid_argument if p is zero or not homogeneous.
SampleReport stability_sampler(const RestrictionSource& p, const SamplerOptions& options);
SampleReport stability_sampler(const Polynomial& p, const SamplerOptions& options);

// Falsifies log-concavity of homogeneous f with nonnegative coefficients: a
// positive point w with at least two positive Hessian eigenvalues. Throws
// std::invalid_argument on other inputs.
SampleReport log_concavity_sampler(const Polynomial& f, const SamplerOptions& options);

// Exact re-checks of a witness against the polynomial it falsifies. The
// restriction is recomputed from scratch.
bool verify_restriction_witness(const Polynomial& p, const SampleWitness& w);
bool verify_log_concavity_witness(const Polynomial& f, const SampleWitness& w);

/// Best value of a homogeneous q on the unit sphere found by projected
/// gradient ascent in double precision.
struct SphereAscentResult {
  double value = 0;
  std::vector<double> point;
};

SphereAscentResult sphere_max_ascent(const Polynomial& q, std::uint32_t starts, std::uint64_t seed,
                                     std::uint32_t iterations = 4000);

}  // namespace lorentz

#endif  // LORENTZ_SAMPLING_HPP
