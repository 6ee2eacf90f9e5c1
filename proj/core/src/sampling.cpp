#include "lorentz/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "lorentz/real_roots.hpp"

namespace lorentz {

namespace {

constexpr std::uint64_t kHyperbolicityStream = 1;
constexpr std::uint64_t kStabilityStream = 2;
constexpr std::uint64_t kRefineStream = 3;
constexpr std::uint64_t kLogConcavityStream = 4;
constexpr std::uint64_t kAscentStream = 5;

std::uint32_t homogeneous_degree(const Polynomial& p, const char* who) {
  const auto h = homogeneity(p);
  if (p.is_zero() || !h.homogeneous) {
    throw std::invalid_argument(std::string(who) + ": expected a nonzero homogeneous polynomial");
  }
  return *h.degree;
}

// Runs fn(i) for i in [0, count) and returns the hit with the lowest index.
// Work is split in blocks so later indices are skipped once a hit is known.
template <typename Fn>
std::optional<std::pair<std::uint64_t, SampleWitness>> first_hit(std::uint64_t count, unsigned threads,
                                                                 Fn fn) {
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (auto w = fn(i)) return std::pair{i, std::move(*w)};
    return std::nullopt;
  }
  const std::uint64_t block = 256ull * threads;
  for (std::uint64_t begin = 0; begin < count; begin += block) {
    const std::uint64_t end = std::min(count, begin + block);
    std::vector<std::optional<std::pair<std::uint64_t, SampleWitness>>> found(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::uint64_t i = begin + t; i < end; i += threads) {
          if (found[t]) return;
          if (auto w = fn(i)) found[t] = std::pair{i, std::move(*w)};
        }
      });
    }
    for (auto& th : pool) th.join();
    std::optional<std::pair<std::uint64_t, SampleWitness>> best;
    for (auto& f : found)
      if (f && (!best || f->first < best->first)) best = std::move(f);
    if (best) return best;
  }
  return std::nullopt;
}

RationalVector sample_vector(std::mt19937_64& rng, std::size_t n, unsigned bits) {
  RationalVector out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_rational(rng, bits));
  return out;
}

RationalVector sample_positive_vector(std::mt19937_64& rng, std::size_t n, unsigned bits) {
  RationalVector out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_positive_rational(rng, bits));
  return out;
}

std::vector<double> to_doubles(std::span<const Rational> v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(to_double(r));
  return out;
}

// Rounds to a multiple of 2^(e - 40), e the binary exponent of the largest entry.
RationalVector round_vector(std::span<const double> v, bool positive) {
  double top = 0;
  for (double x : v) top = std::max(top, std::abs(x));
  const int e = top > 0 ? std::ilogb(top) : 0;
  const int shift = 40 - e;
  RationalVector out;
  out.reserve(v.size());
  for (double x : v) {
    Integer num(std::nearbyint(std::ldexp(x, shift)));
    if (positive && num <= 0) num = 1;
    Rational r(num);
    if (shift >= 0) {
      mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(shift));
    } else {
      mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-shift));
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Durand-Kerner iteration on sum c[i] t^i, c.back() != 0.
std::vector<std::complex<double>> approx_roots(const std::vector<double>& c) {
  const std::size_t d = c.size() - 1;
  std::vector<std::complex<double>> a(d + 1);
  for (std::size_t i = 0; i <= d; ++i) a[i] = c[i] / c[d];
  double radius = 0;
  for (std::size_t i = 0; i < d; ++i) radius = std::max(radius, std::abs(a[i]));
  radius = 1 + radius;
  std::vector<std::complex<double>> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    z[k] = std::polar(radius, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.4);
  }
  for (int iter = 0; iter < 500; ++iter) {
    double change = 0;
    for (std::size_t k = 0; k < d; ++k) {
      std::complex<double> num = a[d];
      for (std::size_t i = d; i-- > 0;) num = num * z[k] + a[i];
      std::complex<double> den = 1;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) den *= z[k] - z[j];
      if (std::abs(den) == 0) den = 1e-300;
      const auto step = num / den;
      z[k] -= step;
      change = std::max(change, std::abs(step) / (std::abs(z[k]) + 1e-300));
    }
    if (change < 1e-15) break;
  }
  return z;
}

// For a centred quadratic or cubic: minus the discriminant over a sum of
// its terms' magnitudes, in [-1, 1] and positive iff there are non-real
// roots.
double normalized_discriminant_measure(const std::vector<double>& c) {
  const std::size_t d = c.size() - 1;
  if (d == 2) {
    const double p = c[0] / c[2];
    return p > 0 ? 1.0 : (p == 0 ? 0.0 : -1.0);
  }
  const double p = c[1] / c[3];
  const double q = c[0] / c[3];
  const double a = 4 * p * p * p;
  const double b = 27 * q * q;
  const double denom = std::abs(a) + b;
  if (denom == 0) return 0;
  return (a + b) / denom;
}

// Exact real-rootedness; degrees up to three are settled by the
// discriminant sign, higher ones by Sturm sequences.
bool real_rooted_fast(const UniPoly& r) {
  const int d = r.degree();
  if (d == 2) {
    const Rational& a = r.coefficient(2);
    const Rational& b = r.coefficient(1);
    const Rational& c = r.coefficient(0);
    return b * b - 4 * a * c >= 0;
  }
  if (d == 3) {
    const Rational a = r.coefficient(3), b = r.coefficient(2), c = r.coefficient(1), e = r.coefficient(0);
    const Rational disc = 18 * a * b * c * e - 4 * b * b * b * e + b * b * c * c - 4 * a * c * c * c -
                          27 * a * a * e * e;
    return disc >= 0;
  }
  return is_real_rooted(r);
}

struct RefineOutcome {
  std::uint64_t checks = 0;
  std::optional<SampleWitness> witness;
};

class Refiner {
 public:
  Refiner(const RestrictionSource& source, std::optional<std::vector<double>> fixed_dir,
          std::optional<RationalVector> fixed_dir_exact, bool require_full_degree)
      : source_(source),
        fixed_dir_(std::move(fixed_dir)),
        fixed_dir_exact_(std::move(fixed_dir_exact)),
        require_full_degree_(require_full_degree) {}

  RefineOutcome run(std::uint64_t seed, std::uint64_t start, const SamplerOptions& options) const {
    RefineOutcome out;
    const std::size_t n = source_.num_vars();
    auto rng = trial_rng(seed, start, kRefineStream);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<double> x = to_doubles(sample_vector(rng, n, options.bits));
    std::vector<double> theta(n, 0.0);
    if (!fixed_dir_) {
      for (auto& t : theta) t = std::log(to_double(sample_positive_rational(rng, options.bits)));
    }
    double phi = objective(x, theta);
    double sigma_x = 0.5;
    double sigma_t = 0.3;
    constexpr std::uint64_t kMaxChecks = 4;
    for (std::uint32_t iter = 0; iter < options.refine_iterations; ++iter) {
      std::vector<double> x2 = x;
      std::vector<double> t2 = theta;
      for (auto& xi : x2) xi += sigma_x * gauss(rng);
      if (!fixed_dir_)
        for (auto& ti : t2) ti += sigma_t * gauss(rng);
      const double phi2 = objective(x2, t2);
      if (phi2 > phi) {
        x = std::move(x2);
        theta = std::move(t2);
        phi = phi2;
        sigma_x *= 1.3;
        sigma_t *= 1.3;
      } else {
        sigma_x = std::max(sigma_x * 0.95, 1e-12);
        sigma_t = std::max(sigma_t * 0.95, 1e-12);
      }
      if (phi > 1e-6 && out.checks < kMaxChecks) {
        ++out.checks;
        if (auto w = exact_check(x, theta)) {
          w->trial = out.checks - 1;
          out.witness = std::move(w);
          return out;
        }
      }
      // Restart the step size once it has collapsed.
      if (sigma_x < 1e-9 * (1 + max_abs(x))) {
        sigma_x = 0.5 * (1 + max_abs(x));
        sigma_t = 0.3;
      }
    }
    return out;
  }

 private:
  static double max_abs(const std::vector<double>& v) {
    double m = 0;
    for (double a : v) m = std::max(m, std::abs(a));
    return m;
  }

  std::vector<double> direction(const std::vector<double>& theta) const {
    if (fixed_dir_) return *fixed_dir_;
    std::vector<double> v(theta.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::exp(theta[i]);
    return v;
  }

  // Positive when the restriction has non-real roots (their largest
  // imaginary part), otherwise minus the smallest gap between real roots,
  // both relative to the root scale. Recentres x along the direction.
  double objective(std::vector<double>& x, const std::vector<double>& theta) const {
    const auto v = direction(theta);
    auto c = source_.restriction_approx(x, v);
    const std::size_t d = c.size() - 1;
    if (d < 2 || !std::isfinite(c[d]) || c[d] == 0) return -std::numeric_limits<double>::infinity();
    const double shift = -c[d - 1] / (static_cast<double>(d) * c[d]);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += shift * v[i];
    c = source_.restriction_approx(x, v);
    for (double ci : c)
      if (!std::isfinite(ci)) return -std::numeric_limits<double>::infinity();
    if (c[d] == 0) return -std::numeric_limits<double>::infinity();
    if (d <= 3) return normalized_discriminant_measure(c);
    const auto roots = approx_roots(c);
    double scale = 1e-300;
    double imag = 0;
    for (const auto& r : roots) {
      scale = std::max(scale, std::abs(r));
      imag = std::max(imag, std::abs(r.imag()));
    }
    if (imag > 1e-7 * scale) return imag / scale;
    std::vector<double> re;
    for (const auto& r : roots) re.push_back(r.real());
    std::sort(re.begin(), re.end());
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < re.size(); ++i) gap = std::min(gap, re[i] - re[i - 1]);
    return -gap / scale;
  }

  std::optional<SampleWitness> exact_check(const std::vector<double>& x,
                                           const std::vector<double>& theta) const {
    SampleWitness w;
    w.point = round_vector(x, false);
    w.direction = fixed_dir_exact_ ? *fixed_dir_exact_ : round_vector(direction(theta), true);
    UniPoly r = source_.restriction(w.point, *w.direction);
    const bool degenerate = require_full_degree_ && r.degree() < static_cast<int>(source_.degree());
    if (!degenerate && (r.is_zero() || real_rooted_fast(r))) return std::nullopt;
    w.restriction = std::move(r);
    return w;
  }

  const RestrictionSource& source_;
  std::optional<std::vector<double>> fixed_dir_;
  std::optional<RationalVector> fixed_dir_exact_;
  bool require_full_degree_;
};

// Refinement starts, then random trials, in one global trial numbering.
template <typename Trial>
SampleReport run_restriction_sampler(const Refiner* refiner, const SamplerOptions& options, Trial trial) {
  SampleReport report;
  report.seed = options.seed;
  if (refiner && options.refine_starts > 0) {
    std::vector<RefineOutcome> outcomes(options.refine_starts);
    const unsigned threads = std::max(1u, options.threads);
    for (std::uint32_t begin = 0; begin < options.refine_starts; begin += threads) {
      const std::uint32_t end = std::min<std::uint32_t>(options.refine_starts, begin + threads);
      if (threads == 1) {
        outcomes[begin] = refiner->run(options.seed, begin, options);
      } else {
        std::vector<std::thread> pool;
        for (std::uint32_t s = begin; s < end; ++s)
          pool.emplace_back([&, s] { outcomes[s] = refiner->run(options.seed, s, options); });
        for (auto& th : pool) th.join();
      }
      for (std::uint32_t s = begin; s < end; ++s) {
        if (outcomes[s].witness) {
          report.verdict = SampleVerdict::falsified;
          report.witness = std::move(outcomes[s].witness);
          report.witness->trial += report.samples_tried;
          report.samples_tried = report.witness->trial + 1;
          return report;
        }
        report.samples_tried += outcomes[s].checks;
      }
    }
  }
  const std::uint64_t offset = report.samples_tried;
  if (auto hit = first_hit(options.trials, options.threads, trial)) {
    report.verdict = SampleVerdict::falsified;
    report.witness = std::move(hit->second);
    report.witness->trial = offset + hit->first;
    report.samples_tried = offset + hit->first + 1;
  } else {
    report.samples_tried = offset + options.trials;
  }
  return report;
}

}  // namespace

RestrictionSource::RestrictionSource(Polynomial p) : p_(std::move(p)) {
  degree_ = p_.degree().value_or(0);
  build_approx();
}

RestrictionSource::RestrictionSource(Polynomial p, LinearMap map) : p_(std::move(p)), map_(std::move(map)) {
  if (map_->rows() != p_.num_vars()) {
    throw std::invalid_argument("RestrictionSource: map rows must equal the polynomial's variable count");
  }
  degree_ = p_.degree().value_or(0);
  build_approx();
}

void RestrictionSource::build_approx() {
  for (const auto& [m, c] : p_.terms()) approx_terms_.push_back({to_double(c), m.factors()});
  if (!map_) return;
  for (std::size_t r = 0; r < map_->rows(); ++r)
    for (std::size_t c = 0; c < map_->cols(); ++c)
      if (sgn((*map_)(r, c)) != 0) approx_map_.push_back({r, c, to_double((*map_)(r, c))});
}

std::vector<double> RestrictionSource::apply_approx(std::span<const double> x) const {
  if (!map_) return {x.begin(), x.end()};
  if (x.size() != map_->cols()) throw std::invalid_argument("restriction_approx: dimension mismatch");
  std::vector<double> out(map_->rows(), 0.0);
  for (const auto& e : approx_map_) out[e.row] += e.value * x[e.col];
  return out;
}

std::size_t RestrictionSource::num_vars() const { return map_ ? map_->cols() : p_.num_vars(); }

Rational RestrictionSource::evaluate(std::span<const Rational> x) const {
  if (!map_) return lorentz::evaluate(p_, x);
  const auto y = map_->apply(x);
  return lorentz::evaluate(p_, y);
}

UniPoly RestrictionSource::restriction(std::span<const Rational> base, std::span<const Rational> dir) const {
  if (!map_) return univariate_restriction(p_, base, dir);
  const auto u = map_->apply(base);
  const auto w = map_->apply(dir);
  return univariate_restriction(p_, u, w);
}

std::vector<double> RestrictionSource::restriction_approx(std::span<const double> base,
                                                          std::span<const double> dir) const {
  const std::vector<double> u = apply_approx(base);
  const std::vector<double> w = apply_approx(dir);
  if (u.size() != p_.num_vars() || w.size() != p_.num_vars()) {
    throw std::invalid_argument("restriction_approx: dimension mismatch");
  }
  std::vector<double> out(degree_ + 1, 0.0);
  std::vector<double> acc;
  for (const auto& term : approx_terms_) {
    acc.assign(1, term.coefficient);
    for (const auto& [var, e] : term.factors) {
      for (std::uint32_t k = 0; k < e; ++k) {
        acc.push_back(0.0);
        for (std::size_t i = acc.size() - 1; i > 0; --i) acc[i] = acc[i] * u[var] + acc[i - 1] * w[var];
        acc[0] *= u[var];
      }
    }
    for (std::size_t i = 0; i < acc.size() && i < out.size(); ++i) out[i] += acc[i];
  }
  return out;
}

std::string to_string(SampleVerdict v) {
  return v == SampleVerdict::falsified ? "falsified" : "not-falsified";
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

Rational sample_rational(std::mt19937_64& rng, unsigned bits) {
  const long scale = 1L << bits;
  std::uniform_int_distribution<long> dist(-scale, scale);
  Rational r(dist(rng), scale);
  r.canonicalize();
  return r;
}

Rational sample_positive_rational(std::mt19937_64& rng, unsigned bits) {
  const long scale = 1L << bits;
  std::uniform_int_distribution<long> dist(0, scale);
  Rational r(dist(rng) + 1, scale);
  r.canonicalize();
  return r;
}

SampleReport hyperbolicity_sampler(const RestrictionSource& p, std::span<const Rational> e,
                                   const SamplerOptions& options) {
  homogeneous_degree(p.base_polynomial(), "hyperbolicity_sampler");
  if (e.size() != p.num_vars()) throw std::invalid_argument("hyperbolicity_sampler: dimension mismatch");
  if (sgn(p.evaluate(e)) <= 0) throw std::domain_error("hyperbolicity_sampler: requires p(e) > 0");
  const RationalVector dir(e.begin(), e.end());
  const Refiner refiner(p, to_doubles(dir), dir, false);
  return run_restriction_sampler(&refiner, options, [&](std::uint64_t i) -> std::optional<SampleWitness> {
    auto rng = trial_rng(options.seed, i, kHyperbolicityStream);
    SampleWitness w;
    w.point = sample_vector(rng, p.num_vars(), options.bits);
    UniPoly r = p.restriction(w.point, dir);
    if (real_rooted_fast(r)) return std::nullopt;
    w.direction = dir;
    w.restriction = std::move(r);
    return w;
  });
}

SampleReport hyperbolicity_sampler(const Polynomial& p, std::span<const Rational> e,
                                   const SamplerOptions& options) {
  return hyperbolicity_sampler(RestrictionSource(p), e, options);
}

SampleReport stability_sampler(const RestrictionSource& p, const SamplerOptions& options) {
  const std::uint32_t d = homogeneous_degree(p.base_polynomial(), "stability_sampler");
  const Refiner refiner(p, std::nullopt, std::nullopt, true);
  return run_restriction_sampler(&refiner, options, [&](std::uint64_t i) -> std::optional<SampleWitness> {
    auto rng = trial_rng(options.seed, i, kStabilityStream);
    SampleWitness w;
    w.direction = sample_positive_vector(rng, p.num_vars(), options.bits);
    w.point = sample_vector(rng, p.num_vars(), options.bits);
    UniPoly r = p.restriction(w.point, *w.direction);
    if (r.degree() == static_cast<int>(d) && real_rooted_fast(r)) return std::nullopt;
    w.restriction = std::move(r);
    return w;
  });
}

SampleReport stability_sampler(const Polynomial& p, const SamplerOptions& options) {
  return stability_sampler(RestrictionSource(p), options);
}

SampleReport log_concavity_sampler(const Polynomial& f, const SamplerOptions& options) {
  homogeneous_degree(f, "log_concavity_sampler");
  if (!has_nonneg_coeffs(f)) throw std::invalid_argument("log_concavity_sampler: negative coefficient");
  SampleReport report;
  report.seed = options.seed;
  auto hit = first_hit(options.trials, options.threads, [&](std::uint64_t i) -> std::optional<SampleWitness> {
    auto rng = trial_rng(options.seed, i, kLogConcavityStream);
    SampleWitness w;
    w.point = sample_positive_vector(rng, f.num_vars(), options.bits);
    const Inertia in = inertia(hessian_at(f, w.point));
    if (in.n_pos < 2) return std::nullopt;
    w.inertia = in;
    return w;
  });
  if (hit) {
    report.verdict = SampleVerdict::falsified;
    report.witness = std::move(hit->second);
    report.witness->trial = hit->first;
    report.samples_tried = hit->first + 1;
  } else {
    report.samples_tried = options.trials;
  }
  return report;
}

bool verify_restriction_witness(const Polynomial& p, const SampleWitness& w) {
  if (!w.direction || w.point.size() != p.num_vars() || w.direction->size() != p.num_vars()) return false;
  const UniPoly r = univariate_restriction(p, w.point, *w.direction);
  if (w.restriction && !(r == *w.restriction)) return false;
  const auto d = p.degree();
  if (!d) return false;
  if (r.degree() < static_cast<int>(*d)) return true;
  return !is_real_rooted(r);
}

bool verify_log_concavity_witness(const Polynomial& f, const SampleWitness& w) {
  if (w.point.size() != f.num_vars()) return false;
  for (const auto& x : w.point)
    if (sgn(x) <= 0) return false;
  const Inertia in = inertia(hessian_at(f, w.point));
  if (w.inertia && !(in == *w.inertia)) return false;
  return in.n_pos >= 2;
}

SphereAscentResult sphere_max_ascent(const Polynomial& q, std::uint32_t starts, std::uint64_t seed,
                                     std::uint32_t iterations) {
  const std::size_t n = q.num_vars();
  std::vector<Polynomial> grad;
  for (std::uint32_t i = 0; i < n; ++i) grad.push_back(partial(q, i));
  SphereAscentResult best;
  best.value = -std::numeric_limits<double>::infinity();
  auto normalize = [](std::vector<double>& x) {
    double s = 0;
    for (double a : x) s += a * a;
    s = std::sqrt(s);
    for (double& a : x) a /= s;
  };
  for (std::uint32_t s = 0; s < starts; ++s) {
    auto rng = trial_rng(seed, s, kAscentStream);
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    std::vector<double> x(n);
    for (double& a : x) a = unif(rng);
    normalize(x);
    std::vector<double> g(n);
    for (std::uint32_t it = 0; it <= iterations; ++it) {
      const double v = evaluate_approx(q, x);
      if (v > best.value) {
        best.value = v;
        best.point = x;
      }
      if (it == iterations) break;
      for (std::size_t i = 0; i < n; ++i) g[i] = evaluate_approx(grad[i], x);
      for (std::size_t i = 0; i < n; ++i) x[i] += 0.5 * g[i];
      normalize(x);
    }
  }
  return best;
}

}  // namespace lorentz
