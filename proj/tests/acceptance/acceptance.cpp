// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lorentz/clique.hpp"
#include "lorentz/directional.hpp"
#include "lorentz/gadgets.hpp"
#include "lorentz/inertia.hpp"
#include "lorentz/lorentzian.hpp"
#include "lorentz/real_roots.hpp"
#include "lorentz/reduction.hpp"
#include "lorentz/sampling.hpp"
#include "lorentz/sqrt_compare.hpp"
#include "support.hpp"

namespace lorentz {
namespace {

using Clock = std::chrono::steady_clock;
using testing::Gen;

constexpr double kGoldenSeconds = 10.0;
constexpr std::uint64_t kGoldenTrials = 100000;
constexpr double kLorentzianSuiteSeconds = 5.0;
constexpr int kRandomCubics = 200;
constexpr std::uint64_t kCubicSamplerPoints = 500;
constexpr std::uint64_t kSweepTrials = 10000;
constexpr std::uint64_t kSweepEscalatedTrials = 1000000;
constexpr double kSweepSeconds = 600.0;
constexpr double kAscentTolerance = 1e-4;
constexpr int kDepressedPairs = 500;
constexpr std::uint32_t kSandwichMaxN = 12;
constexpr int kInertiaMatrices = 100;
constexpr std::size_t kInertiaMaxDim = 8;
constexpr double kScalingSeconds = 10.0;
constexpr double kScalingMaxExponent = 4.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Notes {
 public:
  void fail(const std::string& why) {
    if (pass_) first_ = why;
    pass_ = false;
    ++failures_;
  }
  bool check(bool ok, const std::string& why) {
    if (!ok) fail(why);
    return ok;
  }
  Outcome outcome(const std::string& summary) const {
    if (pass_) return {true, summary};
    return {false, first_ + (failures_ > 1 ? " (+" + std::to_string(failures_ - 1) + " more)" : "")};
  }

 private:
  bool pass_ = true;
  std::string first_;
  int failures_ = 0;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double v, int digits = 2) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

Polynomial var(std::size_t n, std::uint32_t i) { return Polynomial::variable(n, i); }

// With S the sum of all ten variables and d_i = z_i - w_i:
//   S^3 - 3 eps^2 S |d|^2 + (400/39) eps^3 (d_x0 d_x1 d_y01 + d_x1 d_x2 d_y12).
Polynomial golden_p_tilde(const Rational& eps) {
  const std::size_t n = 10;
  Polynomial s(n), norm2(n);
  std::vector<Polynomial> d;
  for (std::uint32_t i = 0; i < n; ++i) s += var(n, i);
  for (std::uint32_t i = 0; i < 5; ++i) {
    d.push_back(var(n, i) - var(n, 5 + i));
    norm2 += d.back() * d.back();
  }
  const Polynomial cross = d[0] * d[1] * d[3] + d[1] * d[2] * d[4];
  return s.pow(3) - Rational(3) * eps * eps * (s * norm2) + Rational(400, 39) * eps * eps * eps * cross;
}

Outcome golden_example() {
  Notes notes;
  const auto start = Clock::now();
  const StabilityGadget g = build_stability_gadget(Graph::path(3), 2);
  notes.check(g.ell == Rational(39, 200), "ell = " + g.ell.get_str());
  notes.check(g.N == Rational(400, 39), "N = " + g.N.get_str());
  notes.check(g.epsilon == Rational(1, 10000), "epsilon = " + g.epsilon.get_str());
  notes.check(g.p_tilde.num_vars() == 10, "p~ has " + std::to_string(g.p_tilde.num_vars()) + " variables");
  notes.check(g.p_tilde == golden_p_tilde(g.epsilon), "p~ differs from the displayed expansion");
  SamplerOptions o;
  o.trials = kGoldenTrials;
  o.seed = 0;
  const SampleReport r = stability_sampler(RestrictionSource(g.p, g.M), o);
  notes.check(!r.falsified(), "sampler falsified p~");
  notes.check(r.samples_tried == kGoldenTrials, "samples tried " + std::to_string(r.samples_tried));
  const double elapsed = seconds_since(start);
  notes.check(elapsed < kGoldenSeconds, "took " + fixed(elapsed) + " s");
  return notes.outcome("ell=39/200 N=400/39 eps=1/10000, " + std::to_string(g.p_tilde.term_count()) +
                       " terms match, " + std::to_string(r.samples_tried) + " trials not falsified, " +
                       fixed(elapsed) + " s");
}

Outcome lorentzian_suite() {
  Notes notes;
  const auto start = Clock::now();
  int accepted = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint32_t d = 1; d <= n; ++d) {
      const bool ok = is_lorentzian(testing::elementary_symmetric(n, d)).is_lorentzian;
      accepted += ok;
      notes.check(ok, "e_" + std::to_string(d) + " in " + std::to_string(n) + " variables rejected");
    }
  Gen gen(2002);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 5));
    const auto count = static_cast<std::uint32_t>(gen.integer(1, 4));
    const auto f = gen.product_of_nonneg_linear_forms(n, count);
    const bool ok = is_lorentzian(f).is_lorentzian;
    accepted += ok;
    notes.check(ok, "product of linear forms rejected: " + f.to_string());
  }
  const bool monomial = is_lorentzian(testing::poly(3, {{1, {1, 1, 1}}})).is_lorentzian;
  accepted += monomial;
  notes.check(monomial, "x1 x2 x3 rejected");

  struct Negative {
    const char* name;
    Polynomial f;
    FailureKind kind;
    std::size_t components;
  };
  const std::vector<Negative> negatives{
      {"x1^2+x2^2", testing::poly(2, {{1, {2, 0}}, {1, {0, 2}}}), FailureKind::decomposable, 2},
      {"x1x2+x3x4", testing::poly(4, {{1, {1, 1, 0, 0}}, {1, {0, 0, 1, 1}}}), FailureKind::decomposable, 2},
      {"x1^3+x2^3", testing::poly(2, {{1, {3, 0}}, {1, {0, 3}}}), FailureKind::decomposable, 2},
  };
  for (const auto& neg : negatives) {
    const LorentzianVerdict v = is_lorentzian(neg.f);
    if (!notes.check(!v.is_lorentzian && v.failure.has_value(), std::string(neg.name) + " accepted")) continue;
    notes.check(v.failure->kind == neg.kind,
                std::string(neg.name) + " witness kind " + to_string(v.failure->kind));
    notes.check(v.failure->components == neg.components, std::string(neg.name) + " component count");
    notes.check(v.failure->alpha.degree() == 0, std::string(neg.name) + " witness not at alpha = 0");
  }
  // x1^2 + x2^2 also has the bad Hessian (2, 0, 0) at alpha = 0.
  const LorentzianVerdict squares = is_lorentzian(negatives[0].f);
  notes.check(squares.failure && squares.failure->inertia == Inertia{2, 0, 0},
              "x1^2+x2^2 inertia not recorded as (2, 0, 0)");
  const double elapsed = seconds_since(start);
  notes.check(elapsed < kLorentzianSuiteSeconds, "took " + fixed(elapsed) + " s");
  return notes.outcome(std::to_string(accepted) + " accepted, 3 rejected as decomposable, " + fixed(elapsed) + " s");
}

Outcome cubic_equivalence() {
  Notes notes;
  Gen gen(2003);
  int accepted = 0, vertex_checked = 0;
  for (int trial = 0; trial < kRandomCubics; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 4));
    Polynomial f = gen.homogeneous(n, 3, static_cast<std::size_t>(gen.integer(1, 8)), true);
    if (gen.coin() && n > 1) f = gen.product_of_nonneg_linear_forms(n, 3) + f * Rational(1, 50);
    const bool lc = cubic_is_log_concave(f);
    if (lc) {
      ++accepted;
      SamplerOptions o;
      o.trials = kCubicSamplerPoints;
      o.seed = static_cast<std::uint64_t>(trial);
      notes.check(!log_concavity_sampler(f, o).falsified(), "accepted cubic falsified: " + f.to_string());
      continue;
    }
    const LorentzianVerdict v = is_lorentzian(f);
    notes.check(!v.is_lorentzian, "cubic_is_log_concave and is_lorentzian disagree on " + f.to_string());
    if (!v.failure || v.failure->kind != FailureKind::bad_inertia || v.failure->alpha.degree() != 1) continue;
    const std::uint32_t i = v.failure->alpha.factors().front().first;
    // The Hessian of a cubic is sum_j x_j M_j with M_j the Hessian of d_j f,
    // so at the vertex e_i it is M_i.
    RationalVector vertex(n);
    vertex[i] = 1;
    const SymMatrix at_vertex = hessian_at(f, vertex);
    const SymMatrix mi = quadratic_hessian(partial(f, i));
    bool same = true;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) same = same && at_vertex(r, c) == mi(r, c);
    notes.check(same, "Hessian at the vertex is not M_i for " + f.to_string());
    notes.check(inertia(at_vertex).n_pos >= 2, "vertex Hessian has < 2 positive eigenvalues: " + f.to_string());
    if (sgn(evaluate(f, vertex)) > 0)
      notes.check(!log_concave_at(f, vertex), "point test accepts the vertex for " + f.to_string());
    ++vertex_checked;
  }
  return notes.outcome(std::to_string(accepted) + " accepted and never falsified, " +
                       std::to_string(vertex_checked) + " rejections falsified at a vertex");
}

Outcome reduction_sweep() {
  Notes notes;
  const auto start = Clock::now();
  int runs = 0, escalated = 0, graphs = 0;
  for (std::uint32_t n = 1; n <= 5; ++n)
    for (const Graph& g : testing::graphs_up_to_isomorphism(n)) {
      ++graphs;
      for (std::uint32_t k = 1; k <= n; ++k)
        for (auto kind : {ReductionKind::stability, ReductionKind::quartic_lc, ReductionKind::directional}) {
          ReductionOptions o;
          if (kind == ReductionKind::stability) o.trials = kSweepTrials;
          ReductionReport r = verify_reduction(kind, g, k, o);
          if (r.verdict == ReductionVerdict::inconclusive_negative) {
            ++escalated;
            o.trials = kSweepEscalatedTrials;
            r = verify_reduction(kind, g, k, o);
          }
          ++runs;
          notes.check(r.verdict == ReductionVerdict::agree,
                      to_string(kind) + " n=" + std::to_string(n) + " m=" + std::to_string(g.edge_count()) +
                          " k=" + std::to_string(k) + ": " + to_string(r.verdict));
        }
    }
  const double elapsed = seconds_since(start);
  notes.check(elapsed < kSweepSeconds, "took " + fixed(elapsed) + " s");
  return notes.outcome(std::to_string(runs) + " runs over " + std::to_string(graphs) + " graphs AGREE (" +
                       std::to_string(escalated) + " escalated), " + fixed(elapsed) + " s");
}

Outcome max_formula() {
  Notes notes;
  const std::vector<Graph> graphs{
      Graph(2, {{0, 1}}), Graph::path(3), Graph::path(4), Graph::complete(3), Graph::complete(4),
      Graph::cycle(4),    Graph::cycle(5), Graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}),
      Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), Graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {0, 3}}),
  };
  double worst = 0;
  for (const Graph& g : graphs) {
    const std::uint32_t omega = clique_number(g);
    const double a = std::sqrt(to_double(a_squared(omega)));
    const SphereAscentResult r = sphere_max_ascent(build_q_G(g), 8, 7);
    worst = std::max(worst, std::abs(r.value - a));
    notes.check(std::abs(r.value - a) <= kAscentTolerance,
                "omega=" + std::to_string(omega) + ": ascent " + std::to_string(r.value) + " vs " + std::to_string(a));
  }
  std::ostringstream s;
  s << graphs.size() << " graphs, worst gap " << worst;
  return notes.outcome(s.str());
}

Outcome depressed_cubic() {
  Notes notes;
  Gen gen(2006);
  int log_concave = 0;
  for (int trial = 0; trial < kDepressedPairs; ++trial) {
    const Rational b = gen.nonneg_rational(12, 5), c = gen.nonneg_rational(12, 5);
    const bool exact = depressed_cubic_log_concave(b, c);
    log_concave += exact;
    notes.check(exact == (sgn(testing::depressed_g_grid_max(b, c)) <= 0),
                "b=" + b.get_str() + " c=" + c.get_str());
  }
  notes.check(depressed_cubic_log_concave(3, 2), "(3, 2) rejected");
  notes.check(testing::depressed_g_grid_max(3, 2) == 0, "g does not touch 0 at (3, 2)");
  return notes.outcome(std::to_string(kDepressedPairs) + " pairs agree (" + std::to_string(log_concave) +
                       " log-concave), (3, 2) on the boundary");
}

Outcome sandwich() {
  Notes notes;
  int pairs = 0;
  for (std::uint32_t n = 2; n <= kSandwichMaxN; ++n)
    for (std::uint32_t k = 2; k < n; ++k) {
      ++pairs;
      const Rational l = ell_of_k(n, k);
      notes.check(sandwich_check(n, k), "sandwich_check(" + std::to_string(n) + ", " + std::to_string(k) + ")");
      notes.check(compare_to_sqrt(l, a_squared(k)) != std::strong_ordering::less,
                  "l < a(k) at n=" + std::to_string(n) + " k=" + std::to_string(k));
      notes.check(compare_to_sqrt(l, a_squared(k + 1)) == std::strong_ordering::less,
                  "l >= a(k+1) at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  return notes.outcome(std::to_string(pairs) + " (n, k) pairs");
}

// Roots in the interval counted with multiplicity: a root of multiplicity m
// is a root of p, gcd(p, p'), ... , m times over.
std::size_t roots_with_multiplicity(UniPoly p, const Interval& interval) {
  std::size_t total = 0;
  while (p.degree() > 0) {
    total += real_root_count(p, interval);
    p = gcd(p, p.derivative());
  }
  return total;
}

Outcome inertia_correctness() {
  Notes notes;
  Gen gen(2008);
  std::size_t singular = 0;
  for (int trial = 0; trial < kInertiaMatrices; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(1, static_cast<std::int64_t>(kInertiaMaxDim)));
    const SymMatrix a = gen.symmetric(n);
    const UniPoly chi = testing::characteristic_polynomial(a);
    // multiplicity of the root 0 is the number of vanishing low coefficients
    std::size_t at_zero = 0;
    for (const auto& c : chi.coefficients()) {
      if (sgn(c) != 0) break;
      ++at_zero;
    }
    Inertia sturm;
    sturm.n_zero = at_zero;
    sturm.n_neg = roots_with_multiplicity(chi, {std::nullopt, Rational(0)}) - at_zero;
    sturm.n_pos = roots_with_multiplicity(chi, {Rational(0), std::nullopt});
    notes.check(sturm.size() == n, "characteristic polynomial not real-rooted for " + a.to_string());
    singular += at_zero > 0;
    notes.check(inertia(a) == sturm, "n=" + std::to_string(n) + ": " + inertia(a).to_string() + " vs " +
                                         sturm.to_string() + " for " + a.to_string());
  }
  return notes.outcome(std::to_string(kInertiaMatrices) + " matrices up to " + std::to_string(kInertiaMaxDim) +
                       "x" + std::to_string(kInertiaMaxDim) + " (" + std::to_string(singular) + " singular)");
}

Outcome scaling() {
  Notes notes;
  Gen gen(2009);
  const std::vector<std::size_t> sizes{10, 20, 40, 60};
  std::vector<double> times;
  for (std::size_t n : sizes) {
    const Polynomial f = gen.product_of_nonneg_linear_forms(n, 3);
    const auto start = Clock::now();
    const LorentzianVerdict v = is_lorentzian(f);
    times.push_back(std::max(seconds_since(start), 1e-6));
    notes.check(v.is_lorentzian, "product of linear forms rejected at n=" + std::to_string(n));
  }
  notes.check(times.back() < kScalingSeconds, "n=60 took " + fixed(times.back()) + " s");
  // least-squares slope of log t against log n
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    mx += std::log(static_cast<double>(sizes[i]));
    my += std::log(times[i]);
  }
  mx /= static_cast<double>(sizes.size());
  my /= static_cast<double>(sizes.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double dx = std::log(static_cast<double>(sizes[i])) - mx;
    sxy += dx * (std::log(times[i]) - my);
    sxx += dx * dx;
  }
  const double slope = sxy / sxx;
  notes.check(slope < kScalingMaxExponent, "growth exponent " + fixed(slope));
  std::ostringstream s;
  s << "n=60 in " << fixed(times.back(), 3) << " s, growth exponent " << fixed(slope);
  return notes.outcome(s.str());
}

}  // namespace
}  // namespace lorentz

int main() {
  using namespace lorentz;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"golden P3 stability gadget", golden_example},
      {"Lorentzian decision suite", lorentzian_suite},
      {"cubic log-concavity equivalence", cubic_equivalence},
      {"reduction soundness sweep", reduction_sweep},
      {"sphere maximum of q_G", max_formula},
      {"depressed cubic criterion", depressed_cubic},
      {"ell sandwich", sandwich},
      {"inertia vs characteristic polynomial", inertia_correctness},
      {"is_lorentzian scaling", scaling},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
