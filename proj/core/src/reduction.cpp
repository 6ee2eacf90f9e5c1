#include "lorentz/reduction.hpp"

#include <stdexcept>

#include "lorentz/clique.hpp"
#include "lorentz/directional.hpp"
#include "lorentz/gadgets.hpp"

namespace lorentz {

namespace {

constexpr std::uint32_t kMaxReductionVertices = 12;

ReductionVerdict compare(bool truth, std::optional<bool> gadget) {
  if (!gadget) return ReductionVerdict::inconclusive_negative;
  return *gadget == truth ? ReductionVerdict::agree : ReductionVerdict::conflict;
}

void run_stability(ReductionReport& r, const Graph& g, const ReductionOptions& options) {
  if (r.k == 1) {
    r.construction = "direct";
    r.gadget_verdict = g.edge_count() == 0;
    r.witness_description = r.gadget_verdict.value()
                                ? "edgeless graph: omega <= 1"
                                : "edge " + std::to_string(g.edges()[0].first) + "-" +
                                      std::to_string(g.edges()[0].second) + " forces omega >= 2";
    return;
  }
  const StabilityGadget gadget = build_stability_gadget(g, r.k, options.epsilon);
  r.ell = gadget.ell;
  r.N = gadget.N;
  r.epsilon = gadget.epsilon;

  SamplerOptions so;
  so.seed = options.seed;
  so.threads = options.threads;
  so.trials = options.trials.value_or(10000);
  so.refine_starts = options.refine_starts;
  so.refine_iterations = options.refine_iterations;
  const RestrictionSource source(gadget.p, gadget.M);
  SampleReport sample = stability_sampler(source, so);
  r.samples_tried = sample.samples_tried;
  if (sample.falsified()) {
    if (!verify_restriction_witness(gadget.p_tilde, *sample.witness)) {
      throw std::logic_error("verify_reduction: stability witness failed exact re-verification");
    }
    r.gadget_verdict = false;
    r.witness = sample.witness;
    r.witness_description = "p~(x + t v) is not real-rooted: " + sample.witness->restriction->to_string();
  } else if (r.exact_ground_truth) {
    r.gadget_verdict = true;
  }
  r.sample = std::move(sample);
}

void run_quartic(ReductionReport& r, const Graph& g, const ReductionOptions& options) {
  const QuarticGadget gadget = build_quartic_lc_gadget(g, r.k);
  r.gamma = gadget.gamma;
  r.N = gadget.N;
  if (!r.exact_ground_truth) {
    SampleWitness w;
    w.point = quartic_witness_point(gadget, r.clique);
    const Inertia in = inertia(hessian_at(gadget.g, w.point));
    w.inertia = in;
    r.samples_tried = 1;
    r.gadget_verdict = in.n_pos < 2;
    r.witness_description = "Hessian of g at (clique indicator, 0, 1) has inertia " + in.to_string();
    if (in.n_pos >= 2) r.witness = std::move(w);
    return;
  }
  SamplerOptions so;
  so.seed = options.seed;
  so.threads = options.threads;
  so.trials = options.trials.value_or(200);
  SampleReport sample = log_concavity_sampler(gadget.g, so);
  r.samples_tried = sample.samples_tried;
  r.gadget_verdict = !sample.falsified();
  if (sample.falsified()) {
    r.witness = sample.witness;
    r.witness_description = "Hessian of g has inertia " + sample.witness->inertia->to_string();
  }
  r.sample = std::move(sample);
}

void run_directional(ReductionReport& r, const Graph& g) {
  const GraphDirectionalInstance inst = build_graph_directional_gadget(g, r.k);
  r.ell = inst.ell;
  r.gadget_verdict = graph_directional_verdict(inst.ell, r.omega);
  r.witness_description = "l(k) = " + to_string(inst.ell) +
                          (r.gadget_verdict.value() ? " >= " : " < ") + "a(" + std::to_string(r.omega) +
                          ") = sqrt(" + to_string(a_squared(r.omega)) + ")";
}

}  // namespace

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::stability:
      return "stability";
    case ReductionKind::quartic_lc:
      return "quartic-lc";
    case ReductionKind::directional:
      return "directional";
  }
  return "unknown";
}

std::string to_string(ReductionVerdict verdict) {
  switch (verdict) {
    case ReductionVerdict::agree:
      return "AGREE";
    case ReductionVerdict::conflict:
      return "CONFLICT";
    case ReductionVerdict::inconclusive_negative:
      return "INCONCLUSIVE-NEGATIVE";
  }
  return "unknown";
}

ReductionKind parse_reduction_kind(const std::string& text) {
  if (text == "stability") return ReductionKind::stability;
  if (text == "quartic-lc") return ReductionKind::quartic_lc;
  if (text == "directional") return ReductionKind::directional;
  throw std::invalid_argument("unknown reduction kind '" + text + "'");
}

bool stability_verdict_exact(const StabilityGadget& gadget) {
  return clique_number(gadget.graph) <= gadget.k;
}

ReductionReport verify_reduction(ReductionKind kind, const Graph& g, std::uint32_t k,
                                 const ReductionOptions& options) {
  if (g.vertex_count() > kMaxReductionVertices) {
    throw std::invalid_argument("verify_reduction: at most " + std::to_string(kMaxReductionVertices) +
                                " vertices supported");
  }
  if (k < 1 || k > g.vertex_count()) throw std::invalid_argument("verify_reduction: k must satisfy 1 <= k <= n");
  ReductionReport r;
  r.kind = kind;
  r.n = g.vertex_count();
  r.k = k;
  r.seed = options.seed;
  r.clique = max_clique(g);
  r.omega = static_cast<std::uint32_t>(r.clique.size());
  r.exact_ground_truth = r.omega <= k;
  switch (kind) {
    case ReductionKind::stability:
      run_stability(r, g, options);
      break;
    case ReductionKind::quartic_lc:
      run_quartic(r, g, options);
      break;
    case ReductionKind::directional:
      run_directional(r, g);
      break;
  }
  r.verdict = compare(r.exact_ground_truth, r.gadget_verdict);
  return r;
}

}  // namespace lorentz
