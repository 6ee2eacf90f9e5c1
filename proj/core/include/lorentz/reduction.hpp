#ifndef LORENTZ_REDUCTION_HPP
#define LORENTZ_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lorentz/graph.hpp"
#include "lorentz/inertia.hpp"
#include "lorentz/sampling.hpp"

namespace lorentz {

struct StabilityGadget;

enum class ReductionKind { stability, quartic_lc, directional };
enum class ReductionVerdict { agree, conflict, inconclusive_negative };

std::string to_string(ReductionKind kind);
std::string to_string(ReductionVerdict verdict);
// "stability", "quartic-lc" or "directional"; throws std::invalid_argument.
ReductionKind parse_reduction_kind(const std::string& text);

// clique_number(gadget.graph) <= gadget.k.
bool stability_verdict_exact(const StabilityGadget& gadget);

struct ReductionOptions {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  // Random trials (stability) or sampled points (quartic-lc); defaults are
  // 10^4 and 200.
  std::optional<std::uint64_t> trials;
  std::uint32_t refine_starts = 32;
  std::uint32_t refine_iterations = 3000;
  std::optional<Rational> epsilon;  // stability gadget override
};

struct ReductionReport {
  ReductionKind kind = ReductionKind::stability;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t omega = 0;
  std::vector<std::uint32_t> clique;
  bool exact_ground_truth = false;     // omega <= k
  std::optional<bool> gadget_verdict;  // what the gadget check concluded, if anything
  ReductionVerdict verdict = ReductionVerdict::agree;
  // "gadget", or "direct" for stability with k = 1 (answered by edgelessness).
  std::string construction = "gadget";
  std::optional<SampleReport> sample;
  std::optional<SampleWitness> witness;  // exactly re-verified
  std::string witness_description;
  std::uint64_t samples_tried = 0;
  std::uint64_t seed = 0;
  std::optional<Rational> ell, N, epsilon, gamma;
};

// Builds the gadget for (G, k), decides omega(G) <= k exactly and checks the
// gadget against it. Stability uses the sampler on p~ (a negative instance
// without a witness is INCONCLUSIVE-NEGATIVE), quartic-lc the clique
// indicator witness or sampled Hessians, directional the exact l versus
// a(omega) comparison. Requires 1 <= k <= n and n <= 12.
ReductionReport verify_reduction(ReductionKind kind, const Graph& g, std::uint32_t k,
                                 const ReductionOptions& options = {});

}  // namespace lorentz

#endif  // LORENTZ_REDUCTION_HPP
