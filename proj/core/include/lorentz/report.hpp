#ifndef LORENTZ_REPORT_HPP
#define LORENTZ_REPORT_HPP

#include <optional>
#include <string>

#include "lorentz/directional.hpp"
#include "lorentz/gadgets.hpp"
#include "lorentz/lorentzian.hpp"
#include "lorentz/reduction.hpp"
#include "lorentz/sampling.hpp"

namespace lorentz {

// JSON serializations with a fixed key order; identical inputs give
// byte-identical text. Rationals are strings ("p/q").

std::string witness_json(const SampleWitness& w);

// {kind, verdict, witness?, samples_tried, seed, exact_ground_truth}
std::string sample_report_json(const std::string& kind, const SampleReport& report,
                               std::optional<bool> exact_ground_truth);

std::string reduction_report_json(const ReductionReport& report);

std::string lorentzian_verdict_json(const LorentzianVerdict& verdict, std::size_t num_vars);

// Gadget sidecars: {n, k, ell, N, epsilon, variable_names, construction, ...}.
// `degree` is the lifted degree when a degree lift was applied.
std::string stability_sidecar_json(const StabilityGadget& gadget, bool emitted_p_tilde,
                                   std::optional<std::uint32_t> degree = std::nullopt);
std::string quartic_sidecar_json(const QuarticGadget& gadget,
                                 std::optional<std::uint32_t> degree = std::nullopt);
std::string directional_sidecar_json(const GraphDirectionalInstance& instance);

}  // namespace lorentz

#endif  // LORENTZ_REPORT_HPP
