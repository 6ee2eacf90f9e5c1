#include "lorentz/report.hpp"

#include <json.hpp>

namespace lorentz {

namespace {

using Json = nlohmann::ordered_json;

Json rational_json(const std::optional<Rational>& r) {
  if (!r) return nullptr;
  return to_string(*r);
}

Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json inertia_json(const Inertia& in) {
  return Json{{"n_pos", in.n_pos}, {"n_zero", in.n_zero}, {"n_neg", in.n_neg}};
}

Json witness_object(const SampleWitness& w) {
  Json out;
  out["point"] = vector_json(w.point);
  out["direction"] = w.direction ? vector_json(*w.direction) : Json(nullptr);
  if (w.restriction) {
    out["restriction"] = vector_json(w.restriction->coefficients());
    out["restriction_text"] = w.restriction->to_string();
  } else {
    out["restriction"] = nullptr;
  }
  out["inertia"] = w.inertia ? inertia_json(*w.inertia) : Json(nullptr);
  out["trial"] = w.trial;
  return out;
}

}  // namespace

std::string witness_json(const SampleWitness& w) { return witness_object(w).dump(2); }

std::string sample_report_json(const std::string& kind, const SampleReport& report,
                               std::optional<bool> exact_ground_truth) {
  Json j;
  j["kind"] = kind;
  j["verdict"] = to_string(report.verdict);
  if (report.witness) j["witness"] = witness_object(*report.witness);
  j["samples_tried"] = report.samples_tried;
  j["seed"] = report.seed;
  j["exact_ground_truth"] = exact_ground_truth ? Json(*exact_ground_truth) : Json(nullptr);
  return j.dump(2);
}

std::string reduction_report_json(const ReductionReport& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["verdict"] = to_string(r.verdict);
  if (r.witness) j["witness"] = witness_object(*r.witness);
  j["samples_tried"] = r.samples_tried;
  j["seed"] = r.seed;
  j["exact_ground_truth"] = r.exact_ground_truth;
  j["gadget_verdict"] = r.gadget_verdict ? Json(*r.gadget_verdict) : Json(nullptr);
  j["detail"] = r.witness_description;
  j["n"] = r.n;
  j["k"] = r.k;
  j["omega"] = r.omega;
  j["clique"] = r.clique;
  j["construction"] = r.construction;
  j["ell"] = rational_json(r.ell);
  j["N"] = rational_json(r.N);
  j["epsilon"] = rational_json(r.epsilon);
  j["gamma"] = rational_json(r.gamma);
  return j.dump(2);
}

std::string lorentzian_verdict_json(const LorentzianVerdict& v, std::size_t num_vars) {
  Json j;
  j["kind"] = "lorentzian";
  j["verdict"] = v.is_lorentzian ? "holds" : "fails";
  if (v.failure) {
    Json w;
    w["alpha"] = v.failure->alpha.dense(num_vars);
    w["kind"] = to_string(v.failure->kind);
    w["components"] = v.failure->components;
    w["inertia"] = v.failure->inertia ? inertia_json(*v.failure->inertia) : Json(nullptr);
    w["description"] = v.describe(num_vars);
    j["witness"] = w;
  }
  j["derivatives_checked"] = v.derivatives_checked;
  return j.dump(2);
}

std::string stability_sidecar_json(const StabilityGadget& g, bool emitted_p_tilde,
                                   std::optional<std::uint32_t> degree) {
  Json j;
  j["construction"] = "stability";
  j["n"] = g.graph.vertex_count();
  j["k"] = g.k;
  j["ell"] = to_string(g.ell);
  j["N"] = to_string(g.N);
  j["epsilon"] = to_string(g.epsilon);
  j["epsilon_bound"] = to_string(g.epsilon_bound);
  j["gamma"] = nullptr;
  j["m"] = g.m;
  j["emitted"] = emitted_p_tilde ? "p-tilde" : "p";
  j["degree"] = degree ? Json(*degree) : Json(nullptr);
  auto names = emitted_p_tilde ? g.p_tilde_variable_names() : g.p_variable_names();
  if (degree && *degree > 3) names.push_back("lift");
  j["variable_names"] = names;
  return j.dump(2);
}

std::string quartic_sidecar_json(const QuarticGadget& g, std::optional<std::uint32_t> degree) {
  Json j;
  j["construction"] = "quartic-lc";
  j["n"] = g.graph.vertex_count();
  j["k"] = g.k;
  j["ell"] = nullptr;
  j["N"] = to_string(g.N);
  j["epsilon"] = nullptr;
  j["gamma"] = to_string(g.gamma);
  j["degree"] = degree ? Json(*degree) : Json(nullptr);
  auto names = g.variable_names();
  if (degree && *degree > 4) names.push_back("lift");
  j["variable_names"] = names;
  return j.dump(2);
}

std::string directional_sidecar_json(const GraphDirectionalInstance& inst) {
  Json j;
  j["construction"] = "directional";
  j["n"] = inst.graph.vertex_count();
  j["k"] = inst.k;
  j["ell"] = to_string(inst.ell);
  j["N"] = nullptr;
  j["epsilon"] = nullptr;
  j["gamma"] = nullptr;
  j["defined"] = inst.gadget.has_value();
  std::vector<std::string> names;
  if (inst.gadget) {
    for (std::uint32_t i = 0; i < inst.graph.vertex_count(); ++i) names.push_back("x" + std::to_string(i));
    for (const auto& [a, b] : inst.graph.edges())
      names.push_back("y" + std::to_string(a) + "_" + std::to_string(b));
    names.push_back("z");
  }
  j["degree"] = nullptr;
  j["variable_names"] = names;
  return j.dump(2);
}

}  // namespace lorentz
