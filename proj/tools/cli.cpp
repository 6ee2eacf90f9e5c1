#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lorentz/clique.hpp"
#include "lorentz/directional.hpp"
#include "lorentz/gadgets.hpp"
#include "lorentz/io.hpp"
#include "lorentz/lorentzian.hpp"
#include "lorentz/reduction.hpp"
#include "lorentz/report.hpp"

namespace lorentz::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input;
  bool json = false;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> trials;
  unsigned threads = 1;
  std::optional<std::uint32_t> grid;
  std::optional<std::string> epsilon;
  std::string kind;
  std::string graph;
  std::uint32_t k = 0;
  std::optional<std::uint32_t> degree;
  std::string emit = "p-tilde";
  std::optional<std::string> out_path;
  std::optional<std::string> at;
  std::optional<std::string> base;
  std::optional<std::string> direction;
};

// A bad input with a message already formatted for the user.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RationalVector parse_point(const std::string& text) {
  RationalVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty coordinate in '" + text + "'");
    out.push_back(parse_rational(std::string_view(item).substr(b, e - b + 1)));
  }
  if (out.empty()) throw UsageError("empty point");
  return out;
}

std::string load(const std::string& path) {
  try {
    return read_file(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

template <typename Parse>
auto parse_file(const std::string& path, Parse parse) {
  const std::string text = load(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                     e.message());
  }
}

Polynomial load_polynomial(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return parse_polynomial(t); });
}

Graph load_graph(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return parse_graph(t); });
}

std::string inertia_text(const Inertia& in) { return in.to_string(); }

int cmd_check_lorentzian(const Options& o, std::ostream& out) {
  const Polynomial f = load_polynomial(o.input);
  const LorentzianVerdict v = is_lorentzian(f);
  if (o.json) {
    out << lorentzian_verdict_json(v, f.num_vars()) << "\n";
  } else if (v.is_lorentzian) {
    out << "lorentzian (" << v.derivatives_checked << (v.derivatives_checked == 1 ? " derivative" : " derivatives")
        << " checked)\n";
  } else {
    out << "not lorentzian: " << v.describe(f.num_vars()) << "\n";
  }
  return v.is_lorentzian ? kExitHolds : kExitFails;
}

int cmd_check_cubic_lc(const Options& o, std::ostream& out) {
  const Polynomial f = load_polynomial(o.input);
  const auto h = homogeneity(f);
  if (f.is_zero() || !h.homogeneous || h.degree != 3u) throw UsageError("expected a homogeneous cubic");
  if (!has_nonneg_coeffs(f)) throw UsageError("expected nonnegative coefficients");
  const LorentzianVerdict v = is_lorentzian(f);
  if (o.json) {
    Json j = Json::parse(lorentzian_verdict_json(v, f.num_vars()));
    j["kind"] = "cubic-lc";
    out << j.dump(2) << "\n";
  } else if (v.is_lorentzian) {
    out << "log-concave\n";
  } else {
    out << "not log-concave: " << v.describe(f.num_vars()) << "\n";
  }
  return v.is_lorentzian ? kExitHolds : kExitFails;
}

int cmd_check_directional(const Options& o, std::ostream& out) {
  Json j;
  j["kind"] = "directional";
  bool holds = true;
  std::string text;

  if (o.base || o.direction) {
    if (!o.base || !o.direction) throw UsageError("--base and --direction must be given together");
    if (o.input.empty()) throw UsageError("a polynomial file is required with --base");
    const Polynomial f = load_polynomial(o.input);
    const RationalVector base = parse_point(*o.base);
    const RationalVector dir = parse_point(*o.direction);
    if (base.size() != f.num_vars() || dir.size() != f.num_vars()) {
      throw UsageError("point dimension does not match vars " + std::to_string(f.num_vars()));
    }
    if (std::any_of(base.begin(), base.end(), [](const Rational& r) { return sgn(r) < 0; })) {
      throw UsageError("--base must be nonnegative");
    }
    if (sgn(evaluate(f, base)) <= 0) {
      throw UsageError("f(base) <= 0: log f is undefined at this boundary point");
    }
    const Rational g = directional_lc_numerator(f, base, dir);
    holds = sgn(g) <= 0;
    j["verdict"] = holds ? "holds" : "fails";
    j["exact"] = true;
    j["numerator"] = to_string(g);
    text = std::string(holds ? "log-concave" : "not log-concave") + " in direction " + to_string(dir) +
           " at " + to_string(base) + " (f D^2f - (Df)^2 = " + to_string(g) + ")";
  } else if (!o.graph.empty()) {
    const Graph g = load_graph(o.graph);
    if (o.k < 1 || o.k > g.vertex_count()) throw UsageError("--k must satisfy 1 <= k <= n");
    const auto inst = build_graph_directional_gadget(g, o.k);
    const std::uint32_t omega = clique_number(g);
    holds = graph_directional_verdict(inst.ell, omega);
    j["verdict"] = holds ? "holds" : "fails";
    j["exact"] = true;
    j["omega"] = omega;
    j["ell"] = to_string(inst.ell);
    text = std::string(holds ? "log-concave" : "not log-concave") + " in the z direction: l(k) = " +
           to_string(inst.ell) + (holds ? " >= " : " < ") + "a(" + std::to_string(omega) + ")";
  } else {
    if (o.input.empty()) throw UsageError("expected a cubic q file, --graph, or --base/--direction");
    const Polynomial q = load_polynomial(o.input);
    DirectionalGadget gadget;
    try {
      gadget = build_directional_gadget(q);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const DirectionalVerdict v = gadget_directional_verdict(gadget, std::nullopt, o.grid);
    holds = v.log_concave;
    j["verdict"] = v.exact ? (holds ? "holds" : "fails") : (holds ? "not-falsified" : "falsified");
    j["exact"] = v.exact;
    if (v.witness) {
      j["witness"] = {{"grid_coordinates", *v.grid_coordinates}, {"point", Json::array()}};
      for (const auto& x : *v.witness) j["witness"]["point"].push_back(to_string(x));
    }
    j["grid"] = v.grid;
    j["points_scanned"] = v.points_scanned;
    j["boundary_points"] = v.boundary_points;
    text = v.exact ? (holds ? "log-concave in the z direction (q = 0)" : "not log-concave")
                   : (holds ? "not falsified on the grid (" + std::to_string(v.points_scanned) + " points, " +
                                  std::to_string(v.boundary_points) + " boundary points skipped)"
                            : "falsified at x = " + to_string(*v.witness));
  }
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << text << "\n";
  }
  return holds ? kExitHolds : kExitFails;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

int cmd_build_gadget(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  if (o.k < 1 || o.k > g.vertex_count()) throw UsageError("--k must satisfy 1 <= k <= n");
  Polynomial poly;
  std::string sidecar;
  if (o.kind == "stability") {
    if (o.k < 2) {
      throw UsageError("the stability gadget needs k >= 2 (l(1) = 0); omega <= 1 iff the graph is edgeless, "
                       "which here is " + std::string(g.edge_count() == 0 ? "true" : "false"));
    }
    if (o.emit != "p" && o.emit != "p-tilde") throw UsageError("--emit must be p or p-tilde");
    std::optional<Rational> eps;
    if (o.epsilon) eps = parse_rational(*o.epsilon);
    StabilityGadget gadget;
    try {
      gadget = build_stability_gadget(g, o.k, eps);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    poly = o.emit == "p" ? gadget.p : gadget.p_tilde;
    if (o.degree) poly = lift_degree_stability(poly, *o.degree);
    sidecar = stability_sidecar_json(gadget, o.emit == "p-tilde", o.degree);
  } else if (o.kind == "quartic-lc") {
    const QuarticGadget gadget = build_quartic_lc_gadget(g, o.k);
    poly = gadget.g;
    if (o.degree) poly = lift_degree_lc(poly, *o.degree);
    sidecar = quartic_sidecar_json(gadget, o.degree);
  } else if (o.kind == "directional") {
    const auto inst = build_graph_directional_gadget(g, o.k);
    if (!inst.gadget) {
      throw UsageError("q_G / l(k) is undefined since l(" + std::to_string(o.k) +
                       ") = 0; use check-directional --graph for the exact answer");
    }
    if (o.degree) throw UsageError("--degree applies to stability and quartic-lc gadgets");
    poly = inst.gadget->assembled;
    sidecar = directional_sidecar_json(inst);
  } else {
    throw UsageError("--kind must be stability, quartic-lc or directional");
  }

  const std::string text = format_polynomial(poly);
  if (o.out_path) {
    write_text(*o.out_path, text);
    write_text(*o.out_path + ".json", sidecar + "\n");
  }
  if (o.json) {
    Json j = Json::parse(sidecar);
    if (!o.out_path) j["polynomial"] = text;
    out << j.dump(2) << "\n";
  } else if (!o.out_path) {
    out << text;
  } else {
    out << "wrote " << *o.out_path << " (" << poly.term_count() << " terms, " << poly.num_vars()
        << " variables) and " << *o.out_path << ".json\n";
  }
  return kExitHolds;
}

int cmd_verify_reduction(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  ReductionKind kind;
  try {
    kind = parse_reduction_kind(o.kind);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.k < 1 || o.k > g.vertex_count()) throw UsageError("--k must satisfy 1 <= k <= n");
  ReductionOptions ro;
  ro.seed = o.seed;
  ro.threads = o.threads;
  ro.trials = o.trials;
  if (o.epsilon) ro.epsilon = parse_rational(*o.epsilon);
  ReductionReport r;
  try {
    r = verify_reduction(kind, g, o.k, ro);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.json) {
    out << reduction_report_json(r) << "\n";
  } else {
    out << to_string(r.verdict) << " (" << to_string(kind) << ", n = " << r.n << ", k = " << r.k
        << ", omega = " << r.omega << ", ground truth: " << (r.exact_ground_truth ? "holds" : "fails")
        << ", samples " << r.samples_tried << ")\n";
    if (!r.witness_description.empty()) out << r.witness_description << "\n";
  }
  switch (r.verdict) {
    case ReductionVerdict::agree:
      return kExitHolds;
    case ReductionVerdict::conflict:
      return kExitFails;
    case ReductionVerdict::inconclusive_negative:
      return kExitInconclusive;
  }
  return kExitFails;
}

int cmd_clique(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.input);
  std::vector<std::uint32_t> c;
  try {
    c = max_clique(g);
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
  if (o.json) {
    out << Json{{"omega", c.size()}, {"clique", c}}.dump(2) << "\n";
  } else {
    out << "omega = " << c.size() << "\nclique:";
    for (auto v : c) out << " " << v;
    out << "\n";
  }
  return kExitHolds;
}

int cmd_inertia(const Options& o, std::ostream& out) {
  const std::string text = load(o.input);
  SymMatrix a;
  try {
    std::istringstream ss(text);
    std::string first;
    // First token that is not inside a comment decides the format.
    std::string line;
    while (std::getline(ss, line)) {
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      std::istringstream ls(line);
      if (ls >> first) break;
    }
    if (first == "vars") {
      const Polynomial f = parse_polynomial(text);
      if (o.at) {
        const RationalVector w = parse_point(*o.at);
        if (w.size() != f.num_vars()) throw UsageError("--at dimension does not match vars");
        a = hessian_at(f, w);
      } else {
        const auto d = f.degree();
        if (d && *d > 2) throw UsageError("--at is required for polynomials of degree above 2");
        a = quadratic_hessian(f);
      }
    } else {
      if (o.at) throw UsageError("--at applies to polynomial input only");
      a = parse_matrix(text);
    }
  } catch (const ParseError& e) {
    throw UsageError(o.input + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                     e.message());
  }
  const Inertia in = inertia(a);
  if (o.json) {
    out << Json{{"n_pos", in.n_pos}, {"n_zero", in.n_zero}, {"n_neg", in.n_neg}, {"size", in.size()}}.dump(2)
        << "\n";
  } else {
    out << inertia_text(in) << "\n";
  }
  return kExitHolds;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json, "Print a JSON report");
  sub->add_option("--seed", o.seed, "Sampler seed");
  sub->add_option("--trials", o.trials, "Sampler trial budget")->check(CLI::PositiveNumber);
  sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lorentzian, log-concavity and stability tests with reduction gadgets", "lorentz"};
  app.require_subcommand(1);
  Options o;

  auto* lor = app.add_subcommand("check-lorentzian", "Decide whether a polynomial is Lorentzian");
  lor->add_option("file", o.input, "Polynomial file")->required();
  add_common(lor, o);

  auto* cubic = app.add_subcommand("check-cubic-lc", "Decide log-concavity of a homogeneous cubic");
  cubic->add_option("file", o.input, "Polynomial file")->required();
  add_common(cubic, o);

  auto* dir = app.add_subcommand("check-directional", "Directional log-concavity in the z direction");
  dir->add_option("file", o.input, "Cubic q (gadget scan) or f (with --base/--direction)");
  dir->add_option("--graph", o.graph, "Graph file: exact verdict for q = q_G / l(k)");
  dir->add_option("--k", o.k, "Clique bound k");
  dir->add_option("--grid", o.grid, "Simplex subdivisions for the scan")->check(CLI::PositiveNumber);
  dir->add_option("--base", o.base, "Point x >= 0, comma-separated rationals");
  dir->add_option("--direction", o.direction, "Direction v, comma-separated rationals");
  add_common(dir, o);

  auto* build = app.add_subcommand("build-gadget", "Construct a reduction gadget from a graph");
  build->add_option("--kind", o.kind, "stability | quartic-lc | directional")->required();
  build->add_option("--graph", o.graph, "Graph file")->required();
  build->add_option("--k", o.k, "Clique bound k")->required();
  build->add_option("--epsilon", o.epsilon, "Rational epsilon override (stability)");
  build->add_option("--degree", o.degree, "Lift to this degree");
  build->add_option("--emit", o.emit, "p | p-tilde (stability)");
  build->add_option("--out", o.out_path, "Write the polynomial here and the sidecar to <out>.json");
  add_common(build, o);

  auto* verify = app.add_subcommand("verify-reduction", "Check a gadget against the exact clique verdict");
  verify->add_option("--kind", o.kind, "stability | quartic-lc | directional")->required();
  verify->add_option("--graph", o.graph, "Graph file")->required();
  verify->add_option("--k", o.k, "Clique bound k")->required();
  verify->add_option("--epsilon", o.epsilon, "Rational epsilon override (stability)");
  add_common(verify, o);

  auto* clique = app.add_subcommand("clique", "Maximum clique of a graph");
  clique->add_option("file", o.input, "Graph file")->required();
  add_common(clique, o);

  auto* in = app.add_subcommand("inertia", "Inertia of a symmetric matrix or a Hessian");
  in->add_option("file", o.input, "Matrix file, or polynomial file")->required();
  in->add_option("--at", o.at, "Evaluation point for a polynomial Hessian");
  add_common(in, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitUsage;
  }

  try {
    if (lor->parsed()) return cmd_check_lorentzian(o, out);
    if (cubic->parsed()) return cmd_check_cubic_lc(o, out);
    if (dir->parsed()) return cmd_check_directional(o, out);
    if (build->parsed()) return cmd_build_gadget(o, out);
    if (verify->parsed()) return cmd_verify_reduction(o, out);
    if (clique->parsed()) return cmd_clique(o, out);
    if (in->parsed()) return cmd_inertia(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace lorentz::cli
