#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nckg/bounds.hpp"
#include "nckg/core.hpp"
#include "nckg/kgnc.hpp"
#include "nckg/ncfield.hpp"
#include "nckg/nrlimit.hpp"
#include "nckg/nu.hpp"
#include "nckg/output.hpp"
#include "nckg/sweep.hpp"
#include "nckg/verify.hpp"

namespace {

using nckg::output::Json;
using nckg::output::kSchemaVersion;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string config;
  std::string format = "json";
  std::string out;
};

std::vector<int> parse_range(const std::string& text, const char* flag) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    if (hi < lo) throw UsageError(std::string(flag) + ": empty range '" + text + "'");
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError(std::string(flag) + ": expected an integer or a..b, got '" + text + "'");
  }
}

nckg::PhysicalConstants constants_for(const Globals& g) {
  std::string path = g.config;
  if (path.empty())
    if (const char* env = std::getenv("NCKG_CONFIG")) path = env;
  return path.empty() ? nckg::PhysicalConstants{} : nckg::load_constants(path);
}

Json opt(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json coeffs(const nckg::Polynomial& p) {
  Json a = Json::array();
  for (double v : p.coeffs()) a.push_back(v);
  return a;
}

Json record(const std::string& command, Json inputs, Json results, const std::vector<std::string>& warnings) {
  Json r;
  r["schema_version"] = kSchemaVersion;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  r["results"] = std::move(results);
  r["warnings"] = warnings;
  return r;
}

void write(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw nckg::ConfigError("cannot open output file '" + g.out + "'");
  f << text;
}

// Table-shaped results go to CSV directly; everything else is JSON only.
void emit(const Globals& g, const Json& rec, const std::vector<std::string>& columns = {}) {
  if (g.format == "csv") {
    if (columns.empty()) throw UsageError("--format csv is not available for '" + rec["command"].get<std::string>() + "'");
    std::vector<std::string> comments;
    for (const auto& w : rec["warnings"]) comments.push_back("warning: " + w.get<std::string>());
    write(g, nckg::output::to_csv(columns, rec["results"], comments));
  } else {
    write(g, nckg::output::dump_json(rec));
  }
}

// ------------------------------------------------------------ spectrum

struct SpectrumFlags {
  std::string model = "rel", n = "0", l = "0", ml = "0", angular = "spherical", units = "ev";
  double theta = 0.0;
  std::optional<double> alpha;
};

int cmd_spectrum(const Globals& g, const SpectrumFlags& f) {
  auto c = constants_for(g).with_theta(f.theta);
  if (f.alpha) c = c.with_alpha(*f.alpha);
  c.validate();
  const auto model = nckg::model_from_string(f.model);
  const auto mode = nckg::angular_mode_from_string(f.angular);
  const double scale = f.units == "ev" ? c.m_e_ev : 1.0;

  std::vector<std::string> warnings;
  std::vector<nckg::StateSpec> states;
  for (int n : parse_range(f.n, "--n"))
    for (int l : parse_range(f.l, "--l")) {
      if (model == nckg::Model::nonrelativistic && l >= n) {
        warnings.push_back("skipped nr n=" + std::to_string(n) + " l=" + std::to_string(l) + ": requires l < n");
        continue;
      }
      const std::vector<int> ms = [&] {
        if (f.ml != "all") return parse_range(f.ml, "--ml");
        std::vector<int> all;
        for (int m = -l; m <= l; ++m) all.push_back(m);
        return all;
      }();
      for (int m : ms) {
        if (std::abs(m) > l) {
          warnings.push_back("skipped n=" + std::to_string(n) + " l=" + std::to_string(l) + " m_l=" + std::to_string(m) +
                             ": requires |m_l| <= l");
          continue;
        }
        states.push_back({model, n, l, m});
      }
    }
  if (states.empty()) throw nckg::DomainError("no valid states in the requested ranges");
  std::sort(states.begin(), states.end());

  const auto rows = nckg::spectrum_sweep(states, c, mode);
  Json results = Json::array();
  for (const auto& row : rows) {
    if (row.error_kind) throw nckg::DomainError(*row.error_message);
    const auto& s = row.state;
    auto scaled = [&](const std::optional<double>& v) { return v ? std::optional<double>(*v * scale) : std::nullopt; };
    Json j;
    j["model"] = nckg::to_string(s.model);
    j["n"] = s.n;
    j["l"] = s.l;
    j["m_l"] = s.m_l;
    j["n_principal"] = s.model == nckg::Model::relativistic ? s.n + s.l + 1 : s.n;
    j["e0"] = row.e0 * scale;
    j["shift_theta1"] = opt(scaled(row.shift_theta1));
    j["shift_theta2_f5"] = opt(scaled(row.shift_theta2_f5));
    j["shift_theta2_f6"] = opt(scaled(row.shift_theta2_f6));
    j["total"] = opt(scaled(row.total));
    j["first_order_converged"] = row.shift_theta1.has_value();
    j["second_order_converged"] = row.shift_theta2_f5.has_value() && row.shift_theta2_f6.has_value();
    results.push_back(j);
    for (const auto& w : row.warnings)
      warnings.push_back("n=" + std::to_string(s.n) + " l=" + std::to_string(s.l) + " m_l=" + std::to_string(s.m_l) +
                         ": " + w);
  }
  Json inputs;
  inputs["model"] = f.model;
  inputs["n"] = f.n;
  inputs["l"] = f.l;
  inputs["ml"] = f.ml;
  inputs["theta_ev_minus2"] = f.theta;
  inputs["alpha"] = c.alpha;
  inputs["m_e_ev"] = c.m_e_ev;
  inputs["angular"] = nckg::to_string(mode);
  inputs["units"] = f.units;
  emit(g, record("spectrum", inputs, results, warnings),
       {"model", "n", "l", "m_l", "n_principal", "e0", "shift_theta1", "shift_theta2_f5", "shift_theta2_f6", "total",
        "first_order_converged", "second_order_converged"});
  return 0;
}

// ------------------------------------------------------------- moments

struct MomentFlags {
  std::string model = "rel", n = "0", l = "0", k = "4..6";
  std::optional<double> alpha;
};

int cmd_moments(const Globals& g, const MomentFlags& f) {
  auto c = constants_for(g);
  if (f.alpha) c = c.with_alpha(*f.alpha);
  c.validate();
  const auto model = nckg::model_from_string(f.model);
  std::vector<std::string> warnings;
  std::vector<nckg::MomentTask> tasks;
  for (int n : parse_range(f.n, "--n"))
    for (int l : parse_range(f.l, "--l"))
      for (int k : parse_range(f.k, "--k")) {
        if (k < 4 || k > 6) throw UsageError("--k: only 4, 5 and 6 are available");
        if (model == nckg::Model::nonrelativistic && l >= n) {
          warnings.push_back("skipped nr n=" + std::to_string(n) + " l=" + std::to_string(l) + ": requires l < n");
          continue;
        }
        tasks.push_back({{model, n, l, 0}, k});
      }
  if (tasks.empty()) throw nckg::DomainError("no valid states in the requested ranges");
  std::sort(tasks.begin(), tasks.end());

  const auto rows = nckg::moment_sweep(tasks, c);
  Json results = Json::array();
  for (const auto& row : rows) {
    const auto& s = row.task.state;
    const std::string tag = "n=" + std::to_string(s.n) + " l=" + std::to_string(s.l) + " k=" + std::to_string(row.task.k);
    Json j;
    j["model"] = nckg::to_string(s.model);
    j["n"] = s.n;
    j["l"] = s.l;
    j["k"] = row.task.k;
    if (row.comparison) {
      const auto& m = *row.comparison;
      // Hydrogenic moments are also given in units of a_B^-k.
      const double bohr = s.model == nckg::Model::nonrelativistic ? std::pow(nckg::bohr_radius(c), row.task.k) : NAN;
      j["closed_form"] = m.closed_form;
      j["closed_form_bohr_units"] = std::isnan(bohr) ? Json(nullptr) : Json(m.closed_form * bohr);
      j["oracle"] = m.oracle.value;
      j["oracle_error_estimate"] = m.oracle.abs_error_estimate;
      j["paper_fidelity"] = opt(m.paper_fidelity);
      j["rel_discrepancy"] = m.rel_discrepancy;
      j["paper_discrepancy"] = opt(m.paper_discrepancy);
      j["error"] = nullptr;
      if (m.paper_discrepancy && *m.paper_discrepancy > 1e-8)
        warnings.push_back(tag + ": printed formula differs from quadrature by " +
                           nckg::output::format_double(*m.paper_discrepancy) + " (relative)");
    } else {
      for (const char* key : {"closed_form", "closed_form_bohr_units", "oracle", "oracle_error_estimate",
                              "paper_fidelity", "rel_discrepancy", "paper_discrepancy"})
        j[key] = nullptr;
      j["error"] = *row.error_kind;
      warnings.push_back(tag + ": " + *row.error_kind + ": " + *row.error_message);
    }
    results.push_back(j);
  }
  Json inputs;
  inputs["model"] = f.model;
  inputs["n"] = f.n;
  inputs["l"] = f.l;
  inputs["k"] = f.k;
  inputs["alpha"] = c.alpha;
  inputs["units"] = "natural (m_e^k)";
  emit(g, record("moments", inputs, results, warnings),
       {"model", "n", "l", "k", "closed_form", "closed_form_bohr_units", "oracle", "oracle_error_estimate",
        "paper_fidelity", "rel_discrepancy", "paper_discrepancy", "error"});
  return 0;
}

// ------------------------------------------------------------------ nu

struct NuFlags {
  int n = 0, l = 0;
  std::optional<double> alpha;
};

bool admissible(const nckg::NUBranch& b) {
  const double slope = b.tau.coeff(1);
  return slope < 0.0 && -b.tau.coeff(0) / slope >= 0.0 && b.regular_at_origin;
}

int cmd_nu(const Globals& g, const NuFlags& f) {
  auto c = constants_for(g);
  if (f.alpha) c.alpha = *f.alpha;
  if (!(c.alpha >= 0.0 && c.alpha < 1.0)) throw nckg::DomainError("alpha must lie in [0, 1)");
  const nckg::QuantumNumbers q(f.n, f.l, 0);
  // alpha = 0 is the free limit E = m_e; the library constants reject it.
  const double closed = c.alpha == 0.0 ? 1.0 : nckg::unperturbed_energy(q, c);
  const auto sol = nckg::solve_kg_coulomb_energy(f.n, f.l, c.alpha, closed);
  std::vector<std::string> warnings;

  const auto problem = nckg::kg_coulomb_problem(sol.energy, f.l, c.alpha);
  const auto branches = nckg::k_candidates(problem);
  Json list = Json::array();
  int count = 0;
  for (const auto& b : branches) {
    Json j;
    j["k"] = b.k;
    j["sign"] = b.sign == nckg::BranchSign::plus ? "+" : "-";
    j["pi"] = coeffs(b.pi);
    j["tau"] = coeffs(b.tau);
    j["lambda"] = b.lambda;
    j["origin_exponent"] = b.origin_exponent;
    j["regular_at_origin"] = b.regular_at_origin;
    j["admissible"] = admissible(b);
    count += admissible(b);
    list.push_back(j);
  }
  Json selected = nullptr;
  try {
    const auto b = nckg::select_branch(branches);
    selected = Json::object();
    selected["k"] = b.k;
    selected["sign"] = b.sign == nckg::BranchSign::plus ? "+" : "-";
    selected["tau"] = coeffs(b.tau);
    selected["lambda"] = b.lambda;
    selected["lambda_printed"] = nckg::kg_coulomb_lambda_printed(sol.energy, f.l, c.alpha);
    selected["eigenvalue_residual"] = nckg::eigenvalue_residual(b, f.n, problem.sigma);
  } catch (const nckg::Error& e) {
    warnings.push_back(std::string("branch selection at the root: ") + e.kind() + ": " + e.what());
  }

  Json results;
  results["problem"] = {{"sigma", coeffs(problem.sigma)},
                        {"tau_tilde", coeffs(problem.tau_tilde)},
                        {"sigma_tilde", coeffs(problem.sigma_tilde)}};
  results["branches"] = list;
  results["admissible_count"] = count;
  results["selected"] = selected;
  results["energy_rootfind"] = sol.energy;
  results["energy_closed"] = closed;
  results["difference"] = std::abs(sol.energy - closed);
  results["iterations"] = sol.iterations;
  Json inputs;
  inputs["n"] = f.n;
  inputs["l"] = f.l;
  inputs["alpha"] = c.alpha;
  inputs["units"] = "m_e";
  emit(g, record("nu", inputs, results, warnings));
  return 0;
}

// ----------------------------------------------------------- potential

struct PotentialFlags {
  double theta = 0.0, rmin = 0.1, rmax = 10.0, energy = 1.0;
  int points = 50, l = 0, ml = 0;
  std::string angular = "spherical";
  std::optional<double> alpha;
};

int cmd_potential(const Globals& g, const PotentialFlags& f) {
  auto c = constants_for(g).with_theta(f.theta);
  if (f.alpha) c = c.with_alpha(*f.alpha);
  c.validate();
  if (f.points < 1) throw UsageError("--points must be >= 1");
  if (!(f.rmin > 0.0 && f.rmax >= f.rmin)) throw UsageError("need 0 < --rmin <= --rmax");
  if (f.points == 1 && f.rmax != f.rmin) throw UsageError("--points 1 needs --rmin == --rmax");
  const auto mode = nckg::angular_mode_from_string(f.angular);
  Json results = Json::array();
  for (int i = 0; i < f.points; ++i) {
    const double r = f.points == 1 ? f.rmin : f.rmin + (f.rmax - f.rmin) * i / (f.points - 1);
    nckg::FieldPoint p;
    p.r = r;
    p.position = nckg::Vec3{r, 0.0, 0.0};
    p.theta_ev2 = f.theta;
    p.energy = f.energy;
    p.l = f.l;
    p.m_l = f.ml;
    const auto a = nckg::ai_deformed(p, c);
    const auto t = nckg::perturbation_terms(p, c, mode);
    Json j;
    j["r"] = r;
    j["a0"] = nckg::a0_deformed(p, c);
    j["ai_abs"] = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    j["angular_momentum"] = t.angular_momentum;
    j["energy_coupling"] = t.energy_coupling;
    j["transverse"] = t.transverse;
    j["contact"] = t.contact;
    results.push_back(j);
  }
  Json inputs;
  inputs["theta_ev_minus2"] = f.theta;
  inputs["rmin"] = f.rmin;
  inputs["rmax"] = f.rmax;
  inputs["points"] = f.points;
  inputs["energy"] = f.energy;
  inputs["l"] = f.l;
  inputs["m_l"] = f.ml;
  inputs["angular"] = nckg::to_string(mode);
  inputs["alpha"] = c.alpha;
  inputs["units"] = "natural (r in 1/m_e, potentials in m_e)";
  inputs["ai_position"] = "(r, 0, 0)";
  inputs["theta_contraction"] = nckg::kThetaContraction;
  emit(g, record("potential", inputs, results, {}),
       {"r", "a0", "ai_abs", "angular_momentum", "energy_coupling", "transverse", "contact"});
  return 0;
}

// --------------------------------------------------------------- bound

struct BoundFlags {
  std::string state = "2,1,1", model = "nr", order = "first", angular = "spherical";
  std::optional<double> accuracy_hz, accuracy_ev;
  std::optional<double> alpha;
};

Json breakdown_json(const nckg::EnergyBreakdown& b) {
  return {{"shift_theta1", b.shift_theta1},
          {"shift_theta2_f5", b.shift_theta2_f5},
          {"shift_theta2_f6", b.shift_theta2_f6},
          {"shift", b.shift()}};
}

int cmd_bound(const Globals& g, const BoundFlags& f) {
  auto c = constants_for(g);
  if (f.alpha) c = c.with_alpha(*f.alpha);
  c.validate();
  const auto parts = [&] {
    std::vector<int> v;
    std::string s = f.state;
    for (std::size_t pos = 0; pos <= s.size();) {
      const auto comma = s.find(',', pos);
      const auto piece = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      const auto r = parse_range(piece, "--state");
      if (r.size() != 1) throw UsageError("--state expects n,l,ml");
      v.push_back(r[0]);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (v.size() != 3) throw UsageError("--state expects n,l,ml");
    return v;
  }();
  if (f.accuracy_hz && f.accuracy_ev) throw UsageError("give only one of --accuracy-hz and --accuracy-ev");
  nckg::BoundRequest req;
  req.model = nckg::model_from_string(f.model);
  req.n = parts[0];
  req.l = parts[1];
  req.m_l = parts[2];
  req.order = nckg::bound_order_from_string(f.order);
  req.angular = nckg::angular_mode_from_string(f.angular);
  const double hz = f.accuracy_hz.value_or(nckg::kLambShiftAccuracyHz);
  req.accuracy_ev = f.accuracy_ev ? *f.accuracy_ev : nckg::hz_to_ev(hz, c);
  const auto b = nckg::theta_bound(req, c);

  Json inputs;
  inputs["model"] = nckg::to_string(req.model);
  inputs["state"] = {{"n", req.n}, {"l", req.l}, {"m_l", req.m_l}};
  inputs["order"] = nckg::to_string(req.order);
  inputs["angular"] = nckg::to_string(req.angular);
  inputs["accuracy_hz"] = f.accuracy_ev ? Json(nullptr) : Json(hz);
  inputs["accuracy_ev"] = req.accuracy_ev;
  inputs["alpha"] = c.alpha;
  Json results;
  results["theta_max_ev2"] = b.theta_max_ev2;
  results["theta_max_gev2"] = b.theta_max_gev2;
  results["lambda_gev"] = b.lambda_gev;
  results["dominant_term"] = b.dominant_term;
  results["first_order_coefficient_ev"] = b.first_order_coefficient;
  results["second_order_coefficient_ev"] = b.second_order_coefficient;
  results["shift_at_bound_ev"] = breakdown_json(b.shift_at_bound);
  results["roundtrip_rel_error"] = b.roundtrip_rel_error;
  results["roundtrip_passed"] = b.roundtrip_rel_error <= 1e-10;
  results["paper_reference_value_gev2"] = nckg::kPaperThetaBoundGeV2;
  results["ratio_to_paper"] = b.ratio_to_paper;
  emit(g, record("bound", inputs, results, {}));
  return 0;
}

// -------------------------------------------------------------- verify

int cmd_verify(const Globals& g, bool timings) {
  Json results = Json::array();
  std::vector<std::string> warnings;
  bool all = true;
  auto run = [&](const std::vector<nckg::verify::Check>& checks, const char* suite) {
    for (const auto& check : checks) {
      const auto r = nckg::verify::run_check(check);
      all = all && r.passed;
      Json j;
      j["suite"] = suite;
      j["id"] = r.id;
      j["title"] = r.title;
      j["passed"] = r.passed;
      j["measured"] = r.measured;
      j["tolerance"] = r.tolerance;
      if (timings) {
        j["seconds"] = r.seconds;
        j["time_limit"] = r.time_limit;
      }
      j["notes"] = r.notes;
      results.push_back(j);
      for (const auto& n : r.notes)
        if (n.rfind("warning:", 0) == 0) warnings.push_back(r.id + ": " + n);
    }
  };
  run(nckg::verify::acceptance_checks(), "acceptance");
  run(nckg::verify::invariant_checks(), "invariant");
  std::vector<std::string> columns{"suite", "id", "title", "passed", "measured", "tolerance"};
  if (timings) {
    columns.push_back("seconds");
    columns.push_back("time_limit");
  }
  emit(g, record("verify", {{"timings", timings}}, results, warnings), columns);
  return all ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-commutative Klein-Gordon Coulomb spectrum to second order in theta"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config, "JSON constants file (fallback: $NCKG_CONFIG)");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "output path (default stdout)");

  const auto models = CLI::IsMember({"rel", "nr"});
  const auto modes = CLI::IsMember({"spherical", "exact"});
  std::function<int()> action;

  SpectrumFlags sf;
  auto* spectrum = app.add_subcommand("spectrum", "E0 and theta shifts over a state grid");
  spectrum->add_option("--model", sf.model)->check(models);
  spectrum->add_option("--n", sf.n, "radial (rel) or principal (nr) quantum number, a or a..b");
  spectrum->add_option("--l", sf.l, "orbital quantum number, a or a..b");
  spectrum->add_option("--ml", sf.ml, "magnetic quantum number, a, a..b or all");
  spectrum->add_option("--theta", sf.theta, "theta in eV^-2");
  spectrum->add_option("--alpha", sf.alpha);
  spectrum->add_option("--angular", sf.angular, "transverse angular average")->check(modes);
  spectrum->add_option("--units", sf.units)->check(CLI::IsMember({"ev", "natural"}));
  spectrum->callback([&] { action = [&] { return cmd_spectrum(g, sf); }; });

  MomentFlags mf;
  auto* moments = app.add_subcommand("moments", "closed-form <r^-k> against quadrature and printed forms");
  moments->add_option("--model", mf.model)->check(models);
  moments->add_option("--n", mf.n);
  moments->add_option("--l", mf.l);
  moments->add_option("--k", mf.k, "4..6 by default");
  moments->add_option("--alpha", mf.alpha);
  moments->callback([&] { action = [&] { return cmd_moments(g, mf); }; });

  NuFlags nf;
  auto* nu = app.add_subcommand("nu", "Nikiforov-Uvarov branches and eigen-energy for one state");
  nu->add_option("--n", nf.n)->check(CLI::NonNegativeNumber);
  nu->add_option("--l", nf.l)->check(CLI::NonNegativeNumber);
  nu->add_option("--alpha", nf.alpha);
  nu->callback([&] { action = [&] { return cmd_nu(g, nf); }; });

  PotentialFlags pf;
  auto* potential = app.add_subcommand("potential", "deformed potentials and perturbation terms on a radial grid");
  potential->add_option("--theta", pf.theta, "theta in eV^-2");
  potential->add_option("--rmin", pf.rmin);
  potential->add_option("--rmax", pf.rmax);
  potential->add_option("--points", pf.points);
  potential->add_option("--energy", pf.energy, "E multiplying the theta^2/r^5 term, units of m_e");
  potential->add_option("--l", pf.l);
  potential->add_option("--ml", pf.ml);
  potential->add_option("--angular", pf.angular)->check(modes);
  potential->add_option("--alpha", pf.alpha);
  potential->callback([&] { action = [&] { return cmd_potential(g, pf); }; });

  BoundFlags bf;
  auto* bound = app.add_subcommand("bound", "largest theta compatible with a spectroscopic accuracy");
  bound->add_option("--state", bf.state, "n,l,ml");
  bound->add_option("--model", bf.model)->check(models);
  bound->add_option("--accuracy-hz", bf.accuracy_hz);
  bound->add_option("--accuracy-ev", bf.accuracy_ev);
  bound->add_option("--order", bf.order)->check(CLI::IsMember({"first", "second", "both"}));
  bound->add_option("--angular", bf.angular)->check(modes);
  bound->add_option("--alpha", bf.alpha);
  bound->callback([&] { action = [&] { return cmd_bound(g, bf); }; });

  bool timings = false;
  auto* verify = app.add_subcommand("verify", "run the acceptance and invariant suites");
  verify->add_flag("--timings", timings, "include wall-clock seconds per check");
  verify->callback([&] { action = [&] { return cmd_verify(g, timings); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const nckg::Error& e) {
    std::cerr << nckg::output::dump_json(Json{{"error", e.kind()}, {"message", e.what()}}, 0);
    return kExitDomain;
  }
}
