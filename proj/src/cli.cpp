#include "qng/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <sstream>

#include "qng/fock_oracle.hpp"
#include "qng/minimize.hpp"
#include "qng/optimize.hpp"
#include "qng/phase_space.hpp"
#include "qng/witness.hpp"

namespace qng::cli {

namespace {

using nlohmann::json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct OutputOpts {
  std::string path;    // empty = stdout
  std::string format = "csv";
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  json config;
};

void emit(const Table& t, const OutputOpts& opts, std::ostream& out) {
  std::ostringstream body;
  if (opts.format == "json") {
    json j;
    j["config"] = t.config;
    j["rows"] = json::array();
    for (const auto& row : t.rows) {
      json r;
      for (size_t i = 0; i < t.columns.size(); ++i) r[t.columns[i]] = row[i];
      j["rows"].push_back(std::move(r));
    }
    body << j.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < t.columns.size(); ++i)
      body << (i ? "," : "") << t.columns[i];
    body << "\n";
    for (const auto& row : t.rows) {
      for (size_t i = 0; i < row.size(); ++i) body << (i ? "," : "") << row[i];
      body << "\n";
    }
  }
  if (opts.path.empty()) {
    out << body.str();
  } else {
    std::ofstream f(opts.path, std::ios::binary);
    if (!f) throw CLI::ValidationError("--out", "cannot open " + opts.path);
    f << body.str();
  }
}

std::vector<double> parse_alpha_list(const std::vector<std::string>& specs) {
  std::vector<double> out;
  for (const auto& s : specs) {
    auto part = parse_range(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  if (out.empty()) throw CLI::ValidationError("--alpha", "empty grid");
  return out;
}

double resolve_squeeze(const std::string& spec, double alpha, double xi,
                       double eps, double beta) {
  if (spec != "auto") return std::stod(spec);
  if (xi == -1.0) return s_opt_analytic(alpha, eps);
  const CatParams cat = CatParams::make(alpha, xi);
  const NoiseParam noise(eps);
  return golden_section(
      [&](double s) {
        return witness_delta(cat, noise, {s, beta}).delta;
      },
      -3.0, 3.0, 1e-10);
}

void add_output_flags(CLI::App* cmd, OutputOpts& opts) {
  cmd->add_option("--out", opts.path, "output path (default: stdout)");
  cmd->add_option("--format", opts.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
}

void add_optimizer_flags(CLI::App* cmd, OptimizerConfig& cfg) {
  cmd->add_option("--grid-s", cfg.grid_s, "coarse grid points in s");
  cmd->add_option("--grid-beta", cfg.grid_beta, "coarse grid points in beta");
  cmd->add_option("--budget", cfg.budget, "refinement evaluation budget");
}

std::vector<std::string> witness_columns() {
  return {"alpha", "xi", "epsilon", "s",     "beta",
          "w0",    "nbar_op", "bound", "delta"};
}

std::vector<std::string> witness_row(const WitnessReport& r) {
  return {g17(r.alpha), g17(r.xi),      g17(r.epsilon),
          g17(r.op.s),  g17(r.op.beta), g17(r.w0),
          g17(r.nbar_op), g17(r.bound), g17(r.delta)};
}

// ---- verify ----------------------------------------------------------

struct Check {
  std::string name;
  double max_err = 0.0;
  double tol;
  bool pass = true;

  void observe(double err) {
    max_err = std::max(max_err, std::abs(err));
    pass = max_err <= tol;
  }
};

int run_verify(int cutoff_override, double tol_override,
               const OutputOpts& opts, std::ostream& out) {
  const double tw = tol_override > 0 ? tol_override : 1e-7;
  const double tq = tol_override > 0 ? tol_override : 1e-8;
  const double tm = tol_override > 0 ? tol_override : 1e-9;
  Check quad{"analytic_vs_quadrature", 0, tq};
  Check fockw{"analytic_vs_fock_wigner", 0, tw};
  Check moments{"moments_vs_fock", 0, tm};
  Check parity{"parity_identity", 0, 1e-12};
  std::string failure;

  const double alphas[] = {0.5, 1.0, 1.5};
  const double xis[] = {-1.0, 0.0, 1.0};
  const double epss[] = {0.0, 0.3, 0.7, 1.0};
  const PhasePoint lams[] = {{0, 0}, {0.4, -0.3}, {-1.0, 0.7}};
  try {
    for (double a : alphas) {
      for (double xi : xis) {
        const CatParams cat = CatParams::make(a, xi);
        const Moments m0 = initial_moments(cat);
        if (xi == -1.0)
          parity.observe(cat_wigner(cat, {0, 0}) + 2.0 / std::numbers::pi);
        if (xi == 1.0)
          parity.observe(cat_wigner(cat, {0, 0}) - 2.0 / std::numbers::pi);
        for (double e : epss) {
          const NoiseParam noise(e);
          const Moments me = evolved_moments(m0, noise);
          const int ncut =
              cutoff_override > 0
                  ? cutoff_override
                  : fock::cutoff_for(m0.nbar + 1.0) + fock::kGuardBand;
          const fock::FockState st =
              fock::apply_loss(fock::cat_fock(cat, ncut), e);
          moments.observe(fock::expectation_nbar(st) - me.nbar);
          moments.observe(fock::expectation_a2(st) - me.a2);
          for (const auto& lam : lams) {
            const double w = lossy_cat_wigner(cat, noise, lam);
            fockw.observe(fock::wigner_at(st, lam) - w);
            if (e > 0.0)
              quad.observe(convolve_wigner_quadrature(cat, noise, lam) - w);
          }
        }
      }
    }
  } catch (const std::exception& ex) {
    failure = ex.what();
  }

  json j;
  j["config"] = {{"cutoff", cutoff_override}, {"tol", tol_override}};
  j["checks"] = json::array();
  bool all = failure.empty();
  for (const Check* c : {&quad, &fockw, &moments, &parity}) {
    j["checks"].push_back({{"name", c->name},
                           {"max_err", c->max_err},
                           {"tol", c->tol},
                           {"pass", c->pass}});
    all = all && c->pass;
  }
  if (!failure.empty()) j["error"] = failure;
  j["pass"] = all;
  if (opts.path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    std::ofstream f(opts.path, std::ios::binary);
    f << j.dump(2) << "\n";
  }
  return all ? 0 : 2;
}

}  // namespace

std::vector<double> parse_range(const std::string& spec) {
  const auto c1 = spec.find(':');
  try {
    if (c1 == std::string::npos) return {std::stod(spec)};
    const auto c2 = spec.find(':', c1 + 1);
    if (c2 == std::string::npos)
      throw CLI::ValidationError("range", "expected a:b:n in '" + spec + "'");
    const double a = std::stod(spec.substr(0, c1));
    const double b = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    const int n = std::stoi(spec.substr(c2 + 1));
    if (n < 1 || (n == 1 && a != b))
      throw CLI::ValidationError("range", "bad point count in '" + spec + "'");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i)
      out[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
    return out;
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("range", "cannot parse '" + spec + "'");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Wigner-witness detection of quantum non-Gaussianity for "
               "lossy cat states"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value config file");

  std::vector<std::string> alpha_specs;
  std::string eps_spec = "0.5", squeeze_spec = "0", strategy_spec = "squeeze";
  double xi = -1.0, disp = 0.0, tol = -1.0;
  int cutoff = 0;
  std::string x_spec = "-3:3:61", p_spec = "-3:3:61";
  OutputOpts opts;
  OptimizerConfig ocfg;

  auto* witness = app.add_subcommand("witness", "single witness evaluation");
  witness->add_option("--alpha", alpha_specs, "cat amplitude")->required();
  witness->add_option("--xi", xi, "superposition coefficient")->required();
  witness->add_option("--epsilon", eps_spec, "loss parameter");
  witness->add_option("--squeeze", squeeze_spec, "squeezing s, or 'auto'");
  witness->add_option("--disp", disp, "imaginary-axis displacement beta");
  add_output_flags(witness, opts);

  auto* sweep_odd = app.add_subcommand(
      "sweep-odd", "optimized odd-cat witness over an (alpha, eps) grid");
  sweep_odd->add_option("--alpha", alpha_specs, "alpha value or a:b:n")
      ->required();
  sweep_odd->add_option("--epsilon", eps_spec, "eps range spec")->required();
  add_output_flags(sweep_odd, opts);

  auto* sweep_even = app.add_subcommand(
      "sweep-even", "optimized even-cat witness over an (alpha, eps) grid");
  sweep_even->add_option("--alpha", alpha_specs, "alpha value or a:b:n")
      ->required();
  sweep_even->add_option("--epsilon", eps_spec, "eps range spec")->required();
  add_optimizer_flags(sweep_even, ocfg);
  add_output_flags(sweep_even, opts);

  auto* eps_max_cmd =
      app.add_subcommand("eps-max", "maximal detectable loss per alpha");
  eps_max_cmd->add_option("--alpha", alpha_specs, "alpha value or a:b:n")
      ->required();
  eps_max_cmd->add_option("--xi", xi, "cat family, -1 or +1")->required();
  eps_max_cmd
      ->add_option("--strategy", strategy_spec, "none|squeeze|disp-squeeze")
      ->check(CLI::IsMember({"none", "squeeze", "disp-squeeze"}));
  add_optimizer_flags(eps_max_cmd, ocfg);
  add_output_flags(eps_max_cmd, opts);

  auto* grid = app.add_subcommand("wigner-grid",
                                  "Wigner function on a rectangular grid");
  grid->add_option("--alpha", alpha_specs, "cat amplitude")->required();
  grid->add_option("--xi", xi, "superposition coefficient")->required();
  grid->add_option("--epsilon", eps_spec, "loss parameter");
  grid->add_option("--x", x_spec, "x grid spec a:b:n");
  grid->add_option("--p", p_spec, "p grid spec a:b:n");
  add_output_flags(grid, opts);

  auto* verify = app.add_subcommand(
      "verify", "cross-check analytic results against the Fock oracle");
  verify->add_option("--cutoff", cutoff, "Fock cutoff override");
  verify->add_option("--tol", tol, "tolerance override");
  add_output_flags(verify, opts);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (witness->parsed()) {
      const auto alphas = parse_alpha_list(alpha_specs);
      const auto epss = parse_range(eps_spec);
      const double a = alphas.front(), e = epss.front();
      const double s = resolve_squeeze(squeeze_spec, a, xi, e, disp);
      const WitnessReport r =
          witness_delta(CatParams::make(a, xi), NoiseParam(e), {s, disp});
      Table t{witness_columns(), {witness_row(r)},
              {{"command", "witness"}, {"alpha", a}, {"xi", xi},
               {"epsilon", e}, {"squeeze", squeeze_spec}, {"disp", disp}}};
      emit(t, opts, out);
      return 0;
    }

    if (sweep_odd->parsed() || sweep_even->parsed()) {
      const bool odd = sweep_odd->parsed();
      const auto alphas = parse_alpha_list(alpha_specs);
      const auto epss = parse_range(eps_spec);
      Table t;
      t.columns = witness_columns();
      t.columns.push_back("status");
      t.config = {{"command", odd ? "sweep-odd" : "sweep-even"},
                  {"alpha", alphas}, {"epsilon", epss},
                  {"grid_s", ocfg.grid_s}, {"grid_beta", ocfg.grid_beta},
                  {"budget", ocfg.budget}};
      for (double a : alphas) {
        for (double e : epss) {
          std::string status = "ok";
          OptResult r;
          try {
            r = odd ? optimize_odd(a, e) : optimize_even(a, e, ocfg);
            if (!r.converged) status = "max-evals";
          } catch (const std::exception& ex) {
            status = std::string("error: ") + ex.what();
            r = {{0.0, 0.0}, 0.0, 0, false};
          }
          const WitnessReport w = witness_delta(
              CatParams::make(a, odd ? -1.0 : 1.0), NoiseParam(e), r.op);
          auto row = witness_row(w);
          row.push_back(status);
          t.rows.push_back(std::move(row));
        }
      }
      emit(t, opts, out);
      return 0;
    }

    if (eps_max_cmd->parsed()) {
      const auto alphas = parse_alpha_list(alpha_specs);
      const Strategy strat = strategy_from_string(strategy_spec);
      Table t;
      t.columns = {"alpha", "strategy", "eps_max", "bracket"};
      t.config = {{"command", "eps-max"}, {"alpha", alphas}, {"xi", xi},
                  {"strategy", strategy_spec}};
      for (double a : alphas) {
        const EpsMaxResult r = epsilon_max(a, xi, strat, ocfg);
        t.rows.push_back({g17(r.alpha), to_string(r.strategy), g17(r.eps_max),
                          g17(r.bracket)});
      }
      emit(t, opts, out);
      return 0;
    }

    if (grid->parsed()) {
      const auto alphas = parse_alpha_list(alpha_specs);
      const auto epss = parse_range(eps_spec);
      const auto xs = parse_range(x_spec);
      const auto ps = parse_range(p_spec);
      const CatParams cat = CatParams::make(alphas.front(), xi);
      const NoiseParam noise(epss.front());
      Table t;
      t.columns = {"x", "p", "w"};
      t.config = {{"command", "wigner-grid"}, {"alpha", cat.alpha},
                  {"xi", xi}, {"epsilon", noise.epsilon}};
      for (double x : xs)
        for (double p : ps)
          t.rows.push_back(
              {g17(x), g17(p), g17(lossy_cat_wigner(cat, noise, {x, p}))});
      emit(t, opts, out);
      return 0;
    }

    if (verify->parsed()) return run_verify(cutoff, tol, opts, out);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace qng::cli
