// Command-line driver: load a scenario (preset and/or JSON config), run one
// analysis subcommand, and emit CSV artifacts plus a report.txt summary.
//
// Exit codes: 0 success, 1 config error, 2 precondition failure (e.g. the
// requested lambda is not at resonance, or the degree is undefined),
// 3 numerical failure.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "parares/averaged_map.hpp"
#include "parares/config.hpp"
#include "parares/degree.hpp"
#include "parares/evolution.hpp"
#include "parares/index_check.hpp"
#include "parares/nonlinearity.hpp"
#include "parares/report.hpp"
#include "parares/solver.hpp"
#include "parares/spectral.hpp"

namespace {

using namespace parares;

struct Scenario {
  ScenarioConfig cfg;
  SpectralOperator op;
  NemytskiiOperator F;
  double lambda = 0.0;
};

// Resolve the resonant eigenvalue: explicit lambda wins, otherwise the k-th
// distinct eigenvalue cluster.
Scenario build_scenario(const ScenarioConfig& cfg) {
  Scenario s{cfg, build_operator(cfg.op_spec, cfg.period), {}, 0.0};
  s.F = NemytskiiOperator{cfg.field, s.op.grid};
  if (cfg.lambda) {
    s.lambda = *cfg.lambda;
  } else {
    auto clusters = cfg.rank_tol > 0
                        ? distinct_eigenvalue_clusters(s.op, cfg.rank_tol)
                        : distinct_eigenvalue_clusters(s.op);
    if (cfg.k > static_cast<int>(clusters.size()))
      throw NotAtResonanceError("not at resonance: eigenvalue index " +
                                std::to_string(cfg.k) + " exceeds the " +
                                std::to_string(clusters.size()) +
                                " distinct eigenvalues of the discretization");
    s.lambda =
        s.op.eigenvalues[clusters[static_cast<std::size_t>(cfg.k - 1)].front()];
  }
  return s;
}

void echo_config(ReportWriter& rw, const Scenario& s,
                 const std::string& command) {
  rw.line("command: " + command);
  rw.line("config:");
  std::istringstream echo(s.cfg.echo.dump(2));
  for (std::string l; std::getline(echo, l);) rw.line("  " + l);
  rw.kv("lambda", s.lambda);
  rw.kv("period", s.cfg.period);
  rw.line("");
}

void cmd_spectrum(const Scenario& s, ReportWriter& rw) {
  const Eigen::VectorXd& ev = s.op.eigenvalues;
  double tol = default_rank_tol(ev.cwiseAbs().maxCoeff());
  std::vector<std::vector<double>> rows;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    double mult = 0.0;  // 1 when the eigenvalue is part of a repeated cluster
    if ((i > 0 && std::abs(ev[i] - ev[i - 1]) <= tol) ||
        (i + 1 < ev.size() && std::abs(ev[i + 1] - ev[i]) <= tol))
      mult = 1.0;
    rows.push_back({static_cast<double>(i + 1), ev[i], mult});
  }
  rw.write_csv("spectrum.csv", {"index", "eigenvalue", "multiplicity_flag"},
               rows);
  rw.kv("n_eigenvalues", static_cast<double>(ev.size()));
  rw.kv("min_eigenvalue", ev.minCoeff());
  rw.kv("max_eigenvalue", ev.maxCoeff());
  rw.check("spectrum computed and exported", true);
}

void cmd_resonance_check(const Scenario& s, ReportWriter& rw) {
  ResonanceReport rep =
      verify_resonance_conditions(s.op, s.lambda, s.cfg.period);
  MultiplicityReport mult =
      multiplicity_report(s.op, s.lambda, s.cfg.period, s.cfg.rank_tol);
  rw.kv("dim_ker_operator", static_cast<double>(rep.dim_ker_operator));
  rw.kv("dim_ker_monodromy", static_cast<double>(rep.dim_ker_monodromy));
  rw.kv("spectral_gap", rep.spectral_gap);
  rw.kv("mu_lambda", static_cast<double>(mult.mu_lambda));
  rw.kv("d_k", static_cast<double>(mult.d_k));
  rw.kv("parity_dk", static_cast<double>(mult.parity_lhs));
  rw.kv("parity_mu_plus_dimN", static_cast<double>(mult.parity_rhs));
  rw.check("self-adjoint with compact resolvent (A1)", rep.a1_holds);
  rw.check("monodromy kernel matches operator kernel (A3)", rep.a3_holds);
}

void cmd_ll_check(const Scenario& s, ReportWriter& rw) {
  KernelData kernel = kernel_data(s.op, s.lambda, s.cfg.rank_tol);
  LLVerdict v = ll_verdict(s.F, kernel, s.cfg.solver.n_sphere,
                           s.cfg.solver.n_t);
  const char* name = v.kind == LLVerdictKind::HoldsPositive ? "holds_positive"
                     : v.kind == LLVerdictKind::HoldsNegative
                         ? "holds_negative"
                         : "fails";
  rw.kv("dim_N", static_cast<double>(kernel.dim_N));
  rw.kv("verdict", name);
  rw.kv("min_abs_integral", v.min_abs_value);
  rw.kv("n_sampled", static_cast<double>(v.n_sampled));
  rw.kv("sampled_only", v.sampled_only ? "true" : "false");
  rw.check("Landesman-Lazer condition holds",
           v.kind != LLVerdictKind::Fails);
}

void cmd_averaged_map(const Scenario& s, ReportWriter& rw) {
  KernelData kernel = kernel_data(s.op, s.lambda, s.cfg.rank_tol);
  AveragedMap g = averaged_map(s.op, s.F, kernel, s.cfg.solver.n_t);
  double R = s.cfg.radius > 0 ? s.cfg.radius : 2.0 * g.norm_bound();
  std::vector<std::vector<double>> rows;
  if (kernel.dim_N == 1) {
    for (int i = 0; i <= 100; ++i) {
      Eigen::VectorXd c(1);
      c[0] = -R + 2.0 * R * i / 100.0;
      Eigen::VectorXd gc = g(c);
      rows.push_back({c[0], gc[0]});
    }
    rw.write_csv("gmap.csv", {"c1", "g1"}, rows);
  } else if (kernel.dim_N == 2) {
    for (int i = 0; i <= 32; ++i)
      for (int j = 0; j <= 32; ++j) {
        Eigen::VectorXd c(2);
        c[0] = -R + 2.0 * R * i / 32.0;
        c[1] = -R + 2.0 * R * j / 32.0;
        Eigen::VectorXd gc = g(c);
        rows.push_back({c[0], c[1], gc[0], gc[1]});
      }
    rw.write_csv("gmap.csv", {"c1", "c2", "g1", "g2"}, rows);
  } else {
    throw LLNotApplicableError("averaged-map export supports dim_N <= 2");
  }
  rw.kv("dim_N", static_cast<double>(kernel.dim_N));
  rw.kv("sample_radius", R);
  rw.kv("norm_bound", g.norm_bound());
  rw.check("averaged map sampled and exported", true);
}

void cmd_degree(const Scenario& s, ReportWriter& rw) {
  KernelData kernel = kernel_data(s.op, s.lambda, s.cfg.rank_tol);
  AveragedMap g = averaged_map(s.op, s.F, kernel, s.cfg.solver.n_t);
  DegreeResult d = degree_of_g(g, s.cfg.radius);
  rw.kv("degree", static_cast<double>(d.value));
  rw.kv("method", degree_method_name(d.method));
  rw.kv("radius", d.domain);
  rw.kv("boundary_margin", d.boundary_margin);
  rw.check("Brouwer degree of averaged map computed", true);
}

void cmd_verify_index(const Scenario& s, ReportWriter& rw) {
  KernelData kernel = kernel_data(s.op, s.lambda, s.cfg.rank_tol);
  int gdim = std::max(s.cfg.galerkin_dim, kernel.dim_N);
  bool all_match = true;
  for (double eps = s.cfg.solver.eps_start; eps <= 1.0 + 1e-12; eps *= 2.0) {
    IndexCheckResult r =
        index_formula_check(s.op, s.F, s.lambda, s.cfg.period, s.cfg.radius,
                            gdim, eps, s.cfg.solver.integrator,
                            s.cfg.solver.n_t);
    rw.line("epsilon = " + fmt17(eps) + ": deg(I - P_T) = " +
            std::to_string(r.lhs) + ", index formula rhs = " +
            std::to_string(r.rhs) + (r.match ? "  (match)" : "  (MISMATCH)"));
    all_match = all_match && r.match;
    if (eps == s.cfg.solver.eps_start) {
      rw.kv("deg_g", static_cast<double>(r.deg_g));
      rw.kv("mu_lambda", static_cast<double>(r.multiplicity.mu_lambda));
      rw.kv("dim_N", static_cast<double>(r.multiplicity.dim_N));
      rw.kv("d_k", static_cast<double>(r.multiplicity.d_k));
      rw.line("parity comparison: (-1)^d_k = " +
              std::to_string(r.multiplicity.parity_lhs) +
              ", (-1)^(mu+dim_N) = " +
              std::to_string(r.multiplicity.parity_rhs));
      rw.line(std::string("direct Galerkin degree matches ") +
              (r.parity_mu_dimN_matches ? "(-1)^(mu+dim_N)"
                                        : "(-1)^d_k"));
    }
  }
  rw.check("index formula holds on tested epsilon range", all_match);
}

void cmd_solve_periodic(const Scenario& s, ReportWriter& rw) {
  SolveOutcome out =
      solve_periodic(s.op, s.F, s.lambda, s.cfg.period, s.cfg.solver);
  if (out.status == SolveStatus::Certified) {
    const PeriodicCertificate& cert = *out.certificate;
    IntegratorConfig fine = s.cfg.solver.integrator;
    Trajectory traj = mild_solve(s.op, s.F, cert.x_star, s.cfg.period, 1.0,
                                 s.lambda, fine);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      std::vector<double> row{traj.times[i]};
      for (Eigen::Index j = 0; j < traj.states[i].size(); ++j)
        row.push_back(traj.states[i][j]);
      rows.push_back(std::move(row));
    }
    std::vector<std::string> header{"t"};
    for (Eigen::Index j = 0; j < cert.x_star.size(); ++j)
      header.push_back("u" + std::to_string(j + 1));
    rw.write_csv("orbit.csv", header, rows);

    rw.kv("residual", cert.residual);
    rw.kv("periodicity_check", cert.periodicity_check);
    rw.kv("degree", static_cast<double>(cert.degree_report.value));
    rw.kv("epsilon_final", cert.epsilon_path.back().epsilon);
    rw.kv("x_star_norm",
          std::sqrt(s.op.grid.node_weight) * cert.x_star.norm());
    VerificationReport ver =
        verify_certificate(cert, s.op, s.F, s.lambda, s.cfg.period,
                           s.cfg.solver);
    rw.kv("verified_residual", ver.residual_2x);
    rw.check("periodic solution certified", true);
    rw.check("certificate re-verified at doubled resolution", ver.ok);
  } else if (out.status == SolveStatus::NonexistenceWitness) {
    const KernelDriftWitness& w = *out.witness;
    rw.kv("kernel_drift_norm", w.drift.norm());
    rw.kv("max_deviation", w.max_deviation);
    rw.kv("n_samples", static_cast<double>(w.n_samples));
    rw.check("nonexistence witness: uniform kernel drift", true);
    rw.line("no T-periodic solution: the kernel average of F never vanishes");
  } else {
    rw.check("periodic solution certified", false);
    rw.line("solver failed: " + out.message);
    throw IntegrationError("solver failed: " + out.message);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "periodic solutions of semilinear parabolic equations at resonance"};
  app.require_subcommand(1);

  std::optional<std::string> config_path, preset;
  std::string out_dir_flag;
  std::string command;
  for (const char* name : {"spectrum", "resonance-check", "ll-check",
                           "averaged-map", "degree", "verify-index",
                           "solve-periodic"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON scenario configuration");
    sub->add_option("--preset", preset,
                    "neumann-laplacian or dirichlet-divergence");
    sub->add_option("--out", out_dir_flag, "output directory");
    sub->callback([&command, name] { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 1 : 0;
  }

  using namespace parares;
  try {
    ScenarioConfig cfg = load_scenario(preset, config_path);
    if (!out_dir_flag.empty()) cfg.out_dir = out_dir_flag;
    Scenario s = build_scenario(cfg);
    ReportWriter rw(cfg.out_dir);
    echo_config(rw, s, command);
    if (command == "spectrum") cmd_spectrum(s, rw);
    else if (command == "resonance-check") cmd_resonance_check(s, rw);
    else if (command == "ll-check") cmd_ll_check(s, rw);
    else if (command == "averaged-map") cmd_averaged_map(s, rw);
    else if (command == "degree") cmd_degree(s, rw);
    else if (command == "verify-index") cmd_verify_index(s, rw);
    else if (command == "solve-periodic") cmd_solve_periodic(s, rw);
    rw.flush();
    if (rw.any_failed()) {
      std::cerr << "one or more checks failed; see "
                << (std::filesystem::path(cfg.out_dir) / "report.txt").string()
                << "\n";
      return 3;
    }
    std::cout << "report written to "
              << (std::filesystem::path(cfg.out_dir) / "report.txt").string()
              << "\n";
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const NotAtResonanceError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const DegreeUndefinedError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const LLNotApplicableError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const SeedError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const GridError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const EllipticityError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}
