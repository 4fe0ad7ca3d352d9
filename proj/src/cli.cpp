#include "abtk/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <json.hpp>

#include "abtk/asymptotics.hpp"
#include "abtk/evolution.hpp"
#include "abtk/io.hpp"
#include "abtk/verify.hpp"

namespace abtk {

using nlohmann::json;
namespace fs = std::filesystem;

int exit_code_for(const Error& e) {
  const std::string& c = e.code();
  if (c == "InvalidInput" || c == "PoleError" || c == "RangeError" ||
      c == "PoleOnNode" || c == "OnBand" || c == "TooCloseToEndpoint")
    return kInputError;
  if (c == "UnitarityViolation" || c == "NonConvergence" ||
      c == "ContourTooCoarse" || c == "ReflectionAtUnitModulus" ||
      c == "BlowUp")
    return kInvariantFailure;
  if (c == "ZeroReflectionAtPhasePoint") return kDegenerateData;
  return kDomainError;  // SolitonsPresent, WrongRegime, FixedPointDivergence, ...
}

std::string default_out_dir() {
  if (const char* env = std::getenv("AB_OUT_DIR")) return env;
  return ".";
}

namespace {

json load_config(const CommonOptions& opt) {
  if (opt.config_path.empty()) throw InvalidInput("missing --config PATH");
  try {
    return json::parse(read_text_file(opt.config_path));
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("config parse error: ") + e.what());
  }
}

std::string out_path(const CommonOptions& opt, const std::string& name) {
  fs::create_directories(opt.out_dir);
  return (fs::path(opt.out_dir) / name).string();
}

json local_model_json(const LocalModel& lm) {
  auto cpx = [](Complex v) { return json{{"re", v.real()}, {"im", v.imag()}}; };
  json j;
  j["z0"] = lm.z0;
  j["nu_plus"] = lm.nu_plus;
  j["nu_minus"] = lm.nu_minus;
  j["a1"] = cpx(lm.a1);
  j["a2"] = cpx(lm.a2);
  j["r_plus"] = cpx(lm.r_plus);
  j["r_minus"] = cpx(lm.r_minus);
  j["delta0_plus"] = cpx(lm.delta0_plus);
  j["delta0_minus"] = cpx(lm.delta0_minus);
  j["beta12_plus"] = cpx(lm.beta12_plus);
  j["beta21_plus"] = cpx(lm.beta21_plus);
  j["beta12_minus"] = cpx(lm.beta12_minus);
  j["beta21_minus"] = cpx(lm.beta21_minus);
  return j;
}

int run_guarded(const std::function<void()>& body) {
  try {
    body();
    return kOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace

int cmd_scatter(const CommonOptions& opt) {
  return run_guarded([&] {
    const json cfg = load_config(opt);
    ScatterInput in = parse_initial_json(cfg.dump());
    double zmax = 4.0, z_min = 0.05;
    int zn = 801;
    if (cfg.contains("z_grid")) {
      const auto& g = cfg["z_grid"];
      zmax = g.value("max", zmax);
      zn = g.value("n", zn);
      z_min = g.value("z_min", z_min);
    }
    ScatteringData sd = reflection(in.data, make_z_grid(zmax, zn, z_min), opt.threads);
    const std::string csv = cfg.value("output_csv", std::string("scattering.csv"));
    const std::string meta = cfg.value("output_metadata", std::string("scattering_meta.json"));
    write_scattering_csv(out_path(opt, csv), sd);
    write_scattering_metadata(out_path(opt, meta), sd, in);
  });
}

int cmd_asymptote(const CommonOptions& opt) {
  int degenerate = kOk;
  const int rc = run_guarded([&] {
    const json cfg = load_config(opt);
    const std::string sd_path = cfg.at("scattering").get<std::string>();
    const ScatteringData sd = read_scattering_csv(sd_path);
    const double alpha = cfg.value("alpha", -1.0);
    std::vector<AsymptoticRow> rows;
    json models = json::array();
    auto emit = [&](double x, double t) {
      const AsymptoticSolution sol = evaluate_asymptotics(sd, alpha, x, t);
      rows.push_back({sol.x, sol.t, sol.z0, sol.A_leading, sol.B_leading,
                      sol.error_order});
      if (sol.A_leading == Complex(0.0)) degenerate = kDegenerateData;
      try {
        const RayCoordinates ray = RayCoordinates::make(alpha, x, t);
        const DeltaData dd = build_delta_data(sd, ray.z0);
        models.push_back(local_model_json(build_local_model(sd, dd, ray)));
      } catch (const ZeroReflectionAtPhasePoint&) {
        json j;
        j["z0"] = sol.z0;
        j["degenerate"] = true;
        models.push_back(j);
      }
    };
    if (cfg.contains("rays")) {
      for (const auto& r : cfg.at("rays")) {
        const double z0 = r.at("z0").get<double>();
        const double t = r.at("t").get<double>();
        emit(-alpha * t / (4.0 * z0 * z0), t);
      }
    } else {
      const double t = cfg.at("t").get<double>();
      const auto& xb = cfg.at("x");
      const double lo = xb.at("min").get<double>(), hi = xb.at("max").get<double>();
      const int n = xb.at("n").get<int>();
      for (int i = 0; i < n; ++i)
        emit(lo + (hi - lo) * (n == 1 ? 0.0 : static_cast<double>(i) / (n - 1)), t);
    }
    write_asymptotics_csv(out_path(opt, cfg.value("output_csv", std::string("asymptotics.csv"))),
                          rows);
    write_text_file(out_path(opt, cfg.value("output_models", std::string("local_models.json"))),
                    models.dump(2) + "\n");
  });
  return rc != kOk ? rc : degenerate;
}

int cmd_evolve(const CommonOptions& opt) {
  return run_guarded([&] {
    const json cfg = load_config(opt);
    ScatterInput in = parse_initial_json(cfg.dump());
    EvolveConfig ec;
    ec.dt = cfg.value("dt", 0.01);
    ec.t_end = cfg.at("t_end").get<double>();
    std::vector<double> checkpoints;
    if (cfg.contains("checkpoints"))
      for (const auto& c : cfg["checkpoints"]) checkpoints.push_back(c.get<double>());
    EvolveReport rep;
    int snap_index = 0;
    const std::string prefix = cfg.value("snapshot_prefix", std::string("snapshot"));
    auto snap = [&](const FieldState& s) {
      write_snapshot_csv(out_path(opt, prefix + "_" + std::to_string(snap_index++) + ".csv"), s);
    };
    const FieldState final_state =
        evolve(in.data, in.params, ec, &rep, checkpoints, snap);
    json j;
    j["t_final"] = final_state.t;
    j["max_fixed_point_iterations"] = rep.max_fixed_point_iterations;
    j["right_edge_amplitude"] = rep.right_edge_amplitude;
    j["right_boundary_defect"] = rep.right_boundary_defect;
    j["l2_initial"] = rep.l2_initial;
    j["l2_final"] = rep.l2_final;
    j["l2_drift"] = std::abs(rep.l2_final - rep.l2_initial);
    write_text_file(out_path(opt, cfg.value("output_report", std::string("evolve_report.json"))),
                    j.dump(2) + "\n");
  });
}

int cmd_compare(const CommonOptions& opt) {
  return run_guarded([&] {
    const json cfg = load_config(opt);
    ScatterInput in = parse_initial_json(cfg.dump());
    const double ray_z0 = cfg.value("ray_z0", 1.0);
    std::vector<double> checkpoints;
    for (const auto& c : cfg.at("checkpoints")) checkpoints.push_back(c.get<double>());
    EvolveConfig ec;
    ec.dt = cfg.value("dt", 0.01);
    double zmax = 4.0, z_min = 0.05;
    int zn = 801;
    const ScatteringData sd =
        reflection(in.data, make_z_grid(zmax, zn, z_min), opt.threads);
    const CompareReport rep =
        compare_asymptotics(in.data, in.params, ray_z0, checkpoints, ec, sd);
    json j;
    j["fitted_decay_exponent"] = rep.fitted_decay_exponent;
    j["final_ratio"] = rep.final_ratio;
    j["points"] = json::array();
    for (const auto& p : rep.points) {
      json pj;
      pj["t"] = p.t;
      pj["x_ray"] = p.x_ray;
      pj["abs_a_numeric"] = std::abs(p.a_numeric);
      pj["abs_a_leading"] = std::abs(p.a_leading);
      pj["residual"] = p.residual;
      pj["b_numeric"] = p.b_numeric;
      j["points"].push_back(pj);
    }
    write_text_file(out_path(opt, cfg.value("output_report", std::string("compare_report.json"))),
                    j.dump(2) + "\n");
  });
}

int cmd_verify(const CommonOptions& opt) {
  try {
    fs::create_directories(opt.out_dir);
    const auto results =
        run_acceptance(opt.fast, opt.threads, (fs::path(opt.out_dir) / "verify_scratch").string());
    write_text_file(out_path(opt, "verify_report.json"), acceptance_report_json(results));
    bool all = true;
    for (const auto& r : results) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": "
                << r.name << " -- " << r.details << "\n";
      all = all && r.pass;
    }
    return all ? kOk : kInvariantFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace abtk
