#include "hzml/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hzml/coeff.hpp"
#include "hzml/errors.hpp"
#include "hzml/hardy_z.hpp"
#include "hzml/moments.hpp"
#include "hzml/report.hpp"
#include "hzml/theta_roots.hpp"

namespace hzml {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

void require_finite(double x, const char* flag) {
  require(std::isfinite(x), std::string(flag) + " must be finite");
}

EvalConfig eval_config(const RunConfig& cfg) {
  EvalConfig e;
  if (cfg.tol) e.target_abs_tol = *cfg.tol;
  e.validate();
  return e;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& kind, const Json& payload) {
  if (cfg.format == OutputFormat::Csv)
    write_flat_csv(out, payload);
  else
    write_json(out, envelope(kind, payload));
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  require(cfg.workers >= 1, "--workers must be at least 1");
  const Execution exec{cfg.workers};
  const std::string& cmd = cfg.subcommand;

  if (cmd == "theta-roots") {
    require(cfg.k >= 1 && cfg.k <= kMaxThetaOrder, "--k outside [1, 40]");
    require(!cfg.tol, "--tol does not apply to theta-roots");
    const ThetaSystem ts = trunc_exp_roots(cfg.k);
    if (cfg.format == OutputFormat::Csv)
      write_roots_csv(out, ts);
    else
      write_json(out, envelope("theta_roots", to_json(ts)));
    return kExitOk;
  }

  if (cmd == "zeros") {
    require(cfg.k >= 0 && cfg.k <= kMaxHardyOrder, "--k outside [0, 8]");
    require_finite(cfg.t_min, "--t-min");
    require_finite(cfg.t_max, "--t-max");
    require(cfg.t_min >= 2.0 && cfg.t_max > cfg.t_min && cfg.t_max <= kMaxHeight,
            "need 2 <= --t-min < --t-max <= 50000");
    require(cfg.density >= 1 && cfg.density <= 64, "--density outside [1, 64]");
    ZeroSearchOptions opts;
    opts.eval = eval_config(cfg);
    const ZeroList zl = find_zeros(cfg.k, cfg.t_min, cfg.t_max, cfg.density, exec, opts);
    if (cfg.format == OutputFormat::Json)
      write_json(out, envelope("zeros", to_json(zl)));
    else
      write_zeros_csv(out, zl);
    return kExitOk;
  }

  if (cmd == "moment") {
    require(cfg.j >= 0 && cfg.j <= kMaxHardyOrder, "--j outside [0, 8]");
    require(cfg.k >= 0 && cfg.k <= kMaxHardyOrder, "--k outside [0, 8]");
    require_finite(cfg.t_max, "--t-max");
    require(cfg.t_max > 2.0 && cfg.t_max <= kMaxHeight, "--t-max outside (2, 50000]");
    require(cfg.density >= 1 && cfg.density <= 64, "--density outside [1, 64]");
    ZeroSearchOptions opts;
    opts.eval = eval_config(cfg);
    const ZeroList zl = find_zeros(cfg.k, 2.0, cfg.t_max, cfg.density, exec, opts);
    const DiscreteMoment dm = discrete_moment_detail(cfg.j, zl, exec, opts.eval);
    emit(cfg, out, "discrete_moment",
         Json{{"j", cfg.j}, {"k", cfg.k}, {"T", cfg.t_max}, {"value", dm.value}, {"n_zeros", dm.n_zeros},
              {"max_imag_leak", dm.max_imag_leak}});
    return kExitOk;
  }

  if (cmd == "cmoment") {
    require(cfg.j >= 0 && cfg.j <= kMaxHardyOrder, "--j outside [0, 8]");
    require_finite(cfg.t_max, "--t-max");
    require(cfg.t_max >= 10.0 && cfg.t_max <= kMaxHeight, "--t-max outside [10, 50000]");
    ContinuousMomentOptions opts;
    if (cfg.tol) {
      require(*cfg.tol > 0.0 && *cfg.tol < 1.0, "--tol outside (0, 1)");
      opts.rel_tol = *cfg.tol;
    }
    const ContinuousMoment cm = continuous_moment_detail(cfg.j, cfg.t_max, exec, opts);
    Json payload{{"j", cfg.j}, {"T", cfg.t_max}};
    const Json detail = to_json(cm);
    for (const auto& [key, value] : detail.items()) payload[key] = value;
    payload["hall_prediction"] = hall_prediction(cfg.j, cfg.t_max);
    emit(cfg, out, "continuous_moment", payload);
    return kExitOk;
  }

  if (cmd == "coeff") {
    require(!cfg.tol, "--tol does not apply to coeff");
    require(cfg.asymptotic != cfg.T.has_value(), "coeff needs exactly one of --T and --asymptotic");
    require(cfg.j >= 0 && cfg.j <= kMaxFiniteJ, "--j outside [0, 8]");
    require(cfg.k >= 0 && cfg.k <= 12, "--k outside [0, 12]");
    if (cfg.T) require_finite(*cfg.T, "--T");
    require(!(cfg.refined_roots && cfg.asymptotic), "--refined needs --T");
    const CoefficientBreakdown b =
        cfg.asymptotic ? breakdown(cfg.j, cfg.k, kAsymptoticNormalization, CoeffMode::Asymptotic)
                       : breakdown(cfg.j, cfg.k, *cfg.T, CoeffMode::Finite,
                                   cfg.refined_roots ? RootPlacement::Refined : RootPlacement::FirstOrder);
    emit(cfg, out, "coefficient", to_json(b));
    return kExitOk;
  }

  if (cmd == "identities") {
    require(!cfg.tol, "--tol does not apply to identities");
    require(cfg.j_max >= 0 && cfg.j_max <= 8, "--j-max outside [0, 8]");
    require(cfg.k_max >= 0 && cfg.k_max <= 10, "--k-max outside [0, 10]");
    const auto reports = identity_sweep(cfg.j_max, cfg.k_max);
    std::vector<IdentityReport> failing;
    for (const auto& r : reports)
      if (!r.holds()) failing.push_back(r);
    if (cfg.format == OutputFormat::Csv) {
      write_identities_csv(out, failing);
    } else {
      Json list = Json::array();
      for (const auto& r : failing) list.push_back(to_json(r));
      write_json(out, envelope("identities", Json{{"j_max", cfg.j_max},
                                                  {"k_max", cfg.k_max},
                                                  {"checked", reports.size()},
                                                  {"nonzero_gaps", list}}));
    }
    if (!failing.empty())
      throw AccuracyError(std::to_string(failing.size()) + " identities exceed their tolerance");
    return kExitOk;
  }

  if (cmd == "verify") {
    require(!cfg.tol, "--tol does not apply to verify");
    require(cfg.j >= 0 && cfg.j <= kMaxHardyOrder, "--j outside [0, 8]");
    require(cfg.k >= 0 && cfg.k <= kMaxHardyOrder, "--k outside [0, 8]");
    require_finite(cfg.t_max, "--t-max");
    require(cfg.t_max >= 100.0 && cfg.t_max <= kMaxHeight, "--t-max outside [100, 50000]");
    require(cfg.density >= 1 && cfg.density <= 64, "--density outside [1, 64]");
    const MomentReport r = verify_moment(cfg.j, cfg.k, cfg.t_max, exec, cfg.density);
    emit(cfg, out, "moment_report", to_json(r));
    return kExitOk;
  }

  throw DomainError("unknown subcommand " + cmd);
}

void alarm_record(std::ostream& err, const std::string& kind, const std::string& message) {
  write_json(err, envelope("alarm", Json{{"alarm", kind}, {"message", message}}));
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.out_path.empty()) return dispatch(cfg, out);
    std::ostringstream buffer;
    int code = kExitOk;
    try {
      code = dispatch(cfg, buffer);
    } catch (...) {
      std::ofstream(cfg.out_path, std::ios::binary) << buffer.str();
      throw;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!(file << buffer.str())) throw DomainError("cannot write " + cfg.out_path);
    return code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NumericalAlarm& e) {
    alarm_record(err, e.kind(), e.what());
    return kExitAlarm;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string workers_env;
  if (const char* env = std::getenv("HZML_WORKERS")) workers_env = env;

  CLI::App app{"Discrete and continuous moments of derivatives of Hardy's Z-function", "hzml"};
  app.require_subcommand(1);
  bool json = false, csv = false;
  std::optional<int> workers;
  double T = 0.0;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "JSON output");
    sub->add_flag("--csv", csv, "CSV output");
    sub->add_option("--out", cfg.out_path, "Write the report to this path");
    sub->add_option("--workers", workers, "Worker threads (default HZML_WORKERS or 1)");
    sub->add_option("--tol", cfg.tol, "Tolerance override");
  };

  auto* theta = app.add_subcommand("theta-roots", "Roots of the truncated exponential series");
  theta->add_option("--k", cfg.k)->required();
  common(theta);

  auto* zeros = app.add_subcommand("zeros", "Real zeros of Z^(k)");
  zeros->add_option("--k", cfg.k)->required();
  zeros->add_option("--t-max", cfg.t_max)->required();
  zeros->add_option("--t-min", cfg.t_min);
  zeros->add_option("--density", cfg.density);
  common(zeros);

  auto* moment = app.add_subcommand("moment", "Sum of Z^(j)(gamma)^2 over zeros of Z^(k)");
  moment->add_option("--j", cfg.j)->required();
  moment->add_option("--k", cfg.k)->required();
  moment->add_option("--t-max", cfg.t_max)->required();
  moment->add_option("--density", cfg.density);
  common(moment);

  auto* cmoment = app.add_subcommand("cmoment", "Integral of Z^(j)(t)^2 over [0, T]");
  cmoment->add_option("--j", cfg.j)->required();
  cmoment->add_option("--t-max", cfg.t_max)->required();
  common(cmoment);

  auto* coeff = app.add_subcommand("coeff", "Predicted discrete moment, term by term");
  coeff->add_option("--j", cfg.j)->required();
  coeff->add_option("--k", cfg.k)->required();
  auto* t_opt = coeff->add_option("--T", T);
  coeff->add_flag("--asymptotic", cfg.asymptotic);
  coeff->add_flag("--refined", cfg.refined_roots, "Use Newton-refined zeros in the exp term");
  common(coeff);

  auto* identities = app.add_subcommand("identities", "Combinatorial identity sweep");
  identities->add_option("--j-max", cfg.j_max)->required();
  identities->add_option("--k-max", cfg.k_max)->required();
  common(identities);

  auto* verify = app.add_subcommand("verify", "Measured against predicted discrete moment");
  verify->add_option("--j", cfg.j)->required();
  verify->add_option("--k", cfg.k)->required();
  verify->add_option("--t-max", cfg.t_max)->required();
  verify->add_option("--density", cfg.density);
  common(verify);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (json && csv) {
    err << "error: --json and --csv are exclusive\n";
    return kExitValidation;
  }
  cfg.format = json ? OutputFormat::Json : csv ? OutputFormat::Csv : OutputFormat::Default;
  if (*t_opt) cfg.T = T;

  if (workers) {
    cfg.workers = *workers;
  } else if (!workers_env.empty()) {
    try {
      std::size_t used = 0;
      cfg.workers = std::stoi(workers_env, &used);
      if (used != workers_env.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      err << "error: HZML_WORKERS is not an integer\n";
      return kExitValidation;
    }
  }
  if (cfg.workers < 1) {
    err << "error: worker count must be at least 1\n";
    return kExitValidation;
  }
  return run(cfg, out, err);
}

}  // namespace hzml
