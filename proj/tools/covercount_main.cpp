// covercount: connected numbers of line arrangements for cyclic covers,
// by exact prediction and by numerical monodromy, cross-checked.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "covercount/connectivity.hpp"
#include "covercount/exact.hpp"
#include "covercount/fermat.hpp"
#include "covercount/io.hpp"
#include "covercount/parallel.hpp"

using namespace covercount;
using nlohmann::json;

namespace {

int exit_code_for(errc code) {
  switch (code) {
    case errc::config_invalid:
    case errc::not_a_divisor:
    case errc::bad_input:
    case errc::coincident_points:
    case errc::coincident_lines:
      return 2;
    case errc::method_disagreement:
      return 4;
    default:
      return 3; // numerical failure
  }
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) fail(errc::bad_input, "cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
}

conn::Arrangement build_artal_arrangement(const io::RunConfig& cfg) {
  const std::array<int, 3> j = cfg.j_triple.value_or(std::array<int, 3>{1, 1, cfg.mu});
  const auto fam = fermat::ArtalFamilyConfig::make(cfg.b, cfg.mu, cfg.seed, j[0], j[1], j[2]);
  const auto F = fermat::artal_branch_curve(fam);
  std::vector<geom::ProjectiveLine> lines;
  std::vector<std::string> labels;
  for (const auto& idx : fam.line_triple) {
    lines.push_back(fermat::tangent_line(idx));
    labels.push_back("L_" + std::to_string(idx.family) + "," + std::to_string(idx.j));
  }
  return conn::Arrangement{mono::WeightedBranchDivisor(cfg.b, {{F, 1}}), lines, labels};
}

conn::EngineOptions engine_options(const io::RunConfig& cfg) {
  conn::EngineOptions opt;
  opt.seed = cfg.seed;
  opt.on_branch_tol = cfg.on_branch_tol;
  opt.mode = par::default_mode();
  return opt;
}

int run_predict(const io::RunConfig& cfg) {
  const auto rep = cfg.j_triple
                       ? exact::predicted_connected_number(cfg.b, cfg.mu, *cfg.j_triple)
                       : exact::predicted_connected_number(cfg.b, cfg.mu);
  json j = io::report_envelope(cfg);
  j.update(io::prediction_to_json(rep));
  emit(j, cfg.output_path);
  return 0;
}

int run_carnot(const io::RunConfig& cfg) {
  const exact::CarnotQuery q{cfg.mu, cfg.j_triple.value_or(std::array<int, 3>{1, 1, 1}), cfg.d};
  json j = io::report_envelope(cfg);
  j["exists"] = exact::carnot_exists(q);
  if (cfg.with_oracle) {
    exact::OracleOptions oopt;
    oopt.rank_tol = cfg.rank_tol;
    oopt.seed = cfg.seed;
    j["oracle"] = exact::contact_divisor_oracle(q, oopt);
    j["agreement"] = (j["exists"] == j["oracle"]);
  }
  emit(j, cfg.output_path);
  return 0;
}

int run_zariski(const io::RunConfig& cfg) {
  const auto cert = exact::zariski_certificate(cfg.b);
  json j = io::report_envelope(cfg);
  j.update(io::certificate_to_json(cert));
  emit(j, cfg.output_path);
  if (cert.entries.size() >= 2 && cert.distinct) {
    std::cerr << "Zariski " << cert.entries.size() << "-plet at degree " << cert.b
              << " (connected numbers";
    for (const auto& e : cert.entries) std::cerr << " " << e.predicted_c;
    std::cerr << ")\n";
  } else {
    std::cerr << "no pair at this degree\n";
  }
  return 0;
}

int run_compute(const io::RunConfig& cfg) {
  conn::Arrangement arr = cfg.input_path.empty() ? build_artal_arrangement(cfg)
                                                 : io::load_arrangement(cfg.input_path);
  if (!cfg.emit_arrangement_path.empty())
    io::save_arrangement(arr, io::report_envelope(cfg)["config"], cfg.emit_arrangement_path);
  const auto rep = conn::cross_check(arr, engine_options(cfg));
  json j = io::report_envelope(cfg);
  j.update(io::report_to_json(rep));
  emit(j, cfg.output_path);
  return 0;
}

int run_verify(const io::RunConfig& cfg) {
  if (cfg.b > 12) fail(errc::config_invalid, "verify is desk-scale: b <= 12");
  std::vector<std::uint64_t> seeds = cfg.seeds.empty() ? std::vector<std::uint64_t>{cfg.seed}
                                                       : cfg.seeds;
  json rows = json::array();
  bool all_agree = true;
  for (int mu = 2; mu <= cfg.b; ++mu) {
    if (cfg.b % mu != 0) continue;
    const long long predicted = exact::predicted_connected_number(cfg.b, mu).lambda;
    for (std::uint64_t seed : seeds) {
      io::RunConfig sub = cfg;
      sub.mu = mu;
      sub.seed = seed;
      sub.j_triple.reset();
      const auto rep = conn::cross_check(build_artal_arrangement(sub), engine_options(sub));
      const bool agree = (rep.c == predicted) && rep.method_agreement;
      all_agree = all_agree && agree;
      rows.push_back(json{{"mu", mu},
                          {"seed", seed},
                          {"predicted", predicted},
                          {"computed", rep.c},
                          {"method_agreement", rep.method_agreement},
                          {"agree", agree}});
    }
  }
  json j = io::report_envelope(cfg);
  j["rows"] = rows;
  j["all_agree"] = all_agree;
  emit(j, cfg.output_path);
  return all_agree ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"connected numbers of Artal line arrangements for cyclic covers"};
  app.require_subcommand(1);

  io::RunConfig cfg;
  std::vector<int> j_flat;
  std::vector<std::uint64_t> seed_list;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "deterministic seed (default 0)");
    sub->add_option("--out", cfg.output_path, "write the JSON report to a file");
  };

  CLI::App* predict = app.add_subcommand("predict", "exact predicted connected number");
  predict->add_option("--b", cfg.b, "degree of the branch curve")->required();
  predict->add_option("--mu", cfg.mu, "Fermat degree (divisor of b)")->required();
  predict->add_option("--j", j_flat, "tangency indices j1,j2,j3")->delimiter(',')->expected(3);
  add_common(predict);

  CLI::App* carnot = app.add_subcommand("carnot", "Carnot contact criterion");
  carnot->add_option("--mu", cfg.mu, "Fermat degree")->required();
  carnot->add_option("--j", j_flat, "tangency indices j1,j2,j3")->delimiter(',')->expected(3)->required();
  carnot->add_option("--d", cfg.d, "divisor degree")->required();
  carnot->add_flag("--oracle", cfg.with_oracle, "also run the interpolation oracle");
  carnot->add_option("--rank-tol", cfg.rank_tol, "oracle SVD rank threshold");
  add_common(carnot);

  CLI::App* compute = app.add_subcommand("compute", "numerical connected number");
  compute->add_option("--b", cfg.b, "degree of the branch curve");
  compute->add_option("--mu", cfg.mu, "Fermat degree (divisor of b)");
  compute->add_option("--j", j_flat, "tangency indices j1,j2,j3")->delimiter(',')->expected(3);
  compute->add_option("--config", cfg.input_path, "arrangement JSON instead of --b/--mu");
  compute->add_option("--emit-arrangement", cfg.emit_arrangement_path,
                      "also write the arrangement JSON");
  compute->add_option("--on-branch-tol", cfg.on_branch_tol, "relative on-branch threshold");
  add_common(compute);

  CLI::App* zariski = app.add_subcommand("zariski", "Zariski k-plet certificate");
  zariski->add_option("--b", cfg.b, "degree")->required();
  add_common(zariski);

  CLI::App* verify = app.add_subcommand("verify", "predicted vs computed over all divisors");
  verify->add_option("--b", cfg.b, "degree (<= 12)")->required();
  verify->add_option("--seeds", seed_list, "seed list")->delimiter(',');
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  if (j_flat.size() == 3) cfg.j_triple = std::array<int, 3>{j_flat[0], j_flat[1], j_flat[2]};
  cfg.seeds = seed_list;

  try {
    if (predict->parsed()) {
      cfg.mode = "predict";
      return run_predict(cfg);
    }
    if (carnot->parsed()) {
      cfg.mode = "carnot";
      return run_carnot(cfg);
    }
    if (compute->parsed()) {
      cfg.mode = "compute";
      if (cfg.input_path.empty() && (cfg.b < 3 || cfg.mu < 2))
        fail(errc::config_invalid, "compute needs --b and --mu, or --config");
      return run_compute(cfg);
    }
    if (zariski->parsed()) {
      cfg.mode = "zariski";
      return run_zariski(cfg);
    }
    cfg.mode = "verify";
    return run_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
