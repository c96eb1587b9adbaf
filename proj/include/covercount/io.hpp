#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "covercount/connectivity.hpp"
#include "covercount/exact.hpp"

namespace covercount::io {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchema = 1;

// CLI run configuration; one mode per invocation.
struct RunConfig {
  std::string mode; // predict | carnot | compute | zariski | verify
  int b = 0;
  int mu = 0;
  std::optional<std::array<int, 3>> j_triple;
  int d = 0; // carnot only
  bool with_oracle = false;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> seeds; // verify
  std::string input_path;
  std::string output_path;
  std::string emit_arrangement_path;
  double cluster_eps = tol::cluster_eps;
  double on_branch_tol = tol::on_branch_eps;
  double rank_tol = tol::rank_eps;
};

nlohmann::json tolerances_json(const RunConfig& cfg);

// Reproducibility envelope shared by every report.
nlohmann::json report_envelope(const RunConfig& cfg);

nlohmann::json arrangement_to_json(const conn::Arrangement& arr, const nlohmann::json& metadata);
conn::Arrangement arrangement_from_json(const nlohmann::json& j);
conn::Arrangement load_arrangement(const std::string& path);
void save_arrangement(const conn::Arrangement& arr, const nlohmann::json& metadata,
                      const std::string& path);

nlohmann::json prediction_to_json(const exact::PredictionReport& rep);
nlohmann::json certificate_to_json(const exact::ZariskiCertificate& cert);
nlohmann::json report_to_json(const conn::ConnectedNumberReport& rep);

} // namespace covercount::io
