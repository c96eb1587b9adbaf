#include "covercount/io.hpp"

#include <fstream>

namespace covercount::io {

using nlohmann::json;

static json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

static cplx complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(errc::bad_input, "complex values are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json tolerances_json(const RunConfig& cfg) {
  return json{{"cluster_eps", cfg.cluster_eps},
              {"on_branch_tol", cfg.on_branch_tol},
              {"rank_tol", cfg.rank_tol},
              {"track_residual", tol::track_residual}};
}

json report_envelope(const RunConfig& cfg) {
  json env{{"schema", kSchema},
           {"version", kVersion},
           {"mode", cfg.mode},
           {"seed", cfg.seed},
           {"tolerances", tolerances_json(cfg)}};
  json config;
  if (cfg.b > 0) config["b"] = cfg.b;
  if (cfg.mu > 0) config["mu"] = cfg.mu;
  if (cfg.j_triple) config["j"] = json::array({(*cfg.j_triple)[0], (*cfg.j_triple)[1], (*cfg.j_triple)[2]});
  if (cfg.d > 0) config["d"] = cfg.d;
  if (!cfg.input_path.empty()) config["input_path"] = cfg.input_path;
  if (!cfg.seeds.empty()) config["seeds"] = cfg.seeds;
  env["config"] = config;
  return env;
}

json arrangement_to_json(const conn::Arrangement& arr, const json& metadata) {
  json parts = json::array();
  for (const auto& part : arr.cover.parts()) {
    json coeffs = json::array();
    part.form.for_each_term([&](int a, int b, int c, cplx co) {
      if (co != cplx{}) coeffs.push_back(json::array({json::array({a, b, c}), co.real(), co.imag()}));
    });
    parts.push_back(json{{"degree", part.form.degree()}, {"weight", part.weight},
                         {"coefficients", coeffs}});
  }
  json components = json::array();
  for (std::size_t i = 0; i < arr.components.size(); ++i) {
    json comp{{"line", json::array({complex_json(arr.components[i].coeffs()[0]),
                                    complex_json(arr.components[i].coeffs()[1]),
                                    complex_json(arr.components[i].coeffs()[2])})}};
    if (i < arr.labels.size() && !arr.labels[i].empty()) comp["label"] = arr.labels[i];
    components.push_back(comp);
  }
  return json{{"schema", kSchema},
              {"cover", json{{"m", arr.cover.m()}, {"parts", parts}}},
              {"components", components},
              {"metadata", metadata}};
}

conn::Arrangement arrangement_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cover") || !j.contains("components"))
    fail(errc::bad_input, "arrangement file needs cover and components");
  if (j.value("schema", 0) != kSchema) fail(errc::bad_input, "unsupported arrangement schema");
  const json& cover = j.at("cover");
  const int m = cover.value("m", 0);
  if (m < 2) fail(errc::bad_input, "cover.m must be >= 2");

  std::vector<mono::WeightedBranchDivisor::Part> parts;
  for (const json& pj : cover.at("parts")) {
    const int degree = pj.value("degree", -1);
    const int weight = pj.value("weight", 0);
    if (degree < 1) fail(errc::bad_input, "part degree must be >= 1");
    poly::TrivariateForm form(degree);
    for (const json& cj : pj.at("coefficients")) {
      if (!cj.is_array() || cj.size() != 3 || !cj[0].is_array() || cj[0].size() != 3)
        fail(errc::bad_input, "coefficients are [[a,b,c], re, im] entries");
      const int a = cj[0][0].get<int>(), b = cj[0][1].get<int>(), c = cj[0][2].get<int>();
      if (a < 0 || b < 0 || c < 0 || a + b + c != degree)
        fail(errc::bad_input, "monomial exponents must sum to the part degree");
      form.set_coef(a, b, c, {cj[1].get<double>(), cj[2].get<double>()});
    }
    if (form.is_zero()) fail(errc::bad_input, "zero branch part");
    parts.push_back({std::move(form), weight});
  }

  std::vector<geom::ProjectiveLine> components;
  std::vector<std::string> labels;
  for (const json& cj : j.at("components")) {
    const json& line = cj.at("line");
    if (!line.is_array() || line.size() != 3) fail(errc::bad_input, "line needs three coefficients");
    components.emplace_back(complex_from(line[0]), complex_from(line[1]), complex_from(line[2]));
    labels.push_back(cj.value("label", ""));
  }
  if (components.empty()) fail(errc::bad_input, "arrangement needs at least one component");

  try {
    return conn::Arrangement{mono::WeightedBranchDivisor(m, std::move(parts)),
                             std::move(components), std::move(labels)};
  } catch (const Error& e) {
    fail(errc::bad_input, std::string("invalid cover: ") + e.what());
  }
}

conn::Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_input, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(errc::bad_input, std::string("malformed JSON: ") + e.what());
  }
  return arrangement_from_json(j);
}

void save_arrangement(const conn::Arrangement& arr, const json& metadata,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(errc::bad_input, "cannot write " + path);
  out << arrangement_to_json(arr, metadata).dump(2) << "\n";
}

json prediction_to_json(const exact::PredictionReport& rep) {
  json witnesses = json::array();
  for (const auto& w : rep.witnesses)
    witnesses.push_back(json{{"lambda", w.lambda}, {"d", w.d}, {"carnot", w.carnot}});
  return json{{"b", rep.b},     {"mu", rep.mu},        {"nu", rep.nu},
              {"j", rep.j},     {"c", rep.lambda},     {"witnesses", witnesses}};
}

json certificate_to_json(const exact::ZariskiCertificate& cert) {
  json entries = json::array();
  for (const auto& e : cert.entries)
    entries.push_back(json{{"mu", e.mu}, {"c", e.predicted_c}});
  return json{{"b", cert.b},
              {"k", cert.entries.size()},
              {"entries", entries},
              {"distinct", cert.distinct}};
}

json report_to_json(const conn::ConnectedNumberReport& rep) {
  json offsets = json::array();
  for (const auto& o : rep.offsets) {
    offsets.push_back(json{{"point", json::array({complex_json(o.point[0]), complex_json(o.point[1]),
                                                  complex_json(o.point[2])})},
                           {"components", json::array({o.comp_i, o.comp_j})},
                           {"a", o.a_P}});
  }
  return json{{"m", rep.m},
              {"c", rep.c},
              {"per_component_splitting", rep.per_component_splitting},
              {"offsets", offsets},
              {"cycle_sums", rep.cycle_sums},
              {"offset_method_applied", rep.offset_method_applied},
              {"c_via_offsets", rep.c_via_offsets},
              {"method_agreement", rep.method_agreement},
              {"max_track_residual", rep.max_track_residual},
              {"warnings", rep.warnings}};
}

} // namespace covercount::io
