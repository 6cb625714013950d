#include "platemodal/run_config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "platemodal/csv.hpp"
#include "platemodal/errors.hpp"

namespace platemodal {
namespace {

using nlohmann::json;

double number_at(const json& j, const std::string& key) {
  if (!j.contains(key)) throw DomainError("config: missing field '" + key + "'");
  if (!j.at(key).is_number()) throw DomainError("config: field '" + key + "' must be a number");
  return j.at(key).get<double>();
}

BasisKind parse_bc(const std::string& text, const std::string& key) {
  if (text == "free") return BasisKind::FreeFree;
  if (text == "simply_supported") return BasisKind::SimplySupported;
  throw DomainError("config: field '" + key + "' must be 'free' or 'simply_supported'");
}

std::array<double, 2> point_at(const json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != 2)
    throw DomainError("config: field '" + key + "' must be an [x1, x2] pair");
  return {j.at(key)[0].get<double>(), j.at(key)[1].get<double>()};
}

Excitation parse_excitation(const json& j, const std::filesystem::path& base) {
  const std::string kind = j.value("kind", "");
  if (kind == "pulse") {
    PulseExcitation e;
    e.width_s = number_at(j, "width_s");
    e.amplitude_n = number_at(j, "amplitude_n");
    return e;
  }
  if (kind == "chirp") {
    ChirpExcitation e;
    e.f0_hz = number_at(j, "f0_hz");
    e.f1_hz = number_at(j, "f1_hz");
    e.amplitude_n = number_at(j, "amplitude_n");
    return e;
  }
  if (kind == "samples") {
    if (!j.contains("path")) throw DomainError("config: sampled excitation needs 'path'");
    std::filesystem::path p = j.at("path").get<std::string>();
    if (p.is_relative()) p = base / p;
    return SampledExcitation{read_signal_csv(p)};
  }
  throw DomainError("config: excitation 'kind' must be pulse, chirp or samples");
}

}  // namespace

std::optional<std::vector<int>> parse_mode_set(const std::string& text) {
  if (text == "elastic") return std::nullopt;
  std::vector<int> indices;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      indices.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("mode set: bad index '" + item + "'");
    }
  }
  if (indices.empty()) throw DomainError("mode set: empty list");
  return indices;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("config: cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("config: " + path.string() + ": " + e.what());
  }

  RunConfig cfg;
  if (!j.contains("plate")) throw DomainError("config: missing 'plate' section");
  const json& plate = j.at("plate");
  cfg.plate.params.rho = number_at(plate, "rho");
  cfg.plate.params.h = number_at(plate, "h");
  cfg.plate.params.e1 = number_at(plate, "e1");
  cfg.plate.params.e2 = number_at(plate, "e2");
  cfg.plate.params.g = number_at(plate, "g");
  cfg.plate.params.nu1 = number_at(plate, "nu1");
  cfg.plate.params.alpha = plate.value("alpha", 0.0);
  cfg.plate.ell1 = number_at(plate, "ell1");
  cfg.plate.ell2 = number_at(plate, "ell2");
  cfg.plate.bc1 = parse_bc(plate.value("bc1", "free"), "bc1");
  cfg.plate.bc2 = parse_bc(plate.value("bc2", "free"), "bc2");
  cfg.plate.s0 = point_at(plate, "s0");
  cfg.plate.c0 = point_at(plate, "c0");
  if (!plate.contains("n_trunc") || !plate.at("n_trunc").is_number_integer())
    throw DomainError("config: field 'n_trunc' must be an integer");
  cfg.plate.n_trunc = plate.at("n_trunc").get<int>();
  cfg.plate.validate();

  if (j.contains("mode_set")) {
    const json& ms = j.at("mode_set");
    if (ms.is_string()) {
      cfg.mode_set = parse_mode_set(ms.get<std::string>());
    } else if (ms.is_array()) {
      std::vector<int> indices;
      for (const auto& v : ms) {
        if (!v.is_number_integer()) throw DomainError("config: mode_set entries must be integers");
        indices.push_back(v.get<int>());
      }
      cfg.mode_set = indices;
    } else {
      throw DomainError("config: mode_set must be 'elastic' or an index list");
    }
  }

  if (j.contains("tf_grid")) {
    const json& g = j.at("tf_grid");
    cfg.tf_f_min = number_at(g, "f_min");
    cfg.tf_f_max = number_at(g, "f_max");
    if (!g.contains("points") || !g.at("points").is_number_integer())
      throw DomainError("config: tf_grid.points must be an integer");
    cfg.tf_points = g.at("points").get<int>();
  }

  if (j.contains("sim")) {
    const json& s = j.at("sim");
    if (!s.contains("excitation")) throw DomainError("config: sim section needs 'excitation'");
    cfg.excitation = parse_excitation(s.at("excitation"), path.parent_path());
    cfg.sim_duration_s = number_at(s, "duration_s");
    cfg.sim_sample_rate_hz = number_at(s, "sample_rate_hz");
  }

  cfg.output_dir = j.value("output_dir", "out");
  return cfg;
}

}  // namespace platemodal
