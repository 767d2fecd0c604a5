#include "covertmm/config_io.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace covertmm {
namespace {

using nlohmann::json;

double get_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError(key, "expected a number");
  return v.get<double>();
}

int get_integer(const json& v, const std::string& key, int lo, int hi) {
  const double x = get_number(v, key);
  if (x != std::floor(x)) throw ConfigError(key, "expected an integer");
  if (x < lo || x > hi) {
    throw ConfigError(key, "outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(x);
}

double get_in_range(const json& v, const std::string& key, double lo, double hi) {
  const double x = get_number(v, key);
  if (!(x >= lo && x <= hi)) {
    throw ConfigError(key, "outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return x;
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "pa_dbm",        "pj_max_dbm",   "sigma2_b_dbm",  "sigma2_w_dbm",
      "d_ab_m",        "d_aw_m",       "alpha_l",       "alpha_n",
      "c_l",           "c_n",          "nu_l",          "nu_n",
      "main_af_db",    "main_as_db",   "main_b_db",     "side_af_db",
      "side_as_db",    "side_b_db",    "theta_af_deg",  "theta_as_deg",
      "theta_b_deg",   "delta_deg",    "blockage_decay_m",
      "willie_in_main_lobe", "jammer_gain_mode"};
  return keys;
}

}  // namespace

SystemConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("<root>", "config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (known_keys().count(key) == 0) throw ConfigError(key, "unknown configuration key");
  }
  SystemConfig cfg;
  auto has = [&](const char* k) { return j.contains(k); };

  if (has("pa_dbm")) cfg.pa_mw = dbm_to_mw(get_in_range(j["pa_dbm"], "pa_dbm", -200, 200));
  if (has("pj_max_dbm")) {
    cfg.pj_max_mw = dbm_to_mw(get_in_range(j["pj_max_dbm"], "pj_max_dbm", -200, 200));
  }
  if (has("sigma2_b_dbm")) {
    cfg.sigma2_b_mw = dbm_to_mw(get_in_range(j["sigma2_b_dbm"], "sigma2_b_dbm", -300, 100));
  }
  if (has("sigma2_w_dbm")) {
    cfg.sigma2_w_mw = dbm_to_mw(get_in_range(j["sigma2_w_dbm"], "sigma2_w_dbm", -300, 100));
  }
  if (has("d_ab_m")) cfg.d_ab_m = get_in_range(j["d_ab_m"], "d_ab_m", 1e-3, 1e6);
  if (has("d_aw_m")) cfg.d_aw_m = get_in_range(j["d_aw_m"], "d_aw_m", 1e-3, 1e6);
  if (has("alpha_l")) cfg.blockage.alpha_los = get_in_range(j["alpha_l"], "alpha_l", 1e-3, 20);
  if (has("alpha_n")) cfg.blockage.alpha_nlos = get_in_range(j["alpha_n"], "alpha_n", 1e-3, 20);
  if (has("c_l")) cfg.blockage.c_los = get_in_range(j["c_l"], "c_l", 1e-30, 1e6);
  if (has("c_n")) cfg.blockage.c_nlos = get_in_range(j["c_n"], "c_n", 1e-30, 1e6);
  if (has("blockage_decay_m")) {
    cfg.blockage.decay_length_m =
        get_in_range(j["blockage_decay_m"], "blockage_decay_m", 1e-3, 1e9);
  }
  if (has("nu_l")) cfg.fading.nu_los = get_integer(j["nu_l"], "nu_l", 1, 30);
  if (has("nu_n")) cfg.fading.nu_nlos = get_integer(j["nu_n"], "nu_n", 1, 30);

  if (has("main_af_db")) {
    cfg.alice_data.main_gain = db_to_linear(get_in_range(j["main_af_db"], "main_af_db", -100, 100));
  }
  if (has("main_as_db")) {
    cfg.alice_jam.main_gain = db_to_linear(get_in_range(j["main_as_db"], "main_as_db", -100, 100));
  }
  if (has("main_b_db")) {
    cfg.bob.main_gain = db_to_linear(get_in_range(j["main_b_db"], "main_b_db", -100, 100));
  }
  if (has("side_af_db")) {
    cfg.alice_data.side_gain = db_to_linear(get_in_range(j["side_af_db"], "side_af_db", -100, 100));
  }
  if (has("side_as_db")) {
    cfg.alice_jam.side_gain = db_to_linear(get_in_range(j["side_as_db"], "side_as_db", -100, 100));
  }
  if (has("side_b_db")) {
    cfg.bob.side_gain = db_to_linear(get_in_range(j["side_b_db"], "side_b_db", -100, 100));
  }
  if (has("theta_af_deg")) {
    cfg.alice_data.beamwidth_rad =
        deg_to_rad(get_in_range(j["theta_af_deg"], "theta_af_deg", 1e-3, 360 - 1e-3));
  }
  if (has("theta_as_deg")) {
    cfg.alice_jam.beamwidth_rad =
        deg_to_rad(get_in_range(j["theta_as_deg"], "theta_as_deg", 1e-3, 360 - 1e-3));
  }
  if (has("theta_b_deg")) {
    cfg.bob.beamwidth_rad =
        deg_to_rad(get_in_range(j["theta_b_deg"], "theta_b_deg", 1e-3, 360 - 1e-3));
  }
  if (has("delta_deg")) {
    const double sigma = deg_to_rad(get_in_range(j["delta_deg"], "delta_deg", 0, 180));
    cfg.alice_data.steer_sigma_rad = sigma;
    cfg.alice_jam.steer_sigma_rad = sigma;
    cfg.bob.steer_sigma_rad = sigma;
  }
  if (has("willie_in_main_lobe")) {
    if (!j["willie_in_main_lobe"].is_boolean()) {
      throw ConfigError("willie_in_main_lobe", "expected a boolean");
    }
    cfg.willie_in_main_lobe = j["willie_in_main_lobe"].get<bool>();
  }
  if (has("jammer_gain_mode")) {
    if (!j["jammer_gain_mode"].is_string()) {
      throw ConfigError("jammer_gain_mode", "expected \"averaged\" or \"deterministic_main\"");
    }
    const std::string mode = j["jammer_gain_mode"].get<std::string>();
    if (mode == "averaged") {
      cfg.jammer_gain_mode = JammerGainMode::averaged;
    } else if (mode == "deterministic_main") {
      cfg.jammer_gain_mode = JammerGainMode::deterministic_main;
    } else {
      throw ConfigError("jammer_gain_mode", "expected \"averaged\" or \"deterministic_main\"");
    }
  }

  try {
    cfg.validate();
  } catch (const std::domain_error& e) {
    throw ConfigError("config", e.what());
  }
  return cfg;
}

SystemConfig load_config(const std::string& path) {
  if (path.empty()) return SystemConfig{};
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("config", std::string("malformed JSON: ") + e.what());
  }
  return config_from_json(j);
}

json config_to_json(const SystemConfig& cfg) {
  json j;
  j["pa_dbm"] = mw_to_dbm(cfg.pa_mw);
  j["pj_max_dbm"] = mw_to_dbm(cfg.pj_max_mw);
  j["sigma2_b_dbm"] = mw_to_dbm(cfg.sigma2_b_mw);
  j["sigma2_w_dbm"] = mw_to_dbm(cfg.sigma2_w_mw);
  j["d_ab_m"] = cfg.d_ab_m;
  j["d_aw_m"] = cfg.d_aw_m;
  j["alpha_l"] = cfg.blockage.alpha_los;
  j["alpha_n"] = cfg.blockage.alpha_nlos;
  j["c_l"] = cfg.blockage.c_los;
  j["c_n"] = cfg.blockage.c_nlos;
  j["blockage_decay_m"] = cfg.blockage.decay_length_m;
  j["nu_l"] = cfg.fading.nu_los;
  j["nu_n"] = cfg.fading.nu_nlos;
  j["main_af_db"] = linear_to_db(cfg.alice_data.main_gain);
  j["main_as_db"] = linear_to_db(cfg.alice_jam.main_gain);
  j["main_b_db"] = linear_to_db(cfg.bob.main_gain);
  j["side_af_db"] = linear_to_db(cfg.alice_data.side_gain);
  j["side_as_db"] = linear_to_db(cfg.alice_jam.side_gain);
  j["side_b_db"] = linear_to_db(cfg.bob.side_gain);
  j["theta_af_deg"] = rad_to_deg(cfg.alice_data.beamwidth_rad);
  j["theta_as_deg"] = rad_to_deg(cfg.alice_jam.beamwidth_rad);
  j["theta_b_deg"] = rad_to_deg(cfg.bob.beamwidth_rad);
  j["delta_deg"] = rad_to_deg(cfg.alice_data.steer_sigma_rad);
  j["willie_in_main_lobe"] = cfg.willie_in_main_lobe;
  j["jammer_gain_mode"] =
      cfg.jammer_gain_mode == JammerGainMode::averaged ? "averaged" : "deterministic_main";
  return j;
}

std::uint64_t config_hash(const SystemConfig& cfg) {
  const std::string s = config_to_json(cfg).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace covertmm
