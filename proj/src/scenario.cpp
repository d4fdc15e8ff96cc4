#include "uavcov/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace uavcov {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

double parse_num(const std::string& v, int line) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ScenarioError(line, "expected a number, got '" + v + "'");
  }
  if (used != v.size())
    throw ScenarioError(line, "trailing characters after number: '" + v + "'");
  return x;
}

}  // namespace

ScenarioError::ScenarioError(int line_no, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
      line(line_no) {}

double Scenario::effective_standoff_x() const {
  return standoff_x > 0 ? standoff_x : auda_offset(building.x_b);
}

double Scenario::effective_standoff_z() const {
  return standoff_z > 0 ? standoff_z : auda_offset(building.z_b);
}

std::vector<double> Scenario::sweep_thetas(Method m) const {
  std::vector<double> thetas;
  if (sweep_is_theta) {
    for (double t = theta_min_deg; t <= theta_max_deg + 1e-12; t += theta_step_deg)
      thetas.push_back(t);
  } else {
    for (double r : r_far_list) thetas.push_back(theta_for_r_far(*this, m, r));
  }
  std::sort(thetas.begin(), thetas.end());
  return thetas;
}

Scenario parse_scenario(std::istream& in) {
  Scenario sc;
  bool seed_seen = false;
  bool methods_seen = false;
  std::string raw;
  int line = 0;

  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    const auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ScenarioError(line, "expected 'key = value'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (value.empty()) throw ScenarioError(line, "empty value for '" + key + "'");

    auto num = [&] { return parse_num(value, line); };
    if (key == "building.x_b") {
      sc.building.x_b = num();
    } else if (key == "building.y_b") {
      sc.building.y_b = num();
    } else if (key == "building.z_b") {
      sc.building.z_b = num();
    } else if (key == "radio.f_ghz") {
      sc.radio.f_ghz = num();
    } else if (key == "radio.snr_min_db") {
      sc.radio.snr_min_db = num();
    } else if (key == "radio.noise_dbm") {
      sc.radio.noise_dbm = num();
    } else if (key == "radio.g_r_dir_db") {
      sc.radio.g_r_dir_db = num();
    } else if (key == "radio.g_r_omni_db") {
      sc.radio.g_r_omni_db = num();
    } else if (key == "radio.grf_db") {
      sc.radio.grf_db = num();
    } else if (key == "methods") {
      sc.methods.clear();
      for (const std::string& name : split_list(value)) {
        try {
          sc.methods.push_back(method_from_name(name));
        } catch (const std::domain_error&) {
          throw ScenarioError(line, "unknown method '" + name + "'");
        }
      }
      methods_seen = true;
    } else if (key == "sweep.theta_min_deg") {
      sc.theta_min_deg = num();
      sc.sweep_is_theta = true;
    } else if (key == "sweep.theta_max_deg") {
      sc.theta_max_deg = num();
      sc.sweep_is_theta = true;
    } else if (key == "sweep.theta_step_deg") {
      sc.theta_step_deg = num();
      sc.sweep_is_theta = true;
    } else if (key == "sweep.r_far") {
      sc.r_far_list.clear();
      for (const std::string& item : split_list(value))
        sc.r_far_list.push_back(parse_num(item, line));
    } else if (key == "seed") {
      const double v = num();
      if (v < 0 || v != std::floor(v))
        throw ScenarioError(line, "seed must be a nonnegative integer");
      sc.seed = static_cast<std::uint64_t>(v);
      seed_seen = true;
    } else if (key == "n_samples") {
      sc.n_samples = static_cast<long>(num());
    } else if (key == "voxel_size") {
      sc.voxel_size = num();
    } else if (key == "grid_step") {
      sc.grid_step = num();
    } else if (key == "standoff.x") {
      sc.standoff_x = num();
    } else if (key == "standoff.z") {
      sc.standoff_z = num();
    } else {
      throw ScenarioError(line, "unknown key '" + key + "'");
    }
  }

  if (!seed_seen) throw ScenarioError(line, "missing required key 'seed'");
  try {
    validate(sc.building);
  } catch (const std::domain_error& e) {
    throw ScenarioError(line, e.what());
  }
  if (methods_seen && sc.methods.empty())
    throw ScenarioError(line, "methods list is empty");
  if (sc.sweep_is_theta) {
    if (sc.theta_step_deg <= 0)
      throw ScenarioError(line, "sweep.theta_step_deg must be positive");
    if (sc.theta_min_deg <= 0 || sc.theta_max_deg >= 180 ||
        sc.theta_min_deg > sc.theta_max_deg)
      throw ScenarioError(line, "sweep theta range must satisfy 0 < min <= max < 180");
  } else if (sc.r_far_list.empty()) {
    throw ScenarioError(line, "scenario needs sweep.theta_* or sweep.r_far");
  }
  if (sc.n_samples < 10000)
    throw ScenarioError(line, "n_samples must be at least 10000");
  if (sc.voxel_size <= 0) throw ScenarioError(line, "voxel_size must be positive");
  if (sc.grid_step <= 0) throw ScenarioError(line, "grid_step must be positive");
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  return parse_scenario(in);
}

namespace {

double method_reach(const Scenario& sc, Method m) {
  // Apex-to-far-facade distance for the method's axis family.
  switch (m) {
    case Method::FOBS:
      return sc.effective_standoff_x() + sc.building.x_b;
    case Method::ABS:
      return sc.effective_standoff_z() + sc.building.z_b;
    case Method::AUDA:
    default:
      return auda_offset(sc.building.x_b) + sc.building.x_b;
  }
}

}  // namespace

double theta_for_r_far(const Scenario& sc, Method m, double r_far) {
  if (r_far <= 0) throw std::domain_error("theta_for_r_far: r_far must be positive");
  return 2.0 * std::atan(r_far / method_reach(sc, m)) * 180.0 / kPi;
}

double r_far_for_theta(const Scenario& sc, Method m, double theta_b_deg) {
  if (theta_b_deg <= 0 || theta_b_deg >= 180)
    throw std::domain_error("r_far_for_theta: theta out of range");
  return method_reach(sc, m) * std::tan(theta_b_deg / 2.0 * kPi / 180.0);
}

DeploymentPlan build_plan(const Scenario& sc, Method m, double theta_b_deg) {
  switch (m) {
    case Method::FOBS:
      return plan_fobs(sc.building, theta_b_deg, sc.effective_standoff_x(), sc.seed);
    case Method::ABS:
      return plan_abs(sc.building, theta_b_deg, sc.effective_standoff_z(), sc.seed);
    case Method::AUDA:
    default:
      return plan_auda(sc.building, r_far_for_theta(sc, m, theta_b_deg));
  }
}

}  // namespace uavcov
