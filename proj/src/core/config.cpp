#include "docksim/core/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

#include "docksim/core/errors.hpp"

namespace docksim {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& s, const std::string& field) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw ValidationError("field '" + field + "': not a number: '" + s + "'");
  return v;
}

long parse_long(const std::string& s, const std::string& field) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0')
    throw ValidationError("field '" + field + "': not an integer: '" + s + "'");
  return v;
}

bool parse_bool(const std::string& s, const std::string& field) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw ValidationError("field '" + field + "': not a boolean: '" + s + "'");
}

// Visits every config field once; drives load, save and key discovery.
class Binder {
 public:
  enum class Mode { Load, Save };
  Binder(Mode mode, KvFile& kv) : mode_(mode), kv_(kv) {}

  void field(const std::string& sec, const std::string& key, double* v) {
    note(sec, key);
    if (mode_ == Mode::Save) kv_.set(sec, key, fmt_double(*v));
    else if (kv_.has(sec, key)) *v = parse_double(kv_.get(sec, key), sec + "." + key);
  }
  void field(const std::string& sec, const std::string& key, int* v) {
    note(sec, key);
    if (mode_ == Mode::Save) kv_.set(sec, key, std::to_string(*v));
    else if (kv_.has(sec, key)) *v = static_cast<int>(parse_long(kv_.get(sec, key), sec + "." + key));
  }
  void field(const std::string& sec, const std::string& key, std::uint64_t* v) {
    note(sec, key);
    if (mode_ == Mode::Save) kv_.set(sec, key, std::to_string(*v));
    else if (kv_.has(sec, key)) {
      const long parsed = parse_long(kv_.get(sec, key), sec + "." + key);
      if (parsed < 0) throw ValidationError("field '" + sec + "." + key + "': must be non-negative");
      *v = static_cast<std::uint64_t>(parsed);
    }
  }
  void field(const std::string& sec, const std::string& key, bool* v) {
    note(sec, key);
    if (mode_ == Mode::Save) kv_.set(sec, key, *v ? "true" : "false");
    else if (kv_.has(sec, key)) *v = parse_bool(kv_.get(sec, key), sec + "." + key);
  }
  // Diagonal gain: scalar shorthand or "a,b,c".
  void field(const std::string& sec, const std::string& key, Vec3* v) {
    note(sec, key);
    const std::string field_name = sec + "." + key;
    if (mode_ == Mode::Save) {
      kv_.set(sec, key, fmt_double(v->x) + "," + fmt_double(v->y) + "," + fmt_double(v->z));
      return;
    }
    if (!kv_.has(sec, key)) return;
    const std::string& raw = kv_.get(sec, key);
    if (raw.find(',') == std::string::npos) {
      const double s = parse_double(raw, field_name);
      *v = {s, s, s};
      return;
    }
    std::istringstream in(raw);
    std::string part;
    double comps[3];
    for (int i = 0; i < 3; ++i) {
      if (!std::getline(in, part, ','))
        throw ValidationError("field '" + field_name + "': expected 3 components");
      comps[i] = parse_double(part, field_name);
    }
    if (std::getline(in, part, ','))
      throw ValidationError("field '" + field_name + "': expected 3 components");
    *v = {comps[0], comps[1], comps[2]};
  }

  const std::set<std::string>& known() const { return known_; }

 private:
  void note(const std::string& sec, const std::string& key) {
    known_.insert(sec + "." + key);
  }
  Mode mode_;
  KvFile& kv_;
  std::set<std::string> known_;
};

void visit(SimConfig& c, Binder& b) {
  b.field("sim", "seed", &c.sim.seed);
  b.field("sim", "dt", &c.sim.dt);
  b.field("sim", "gravity", &c.sim.gravity);
  b.field("sim", "t_max", &c.sim.t_max);

  b.field("uav", "mass", &c.uav.mass);
  b.field("uav", "mass_diag", &c.uav.mass_diag);
  b.field("uav", "drag_coeff", &c.uav.drag_coeff);
  b.field("uav", "thrust_limit", &c.uav.thrust_limit);

  b.field("platform", "standing_height", &c.platform.standing_height);
  b.field("platform", "tau_align", &c.platform.tau_align);
  b.field("platform", "tau_follow", &c.platform.tau_follow);
  b.field("platform", "docking_speed_max", &c.platform.docking_speed_max);
  b.field("platform", "body_span", &c.platform.body_span);

  b.field("world", "stair_tread", &c.world.stair_tread);

  b.field("camera", "focal_px", &c.camera.focal_px);
  b.field("camera", "image_width", &c.camera.image_width);
  b.field("camera", "image_height", &c.camera.image_height);
  b.field("camera", "rate_hz", &c.camera.rate_hz);

  b.field("detect", "conf_threshold", &c.detect.conf_threshold);
  b.field("detect", "conf_mid_range", &c.detect.conf_mid_range);
  b.field("detect", "conf_slope", &c.detect.conf_slope);
  b.field("detect", "conf_noise", &c.detect.conf_noise);
  b.field("detect", "px_noise_base", &c.detect.px_noise_base);
  b.field("detect", "px_noise_per_m", &c.detect.px_noise_per_m);
  b.field("detect", "median_window", &c.detect.median_window);

  b.field("tag", "pos_noise", &c.tag.pos_noise);
  b.field("tag", "att_noise", &c.tag.att_noise);
  b.field("tag", "rate_noise", &c.tag.rate_noise);
  b.field("tag", "vel_noise", &c.tag.vel_noise);

  b.field("control", "pi_kp", &c.control.pi_kp);
  b.field("control", "pi_ki", &c.control.pi_ki);
  b.field("control", "pi_clamp", &c.control.pi_clamp);
  b.field("control", "vel_gain", &c.control.vel_gain);
  b.field("control", "vel_cmd_max", &c.control.vel_cmd_max);
  b.field("control", "alpha", &c.control.alpha);
  b.field("control", "beta", &c.control.beta);
  b.field("control", "p", &c.control.p);
  b.field("control", "q", &c.control.q);
  b.field("control", "kd", &c.control.kd);
  b.field("control", "ksw", &c.control.ksw);
  b.field("control", "kb", &c.control.kb);
  b.field("control", "ds", &c.control.ds);
  b.field("control", "eps_reg", &c.control.eps_reg);
  b.field("control", "smooth_switching", &c.control.smooth_switching);
  b.field("control", "boundary_layer", &c.control.boundary_layer);
  b.field("control", "pid_kp", &c.control.pid_kp);
  b.field("control", "pid_ki", &c.control.pid_ki);
  b.field("control", "pid_kd", &c.control.pid_kd);
  b.field("control", "pid_clamp", &c.control.pid_clamp);
  b.field("control", "smc_lambda", &c.control.smc_lambda);

  b.field("mission", "delta_a", &c.mission.delta_a);
  b.field("mission", "delta_t", &c.mission.delta_t);
  b.field("mission", "sp_window", &c.mission.sp_window);
  b.field("mission", "eps_p", &c.mission.eps_p);
  b.field("mission", "eps_t", &c.mission.eps_t);
  b.field("mission", "w_omega", &c.mission.w_omega);
  b.field("mission", "w_phi", &c.mission.w_phi);
  b.field("mission", "w_theta", &c.mission.w_theta);
  b.field("mission", "handover_radius", &c.mission.handover_radius);
  b.field("mission", "sp_horizontal_only", &c.mission.sp_horizontal_only);
  b.field("mission", "z_min_clearance", &c.mission.z_min_clearance);
  b.field("mission", "tag_loss_timeout", &c.mission.tag_loss_timeout);
  b.field("mission", "touchdown_half_x", &c.mission.touchdown.half_x);
  b.field("mission", "touchdown_half_y", &c.mission.touchdown.half_y);
  b.field("mission", "touchdown_vz_max", &c.mission.touchdown.vz_max);
  b.field("mission", "touchdown_contact_tol", &c.mission.touchdown.contact_tol);
  b.field("mission", "touchdown_floor", &c.mission.touchdown.floor);

  b.field("rewards", "alpha0", &c.rewards.alpha0);
  b.field("rewards", "beta0", &c.rewards.beta0);
  b.field("rewards", "alpha1", &c.rewards.alpha1);
  b.field("rewards", "beta1", &c.rewards.beta1);
  b.field("rewards", "deadzone", &c.rewards.deadzone);
  b.field("rewards", "d1_sample_prob", &c.rewards.d1_sample_prob);

  b.field("curriculum", "lin_init", &c.curriculum.lin_init);
  b.field("curriculum", "yaw_init", &c.curriculum.yaw_init);
  b.field("curriculum", "lin_full", &c.curriculum.lin_full);
  b.field("curriculum", "yaw_full", &c.curriculum.yaw_full);
  b.field("curriculum", "lin_step", &c.curriculum.lin_step);
  b.field("curriculum", "yaw_step", &c.curriculum.yaw_step);
  b.field("curriculum", "dock_lin_cap", &c.curriculum.dock_lin_cap);
  b.field("curriculum", "dock_yaw_cap", &c.curriculum.dock_yaw_cap);
  b.field("curriculum", "promote_distance", &c.curriculum.promote_distance);
  b.field("curriculum", "stability_threshold", &c.curriculum.stability_threshold);
  b.field("curriculum", "slowdown_factor", &c.curriculum.slowdown_factor);

  b.field("randomize", "ring_min", &c.randomize.ring_min);
  b.field("randomize", "ring_max", &c.randomize.ring_max);
  b.field("randomize", "platform_x0", &c.randomize.platform_x0);
  b.field("randomize", "platform_speed", &c.randomize.platform_speed);
  b.field("randomize", "speed_jitter", &c.randomize.speed_jitter);
  b.field("randomize", "wind_max", &c.randomize.wind_max);
  b.field("randomize", "gust_sigma", &c.randomize.gust_sigma);
  b.field("randomize", "gust_tau", &c.randomize.gust_tau);
  b.field("randomize", "noise", &c.randomize.noise);
}

void require(bool ok, const std::string& field, const std::string& why) {
  if (!ok) throw ValidationError("field '" + field + "': " + why);
}

void require_positive(double v, const std::string& field) {
  require(std::isfinite(v) && v > 0.0, field, "must be > 0");
}

void require_positive(const Vec3& v, const std::string& field) {
  require(v.finite() && v.x > 0.0 && v.y > 0.0 && v.z > 0.0, field,
          "all diagonal entries must be > 0");
}

void require_nonneg(double v, const std::string& field) {
  require(std::isfinite(v) && v >= 0.0, field, "must be >= 0");
}

}  // namespace

void ControllerGains::validate() const {
  require_positive(pi_kp, "control.pi_kp");
  require(pi_ki.finite() && pi_ki.x >= 0 && pi_ki.y >= 0 && pi_ki.z >= 0,
          "control.pi_ki", "entries must be >= 0");
  require_positive(pi_clamp, "control.pi_clamp");
  require_positive(vel_gain, "control.vel_gain");
  require_positive(vel_cmd_max, "control.vel_cmd_max");
  require_positive(alpha, "control.alpha");
  require_positive(beta, "control.beta");
  require(p > 0 && p % 2 == 1, "control.p", "must be an odd positive integer");
  require(q > 0 && q % 2 == 1, "control.q", "must be an odd positive integer");
  require(q < p && p < 2 * q, "control.p/q", "must satisfy q < p < 2q");
  require_positive(kd, "control.kd");
  require_positive(ksw, "control.ksw");
  require_positive(kb, "control.kb");
  require_positive(ds, "control.ds");
  require_positive(eps_reg, "control.eps_reg");
  require_positive(boundary_layer, "control.boundary_layer");
  require_positive(pid_kp, "control.pid_kp");
  require(pid_ki.finite() && pid_ki.x >= 0 && pid_ki.y >= 0 && pid_ki.z >= 0,
          "control.pid_ki", "entries must be >= 0");
  require(pid_kd.finite() && pid_kd.x >= 0 && pid_kd.y >= 0 && pid_kd.z >= 0,
          "control.pid_kd", "entries must be >= 0");
  require_positive(pid_clamp, "control.pid_clamp");
  require_positive(smc_lambda, "control.smc_lambda");
}

void SimConfig::finalize() {
  if (mission.handover_radius == 0.0) mission.handover_radius = control.ds / 1.5;

  require_positive(sim.dt, "sim.dt");
  require_positive(sim.gravity, "sim.gravity");
  require_positive(sim.t_max, "sim.t_max");

  require_positive(uav.mass, "uav.mass");
  require(uav.mass_diag.finite() &&
              ((uav.mass_diag.x == 0 && uav.mass_diag.y == 0 && uav.mass_diag.z == 0) ||
               (uav.mass_diag.x > 0 && uav.mass_diag.y > 0 && uav.mass_diag.z > 0)),
          "uav.mass_diag", "entries must all be > 0 (or all 0 to use uav.mass)");
  require_nonneg(uav.drag_coeff, "uav.drag_coeff");
  require_positive(uav.thrust_limit, "uav.thrust_limit");

  require_positive(platform.standing_height, "platform.standing_height");
  require_positive(platform.tau_align, "platform.tau_align");
  require_positive(platform.tau_follow, "platform.tau_follow");
  require_positive(platform.docking_speed_max, "platform.docking_speed_max");
  require_positive(platform.body_span, "platform.body_span");

  require_positive(world.stair_tread, "world.stair_tread");

  require_positive(camera.focal_px, "camera.focal_px");
  require(camera.image_width > 0, "camera.image_width", "must be > 0");
  require(camera.image_height > 0, "camera.image_height", "must be > 0");
  require_positive(camera.rate_hz, "camera.rate_hz");

  require(detect.conf_threshold > 0.0 && detect.conf_threshold < 1.0,
          "detect.conf_threshold", "must lie in (0,1)");
  require_positive(detect.conf_mid_range, "detect.conf_mid_range");
  require_positive(detect.conf_slope, "detect.conf_slope");
  require_nonneg(detect.conf_noise, "detect.conf_noise");
  require_nonneg(detect.px_noise_base, "detect.px_noise_base");
  require_nonneg(detect.px_noise_per_m, "detect.px_noise_per_m");
  require(detect.median_window >= 3 && detect.median_window % 2 == 1,
          "detect.median_window", "must be odd and >= 3");

  require_nonneg(tag.pos_noise, "tag.pos_noise");
  require_nonneg(tag.att_noise, "tag.att_noise");
  require_nonneg(tag.rate_noise, "tag.rate_noise");
  require_nonneg(tag.vel_noise, "tag.vel_noise");

  control.validate();

  require_positive(mission.delta_t, "mission.delta_t");
  require(mission.delta_a > mission.delta_t, "mission.delta_a",
          "must exceed mission.delta_t");
  require_positive(mission.sp_window, "mission.sp_window");
  require_positive(mission.eps_p, "mission.eps_p");
  require_positive(mission.eps_t, "mission.eps_t");
  require_nonneg(mission.w_omega, "mission.w_omega");
  require_nonneg(mission.w_phi, "mission.w_phi");
  require_nonneg(mission.w_theta, "mission.w_theta");
  require_positive(mission.handover_radius, "mission.handover_radius");
  require(mission.handover_radius < control.ds, "mission.handover_radius",
          "must be strictly inside the safe radius control.ds");
  require_nonneg(mission.z_min_clearance, "mission.z_min_clearance");
  require_positive(mission.tag_loss_timeout, "mission.tag_loss_timeout");
  require_positive(mission.touchdown.half_x, "mission.touchdown_half_x");
  require_positive(mission.touchdown.half_y, "mission.touchdown_half_y");
  require_positive(mission.touchdown.vz_max, "mission.touchdown_vz_max");
  require_positive(mission.touchdown.contact_tol, "mission.touchdown_contact_tol");
  require(mission.touchdown.floor < mission.touchdown.contact_tol,
          "mission.touchdown_floor", "must be below the contact tolerance");

  require_nonneg(rewards.alpha0, "rewards.alpha0");
  require_nonneg(rewards.beta0, "rewards.beta0");
  require(rewards.alpha1 >= rewards.alpha0, "rewards.alpha1",
          "docking-mode coefficient must be >= the roaming one");
  require(rewards.beta1 >= rewards.beta0, "rewards.beta1",
          "docking-mode coefficient must be >= the roaming one");
  require_nonneg(rewards.deadzone, "rewards.deadzone");
  require(rewards.d1_sample_prob >= 0.0 && rewards.d1_sample_prob <= 1.0,
          "rewards.d1_sample_prob", "must lie in [0,1]");

  require_positive(curriculum.lin_init, "curriculum.lin_init");
  require_positive(curriculum.yaw_init, "curriculum.yaw_init");
  require(curriculum.lin_full >= curriculum.lin_init, "curriculum.lin_full",
          "must be >= curriculum.lin_init");
  require(curriculum.yaw_full >= curriculum.yaw_init, "curriculum.yaw_full",
          "must be >= curriculum.yaw_init");
  require_positive(curriculum.lin_step, "curriculum.lin_step");
  require_positive(curriculum.yaw_step, "curriculum.yaw_step");
  require_positive(curriculum.dock_lin_cap, "curriculum.dock_lin_cap");
  require_positive(curriculum.dock_yaw_cap, "curriculum.dock_yaw_cap");
  require_positive(curriculum.promote_distance, "curriculum.promote_distance");
  require_positive(curriculum.stability_threshold, "curriculum.stability_threshold");
  require(curriculum.slowdown_factor >= 1, "curriculum.slowdown_factor",
          "must be >= 1");

  require_nonneg(randomize.ring_min, "randomize.ring_min");
  require(randomize.ring_max >= randomize.ring_min, "randomize.ring_max",
          "must be >= randomize.ring_min");
  require_nonneg(randomize.platform_speed, "randomize.platform_speed");
  require(randomize.speed_jitter >= 0.0 && randomize.speed_jitter < 1.0,
          "randomize.speed_jitter", "must lie in [0,1)");
  require_nonneg(randomize.wind_max, "randomize.wind_max");
  require_nonneg(randomize.gust_sigma, "randomize.gust_sigma");
  require_positive(randomize.gust_tau, "randomize.gust_tau");

  const Mat3 m = mass_matrix();
  require(m.symmetric() && m.positive_definite(), "uav.mass",
          "mass matrix must be symmetric positive definite");
}

Mat3 SimConfig::mass_matrix() const {
  if (uav.mass_diag.x > 0.0)
    return Mat3::diagonal(uav.mass_diag.x, uav.mass_diag.y, uav.mass_diag.z);
  return Mat3::diagonal(uav.mass, uav.mass, uav.mass);
}

Vec3 SimConfig::weight_force() const {
  const Mat3 m = mass_matrix();
  return {0.0, 0.0, m.m[2][2] * sim.gravity};
}

SimConfig SimConfig::defaults() {
  SimConfig cfg;
  cfg.finalize();
  return cfg;
}

SimConfig load_config(const std::string& path) {
  KvFile kv = KvFile::parse_file(path);
  SimConfig cfg;
  Binder reader(Binder::Mode::Load, kv);
  visit(cfg, reader);
  for (const auto& [sec, entries] : kv.sections())
    for (const auto& [key, value] : entries) {
      (void)value;
      if (!reader.known().count(sec + "." + key))
        throw ValidationError("unknown config key '" + sec + "." + key + "' in " + path);
    }
  cfg.finalize();
  return cfg;
}

SimConfig config_from_string(const std::string& text, const std::string& origin) {
  KvFile kv = KvFile::parse_string(text, origin);
  SimConfig cfg;
  Binder reader(Binder::Mode::Load, kv);
  visit(cfg, reader);
  for (const auto& [sec, entries] : kv.sections())
    for (const auto& [key, value] : entries) {
      (void)value;
      if (!reader.known().count(sec + "." + key))
        throw ValidationError("unknown config key '" + sec + "." + key + "' in " + origin);
    }
  cfg.finalize();
  return cfg;
}

std::string serialize_config(const SimConfig& cfg) {
  KvFile kv;
  Binder writer(Binder::Mode::Save, kv);
  visit(const_cast<SimConfig&>(cfg), writer);
  return kv.to_string();
}

void apply_override(SimConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw ValidationError("override must look like section.key=value: '" + assignment + "'");
  const std::string path = assignment.substr(0, eq);
  const std::string value = assignment.substr(eq + 1);
  const auto dot = path.find('.');
  if (dot == std::string::npos)
    throw ValidationError("override key must be section.key: '" + path + "'");
  KvFile kv;
  kv.set(path.substr(0, dot), path.substr(dot + 1), value);
  Binder reader(Binder::Mode::Load, kv);
  visit(cfg, reader);
  if (!reader.known().count(path))
    throw ValidationError("unknown config key '" + path + "'");
}

std::optional<std::string> default_config_path() {
  const char* env = std::getenv("DOCKSIM_CONFIG");
  if (env && *env) return std::string(env);
  return std::nullopt;
}

bool operator==(const SimConfig& a, const SimConfig& b) {
  return serialize_config(a) == serialize_config(b);
}

}  // namespace docksim
