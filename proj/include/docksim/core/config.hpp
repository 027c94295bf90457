#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "docksim/core/kv.hpp"
#include "docksim/core/vec3.hpp"

namespace docksim {

// All tunable controller gains. Diagonal gain matrices are stored as their
// diagonals; the config accepts either a scalar (applied to all axes) or a
// comma-separated triple.
struct ControllerGains {
  // Acquisition PI (velocity command from position error, target minus UAV).
  Vec3 pi_kp{0.8, 0.8, 0.8};
  Vec3 pi_ki{0.1, 0.1, 0.1};
  Vec3 pi_clamp{2.0, 2.0, 2.0};  // integral accumulator clamp, m*s
  double vel_gain = 4.0;         // inner velocity-loop gain, 1/s
  double vel_cmd_max = 2.0;      // per-axis velocity command limit, m/s

  // Fast terminal sliding surface s = de + alpha*e + beta*sig(e)^(p/q).
  Vec3 alpha{1.0, 1.0, 1.0};
  Vec3 beta{0.002, 0.002, 0.002};
  int p = 5;
  int q = 3;

  // Reaching / switching / barrier-repulsion gains.
  Vec3 kd{6.0, 6.0, 6.0};
  Vec3 ksw{0.8, 0.8, 0.8};
  Vec3 kb{0.05, 0.05, 0.05};
  double ds = 0.5;  // safe visibility radius, m

  double eps_reg = 1e-6;          // regularizes |e|^(p/q-1) at e=0
  bool smooth_switching = false;  // tanh(s/boundary_layer) instead of sgn(s)
  double boundary_layer = 0.05;

  // Baseline controllers.
  Vec3 pid_kp{8.0, 8.0, 8.0};
  Vec3 pid_ki{2.0, 2.0, 2.0};
  Vec3 pid_kd{5.0, 5.0, 5.0};
  Vec3 pid_clamp{2.0, 2.0, 2.0};
  Vec3 smc_lambda{1.0, 1.0, 1.0};

  void validate() const;  // throws ValidationError naming the field
};

struct SimParams {
  std::uint64_t seed = 1;
  double dt = 0.005;      // s
  double gravity = 9.81;  // m/s^2
  double t_max = 45.0;    // trial timeout, s
};

struct UavParams {
  double mass = 1.5;          // kg; mass matrix defaults to mass * I
  Vec3 mass_diag{0, 0, 0};    // optional anisotropic diagonal; 0 = use mass
  double drag_coeff = 0.0;    // N*s/m, included in the modeled force term
  double thrust_limit = 36.0; // N, per-axis command saturation
};

struct PlatformParams {
  double standing_height = 0.60;   // torso plate above terrain, m
  double tau_align = 0.4;          // docking-mode leveling time constant, s
  double tau_follow = 0.2;         // terrain-following lag, s
  double docking_speed_max = 0.3;  // m/s clamp while docking flag is up
  double body_span = 0.65;         // m; pitch sampled over this footprint
};

struct WorldParams {
  double stair_tread = 0.30;  // stair run per riser, m
};

struct CameraParams {
  double focal_px = 400.0;
  int image_width = 640;
  int image_height = 480;
  double rate_hz = 30.0;  // perception frame rate
};

struct DetectParams {
  double conf_threshold = 0.5;  // minimum accepted confidence
  double conf_mid_range = 8.0;  // logistic midpoint, m
  double conf_slope = 1.5;      // logistic scale, m
  double conf_noise = 0.05;
  double px_noise_base = 0.5;   // pixel noise stddev at zero range
  double px_noise_per_m = 0.3;  // pixel noise growth per metre of range
  int median_window = 5;        // odd, >= 3
};

struct TagParams {
  double pos_noise = 0.008;  // m
  double att_noise = 0.004;  // rad
  double rate_noise = 0.01;  // rad/s
  double vel_noise = 0.02;   // m/s, platform velocity feedback noise
};

struct TouchdownLimits {
  double half_x = 0.25;      // plate half-extents, m
  double half_y = 0.20;
  double vz_max = 0.3;       // |relative vertical speed| at contact, m/s
  double contact_tol = 0.02; // relative height band upper edge, m
  double floor = -0.10;      // relative height band lower edge, m
};

struct MissionParams {
  double delta_a = 2.0;  // acquisition altitude offset, m
  double delta_t = 0.8;  // tracking altitude offset, m
  double sp_window = 1.0;          // verification window length, s
  double eps_p = 0.08;             // tracking-error RMS bound, m
  double eps_t = 0.15;             // platform-activity mean bound
  double w_omega = 0.5;            // s (weights the angular-rate norm)
  double w_phi = 1.0;
  double w_theta = 1.0;
  double handover_radius = 0.0;    // 0 = auto: ds / 1.5
  bool sp_horizontal_only = false; // drop e_z from the RMS check
  double z_min_clearance = 0.15;   // abort floor above local terrain, m
  double tag_loss_timeout = 1.0;   // s of continuous loss before abort
  TouchdownLimits touchdown;
};

struct RewardParamsCfg {
  double alpha0 = 0.2;
  double beta0 = 0.05;
  double alpha1 = 5.0;
  double beta1 = 1.0;
  double deadzone = 0.01;
  double d1_sample_prob = 0.5;  // docking-mode sampling rate in schedules
};

struct CurriculumParams {
  double lin_init = 0.3;
  double yaw_init = 0.1;
  double lin_full = 1.0;
  double yaw_full = 1.0;
  double lin_step = 0.1;
  double yaw_step = 0.1;
  double dock_lin_cap = 0.3;
  double dock_yaw_cap = 0.1;
  double promote_distance = 5.6;     // m completed to qualify for promotion
  double stability_threshold = 0.1;  // mean alignment penalty gate (docking)
  int slowdown_factor = 2;           // docking promotions need this many wins
};

struct RandomizeParams {
  double ring_min = 2.0;       // initial UAV offset ring, m
  double ring_max = 5.0;
  double platform_x0 = 1.5;    // platform start along the track, m
  double platform_speed = 0.8; // commanded walk speed before docking, m/s
  double speed_jitter = 0.2;   // relative jitter on the walk speed
  double wind_max = 2.5;       // constant wind force magnitude bound, N
  double gust_sigma = 0.8;     // gust force stddev, N
  double gust_tau = 0.5;       // gust correlation time, s
  bool noise = true;           // master switch for measurement noise
};

struct SimConfig {
  SimParams sim;
  UavParams uav;
  PlatformParams platform;
  WorldParams world;
  CameraParams camera;
  DetectParams detect;
  TagParams tag;
  ControllerGains control;
  MissionParams mission;
  RewardParamsCfg rewards;
  CurriculumParams curriculum;
  RandomizeParams randomize;

  // Resolves derived defaults (e.g. handover radius) and checks every
  // invariant; throws ValidationError naming the offending field.
  void finalize();

  Mat3 mass_matrix() const;
  Vec3 weight_force() const;  // (0, 0, mass*g): the modeled gravity term

  static SimConfig defaults();
};

// Parse + validate a config file in the key-value format.
SimConfig load_config(const std::string& path);
SimConfig config_from_string(const std::string& text,
                             const std::string& origin = "<string>");

// Canonical serialization; load(serialize(c)) == c field-for-field.
std::string serialize_config(const SimConfig& cfg);

// Apply a "section.key=value" override (CLI flag form).
void apply_override(SimConfig& cfg, const std::string& assignment);

// Path from DOCKSIM_CONFIG, if set.
std::optional<std::string> default_config_path();

bool operator==(const SimConfig& a, const SimConfig& b);

}  // namespace docksim
