#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rigsim/control.hpp"
#include "rigsim/fem.hpp"
#include "rigsim/fuzzy.hpp"
#include "rigsim/motion.hpp"
#include "rigsim/sensors.hpp"
#include "rigsim/statics.hpp"
#include "rigsim/test_matrix.hpp"

// Root configuration document. The on-disk dialect is JSON; every object
// rejects keys it does not know, and omitted keys keep their defaults.
namespace rigsim::config {

struct BeamConfig {
    statics::BeamSpec beam;
    statics::ComponentMassList masses = statics::default_actuator_masses();
    int rods_sharing = 2;
    statics::UdlMode udl_mode = statics::UdlMode::physical;
    bool use_paper_second_moment = false;
};

enum class ExcitationKind { uniform, point };

struct FrequencyGrid {
    double start = 5.0;
    double stop = 1000.0;
    double step = 5.0;

    std::vector<double> values() const;
};

struct FemConfig {
    double length = 0.700;  // m; modal/harmonic span
    int elements = 64;
    int n_modes = 5;
    bool expand_degenerate = true;
    double damping_ratio = 0.02;            // Rayleigh, anchored at the first two modes
    std::optional<fem::RayleighDamping> rayleigh;  // explicit coefficients override the ratio
    ExcitationKind excitation = ExcitationKind::uniform;
    double excitation_amplitude = 14.014;   // N/m (uniform) or N (point)
    double excitation_position = 0.25;      // fraction of span, point load only
    FrequencyGrid f_grid;

    statics::BeamSpec beam(const statics::BeamSpec& base) const;
};

struct SensorsConfig {
    sensors::UltrasonicSpec ultrasonic;
    sensors::FsrSpec fsr;
    sensors::EncoderSpec encoder;
    double divider_r = 10e3;  // ohm
    double v_supply = 5.0;    // V
};

struct ControlConfig {
    control::PidGains gains{0.5, 20.0, 0.0};
    control::ContactPlant plant;
    double dt = 1e-4;
    double duration = 1.0;
    std::optional<double> setpoint;  // N; absent: fuzzy setpoint from the scenario
    bool measure_with_fsr = false;   // feed back the FSR reading instead of the plant force
    double integral_limit = 2.0;     // |integral| bound, N*s
    double output_limit = 24.0;      // |voltage| bound, V
};

struct FuzzyConfig {
    std::optional<std::string> rulebase_path;  // as written in the config
    control::FuzzySystem system;
};

struct MoveConfig {
    motion::Vec3 target{0.3, 0.3, 0.1};
    double dt = 0.01;
};

struct RigConfig {
    BeamConfig beam;
    FemConfig fem;
    std::array<motion::AxisSpec, 3> axes = motion::default_axes();
    SensorsConfig sensors;
    FuzzyConfig fuzzy;
    ControlConfig control;
    testmatrix::Scenario scenario;
    testmatrix::PickPlaceOptions pickplace;
    testmatrix::BandwidthOptions bandwidth;
    MoveConfig move;

    /// Re-validates every module invariant and cross-field rule.
    void validate() const;
    control::GraspOptions grasp_options() const;
    testmatrix::RigSetup rig_setup() const;
};

RigConfig default_config();
RigConfig parse_config(const nlohmann::json& doc,
                       const std::filesystem::path& base_dir = std::filesystem::current_path());
RigConfig load_config(const std::filesystem::path& path);
/// Effective configuration with the fuzzy system inlined; reloads to an equivalent run.
nlohmann::json to_json(const RigConfig& config);

control::FuzzySystem default_fuzzy_system();
control::FuzzySystem fuzzy_from_json(const nlohmann::json& doc);
nlohmann::json fuzzy_to_json(const control::FuzzySystem& system);
control::FuzzySystem load_fuzzy_system(const std::filesystem::path& path);

}  // namespace rigsim::config
