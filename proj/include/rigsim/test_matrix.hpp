#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigsim/control.hpp"
#include "rigsim/fuzzy.hpp"
#include "rigsim/motion.hpp"
#include "rigsim/sensors.hpp"

namespace rigsim::testmatrix {

using motion::Vec3;

struct TimedPosition {
    double t = 0.0;
    Vec3 position;
};

/// A work piece riding a conveyor through the rig workspace. Positions are in
/// rig axis coordinates; z is the depth the z axis must descend to reach it.
struct Scenario {
    double object_mass = 0.5;           // kg
    double friction_coefficient = 0.6;
    int n_contact_surfaces = 2;
    double motion_accel = 0.2;          // m/s^2
    double safety_factor = 2.0;
    double conveyor_speed = 0.0;        // m/s
    Vec3 conveyor_direction{1.0, 0.0, 0.0};
    Vec3 target_start{0.3, 0.3, 0.2};
    Vec3 place_position{0.1, 0.5, 0.1};
    double object_length = 0.05;        // m, along the conveyor
    double object_height = 0.04;        // m

    void validate() const;
    Vec3 target_at(double t) const;
    std::vector<TimedPosition> target_path(double duration, double dt) const;
};

/// Friction grip: F = m (g + a) SF / (mu n).
double required_grasp_force(const Scenario& scenario);

struct BandwidthOptions {
    double amplitude = 2.0;        // N
    std::optional<double> bias;    // N; default 3x amplitude keeps contact compressive
    double threshold = 0.5;        // allowed RMS error as a fraction of the setpoint RMS
    std::vector<double> f_grid;    // Hz, ascending
    double dt = 1e-4;
    int settle_periods = 5;
    int measure_periods = 10;

    void validate() const;
};

struct BandwidthResult {
    std::optional<double> bandwidth_hz;    // nullopt: loop fails already at the lowest frequency
    std::vector<double> frequencies;
    std::vector<double> relative_error;    // NaN where the loop diverged
};

/// Largest grid frequency up to which sinusoidal force tracking error stays
/// below `threshold` at every grid point.
BandwidthResult measure_bandwidth(const control::ContactPlant& plant, const control::PidGains& gains,
                                  const control::GraspOptions& loop, const BandwidthOptions& options);

double positioning_efficiency(const Vec3& gripper_center, const Vec3& target_cg,
                              double normalization_radius);

struct TestMatrixReport {
    double required_force = 0.0;          // N
    double grasping_force = 0.0;          // N, measured at lift
    double operating_bandwidth = 0.0;     // Hz, relative to the contact plant; 0 when none
    double positioning_efficiency = 0.0;  // [0, 1]
    bool grasp_ok = false;
    bool bandwidth_ok = false;
    bool efficiency_ok = false;
};

struct RigSetup {
    std::array<motion::AxisSpec, 3> axes = motion::default_axes();
    sensors::UltrasonicSpec ultrasonic;
    sensors::FsrSpec fsr;
    sensors::EncoderSpec encoder;
    control::FuzzySystem fuzzy;
    control::PidGains gains;
    control::ContactPlant plant;
    control::GraspOptions grasp;
    BandwidthOptions bandwidth;
};

struct PickPlaceOptions {
    double sense_dt = 1e-3;             // s, detection and intercept search step
    double trace_dt = 1e-2;             // s, motion trace sampling
    double detection_timeout = 20.0;    // s
    double grasp_timeout = 2.0;         // s
    double sensor_x = 0.3;              // m, ultrasonic mount position along x
    double ultrasonic_baseline = 0.5;   // m, sensor to belt
    double disturbance_threshold = 0.02;  // m
    double encoder_window = 0.1;        // s
    double normalization_radius = 0.02; // m, gripper active half-width
    double min_bandwidth_hz = 1.0;
    double min_efficiency = 0.9;
    bool verbose_log = false;
    std::uint64_t seed = 1;

    void validate() const;
};

enum class PickOutcome { success, missed_pick, grasp_timeout };

const char* to_string(PickOutcome outcome);

struct Event {
    double t = 0.0;
    std::string kind;
    std::string detail;
};

struct SensorSample {
    double t = 0.0;
    std::string sensor;
    double value = 0.0;
    std::string unit;
};

struct AxisSample {
    double t = 0.0;
    std::string axis;
    double position = 0.0;
    double velocity = 0.0;
};

struct PickPlaceResult {
    PickOutcome outcome = PickOutcome::missed_pick;
    std::string reason;
    TestMatrixReport report;
    std::vector<Event> events;
    control::GraspTrace grasp_trace;
    std::vector<SensorSample> sensor_trace;
    std::vector<AxisSample> motion_trace;
    double lift_contact_force = 0.0;

    std::string event_log() const;
};

/// Ultrasonic detection, intercept, fuzzy-PID grasp, lift, transfer and
/// release of one work piece. Missed picks and grasp timeouts are outcomes.
PickPlaceResult run_pick_place(const RigSetup& rig, const Scenario& scenario,
                               const PickPlaceOptions& options);

/// The three metrics without a conveyor run: required force, measured
/// bandwidth, and efficiency of a direct move onto the target start.
TestMatrixReport evaluate_test_matrix(const RigSetup& rig, const Scenario& scenario,
                                      const PickPlaceOptions& options);

}  // namespace rigsim::testmatrix
