#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "rigsim/fuzzy.hpp"
#include "rigsim/sensors.hpp"

namespace rigsim::control {

struct PidGains {
    double kp = 0.0;
    double ki = 0.0;
    double kd = 0.0;

    void validate() const;
};

struct PidState {
    double integral = 0.0;
    double prev_error = 0.0;
    bool has_prev = false;
    double integral_min = -std::numeric_limits<double>::infinity();
    double integral_max = std::numeric_limits<double>::infinity();
    double output_min = -std::numeric_limits<double>::infinity();
    double output_max = std::numeric_limits<double>::infinity();
};

/// Discrete PID: u = kp*e + ki*integral(e) + kd*de/dt, with the integral state
/// clamped to its limits and a backward-difference derivative (zero on the
/// first call).
double pid_step(const PidGains& gains, PidState& state, double error, double dt);

/// Gripper finger pressing on an object: a mass-spring-damper driven by an
/// actuator whose force is `actuator_gain` times the control voltage.
struct ContactPlant {
    double object_stiffness = 5000.0;   // N/m
    double object_mass = 0.2;           // kg, moving mass of finger + object contact
    double friction_coefficient = 0.5;
    double actuator_gain = 2.0;         // N/V
    double damping_ratio = 0.7;         // of the open-loop contact mode
    bool unilateral = true;             // contact transmits compression only

    double damping() const;
    /// Largest stable integration step.
    double max_dt() const;
    void validate() const;
};

struct FuzzyInputs {
    double target_position = 0.0;
    double relative_depth = 0.0;
    double speed = 0.0;
};

/// Desired-force generator for the loop: either a direct force profile or the
/// fuzzy system evaluated on time-varying inputs.
struct SetpointSource {
    std::function<double(double)> force;
    std::function<FuzzyInputs(double)> fuzzy_inputs;

    static SetpointSource constant(double force_n);
    static SetpointSource profile(std::function<double(double)> f);
    static SetpointSource fuzzy(std::function<FuzzyInputs(double)> inputs);
};

using GainSchedule = std::function<PidGains(double error, double error_rate, const PidGains& base)>;

struct GraspOptions {
    double duration = 1.0;  // s
    double dt = 1e-4;       // s
    std::optional<double> divergence_limit;  // N; default 10x the fuzzy output max
    std::optional<sensors::FsrSpec> measurement;  // contact force read through an FSR
    PidState pid;           // initial state and limits
    GainSchedule gain_schedule;  // optional; the primary path leaves it empty
};

struct GraspSample {
    double t = 0.0;
    double desired = 0.0;
    double applied = 0.0;
    double contact = 0.0;  // as measured
    double error = 0.0;
};

using GraspTrace = std::vector<GraspSample>;

/// Steps the closed loop one sample at a time; `grasp_simulate` drives it over
/// a fixed duration, the pick-and-place orchestrator until a force target.
class GraspLoop {
public:
    GraspLoop(const ContactPlant& plant, const PidGains& gains, const GraspOptions& options,
              double divergence_limit);

    /// Advances by dt towards `desired` and returns the recorded sample.
    GraspSample step(double desired);

    double time() const { return t_; }
    double true_contact_force() const;
    double measured_contact_force() const;

private:
    ContactPlant plant_;
    PidGains gains_;
    GraspOptions options_;
    PidState pid_;
    double divergence_limit_;
    long steps_ = 0;
    double t_ = 0.0;
    double x_ = 0.0;
    double v_ = 0.0;
};

GraspTrace grasp_simulate(const ContactPlant& plant, const FuzzySystem& fuzzy,
                          const PidGains& gains, const SetpointSource& setpoint,
                          const GraspOptions& options);

}  // namespace rigsim::control
