#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rigsim::motion {

struct LeadScrewSpec {
    double pitch = 0.002;  // m
    int starts = 4;

    double lead() const { return starts * pitch; }  // m per revolution
    void validate() const;
};

struct StepperSpec {
    int full_steps_per_rev = 200;
    int microstepping = 16;
    double holding_torque = 0.53955;             // N*m (5.5 kg*cm)
    double phase_current = 1.5;                  // A

    int steps_per_rev() const { return full_steps_per_rev * microstepping; }
    void validate() const;
};

struct AxisSpec {
    std::string name = "x";
    LeadScrewSpec screw;
    StepperSpec motor;
    double travel_min = 0.0;  // m
    double travel_max = 0.6;  // m
    double v_max = 0.05;      // m/s
    double a_max = 0.2;       // m/s^2

    double microstep_distance() const { return screw.lead() / motor.steps_per_rev(); }
    void validate() const;
};

struct AxisState {
    std::int64_t step_count = 0;
    double velocity = 0.0;
    bool homed = true;

    double position(const AxisSpec& spec) const;
};

double steps_to_displacement(std::int64_t steps, const AxisSpec& axis);

/// Nearest microstep count for an absolute axis position. Throws ConfigError
/// when the position lies outside the axis travel.
std::int64_t displacement_to_steps(double position, const AxisSpec& axis);

enum class ProfileShape { trapezoid, triangle };

struct MotionProfile {
    double distance = 0.0;  // m, non-negative
    double v_max = 0.0;
    double a_max = 0.0;
    double t_accel = 0.0;
    double t_cruise = 0.0;
    double t_total = 0.0;
    ProfileShape shape = ProfileShape::triangle;

    double peak_velocity() const { return a_max * t_accel; }
    double velocity_at(double t) const;
    double distance_at(double t) const;
};

MotionProfile plan_trapezoid(double distance, double v_max, double a_max);

/// Minimum move time between two positions under the axis limits.
double move_time(const AxisSpec& axis, double from, double to);

struct TrajectorySample {
    double t = 0.0;
    double position = 0.0;
    double velocity = 0.0;
};

struct MoveResult {
    std::vector<TrajectorySample> trajectory;
    AxisState final_state;
};

/// Samples the profile every `dt` from the current state towards `target`,
/// quantizing positions to whole microsteps. The target is validated against
/// the axis travel before any motion; the final sample lands on the target's
/// nearest microstep.
MoveResult simulate_move(const AxisSpec& axis, const AxisState& state, double target,
                         const MotionProfile& profile, double dt);

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Vec3&, const Vec3&) = default;
};

double distance(const Vec3& a, const Vec3& b);

/// Gripper position from the three prismatic axis states (x lateral,
/// y longitudinal, z vertical carrying the gripper).
Vec3 rig_pose(const std::array<AxisSpec, 3>& axes, const std::array<AxisState, 3>& states);

std::array<AxisSpec, 3> default_axes();

}  // namespace rigsim::motion
