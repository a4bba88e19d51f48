#include "rigsim/motion.hpp"

#include <algorithm>
#include <cmath>

#include "rigsim/errors.hpp"

namespace rigsim::motion {

void LeadScrewSpec::validate() const {
    if (!(pitch > 0.0)) throw ConfigError("lead screw pitch must be positive");
    if (starts < 1) throw ConfigError("lead screw starts must be >= 1");
}

void StepperSpec::validate() const {
    if (full_steps_per_rev < 1) throw ConfigError("full_steps_per_rev must be >= 1");
    constexpr std::array<int, 6> allowed{1, 2, 4, 8, 16, 32};
    if (std::find(allowed.begin(), allowed.end(), microstepping) == allowed.end())
        throw ConfigError("microstepping must be one of 1, 2, 4, 8, 16, 32");
    if (!(holding_torque > 0.0)) throw ConfigError("holding_torque must be positive");
    if (!(phase_current > 0.0)) throw ConfigError("phase_current must be positive");
}

void AxisSpec::validate() const {
    screw.validate();
    motor.validate();
    if (!(travel_min < travel_max)) throw ConfigError("axis " + name + ": travel_min must be < travel_max");
    if (!(v_max > 0.0) || !(a_max > 0.0))
        throw ConfigError("axis " + name + ": v_max and a_max must be positive");
}

double AxisState::position(const AxisSpec& spec) const {
    return steps_to_displacement(step_count, spec);
}

double steps_to_displacement(std::int64_t steps, const AxisSpec& axis) {
    return static_cast<double>(steps) * axis.screw.lead() / axis.motor.steps_per_rev();
}

std::int64_t displacement_to_steps(double position, const AxisSpec& axis) {
    if (!(position >= axis.travel_min && position <= axis.travel_max))
        throw ConfigError("axis " + axis.name + ": position outside travel limits");
    return std::llround(position / axis.microstep_distance());
}

double MotionProfile::velocity_at(double t) const {
    if (t <= 0.0 || t >= t_total) return 0.0;
    const double v_peak = peak_velocity();
    if (t < t_accel) return a_max * t;
    if (t <= t_accel + t_cruise) return v_peak;
    return a_max * (t_total - t);
}

double MotionProfile::distance_at(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= t_total) return distance;
    const double v_peak = peak_velocity();
    if (t < t_accel) return 0.5 * a_max * t * t;
    const double d_accel = 0.5 * a_max * t_accel * t_accel;
    if (t <= t_accel + t_cruise) return d_accel + v_peak * (t - t_accel);
    const double remaining = t_total - t;
    return distance - 0.5 * a_max * remaining * remaining;
}

MotionProfile plan_trapezoid(double distance, double v_max, double a_max) {
    if (!(distance >= 0.0)) throw ConfigError("profile distance must be >= 0");
    if (!(v_max > 0.0) || !(a_max > 0.0)) throw ConfigError("v_max and a_max must be positive");
    MotionProfile p;
    p.distance = distance;
    p.v_max = v_max;
    p.a_max = a_max;
    if (distance > v_max * v_max / a_max) {
        p.shape = ProfileShape::trapezoid;
        p.t_accel = v_max / a_max;
        p.t_cruise = (distance - v_max * v_max / a_max) / v_max;
    } else {
        p.shape = ProfileShape::triangle;
        p.t_accel = std::sqrt(distance / a_max);
        p.t_cruise = 0.0;
    }
    p.t_total = 2.0 * p.t_accel + p.t_cruise;
    return p;
}

double move_time(const AxisSpec& axis, double from, double to) {
    return plan_trapezoid(std::abs(to - from), axis.v_max, axis.a_max).t_total;
}

MoveResult simulate_move(const AxisSpec& axis, const AxisState& state, double target,
                         const MotionProfile& profile, double dt) {
    if (!(dt > 0.0)) throw ConfigError("simulation dt must be positive");
    if (!state.homed) throw ConfigError("axis " + axis.name + " is not homed");
    const std::int64_t target_steps = displacement_to_steps(target, axis);
    const double start = state.position(axis);
    const double span = steps_to_displacement(target_steps, axis) - start;
    if (std::abs(std::abs(span) - profile.distance) > axis.microstep_distance())
        throw ConfigError("profile distance does not match the commanded move");
    const double direction = span < 0.0 ? -1.0 : 1.0;

    MoveResult out;
    if (target_steps == state.step_count) {
        out.trajectory.push_back({0.0, start, 0.0});
        out.final_state = state;
        out.final_state.velocity = 0.0;
        return out;
    }

    const auto n_steps = static_cast<std::int64_t>(std::ceil(profile.t_total / dt));
    out.trajectory.reserve(static_cast<std::size_t>(n_steps) + 1);
    const double step = axis.microstep_distance();
    for (std::int64_t k = 0; k <= n_steps; ++k) {
        const double t = std::min(static_cast<double>(k) * dt, profile.t_total);
        std::int64_t steps = state.step_count +
                             std::llround(direction * profile.distance_at(t) / step);
        if (k == n_steps) steps = target_steps;
        out.trajectory.push_back(
            {t, steps_to_displacement(steps, axis), direction * profile.velocity_at(t)});
    }
    out.final_state.step_count = target_steps;
    out.final_state.velocity = 0.0;
    out.final_state.homed = true;
    return out;
}

double distance(const Vec3& a, const Vec3& b) {
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

Vec3 rig_pose(const std::array<AxisSpec, 3>& axes, const std::array<AxisState, 3>& states) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (!states[i].homed) throw ConfigError("axis " + axes[i].name + " is not homed");
    }
    return {states[0].position(axes[0]), states[1].position(axes[1]),
            states[2].position(axes[2])};
}

std::array<AxisSpec, 3> default_axes() {
    std::array<AxisSpec, 3> axes;
    axes[0].name = "x";
    axes[1].name = "y";
    axes[2].name = "z";
    return axes;
}

}  // namespace rigsim::motion
