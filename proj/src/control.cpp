#include "rigsim/control.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rigsim/errors.hpp"

namespace rigsim::control {

void PidGains::validate() const {
    if (!(kp >= 0.0) || !(ki >= 0.0) || !(kd >= 0.0))
        throw ConfigError("PID gains must be non-negative");
}

double pid_step(const PidGains& gains, PidState& state, double error, double dt) {
    if (!(dt > 0.0)) throw ConfigError("PID dt must be positive");
    state.integral = std::clamp(state.integral + error * dt, state.integral_min, state.integral_max);
    const double derivative = state.has_prev ? (error - state.prev_error) / dt : 0.0;
    state.prev_error = error;
    state.has_prev = true;
    const double u = gains.kp * error + gains.ki * state.integral + gains.kd * derivative;
    return std::clamp(u, state.output_min, state.output_max);
}

double ContactPlant::damping() const {
    return 2.0 * damping_ratio * std::sqrt(object_stiffness * object_mass);
}

double ContactPlant::max_dt() const { return 0.1 * std::sqrt(object_mass / object_stiffness); }

void ContactPlant::validate() const {
    if (!(object_stiffness > 0.0) || !(object_mass > 0.0) || !(friction_coefficient > 0.0) ||
        !(actuator_gain > 0.0))
        throw ConfigError("contact plant parameters must be positive");
    if (!(damping_ratio >= 0.0)) throw ConfigError("contact plant damping_ratio must be >= 0");
}

SetpointSource SetpointSource::constant(double force_n) {
    return profile([force_n](double) { return force_n; });
}

SetpointSource SetpointSource::profile(std::function<double(double)> f) {
    SetpointSource s;
    s.force = std::move(f);
    return s;
}

SetpointSource SetpointSource::fuzzy(std::function<FuzzyInputs(double)> inputs) {
    SetpointSource s;
    s.fuzzy_inputs = std::move(inputs);
    return s;
}

GraspLoop::GraspLoop(const ContactPlant& plant, const PidGains& gains, const GraspOptions& options,
                     double divergence_limit)
    : plant_(plant), gains_(gains), options_(options), pid_(options.pid),
      divergence_limit_(divergence_limit) {
    plant_.validate();
    gains_.validate();
    if (!(options_.dt > 0.0)) throw ConfigError("grasp dt must be positive");
    if (!(options_.dt < plant_.max_dt())) {
        std::ostringstream msg;
        msg << "grasp dt " << options_.dt << " s is not below the stability bound "
            << plant_.max_dt() << " s";
        throw ConfigError(msg.str());
    }
    if (options_.measurement) options_.measurement->validate();
}

double GraspLoop::true_contact_force() const {
    const double x = plant_.unilateral ? std::max(x_, 0.0) : x_;
    return plant_.object_stiffness * x;
}

double GraspLoop::measured_contact_force() const {
    const double f = true_contact_force();
    if (!options_.measurement) return f;
    return sensors::fsr_measured_force(f, *options_.measurement);
}

GraspSample GraspLoop::step(double desired) {
    const double dt = options_.dt;
    const double measured = measured_contact_force();
    const double error = desired - measured;

    PidGains gains = gains_;
    if (options_.gain_schedule) {
        const double rate = pid_.has_prev ? (error - pid_.prev_error) / dt : 0.0;
        gains = options_.gain_schedule(error, rate, gains_);
    }
    const double voltage = pid_step(gains, pid_, error, dt);
    const double applied = plant_.actuator_gain * voltage;

    // semi-implicit Euler
    const double spring = true_contact_force();
    const double accel = (applied - spring - plant_.damping() * v_) / plant_.object_mass;
    v_ += dt * accel;
    x_ += dt * v_;
    t_ = static_cast<double>(++steps_) * dt;

    const double contact = measured_contact_force();
    if (!std::isfinite(contact) || std::abs(true_contact_force()) > divergence_limit_) {
        std::ostringstream msg;
        msg << "grasp loop diverged at t=" << t_ << " s (force beyond " << divergence_limit_
            << " N)";
        throw NumericalError(msg.str());
    }
    return {t_, desired, applied, contact, desired - contact};
}

GraspTrace grasp_simulate(const ContactPlant& plant, const FuzzySystem& fuzzy,
                          const PidGains& gains, const SetpointSource& setpoint,
                          const GraspOptions& options) {
    if (!setpoint.force && !setpoint.fuzzy_inputs) throw ConfigError("setpoint source is empty");
    if (!(options.duration >= 0.0)) throw ConfigError("grasp duration must be >= 0");
    const double limit = options.divergence_limit.value_or(10.0 * fuzzy.output.max);
    GraspLoop loop(plant, gains, options, limit);

    std::optional<FuzzyInputs> cached_inputs;
    double cached_force = 0.0;
    auto desired_at = [&](double t) {
        if (setpoint.force) return setpoint.force(t);
        const FuzzyInputs in = setpoint.fuzzy_inputs(t);
        if (!cached_inputs || in.target_position != cached_inputs->target_position ||
            in.relative_depth != cached_inputs->relative_depth || in.speed != cached_inputs->speed) {
            cached_force = fuzzy_desired_force(in.target_position, in.relative_depth, in.speed, fuzzy);
            cached_inputs = in;
        }
        return cached_force;
    };

    const auto n = static_cast<long>(std::llround(options.duration / options.dt));
    GraspTrace trace;
    trace.reserve(static_cast<std::size_t>(n) + 1);
    const double d0 = desired_at(0.0);
    const double c0 = loop.measured_contact_force();
    trace.push_back({0.0, d0, 0.0, c0, d0 - c0});
    for (long k = 0; k < n; ++k) trace.push_back(loop.step(desired_at(loop.time())));
    return trace;
}

}  // namespace rigsim::control
