#include "rigsim/sensors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rigsim/errors.hpp"

namespace rigsim::sensors {

void UltrasonicSpec::validate() const {
    if (!(carrier_frequency >= 20e3 && carrier_frequency <= 200e3))
        throw ConfigError("ultrasonic carrier_frequency must lie in [20 kHz, 200 kHz]");
    if (!(speed_of_sound > 0.0)) throw ConfigError("speed_of_sound must be positive");
    if (!(max_range > 0.0)) throw ConfigError("ultrasonic max_range must be positive");
    if (!(noise_std >= 0.0)) throw ConfigError("ultrasonic noise_std must be >= 0");
}

void FsrSpec::validate() const {
    if (!(r_full_load > 0.0)) throw ConfigError("fsr r_full_load must be positive");
    if (!(r_no_load > r_full_load)) throw ConfigError("fsr r_no_load must exceed r_full_load");
    if (!(full_load_force > 0.0)) throw ConfigError("fsr full_load_force must be positive");
    if (!(exponent > 0.0)) throw ConfigError("fsr exponent must be positive");
    if (!(active_diameter > 0.0)) throw ConfigError("fsr active_diameter must be positive");
}

double FsrSpec::threshold_force() const {
    return full_load_force * std::pow(r_no_load / r_full_load, -1.0 / exponent);
}

void EncoderSpec::validate() const {
    if (slots_per_rev < 1) throw ConfigError("encoder slots_per_rev must be >= 1");
}

std::optional<double> echo_time(double distance, const UltrasonicSpec& spec) {
    if (!(distance > 0.0)) throw ConfigError("echo distance must be positive");
    if (distance > spec.max_range) return std::nullopt;
    return 2.0 * distance / spec.speed_of_sound;
}

double distance_from_echo(double t, const UltrasonicSpec& spec) {
    if (!(t >= 0.0)) throw ConfigError("echo time must be >= 0");
    return spec.speed_of_sound * t / 2.0;
}

double fsr_resistance(double force, const FsrSpec& spec) {
    if (!(force >= 0.0)) throw ConfigError("fsr force must be >= 0");
    if (force == 0.0) return spec.r_no_load;
    const double r = spec.r_full_load * std::pow(force / spec.full_load_force, -spec.exponent);
    return std::clamp(r, spec.r_full_load, spec.r_no_load);
}

double fsr_force(double resistance, const FsrSpec& spec) {
    if (!(resistance >= spec.r_full_load && resistance <= spec.r_no_load))
        throw ConfigError("fsr resistance outside [r_full_load, r_no_load]");
    return spec.full_load_force * std::pow(resistance / spec.r_full_load, -1.0 / spec.exponent);
}

double fsr_measured_force(double true_force, const FsrSpec& spec) {
    const double r = fsr_resistance(std::max(true_force, 0.0), spec);
    if (r >= spec.r_no_load) return 0.0;
    return fsr_force(r, spec);
}

double fsr_voltage(double resistance, double divider_r, double v_supply) {
    if (!(resistance > 0.0) || !(divider_r > 0.0) || !(v_supply > 0.0))
        throw ConfigError("divider resistances and supply must be positive");
    if (std::isinf(resistance)) return 0.0;
    return v_supply * divider_r / (resistance + divider_r);
}

double encoder_speed(std::int64_t pulses, double window, const EncoderSpec& spec) {
    if (!(window > 0.0)) throw ConfigError("encoder window must be positive");
    return static_cast<double>(pulses) / (spec.slots_per_rev * window);
}

std::int64_t encoder_pulses(double speed, double window, const EncoderSpec& spec, double phase) {
    if (!(window > 0.0)) throw ConfigError("encoder window must be positive");
    return static_cast<std::int64_t>(std::floor(speed * spec.slots_per_rev * window + phase));
}

bool disturbance_detect(double baseline, double reading, double threshold) {
    if (!(threshold > 0.0)) throw ConfigError("disturbance threshold must be positive");
    return std::abs(reading - baseline) > threshold;
}

NoiseSource::NoiseSource(double stddev, std::uint64_t seed) : stddev_(stddev), engine_(seed) {
    if (!(stddev >= 0.0)) throw ConfigError("noise stddev must be >= 0");
}

double NoiseSource::apply(double value) {
    if (stddev_ == 0.0) return value;
    return value + stddev_ * dist_(engine_);
}

UltrasonicSensor::UltrasonicSensor(UltrasonicSpec spec, std::uint64_t seed)
    : spec_(spec), noise_(spec.noise_std, seed) {
    spec_.validate();
}

std::optional<double> UltrasonicSensor::read(double true_distance) {
    const auto t = echo_time(true_distance, spec_);
    if (!t) return std::nullopt;
    return noise_.apply(distance_from_echo(*t, spec_));
}

}  // namespace rigsim::sensors
