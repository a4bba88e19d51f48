#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace rigsim::sensors {

struct UltrasonicSpec {
    double carrier_frequency = 40e3;  // Hz, must lie in [20 kHz, 200 kHz]
    double speed_of_sound = 343.0;    // m/s
    double max_range = 4.0;           // m
    double noise_std = 0.0;           // m

    void validate() const;
};

struct FsrSpec {
    double r_no_load = 2.0e6;      // ohm
    double r_full_load = 2.5e3;    // ohm
    double full_load_force = 10.0; // N
    double exponent = 1.0;
    double active_diameter = 0.004;  // m

    void validate() const;
    /// Force at which the power law reaches r_no_load; below it the sensor reads open.
    double threshold_force() const;
};

struct EncoderSpec {
    int slots_per_rev = 20;

    void validate() const;
};

/// Round-trip echo delay; nullopt when the target is beyond max_range.
std::optional<double> echo_time(double distance, const UltrasonicSpec& spec);
double distance_from_echo(double t, const UltrasonicSpec& spec);

double fsr_resistance(double force, const FsrSpec& spec);
/// Inverse of fsr_resistance on [r_full_load, r_no_load]; throws ConfigError outside.
double fsr_force(double resistance, const FsrSpec& spec);
/// Force reported through the FSR: zero while the sensor reads open circuit,
/// saturating at full_load_force.
double fsr_measured_force(double true_force, const FsrSpec& spec);

/// Output of a divider with the FSR on the high side.
double fsr_voltage(double resistance, double divider_r, double v_supply);

double encoder_speed(std::int64_t pulses, double window, const EncoderSpec& spec);
/// Pulses a slotted disc spinning at `speed` rev/s produces within `window`.
std::int64_t encoder_pulses(double speed, double window, const EncoderSpec& spec,
                            double phase = 0.0);

bool disturbance_detect(double baseline, double reading, double threshold);

/// Seeded additive Gaussian noise. A zero standard deviation leaves samples
/// untouched and never advances the generator.
class NoiseSource {
public:
    NoiseSource(double stddev, std::uint64_t seed);

    double apply(double value);

private:
    double stddev_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> dist_{0.0, 1.0};
};

/// Ultrasonic ranger with its own noise stream.
class UltrasonicSensor {
public:
    UltrasonicSensor(UltrasonicSpec spec, std::uint64_t seed);

    /// Measured distance to a target at `true_distance`; nullopt for no echo.
    std::optional<double> read(double true_distance);
    const UltrasonicSpec& spec() const { return spec_; }

private:
    UltrasonicSpec spec_;
    NoiseSource noise_;
};

}  // namespace rigsim::sensors
