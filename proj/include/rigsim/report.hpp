#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rigsim/control.hpp"
#include "rigsim/fem.hpp"
#include "rigsim/test_matrix.hpp"

// Text emitters for reports and plot data. CSV headers are fixed.
namespace rigsim::report {

inline constexpr const char* kModalHeader = "mode,frequency_hz";
inline constexpr const char* kHarmonicHeader = "frequency_hz,displacement_m,stress_pa,strain";
inline constexpr const char* kTrajectoryHeader = "t_s,axis,position_m,velocity_mps";
inline constexpr const char* kGraspHeader = "t_s,desired_n,applied_n,contact_n,error_n";
inline constexpr const char* kSensorHeader = "t_s,sensor,value,unit";

/// Shortest round-trippable decimal form; locale independent.
std::string format_number(double value);

/// Ordered flat key-value document (`key=value` lines), also renderable as a
/// one-row CSV for batch sweeps.
class KeyValueReport {
public:
    void add(const std::string& key, double value);
    void add(const std::string& key, bool value);
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }

    std::string kv() const;
    std::string csv() const;  // header line + one row
    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

std::string modal_csv(const fem::ModalResult& modal);
std::string harmonic_csv(const fem::HarmonicResult& harmonic);
std::string trajectory_csv(const std::vector<testmatrix::AxisSample>& samples);
std::string grasp_csv(const control::GraspTrace& trace);
std::string sensor_csv(const std::vector<testmatrix::SensorSample>& samples);

KeyValueReport test_matrix_report(const testmatrix::TestMatrixReport& report);

}  // namespace rigsim::report
