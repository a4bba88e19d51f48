#include "rigsim/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace rigsim::report {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

void KeyValueReport::add(const std::string& key, double value) {
    entries_.emplace_back(key, format_number(value));
}

void KeyValueReport::add(const std::string& key, bool value) {
    entries_.emplace_back(key, value ? "true" : "false");
}

void KeyValueReport::add(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, value);
}

std::string KeyValueReport::kv() const {
    std::string out;
    for (const auto& [k, v] : entries_) out += k + "=" + v + "\n";
    return out;
}

std::string KeyValueReport::csv() const {
    std::string header;
    std::string row;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) {
            header += ',';
            row += ',';
        }
        header += entries_[i].first;
        row += entries_[i].second;
    }
    return header + "\n" + row + "\n";
}

std::string modal_csv(const fem::ModalResult& modal) {
    std::ostringstream os;
    os << kModalHeader << '\n';
    for (std::size_t i = 0; i < modal.frequencies.size(); ++i)
        os << i + 1 << ',' << format_number(modal.frequencies[i]) << '\n';
    return os.str();
}

std::string harmonic_csv(const fem::HarmonicResult& h) {
    std::ostringstream os;
    os << kHarmonicHeader << '\n';
    for (std::size_t i = 0; i < h.frequencies.size(); ++i) {
        os << format_number(h.frequencies[i]) << ',' << format_number(h.peak_displacement[i]) << ','
           << format_number(h.peak_stress[i]) << ',' << format_number(h.peak_strain[i]) << '\n';
    }
    return os.str();
}

std::string trajectory_csv(const std::vector<testmatrix::AxisSample>& samples) {
    std::ostringstream os;
    os << kTrajectoryHeader << '\n';
    for (const auto& s : samples) {
        os << format_number(s.t) << ',' << s.axis << ',' << format_number(s.position) << ','
           << format_number(s.velocity) << '\n';
    }
    return os.str();
}

std::string grasp_csv(const control::GraspTrace& trace) {
    std::ostringstream os;
    os << kGraspHeader << '\n';
    for (const auto& s : trace) {
        os << format_number(s.t) << ',' << format_number(s.desired) << ','
           << format_number(s.applied) << ',' << format_number(s.contact) << ','
           << format_number(s.error) << '\n';
    }
    return os.str();
}

std::string sensor_csv(const std::vector<testmatrix::SensorSample>& samples) {
    std::ostringstream os;
    os << kSensorHeader << '\n';
    for (const auto& s : samples) {
        os << format_number(s.t) << ',' << s.sensor << ',' << format_number(s.value) << ','
           << s.unit << '\n';
    }
    return os.str();
}

KeyValueReport test_matrix_report(const testmatrix::TestMatrixReport& r) {
    KeyValueReport kv;
    kv.add("required_force_n", r.required_force);
    kv.add("grasping_force_n", r.grasping_force);
    kv.add("operating_bandwidth_hz", r.operating_bandwidth);
    kv.add("positioning_efficiency", r.positioning_efficiency);
    kv.add("grasp_pass", r.grasp_ok);
    kv.add("bandwidth_pass", r.bandwidth_ok);
    kv.add("efficiency_pass", r.efficiency_ok);
    return kv;
}

}  // namespace rigsim::report
