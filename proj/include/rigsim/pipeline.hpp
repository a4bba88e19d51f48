#pragma once

#include <string>
#include <vector>

#include "rigsim/config.hpp"

// Config-driven runs shared by the command line tool and the Python module.
namespace rigsim::pipeline {

statics::StaticsReport run_statics(const config::RigConfig& cfg);

fem::DofSystem fem_system(const config::RigConfig& cfg);
fem::ModalResult run_modal(const config::RigConfig& cfg);

struct HarmonicRun {
    fem::RayleighDamping damping;
    fem::HarmonicResult response;
};
/// Damping comes from the explicit coefficients when given, otherwise from
/// the damping ratio anchored at the first two modal frequencies.
HarmonicRun run_harmonic(const config::RigConfig& cfg);

struct MoveRun {
    std::vector<testmatrix::AxisSample> trace;
    motion::Vec3 final_pose;
    double duration = 0.0;  // s, slowest axis
};
/// Concurrent move of all three axes from home to the configured target.
MoveRun run_move(const config::RigConfig& cfg);

/// Force loop against the contact plant. The setpoint is the configured
/// constant, or the fuzzy force for the scenario's target when absent.
control::GraspTrace run_grasp(const config::RigConfig& cfg);

enum class CheckKind { relative, at_least };

struct PaperCheck {
    std::string name;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;  // relative; unused for at_least
    CheckKind kind = CheckKind::relative;
    bool pass = false;
};

/// Published reference values: beam statics with the unscaled load and the fixed second
/// moment, the paired natural frequencies, and the FSR endpoints.
std::vector<PaperCheck> paper_check(const config::RigConfig& cfg);
std::string format_check(const PaperCheck& check);

}  // namespace rigsim::pipeline
