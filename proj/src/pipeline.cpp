#include "rigsim/pipeline.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "rigsim/errors.hpp"

namespace rigsim::pipeline {

namespace {

double component(const motion::Vec3& v, int axis) {
    return axis == 0 ? v.x : (axis == 1 ? v.y : v.z);
}

PaperCheck relative(std::string name, double expected, double actual, double tol) {
    const bool pass = std::abs(actual - expected) <= tol * std::abs(expected);
    return {std::move(name), expected, actual, tol, CheckKind::relative, pass};
}

PaperCheck at_least(std::string name, double bound, double actual) {
    return {std::move(name), bound, actual, 0.0, CheckKind::at_least, actual >= bound};
}

}  // namespace

statics::StaticsReport run_statics(const config::RigConfig& cfg) {
    const auto& b = cfg.beam;
    const auto load = statics::udl_from_masses(b.masses, b.beam, b.rods_sharing, b.udl_mode);
    std::optional<double> i_override;
    if (b.use_paper_second_moment) i_override = statics::PAPER_I;
    return statics::analyze(b.beam, load, i_override);
}

fem::DofSystem fem_system(const config::RigConfig& cfg) {
    const auto beam = cfg.fem.beam(cfg.beam.beam);
    return fem::apply_fixed_fixed(fem::assemble(fem::Mesh1D::uniform(beam.length, cfg.fem.elements), beam));
}

fem::ModalResult run_modal(const config::RigConfig& cfg) {
    return fem::solve_modal(fem_system(cfg), cfg.fem.n_modes, cfg.fem.expand_degenerate);
}

HarmonicRun run_harmonic(const config::RigConfig& cfg) {
    const auto sys = fem_system(cfg);
    HarmonicRun run;
    if (cfg.fem.rayleigh) {
        run.damping = *cfg.fem.rayleigh;
    } else {
        const auto modes = fem::solve_modal(sys, 2, false);
        run.damping = fem::RayleighDamping::from_modal_ratio(cfg.fem.damping_ratio, modes.frequencies[0],
                                                             modes.frequencies[1]);
    }
    Eigen::VectorXd force;
    if (cfg.fem.excitation == config::ExcitationKind::uniform) {
        force = fem::udl_load_vector(sys, cfg.fem.excitation_amplitude);
    } else {
        force = fem::point_load_vector(sys, cfg.fem.excitation_position * sys.beam.length,
                                       cfg.fem.excitation_amplitude);
    }
    run.response = fem::harmonic_response(sys, run.damping, force, cfg.fem.f_grid.values());
    return run;
}

MoveRun run_move(const config::RigConfig& cfg) {
    MoveRun run;
    std::array<motion::AxisState, 3> states{};
    for (int i = 0; i < 3; ++i) {
        const auto& axis = cfg.axes[i];
        states[i].step_count = motion::displacement_to_steps(axis.travel_min, axis);
        const double goal = component(cfg.move.target, i);
        const double goal_q = motion::steps_to_displacement(motion::displacement_to_steps(goal, axis), axis);
        const auto profile =
            motion::plan_trapezoid(std::abs(goal_q - states[i].position(axis)), axis.v_max, axis.a_max);
        const auto move = motion::simulate_move(axis, states[i], goal, profile, cfg.move.dt);
        for (const auto& s : move.trajectory) run.trace.push_back({s.t, axis.name, s.position, s.velocity});
        states[i] = move.final_state;
        run.duration = std::max(run.duration, profile.t_total);
    }
    run.final_pose = motion::rig_pose(cfg.axes, states);
    return run;
}

control::GraspTrace run_grasp(const config::RigConfig& cfg) {
    control::SetpointSource setpoint;
    if (cfg.control.setpoint) {
        setpoint = control::SetpointSource::constant(*cfg.control.setpoint);
    } else {
        const control::FuzzyInputs in{cfg.scenario.target_start.x, cfg.scenario.target_start.z,
                                      cfg.scenario.conveyor_speed};
        setpoint = control::SetpointSource::fuzzy([in](double) { return in; });
    }
    return control::grasp_simulate(cfg.control.plant, cfg.fuzzy.system, cfg.control.gains, setpoint,
                                   cfg.grasp_options());
}

std::vector<PaperCheck> paper_check(const config::RigConfig& cfg) {
    std::vector<PaperCheck> out;
    const auto& beam = cfg.beam.beam;
    const double w =
        statics::udl_from_masses(cfg.beam.masses, beam, cfg.beam.rods_sharing, statics::UdlMode::paper_compat)
            .intensity;
    const double l = beam.length;
    out.push_back(relative("udl_n_per_m", 19.62, w, 1e-3));
    out.push_back(relative("reaction_n", 6.494, statics::reactions(w, l), 1e-3));
    out.push_back(relative("end_moment_nm", 0.7165, statics::end_moment(w, l), 1e-3));
    out.push_back(relative("centre_moment_nm", 0.3582, statics::centre_moment(w, l), 1e-3));
    out.push_back(relative("deflection_m", 2.28e-11,
                           statics::max_deflection(w, l, beam.material.youngs_modulus, statics::PAPER_I), 1e-3));

    const auto modal = fem::solve_modal(fem_system(cfg), 5, true);
    const std::array<double, 5> table{144.34, 144.42, 396.1, 396.31, 771.74};
    for (std::size_t i = 0; i < table.size(); ++i)
        out.push_back(relative("mode" + std::to_string(i + 1) + "_hz", table[i], modal.frequencies[i], 2e-2));

    const auto& fsr = cfg.sensors.fsr;
    out.push_back(at_least("fsr_no_load_ohm", 1e6, sensors::fsr_resistance(0.0, fsr)));
    out.push_back(relative("fsr_full_load_ohm", 2.5e3, sensors::fsr_resistance(fsr.full_load_force, fsr), 1e-9));
    return out;
}

std::string format_check(const PaperCheck& c) {
    char buf[256];
    if (c.kind == CheckKind::relative) {
        std::snprintf(buf, sizeof buf, "%s %s expected=%.6g actual=%.6g rel_err=%.3e tol=%.1e",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), c.expected, c.actual,
                      std::abs(c.actual - c.expected) / std::abs(c.expected), c.tolerance);
    } else {
        std::snprintf(buf, sizeof buf, "%s %s bound>=%.6g actual=%.6g", c.pass ? "PASS" : "FAIL",
                      c.name.c_str(), c.expected, c.actual);
    }
    return buf;
}

}  // namespace rigsim::pipeline
