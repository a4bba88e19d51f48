#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rigsim/config.hpp"
#include "rigsim/errors.hpp"
#include "rigsim/pipeline.hpp"
#include "rigsim/report.hpp"

namespace fs = std::filesystem;
using namespace rigsim;

namespace {

enum ExitCode { kOk = 0, kConfig = 1, kNumerical = 2, kScenario = 3 };

struct Options {
    std::string config_path;
    std::string out = ".";
    std::string format = "kv";
    std::optional<std::uint64_t> seed;
    bool dump_config = false;
};

class Output {
public:
    explicit Output(const Options& opt) : to_stdout_(opt.out == "-"), dir_(opt.out) {
        if (!to_stdout_) {
            std::error_code ec;
            fs::create_directories(dir_, ec);
            if (ec) throw ConfigError("cannot create output directory " + dir_.string() + ": " + ec.message());
        }
    }

    void write(const std::string& name, const std::string& text) const {
        if (to_stdout_) {
            std::cout << text;
            return;
        }
        std::ofstream f(dir_ / name, std::ios::binary);
        if (!f) throw ConfigError("cannot write " + (dir_ / name).string());
        f << text;
    }

    bool streaming() const { return to_stdout_; }

private:
    bool to_stdout_;
    fs::path dir_;
};

config::RigConfig load(const Options& opt) {
    auto cfg = opt.config_path.empty() ? config::default_config() : config::load_config(opt.config_path);
    if (opt.seed) cfg.pickplace.seed = *opt.seed;
    return cfg;
}

void write_report(const Output& out, const Options& opt, const report::KeyValueReport& r) {
    if (opt.format == "csv")
        out.write("report.csv", r.csv());
    else
        out.write("report.kv", r.kv());
}

int cmd_statics(const config::RigConfig& cfg, const Options& opt, const Output& out) {
    const auto s = pipeline::run_statics(cfg);
    report::KeyValueReport r;
    r.add("udl_n_per_m", s.intensity);
    r.add("reaction_n", s.reaction);
    r.add("end_moment_nm", s.end_moment);
    r.add("centre_moment_nm", s.centre_moment);
    r.add("second_moment_m4", s.second_moment);
    r.add("deflection_m", s.deflection);
    r.add("max_stress_pa", s.max_stress);
    if (s.safe) r.add("safe", *s.safe);
    write_report(out, opt, r);
    return kOk;
}

int cmd_modal(const config::RigConfig& cfg, const Output& out) {
    out.write("modal.csv", report::modal_csv(pipeline::run_modal(cfg)));
    return kOk;
}

int cmd_harmonic(const config::RigConfig& cfg, const Output& out) {
    out.write("harmonic.csv", report::harmonic_csv(pipeline::run_harmonic(cfg).response));
    return kOk;
}

int cmd_move(const config::RigConfig& cfg, const Output& out) {
    out.write("trace.csv", report::trajectory_csv(pipeline::run_move(cfg).trace));
    return kOk;
}

int cmd_grasp(const config::RigConfig& cfg, const Output& out) {
    out.write("trace.csv", report::grasp_csv(pipeline::run_grasp(cfg)));
    return kOk;
}

int cmd_testmatrix(const config::RigConfig& cfg, const Options& opt, const Output& out) {
    const auto t = testmatrix::evaluate_test_matrix(cfg.rig_setup(), cfg.scenario, cfg.pickplace);
    write_report(out, opt, report::test_matrix_report(t));
    return kOk;
}

int cmd_pickplace(const config::RigConfig& cfg, const Options& opt, const Output& out) {
    const auto r = testmatrix::run_pick_place(cfg.rig_setup(), cfg.scenario, cfg.pickplace);
    auto kv = report::test_matrix_report(r.report);
    kv.add("outcome", testmatrix::to_string(r.outcome));
    if (!r.reason.empty()) kv.add("reason", r.reason);
    kv.add("lift_contact_force_n", r.lift_contact_force);
    if (out.streaming()) {
        out.write("events.log", r.event_log());
    } else {
        write_report(out, opt, kv);
        out.write("trace.csv", report::grasp_csv(r.grasp_trace));
        out.write("motion.csv", report::trajectory_csv(r.motion_trace));
        out.write("sensors.csv", report::sensor_csv(r.sensor_trace));
        out.write("events.log", r.event_log());
    }
    if (r.outcome != testmatrix::PickOutcome::success) {
        std::cerr << "code=" << kScenario << " msg=" << testmatrix::to_string(r.outcome)
                  << (r.reason.empty() ? "" : ": " + r.reason) << "\n";
        return kScenario;
    }
    return kOk;
}

int cmd_paper_check(const config::RigConfig& cfg, const Options& opt, const Output& out) {
    const auto checks = pipeline::paper_check(cfg);
    report::KeyValueReport r;
    bool all = true;
    for (const auto& c : checks) {
        if (!out.streaming()) std::cout << pipeline::format_check(c) << "\n";
        r.add(c.name, c.actual);
        r.add(c.name + "_pass", c.pass);
        all = all && c.pass;
    }
    r.add("all_pass", all);
    write_report(out, opt, r);
    if (!all) {
        std::cerr << "code=" << kNumerical << " msg=reference values not reproduced\n";
        return kNumerical;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulation and analysis toolkit for a three-axis gantry test rig"};
    app.require_subcommand(1);
    Options opt;
    std::uint64_t seed = 0;

    const std::array<std::pair<const char*, const char*>, 8> commands{{
        {"statics", "closed-form beam statics for one guide rod"},
        {"modal", "natural frequencies of the clamped rod"},
        {"harmonic", "steady-state sinusoidal response sweep"},
        {"move", "move the gantry from home to the configured target"},
        {"grasp", "fuzzy-PID force loop against the contact plant"},
        {"testmatrix", "required force, bandwidth and positioning efficiency"},
        {"pickplace", "full conveyor pick-and-place scenario"},
        {"paper-check", "compare against the published reference values"},
    }};
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--config", opt.config_path, "configuration file (JSON)");
        sub->add_option("--out", opt.out, "output directory, or - for standard output");
        sub->add_option("--format", opt.format, "report format")->check(CLI::IsMember({"csv", "kv"}));
        sub->add_option("--seed", seed, "random seed for sensor noise");
        sub->add_flag("--dump-config", opt.dump_config, "also write the effective configuration");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "code=" << kConfig << " msg=" << e.what() << "\n";
        return kConfig;
    }

    const auto* sub = app.get_subcommands().front();
    if (sub->count("--seed") > 0) opt.seed = seed;
    const std::string name = sub->get_name();

    try {
        const auto cfg = load(opt);
        const Output out(opt);
        if (opt.dump_config && !out.streaming())
            out.write("effective_config.json", config::to_json(cfg).dump(2) + "\n");
        if (name == "statics") return cmd_statics(cfg, opt, out);
        if (name == "modal") return cmd_modal(cfg, out);
        if (name == "harmonic") return cmd_harmonic(cfg, out);
        if (name == "move") return cmd_move(cfg, out);
        if (name == "grasp") return cmd_grasp(cfg, out);
        if (name == "testmatrix") return cmd_testmatrix(cfg, opt, out);
        if (name == "pickplace") return cmd_pickplace(cfg, opt, out);
        return cmd_paper_check(cfg, opt, out);
    } catch (const ConfigError& e) {
        std::cerr << "code=" << kConfig << " msg=" << e.what() << "\n";
        return kConfig;
    } catch (const NumericalError& e) {
        std::cerr << "code=" << kNumerical << " msg=" << e.what() << "\n";
        return kNumerical;
    } catch (const ScenarioError& e) {
        std::cerr << "code=" << kScenario << " msg=" << e.what() << "\n";
        return kScenario;
    } catch (const std::exception& e) {
        std::cerr << "code=" << kNumerical << " msg=" << e.what() << "\n";
        return kNumerical;
    }
}
