#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rigsim/config.hpp"
#include "rigsim/errors.hpp"
#include "rigsim/pipeline.hpp"

namespace py = pybind11;
using namespace rigsim;

namespace {

// Config arrives as JSON text, or as "@<path>" to load a file with its
// relative rulebase reference resolved against the file's directory.
config::RigConfig parse(const std::string& text) {
    if (text.empty()) return config::default_config();
    if (text.front() == '@') return config::load_config(text.substr(1));
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return config::parse_config(doc);
}

py::dict statics_dict(const statics::StaticsReport& s) {
    py::dict d;
    d["udl_n_per_m"] = s.intensity;
    d["reaction_n"] = s.reaction;
    d["end_moment_nm"] = s.end_moment;
    d["centre_moment_nm"] = s.centre_moment;
    d["second_moment_m4"] = s.second_moment;
    d["deflection_m"] = s.deflection;
    d["max_stress_pa"] = s.max_stress;
    d["safe"] = s.safe ? py::cast(*s.safe) : py::none();
    return d;
}

py::dict report_dict(const testmatrix::TestMatrixReport& r) {
    py::dict d;
    d["required_force_n"] = r.required_force;
    d["grasping_force_n"] = r.grasping_force;
    d["operating_bandwidth_hz"] = r.operating_bandwidth;
    d["positioning_efficiency"] = r.positioning_efficiency;
    d["grasp_pass"] = r.grasp_ok;
    d["bandwidth_pass"] = r.bandwidth_ok;
    d["efficiency_pass"] = r.efficiency_ok;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gantry test rig analysis and simulation core";

    static py::exception<ConfigError> config_error(m, "ConfigError", PyExc_ValueError);
    static py::exception<NumericalError> numerical_error(m, "NumericalError", PyExc_RuntimeError);
    static py::exception<ScenarioError> scenario_error(m, "ScenarioError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ConfigError& e) {
            py::set_error(config_error, e.what());
        } catch (const NumericalError& e) {
            py::set_error(numerical_error, e.what());
        } catch (const ScenarioError& e) {
            py::set_error(scenario_error, e.what());
        }
    });

    m.def("default_config_json", [] { return config::to_json(config::default_config()).dump(); });
    m.def("effective_config_json", [](const std::string& cfg) { return config::to_json(parse(cfg)).dump(); },
          py::arg("config") = "");

    m.def("statics", [](const std::string& cfg) { return statics_dict(pipeline::run_statics(parse(cfg))); },
          py::arg("config") = "");

    m.def(
        "modal",
        [](const std::string& cfg) {
            const auto r = pipeline::run_modal(parse(cfg));
            py::dict d;
            d["frequency_hz"] = r.frequencies;
            d["bending_plane"] = r.bending_plane;
            d["residual"] = r.residuals;
            return d;
        },
        py::arg("config") = "");

    m.def(
        "harmonic",
        [](const std::string& cfg) {
            const auto r = pipeline::run_harmonic(parse(cfg));
            py::dict d;
            d["frequency_hz"] = r.response.frequencies;
            d["displacement_m"] = r.response.peak_displacement;
            d["stress_pa"] = r.response.peak_stress;
            d["strain"] = r.response.peak_strain;
            d["alpha"] = r.damping.alpha;
            d["beta"] = r.damping.beta;
            return d;
        },
        py::arg("config") = "");

    m.def(
        "move",
        [](const std::string& cfg) {
            const auto r = pipeline::run_move(parse(cfg));
            py::list trace;
            for (const auto& s : r.trace) trace.append(py::make_tuple(s.t, s.axis, s.position, s.velocity));
            py::dict d;
            d["trace"] = trace;
            d["final_pose"] = py::make_tuple(r.final_pose.x, r.final_pose.y, r.final_pose.z);
            d["duration_s"] = r.duration;
            return d;
        },
        py::arg("config") = "");

    m.def(
        "grasp",
        [](const std::string& cfg) {
            const auto trace = pipeline::run_grasp(parse(cfg));
            std::vector<double> t, desired, applied, contact, error;
            for (const auto& s : trace) {
                t.push_back(s.t);
                desired.push_back(s.desired);
                applied.push_back(s.applied);
                contact.push_back(s.contact);
                error.push_back(s.error);
            }
            py::dict d;
            d["t_s"] = t;
            d["desired_n"] = desired;
            d["applied_n"] = applied;
            d["contact_n"] = contact;
            d["error_n"] = error;
            return d;
        },
        py::arg("config") = "");

    m.def(
        "test_matrix",
        [](const std::string& cfg) {
            const auto c = parse(cfg);
            return report_dict(testmatrix::evaluate_test_matrix(c.rig_setup(), c.scenario, c.pickplace));
        },
        py::arg("config") = "");

    m.def(
        "pick_place",
        [](const std::string& cfg) {
            const auto c = parse(cfg);
            const auto r = testmatrix::run_pick_place(c.rig_setup(), c.scenario, c.pickplace);
            py::dict d;
            d["outcome"] = testmatrix::to_string(r.outcome);
            d["reason"] = r.reason;
            d["report"] = report_dict(r.report);
            d["lift_contact_force_n"] = r.lift_contact_force;
            d["event_log"] = r.event_log();
            return d;
        },
        py::arg("config") = "");

    m.def(
        "paper_check",
        [](const std::string& cfg) {
            py::list out;
            for (const auto& c : pipeline::paper_check(parse(cfg))) {
                py::dict d;
                d["name"] = c.name;
                d["expected"] = c.expected;
                d["actual"] = c.actual;
                d["pass"] = c.pass;
                out.append(d);
            }
            return out;
        },
        py::arg("config") = "");

    m.def("required_grasp_force",
          [](double mass, double friction, int surfaces, double accel, double safety_factor) {
              testmatrix::Scenario s;
              s.object_mass = mass;
              s.friction_coefficient = friction;
              s.n_contact_surfaces = surfaces;
              s.motion_accel = accel;
              s.safety_factor = safety_factor;
              return testmatrix::required_grasp_force(s);
          },
          py::arg("mass"), py::arg("friction"), py::arg("surfaces") = 2, py::arg("accel") = 0.0,
          py::arg("safety_factor") = 2.0);

    m.def(
        "fuzzy_desired_force",
        [](double position, double depth, double speed) {
            return control::fuzzy_desired_force(position, depth, speed, config::default_fuzzy_system());
        },
        py::arg("target_position"), py::arg("relative_depth"), py::arg("speed"));

    m.def("fixed_fixed_udl",
          [](double w, double l, double youngs_modulus, double second_moment) {
              py::dict d;
              d["reaction_n"] = statics::reactions(w, l);
              d["end_moment_nm"] = statics::end_moment(w, l);
              d["centre_moment_nm"] = statics::centre_moment(w, l);
              d["deflection_m"] = statics::max_deflection(w, l, youngs_modulus, second_moment);
              return d;
          },
          py::arg("w"), py::arg("l"), py::arg("youngs_modulus"), py::arg("second_moment"));
}
