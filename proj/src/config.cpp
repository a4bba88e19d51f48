#include "rigsim/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "rigsim/errors.hpp"
#include "rigsim_embedded.hpp"

namespace rigsim::config {

using nlohmann::json;

namespace {

// Reads an object's keys, remembers which were consumed, and rejects the rest.
class Reader {
public:
    Reader(const json& node, std::string path) : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) throw ConfigError(where() + " must be an object");
    }

    bool has(const char* key) const { return node_.contains(key); }

    template <typename T>
    void get(const char* key, T& out) {
        if (!node_.contains(key)) return;
        seen_.insert(key);
        try {
            out = node_.at(key).get<T>();
        } catch (const json::exception& e) {
            throw ConfigError(where(key) + ": " + e.what());
        }
    }

    template <typename T>
    void get(const char* key, std::optional<T>& out) {
        if (!node_.contains(key)) return;
        T value{};
        get(key, value);
        out = value;
    }

    const json& raw(const char* key) {
        seen_.insert(key);
        return node_.at(key);
    }

    Reader child(const char* key) {
        seen_.insert(key);
        return Reader(node_.at(key), where(key));
    }

    std::string where(const char* key = nullptr) const {
        return key ? path_ + "." + key : path_;
    }

    void finish() const {
        for (const auto& [key, _] : node_.items()) {
            if (!seen_.contains(key)) throw ConfigError("unknown config key '" + path_ + "." + key + "'");
        }
    }

private:
    const json& node_;
    std::string path_;
    std::set<std::string> seen_;
};

motion::Vec3 read_vec3(Reader& r, const char* key, motion::Vec3 fallback) {
    if (!r.has(key)) return fallback;
    std::vector<double> v;
    r.get(key, v);
    if (v.size() != 3) throw ConfigError(r.where(key) + " must hold 3 numbers");
    return {v[0], v[1], v[2]};
}

json vec3_json(const motion::Vec3& v) { return json::array({v.x, v.y, v.z}); }

void read_material(Reader r, statics::MaterialSpec& m) {
    r.get("density", m.density);
    r.get("youngs_modulus", m.youngs_modulus);
    r.get("yield_strength", m.yield_strength);
    r.finish();
}

void read_section(Reader r, statics::TubeSection& s) {
    r.get("outer_diameter", s.outer_diameter);
    r.get("inner_diameter", s.inner_diameter);
    r.finish();
}

void read_beam(Reader r, BeamConfig& b) {
    r.get("length", b.beam.length);
    if (r.has("section")) read_section(r.child("section"), b.beam.section);
    if (r.has("material")) read_material(r.child("material"), b.beam.material);
    if (r.has("masses")) {
        b.masses.clear();
        const json& arr = r.raw("masses");
        if (!arr.is_array()) throw ConfigError(r.where("masses") + " must be an array");
        for (const auto& item : arr) {
            Reader m(item, r.where("masses[]"));
            statics::ComponentMass c;
            m.get("name", c.name);
            m.get("mass", c.mass);
            m.finish();
            b.masses.push_back(c);
        }
    }
    r.get("rods_sharing", b.rods_sharing);
    if (r.has("udl_mode")) {
        std::string mode;
        r.get("udl_mode", mode);
        if (mode == "physical") b.udl_mode = statics::UdlMode::physical;
        else if (mode == "paper_compat") b.udl_mode = statics::UdlMode::paper_compat;
        else throw ConfigError(r.where("udl_mode") + " must be 'physical' or 'paper_compat'");
    }
    r.get("use_paper_second_moment", b.use_paper_second_moment);
    r.finish();
}

void read_fem(Reader r, FemConfig& f) {
    r.get("length", f.length);
    r.get("elements", f.elements);
    r.get("n_modes", f.n_modes);
    r.get("expand_degenerate", f.expand_degenerate);
    r.get("damping_ratio", f.damping_ratio);
    if (r.has("rayleigh")) {
        Reader d = r.child("rayleigh");
        fem::RayleighDamping rd;
        d.get("alpha", rd.alpha);
        d.get("beta", rd.beta);
        d.finish();
        f.rayleigh = rd;
    }
    if (r.has("excitation")) {
        Reader e = r.child("excitation");
        std::string kind = f.excitation == ExcitationKind::uniform ? "uniform" : "point";
        e.get("kind", kind);
        if (kind == "uniform") f.excitation = ExcitationKind::uniform;
        else if (kind == "point") f.excitation = ExcitationKind::point;
        else throw ConfigError(e.where("kind") + " must be 'uniform' or 'point'");
        e.get("amplitude", f.excitation_amplitude);
        e.get("position", f.excitation_position);
        e.finish();
    }
    if (r.has("f_grid")) {
        Reader g = r.child("f_grid");
        g.get("start", f.f_grid.start);
        g.get("stop", f.f_grid.stop);
        g.get("step", f.f_grid.step);
        g.finish();
    }
    r.finish();
}

void read_axis(Reader r, motion::AxisSpec& a) {
    r.get("name", a.name);
    if (r.has("screw")) {
        Reader s = r.child("screw");
        s.get("pitch", a.screw.pitch);
        s.get("starts", a.screw.starts);
        if (s.has("lead")) {
            double lead = 0.0;
            s.get("lead", lead);
            if (std::abs(lead - a.screw.lead()) > 1e-12 * std::max(1.0, std::abs(lead)))
                throw ConfigError(s.where("lead") + " is inconsistent with starts * pitch");
        }
        s.finish();
    }
    if (r.has("motor")) {
        Reader m = r.child("motor");
        m.get("full_steps_per_rev", a.motor.full_steps_per_rev);
        m.get("microstepping", a.motor.microstepping);
        m.get("holding_torque", a.motor.holding_torque);
        m.get("phase_current", a.motor.phase_current);
        m.finish();
    }
    r.get("travel_min", a.travel_min);
    r.get("travel_max", a.travel_max);
    r.get("v_max", a.v_max);
    r.get("a_max", a.a_max);
    r.finish();
}

void read_sensors(Reader r, SensorsConfig& s) {
    if (r.has("ultrasonic")) {
        Reader u = r.child("ultrasonic");
        u.get("carrier_frequency", s.ultrasonic.carrier_frequency);
        u.get("speed_of_sound", s.ultrasonic.speed_of_sound);
        u.get("max_range", s.ultrasonic.max_range);
        u.get("noise_std", s.ultrasonic.noise_std);
        u.finish();
    }
    if (r.has("fsr")) {
        Reader f = r.child("fsr");
        f.get("r_no_load", s.fsr.r_no_load);
        f.get("r_full_load", s.fsr.r_full_load);
        f.get("full_load_force", s.fsr.full_load_force);
        f.get("exponent", s.fsr.exponent);
        f.get("active_diameter", s.fsr.active_diameter);
        f.finish();
    }
    if (r.has("encoder")) {
        Reader e = r.child("encoder");
        e.get("slots_per_rev", s.encoder.slots_per_rev);
        e.finish();
    }
    r.get("divider_r", s.divider_r);
    r.get("v_supply", s.v_supply);
    r.finish();
}

void read_control(Reader r, ControlConfig& c) {
    if (r.has("gains")) {
        Reader g = r.child("gains");
        g.get("kp", c.gains.kp);
        g.get("ki", c.gains.ki);
        g.get("kd", c.gains.kd);
        g.finish();
    }
    if (r.has("plant")) {
        Reader p = r.child("plant");
        p.get("object_stiffness", c.plant.object_stiffness);
        p.get("object_mass", c.plant.object_mass);
        p.get("friction_coefficient", c.plant.friction_coefficient);
        p.get("actuator_gain", c.plant.actuator_gain);
        p.get("damping_ratio", c.plant.damping_ratio);
        p.get("unilateral", c.plant.unilateral);
        p.finish();
    }
    r.get("dt", c.dt);
    r.get("duration", c.duration);
    r.get("setpoint", c.setpoint);
    r.get("measure_with_fsr", c.measure_with_fsr);
    r.get("integral_limit", c.integral_limit);
    r.get("output_limit", c.output_limit);
    r.finish();
}

void read_scenario(Reader r, testmatrix::Scenario& s) {
    r.get("object_mass", s.object_mass);
    r.get("friction_coefficient", s.friction_coefficient);
    r.get("n_contact_surfaces", s.n_contact_surfaces);
    r.get("motion_accel", s.motion_accel);
    r.get("safety_factor", s.safety_factor);
    r.get("conveyor_speed", s.conveyor_speed);
    s.conveyor_direction = read_vec3(r, "conveyor_direction", s.conveyor_direction);
    s.target_start = read_vec3(r, "target_start", s.target_start);
    s.place_position = read_vec3(r, "place_position", s.place_position);
    r.get("object_length", s.object_length);
    r.get("object_height", s.object_height);
    r.finish();
}

void read_pickplace(Reader r, testmatrix::PickPlaceOptions& p) {
    r.get("sense_dt", p.sense_dt);
    r.get("trace_dt", p.trace_dt);
    r.get("detection_timeout", p.detection_timeout);
    r.get("grasp_timeout", p.grasp_timeout);
    r.get("sensor_x", p.sensor_x);
    r.get("ultrasonic_baseline", p.ultrasonic_baseline);
    r.get("disturbance_threshold", p.disturbance_threshold);
    r.get("encoder_window", p.encoder_window);
    r.get("normalization_radius", p.normalization_radius);
    r.get("min_bandwidth_hz", p.min_bandwidth_hz);
    r.get("min_efficiency", p.min_efficiency);
    r.get("verbose_log", p.verbose_log);
    r.get("seed", p.seed);
    r.finish();
}

void read_bandwidth(Reader r, testmatrix::BandwidthOptions& b) {
    r.get("amplitude", b.amplitude);
    r.get("bias", b.bias);
    r.get("threshold", b.threshold);
    r.get("f_grid", b.f_grid);
    r.get("dt", b.dt);
    r.get("settle_periods", b.settle_periods);
    r.get("measure_periods", b.measure_periods);
    r.finish();
}

control::MembershipFunction read_membership(Reader r) {
    control::MembershipFunction mf;
    std::string shape = "triangle";
    r.get("shape", shape);
    if (shape == "triangle") mf.shape = control::MembershipShape::triangle;
    else if (shape == "trapezoid") mf.shape = control::MembershipShape::trapezoid;
    else throw ConfigError(r.where("shape") + " must be 'triangle' or 'trapezoid'");
    r.get("breakpoints", mf.breakpoints);
    r.finish();
    return mf;
}

control::FuzzyVariable read_variable(Reader r) {
    control::FuzzyVariable v;
    r.get("name", v.name);
    r.get("min", v.min);
    r.get("max", v.max);
    const json& terms = r.raw("terms");
    if (!terms.is_array()) throw ConfigError(r.where("terms") + " must be an array");
    for (const auto& t : terms) {
        Reader tr(t, r.where("terms[]"));
        control::FuzzyTerm term;
        tr.get("label", term.label);
        term.membership = read_membership(tr.child("membership"));
        tr.finish();
        v.terms.push_back(std::move(term));
    }
    r.finish();
    return v;
}

json variable_json(const control::FuzzyVariable& v) {
    json terms = json::array();
    for (const auto& t : v.terms) {
        terms.push_back({{"label", t.label},
                         {"membership",
                          {{"shape", t.membership.shape == control::MembershipShape::triangle
                                         ? "triangle"
                                         : "trapezoid"},
                           {"breakpoints", t.membership.breakpoints}}}});
    }
    return {{"name", v.name}, {"min", v.min}, {"max", v.max}, {"terms", terms}};
}

}  // namespace

std::vector<double> FrequencyGrid::values() const {
    if (!(start > 0.0) || !(stop >= start) || !(step > 0.0))
        throw ConfigError("frequency grid needs 0 < start <= stop and step > 0");
    std::vector<double> f;
    const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long k = 0; k <= n; ++k) f.push_back(start + step * static_cast<double>(k));
    return f;
}

statics::BeamSpec FemConfig::beam(const statics::BeamSpec& base) const {
    statics::BeamSpec b = base;
    b.length = length;
    return b;
}

control::FuzzySystem fuzzy_from_json(const json& doc) {
    Reader r(doc, "fuzzy");
    control::FuzzySystem sys;
    const json& inputs = r.raw("inputs");
    if (!inputs.is_array()) throw ConfigError("fuzzy.inputs must be an array");
    for (const auto& in : inputs) sys.inputs.push_back(read_variable(Reader(in, "fuzzy.inputs[]")));
    sys.output = read_variable(r.child("output"));
    r.get("resolution", sys.resolution);
    const json& rules = r.raw("rules");
    if (!rules.is_array()) throw ConfigError("fuzzy.rules must be an array");
    for (const auto& item : rules) {
        Reader rr(item, "fuzzy.rules[]");
        control::FuzzyRule rule;
        rr.get("if", rule.antecedent);
        rr.get("then", rule.consequent);
        rr.finish();
        sys.rulebase.rules.push_back(std::move(rule));
    }
    r.finish();
    sys.validate();
    return sys;
}

json fuzzy_to_json(const control::FuzzySystem& system) {
    json inputs = json::array();
    for (const auto& v : system.inputs) inputs.push_back(variable_json(v));
    json rules = json::array();
    for (const auto& rule : system.rulebase.rules)
        rules.push_back({{"if", rule.antecedent}, {"then", rule.consequent}});
    return {{"inputs", inputs},
            {"output", variable_json(system.output)},
            {"resolution", system.resolution},
            {"rules", rules}};
}

control::FuzzySystem default_fuzzy_system() {
    static const control::FuzzySystem system = fuzzy_from_json(json::parse(embedded::kDefaultRulebase));
    return system;
}

namespace {
json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("cannot parse '" + path.string() + "': " + e.what());
    }
}
}  // namespace

control::FuzzySystem load_fuzzy_system(const std::filesystem::path& path) {
    return fuzzy_from_json(read_json_file(path));
}

RigConfig default_config() {
    RigConfig c;
    c.beam.beam.material.yield_strength = 2.15e8;  // 304 stainless, annealed
    c.fuzzy.system = default_fuzzy_system();
    c.scenario.target_start = {0.3, 0.3, 0.12};
    c.bandwidth.f_grid.clear();
    for (int i = 1; i <= 40; ++i) c.bandwidth.f_grid.push_back(0.5 * i);
    return c;
}

RigConfig parse_config(const json& doc, const std::filesystem::path& base_dir) {
    RigConfig c = default_config();
    Reader r(doc, "config");
    if (r.has("beam")) read_beam(r.child("beam"), c.beam);
    if (r.has("fem")) read_fem(r.child("fem"), c.fem);
    if (r.has("axes")) {
        const json& axes = r.raw("axes");
        if (!axes.is_array() || axes.size() != 3) throw ConfigError("config.axes must hold exactly 3 axes");
        for (std::size_t i = 0; i < 3; ++i) read_axis(Reader(axes[i], "config.axes[]"), c.axes[i]);
    }
    if (r.has("sensors")) read_sensors(r.child("sensors"), c.sensors);
    if (r.has("fuzzy")) {
        Reader f = r.child("fuzzy");
        if (f.has("rulebase") && f.has("system"))
            throw ConfigError("config.fuzzy takes either 'rulebase' or 'system', not both");
        if (f.has("rulebase")) {
            std::string path;
            f.get("rulebase", path);
            std::filesystem::path p(path);
            if (p.is_relative()) p = base_dir / p;
            c.fuzzy.rulebase_path = path;
            c.fuzzy.system = load_fuzzy_system(p);
        }
        if (f.has("system")) c.fuzzy.system = fuzzy_from_json(f.raw("system"));
        f.finish();
    }
    if (r.has("control")) read_control(r.child("control"), c.control);
    if (r.has("scenario")) read_scenario(r.child("scenario"), c.scenario);
    if (r.has("pickplace")) read_pickplace(r.child("pickplace"), c.pickplace);
    if (r.has("bandwidth")) read_bandwidth(r.child("bandwidth"), c.bandwidth);
    if (r.has("move")) {
        Reader m = r.child("move");
        c.move.target = read_vec3(m, "target", c.move.target);
        m.get("dt", c.move.dt);
        m.finish();
    }
    r.finish();
    c.validate();
    return c;
}

RigConfig load_config(const std::filesystem::path& path) {
    return parse_config(read_json_file(path), path.parent_path());
}

void RigConfig::validate() const {
    beam.beam.validate();
    if (beam.masses.empty()) throw ConfigError("beam.masses must not be empty");
    for (const auto& m : beam.masses) {
        if (!(m.mass > 0.0)) throw ConfigError("beam.masses entry '" + m.name + "' must be positive");
    }
    if (beam.rods_sharing < 1) throw ConfigError("beam.rods_sharing must be >= 1");

    fem.beam(beam.beam).validate();
    if (fem.elements < 2) throw ConfigError("fem.elements must be >= 2");
    if (fem.n_modes < 1) throw ConfigError("fem.n_modes must be >= 1");
    if (!(fem.damping_ratio > 0.0 && fem.damping_ratio < 1.0))
        throw ConfigError("fem.damping_ratio must lie in (0, 1)");
    if (fem.rayleigh) fem.rayleigh->validate();
    if (fem.excitation == ExcitationKind::point &&
        !(fem.excitation_position >= 0.0 && fem.excitation_position <= 1.0))
        throw ConfigError("fem.excitation.position must be a span fraction in [0, 1]");
    fem.f_grid.values();

    for (const auto& a : axes) a.validate();
    sensors.ultrasonic.validate();
    sensors.fsr.validate();
    sensors.encoder.validate();
    if (!(sensors.divider_r > 0.0) || !(sensors.v_supply > 0.0))
        throw ConfigError("sensors divider_r and v_supply must be positive");

    fuzzy.system.validate();
    if (fuzzy.system.inputs.size() != 3)
        throw ConfigError("fuzzy system must have exactly 3 inputs (position, depth, speed)");

    control.gains.validate();
    control.plant.validate();
    if (!(control.dt > 0.0) || !(control.dt < control.plant.max_dt()))
        throw ConfigError("control.dt must be positive and below 0.1*sqrt(m/k)");
    if (!(control.duration >= 0.0)) throw ConfigError("control.duration must be >= 0");
    if (!(control.integral_limit > 0.0) || !(control.output_limit > 0.0))
        throw ConfigError("control limits must be positive");

    scenario.validate();
    pickplace.validate();
    bandwidth.validate();
    if (!(move.dt > 0.0)) throw ConfigError("move.dt must be positive");
}

control::GraspOptions RigConfig::grasp_options() const {
    control::GraspOptions g;
    g.duration = control.duration;
    g.dt = control.dt;
    if (control.measure_with_fsr) g.measurement = sensors.fsr;
    g.pid.integral_min = -control.integral_limit;
    g.pid.integral_max = control.integral_limit;
    g.pid.output_min = -control.output_limit;
    g.pid.output_max = control.output_limit;
    return g;
}

testmatrix::RigSetup RigConfig::rig_setup() const {
    testmatrix::RigSetup rig;
    rig.axes = axes;
    rig.ultrasonic = sensors.ultrasonic;
    rig.fsr = sensors.fsr;
    rig.encoder = sensors.encoder;
    rig.fuzzy = fuzzy.system;
    rig.gains = control.gains;
    rig.plant = control.plant;
    rig.grasp = grasp_options();
    rig.bandwidth = bandwidth;
    return rig;
}

json to_json(const RigConfig& c) {
    json masses = json::array();
    for (const auto& m : c.beam.masses) masses.push_back({{"name", m.name}, {"mass", m.mass}});
    json material = {{"density", c.beam.beam.material.density},
                     {"youngs_modulus", c.beam.beam.material.youngs_modulus}};
    if (c.beam.beam.material.yield_strength)
        material["yield_strength"] = *c.beam.beam.material.yield_strength;

    json fem = {{"length", c.fem.length},
                {"elements", c.fem.elements},
                {"n_modes", c.fem.n_modes},
                {"expand_degenerate", c.fem.expand_degenerate},
                {"damping_ratio", c.fem.damping_ratio},
                {"excitation",
                 {{"kind", c.fem.excitation == ExcitationKind::uniform ? "uniform" : "point"},
                  {"amplitude", c.fem.excitation_amplitude},
                  {"position", c.fem.excitation_position}}},
                {"f_grid", {{"start", c.fem.f_grid.start}, {"stop", c.fem.f_grid.stop}, {"step", c.fem.f_grid.step}}}};
    if (c.fem.rayleigh) fem["rayleigh"] = {{"alpha", c.fem.rayleigh->alpha}, {"beta", c.fem.rayleigh->beta}};

    json axes = json::array();
    for (const auto& a : c.axes) {
        axes.push_back({{"name", a.name},
                        {"screw", {{"pitch", a.screw.pitch}, {"starts", a.screw.starts}}},
                        {"motor",
                         {{"full_steps_per_rev", a.motor.full_steps_per_rev},
                          {"microstepping", a.motor.microstepping},
                          {"holding_torque", a.motor.holding_torque},
                          {"phase_current", a.motor.phase_current}}},
                        {"travel_min", a.travel_min},
                        {"travel_max", a.travel_max},
                        {"v_max", a.v_max},
                        {"a_max", a.a_max}});
    }

    const auto& s = c.sensors;
    json sensors = {{"ultrasonic",
                     {{"carrier_frequency", s.ultrasonic.carrier_frequency},
                      {"speed_of_sound", s.ultrasonic.speed_of_sound},
                      {"max_range", s.ultrasonic.max_range},
                      {"noise_std", s.ultrasonic.noise_std}}},
                    {"fsr",
                     {{"r_no_load", s.fsr.r_no_load},
                      {"r_full_load", s.fsr.r_full_load},
                      {"full_load_force", s.fsr.full_load_force},
                      {"exponent", s.fsr.exponent},
                      {"active_diameter", s.fsr.active_diameter}}},
                    {"encoder", {{"slots_per_rev", s.encoder.slots_per_rev}}},
                    {"divider_r", s.divider_r},
                    {"v_supply", s.v_supply}};

    const auto& k = c.control;
    json control = {{"gains", {{"kp", k.gains.kp}, {"ki", k.gains.ki}, {"kd", k.gains.kd}}},
                    {"plant",
                     {{"object_stiffness", k.plant.object_stiffness},
                      {"object_mass", k.plant.object_mass},
                      {"friction_coefficient", k.plant.friction_coefficient},
                      {"actuator_gain", k.plant.actuator_gain},
                      {"damping_ratio", k.plant.damping_ratio},
                      {"unilateral", k.plant.unilateral}}},
                    {"dt", k.dt},
                    {"duration", k.duration},
                    {"measure_with_fsr", k.measure_with_fsr},
                    {"integral_limit", k.integral_limit},
                    {"output_limit", k.output_limit}};
    if (k.setpoint) control["setpoint"] = *k.setpoint;

    const auto& sc = c.scenario;
    json scenario = {{"object_mass", sc.object_mass},
                     {"friction_coefficient", sc.friction_coefficient},
                     {"n_contact_surfaces", sc.n_contact_surfaces},
                     {"motion_accel", sc.motion_accel},
                     {"safety_factor", sc.safety_factor},
                     {"conveyor_speed", sc.conveyor_speed},
                     {"conveyor_direction", vec3_json(sc.conveyor_direction)},
                     {"target_start", vec3_json(sc.target_start)},
                     {"place_position", vec3_json(sc.place_position)},
                     {"object_length", sc.object_length},
                     {"object_height", sc.object_height}};

    const auto& p = c.pickplace;
    json pickplace = {{"sense_dt", p.sense_dt},
                      {"trace_dt", p.trace_dt},
                      {"detection_timeout", p.detection_timeout},
                      {"grasp_timeout", p.grasp_timeout},
                      {"sensor_x", p.sensor_x},
                      {"ultrasonic_baseline", p.ultrasonic_baseline},
                      {"disturbance_threshold", p.disturbance_threshold},
                      {"encoder_window", p.encoder_window},
                      {"normalization_radius", p.normalization_radius},
                      {"min_bandwidth_hz", p.min_bandwidth_hz},
                      {"min_efficiency", p.min_efficiency},
                      {"verbose_log", p.verbose_log},
                      {"seed", p.seed}};

    const auto& b = c.bandwidth;
    json bandwidth = {{"amplitude", b.amplitude},
                      {"threshold", b.threshold},
                      {"f_grid", b.f_grid},
                      {"dt", b.dt},
                      {"settle_periods", b.settle_periods},
                      {"measure_periods", b.measure_periods}};
    if (b.bias) bandwidth["bias"] = *b.bias;

    return {{"beam",
             {{"length", c.beam.beam.length},
              {"section",
               {{"outer_diameter", c.beam.beam.section.outer_diameter},
                {"inner_diameter", c.beam.beam.section.inner_diameter}}},
              {"material", material},
              {"masses", masses},
              {"rods_sharing", c.beam.rods_sharing},
              {"udl_mode", c.beam.udl_mode == statics::UdlMode::physical ? "physical" : "paper_compat"},
              {"use_paper_second_moment", c.beam.use_paper_second_moment}}},
            {"fem", fem},
            {"axes", axes},
            {"sensors", sensors},
            {"fuzzy", {{"system", fuzzy_to_json(c.fuzzy.system)}}},
            {"control", control},
            {"scenario", scenario},
            {"pickplace", pickplace},
            {"bandwidth", bandwidth},
            {"move", {{"target", vec3_json(c.move.target)}, {"dt", c.move.dt}}}};
}

}  // namespace rigsim::config
