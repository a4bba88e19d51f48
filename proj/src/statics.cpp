#include "rigsim/statics.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "rigsim/errors.hpp"

namespace rigsim::statics {

void MaterialSpec::validate() const {
    if (!(density > 0.0)) throw ConfigError("material density must be positive");
    if (!(youngs_modulus > 0.0)) throw ConfigError("material youngs_modulus must be positive");
    if (yield_strength && !(*yield_strength > 0.0))
        throw ConfigError("material yield_strength must be positive");
}

void TubeSection::validate() const {
    if (!(inner_diameter >= 0.0)) throw ConfigError("section inner_diameter must be >= 0");
    if (!(inner_diameter < outer_diameter))
        throw ConfigError("section inner_diameter must be smaller than outer_diameter");
}

void BeamSpec::validate() const {
    if (!(length > 0.0)) throw ConfigError("beam length must be positive");
    section.validate();
    material.validate();
}

void UdlLoad::validate() const {
    if (!(intensity >= 0.0)) throw ConfigError("udl intensity must be >= 0");
}

ComponentMassList default_actuator_masses() {
    return {
        {"end_block", 0.44},
        {"mounting_plate", 0.16},
        {"stepper_motor", 0.36},
        {"shuttle", 0.21},
        {"miscellaneous", 0.83},
    };
}

double section_area(const TubeSection& s) {
    s.validate();
    const double d_o = s.outer_diameter;
    const double d_i = s.inner_diameter;
    return std::numbers::pi / 4.0 * (d_o * d_o - d_i * d_i);
}

double second_moment(const TubeSection& s) {
    s.validate();
    const double d_o2 = s.outer_diameter * s.outer_diameter;
    const double d_i2 = s.inner_diameter * s.inner_diameter;
    return std::numbers::pi / 64.0 * (d_o2 * d_o2 - d_i2 * d_i2);
}

double total_mass(const ComponentMassList& components) {
    return std::accumulate(components.begin(), components.end(), 0.0,
                           [](double acc, const ComponentMass& c) { return acc + c.mass; });
}

UdlLoad udl_from_masses(const ComponentMassList& components, const BeamSpec& beam,
                        int rods_sharing, UdlMode mode) {
    if (components.empty()) throw ConfigError("component mass list is empty");
    if (rods_sharing < 1) throw ConfigError("rods_sharing must be >= 1");
    for (const auto& c : components) {
        if (!(c.mass > 0.0)) throw ConfigError("component '" + c.name + "' mass must be positive");
    }
    beam.validate();

    const double weight = total_mass(components) * kGravity;
    UdlLoad load;
    load.mode = mode;
    load.intensity = mode == UdlMode::paper_compat
                         ? weight
                         : weight / (static_cast<double>(rods_sharing) * beam.length);
    return load;
}

namespace {
void require_span(double l) {
    if (!(l > 0.0)) throw ConfigError("span length must be positive");
}
}  // namespace

double reactions(double w, double l) {
    require_span(l);
    return w * l / 2.0;
}

double end_moment(double w, double l) {
    require_span(l);
    return w * l * l / 12.0;
}

double centre_moment(double w, double l) {
    require_span(l);
    return w * l * l / 24.0;
}

double max_deflection(double w, double l, double youngs_modulus, double second_moment) {
    require_span(l);
    if (!(youngs_modulus > 0.0)) throw ConfigError("youngs_modulus must be positive");
    if (!(second_moment > 0.0)) throw ConfigError("second moment of area must be positive");
    const double l2 = l * l;
    return w * l2 * l2 / (384.0 * youngs_modulus * second_moment);
}

double bending_stress(double moment, double fibre_distance, double second_moment) {
    if (!(fibre_distance > 0.0)) throw ConfigError("fibre distance must be positive");
    if (!(second_moment > 0.0)) throw ConfigError("second moment of area must be positive");
    return moment * fibre_distance / second_moment;
}

bool safety_check(double stress, const MaterialSpec& material) {
    if (!material.yield_strength) throw ConfigError("material has no yield_strength for safety check");
    return std::abs(stress) < *material.yield_strength;
}

StaticsReport analyze(const BeamSpec& beam, const UdlLoad& load,
                      std::optional<double> second_moment_override) {
    beam.validate();
    load.validate();
    const double w = load.intensity;
    const double l = beam.length;

    StaticsReport r;
    r.intensity = w;
    r.reaction = reactions(w, l);
    r.end_moment = end_moment(w, l);
    r.centre_moment = centre_moment(w, l);
    r.second_moment = second_moment_override.value_or(second_moment(beam.section));
    r.deflection = max_deflection(w, l, beam.material.youngs_modulus, r.second_moment);
    r.max_stress = bending_stress(r.end_moment, beam.section.outer_radius(), r.second_moment);
    if (beam.material.yield_strength) r.safe = safety_check(r.max_stress, beam.material);
    return r;
}

}  // namespace rigsim::statics
