#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rigsim::statics {

inline constexpr double kGravity = 9.81;  // m/s^2

// Second moment of area substituted in the published deflection figure.
// It does not follow from the 12/10 mm tube section; kept for reproducing
// that number only.
inline constexpr double PAPER_I = 2.15e-3;  // m^4

struct MaterialSpec {
    double density = 7700.0;           // kg/m^3
    double youngs_modulus = 2.0e11;    // Pa
    std::optional<double> yield_strength;  // Pa

    void validate() const;
};

struct TubeSection {
    double outer_diameter = 0.012;  // m
    double inner_diameter = 0.010;  // m

    void validate() const;
    double outer_radius() const { return outer_diameter / 2.0; }
};

struct BeamSpec {
    double length = 0.662;  // m
    TubeSection section;
    MaterialSpec material;

    void validate() const;
};

enum class UdlMode {
    paper_compat,  // total weight used directly as the intensity
    physical,      // total weight spread over span and sharing rods
};

struct UdlLoad {
    double intensity = 0.0;  // N/m
    UdlMode mode = UdlMode::physical;

    void validate() const;
};

struct ComponentMass {
    std::string name;
    double mass = 0.0;  // kg
};

using ComponentMassList = std::vector<ComponentMass>;

/// Masses of the parts carried by one linear actuator (2 kg total).
ComponentMassList default_actuator_masses();

double section_area(const TubeSection& s);
double second_moment(const TubeSection& s);

double total_mass(const ComponentMassList& components);

/// Converts the carried component masses into a distributed load on one rod.
/// In physical mode the total weight is divided by `rods_sharing * length`;
/// in paper_compat mode the total weight (N) is used as-is.
UdlLoad udl_from_masses(const ComponentMassList& components, const BeamSpec& beam,
                        int rods_sharing, UdlMode mode);

// Fixed-fixed beam under uniform load of intensity w over span l.
double reactions(double w, double l);
double end_moment(double w, double l);
double centre_moment(double w, double l);
double max_deflection(double w, double l, double youngs_modulus, double second_moment);

double bending_stress(double moment, double fibre_distance, double second_moment);

/// True iff stress is strictly below the material's yield strength.
/// Throws ConfigError when the material carries no yield strength.
bool safety_check(double stress, const MaterialSpec& material);

struct StaticsReport {
    double intensity = 0.0;
    double reaction = 0.0;
    double end_moment = 0.0;
    double centre_moment = 0.0;
    double second_moment = 0.0;
    double deflection = 0.0;
    double max_stress = 0.0;
    std::optional<bool> safe;
};

/// Full closed-form evaluation for a beam and load; `I` defaults to the
/// section-derived second moment.
StaticsReport analyze(const BeamSpec& beam, const UdlLoad& load,
                      std::optional<double> second_moment_override = std::nullopt);

}  // namespace rigsim::statics
