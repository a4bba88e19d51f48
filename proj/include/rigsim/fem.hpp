#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "rigsim/statics.hpp"

// Planar Euler-Bernoulli beam finite elements (Hermite cubic, two DOFs per
// node: transverse deflection and rotation). Deflection is positive in the
// direction of the applied load.
namespace rigsim::fem {

struct Mesh1D {
    std::vector<double> node_positions;  // m, strictly increasing, starts at 0

    static Mesh1D uniform(double length, int n_elements);

    int n_elements() const { return static_cast<int>(node_positions.size()) - 1; }
    int n_nodes() const { return static_cast<int>(node_positions.size()); }
    double element_length(int e) const { return node_positions[e + 1] - node_positions[e]; }
    double length() const { return node_positions.back(); }

    /// Throws ConfigError unless the mesh has >= 2 elements, strictly increasing
    /// nodes, and spans exactly [0, beam_length].
    void validate(double beam_length) const;
};

struct ElementMatrices {
    Eigen::Matrix4d stiffness;
    Eigen::Matrix4d mass;  // consistent
};

/// Element DOF order: (w1, theta1, w2, theta2).
ElementMatrices element_matrices(double EI, double rhoA, double element_length);

struct DofSystem {
    Mesh1D mesh;
    statics::BeamSpec beam;
    Eigen::MatrixXd stiffness;
    Eigen::MatrixXd mass;
    std::vector<int> constrained_dofs;  // sorted, unique

    int n_dofs() const { return static_cast<int>(stiffness.rows()); }
    static int deflection_dof(int node) { return 2 * node; }
    static int rotation_dof(int node) { return 2 * node + 1; }

    std::vector<int> free_dofs() const;
    Eigen::MatrixXd reduce(const Eigen::MatrixXd& full) const;
    Eigen::VectorXd reduce(const Eigen::VectorXd& full) const;
    template <typename Scalar>
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> expand(
        const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& reduced) const;
};

DofSystem assemble(const Mesh1D& mesh, const statics::BeamSpec& beam);

/// Clamps deflection and rotation at both end nodes.
DofSystem apply_fixed_fixed(DofSystem sys);

// Full-size consistent nodal load vectors.
Eigen::VectorXd udl_load_vector(const DofSystem& sys, double intensity);
Eigen::VectorXd point_load_vector(const DofSystem& sys, double position, double force);

struct StaticSolution {
    Eigen::VectorXd displacement;  // full size, zeros at constrained DOFs

    double deflection_at(const Mesh1D& mesh, double x) const;
};

StaticSolution solve_static(const DofSystem& sys, const Eigen::VectorXd& force);
StaticSolution solve_static(const DofSystem& sys, const statics::UdlLoad& udl);

struct ModalResult {
    std::vector<double> frequencies;    // Hz, ascending
    Eigen::MatrixXd mode_shapes;        // full size, one mass-normalized column per mode
    std::vector<int> bending_plane;     // 0 or 1; expanded pairs occupy both planes
    std::vector<double> residuals;      // |K phi - w^2 M phi| / |K phi|
    bool degeneracy_expanded = false;
};

inline constexpr double kModalResidualBound = 1e-9;

/// Generalized eigen-solution K phi = w^2 M phi of the constrained system.
/// With `expand_degenerate`, each planar mode is emitted twice (one per
/// bending plane of the axisymmetric section) and `n_modes` counts emitted rows.
ModalResult solve_modal(const DofSystem& sys, int n_modes, bool expand_degenerate);

struct RayleighDamping {
    double alpha = 0.0;  // 1/s, mass-proportional
    double beta = 0.0;   // s, stiffness-proportional

    /// Calibrates alpha and beta so the damping ratio equals `zeta` at both
    /// anchor frequencies.
    static RayleighDamping from_modal_ratio(double zeta, double f1_hz, double f2_hz);

    double damping_ratio(double f_hz) const;
    bool undamped() const { return alpha == 0.0 && beta == 0.0; }
    void validate() const;
};

struct HarmonicResult {
    std::vector<double> frequencies;        // Hz
    std::vector<double> peak_displacement;  // m
    std::vector<double> peak_stress;        // Pa
    std::vector<double> peak_strain;
};

/// Steady-state amplitude of (K - w^2 M + i w C) x = F over `f_grid`.
/// `force` is the full-size load amplitude vector.
HarmonicResult harmonic_response(const DofSystem& sys, const RayleighDamping& damping,
                                 const Eigen::VectorXd& force, const std::vector<double>& f_grid);

struct StressStrain {
    double max_stress = 0.0;  // Pa
    double max_strain = 0.0;
    double location = 0.0;    // m along the beam
};

/// Peak bending stress from element-end curvatures (Hermite second
/// derivatives), fibre distance = outer radius.
StressStrain stress_strain_recovery(const Eigen::VectorXd& u, const statics::BeamSpec& beam,
                                    const Mesh1D& mesh);
StressStrain stress_strain_recovery(const Eigen::VectorXcd& u, const statics::BeamSpec& beam,
                                    const Mesh1D& mesh);

/// Curvature d2w/dx2 at position x, evaluated inside the element containing x.
double curvature_at(const Eigen::VectorXd& u, const Mesh1D& mesh, double x);

}  // namespace rigsim::fem
