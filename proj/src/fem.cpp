#include "rigsim/fem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "rigsim/errors.hpp"

namespace rigsim::fem {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Hermite cubic shape functions on an element of length L, local s in [0, 1].
Eigen::Vector4d shape_values(double s, double L) {
    const double s2 = s * s;
    const double s3 = s2 * s;
    return {1.0 - 3.0 * s2 + 2.0 * s3, L * (s - 2.0 * s2 + s3), 3.0 * s2 - 2.0 * s3,
            L * (s3 - s2)};
}

Eigen::Vector4d shape_second_derivatives(double s, double L) {
    return {(-6.0 + 12.0 * s) / (L * L), (-4.0 + 6.0 * s) / L, (6.0 - 12.0 * s) / (L * L),
            (-2.0 + 6.0 * s) / L};
}

int element_containing(const Mesh1D& mesh, double x) {
    const auto& n = mesh.node_positions;
    if (x < n.front() || x > n.back()) throw ConfigError("position lies outside the mesh");
    auto it = std::upper_bound(n.begin(), n.end(), x);
    int e = static_cast<int>(it - n.begin()) - 1;
    return std::clamp(e, 0, mesh.n_elements() - 1);
}

template <typename Scalar>
Eigen::Matrix<Scalar, 4, 1> element_dofs(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& u,
                                         int e) {
    return u.template segment<4>(2 * e);
}

template <typename Scalar>
StressStrain recover(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& u,
                     const statics::BeamSpec& beam, const Mesh1D& mesh) {
    if (u.size() != 2 * mesh.n_nodes())
        throw ConfigError("displacement vector does not match mesh DOF count");
    const double c = beam.section.outer_radius();
    StressStrain out;
    for (int e = 0; e < mesh.n_elements(); ++e) {
        const double L = mesh.element_length(e);
        const auto ue = element_dofs<Scalar>(u, e);
        for (double s : {0.0, 1.0}) {
            const Scalar kappa = shape_second_derivatives(s, L).cast<Scalar>().dot(ue);
            const double strain = std::abs(kappa) * c;
            if (strain > out.max_strain) {
                out.max_strain = strain;
                out.location = mesh.node_positions[e] + s * L;
            }
        }
    }
    out.max_stress = beam.material.youngs_modulus * out.max_strain;
    return out;
}

void require_constrained(const DofSystem& sys) {
    if (sys.constrained_dofs.empty())
        throw NumericalError("system is unconstrained; stiffness matrix is singular");
}

}  // namespace

Mesh1D Mesh1D::uniform(double length, int n_elements) {
    if (n_elements < 2) throw ConfigError("mesh needs at least 2 elements");
    if (!(length > 0.0)) throw ConfigError("mesh length must be positive");
    Mesh1D mesh;
    mesh.node_positions.resize(n_elements + 1);
    for (int i = 0; i <= n_elements; ++i)
        mesh.node_positions[i] = length * static_cast<double>(i) / n_elements;
    mesh.node_positions.back() = length;
    return mesh;
}

void Mesh1D::validate(double beam_length) const {
    if (n_elements() < 2) throw ConfigError("mesh needs at least 2 elements");
    if (node_positions.front() != 0.0) throw ConfigError("mesh must start at 0");
    for (int i = 0; i < n_elements(); ++i) {
        if (!(node_positions[i + 1] > node_positions[i]))
            throw ConfigError("mesh node positions must be strictly increasing");
    }
    if (std::abs(node_positions.back() - beam_length) > 1e-12 * beam_length)
        throw ConfigError("mesh length does not match beam length");
}

ElementMatrices element_matrices(double EI, double rhoA, double L) {
    if (!(L > 0.0)) throw ConfigError("element length must be positive");
    if (!(EI > 0.0) || !(rhoA > 0.0)) throw ConfigError("EI and rhoA must be positive");
    const double L2 = L * L;
    ElementMatrices m;
    // clang-format off
    m.stiffness <<  12.0,     6.0 * L, -12.0,     6.0 * L,
                    6.0 * L,  4.0 * L2, -6.0 * L, 2.0 * L2,
                   -12.0,    -6.0 * L,  12.0,    -6.0 * L,
                    6.0 * L,  2.0 * L2, -6.0 * L, 4.0 * L2;
    m.mass <<  156.0,      22.0 * L,  54.0,     -13.0 * L,
                22.0 * L,   4.0 * L2, 13.0 * L,  -3.0 * L2,
                54.0,      13.0 * L, 156.0,     -22.0 * L,
               -13.0 * L,  -3.0 * L2, -22.0 * L,  4.0 * L2;
    // clang-format on
    m.stiffness *= EI / (L2 * L);
    m.mass *= rhoA * L / 420.0;
    return m;
}

std::vector<int> DofSystem::free_dofs() const {
    std::vector<int> free;
    free.reserve(n_dofs());
    auto c = constrained_dofs.begin();
    for (int i = 0; i < n_dofs(); ++i) {
        if (c != constrained_dofs.end() && *c == i) {
            ++c;
            continue;
        }
        free.push_back(i);
    }
    return free;
}

Eigen::MatrixXd DofSystem::reduce(const Eigen::MatrixXd& full) const {
    const auto free = free_dofs();
    const auto n = static_cast<Eigen::Index>(free.size());
    Eigen::MatrixXd r(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) r(i, j) = full(free[i], free[j]);
    return r;
}

Eigen::VectorXd DofSystem::reduce(const Eigen::VectorXd& full) const {
    const auto free = free_dofs();
    Eigen::VectorXd r(static_cast<Eigen::Index>(free.size()));
    for (std::size_t i = 0; i < free.size(); ++i) r(i) = full(free[i]);
    return r;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> DofSystem::expand(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& reduced) const {
    const auto free = free_dofs();
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> full =
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(n_dofs());
    for (std::size_t i = 0; i < free.size(); ++i) full(free[i]) = reduced(i);
    return full;
}

template Eigen::VectorXd DofSystem::expand<double>(const Eigen::VectorXd&) const;
template Eigen::VectorXcd DofSystem::expand<std::complex<double>>(const Eigen::VectorXcd&) const;

DofSystem assemble(const Mesh1D& mesh, const statics::BeamSpec& beam) {
    beam.validate();
    mesh.validate(beam.length);

    const double EI = beam.material.youngs_modulus * statics::second_moment(beam.section);
    const double rhoA = beam.material.density * statics::section_area(beam.section);
    const int n = 2 * mesh.n_nodes();

    DofSystem sys;
    sys.mesh = mesh;
    sys.beam = beam;
    sys.stiffness = Eigen::MatrixXd::Zero(n, n);
    sys.mass = Eigen::MatrixXd::Zero(n, n);
    for (int e = 0; e < mesh.n_elements(); ++e) {
        const auto em = element_matrices(EI, rhoA, mesh.element_length(e));
        sys.stiffness.block<4, 4>(2 * e, 2 * e) += em.stiffness;
        sys.mass.block<4, 4>(2 * e, 2 * e) += em.mass;
    }
    return sys;
}

DofSystem apply_fixed_fixed(DofSystem sys) {
    const int last = sys.mesh.n_nodes() - 1;
    std::vector<int> c = sys.constrained_dofs;
    for (int d : {DofSystem::deflection_dof(0), DofSystem::rotation_dof(0),
                  DofSystem::deflection_dof(last), DofSystem::rotation_dof(last)})
        c.push_back(d);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    sys.constrained_dofs = std::move(c);
    return sys;
}

Eigen::VectorXd udl_load_vector(const DofSystem& sys, double intensity) {
    Eigen::VectorXd f = Eigen::VectorXd::Zero(sys.n_dofs());
    for (int e = 0; e < sys.mesh.n_elements(); ++e) {
        const double L = sys.mesh.element_length(e);
        Eigen::Vector4d fe(L / 2.0, L * L / 12.0, L / 2.0, -L * L / 12.0);
        f.segment<4>(2 * e) += intensity * fe;
    }
    return f;
}

Eigen::VectorXd point_load_vector(const DofSystem& sys, double position, double force) {
    const int e = element_containing(sys.mesh, position);
    const double L = sys.mesh.element_length(e);
    const double s = (position - sys.mesh.node_positions[e]) / L;
    Eigen::VectorXd f = Eigen::VectorXd::Zero(sys.n_dofs());
    f.segment<4>(2 * e) = force * shape_values(s, L);
    return f;
}

double StaticSolution::deflection_at(const Mesh1D& mesh, double x) const {
    const int e = element_containing(mesh, x);
    const double L = mesh.element_length(e);
    const double s = (x - mesh.node_positions[e]) / L;
    return shape_values(s, L).dot(displacement.segment<4>(2 * e));
}

StaticSolution solve_static(const DofSystem& sys, const Eigen::VectorXd& force) {
    require_constrained(sys);
    if (force.size() != sys.n_dofs()) throw ConfigError("load vector size mismatch");
    const Eigen::MatrixXd K = sys.reduce(sys.stiffness);
    Eigen::LLT<Eigen::MatrixXd> llt(K);
    if (llt.info() != Eigen::Success)
        throw NumericalError("reduced stiffness matrix is not positive definite");
    const Eigen::VectorXd u = llt.solve(sys.reduce(force));
    return {sys.expand<double>(u)};
}

StaticSolution solve_static(const DofSystem& sys, const statics::UdlLoad& udl) {
    udl.validate();
    return solve_static(sys, udl_load_vector(sys, udl.intensity));
}

ModalResult solve_modal(const DofSystem& sys, int n_modes, bool expand_degenerate) {
    require_constrained(sys);
    if (n_modes < 1) throw NumericalError("n_modes must be >= 1");
    const Eigen::MatrixXd K = sys.reduce(sys.stiffness);
    const Eigen::MatrixXd M = sys.reduce(sys.mass);
    const int n_reduced = static_cast<int>(K.rows());
    const int n_planar = expand_degenerate ? (n_modes + 1) / 2 : n_modes;
    if (n_planar > n_reduced) {
        std::ostringstream msg;
        msg << "requested " << n_modes << " modes but the constrained system has only "
            << n_reduced << " DOFs";
        throw NumericalError(msg.str());
    }

    Eigen::LLT<Eigen::MatrixXd> mass_llt(M);
    if (mass_llt.info() != Eigen::Success)
        throw NumericalError("reduced mass matrix is not positive definite");

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(K, M);
    if (solver.info() != Eigen::Success)
        throw NumericalError("generalized eigen-solver did not converge");

    // One step of shifted inverse iteration per mode tightens the residual of
    // the low modes, which the dense reduction resolves only to eps*|K|/w^2.
    std::vector<double> eigenvalues(n_planar);
    Eigen::MatrixXd shapes(n_reduced, n_planar);
    for (int i = 0; i < n_planar; ++i) {
        Eigen::VectorXd phi = solver.eigenvectors().col(i);
        const double lambda = solver.eigenvalues()(i);
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(K - lambda * (1.0 - 1e-10) * M);
        Eigen::VectorXd refined = lu.solve(M * phi);
        if (refined.allFinite()) phi = refined;
        for (int j = 0; j < i; ++j) phi -= shapes.col(j).dot(M * phi) * shapes.col(j);
        phi /= std::sqrt(phi.dot(M * phi));
        Eigen::Index imax = 0;
        phi.cwiseAbs().maxCoeff(&imax);
        if (phi(imax) < 0.0) phi = -phi;
        shapes.col(i) = phi;
        eigenvalues[i] = phi.dot(K * phi);
        if (!(eigenvalues[i] > 0.0))
            throw NumericalError("non-positive eigenvalue in constrained system");
    }

    ModalResult result;
    result.degeneracy_expanded = expand_degenerate;
    result.mode_shapes.resize(sys.n_dofs(), n_modes);
    int row = 0;
    for (int i = 0; i < n_planar && row < n_modes; ++i) {
        const Eigen::VectorXd phi = shapes.col(i);
        const Eigen::VectorXd k_phi = K * phi;
        const double residual = (k_phi - eigenvalues[i] * (M * phi)).norm() / k_phi.norm();
        if (!(residual < kModalResidualBound)) {
            std::ostringstream msg;
            msg << "mode " << i + 1 << " eigen-residual " << residual << " exceeds bound "
                << kModalResidualBound;
            throw NumericalError(msg.str());
        }
        const double f = std::sqrt(eigenvalues[i]) / kTwoPi;
        const Eigen::VectorXd full = sys.expand<double>(phi);
        const int copies = expand_degenerate ? 2 : 1;
        for (int plane = 0; plane < copies && row < n_modes; ++plane, ++row) {
            result.frequencies.push_back(f);
            result.mode_shapes.col(row) = full;
            result.bending_plane.push_back(plane);
            result.residuals.push_back(residual);
        }
    }
    return result;
}

RayleighDamping RayleighDamping::from_modal_ratio(double zeta, double f1_hz, double f2_hz) {
    if (!(zeta > 0.0 && zeta < 1.0)) throw ConfigError("damping ratio must lie in (0, 1)");
    if (!(f1_hz > 0.0) || !(f2_hz > 0.0) || f1_hz == f2_hz)
        throw ConfigError("damping anchor frequencies must be positive and distinct");
    const double w1 = kTwoPi * f1_hz;
    const double w2 = kTwoPi * f2_hz;
    return {2.0 * zeta * w1 * w2 / (w1 + w2), 2.0 * zeta / (w1 + w2)};
}

double RayleighDamping::damping_ratio(double f_hz) const {
    const double w = kTwoPi * f_hz;
    return alpha / (2.0 * w) + beta * w / 2.0;
}

void RayleighDamping::validate() const {
    if (!(alpha >= 0.0) || !(beta >= 0.0))
        throw ConfigError("Rayleigh coefficients must be non-negative");
}

HarmonicResult harmonic_response(const DofSystem& sys, const RayleighDamping& damping,
                                 const Eigen::VectorXd& force, const std::vector<double>& f_grid) {
    require_constrained(sys);
    damping.validate();
    if (force.size() != sys.n_dofs()) throw ConfigError("load vector size mismatch");
    for (std::size_t i = 0; i < f_grid.size(); ++i) {
        if (!(f_grid[i] > 0.0)) throw ConfigError("frequency grid must be positive");
        if (i > 0 && !(f_grid[i] > f_grid[i - 1]))
            throw ConfigError("frequency grid must be strictly ascending");
    }

    const Eigen::MatrixXd K = sys.reduce(sys.stiffness);
    const Eigen::MatrixXd M = sys.reduce(sys.mass);
    const Eigen::MatrixXd C = damping.alpha * M + damping.beta * K;
    const Eigen::VectorXcd F = sys.reduce(force).cast<std::complex<double>>();

    Eigen::VectorXd undamped_eigenvalues;
    if (damping.undamped()) {
        Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(K, M, Eigen::EigenvaluesOnly);
        undamped_eigenvalues = es.eigenvalues();
    }

    HarmonicResult out;
    out.frequencies = f_grid;
    out.peak_displacement.resize(f_grid.size());
    out.peak_stress.resize(f_grid.size());
    out.peak_strain.resize(f_grid.size());

    for (std::size_t k = 0; k < f_grid.size(); ++k) {
        const double w = kTwoPi * f_grid[k];
        for (Eigen::Index m = 0; m < undamped_eigenvalues.size(); ++m) {
            if (std::abs(w * w - undamped_eigenvalues(m)) <= 1e-10 * undamped_eigenvalues(m)) {
                std::ostringstream msg;
                msg << "undamped excitation at resonance " << f_grid[k]
                    << " Hz: response is unbounded";
                throw NumericalError(msg.str());
            }
        }
        Eigen::MatrixXcd D = (K - w * w * M).cast<std::complex<double>>();
        D += std::complex<double>(0.0, w) * C.cast<std::complex<double>>();
        const Eigen::VectorXcd x = sys.expand<std::complex<double>>(D.partialPivLu().solve(F));
        if (!x.allFinite()) throw NumericalError("harmonic solve produced non-finite response");

        double peak = 0.0;
        for (int node = 0; node < sys.mesh.n_nodes(); ++node)
            peak = std::max(peak, std::abs(x(DofSystem::deflection_dof(node))));
        const auto ss = stress_strain_recovery(x, sys.beam, sys.mesh);
        out.peak_displacement[k] = peak;
        out.peak_stress[k] = ss.max_stress;
        out.peak_strain[k] = ss.max_strain;
    }
    return out;
}

StressStrain stress_strain_recovery(const Eigen::VectorXd& u, const statics::BeamSpec& beam,
                                    const Mesh1D& mesh) {
    return recover<double>(u, beam, mesh);
}

StressStrain stress_strain_recovery(const Eigen::VectorXcd& u, const statics::BeamSpec& beam,
                                    const Mesh1D& mesh) {
    return recover<std::complex<double>>(u, beam, mesh);
}

double curvature_at(const Eigen::VectorXd& u, const Mesh1D& mesh, double x) {
    const int e = element_containing(mesh, x);
    const double L = mesh.element_length(e);
    const double s = (x - mesh.node_positions[e]) / L;
    return shape_second_derivatives(s, L).dot(u.segment<4>(2 * e));
}

}  // namespace rigsim::fem
