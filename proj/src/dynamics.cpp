#include "bridge/dynamics.hpp"
#include "bridge/errors.hpp"

#include <cmath>

namespace bridge {

void BridgeParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0))
            throw ParameterError(std::string(name) + " must be positive");
    };
    positive(M, "M");
    positive(m, "m");
    positive(ell, "ell");
    positive(EI, "EI");
    positive(GK, "GK");
    positive(AE, "AE");
    positive(H0, "H0");
    positive(g, "g");
    positive(kappa0, "kappa0");
    if (n_modes < 1) throw ParameterError("n_modes must be >= 1");
}

ModalState ModalState::zero(int n_modes) {
    ModalState s;
    s.p1 = Eigen::VectorXd::Zero(n_modes);
    s.p2 = Eigen::VectorXd::Zero(n_modes);
    s.y = Eigen::VectorXd::Zero(n_modes);
    s.theta = Eigen::VectorXd::Zero(n_modes);
    s.v_p1 = s.p1;
    s.v_p2 = s.p1;
    s.v_y = s.p1;
    s.v_theta = s.p1;
    return s;
}

bool ModalState::finite() const {
    return p1.allFinite() && p2.allFinite() && y.allFinite() &&
           theta.allFinite() && v_p1.allFinite() && v_p2.allFinite() &&
           v_y.allFinite() && v_theta.allFinite();
}

BridgeSystem build_bridge_system(const BridgeParams& params, const Grid& grid,
                                 int fd_points, bool debug_xi_one, double s0,
                                 int ivp_steps) {
    params.validate();

    CableParams cable;
    cable.H0 = params.H0;
    cable.m = params.m;
    cable.g = params.g;
    cable.L = M_PI;
    cable.s0 = s0;
    cable.load_mass =
        params.mode_flag == ModeFlag::SingleBeam ? params.M : params.M / 2.0;

    BridgeSystem sys;
    sys.params = params;
    sys.profile = debug_xi_one
                      ? make_debug_xi_one_profile(cable, grid, ivp_steps)
                      : solve_cable(cable, grid, 1e-9, ivp_steps);
    sys.basis = solve_weighted_eigenbasis(sys.profile, params.n_modes,
                                          fd_points, grid);
    const double row_weight = cable.load_mass * params.g;
    sys.law = build_hanger_law(sys.profile, params.kappa0, row_weight);
    sys.nonlocal = build_nonlocal_operator(sys.profile, sys.basis, params.AE);
    return sys;
}

namespace {

void check_state(const ModalState& state, const BridgeSystem& sys) {
    if (state.n_modes() != sys.params.n_modes)
        throw ParameterError("state dimension does not match n_modes");
}

// Modal stiffness exponents: k^4 for bending, k^2 for torsion (debug flag
// restores the k^2 / k^1 variant).
double bending_stiffness(const BridgeParams& p, int k) {
    const double kk = static_cast<double>(k);
    return p.EI * (p.printed_exponents ? kk * kk : kk * kk * kk * kk);
}

double torsion_stiffness(const BridgeParams& p, int k) {
    const double kk = static_cast<double>(k);
    return p.GK * (p.printed_exponents ? kk : kk * kk);
}

// (f, u_k)_2 and (f, e_k)_2 against all modes at once.
Eigen::VectorXd inner_u(const BridgeSystem& sys, const Eigen::VectorXd& f) {
    return sys.basis.u_samples *
           (sys.basis.grid.weights.array() * f.array()).matrix();
}

Eigen::VectorXd inner_e(const BridgeSystem& sys, const Eigen::VectorXd& f) {
    return sys.basis.e_samples *
           (sys.basis.grid.weights.array() * f.array()).matrix();
}

} // namespace

ModalState project_initial_data(
    const Eigen::VectorXd& y0, const Eigen::VectorXd& theta0,
    const Eigen::VectorXd& p10, const Eigen::VectorXd& p20,
    const Eigen::VectorXd& y1, const Eigen::VectorXd& theta1,
    const Eigen::VectorXd& p11, const Eigen::VectorXd& p21,
    const SpectralBasis& basis) {
    ModalState s;
    s.t = 0.0;
    s.y = project(y0, basis, Inner::PlainL2);
    s.theta = project(theta0, basis, Inner::PlainL2);
    s.p1 = project(p10, basis, Inner::WeightedL2Xi);
    s.p2 = project(p20, basis, Inner::WeightedL2Xi);
    s.v_y = project(y1, basis, Inner::PlainL2);
    s.v_theta = project(theta1, basis, Inner::PlainL2);
    s.v_p1 = project(p11, basis, Inner::WeightedL2Xi);
    s.v_p2 = project(p21, basis, Inner::WeightedL2Xi);
    return s;
}

Accelerations modal_rhs(const ModalState& state, const BridgeSystem& sys) {
    check_state(state, sys);
    const BridgeParams& p = sys.params;
    const int n = p.n_modes;

    const Eigen::VectorXd p1g = reconstruct(state.p1, sys.basis, Basis::Weighted);
    const Eigen::VectorXd p2g = reconstruct(state.p2, sys.basis, Basis::Weighted);
    const Eigen::VectorXd yg = reconstruct(state.y, sys.basis, Basis::Sine);
    const Eigen::VectorXd thg = reconstruct(state.theta, sys.basis, Basis::Sine);

    const Eigen::VectorXd phi1 = phi_field(sys.law, yg + p.ell * thg - p1g);
    const Eigen::VectorXd phi2 = phi_field(sys.law, yg - p.ell * thg - p2g);

    Accelerations acc;
    acc.p1.resize(n);
    acc.p2.resize(n);
    acc.y.resize(n);
    acc.theta.resize(n);

    const Eigen::VectorXd iphi1_u = inner_u(sys, phi1);
    const Eigen::VectorXd iphi2_u = inner_u(sys, phi2);
    const Eigen::VectorXd iphi_sum_e = inner_e(sys, phi1 + phi2);
    const Eigen::VectorXd iphi_diff_e = inner_e(sys, phi2 - phi1);

    const double gamma1 = sys.nonlocal.a_vec.dot(state.p1);
    const double gamma2 = sys.nonlocal.a_vec.dot(state.p2);
    const double torsion_mass = p.M * p.ell * p.ell / 3.0;

    for (int k = 0; k < n; ++k) {
        acc.p1[k] = (-sys.basis.lambda[k] * state.p1[k] +
                     sys.nonlocal.prefactor * gamma1 * sys.nonlocal.b_vec[k] +
                     iphi1_u[k]) /
                    p.m;
        acc.p2[k] = (-sys.basis.lambda[k] * state.p2[k] +
                     sys.nonlocal.prefactor * gamma2 * sys.nonlocal.b_vec[k] +
                     iphi2_u[k]) /
                    p.m;
        acc.y[k] =
            (-bending_stiffness(p, k + 1) * state.y[k] - iphi_sum_e[k]) / p.M;
        acc.theta[k] = (-torsion_stiffness(p, k + 1) * state.theta[k] +
                        p.ell * iphi_diff_e[k]) /
                       torsion_mass;
    }
    return acc;
}

Accelerations modal_rhs_forced_linear(const ModalState& state,
                                      const BridgeSystem& sys,
                                      const Eigen::VectorXd& g1,
                                      const Eigen::VectorXd& g2,
                                      const Eigen::VectorXd& g3,
                                      const Eigen::VectorXd& g4) {
    if (sys.params.mode_flag != ModeFlag::LinearDecoupled)
        throw ParameterError("forced linear rhs requires linear_decoupled mode");
    check_state(state, sys);
    const BridgeParams& p = sys.params;
    const int n = p.n_modes;

    const Eigen::VectorXd i1 = inner_u(sys, g1);
    const Eigen::VectorXd i2 = inner_u(sys, g2);
    const Eigen::VectorXd i3 = inner_e(sys, g3);
    const Eigen::VectorXd i4 = inner_e(sys, g4);
    const double torsion_mass = p.M * p.ell * p.ell / 3.0;

    Accelerations acc;
    acc.p1.resize(n);
    acc.p2.resize(n);
    acc.y.resize(n);
    acc.theta.resize(n);
    for (int k = 0; k < n; ++k) {
        acc.p1[k] = (-sys.basis.lambda[k] * state.p1[k] + i1[k]) / p.m;
        acc.p2[k] = (-sys.basis.lambda[k] * state.p2[k] + i2[k]) / p.m;
        acc.y[k] =
            (-bending_stiffness(p, k + 1) * state.y[k] + i3[k]) / p.M;
        acc.theta[k] = (-torsion_stiffness(p, k + 1) * state.theta[k] +
                        i4[k]) /
                       torsion_mass;
    }
    return acc;
}

Accelerations single_beam_rhs(const ModalState& state,
                              const BridgeSystem& sys) {
    if (sys.params.mode_flag != ModeFlag::SingleBeam)
        throw ParameterError("single_beam_rhs requires single_beam mode");
    check_state(state, sys);
    const BridgeParams& p = sys.params;
    const int n = p.n_modes;

    const Eigen::VectorXd pg = reconstruct(state.p1, sys.basis, Basis::Weighted);
    const Eigen::VectorXd yg = reconstruct(state.y, sys.basis, Basis::Sine);
    const Eigen::VectorXd phi = phi_field(sys.law, yg - pg);

    const Eigen::VectorXd iphi_u = inner_u(sys, phi);
    const Eigen::VectorXd iphi_e = inner_e(sys, phi);
    const double gamma = sys.nonlocal.a_vec.dot(state.p1);

    Accelerations acc;
    acc.p1.resize(n);
    acc.y.resize(n);
    acc.p2 = Eigen::VectorXd::Zero(n);
    acc.theta = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < n; ++k) {
        acc.p1[k] = (-sys.basis.lambda[k] * state.p1[k] +
                     sys.nonlocal.prefactor * gamma * sys.nonlocal.b_vec[k] +
                     iphi_u[k]) /
                    p.m;
        acc.y[k] =
            (-bending_stiffness(p, k + 1) * state.y[k] - iphi_e[k]) / p.M;
    }
    return acc;
}

EnergyBreakdown energy(const ModalState& state, const BridgeSystem& sys) {
    check_state(state, sys);
    const BridgeParams& p = sys.params;
    const Grid& grid = sys.basis.grid;
    const bool single = p.mode_flag == ModeFlag::SingleBeam;

    const Eigen::VectorXd p1g = reconstruct(state.p1, sys.basis, Basis::Weighted);
    const Eigen::VectorXd dp1g = reconstruct(state.p1, sys.basis, Basis::Weighted, 1);
    const Eigen::VectorXd vp1g = reconstruct(state.v_p1, sys.basis, Basis::Weighted);
    const Eigen::VectorXd yg = reconstruct(state.y, sys.basis, Basis::Sine);
    const Eigen::VectorXd ddyg = reconstruct(state.y, sys.basis, Basis::Sine, 2);
    const Eigen::VectorXd vyg = reconstruct(state.v_y, sys.basis, Basis::Sine);
    const Eigen::VectorXd thg = reconstruct(state.theta, sys.basis, Basis::Sine);
    const Eigen::VectorXd dthg = reconstruct(state.theta, sys.basis, Basis::Sine, 1);
    const Eigen::VectorXd vthg = reconstruct(state.v_theta, sys.basis, Basis::Sine);

    Eigen::VectorXd p2g, dp2g, vp2g;
    if (!single) {
        p2g = reconstruct(state.p2, sys.basis, Basis::Weighted);
        dp2g = reconstruct(state.p2, sys.basis, Basis::Weighted, 1);
        vp2g = reconstruct(state.v_p2, sys.basis, Basis::Weighted);
    } else {
        p2g = dp2g = vp2g = Eigen::VectorXd::Zero(grid.size());
    }

    const Eigen::ArrayXd xi = sys.profile.xi.array();
    const Eigen::ArrayXd sp = sys.profile.s_prime.array();

    EnergyBreakdown e;
    e.kinetic_deck_translation =
        0.5 * p.M * integrate(grid, vyg.array().square().matrix());
    e.kinetic_deck_torsion =
        p.M / 6.0 * p.ell * p.ell *
        integrate(grid, vthg.array().square().matrix());
    e.kinetic_cables =
        0.5 * p.m *
        integrate(grid,
                  ((vp1g.array().square() + vp2g.array().square()) * xi)
                      .matrix());
    e.bending = 0.5 * p.EI * integrate(grid, ddyg.array().square().matrix());
    e.torsional_stiffness =
        0.5 * p.GK * integrate(grid, dthg.array().square().matrix());

    const double gamma1 =
        integrate(grid, (sp * dp1g.array() / xi).matrix());
    const double gamma2 =
        integrate(grid, (sp * dp2g.array() / xi).matrix());
    e.cable_stretch_p1 = 0.5 * sys.nonlocal.prefactor * gamma1 * gamma1;
    e.cable_stretch_p2 = 0.5 * sys.nonlocal.prefactor * gamma2 * gamma2;

    e.cable_quadratic =
        0.5 * p.H0 *
        integrate(grid, ((dp1g.array().square() + dp2g.array().square()) /
                         xi.square())
                            .matrix());
    e.cable_linear =
        -p.H0 * integrate(grid, (sp * (dp1g.array() + dp2g.array())).matrix());
    e.cable_gravity =
        -p.m * p.g *
        integrate(grid, ((p1g.array() + p2g.array()) * xi).matrix());

    if (single) {
        e.hanger_potential = integrate(grid, psi_field(sys.law, yg - p1g));
    } else {
        e.hanger_potential =
            integrate(grid, psi_field(sys.law, yg + p.ell * thg - p1g)) +
            integrate(grid, psi_field(sys.law, yg - p.ell * thg - p2g));
    }

    e.total_44 = e.kinetic_deck_translation + e.kinetic_deck_torsion +
                 e.kinetic_cables + e.bending + e.torsional_stiffness +
                 e.cable_stretch_p1 + e.cable_stretch_p2 + e.cable_quadratic +
                 e.cable_linear + e.cable_gravity + e.hanger_potential;
    const double row_weight = sys.law.deck_weight_per_hanger_row;
    e.total_corrected =
        e.total_44 - row_weight * integrate(grid, (p1g + p2g));
    return e;
}

} // namespace bridge
