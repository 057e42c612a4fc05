#pragma once

#include "bridge/cable.hpp"
#include "bridge/forces.hpp"
#include "bridge/spectral.hpp"

#include <Eigen/Dense>

namespace bridge {

enum class ModeFlag { FullBridge, SingleBeam, LinearDecoupled };

struct BridgeParams {
    double M = 20.0;    // deck linear mass density
    double m = 1.0;     // cable linear mass density
    double ell = 0.2;   // deck half-width
    double EI = 100.0;  // flexural rigidity
    double GK = 50.0;   // torsional stiffness
    double AE = 300.0;  // cable axial stiffness
    double H0 = 500.0;
    double g = 9.81;
    double kappa0 = 30.0;
    int n_modes = 16;
    ModeFlag mode_flag = ModeFlag::FullBridge;
    // Debug: use the EI k^2 / GK k modal stiffness exponents instead of
    // EI k^4 / GK k^2.
    bool printed_exponents = false;

    void validate() const;
};

/// Modal coefficients and velocities of (p1, p2, y, theta). p-fields live
/// in the weighted basis, y and theta in the sine basis; reconstructed
/// fields vanish at 0 and pi because every basis function does.
struct ModalState {
    double t = 0.0;
    Eigen::VectorXd p1, p2, y, theta;
    Eigen::VectorXd v_p1, v_p2, v_y, v_theta;

    static ModalState zero(int n_modes);
    int n_modes() const { return static_cast<int>(p1.size()); }
    bool finite() const;
};

struct Accelerations {
    Eigen::VectorXd p1, p2, y, theta;
};

/// Everything a right-hand-side evaluation needs, immutable once built.
struct BridgeSystem {
    BridgeParams params;
    CableProfile profile;
    SpectralBasis basis;
    HangerLaw law;
    NonlocalOperatorData nonlocal;
};

/// Assemble profile, basis, hanger law and nonlocal data for the given
/// mode flag (hanger row weight Mg/2 for the full bridge, Mg for the
/// single cable-beam system).
BridgeSystem build_bridge_system(const BridgeParams& params, const Grid& grid,
                                 int fd_points, bool debug_xi_one = false,
                                 double s0 = 3.0, int ivp_steps = 4096);

/// Per-term evaluation of the total energy plus the corrected variant
/// total_corrected = total_44 - W int (p1 + p2), the quantity the discrete
/// gradient structure conserves.
struct EnergyBreakdown {
    double kinetic_deck_translation = 0.0;
    double kinetic_deck_torsion = 0.0;
    double kinetic_cables = 0.0;
    double bending = 0.0;
    double torsional_stiffness = 0.0;
    double cable_stretch_p1 = 0.0;
    double cable_stretch_p2 = 0.0;
    double cable_quadratic = 0.0;
    double cable_linear = 0.0;
    double cable_gravity = 0.0;
    double hanger_potential = 0.0;
    double total_44 = 0.0;
    double total_corrected = 0.0;
};

/// Project grid-sampled initial fields: p-fields with the weighted inner
/// product, y and theta with the plain one.
ModalState project_initial_data(
    const Eigen::VectorXd& y0, const Eigen::VectorXd& theta0,
    const Eigen::VectorXd& p10, const Eigen::VectorXd& p20,
    const Eigen::VectorXd& y1, const Eigen::VectorXd& theta1,
    const Eigen::VectorXd& p11, const Eigen::VectorXd& p21,
    const SpectralBasis& basis);

Accelerations modal_rhs(const ModalState& state, const BridgeSystem& sys);

Accelerations modal_rhs_forced_linear(const ModalState& state,
                                      const BridgeSystem& sys,
                                      const Eigen::VectorXd& g1,
                                      const Eigen::VectorXd& g2,
                                      const Eigen::VectorXd& g3,
                                      const Eigen::VectorXd& g4);

/// Reduced single cable-beam system: one cable (p1), one hanger row with
/// weight Mg; p2 and theta stay zero.
Accelerations single_beam_rhs(const ModalState& state,
                              const BridgeSystem& sys);

EnergyBreakdown energy(const ModalState& state, const BridgeSystem& sys);

} // namespace bridge
