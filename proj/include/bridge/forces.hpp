#pragma once

#include "bridge/cable.hpp"
#include "bridge/spectral.hpp"

#include <Eigen/Dense>

namespace bridge {

/// Hanger constitutive law with slackening. One instance describes one row
/// of hangers; deck_weight_per_hanger_row is Mg for the single cable-beam
/// system and Mg/2 for the full bridge.
struct HangerLaw {
    double kappa0 = 0.0;
    double deck_weight_per_hanger_row = 0.0;
    Eigen::VectorXd lambda_samples;          // unloaded length at nodes
    Eigen::VectorXd kappa_samples;           // Hooke field kappa(x)
    Eigen::VectorXd slack_threshold_samples; // -W/kappa(x)
};

struct HangerForce {
    double F = 0.0;   // restoring force density, zero when slack
    double Phi = 0.0; // F - W
    double Psi = 0.0; // antiderivative of Phi with Psi(0) = 0
};

/// Derive lambda(x) and kappa(x) from the equilibrium balance
/// W = kappa(x) (s(x) - lambda(x)) with kappa = kappa0 / lambda.
HangerLaw build_hanger_law(const CableProfile& profile, double kappa0,
                           double deck_weight_per_hanger_row);

HangerForce hanger_force(const HangerLaw& law, double displacement,
                         int node_index);

/// Phi evaluated nodewise over a displacement field.
Eigen::VectorXd phi_field(const HangerLaw& law,
                          const Eigen::VectorXd& displacement);

/// Psi evaluated nodewise.
Eigen::VectorXd psi_field(const HangerLaw& law,
                          const Eigen::VectorXd& displacement);

/// Precomputed data for the nonlocal cable-stretching force: rank-one in
/// modal coordinates, prefactor * (a . p) * b_k, with
///   a_k = int s' u_k' / xi,  b_k = int (s''/xi^3) u_k.
struct NonlocalOperatorData {
    double prefactor = 0.0; // AE / L_c
    Eigen::VectorXd a_vec;
    Eigen::VectorXd b_vec;
    Eigen::VectorXd b_grid; // s''/xi^3 at nodes
};

NonlocalOperatorData build_nonlocal_operator(const CableProfile& profile,
                                             const SpectralBasis& basis,
                                             double AE);

/// Direct-quadrature evaluation of the stretching force field
///   -prefactor * (int s' p' / xi) * s''/xi^3
/// from grid samples of p'; the dual path to the modal rank-one form.
Eigen::VectorXd nonlocal_force_direct(const NonlocalOperatorData& data,
                                      const CableProfile& profile,
                                      const Eigen::VectorXd& p_prime_samples);

enum class CableForceModel { FirstOrder, Timoshenko, BiotVonKarman };

CableForceModel parse_cable_force_model(const std::string& tag);

/// The Remark-2 family of cable force models evaluated on the grid.
/// FirstOrder is the baseline first-order form; the other two are the
/// classical engineering simplifications kept for comparison. p'' is
/// obtained by spectral differentiation of the sine expansion of p.
Eigen::VectorXd alt_cable_force(CableForceModel model,
                                const CableProfile& profile,
                                const Eigen::VectorXd& p_samples,
                                const Eigen::VectorXd& p_prime_samples,
                                double AE, double deck_weight, int n_modes);

} // namespace bridge
