#include "bridge/forces.hpp"
#include "bridge/errors.hpp"

#include <cmath>

namespace bridge {

HangerLaw build_hanger_law(const CableProfile& profile, double kappa0,
                           double deck_weight_per_hanger_row) {
    if (!(kappa0 > 0.0)) throw ParameterError("kappa0 must be positive");
    if (deck_weight_per_hanger_row < 0.0)
        throw ParameterError("deck weight must be nonnegative");

    HangerLaw law;
    law.kappa0 = kappa0;
    law.deck_weight_per_hanger_row = deck_weight_per_hanger_row;
    const int n = profile.grid.size();
    law.lambda_samples.resize(n);
    law.kappa_samples.resize(n);
    law.slack_threshold_samples.resize(n);
    const double stretch = 1.0 + deck_weight_per_hanger_row / kappa0;
    for (int i = 0; i < n; ++i) {
        if (!(profile.s[i] > 0.0))
            throw ParameterError("cable position must stay positive for the "
                                 "hanger unloaded length");
        law.lambda_samples[i] = profile.s[i] / stretch;
        law.kappa_samples[i] = kappa0 / law.lambda_samples[i];
        law.slack_threshold_samples[i] =
            -deck_weight_per_hanger_row / law.kappa_samples[i];
    }
    return law;
}

HangerForce hanger_force(const HangerLaw& law, double displacement,
                         int node_index) {
    if (node_index < 0 || node_index >= law.kappa_samples.size())
        throw ParameterError("node_index out of range");
    const double kappa = law.kappa_samples[node_index];
    const double W = law.deck_weight_per_hanger_row;
    const double elong = displacement + W / kappa;
    const double pos = elong > 0.0 ? elong : 0.0;

    HangerForce out;
    out.F = kappa * pos;
    out.Phi = out.F - W;
    out.Psi = 0.5 * kappa * pos * pos - W * displacement -
              W * W / (2.0 * kappa);
    return out;
}

Eigen::VectorXd phi_field(const HangerLaw& law,
                          const Eigen::VectorXd& displacement) {
    const double W = law.deck_weight_per_hanger_row;
    Eigen::VectorXd out(displacement.size());
    for (int i = 0; i < displacement.size(); ++i) {
        const double kappa = law.kappa_samples[i];
        const double elong = displacement[i] + W / kappa;
        out[i] = (elong > 0.0 ? kappa * elong : 0.0) - W;
    }
    return out;
}

Eigen::VectorXd psi_field(const HangerLaw& law,
                          const Eigen::VectorXd& displacement) {
    const double W = law.deck_weight_per_hanger_row;
    Eigen::VectorXd out(displacement.size());
    for (int i = 0; i < displacement.size(); ++i) {
        const double kappa = law.kappa_samples[i];
        const double elong = displacement[i] + W / kappa;
        const double pos = elong > 0.0 ? elong : 0.0;
        out[i] = 0.5 * kappa * pos * pos - W * displacement[i] -
                 W * W / (2.0 * kappa);
    }
    return out;
}

NonlocalOperatorData build_nonlocal_operator(const CableProfile& profile,
                                             const SpectralBasis& basis,
                                             double AE) {
    if (basis.grid.size() != profile.grid.size() ||
        basis.grid.nodes != profile.grid.nodes)
        throw ParameterError("basis and profile grids do not match");
    if (!(AE > 0.0)) throw ParameterError("AE must be positive");

    NonlocalOperatorData data;
    data.prefactor = AE / profile.L_c;
    data.b_grid = profile.s_second.array() / profile.xi.array().cube();
    const Eigen::VectorXd w = profile.grid.weights;
    data.a_vec = basis.du_samples *
                 (w.array() * profile.s_prime.array() / profile.xi.array())
                     .matrix();
    data.b_vec = basis.u_samples * (w.array() * data.b_grid.array()).matrix();
    return data;
}

Eigen::VectorXd nonlocal_force_direct(const NonlocalOperatorData& data,
                                      const CableProfile& profile,
                                      const Eigen::VectorXd& p_prime_samples) {
    const double gamma =
        integrate(profile.grid, (profile.s_prime.array() *
                                 p_prime_samples.array() / profile.xi.array())
                                    .matrix());
    return -data.prefactor * gamma * data.b_grid;
}

CableForceModel parse_cable_force_model(const std::string& tag) {
    if (tag == "first_order") return CableForceModel::FirstOrder;
    if (tag == "timoshenko") return CableForceModel::Timoshenko;
    if (tag == "biot_von_karman") return CableForceModel::BiotVonKarman;
    throw ParameterError("unknown cable force model '" + tag + "'");
}

Eigen::VectorXd alt_cable_force(CableForceModel model,
                                const CableProfile& profile,
                                const Eigen::VectorXd& p_samples,
                                const Eigen::VectorXd& p_prime_samples,
                                double AE, double deck_weight, int n_modes) {
    const Grid& grid = profile.grid;
    if (p_samples.size() != grid.nodes.size() ||
        p_prime_samples.size() != grid.nodes.size())
        throw ParameterError("samples must live on the profile grid");

    const double pref = AE / profile.L_c;
    if (model == CableForceModel::FirstOrder) {
        const double gamma =
            integrate(grid, (profile.s_prime.array() *
                             p_prime_samples.array() / profile.xi.array())
                                .matrix());
        return (-pref * gamma) *
               (profile.s_second.array() / profile.xi.array().cube()).matrix();
    }

    // p'' by spectral differentiation of the sine expansion of p.
    SineBasis sine = build_sine_basis(n_modes, grid);
    const Eigen::VectorXd coeffs =
        sine.e * (grid.weights.array() * p_samples.array()).matrix();
    const Eigen::VectorXd p_second = sine.dde.transpose() * coeffs;
    const Eigen::VectorXd shape = profile.s_second - p_second;

    const double ratio = deck_weight / profile.params.H0;
    if (model == CableForceModel::Timoshenko) {
        const double factor = integrate(
            grid, (ratio * p_samples.array() +
                   0.5 * p_prime_samples.array().square())
                      .matrix());
        return pref * factor * shape;
    }
    const double factor = ratio * integrate(grid, p_samples);
    return pref * factor * shape;
}

} // namespace bridge
