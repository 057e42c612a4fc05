#pragma once

#include "bridge/dynamics.hpp"

#include <functional>
#include <vector>

namespace bridge {

enum class Method { Verlet, Rk4 };

struct IntegratorConfig {
    Method method = Method::Verlet;
    double dt = 1e-3;
    double t_end = 10.0;
    int snapshot_every = 10;
    int energy_audit_every = 10;

    void validate() const;
};

struct PicardConfig {
    double horizon = 0.1;     // one contraction window
    int max_iterations = 20;
    double convergence_tol = 1e-6; // Z_T distance between iterates
    double inner_dt = 1e-3;        // step for the linear solves

    void validate() const;
};

/// Hanger slackening event: the elongation argument at one quadrature node
/// crossed the slack threshold. row is 1 or 2.
struct SlackEvent {
    double t = 0.0;
    int node_index = 0;
    int row = 1;
    bool became_slack = true;
};

struct Trajectory {
    std::vector<ModalState> snapshots;
    std::vector<double> energy_times;
    std::vector<EnergyBreakdown> energies;
    std::vector<SlackEvent> events;
    // Time integral of W int (p1dot + p2dot) dx along the run, the
    // predicted drift of the uncorrected energy.
    double residual_integral = 0.0;
};

using RhsFn = std::function<Accelerations(const ModalState&)>;

/// One fixed step. verlet is velocity-Verlet (kick-drift-kick, positions-
/// only forces); rk4 is the classical 4-stage method on the first-order
/// system. Throws BlowupError when the state becomes non-finite.
ModalState step(const ModalState& state, const RhsFn& rhs,
                const IntegratorConfig& config);

/// Right-hand side for the system's mode flag (zero forcing in
/// linear_decoupled mode).
RhsFn system_rhs(const BridgeSystem& sys);

/// Fixed-step loop with snapshots, energy audits and slackening-event
/// logging.
Trajectory run(const ModalState& initial, const BridgeSystem& sys,
               const IntegratorConfig& config);

/// Discrete Z_T-style state norm: lambda-weighted positions, plain
/// velocities; k^4 / k^2 weights for y / theta positions.
double state_norm_squared(const ModalState& state, const BridgeSystem& sys);
double zt_distance(const std::vector<ModalState>& a,
                   const std::vector<ModalState>& b, const BridgeSystem& sys);

/// One application of the solution map: freeze the nonlinear and nonlocal
/// terms of the input trajectory into forcings, solve the forced linear
/// decoupled system with the given initial data, and return the solution
/// on the same time grid.
std::vector<ModalState> picard_map(const std::vector<ModalState>& input,
                                   const ModalState& initial,
                                   const BridgeSystem& sys,
                                   const PicardConfig& config);

struct PicardReport {
    std::vector<double> distances;
    std::vector<double> ratios;
    // Largest ratio after the first (the first step only measures the
    // distance from the constant seed trajectory, not the map itself).
    double contraction_ratio = 0.0;
    bool converged = false;
    int iterations = 0;
};

struct PicardResult {
    std::vector<ModalState> trajectory;
    PicardReport report;
};

/// Iterate picard_map from the frozen-initial-state trajectory until the
/// Z_T distance between successive iterates falls below tolerance. Throws
/// NumericalError when the ratio stays >= 1 for three consecutive
/// iterations (horizon too large for contraction).
PicardResult picard_solve(const ModalState& initial, const BridgeSystem& sys,
                          const PicardConfig& config);

} // namespace bridge
