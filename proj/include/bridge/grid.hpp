#pragma once

#include <Eigen/Dense>

namespace bridge {

/// Composite Gauss-Legendre quadrature grid on (0, domain_length).
/// Nodes are strictly interior and strictly increasing; the weights sum
/// to the domain length.
struct Grid {
    double domain_length = 0.0;
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
    int panel_count = 0;
    int points_per_panel = 0;

    int size() const { return static_cast<int>(nodes.size()); }
};

/// Build a composite Gauss-Legendre grid with panel_count uniform panels
/// and points_per_panel abscissae (2..5) per panel.
Grid make_grid(double domain_length, int panel_count, int points_per_panel);

/// Weighted dot product of samples with the quadrature weights.
double integrate(const Grid& grid, const Eigen::VectorXd& samples);

} // namespace bridge
