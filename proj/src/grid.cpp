#include "bridge/grid.hpp"
#include "bridge/errors.hpp"

#include <array>
#include <cmath>

namespace bridge {

namespace {

// Gauss-Legendre abscissae/weights on (-1, 1), n = 2..5.
struct Rule {
    std::array<double, 5> x;
    std::array<double, 5> w;
    int n;
};

Rule gauss_rule(int n) {
    switch (n) {
    case 2:
        return {{-0.5773502691896257645091488, 0.5773502691896257645091488},
                {1.0, 1.0},
                2};
    case 3:
        return {{-0.7745966692414833770358531, 0.0, 0.7745966692414833770358531},
                {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0},
                3};
    case 4:
        return {{-0.8611363115940525752239465, -0.3399810435848562648026658,
                 0.3399810435848562648026658, 0.8611363115940525752239465},
                {0.3478548451374538573730639, 0.6521451548625461426269361,
                 0.6521451548625461426269361, 0.3478548451374538573730639},
                4};
    case 5:
        return {{-0.9061798459386639927976269, -0.5384693101056830910363144, 0.0,
                 0.5384693101056830910363144, 0.9061798459386639927976269},
                {0.2369268850561890875142640, 0.4786286704993664680412915,
                 128.0 / 225.0, 0.4786286704993664680412915,
                 0.2369268850561890875142640},
                5};
    default:
        throw ParameterError("points_per_panel must be in {2,3,4,5}, got " +
                             std::to_string(n));
    }
}

} // namespace

Grid make_grid(double domain_length, int panel_count, int points_per_panel) {
    if (!(domain_length > 0.0))
        throw ParameterError("domain_length must be positive");
    if (panel_count < 1)
        throw ParameterError("panel_count must be >= 1, got " +
                             std::to_string(panel_count));
    const Rule rule = gauss_rule(points_per_panel);

    Grid g;
    g.domain_length = domain_length;
    g.panel_count = panel_count;
    g.points_per_panel = points_per_panel;
    const int total = panel_count * points_per_panel;
    g.nodes.resize(total);
    g.weights.resize(total);

    const double h = domain_length / panel_count;
    for (int p = 0; p < panel_count; ++p) {
        const double a = p * h;
        const double mid = a + 0.5 * h;
        for (int j = 0; j < rule.n; ++j) {
            g.nodes[p * rule.n + j] = mid + 0.5 * h * rule.x[j];
            g.weights[p * rule.n + j] = 0.5 * h * rule.w[j];
        }
    }
    return g;
}

double integrate(const Grid& grid, const Eigen::VectorXd& samples) {
    if (samples.size() != grid.nodes.size())
        throw ParameterError("sample count " + std::to_string(samples.size()) +
                             " does not match grid size " +
                             std::to_string(grid.nodes.size()));
    return grid.weights.dot(samples);
}

} // namespace bridge
