#include "wqed/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "wqed/errors.hpp"

namespace wqed {

void require_valid(const QuadratureGrid& grid) {
    if (!(grid.half_width > 0.0)) {
        throw InvalidParams("quadrature grid needs a positive half width");
    }
    if (grid.points_per_dim < 51 || grid.points_per_dim % 2 == 0) {
        throw InvalidParams(
            "quadrature grid needs an odd point count of at least 51");
    }
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_rule(
    int n) {
    std::vector<double> x(n), w(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double deriv = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            deriv = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / deriv;
            z -= dz;
            if (std::abs(dz) < 1e-15) {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * deriv * deriv);
        w[n - 1 - i] = w[i];
    }
    return {std::move(x), std::move(w)};
}

QuadAxis grid_axis(double center, double sigma, const QuadratureGrid& grid) {
    require_valid(grid);
    if (!(sigma > 0.0)) {
        throw InvalidParams("integration axis needs a positive pulse width");
    }
    const int n = grid.points_per_dim;
    const double lo = center - grid.half_width * sigma;
    const double hi = center + grid.half_width * sigma;
    QuadAxis ax;
    ax.nodes.resize(n);
    ax.weights.resize(n);
    if (grid.scheme == QuadScheme::gauss_legendre) {
        const auto [x, w] = gauss_legendre_rule(n);
        for (int i = 0; i < n; ++i) {
            ax.nodes[i] = 0.5 * (hi + lo) + 0.5 * (hi - lo) * x[i];
            ax.weights[i] = 0.5 * (hi - lo) * w[i];
        }
    } else {
        const double h = (hi - lo) / (n - 1);
        for (int i = 0; i < n; ++i) {
            ax.nodes[i] = lo + h * i;
            ax.weights[i] = h;
        }
        // Composite trapezoid: end points carry half weight.
        ax.weights.front() *= 0.5;
        ax.weights.back() *= 0.5;
    }
    return ax;
}

}  // namespace wqed
