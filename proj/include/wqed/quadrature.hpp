#pragma once

#include <utility>
#include <vector>

namespace wqed {

enum class QuadScheme { trapezoid, gauss_legendre };

struct QuadratureGrid {
    double half_width = 6.0;   // covered band, in units of the pulse width
    int points_per_dim = 301;  // odd, at least 51
    QuadScheme scheme = QuadScheme::gauss_legendre;
};

void require_valid(const QuadratureGrid& grid);

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], by
// Newton iteration on the Legendre recurrence. Machine accurate for the
// point counts used here.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_rule(int n);

struct QuadAxis {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// One integration axis spanning center +- half_width * sigma.
QuadAxis grid_axis(double center, double sigma, const QuadratureGrid& grid);

}  // namespace wqed
