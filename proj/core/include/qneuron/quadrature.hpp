#pragma once

#include <vector>

namespace qneuron {

struct QuadratureRule {
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;  // all > 0
};

/// Gauss-Legendre rule with n nodes on [-1, 1]; exact for polynomials up to
/// degree 2n-1.  Throws std::invalid_argument for n < 1.
QuadratureRule gauss_legendre(int n);

/// Affinely mapped Gauss-Legendre rule on [a, b], a < b.
QuadratureRule gauss_legendre(int n, double a, double b);

}  // namespace qneuron
