#include "qneuron/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace qneuron {

namespace {

/// Legendre P_n(x) and its derivative via the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = (n == 0) ? 1.0 : p1;
    dp = (n == 0) ? 0.0 : n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const double pi = 3.14159265358979323846;
    // Newton from the Chebyshev-like initial guess; roots come out descending,
    // store ascending.  By symmetry only the upper half needs solving.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double p, dp;
        for (int iter = 0; iter < 100; ++iter) {
            legendre(n, x, p, dp);
            const double step = p / dp;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        legendre(n, x, p, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.weights[static_cast<std::size_t>(i)] = w;
    }
    if (n % 2 == 1) {
        // Central node is exactly zero.
        double p, dp;
        legendre(n, 0.0, p, dp);
        rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
        rule.weights[static_cast<std::size_t>(n / 2)] = 2.0 / (dp * dp);
    }
    return rule;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");
    QuadratureRule rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        rule.nodes[i] = mid + half * rule.nodes[i];
        rule.weights[i] *= half;
    }
    return rule;
}

}  // namespace qneuron
