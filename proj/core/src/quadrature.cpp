#include "progdisc/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace progdisc::quadrature {

namespace {

double legendre(double x, int n) {
    if (n == 0) return 1.0;
    double p0 = 1.0, p1 = x;
    for (int i = 2; i <= n; ++i) {
        const double pi = ((2.0 * i - 1.0) * x * p1 - (i - 1.0) * p0) / i;
        p0 = p1;
        p1 = pi;
    }
    return p1;
}

double legendre_deriv(double x, int n) {
    return n / (x * x - 1.0) * (x * legendre(x, n) - legendre(x, n - 1));
}

}  // namespace

Rule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    Rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int k = 1; k <= n; ++k) {
        // Tricomi initial guess, then Newton.
        double x = std::cos(std::numbers::pi * (4.0 * k - 1.0) / (4.0 * n + 2.0)) *
                   (1.0 - 1.0 / (8.0 * n * n) + 1.0 / (8.0 * n * n * n));
        for (int it = 0; it < 100; ++it) {
            const double f = legendre(x, n);
            const double step = f / legendre_deriv(x, n);
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        const double d = legendre_deriv(x, n);
        rule.nodes[n - k] = x;
        rule.weights[n - k] = 2.0 / ((1.0 - x * x) * d * d);
    }
    return rule;
}

}  // namespace progdisc::quadrature
