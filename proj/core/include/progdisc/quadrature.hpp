#pragma once

#include <vector>

namespace progdisc::quadrature {

/// Gauss-Legendre rule on [-1, 1]: exact for polynomials of degree 2n-1.
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

Rule gauss_legendre(int n);

}  // namespace progdisc::quadrature
