#pragma once

#include "progdisc/coeff.hpp"
#include "progdisc/half_int.hpp"

namespace progdisc::universal {

/// Incomplete beta function B_{1/2}(a,b) = int_0^{1/2} t^(a-1) (1-t)^(b-1) dt
/// (unregularized), via the continued-fraction expansion with the symmetry
/// reflection at x = 1/2. Absolute accuracy around 1e-13 for the small
/// half-integer arguments used here.
double incomplete_beta_half(double a, double b);

/// <C_j^N> under the hard-sphere purity prior w(r) = 3 r^2:
/// 6 Gamma(N/2+j+2) Gamma(N/2-j+1) / Gamma(N+4).
double avg_coeff_hard_sphere(int copies, HalfInt j);

/// <C_j^N> under the Bures prior w(r) = (4/pi) r^2/sqrt(1-r^2):
/// (4/pi) Gamma(N/2+j+3/2) Gamma(N/2-j+1/2) / Gamma(N+3).
double avg_coeff_bures(int copies, HalfInt j);

/// <C_j^N> under the Chernoff prior
/// w(r) = (sqrt(1+r)-sqrt(1-r))^2 / ((pi-2) sqrt(1-r^2)), via the
/// incomplete-beta sum.
double avg_coeff_chernoff(int copies, HalfInt j);

/// Minimum-error probability of the fully universal machine: the fixed-purity
/// block engine run on prior-averaged coefficient tables.
double me_universal(int n, int m, PurityPrior prior);

}  // namespace progdisc::universal
