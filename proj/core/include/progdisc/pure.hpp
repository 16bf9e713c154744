#pragma once

#include <stdexcept>

#include "progdisc/exact_rational.hpp"
#include "progdisc/half_int.hpp"

namespace progdisc::pure {

/// Copy counts at the three machine ports: n_a and n_c are the two program
/// ports, n_b is the data port in the middle. The machine is symmetric under
/// swapping the program ports; canonical() normalizes to n_a >= n_c, which is
/// the orientation the asymmetric closed forms are written in.
struct PortLoad {
    int n_a;
    int n_b;
    int n_c;

    PortLoad(int a, int b, int c) : n_a(a), n_b(b), n_c(c) {
        if (a < 1 || b < 1 || c < 1)
            throw std::invalid_argument("PortLoad: all port counts must be >= 1");
    }

    PortLoad canonical() const {
        return n_a >= n_c ? *this : PortLoad(n_c, n_b, n_a);
    }

    int total() const { return n_a + n_b + n_c; }
    long long d1() const { return 1LL * (n_a + n_b + 1) * (n_c + 1); }
    long long d2() const { return 1LL * (n_a + 1) * (n_b + n_c + 1); }
    int d_abc() const { return n_a + n_b + n_c + 1; }

    // J-range bookkeeping for the canonical orientation (n_a >= n_c).
    HalfInt j_max() const { return HalfInt::from_twice(n_a + n_b + n_c); }
    HalfInt j_min_sigma1() const { return HalfInt::from_twice(n_a + n_b - n_c); }
    HalfInt j_min_sigma2() const { return HalfInt::from_twice(std::abs(n_b + n_c - n_a)); }
};

/// Block weight p_J and the conditional priors of the two hypotheses inside
/// the J block (for the canonical orientation). Below the sigma1 support only
/// the second hypothesis is present.
struct PairPriors {
    double block_weight;
    double prior1;
    double prior2;
};

/// Raised when the two-state unambiguous optimum leaves its interior regime
/// inside a J block. The feasibility inequality provably holds for every
/// valid load, so seeing this means a coding bug, not a bad input.
class FeasibilityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Inconclusive probability of the symmetric n x m x n machine:
/// 1 - n m / ((n+1)(m+2)), exact.
BigRational ua_symmetric_exact(int n, int m);
double ua_symmetric(int n, int m);

/// Minimum-error probability of the symmetric machine. Overlaps are built by
/// a ratio recurrence, never through large factorials, so the data port count
/// m can be arbitrarily large (the state-comparison limit).
double me_symmetric(int n, int m);

/// Inconclusive probability for arbitrary per-port counts, as an exact sum of
/// radicals. Total copies are capped at 512.
RadicalSum ua_asymmetric_exact(const PortLoad& load);
double ua_asymmetric(const PortLoad& load);

/// Minimum-error probability for arbitrary per-port counts.
double me_asymmetric(const PortLoad& load);

/// Per-block weight and hypothesis priors for total angular momentum J.
/// Throws for J outside the support of either effective state.
PairPriors pair_priors(const PortLoad& load, HalfInt j_total);

}  // namespace progdisc::pure
