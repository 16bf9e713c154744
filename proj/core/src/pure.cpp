#include "progdisc/pure.hpp"

#include <cmath>
#include <vector>

#include "progdisc/angular.hpp"

namespace progdisc::pure {

namespace {

constexpr int kMaxTotalCopies = 512;

void check_total(const PortLoad& load) {
    if (load.total() > kMaxTotalCopies)
        throw std::domain_error("pure: total copies above 512 are not supported exactly");
}

// Squared Jordan overlap of the J = Jmin1 + k block, as an exact rational.
BigRational overlap_sq(const PortLoad& l, int k) {
    BigRational num(binomial(l.n_a + l.n_b - l.n_c + k, l.n_b));
    num *= binomial(l.n_b + k, l.n_b);
    BigRational den(binomial(l.n_a + l.n_b, l.n_b));
    den *= binomial(l.n_c + l.n_b, l.n_b);
    return num / den;
}

// Block-sum route for the asymmetric formulas: pairwise optima weighted by
// p_J, summed over the sigma1 support. Used as a transcription check against
// the closed forms on every call.
double ua_block_sum(const PortLoad& l) {
    const double d1 = static_cast<double>(l.d1());
    const double d2 = static_cast<double>(l.d2());
    const double p = (d1 + d2) / (2.0 * d1 * d2);
    const double pi1 = d2 / (d1 + d2);
    const double pi2 = d1 / (d1 + d2);
    double total = p * l.d_abc();  // J = Jmax block: inconclusive with certainty
    for (int k = 0; k < l.n_c; ++k) {
        const int tj = l.n_a + l.n_b - l.n_c + 2 * k;
        const double c = std::abs(angular::jordan_overlap_d(
            HalfInt::from_twice(l.n_a), HalfInt::from_twice(l.n_b), HalfInt::from_twice(l.n_c),
            HalfInt::from_twice(l.n_a + l.n_b), HalfInt::from_twice(l.n_b + l.n_c),
            HalfInt::from_twice(tj)));
        total += p * (tj + 1) * 2.0 * std::sqrt(pi1 * pi2) * c;
    }
    return total;
}

double me_block_sum(const PortLoad& l) {
    const double d1 = static_cast<double>(l.d1());
    const double d2 = static_cast<double>(l.d2());
    const double p = (d1 + d2) / (2.0 * d1 * d2);
    const double pi1 = d2 / (d1 + d2);
    const double pi2 = d1 / (d1 + d2);
    double total = 0.0;
    for (int k = 0; k <= l.n_c; ++k) {
        const int tj = l.n_a + l.n_b - l.n_c + 2 * k;
        const double c = std::abs(angular::jordan_overlap_d(
            HalfInt::from_twice(l.n_a), HalfInt::from_twice(l.n_b), HalfInt::from_twice(l.n_c),
            HalfInt::from_twice(l.n_a + l.n_b), HalfInt::from_twice(l.n_b + l.n_c),
            HalfInt::from_twice(tj)));
        const double root = std::sqrt(std::max(0.0, 1.0 - 4.0 * pi1 * pi2 * c * c));
        total += p * (tj + 1) * 0.5 * (1.0 - root);
    }
    return total;
}

void check_feasibility(const PortLoad& l) {
    // c^2 at J = Jmax - 1 is the largest overlap below the symmetric block;
    // if the interior-optimum window holds there it holds for all smaller J.
    const BigRational c2(BigInt(l.n_a) * l.n_c,
                         BigInt(l.n_a + l.n_b) * (l.n_b + l.n_c));
    const BigRational pi1(BigInt(l.d2()), BigInt(l.d1()) + l.d2());
    const BigRational lo = c2 / (1 + c2);
    const BigRational hi = BigRational(1) / (1 + c2);
    if (pi1 < lo || pi1 > hi)
        throw FeasibilityError("pure: unambiguous feasibility window violated (implementation bug)");
}

}  // namespace

BigRational ua_symmetric_exact(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("ua_symmetric: n, m must be >= 1");
    return 1 - BigRational(BigInt(n) * m, BigInt(n + 1) * (m + 2));
}

double ua_symmetric(int n, int m) {
    return to_double(ua_symmetric_exact(n, m));
}

double me_symmetric(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("me_symmetric: n, m must be >= 1");
    // c_k = prod_{i=k+1..n} i/(m+i), built downward from c_n = 1.
    std::vector<double> c(n + 1);
    c[n] = 1.0;
    for (int k = n; k >= 1; --k) c[k - 1] = c[k] * (static_cast<double>(k) / (static_cast<double>(m) + k));
    const double norm = (static_cast<double>(n) + 1.0) * (static_cast<double>(n) + m + 1.0);
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double w = (static_cast<double>(m) + 2.0 * k + 1.0) / norm;
        sum += w * std::sqrt(std::max(0.0, 1.0 - c[k] * c[k]));
    }
    return 0.5 * (1.0 - sum);
}

RadicalSum ua_asymmetric_exact(const PortLoad& load) {
    const PortLoad l = load.canonical();
    check_total(l);
    check_feasibility(l);

    const BigInt d1(l.d1()), d2(l.d2());
    RadicalSum out;
    // (1/sqrt(d1) - 1/sqrt(d2))^2 d_ABC / 2, expanded over the d1*d2 radical.
    out.add_rational(BigRational(BigInt(l.d_abc()), 2) * (BigRational(1, d1) + BigRational(1, d2)));
    out.add(ExactRational::sqrt_of(BigRational(1, d1 * d2)) *
            ExactRational::from_int(-l.d_abc()));
    for (int k = 0; k <= l.n_c; ++k) {
        const int dim = l.n_a + l.n_b - l.n_c + 2 * k + 1;
        out.add(ExactRational::sqrt_of(overlap_sq(l, k) / BigRational(d1 * d2)) *
                ExactRational::from_int(dim));
    }
    return out;
}

double ua_asymmetric(const PortLoad& load) {
    const PortLoad l = load.canonical();
    const double closed = ua_asymmetric_exact(l).to_double();
    const double blocks = ua_block_sum(l);
    if (std::abs(closed - blocks) > 1e-12 * std::max(1.0, std::abs(closed)))
        throw std::logic_error("pure: closed-form / block-sum mismatch in ua_asymmetric");
    return closed;
}

double me_asymmetric(const PortLoad& load) {
    const PortLoad l = load.canonical();
    check_total(l);
    const double d1 = static_cast<double>(l.d1());
    const double d2 = static_cast<double>(l.d2());
    const double q = 4.0 * d1 * d2 / ((d1 + d2) * (d1 + d2));
    double sum = 0.0;
    for (int k = 0; k <= l.n_c; ++k) {
        const int dim = l.n_a + l.n_b - l.n_c + 2 * k + 1;
        const double c2 = to_double(overlap_sq(l, k));
        sum += dim * std::sqrt(std::max(0.0, 1.0 - q * c2));
    }
    const double closed = 0.25 * (1.0 + d1 / d2 - (d1 + d2) / (d1 * d2) * sum);
    const double blocks = me_block_sum(l);
    if (std::abs(closed - blocks) > 1e-12 * std::max(1.0, std::abs(closed)))
        throw std::logic_error("pure: closed-form / block-sum mismatch in me_asymmetric");
    return closed;
}

PairPriors pair_priors(const PortLoad& load, HalfInt j_total) {
    const PortLoad l = load.canonical();
    const int tj = j_total.twice();
    const int t_max = l.j_max().twice();
    const int t_min1 = l.j_min_sigma1().twice();
    const int t_min2 = l.j_min_sigma2().twice();
    if (tj > t_max || tj < t_min2 || (t_max - tj) % 2 != 0)
        throw std::invalid_argument("pair_priors: J outside the support of both states");
    const double d1 = static_cast<double>(l.d1());
    const double d2 = static_cast<double>(l.d2());
    if (tj >= t_min1)
        return {(d1 + d2) / (2.0 * d1 * d2), d2 / (d1 + d2), d1 / (d1 + d2)};
    return {1.0 / (2.0 * d2), 0.0, 1.0};
}

}  // namespace progdisc::pure
