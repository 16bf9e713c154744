#include "progdisc/universal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "progdisc/mixed.hpp"

namespace progdisc::universal {

namespace {

// Continued fraction for the regularized incomplete beta (modified Lentz).
double betacf(double a, double b, double x) {
    constexpr int max_iter = 300;
    constexpr double eps = 1e-16, fpmin = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const int mm = 2 * m;
        double aa = m * (b - m) * x / ((qam + mm) * (a + mm));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + mm) * (qap + mm));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) return h;
    }
    throw std::runtime_error("incomplete_beta_half: continued fraction did not converge");
}

bool spin_in_range(int copies, HalfInt j) {
    const int tj = j.twice();
    return tj <= copies && (copies - tj) % 2 == 0;
}

}  // namespace

double incomplete_beta_half(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("incomplete_beta_half: arguments must be positive");
    // front = (1/2)^a (1/2)^b, the unregularized prefactor at x = 1/2
    const double front = std::exp(-(a + b) * std::numbers::ln2);
    if (0.5 < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, 0.5) / a;
    const double complete = std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
    return complete - front * betacf(b, a, 0.5) / b;
}

double avg_coeff_hard_sphere(int copies, HalfInt j) {
    if (!spin_in_range(copies, j)) return 0.0;
    const int tj = j.twice();
    return 6.0 * std::exp(std::lgamma(0.5 * (copies + tj) + 2.0) +
                          std::lgamma(0.5 * (copies - tj) + 1.0) -
                          std::lgamma(copies + 4.0));
}

double avg_coeff_bures(int copies, HalfInt j) {
    if (!spin_in_range(copies, j)) return 0.0;
    const int tj = j.twice();
    return 4.0 / std::numbers::pi *
           std::exp(std::lgamma(0.5 * (copies + tj) + 1.5) +
                    std::lgamma(0.5 * (copies - tj) + 0.5) -
                    std::lgamma(copies + 3.0));
}

double avg_coeff_chernoff(int copies, HalfInt j) {
    if (!spin_in_range(copies, j)) return 0.0;
    const int tj = j.twice();
    double sum = 0.0;
    for (int tm = -tj; tm <= tj; tm += 2) {
        sum += incomplete_beta_half(0.5 * (copies + 1 - tm), 0.5 * (copies + 1 + tm));
        sum -= 2.0 * incomplete_beta_half(0.5 * (copies - tm) + 1.0, 0.5 * (copies + tm) + 1.0);
    }
    return 2.0 / ((std::numbers::pi - 2.0) * (tj + 1)) * sum;
}

double me_universal(int n, int m, PurityPrior prior) {
    return mixed::me_mixed(n, m, CoeffSource::prior(prior));
}

}  // namespace progdisc::universal
