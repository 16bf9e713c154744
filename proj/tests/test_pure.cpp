#include "doctest.h"

#include <cmath>

#include "progdisc/angular.hpp"
#include "progdisc/pure.hpp"

using namespace progdisc;
using namespace progdisc::pure;

namespace {

HalfInt ht(int twice) { return HalfInt::from_twice(twice); }

// Pairwise-optimum sum over J blocks, driven by pair_priors and the exact
// overlaps. Recomputes the asymmetric probabilities with no reference to the
// closed-form expressions.
double ua_from_blocks(const PortLoad& load) {
    const PortLoad l = load.canonical();
    double total = 0.0;
    for (int tj = l.j_min_sigma1().twice(); tj <= l.j_max().twice(); tj += 2) {
        const auto pp = pair_priors(l, ht(tj));
        const double c = std::abs(
            angular::jordan_overlap(ht(l.n_a), ht(l.n_b), ht(l.n_c),
                                    ht(l.n_a + l.n_b), ht(l.n_b + l.n_c), ht(tj))
                .to_double());
        const double p_inconclusive =
            tj == l.j_max().twice() ? 1.0 : 2.0 * std::sqrt(pp.prior1 * pp.prior2) * c;
        total += pp.block_weight * (tj + 1) * p_inconclusive;
    }
    return total;
}

double me_from_blocks(const PortLoad& load) {
    const PortLoad l = load.canonical();
    double total = 0.0;
    for (int tj = l.j_min_sigma1().twice(); tj <= l.j_max().twice(); tj += 2) {
        const auto pp = pair_priors(l, ht(tj));
        const double c = std::abs(
            angular::jordan_overlap(ht(l.n_a), ht(l.n_b), ht(l.n_c),
                                    ht(l.n_a + l.n_b), ht(l.n_b + l.n_c), ht(tj))
                .to_double());
        total += pp.block_weight * (tj + 1) * 0.5 *
                 (1.0 - std::sqrt(1.0 - 4.0 * pp.prior1 * pp.prior2 * c * c));
    }
    return total;
}

}  // namespace

TEST_CASE("ua_symmetric golden value and closed form") {
    CHECK(ua_symmetric_exact(1, 1) == BigRational(5, 6));
    CHECK(ua_symmetric(1, 1) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
    CHECK(ua_symmetric_exact(2, 2) == BigRational(1) - BigRational(4, 12));
}

TEST_CASE("ua_symmetric equals the explicit overlap sum exactly for n,m <= 40") {
    for (int n = 1; n <= 40; ++n)
        for (int m = 1; m <= 40; ++m) {
            BigRational sum(0);
            const BigRational norm(BigInt(n + m + 1) * (n + 1));
            for (int k = 0; k <= n; ++k)
                sum += BigRational(m + 2 * k + 1) *
                       angular::symmetric_overlap(n, m, k).rational() / norm;
            CHECK(sum == ua_symmetric_exact(n, m));
        }
}

TEST_CASE("me_symmetric golden value") {
    const double expected = 0.5 * (1.0 - 1.0 / (2.0 * std::sqrt(3.0)));
    CHECK(std::abs(me_symmetric(1, 1) - expected) < 1e-15);
}

TEST_CASE("me_symmetric decreases in both arguments for n,m <= 40") {
    for (int n = 1; n <= 40; ++n) {
        for (int m = 1; m <= 40; ++m) {
            const double v = me_symmetric(n, m);
            CHECK(v > 0.0);
            CHECK(v < 0.5);
            CHECK(me_symmetric(n + 1, m) < v);
            CHECK(me_symmetric(n, m + 1) < v);
        }
    }
}

TEST_CASE("asymmetric probabilities reduce exactly to the symmetric forms") {
    for (int n = 1; n <= 14; ++n)
        for (int m = 1; m <= 14; ++m) {
            const PortLoad load(n, m, n);
            const auto exact = ua_asymmetric_exact(load);
            REQUIRE(exact.is_rational());
            CHECK(exact.rational() == ua_symmetric_exact(n, m));
            CHECK(std::abs(me_asymmetric(load) - me_symmetric(n, m)) < 1e-13);
        }
}

TEST_CASE("asymmetric operations are invariant under program-port swap") {
    for (int na : {1, 2, 4, 7})
        for (int nb : {1, 3, 5})
            for (int nc : {1, 2, 3}) {
                const PortLoad a(na, nb, nc), b(nc, nb, na);
                CHECK(ua_asymmetric(a) == ua_asymmetric(b));
                CHECK(me_asymmetric(a) == me_asymmetric(b));
            }
}

TEST_CASE("asymmetric values match the pairwise-optimum block decomposition") {
    for (int na = 1; na <= 5; ++na)
        for (int nb = 1; nb <= 4; ++nb)
            for (int nc = 1; nc <= na; ++nc) {
                const PortLoad load(na, nb, nc);
                CHECK(std::abs(ua_asymmetric(load) - ua_from_blocks(load)) < 1e-12);
                CHECK(std::abs(me_asymmetric(load) - me_from_blocks(load)) < 1e-12);
            }
}

TEST_CASE("unequal state dimensions contribute a positive certainty term") {
    const PortLoad load(3, 1, 1);
    REQUIRE(load.d1() != load.d2());
    const double d1 = static_cast<double>(load.d1());
    const double d2 = static_cast<double>(load.d2());
    const double first = 0.5 * std::pow(1.0 / std::sqrt(d1) - 1.0 / std::sqrt(d2), 2) * load.d_abc();
    CHECK(first > 0.0);
    // and the total is the first term plus the overlap sum
    double tail = 0.0;
    for (int k = 0; k <= load.n_c; ++k) {
        const double c = std::abs(
            angular::jordan_overlap(ht(3), ht(1), ht(1), ht(4), ht(2), ht(3 + 2 * k)).to_double());
        tail += (3 + 2 * k + 1) * c / std::sqrt(d1 * d2);
    }
    CHECK(ua_asymmetric(load) == doctest::Approx(first + tail).epsilon(1e-13));
}

TEST_CASE("pair_priors structure") {
    const PortLoad load(3, 2, 1);
    // total probability over all blocks of both supports
    double total = 0.0;
    for (int tj = load.j_min_sigma2().twice(); tj <= load.j_max().twice(); tj += 2) {
        const auto pp = pair_priors(load, ht(tj));
        CHECK(pp.prior1 + pp.prior2 == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(pp.block_weight >= 0.0);
        total += pp.block_weight * (tj + 1);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
    // below the sigma1 support only hypothesis 2 remains
    const auto low = pair_priors(load, load.j_min_sigma2());
    CHECK(low.prior1 == 0.0);
    CHECK(low.prior2 == 1.0);
    CHECK_THROWS_AS(pair_priors(load, ht(load.j_max().twice() + 2)), std::invalid_argument);
}

TEST_CASE("PortLoad validation and canonicalization") {
    CHECK_THROWS_AS(PortLoad(0, 1, 1), std::invalid_argument);
    const PortLoad l = PortLoad(1, 2, 3).canonical();
    CHECK(l.n_a == 3);
    CHECK(l.n_c == 1);
    CHECK_THROWS_AS(ua_asymmetric(PortLoad(400, 100, 100)), std::domain_error);
}

TEST_CASE("large data-port loads stay on the ratio path") {
    // state-comparison regime; exercised harder in the acceptance suite
    CHECK(std::abs(ua_symmetric(3, 1000000) - 0.25) < 1e-5);
    CHECK(std::abs(me_symmetric(3, 1000000) - 0.125) < 1e-5);
}
