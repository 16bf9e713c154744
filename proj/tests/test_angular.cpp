#include "doctest.h"

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "progdisc/angular.hpp"

using namespace progdisc;
using namespace progdisc::angular;

namespace {
HalfInt ht(int twice) { return HalfInt::from_twice(twice); }
}  // namespace

TEST_CASE("wigner6j special value {1 1 1; 0 1 1} = -1/3") {
    const auto v = wigner6j(ht(2), ht(2), ht(2), ht(0), ht(2), ht(2));
    REQUIRE(v.is_rational());
    CHECK(v.rational() == BigRational(-1, 3));
}

TEST_CASE("wigner6j triangle and parity violations give exact zero") {
    // j3 outside |j1-j2|..j1+j2
    CHECK(wigner6j(ht(1), ht(1), ht(6), ht(1), ht(1), ht(2)).is_zero());
    // parity violation: j1+j2+j3 half-integer
    CHECK(wigner6j(ht(1), ht(1), ht(1), ht(1), ht(1), ht(1)).is_zero());
    CHECK(wigner6j(ht(2), ht(2), ht(5), ht(2), ht(2), ht(2)).is_zero());
}

TEST_CASE("wigner6j selection rules: every forbidden input is exactly zero") {
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
            for (int c = 0; c <= 5; ++c)
                for (int d = 0; d <= 5; ++d)
                    for (int e = 0; e <= 5; ++e)
                        for (int f = 0; f <= 5; ++f) {
                            const auto tri = [](int x, int y, int z) {
                                return std::abs(x - y) <= z && z <= x + y && (x + y + z) % 2 == 0;
                            };
                            if (tri(a, b, c) && tri(a, e, f) && tri(d, b, f) && tri(d, e, c))
                                continue;
                            CHECK(wigner6j(ht(a), ht(b), ht(c), ht(d), ht(e), ht(f)).is_zero());
                        }
}

TEST_CASE("wigner6j symmetry under column permutation and row swaps") {
    const auto ref = wigner6j(ht(1), ht(3), ht(2), ht(5), ht(4), ht(6));
    CHECK(wigner6j(ht(3), ht(1), ht(2), ht(4), ht(5), ht(6)) == ref);
    CHECK(wigner6j(ht(2), ht(3), ht(1), ht(6), ht(4), ht(5)) == ref);
    CHECK(wigner6j(ht(5), ht(4), ht(2), ht(1), ht(3), ht(6)) == ref);
    CHECK(wigner6j(ht(1), ht(4), ht(6), ht(5), ht(3), ht(2)) == ref);
}

// Orthogonality relation, as an exact statement over grouped radicals:
// sum_x (2x+1)(2j3+1) {j1 j2 x; j4 j5 j3}{j1 j2 x; j4 j5 j3'} = delta_{j3 j3'}.
TEST_CASE("wigner6j orthogonality sums are exact for all quads with 2j <= 12") {
    constexpr int max_twice = 12;
    int quads_checked = 0;
    for (int a = 0; a <= max_twice; ++a)
        for (int b = 0; b <= max_twice; ++b)
            for (int d = 0; d <= max_twice; ++d)
                for (int e = 0; e <= max_twice; ++e) {
                    // Dedupe over the relation's own symmetries:
                    // (a,b,d,e) ~ (b,a,e,d) ~ (d,e,a,b) ~ (e,d,b,a).
                    const std::array<int, 4> key{a, b, d, e};
                    const std::array<int, 4> alts[3] = {{b, a, e, d}, {d, e, a, b}, {e, d, b, a}};
                    bool canonical = true;
                    for (const auto& alt : alts)
                        if (alt < key) canonical = false;
                    if (!canonical) continue;

                    // j3 couples (j1,j5) and (j4,j2); x couples (j1,j2) and (j4,j5).
                    std::vector<int> j3s, xs;
                    for (int t = std::max(std::abs(a - e), std::abs(d - b));
                         t <= std::min(a + e, d + b); t += 2)
                        if ((a + e + t) % 2 == 0 && (d + b + t) % 2 == 0) j3s.push_back(t);
                    for (int t = std::max(std::abs(a - b), std::abs(d - e));
                         t <= std::min(a + b, d + e); t += 2)
                        if ((a + b + t) % 2 == 0 && (d + e + t) % 2 == 0) xs.push_back(t);
                    if (j3s.empty() || xs.empty()) continue;

                    // Evaluate each needed symbol once.
                    std::map<std::pair<int, int>, ExactRational> sym;  // (x, j3)
                    for (int x : xs)
                        for (int j3 : j3s)
                            sym[{x, j3}] =
                                wigner6j(ht(a), ht(b), ht(x), ht(d), ht(e), ht(j3));

                    for (int j3 : j3s)
                        for (int j3p : j3s) {
                            RadicalSum sum;
                            for (int x : xs) {
                                auto prod = sym[{x, j3}] * sym[{x, j3p}];
                                prod *= ExactRational::from_int((x + 1) * (j3 + 1));
                                sum.add(prod);
                            }
                            REQUIRE(sum.is_rational());
                            CHECK(sum.rational() == BigRational(j3 == j3p ? 1 : 0));
                        }
                    ++quads_checked;
                }
    CHECK(quads_checked > 100);
}

TEST_CASE("jordan_overlap worked one-copy values") {
    // jA=jB=jC=1/2, jAB=jBC=1.
    const auto top = jordan_overlap(ht(1), ht(1), ht(1), ht(2), ht(2), ht(3));
    REQUIRE(top.is_rational());
    CHECK(top.rational() == BigRational(1));

    const auto low = jordan_overlap(ht(1), ht(1), ht(1), ht(2), ht(2), ht(1));
    REQUIRE(low.is_rational());
    CHECK(low.rational() == BigRational(1, 2));
}

TEST_CASE("jordan_overlap vanishes when couplings fail") {
    CHECK(jordan_overlap(ht(1), ht(1), ht(1), ht(6), ht(2), ht(1)).is_zero());
    CHECK(jordan_overlap(ht(1), ht(1), ht(1), ht(2), ht(2), ht(7)).is_zero());
}

TEST_CASE("symmetric_overlap closed form against the full 6-j evaluation") {
    const int n = 3, m = 2;
    for (int k = 0; k <= n; ++k) {
        const auto closed = symmetric_overlap(n, m, k);
        const auto full = jordan_overlap(ht(n), ht(m), ht(n),
                                         ht(n + m), ht(n + m), ht(m + 2 * k));
        REQUIRE(full.is_rational());
        CHECK(closed.rational() == full.rational());
    }
}

TEST_CASE("symmetric_overlap basic values and monotonicity") {
    CHECK(symmetric_overlap(1, 1, 1).rational() == BigRational(1));
    CHECK(symmetric_overlap(1, 1, 0).rational() == BigRational(1, 2));
    for (int n : {2, 5, 17, 40}) {
        for (int m : {1, 3, 12, 40}) {
            BigRational prev(-1);
            for (int k = 0; k <= n; ++k) {
                const auto v = symmetric_overlap(n, m, k).rational();
                CHECK(v > prev);
                prev = v;
            }
            CHECK(prev == BigRational(1));  // k = n is the symmetric subspace
        }
    }
    CHECK_THROWS_AS(symmetric_overlap(3, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_overlap(3, 2, -1), std::invalid_argument);
}

TEST_CASE("multiplicity values and Hilbert-space dimension identity") {
    CHECK(multiplicity(1, ht(1)) == 1);
    CHECK(multiplicity(3, ht(1)) == 2);
    CHECK(multiplicity(4, ht(1)) == 0);   // parity mismatch
    CHECK(multiplicity(2, ht(6)) == 0);   // 2j > n
    for (int n = 1; n <= 30; ++n) {
        BigInt total = 0;
        for (int tj = n % 2; tj <= n; tj += 2) total += multiplicity(n, ht(tj)) * (tj + 1);
        CHECK(total == boost::multiprecision::pow(BigInt(2), n));
    }
}

TEST_CASE("jordan_overlap_d agrees with the exact value") {
    for (int twice_j = 1; twice_j <= 5; twice_j += 2) {
        for (int tab = 0; tab <= 2 * twice_j; tab += 2)
            for (int tbc = 0; tbc <= 2 * twice_j; tbc += 2)
                for (int tJ = 1; tJ <= 3 * twice_j; tJ += 2) {
                    const auto exact = jordan_overlap(ht(twice_j), ht(twice_j), ht(twice_j),
                                                      ht(tab), ht(tbc), ht(tJ));
                    const double fast = jordan_overlap_d(ht(twice_j), ht(twice_j), ht(twice_j),
                                                         ht(tab), ht(tbc), ht(tJ));
                    CHECK(std::abs(exact.to_double() - fast) < 1e-14);
                }
    }
}
