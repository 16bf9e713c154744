#include "progdisc/angular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace progdisc::angular {

namespace {

// Exponent of prime p in n! (Legendre's formula).
long long prime_exponent_in_factorial(int n, int p) {
    long long e = 0;
    while (n > 0) {
        n /= p;
        e += n;
    }
    return e;
}

const std::vector<int>& sieve_primes() {
    static const std::vector<int> primes = [] {
        std::vector<bool> composite(kFactorialCap + 1, false);
        std::vector<int> ps;
        for (int p = 2; p <= kFactorialCap; ++p) {
            if (composite[p]) continue;
            ps.push_back(p);
            for (long long q = 1LL * p * p; q <= kFactorialCap; q += p)
                composite[static_cast<int>(q)] = true;
        }
        return ps;
    }();
    return primes;
}

// Accumulates a product of factorials as a prime-exponent vector, so that the
// square root of the product can be split exactly into a rational part and a
// squarefree radicand without factoring any big integer.
class FactoredProduct {
public:
    void mul_factorial(int n, int count = 1) {
        if (n < 0) throw std::domain_error("factored factorial of negative argument");
        if (n > kFactorialCap) throw std::domain_error("factorial cap exceeded in 6-j prefactor");
        largest_ = std::max(largest_, n);
        exps_.push_back({n, count});
    }

    // sqrt of the accumulated product: coef * sqrt(radicand).
    ExactRational sqrt() const {
        std::map<int, long long> by_prime;
        for (int p : sieve_primes()) {
            if (p > largest_) break;
            long long e = 0;
            for (const auto& [n, count] : exps_) e += count * prime_exponent_in_factorial(n, p);
            if (e != 0) by_prime[p] = e;
        }
        BigRational coef(1);
        BigInt radicand(1);
        for (const auto& [p, e] : by_prime) {
            long long half = e >= 0 ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
            const BigInt pw = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(std::abs(half)));
            if (half >= 0)
                coef *= pw;
            else
                coef /= pw;
            if (((e % 2) + 2) % 2 == 1) radicand *= p;  // odd exponents land in the radicand
        }
        return ExactRational::make(std::move(coef), std::move(radicand));
    }

private:
    std::vector<std::pair<int, int>> exps_;  // (factorial argument, multiplicity)
    int largest_ = 0;
};

bool triad_ok(int t1, int t2, int t3) {
    return std::abs(t1 - t2) <= t3 && t3 <= t1 + t2 && (t1 + t2 + t3) % 2 == 0;
}

// Racah sum for the 6-j symbol. All arguments are doubled (2j); triads have
// already been validated, so every factorial argument below is a
// non-negative integer.
ExactRational racah(int a, int b, int c, int d, int e, int f) {
    //   T1..T4: triad sums, Q1..Q3: pair sums (in true units).
    const int T1 = (a + b + c) / 2;
    const int T2 = (a + e + f) / 2;
    const int T3 = (d + b + f) / 2;
    const int T4 = (d + e + c) / 2;
    const int Q1 = (a + b + d + e) / 2;
    const int Q2 = (b + c + e + f) / 2;
    const int Q3 = (a + c + d + f) / 2;

    const int t_min = std::max({T1, T2, T3, T4});
    const int t_max = std::min({Q1, Q2, Q3});
    if (t_min > t_max) return ExactRational::zero();

    // Triangle prefactor Delta(T1)Delta(T2)Delta(T3)Delta(T4) where
    // Delta(abc)^2 = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!.
    FactoredProduct pref;
    const auto add_delta = [&](int x, int y, int z) {
        pref.mul_factorial((x + y - z) / 2);
        pref.mul_factorial((x - y + z) / 2);
        pref.mul_factorial((-x + y + z) / 2);
        pref.mul_factorial((x + y + z) / 2 + 1, -1);
    };
    add_delta(a, b, c);
    add_delta(a, e, f);
    add_delta(d, b, f);
    add_delta(d, e, c);

    // First term of the alternating sum, then a rational recurrence in t.
    BigRational term(factorial(t_min + 1));
    term /= factorial(t_min - T1);
    term /= factorial(t_min - T2);
    term /= factorial(t_min - T3);
    term /= factorial(t_min - T4);
    term /= factorial(Q1 - t_min);
    term /= factorial(Q2 - t_min);
    term /= factorial(Q3 - t_min);
    if (t_min % 2 != 0) term = -term;

    BigRational sum = term;
    for (int t = t_min; t < t_max; ++t) {
        BigRational ratio(-BigInt(t + 2) * (Q1 - t) * (Q2 - t) * (Q3 - t),
                          BigInt(t + 1 - T1) * (t + 1 - T2) * (t + 1 - T3) * (t + 1 - T4));
        term *= ratio;
        sum += term;
    }
    if (sum == 0) return ExactRational::zero();
    return pref.sqrt() * ExactRational::from(sum);
}

using Key6j = std::array<int, 6>;

struct Key6jHash {
    std::size_t operator()(const Key6j& k) const noexcept {
        std::size_t h = 0;
        for (int v : k) h = h * 1000003u + static_cast<std::size_t>(v + 1);
        return h;
    }
};

// Canonical representative under the 24 classical 6-j symmetries: any column
// permutation, and swapping upper and lower rows in any two columns.
Key6j canonical_key(const Key6j& in) {
    static constexpr int col_perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    static constexpr int flip_masks[4] = {0b000, 0b011, 0b101, 0b110};
    Key6j best{};
    bool first = true;
    for (const auto& perm : col_perms) {
        for (int mask : flip_masks) {
            Key6j k{};
            for (int c = 0; c < 3; ++c) {
                const int src = perm[c];
                const bool flip = (mask >> c) & 1;
                k[c] = flip ? in[src + 3] : in[src];
                k[c + 3] = flip ? in[src] : in[src + 3];
            }
            if (first || k < best) {
                best = k;
                first = false;
            }
        }
    }
    return best;
}

std::mutex g_cache_mutex;
std::unordered_map<Key6j, double, Key6jHash> g_6j_cache;

}  // namespace

ExactRational wigner6j(HalfInt j1, HalfInt j2, HalfInt j3,
                       HalfInt j4, HalfInt j5, HalfInt j6) {
    const int a = j1.twice(), b = j2.twice(), c = j3.twice();
    const int d = j4.twice(), e = j5.twice(), f = j6.twice();
    if (!triad_ok(a, b, c) || !triad_ok(a, e, f) || !triad_ok(d, b, f) || !triad_ok(d, e, c))
        return ExactRational::zero();
    return racah(a, b, c, d, e, f);
}

namespace {

double wigner6j_cached(HalfInt j1, HalfInt j2, HalfInt j3,
                       HalfInt j4, HalfInt j5, HalfInt j6) {
    const Key6j key = canonical_key(
        {j1.twice(), j2.twice(), j3.twice(), j4.twice(), j5.twice(), j6.twice()});
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_6j_cache.find(key);
        if (it != g_6j_cache.end()) return it->second;
    }
    const double value = wigner6j(j1, j2, j3, j4, j5, j6).to_double();
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_6j_cache.emplace(key, value);
    return value;
}

bool overlap_couplings_ok(HalfInt ja, HalfInt jb, HalfInt jc,
                          HalfInt jab, HalfInt jbc, HalfInt j_total) {
    return triangle(ja, jb, jab) && triangle(jb, jc, jbc) &&
           triangle(jab, jc, j_total) && triangle(ja, jbc, j_total);
}

}  // namespace

ExactRational jordan_overlap(HalfInt ja, HalfInt jb, HalfInt jc,
                             HalfInt jab, HalfInt jbc, HalfInt j_total) {
    if (!overlap_couplings_ok(ja, jb, jc, jab, jbc, j_total)) return ExactRational::zero();
    // (-1)^(jA+jB+jC+J) sqrt((2jAB+1)(2jBC+1)) {jA jB jAB; jC J jBC}
    const int phase_twice = ja.twice() + jb.twice() + jc.twice() + j_total.twice();
    const int sign = (phase_twice / 2) % 2 == 0 ? 1 : -1;
    const BigInt dims = BigInt(jab.twice() + 1) * (jbc.twice() + 1);
    return ExactRational::make(BigRational(sign), dims) *
           wigner6j(ja, jb, jab, jc, j_total, jbc);
}

double jordan_overlap_d(HalfInt ja, HalfInt jb, HalfInt jc,
                        HalfInt jab, HalfInt jbc, HalfInt j_total) {
    if (!overlap_couplings_ok(ja, jb, jc, jab, jbc, j_total)) return 0.0;
    const int phase_twice = ja.twice() + jb.twice() + jc.twice() + j_total.twice();
    const double sign = (phase_twice / 2) % 2 == 0 ? 1.0 : -1.0;
    const double dims = std::sqrt(static_cast<double>(jab.twice() + 1) *
                                  static_cast<double>(jbc.twice() + 1));
    return sign * dims * wigner6j_cached(ja, jb, jab, jc, j_total, jbc);
}

ExactRational symmetric_overlap(int n, int m, int k) {
    if (n < 1 || m < 1) throw std::invalid_argument("symmetric_overlap: n, m must be >= 1");
    if (k < 0 || k > n) throw std::invalid_argument("symmetric_overlap: k out of [0, n]");
    return ExactRational::from(BigRational(binomial(n, k), binomial(n + m, n - k)));
}

BigInt multiplicity(int n, HalfInt j) {
    if (n < 0) throw std::invalid_argument("multiplicity: n must be >= 0");
    const int tj = j.twice();
    if (tj > n || (n - tj) % 2 != 0) return BigInt(0);
    // binom(n, n/2-j) * (2j+1) / (n/2+j+1); the division is exact.
    return binomial(n, (n - tj) / 2) * (tj + 1) / ((n + tj) / 2 + 1);
}

}  // namespace progdisc::angular
