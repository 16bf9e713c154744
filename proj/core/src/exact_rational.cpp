#include "progdisc/exact_rational.hpp"

#include <deque>
#include <mutex>
#include <vector>

#include <boost/integer/common_factor.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace progdisc {

namespace {

// Primes up to 4096: enough to factor every factorial below kFactorialCap and
// every (2j+1) dimension factor that can appear under a square root.
const std::vector<int>& small_primes() {
    static const std::vector<int> primes = [] {
        constexpr int limit = 4096;
        std::vector<bool> composite(limit + 1, false);
        std::vector<int> ps;
        for (int p = 2; p <= limit; ++p) {
            if (composite[p]) continue;
            ps.push_back(p);
            for (long long q = 1LL * p * p; q <= limit; q += p) composite[static_cast<int>(q)] = true;
        }
        return ps;
    }();
    return primes;
}

// deque: growing the table must not invalidate references already handed out.
std::mutex g_factorial_mutex;
std::deque<BigInt> g_factorials = {BigInt(1)};

}  // namespace

const BigInt& factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    if (n > kFactorialCap)
        throw std::domain_error("factorial: argument exceeds supported cap of " +
                                std::to_string(kFactorialCap) +
                                " (total copies above 512 are not supported exactly)");
    std::lock_guard<std::mutex> lock(g_factorial_mutex);
    while (static_cast<int>(g_factorials.size()) <= n) {
        g_factorials.push_back(g_factorials.back() * static_cast<int>(g_factorials.size()));
    }
    return g_factorials[n];
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt den = factorial(k);
    den *= factorial(n - k);
    return factorial(n) / den;
}

double to_double(const BigRational& q) {
    using bf50 = boost::multiprecision::cpp_bin_float_50;
    return static_cast<double>(static_cast<bf50>(q));
}

ExactRational ExactRational::make(BigRational coef, BigInt radicand) {
    if (radicand < 0) throw std::domain_error("ExactRational: negative radicand");
    if (radicand == 0 || coef == 0) return zero();
    // Pull square factors out of the radicand into the rational coefficient.
    BigInt squarefree = 1;
    for (int p : small_primes()) {
        if (radicand == 1) break;
        int e = 0;
        while (radicand % p == 0) {
            radicand /= p;
            ++e;
        }
        if (e / 2 > 0) coef *= boost::multiprecision::pow(BigInt(p), e / 2);
        if (e % 2 != 0) squarefree *= p;
    }
    if (radicand != 1) {
        // Leftover cofactor beyond the sieve: keep it if squarefree-looking,
        // but fold perfect squares.
        BigInt root = boost::multiprecision::sqrt(radicand);
        if (root * root == radicand) {
            coef *= root;
        } else {
            squarefree *= radicand;
        }
    }
    return ExactRational(std::move(coef), std::move(squarefree));
}

ExactRational ExactRational::sqrt_of(const BigRational& q) {
    if (q < 0) throw std::domain_error("ExactRational::sqrt_of: negative argument");
    if (q == 0) return zero();
    // sqrt(p/q) = sqrt(p*q)/q
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    return make(BigRational(1, den), num * den);
}

const BigRational& ExactRational::rational() const {
    if (!is_rational())
        throw std::domain_error("ExactRational: irrational value has no rational form");
    return coef_;
}

double ExactRational::to_double() const {
    double c = progdisc::to_double(coef_);
    if (radicand_ == 1) return c;
    using bf50 = boost::multiprecision::cpp_bin_float_50;
    const bf50 root = sqrt(static_cast<bf50>(radicand_));
    return static_cast<double>(static_cast<bf50>(coef_) * root);
}

ExactRational ExactRational::operator-() const {
    return ExactRational(-coef_, radicand_);
}

ExactRational& ExactRational::operator*=(const ExactRational& o) {
    if (is_zero() || o.is_zero()) return *this = zero();
    // Both radicands squarefree: D1*D2 = g^2 * (D1/g)*(D2/g) with coprime
    // squarefree quotients, so the product stays squarefree after pulling g.
    const BigInt g = boost::integer::gcd(radicand_, o.radicand_);
    coef_ *= o.coef_;
    coef_ *= g;
    radicand_ = (radicand_ / g) * (o.radicand_ / g);
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.is_zero()) throw std::domain_error("ExactRational: division by zero");
    // 1/sqrt(D) = sqrt(D)/D
    ExactRational inv(BigRational(1) / (o.coef_ * o.radicand_), o.radicand_);
    return *this *= inv;
}

ExactRational& ExactRational::operator+=(const ExactRational& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (radicand_ != o.radicand_)
        throw std::domain_error("ExactRational: sum of incommensurable radicals (use RadicalSum)");
    coef_ += o.coef_;
    if (coef_ == 0) *this = zero();
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& o) {
    return *this += -o;
}

void RadicalSum::add(const ExactRational& term) {
    if (term.is_zero()) return;
    auto [it, inserted] = parts_.try_emplace(term.radicand(), term.coef());
    if (!inserted) {
        it->second += term.coef();
        if (it->second == 0) parts_.erase(it);
    }
}

void RadicalSum::add_rational(const BigRational& q) {
    add(ExactRational::from(q));
}

bool RadicalSum::is_rational() const {
    return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first == 1);
}

BigRational RadicalSum::rational() const {
    if (parts_.empty()) return BigRational(0);
    if (!is_rational())
        throw std::domain_error("RadicalSum: irrational sum has no rational form");
    return parts_.begin()->second;
}

double RadicalSum::to_double() const {
    double total = 0.0;
    for (const auto& [radicand, coef] : parts_) {
        total += ExactRational::make(coef, radicand).to_double();
    }
    return total;
}

}  // namespace progdisc
