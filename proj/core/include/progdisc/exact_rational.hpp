#pragma once

#include <map>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace progdisc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Largest factorial argument the exact layer will evaluate. Chosen as
/// 4 * 512 so that every supported port load (total copies <= 512) stays
/// inside the table; beyond it the exact routines throw.
inline constexpr int kFactorialCap = 2048;

/// n! as a big integer, memoized. Throws std::domain_error past kFactorialCap.
const BigInt& factorial(int n);

/// Exact binomial coefficient. Zero for k outside [0, n].
BigInt binomial(int n, int k);

/// Rounds a big rational through a 50-digit float so that ratios whose
/// numerator and denominator both overflow double still convert correctly.
double to_double(const BigRational& q);

/// Value of the form coef * sqrt(radicand) with coef an exact rational and
/// radicand a squarefree positive integer. This is closed under products and
/// quotients, which is exactly what recoupling coefficients need: they are
/// single square roots of rationals times rationals. Sums are only defined
/// between commensurable radicals (same radicand); anything else throws, and
/// callers that need general sums keep a RadicalSum instead.
class ExactRational {
public:
    ExactRational() : coef_(0), radicand_(1) {}

    static ExactRational zero() { return ExactRational(); }
    static ExactRational from(BigRational q) {
        return ExactRational(std::move(q), 1);
    }
    static ExactRational from_int(long long v) {
        return ExactRational(BigRational(v), 1);
    }
    /// sign(coef) * |coef| * sqrt(radicand); extracts square factors from
    /// radicand (valid while its prime factors stay below the internal sieve).
    static ExactRational make(BigRational coef, BigInt radicand);
    /// Exact square root of a non-negative rational.
    static ExactRational sqrt_of(const BigRational& q);

    const BigRational& coef() const { return coef_; }
    const BigInt& radicand() const { return radicand_; }

    bool is_zero() const { return coef_ == 0; }
    bool is_rational() const { return radicand_ == 1; }
    /// The exact rational value; throws if an irreducible radical remains.
    const BigRational& rational() const;

    double to_double() const;

    ExactRational operator-() const;
    ExactRational& operator*=(const ExactRational& o);
    ExactRational& operator/=(const ExactRational& o);
    ExactRational& operator+=(const ExactRational& o);
    ExactRational& operator-=(const ExactRational& o);

    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.coef_ == b.coef_ && a.radicand_ == b.radicand_;
    }

private:
    ExactRational(BigRational coef, BigInt radicand)
        : coef_(std::move(coef)), radicand_(std::move(radicand)) {
        if (coef_ == 0) radicand_ = 1;
    }

    BigRational coef_;
    BigInt radicand_;  // squarefree, >= 1
};

/// A finite sum of incommensurable radicals, grouped by radicand. Lets tests
/// and the asymmetric closed forms do exact arithmetic on expressions like
/// a + b*sqrt(2) + c*sqrt(6), and in particular detect when such a sum
/// collapses to a plain rational.
class RadicalSum {
public:
    RadicalSum() = default;

    void add(const ExactRational& term);
    void add_rational(const BigRational& q);

    bool is_rational() const;
    /// Rational value of the sum; throws if radical parts survive.
    BigRational rational() const;
    double to_double() const;
    std::size_t term_count() const { return parts_.size(); }

private:
    std::map<BigInt, BigRational> parts_;  // radicand -> coefficient
};

}  // namespace progdisc
