#pragma once

#include <compare>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace progdisc {

/// Angular momentum stored as a doubled integer (2j), so that half-integer
/// values never touch floating point and parity checks are plain integer
/// arithmetic.
class HalfInt {
public:
    constexpr HalfInt() = default;

    /// Builds j from its doubled value 2j. Negative values are rejected.
    static constexpr HalfInt from_twice(int twice) {
        if (twice < 0) throw std::invalid_argument("HalfInt: 2j must be >= 0");
        return HalfInt(twice);
    }

    /// Builds an integer spin j (so 2j = 2*j).
    static constexpr HalfInt whole(int j) { return from_twice(2 * j); }

    constexpr int twice() const { return twice_; }
    constexpr bool integral() const { return twice_ % 2 == 0; }
    constexpr double value() const { return twice_ / 2.0; }

    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

private:
    constexpr explicit HalfInt(int twice) : twice_(twice) {}
    int twice_ = 0;
};

/// Triangle condition including the integer-sum parity rule:
/// |2a-2b| <= 2c <= 2a+2b and 2a+2b+2c even.
constexpr bool triangle(HalfInt a, HalfInt b, HalfInt c) {
    const int ta = a.twice(), tb = b.twice(), tc = c.twice();
    return std::abs(ta - tb) <= tc && tc <= ta + tb && (ta + tb + tc) % 2 == 0;
}

}  // namespace progdisc

template <>
struct std::hash<progdisc::HalfInt> {
    std::size_t operator()(progdisc::HalfInt j) const noexcept {
        return std::hash<int>{}(j.twice());
    }
};
