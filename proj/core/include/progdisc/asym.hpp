#pragma once

#include <optional>
#include <string_view>

namespace progdisc::asym {

/// Tags for the closed-form asymptotic formulas, used by the CLI dispatch.
/// Each tag fixes which of n, m, r it consumes.
enum class AsymptoticKind {
    UaProgramLimit,
    MeProgramLimit,
    MeProgramSubleading,
    UaDataLimit,
    MeDataLimit,
    MeSymmetric,
    MixedLeading,
    MixedSubleading,
    MixedGaussian,
    HighPurityFit,
};

/// zeta(x) = sum_{k>=0} (1 - sqrt(1 - x^k)) for 0 <= x < 1. The k=0 term is
/// exactly 1; later terms are evaluated as x^k / (1 + sqrt(1 - x^k)) to avoid
/// cancellation and the series is truncated below 1e-15.
double zeta(double x);

/// Inconclusive probability with infinitely many program copies: 2/(m+2).
double ua_program_limit(int m);

/// Minimum-error probability with infinitely many program copies:
/// 1/2 [1 - (sqrt(pi)/2) Gamma(1+1/m) / Gamma(3/2+1/m)].
double me_program_limit(int m);

/// Same with the 1/n correction: 1/2 - (sqrt(pi)/4) G(1+1/m)/G(3/2+1/m) (1-1/n).
double me_program_subleading(int m, int n);

/// Inconclusive probability with infinitely many data copies: 1/(n+1).
double ua_data_limit(int n);

/// Minimum-error probability with infinitely many data copies: 1/(2(n+1)).
double me_data_limit(int n);

/// Large-n behaviour of the fully symmetric machine: (3/(4n)) zeta(1/4).
double me_symmetric_asymptote(int n);

/// Mixed-state n x 1 x n leading term 1/2 - r/3 and its 1/(3nr) correction.
/// The correction blows up for purities of order 1/n; out-of-regime calls
/// return the formula value unclamped.
double mixed_leading(double r);
double mixed_subleading(int n, double r);

/// Low-purity Gaussian fit 1/2 exp(-n r^2 / (2 sqrt(3))).
double mixed_gaussian_fit(int n, double r);

/// High-purity fit (3/(4 n r^2)) zeta(1/4); diverges as r -> 0 by design.
double high_purity_fit(int n, double r);

/// Dispatch by tag; throws std::invalid_argument when a required parameter is
/// missing (extras are ignored).
double evaluate(AsymptoticKind kind, std::optional<int> n, std::optional<int> m,
                std::optional<double> r);

std::optional<AsymptoticKind> parse_kind(std::string_view name);
std::string_view kind_name(AsymptoticKind kind);

}  // namespace progdisc::asym
