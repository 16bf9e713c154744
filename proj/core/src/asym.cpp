#include "progdisc/asym.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace progdisc::asym {

namespace {

void require_positive(int v, const char* what) {
    if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

double gamma_ratio_bracket(int m) {
    // (sqrt(pi)/2) Gamma(1+1/m) / Gamma(3/2+1/m)
    const double inv = 1.0 / m;
    return 0.5 * std::sqrt(std::numbers::pi) *
           std::exp(std::lgamma(1.0 + inv) - std::lgamma(1.5 + inv));
}

}  // namespace

double zeta(double x) {
    if (x < 0.0 || x >= 1.0) throw std::invalid_argument("zeta: x must lie in [0,1)");
    double total = 1.0;  // k = 0
    double power = 1.0;
    for (int k = 1; k < 10000; ++k) {
        power *= x;
        const double term = power / (1.0 + std::sqrt(1.0 - power));
        total += term;
        if (term < 1e-15) break;
    }
    return total;
}

double ua_program_limit(int m) {
    require_positive(m, "m");
    return 2.0 / (m + 2.0);
}

double me_program_limit(int m) {
    require_positive(m, "m");
    return 0.5 * (1.0 - gamma_ratio_bracket(m));
}

double me_program_subleading(int m, int n) {
    require_positive(m, "m");
    require_positive(n, "n");
    return 0.5 - 0.5 * gamma_ratio_bracket(m) * (1.0 - 1.0 / n);
}

double ua_data_limit(int n) {
    require_positive(n, "n");
    return 1.0 / (n + 1.0);
}

double me_data_limit(int n) {
    require_positive(n, "n");
    return 0.5 / (n + 1.0);
}

double me_symmetric_asymptote(int n) {
    require_positive(n, "n");
    return 0.75 * zeta(0.25) / n;
}

double mixed_leading(double r) {
    return 0.5 - r / 3.0;
}

double mixed_subleading(int n, double r) {
    require_positive(n, "n");
    if (r <= 0.0) throw std::invalid_argument("mixed_subleading: r must be positive");
    return 0.5 - r / 3.0 + 1.0 / (3.0 * n * r);
}

double mixed_gaussian_fit(int n, double r) {
    require_positive(n, "n");
    return 0.5 * std::exp(-n * r * r / (2.0 * std::sqrt(3.0)));
}

double high_purity_fit(int n, double r) {
    require_positive(n, "n");
    return 0.75 * zeta(0.25) / (n * r * r);
}

double evaluate(AsymptoticKind kind, std::optional<int> n, std::optional<int> m,
                std::optional<double> r) {
    const auto need_n = [&] {
        if (!n) throw std::invalid_argument("this asymptotic kind requires --n");
        return *n;
    };
    const auto need_m = [&] {
        if (!m) throw std::invalid_argument("this asymptotic kind requires --m");
        return *m;
    };
    const auto need_r = [&] {
        if (!r) throw std::invalid_argument("this asymptotic kind requires --r");
        return *r;
    };
    switch (kind) {
        case AsymptoticKind::UaProgramLimit: return ua_program_limit(need_m());
        case AsymptoticKind::MeProgramLimit: return me_program_limit(need_m());
        case AsymptoticKind::MeProgramSubleading: return me_program_subleading(need_m(), need_n());
        case AsymptoticKind::UaDataLimit: return ua_data_limit(need_n());
        case AsymptoticKind::MeDataLimit: return me_data_limit(need_n());
        case AsymptoticKind::MeSymmetric: return me_symmetric_asymptote(need_n());
        case AsymptoticKind::MixedLeading: return mixed_leading(need_r());
        case AsymptoticKind::MixedSubleading: return mixed_subleading(need_n(), need_r());
        case AsymptoticKind::MixedGaussian: return mixed_gaussian_fit(need_n(), need_r());
        case AsymptoticKind::HighPurityFit: return high_purity_fit(need_n(), need_r());
    }
    throw std::invalid_argument("unknown asymptotic kind");
}

namespace {
constexpr std::array<std::pair<std::string_view, AsymptoticKind>, 10> kKindNames{{
    {"ua-program-limit", AsymptoticKind::UaProgramLimit},
    {"me-program-limit", AsymptoticKind::MeProgramLimit},
    {"me-program-subleading", AsymptoticKind::MeProgramSubleading},
    {"ua-data-limit", AsymptoticKind::UaDataLimit},
    {"me-data-limit", AsymptoticKind::MeDataLimit},
    {"me-symmetric", AsymptoticKind::MeSymmetric},
    {"mixed-leading", AsymptoticKind::MixedLeading},
    {"mixed-subleading", AsymptoticKind::MixedSubleading},
    {"mixed-gaussian", AsymptoticKind::MixedGaussian},
    {"high-purity-fit", AsymptoticKind::HighPurityFit},
}};
}  // namespace

std::optional<AsymptoticKind> parse_kind(std::string_view name) {
    for (const auto& [text, kind] : kKindNames)
        if (text == name) return kind;
    return std::nullopt;
}

std::string_view kind_name(AsymptoticKind kind) {
    for (const auto& [text, k] : kKindNames)
        if (k == kind) return text;
    return "?";
}

}  // namespace progdisc::asym
