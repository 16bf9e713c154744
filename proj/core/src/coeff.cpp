#include "progdisc/coeff.hpp"

#include <cmath>

#include "progdisc/universal.hpp"

namespace progdisc::mixed {

CoeffTable::CoeffTable(int copies, std::vector<double> weights)
    : copies_(copies), weights_(std::move(weights)) {
    if (copies_ < 1) throw std::invalid_argument("CoeffTable: copies must be >= 1");
    if (weights_.size() != static_cast<std::size_t>(copies_ / 2 + 1))
        throw std::invalid_argument("CoeffTable: wrong number of spin entries");
    for (double w : weights_)
        if (!(w >= 0.0)) throw std::invalid_argument("CoeffTable: negative coefficient");
}

double coeff(int copies, HalfInt j, double r) {
    if (r < 0.0 || r > 1.0) throw std::invalid_argument("coeff: purity outside [0,1]");
    const int tj = j.twice();
    if (tj > copies || (copies - tj) % 2 != 0) return 0.0;

    const double lo = 0.5 * (1.0 - r);
    const double hi = 0.5 * (1.0 + r);
    // t_j = sum of lo^(2j-i) hi^i for i = 0..2j; all terms positive, and the
    // exact zeros at r = 1 fall out of the power ladder by themselves.
    std::vector<double> plo(tj + 1), phi(tj + 1);
    plo[0] = phi[0] = 1.0;
    for (int i = 1; i <= tj; ++i) {
        plo[i] = plo[i - 1] * lo;
        phi[i] = phi[i - 1] * hi;
    }
    double t = 0.0;
    for (int i = 0; i <= tj; ++i) t += plo[tj - i] * phi[i];

    const double q = lo * hi;  // (1-r^2)/4
    double singlet_factor = 1.0;
    for (int i = 0; i < (copies - tj) / 2; ++i) singlet_factor *= q;
    return singlet_factor * t / (tj + 1);
}

CoeffTable coeff_table(int copies, double r) {
    std::vector<double> weights;
    weights.reserve(copies / 2 + 1);
    for (int tj = copies % 2; tj <= copies; tj += 2)
        weights.push_back(coeff(copies, HalfInt::from_twice(tj), r));
    return CoeffTable(copies, std::move(weights));
}

}  // namespace progdisc::mixed

namespace progdisc::universal {

CoeffSource CoeffSource::fixed_purity(double r) {
    if (r < 0.0 || r > 1.0) throw std::invalid_argument("CoeffSource: purity outside [0,1]");
    return CoeffSource(true, r, PurityPrior::HardSphere);
}

CoeffSource CoeffSource::prior(PurityPrior p) {
    return CoeffSource(false, 0.0, p);
}

double CoeffSource::purity() const {
    if (!fixed_) throw std::logic_error("CoeffSource: prior-averaged source has no purity");
    return r_;
}

PurityPrior CoeffSource::prior_kind() const {
    if (fixed_) throw std::logic_error("CoeffSource: fixed-purity source has no prior");
    return prior_;
}

double CoeffSource::coeff(int copies, HalfInt j) const {
    if (fixed_) return mixed::coeff(copies, j, r_);
    switch (prior_) {
        case PurityPrior::HardSphere: return avg_coeff_hard_sphere(copies, j);
        case PurityPrior::Bures: return avg_coeff_bures(copies, j);
        case PurityPrior::Chernoff: return avg_coeff_chernoff(copies, j);
    }
    throw std::logic_error("CoeffSource: unknown prior");
}

mixed::CoeffTable CoeffSource::table(int copies) const {
    std::vector<double> weights;
    weights.reserve(copies / 2 + 1);
    for (int tj = copies % 2; tj <= copies; tj += 2)
        weights.push_back(coeff(copies, HalfInt::from_twice(tj)));
    return mixed::CoeffTable(copies, std::move(weights));
}

}  // namespace progdisc::universal
