#pragma once

#include <stdexcept>
#include <vector>

#include "progdisc/half_int.hpp"

namespace progdisc::mixed {

/// Per-block weight C_j^N of a sphere-averaged N-copy state: one row of
/// coefficients per total copy count, indexed by the block spin j.
/// (2j+1) * C_j^N is the trace captured by a single spin-j block.
class CoeffTable {
public:
    CoeffTable(int copies, std::vector<double> weights);

    int copies() const { return copies_; }
    HalfInt min_j() const { return HalfInt::from_twice(copies_ % 2); }
    HalfInt max_j() const { return HalfInt::from_twice(copies_); }

    double at(HalfInt j) const {
        const int tj = j.twice();
        if (tj > copies_ || (copies_ - tj) % 2 != 0)
            throw std::invalid_argument("CoeffTable: spin outside the table");
        return weights_[(tj - copies_ % 2) / 2];
    }

private:
    int copies_;
    std::vector<double> weights_;
};

/// C_j^N for fixed purity r, evaluated by the positive-term sum
/// ((1-r^2)/4)^(N/2-j) * sum_k ((1-r)/2)^(j-k) ((1+r)/2)^(j+k) / (2j+1),
/// which is stable for every r in [0,1] including both endpoints.
double coeff(int copies, HalfInt j, double r);

CoeffTable coeff_table(int copies, double r);

}  // namespace progdisc::mixed

namespace progdisc::universal {

enum class PurityPrior { HardSphere, Bures, Chernoff };

/// Supplier of (possibly prior-averaged) C_j^N coefficients: either a fixed
/// purity r, or one of the three purity priors of the fully universal
/// machine. The two unknown states are averaged independently, so one table
/// per copy count is all the block engine needs.
class CoeffSource {
public:
    static CoeffSource fixed_purity(double r);
    static CoeffSource prior(PurityPrior p);

    double coeff(int copies, HalfInt j) const;
    mixed::CoeffTable table(int copies) const;

    bool is_fixed_purity() const { return fixed_; }
    double purity() const;
    PurityPrior prior_kind() const;

private:
    CoeffSource(bool fixed, double r, PurityPrior p) : fixed_(fixed), r_(r), prior_(p) {}
    bool fixed_;
    double r_;
    PurityPrior prior_;
};

}  // namespace progdisc::universal
