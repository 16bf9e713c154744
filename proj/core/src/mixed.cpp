#include "progdisc/mixed.hpp"

#include <cmath>

#include "progdisc/angular.hpp"
#include "progdisc/exact_rational.hpp"

namespace progdisc::mixed {

namespace {

// Admissible intermediate couplings for one side of the block: the triangle
// range of the two coupled spins, cut down to those that can still reach J
// with the third spin. Descending order.
std::vector<HalfInt> couplings(HalfInt first, HalfInt second, HalfInt third, HalfInt j_total) {
    std::vector<HalfInt> out;
    const int lo = std::abs(first.twice() - second.twice());
    const int hi = first.twice() + second.twice();
    for (int t = hi; t >= lo; t -= 2) {
        const HalfInt mid = HalfInt::from_twice(t);
        if (triangle(mid, third, j_total)) out.push_back(mid);
    }
    return out;
}

}  // namespace

std::vector<std::pair<BlockLabel, double>> enumerate_blocks(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("enumerate_blocks: n, m must be >= 1");
    std::vector<std::pair<BlockLabel, double>> blocks;
    for (int ta = n % 2; ta <= n; ta += 2) {
        const double nu_a = to_double(BigRational(angular::multiplicity(n, HalfInt::from_twice(ta))));
        for (int tb = m % 2; tb <= m; tb += 2) {
            const double nu_b = to_double(BigRational(angular::multiplicity(m, HalfInt::from_twice(tb))));
            for (int tc = n % 2; tc <= n; tc += 2) {
                const double nu_c = to_double(BigRational(angular::multiplicity(n, HalfInt::from_twice(tc))));
                const int parity = (ta + tb + tc) % 2;
                for (int tj = parity; tj <= ta + tb + tc; tj += 2) {
                    const BlockLabel label{HalfInt::from_twice(ta), HalfInt::from_twice(tb),
                                           HalfInt::from_twice(tc), HalfInt::from_twice(tj)};
                    if (couplings(label.j_a, label.j_b, label.j_c, label.j_total).empty())
                        continue;
                    blocks.emplace_back(label, nu_a * nu_b * nu_c * (tj + 1));
                }
            }
        }
    }
    return blocks;
}

BlockProblem block_problem(const BlockLabel& label, const CoeffTable& program,
                           const CoeffTable& coupled) {
    BlockProblem problem;
    problem.labels_ab = couplings(label.j_a, label.j_b, label.j_c, label.j_total);
    problem.labels_bc = couplings(label.j_b, label.j_c, label.j_a, label.j_total);
    if (problem.labels_ab.size() != problem.labels_bc.size())
        throw std::logic_error("block_problem: coupling chains of unequal length");

    const Eigen::Index dim = static_cast<Eigen::Index>(problem.labels_ab.size());
    problem.sigma1_diag.resize(dim);
    problem.sigma2_diag.resize(dim);
    problem.lambda.resize(dim, dim);
    const double c_jc = program.at(label.j_c);
    const double c_ja = program.at(label.j_a);
    for (Eigen::Index i = 0; i < dim; ++i) {
        problem.sigma1_diag(i) = coupled.at(problem.labels_ab[i]) * c_jc;
        problem.sigma2_diag(i) = c_ja * coupled.at(problem.labels_bc[i]);
        for (Eigen::Index k = 0; k < dim; ++k)
            problem.lambda(i, k) =
                angular::jordan_overlap_d(label.j_a, label.j_b, label.j_c,
                                          problem.labels_ab[i], problem.labels_bc[k],
                                          label.j_total);
    }
    return problem;
}

double block_helstrom(const BlockProblem& problem) {
    const Eigen::Index dim = problem.sigma1_diag.size();
    if (dim == 1) {
        const double lam = problem.lambda(0, 0);
        return std::abs(problem.sigma1_diag(0) - lam * lam * problem.sigma2_diag(0));
    }
    Eigen::MatrixXd m = problem.lambda * problem.sigma2_diag.asDiagonal() *
                        problem.lambda.transpose();
    m = -m;
    m.diagonal() += problem.sigma1_diag;
    if (dim == 2) {
        const double tr = m(0, 0) + m(1, 1);
        const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
        return 0.5 * (std::abs(tr + disc) + std::abs(tr - disc));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum();
}

double me_mixed(int n, int m, const universal::CoeffSource& source) {
    const CoeffTable program = source.table(n);
    const CoeffTable coupled = source.table(n + m);
    double trace_norm = 0.0;
    for (const auto& [label, gamma] : enumerate_blocks(n, m)) {
        const BlockProblem problem = block_problem(label, program, coupled);
        if (problem.sigma1_diag.maxCoeff() == 0.0 && problem.sigma2_diag.maxCoeff() == 0.0)
            continue;  // unpopulated at r = 1
        trace_norm += gamma * block_helstrom(problem);
    }
    return 0.5 * (1.0 - 0.5 * trace_norm);
}

double me_mixed(int n, int m, double r) {
    return me_mixed(n, m, universal::CoeffSource::fixed_purity(r));
}

}  // namespace progdisc::mixed
