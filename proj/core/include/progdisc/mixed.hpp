#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "progdisc/coeff.hpp"
#include "progdisc/half_int.hpp"

namespace progdisc::mixed {

/// One orthogonal block of the n x m x n machine: the spins of the three
/// port groups plus the total angular momentum J. Everything else (alpha
/// labels, M) only contributes the multiplicity gamma.
struct BlockLabel {
    HalfInt j_a;
    HalfInt j_b;
    HalfInt j_c;
    HalfInt j_total;
};

/// The two-hypothesis subproblem carried by one block: two diagonal matrices
/// over the admissible intermediate couplings, plus the orthogonal recoupling
/// matrix between the two coupling orders. Couplings are listed in descending
/// spin order.
struct BlockProblem {
    std::vector<HalfInt> labels_ab;
    std::vector<HalfInt> labels_bc;
    Eigen::VectorXd sigma1_diag;
    Eigen::VectorXd sigma2_diag;
    Eigen::MatrixXd lambda;
};

/// Every block with nonzero multiplicity, in lexicographic order of
/// (2j_a, 2j_b, 2j_c, 2J) so that sums are reproducible run to run. The
/// second element is gamma = nu_{j_a}^n nu_{j_b}^m nu_{j_c}^n (2J+1).
std::vector<std::pair<BlockLabel, double>> enumerate_blocks(int n, int m);

/// Assembles the block subproblem from the per-port coefficient tables
/// (program: N = n, coupled: N = n + m).
BlockProblem block_problem(const BlockLabel& label, const CoeffTable& program,
                           const CoeffTable& coupled);

/// Trace norm || sigma1 - Lambda sigma2 Lambda^T || of the block.
double block_helstrom(const BlockProblem& problem);

/// Minimum-error probability of the n x m x n machine for mixed inputs:
/// 1/2 (1 - 1/2 sum_blocks gamma * T).
double me_mixed(int n, int m, const universal::CoeffSource& source);
double me_mixed(int n, int m, double r);

}  // namespace progdisc::mixed
