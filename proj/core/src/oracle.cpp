#include "progdisc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <vector>

#include "progdisc/quadrature.hpp"

namespace progdisc::oracle {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using std::complex;

template <typename Mat>
Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

void check_dense_cap(int qubits) {
    if (qubits > kMaxDenseQubits)
        throw DimensionCapError("oracle: dense construction capped at 2^" +
                                std::to_string(kMaxDenseQubits));
}

void check_support_cap(int qubits) {
    if (qubits > kMaxSupportQubits)
        throw DimensionCapError("oracle: support-basis construction capped at 2^" +
                                std::to_string(kMaxSupportQubits));
}

void check_state_pair(const DenseHermitian& a, const DenseHermitian& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("oracle: dimension mismatch between states");
    if (std::abs(a.trace_real() - 1.0) > 1e-8 || std::abs(b.trace_real() - 1.0) > 1e-8)
        throw std::invalid_argument("oracle: states must have unit trace");
}

double binom_d(int n, int k) {
    return progdisc::to_double(BigRational(binomial(n, k)));
}

// Support bases of the two effective pure states on the full register
// (program A | data B | program C), A-major bit ordering.
std::pair<MatrixXd, MatrixXd> pure_support_bases(const pure::PortLoad& l) {
    const MatrixXd b1 = kron(symmetric_basis(l.n_a + l.n_b), symmetric_basis(l.n_c));
    const MatrixXd b2 = kron(symmetric_basis(l.n_a), symmetric_basis(l.n_b + l.n_c));
    return {b1, b2};
}

}  // namespace

DenseHermitian::DenseHermitian(Eigen::MatrixXcd m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols())
        throw std::invalid_argument("DenseHermitian: matrix must be square");
    const double scale = std::max(1.0, mat_.cwiseAbs().maxCoeff());
    if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("DenseHermitian: matrix is not Hermitian");
    mat_ = 0.5 * (mat_ + mat_.adjoint().eval());
}

Eigen::MatrixXd symmetric_basis(int n_qubits) {
    if (n_qubits < 0) throw std::invalid_argument("symmetric_basis: negative qubit count");
    check_support_cap(n_qubits);
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    MatrixXd basis = MatrixXd::Zero(dim, n_qubits + 1);
    for (Eigen::Index x = 0; x < dim; ++x) {
        const int w = std::popcount(static_cast<unsigned long long>(x));
        basis(x, w) = 1.0 / std::sqrt(binom_d(n_qubits, w));
    }
    return basis;
}

Eigen::MatrixXd symmetric_projector(int n_qubits) {
    check_dense_cap(n_qubits);
    const MatrixXd basis = symmetric_basis(n_qubits);
    return basis * basis.transpose();
}

Eigen::MatrixXd symmetric_projector_by_permutations(int n_qubits) {
    if (n_qubits > 8)
        throw DimensionCapError("symmetric_projector_by_permutations: capped at 8 qubits");
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    MatrixXd sum = MatrixXd::Zero(dim, dim);
    std::vector<int> perm(n_qubits);
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        for (Eigen::Index x = 0; x < dim; ++x) {
            Eigen::Index y = 0;
            for (int i = 0; i < n_qubits; ++i)
                if ((x >> i) & 1) y |= Eigen::Index(1) << perm[i];
            sum(y, x) += 1.0;
        }
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum / static_cast<double>(count);
}

DenseHermitian pure_sigma(const pure::PortLoad& load, int which) {
    if (which != 1 && which != 2) throw std::invalid_argument("pure_sigma: which must be 1 or 2");
    check_dense_cap(load.total());
    MatrixXd out;
    if (which == 1) {
        out = kron(symmetric_projector(load.n_a + load.n_b), symmetric_projector(load.n_c));
        out /= static_cast<double>((load.n_a + load.n_b + 1) * (load.n_c + 1));
    } else {
        out = kron(symmetric_projector(load.n_a), symmetric_projector(load.n_b + load.n_c));
        out /= static_cast<double>((load.n_a + 1) * (load.n_b + load.n_c + 1));
    }
    return DenseHermitian(out.cast<complex<double>>());
}

Eigen::MatrixXcd averaged_power(int copies, double r, int theta_nodes, int phi_nodes) {
    check_dense_cap(copies);
    if (r < 0.0 || r > 1.0) throw std::invalid_argument("averaged_power: purity outside [0,1]");
    const auto rule = quadrature::gauss_legendre(theta_nodes);
    const Eigen::Index dim = Eigen::Index(1) << copies;
    MatrixXcd out = MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < theta_nodes; ++i) {
        const double u = rule.nodes[i];               // cos(theta)
        const double s = std::sqrt(1.0 - u * u);      // sin(theta)
        for (int k = 0; k < phi_nodes; ++k) {
            const double phi = 2.0 * std::numbers::pi * k / phi_nodes;
            MatrixXcd rho(2, 2);
            rho(0, 0) = 0.5 * (1.0 + r * u);
            rho(1, 1) = 0.5 * (1.0 - r * u);
            rho(0, 1) = 0.5 * r * s * std::exp(complex<double>(0.0, -phi));
            rho(1, 0) = std::conj(rho(0, 1));
            MatrixXcd power = MatrixXcd::Identity(1, 1);
            for (int c = 0; c < copies; ++c) power = kron(power, rho);
            out += (0.5 * rule.weights[i] / phi_nodes) * power;
        }
    }
    return out;
}

Eigen::MatrixXcd averaged_power(int copies, double r) {
    // The integrand is a polynomial of degree <= copies in the Bloch vector,
    // so these node counts integrate it exactly.
    return averaged_power(copies, r, (copies + 2) / 2, copies + 1);
}

DenseHermitian mixed_sigma(int n, int m, double r1, double r2, int which) {
    if (which != 1 && which != 2) throw std::invalid_argument("mixed_sigma: which must be 1 or 2");
    if (n < 1 || m < 1) throw std::invalid_argument("mixed_sigma: n, m must be >= 1");
    check_dense_cap(2 * n + m);
    // State 1 always spans A (and B when which=1); state 2 spans C (and B
    // when which=2). Either way the register factorizes into two halves.
    const MatrixXcd left = which == 1 ? averaged_power(n + m, r1) : averaged_power(n, r1);
    const MatrixXcd right = which == 1 ? averaged_power(n, r2) : averaged_power(n + m, r2);
    return DenseHermitian(kron(left, right));
}

DenseHermitian mixed_sigma(int n, int m, double r, int which) {
    return mixed_sigma(n, m, r, r, which);
}

double helstrom(const DenseHermitian& a, const DenseHermitian& b) {
    check_state_pair(a, b);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(a.matrix() - b.matrix(),
                                                    Eigen::EigenvaluesOnly);
    const double trace_norm = solver.eigenvalues().cwiseAbs().sum();
    return 0.5 * (1.0 - 0.5 * trace_norm);
}

double helstrom_blocked(const DenseHermitian& a, const DenseHermitian& b) {
    check_state_pair(a, b);
    const MatrixXcd diff = a.matrix() - b.matrix();
    const Eigen::Index dim = diff.rows();
    const int qubits = std::countr_zero(static_cast<unsigned long long>(dim));
    if ((Eigen::Index(1) << qubits) != dim)
        throw std::invalid_argument("helstrom_blocked: dimension is not a power of two");

    std::vector<std::vector<Eigen::Index>> sectors(qubits + 1);
    for (Eigen::Index x = 0; x < dim; ++x)
        sectors[std::popcount(static_cast<unsigned long long>(x))].push_back(x);

    // The sector structure is an observed zero pattern of the explicitly
    // built matrices; verify it before relying on it.
    const double tol = 1e-11 * std::max(1.0, diff.cwiseAbs().maxCoeff());
    double cross = 0.0;
    for (Eigen::Index x = 0; x < dim; ++x)
        for (Eigen::Index y = 0; y < dim; ++y)
            if (std::popcount(static_cast<unsigned long long>(x)) !=
                std::popcount(static_cast<unsigned long long>(y)))
                cross = std::max(cross, std::abs(diff(x, y)));
    if (cross > tol)
        throw std::logic_error("helstrom_blocked: states are not weight-sector diagonal");

    double trace_norm = 0.0;
    for (const auto& sector : sectors) {
        const Eigen::Index s = static_cast<Eigen::Index>(sector.size());
        if (s == 0) continue;
        MatrixXd block(s, s);
        for (Eigen::Index i = 0; i < s; ++i)
            for (Eigen::Index j = 0; j < s; ++j) {
                const complex<double> v = diff(sector[i], sector[j]);
                block(i, j) = v.real();
            }
        Eigen::SelfAdjointEigenSolver<MatrixXd> solver(block, Eigen::EigenvaluesOnly);
        trace_norm += solver.eigenvalues().cwiseAbs().sum();
    }
    return 0.5 * (1.0 - 0.5 * trace_norm);
}

namespace {

// Square roots amplify eigensolver noise around zero, so eigenvalues below
// the solver's resolution are treated as exact zeros.
Eigen::VectorXd sqrt_spectrum(const Eigen::VectorXd& eigenvalues) {
    const double cutoff = 1e-13 * std::max(1e-300, eigenvalues.cwiseAbs().maxCoeff());
    Eigen::VectorXd out(eigenvalues.size());
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
        out(i) = eigenvalues(i) > cutoff ? std::sqrt(eigenvalues(i)) : 0.0;
    return out;
}

}  // namespace

double fidelity(const DenseHermitian& a, const DenseHermitian& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("oracle: dimension mismatch between states");
    Eigen::SelfAdjointEigenSolver<MatrixXcd> ea(a.matrix());
    const MatrixXcd root = ea.eigenvectors() *
                           sqrt_spectrum(ea.eigenvalues()).asDiagonal() *
                           ea.eigenvectors().adjoint();
    Eigen::SelfAdjointEigenSolver<MatrixXcd> em(root * b.matrix() * root,
                                                Eigen::EigenvaluesOnly);
    return sqrt_spectrum(em.eigenvalues()).sum();
}

double pure_helstrom(const pure::PortLoad& load) {
    const pure::PortLoad l = load.canonical();
    check_support_cap(l.total());
    const auto [b1, b2] = pure_support_bases(l);
    MatrixXd joint(b1.rows(), b1.cols() + b2.cols());
    joint << b1, b2;
    Eigen::HouseholderQR<MatrixXd> qr(joint);
    const MatrixXd q = qr.householderQ() * MatrixXd::Identity(joint.rows(), joint.cols());
    const MatrixXd g1 = q.transpose() * b1;
    const MatrixXd g2 = q.transpose() * b2;
    const MatrixXd m = g1 * g1.transpose() / static_cast<double>(l.d1()) -
                       g2 * g2.transpose() / static_cast<double>(l.d2());
    Eigen::SelfAdjointEigenSolver<MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    return 0.5 * (1.0 - 0.5 * solver.eigenvalues().cwiseAbs().sum());
}

double pure_fidelity(const pure::PortLoad& load) {
    const pure::PortLoad l = load.canonical();
    check_support_cap(l.total());
    const auto [b1, b2] = pure_support_bases(l);
    const MatrixXd overlap = b1.transpose() * b2;
    Eigen::JacobiSVD<MatrixXd> svd(overlap);
    return svd.singularValues().sum() /
           std::sqrt(static_cast<double>(l.d1()) * static_cast<double>(l.d2()));
}

double pure_ua_blockwise(const pure::PortLoad& load) {
    const pure::PortLoad l = load.canonical();
    check_support_cap(l.total());
    const auto [b1, b2] = pure_support_bases(l);
    const MatrixXd overlap = b1.transpose() * b2;
    Eigen::JacobiSVD<MatrixXd> svd(overlap);
    const auto& sv = svd.singularValues();

    const double d1 = static_cast<double>(l.d1());
    const double d2 = static_cast<double>(l.d2());
    const double p = (d1 + d2) / (2.0 * d1 * d2);
    const double pi1 = d2 / (d1 + d2);
    const double pi2 = d1 / (d1 + d2);

    double total = 0.0;
    int unit_pairs = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        const double c = sv(i);
        if (c > 1.0 - 1e-9) {
            // fully symmetric multiplet: indistinguishable pair
            total += p;
            ++unit_pairs;
            continue;
        }
        const double c2 = c * c;
        if (pi1 < c2 / (1.0 + c2) - 1e-12 || pi1 > 1.0 / (1.0 + c2) + 1e-12)
            throw pure::FeasibilityError("oracle: pairwise feasibility window violated");
        total += p * 2.0 * std::sqrt(pi1 * pi2) * c;
    }
    if (unit_pairs != l.d_abc())
        throw std::logic_error("oracle: unexpected count of unit-overlap pairs");
    return total;
}

}  // namespace progdisc::oracle
