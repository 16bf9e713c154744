#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "progdisc/pure.hpp"

namespace progdisc::oracle {

/// Hard caps for the brute-force constructions. Dense matrices (quadrature
/// averages, Helstrom/fidelity inputs) stop at 2^12; the pure support-basis
/// routes, which never materialize a full density matrix, go up to 2^14.
inline constexpr int kMaxDenseQubits = 12;
inline constexpr int kMaxSupportQubits = 14;

class DimensionCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Explicit dense Hermitian matrix. Construction validates hermiticity; a
/// state additionally carries unit trace, which the consumers check.
class DenseHermitian {
public:
    explicit DenseHermitian(Eigen::MatrixXcd m);

    const Eigen::MatrixXcd& matrix() const { return mat_; }
    Eigen::Index dim() const { return mat_.rows(); }
    double trace_real() const { return mat_.trace().real(); }

private:
    Eigen::MatrixXcd mat_;
};

/// Orthonormal basis of the permutation-symmetric subspace of n qubits,
/// built directly in the computational basis: column w has amplitude
/// 1/sqrt(binom(n,w)) on every bit string of weight w.
Eigen::MatrixXd symmetric_basis(int n_qubits);

/// Projector onto the symmetric subspace, as basis * basis^T.
Eigen::MatrixXd symmetric_projector(int n_qubits);

/// Same projector built the slow way, by averaging all n! qubit
/// permutations. Cross-check path; n <= 8.
Eigen::MatrixXd symmetric_projector_by_permutations(int n_qubits);

/// Effective machine state for pure inputs: normalized symmetric projectors
/// on (first program + data) x (second program), or the mirror for which=2.
DenseHermitian pure_sigma(const pure::PortLoad& load, int which);

/// Effective machine state for fixed-purity mixed inputs, built by
/// exact-degree product quadrature over the two Bloch spheres. The overload
/// with two purities lets the two unknown states carry different r.
DenseHermitian mixed_sigma(int n, int m, double r, int which);
DenseHermitian mixed_sigma(int n, int m, double r1, double r2, int which);

/// Sphere average of rho(r)^{(x) copies} for one state. theta_nodes /
/// phi_nodes default to the exact-degree counts ceil((N+1)/2) and N+1.
Eigen::MatrixXcd averaged_power(int copies, double r);
Eigen::MatrixXcd averaged_power(int copies, double r, int theta_nodes, int phi_nodes);

/// Helstrom bound 1/2 (1 - ||a-b||_1 / 2) from a dense eigensolve.
double helstrom(const DenseHermitian& a, const DenseHermitian& b);

/// Same value, but exploiting that rotation-averaged register states only
/// connect bit strings of equal Hamming weight. The zero pattern is verified
/// before it is used, so this stays an honest brute-force path at sizes where
/// the dense solve would be too slow.
double helstrom_blocked(const DenseHermitian& a, const DenseHermitian& b);

/// Uhlmann fidelity tr sqrt(sqrt(a) b sqrt(a)).
double fidelity(const DenseHermitian& a, const DenseHermitian& b);

/// Support-reduced brute force for pure loads: the two states are scaled
/// projectors, so all spectra live on the explicit span of the two symmetric
/// product bases. No recoupling enters: Jordan pairs come out of an SVD.
double pure_helstrom(const pure::PortLoad& load);
double pure_fidelity(const pure::PortLoad& load);

/// Unambiguous optimum assembled pair-by-pair from the SVD of the overlap
/// matrix between the two support bases, with priors from dimension counting.
double pure_ua_blockwise(const pure::PortLoad& load);

}  // namespace progdisc::oracle
