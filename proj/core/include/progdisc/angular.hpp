#pragma once

#include "progdisc/exact_rational.hpp"
#include "progdisc/half_int.hpp"

namespace progdisc::angular {

/// Wigner 6-j symbol {j1 j2 j3; j4 j5 j6}, evaluated exactly by the Racah
/// single-sum formula over big integers. Any triad failing the triangle or
/// parity condition yields an exact zero (the physics convention: the result
/// distinguishes "forbidden" from "small" only through the selection rules,
/// never through magnitude).
ExactRational wigner6j(HalfInt j1, HalfInt j2, HalfInt j3,
                       HalfInt j4, HalfInt j5, HalfInt j6);

/// Overlap <(jA jB) jAB, jC; J M | jA, (jB jC) jBC; J M> between the two
/// coupling orders of three spins, independent of M. Zero whenever a coupling
/// constraint fails.
ExactRational jordan_overlap(HalfInt ja, HalfInt jb, HalfInt jc,
                             HalfInt jab, HalfInt jbc, HalfInt j_total);

/// Double-precision jordan_overlap backed by a process-wide memo of 6-j
/// values (canonicalized over the 24 classical symmetries). This is the hot
/// path of the block engine; the exact overload stays available for tests.
double jordan_overlap_d(HalfInt ja, HalfInt jb, HalfInt jc,
                        HalfInt jab, HalfInt jbc, HalfInt j_total);

/// Overlap of the symmetric n x m x n machine: jA=jC=n/2, jB=m/2,
/// jAB=jBC=(n+m)/2, J=m/2+k. Equals binom(n,k)/binom(n+m,n-k), a plain
/// rational. Requires 0 <= k <= n.
ExactRational symmetric_overlap(int n, int m, int k);

/// Number of equivalent spin-j irreducible blocks in the permutation
/// decomposition of n qubits: binom(n, n/2-j)*(2j+1)/(n/2+j+1).
/// Zero when 2j > n or the parity does not match n.
BigInt multiplicity(int n, HalfInt j);

}  // namespace progdisc::angular
