// construct.hpp -- concrete matrix realization and first-principles
// verification of the Leonard-system property.
//
// build_pair() realizes certified data as (A tridiagonal, A* diagonal).
// verify_leonard_system() then checks the definition directly: it
// constructs the primitive idempotents of both matrices by the Lagrange
// product formula and tests the tridiagonal/diagonal zero patterns of
// E*_i A E*_j and E_i A* E_j. It shares no logic with the certifier, so it
// serves as the independent oracle for the certification theorem.

#ifndef LEONARD_CONSTRUCT_HPP
#define LEONARD_CONSTRUCT_HPP

#include "leonard/certify.hpp"
#include "leonard/matrix.hpp"

namespace leonard {

struct MatrixPair {
    ExactMatrix A;
    ExactMatrix A_star;
    int d;
};

/// The (d+1)x(d+1) matrices of the certified data: A carries a on the
/// diagonal, b above, c below; A* is diag(theta*_0, ..., theta*_d).
MatrixPair build_pair(const Certificate& cert);

struct IdempotentSystem {
    std::vector<ExactMatrix> E;
    std::vector<Scalar> eigenvalues;
};

/// Primitive idempotents E_i = prod_{j != i} (A - theta_j I)/(theta_i -
/// theta_j). Every idempotent invariant is verified before returning:
/// E_i E_j = delta_ij E_i, rank(E_i) = 1, sum E_i = I, sum theta_i E_i = A,
/// A E_i = theta_i E_i, and prod_i (A - theta_i I) = 0. Throws when the
/// claimed eigenvalues are not the simple spectrum of A.
IdempotentSystem primitive_idempotents(const ExactMatrix& A, std::span<const Scalar> theta);

/// Non-throwing form; on failure returns nullopt and stores the failing
/// identity in `reason`.
std::optional<IdempotentSystem> try_primitive_idempotents(const ExactMatrix& A,
                                                          std::span<const Scalar> theta,
                                                          std::string& reason);

/// True when prod_i (M - lambda_i I) = 0 but no leave-one-out subproduct
/// vanishes, i.e. prod (x - lambda_i) is exactly the minimal polynomial.
bool minimal_polynomial_matches(const ExactMatrix& M, std::span<const Scalar> eigenvalues);

/// Brute-force check of the five defining clauses of a Leonard system for
/// the claimed eigenvalue orderings. Violations are labelled "(i)".."(v)":
/// (i) both maps multiplicity-free with the claimed spectra, (ii)/(iii) the
/// idempotent orderings exist, (iv) E*_i A E*_j zero iff |i-j| > 1 and
/// nonzero iff |i-j| = 1, (v) the same pattern for E_i A* E_j.
ConditionReport verify_leonard_system(const MatrixPair& pair, std::span<const Scalar> theta,
                                      std::span<const Scalar> theta_star);

/// Residual of the operator relation
///   A*^2 A - beta A* A A* + A A*^2 - gamma*(A A* + A* A) - delta* A
///     - gamma A*^2 - omega A* - eta* I.
/// Zero for every certified pair.
ExactMatrix askey_wilson_residual(const MatrixPair& pair, const RecurrenceConstants& consts);

struct DualizedPair {
    ExactMatrix B_star;            // A* in the dual basis; irreducible tridiagonal
    ExactMatrix B;                 // A in the dual basis; diag(theta_0..theta_d)
    std::vector<Scalar> a_star;    // dual intersection numbers read off B_star
    std::vector<Scalar> b_star;    // b*_0..b*_{d-1}
    std::vector<Scalar> c_star;    // c*_1..c*_d
    ConditionReport report;        // tridiagonal pattern + dual row-sum checks
};

/// Change of basis to the second standard form: w_i = E_i e_0 must all be
/// nonzero (throws otherwise -- the input was not a Leonard system), and in
/// the basis {w_i} the roles of the two matrices swap. The dual row sums
/// c*_i + a*_i + b*_i are checked against theta*_0.
DualizedPair dualize(const MatrixPair& pair, const IdempotentSystem& E);

/// Verifies the witness-vector identities: A v0 = theta_0 v0 for the
/// all-ones vector v0, A v1 = theta_1 v1 for v1 with components
/// theta*_i - a*_0, A* v0 - v1 = a*_0 v0, and the three-term identity
/// c_i(theta*_{i-1} - a*_0) + a_i(theta*_i - a*_0) + b_i(theta*_{i+1} -
/// a*_0) = theta_1(theta*_i - a*_0) at every index.
ConditionReport check_witness_vectors(const MatrixPair& pair, const Scalar& a0_star,
                                      const Scalar& theta0, const Scalar& theta1);

}  // namespace leonard

#endif
