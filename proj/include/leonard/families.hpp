// families.hpp -- generators for the three explicit Leonard-system
// families: Krawtchouk, q-Racah, and a fixed d = 5 Racah-type example.
//
// Each generator returns the scalar data together with the closed-form
// constants the family is known to have. The expectations are attached as
// plain values, not as a certificate: tests must show that certification
// re-derives them independently.

#ifndef LEONARD_FAMILIES_HPP
#define LEONARD_FAMILIES_HPP

#include "leonard/data.hpp"

namespace leonard {

/// Closed-form constants a family instance is expected to certify with.
/// Fields without a known closed form stay empty.
struct ExpectedConstants {
    std::optional<Scalar> beta, gamma, gamma_star, delta_star, omega, eta_star, Omega, a0_star,
        theta_m1, theta_dp1, theta_star_m1, theta_star_dp1;
};

/// Field-by-field comparison; returns a message per mismatch (empty = all
/// attached expectations agree with the derived constants).
std::vector<std::string> expected_mismatches(const ExpectedConstants& expected,
                                             const RecurrenceConstants& derived);

struct FamilyInstance {
    LeonardData data;
    ExpectedConstants expected;
};

/// Krawtchouk type: theta_i = theta*_i = d - 2i, b_i = d - i, c_i = i,
/// a_i = 0. Requires characteristic 0 or an odd prime > d. For d <= 2 the
/// beta/gamma* overrides (2 and 0) are attached to the data.
FamilyInstance krawtchouk(int d, const FieldDescriptor& field);

struct QRacahParams {
    int d;
    Scalar a, b, c, q;
};

/// Admissibility check for q-Racah parameters, run in the parameter field
/// itself (over GF(p) the excluded sets are residues, not symbols).
/// Returns one message per violated constraint.
std::vector<std::string> q_racah_violations(const QRacahParams& params);

/// q-Racah type with eigenvalues a q^{2i-d} + a^{-1} q^{d-2i} and dual
/// eigenvalues likewise in b. Throws when q_racah_violations is non-empty
/// or a parameter is zero.
FamilyInstance q_racah(const QRacahParams& params);

/// A d = 5 Racah-type instance over Q with theta_i = theta*_i; the stock
/// worked example for certification, inference, and split-sequence tests.
FamilyInstance racah_example();

}  // namespace leonard

#endif
