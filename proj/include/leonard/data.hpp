// data.hpp -- scalar data of a prospective Leonard system and the recurrence
// constants derived from it.
//
// LeonardData carries the eigenvalue sequences theta, theta* and the
// intersection numbers a, b, c of a candidate tridiagonal/diagonal pair.
// The derivations here recover, from that data alone, the constants of the
// common three-term recurrence (beta, gamma, gamma*) and the quadratic-form
// constants (delta*, omega, eta*, Omega) that the certification theorem
// needs. All checks are exact; "constant in i" means equal at every index.

#ifndef LEONARD_DATA_HPP
#define LEONARD_DATA_HPP

#include "leonard/field.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace leonard {

// Condition labels used in violation reports. "(i)".."(viii)" are the
// certification theorem's conditions; the last two flag non-constant
// derived sequences.
namespace cond {
inline constexpr const char* i = "(i)";
inline constexpr const char* ii = "(ii)";
inline constexpr const char* iii = "(iii)";
inline constexpr const char* iv = "(iv)";
inline constexpr const char* v = "(v)";
inline constexpr const char* vi = "(vi)";
inline constexpr const char* vii = "(vii)";
inline constexpr const char* viii = "(viii)";
inline constexpr const char* delta_star = "delta_star";
inline constexpr const char* eta_star = "eta_star";
}  // namespace cond

struct ConditionViolation {
    std::string condition;            // label from cond::, or a verifier clause
    int index = -1;                   // offending i, or -1 when not index-specific
    std::optional<Scalar> residual;   // exact residual of the failed identity
    std::string message;
};

struct ConditionReport {
    std::vector<ConditionViolation> violations;
    bool passed() const { return violations.empty(); }
    void add(std::string condition, int index, std::optional<Scalar> residual, std::string message);
};

/// Scalar package of a candidate Leonard system of diameter d:
/// theta[0..d], theta_star[0..d], a[0..d], b[0..d-1], c[1..d] (stored as
/// c[0..d-1] holding c_1..c_d). The boundary values c_0 = b_d = 0 are
/// implicit and supplied by ci()/bi(). For d <= 2 the recurrence constant
/// beta is not determined by the data, so beta_override must be supplied
/// (and gamma_star_override as well when d = 1).
struct LeonardData {
    int d = 0;
    FieldDescriptor field = FieldDescriptor::rational();
    std::vector<Scalar> theta;
    std::vector<Scalar> theta_star;
    std::vector<Scalar> a;
    std::vector<Scalar> b;
    std::vector<Scalar> c;
    std::optional<Scalar> beta_override;
    std::optional<Scalar> gamma_star_override;

    Scalar bi(int i) const;  // b_i, with b_d = 0
    Scalar ci(int i) const;  // c_i, with c_0 = 0

    /// Throws unless array lengths match d and every entry lives in `field`.
    void validate_shape() const;
};

/// Everything the certifier derives: the three-term recurrence constants,
/// the quadratic-form constants, and the boundary extensions of both
/// eigenvalue sequences.
struct RecurrenceConstants {
    Scalar beta;
    Scalar gamma;
    Scalar gamma_star;
    Scalar delta_star;
    Scalar omega;
    Scalar eta_star;
    Scalar Omega;
    Scalar a0_star;
    Scalar theta_m1;
    Scalar theta_dp1;
    Scalar theta_star_m1;
    Scalar theta_star_dp1;
};

/// Fatal derivation failure (zero divisor or missing override); carries the
/// violation to report.
class derivation_error : public error {
public:
    derivation_error(ConditionViolation v)
        : error(v.message), violation(std::move(v)) {}
    ConditionViolation violation;
};

struct BetaGammaStar {
    Scalar beta;
    Scalar gamma_star;
};

/// Recovers (beta, gamma*) from the dual eigenvalues. For d >= 3 beta is
/// solved from the recurrence at i = 1, 2 and gamma* constancy is then
/// checked at every 1 <= i <= d-1 (mismatches go to `report` when given,
/// otherwise throw). For d = 2 beta must be overridden and gamma* comes
/// from i = 1; for d = 1 both must be overridden.
BetaGammaStar derive_beta_gamma_star(std::span<const Scalar> theta_star,
                                     const std::optional<Scalar>& beta_override,
                                     const std::optional<Scalar>& gamma_star_override,
                                     ConditionReport* report = nullptr);

/// Boundary extension of the dual eigenvalue recurrence:
/// theta*_{-1} = gamma* + beta theta*_0 - theta*_1,
/// theta*_{d+1} = gamma* + beta theta*_d - theta*_{d-1}.
std::pair<Scalar, Scalar> extend_dual_eigenvalues(std::span<const Scalar> theta_star,
                                                  const Scalar& beta, const Scalar& gamma_star);

/// Common value of theta*_{i-1}^2 - beta theta*_{i-1} theta*_i + theta*_i^2
/// - gamma*(theta*_{i-1} + theta*_i) over the extended sequence
/// [theta*_{-1}, theta*_0, ..., theta*_{d+1}] (d+2 evaluations). Constancy
/// is verified at every i; failures go to `report` or throw.
Scalar delta_star_value(std::span<const Scalar> theta_star_extended, const Scalar& beta,
                        const Scalar& gamma_star, ConditionReport* report = nullptr);

struct OmegaEtaStar {
    Scalar omega;
    Scalar eta_star;
};

/// omega = 2 theta_0 (a*_0 - gamma*) - 2 theta_1 a*_0 - Omega, and eta* as
/// the common value of a_i(theta*_i - theta*_{i-1})(theta*_i - theta*_{i+1})
/// - gamma theta*_i^2 - omega theta*_i over 0 <= i <= d, verified constant.
OmegaEtaStar derive_omega_eta_star(const LeonardData& data, const Scalar& gamma,
                                   const Scalar& gamma_star, const Scalar& a0_star,
                                   const Scalar& Omega, const Scalar& theta_star_m1,
                                   const Scalar& theta_star_dp1, ConditionReport* report = nullptr);

}  // namespace leonard

#endif
