// certify.hpp -- eight-condition certification of Leonard data, and the
// eigenvalue-inference procedure for data given without theta.
//
// certify() derives every recurrence constant from the data in a fixed
// order, so a failure report pinpoints the earliest broken condition. The
// checker collects all violations it can reach; it only aborts early when a
// required divisor vanishes. On success the returned certificate's
// constants re-verify against the data (see verify_conditions).

#ifndef LEONARD_CERTIFY_HPP
#define LEONARD_CERTIFY_HPP

#include "leonard/data.hpp"

#include <optional>

namespace leonard {

struct Certificate {
    LeonardData data;
    RecurrenceConstants constants;
    ConditionReport report;  // empty: certification passed
};

struct CertifyResult {
    std::optional<Certificate> certificate;
    ConditionReport report;
    bool passed() const { return certificate.has_value(); }
};

/// Checks conditions (i)-(viii) on the data and derives all twelve
/// recurrence constants. Returns a certificate on success, otherwise a
/// report listing every violated condition with its index and exact
/// residual.
CertifyResult certify(const LeonardData& data);

/// Re-checks every condition against externally supplied constants.
/// certify() guarantees this passes for the certificates it returns.
ConditionReport verify_conditions(const LeonardData& data, const RecurrenceConstants& consts);

/// Input for eigenvalue inference: everything but theta.
struct PartialLeonardData {
    int d = 0;
    FieldDescriptor field = FieldDescriptor::rational();
    std::vector<Scalar> theta_star;
    std::vector<Scalar> a;
    std::vector<Scalar> b;
    std::vector<Scalar> c;
    std::optional<Scalar> beta_override;
    std::optional<Scalar> gamma_star_override;
};

/// Thrown when inference cannot proceed; `stage` names the condition or
/// step that failed (e.g. "condition (v)" for non-constant row sums).
class infer_error : public error {
public:
    infer_error(std::string stage_label, const std::string& message)
        : error(message), stage(std::move(stage_label)) {}
    std::string stage;
};

/// Recovers the eigenvalue sequence theta from the intersection numbers and
/// dual eigenvalues: theta_0 is the common row sum, (theta_1, a*_0) solve
/// the two boundary balance equations, theta_{-1} pins gamma, and the
/// remaining theta_i follow the three-term recurrence. The caller should
/// certify() the returned data.
LeonardData infer_eigenvalues(const PartialLeonardData& partial);

}  // namespace leonard

#endif
