#include "leonard/certify.hpp"

namespace leonard {

namespace {

// Dual eigenvalue sequence with its boundary extensions, indexable by
// -1 <= i <= d+1.
class ExtendedDual {
public:
    ExtendedDual(std::span<const Scalar> theta_star, Scalar m1, Scalar dp1)
        : theta_star_(theta_star), m1_(std::move(m1)), dp1_(std::move(dp1)) {}

    const Scalar& operator()(int i) const {
        if (i == -1) return m1_;
        if (i == static_cast<int>(theta_star_.size())) return dp1_;
        return theta_star_[static_cast<std::size_t>(i)];
    }

private:
    std::span<const Scalar> theta_star_;
    Scalar m1_;
    Scalar dp1_;
};

// Condition (vii)'s expression at index i (1 <= i <= d), affine in theta_-1.
Scalar vii_expr(const Scalar& c_i, const Scalar& b_im1, const ExtendedDual& ts, int i,
                const Scalar& theta0, const Scalar& theta_m1) {
    return c_i * (ts(i - 1) - ts(i + 1)) - b_im1 * (ts(i - 2) - ts(i)) -
           (theta0 - theta_m1) * (ts(i - 1) + ts(i));
}

// Condition (vi)'s residual at index i (0 <= i <= d):
// c_i(ts_{i-1} - ts_i) - b_i(ts_i - ts_{i+1}) - (theta_1 - theta_0)(ts_i - a*_0).
Scalar vi_residual(const LeonardData& data, const ExtendedDual& ts, int i, const Scalar& a0_star) {
    return data.ci(i) * (ts(i - 1) - ts(i)) - data.bi(i) * (ts(i) - ts(i + 1)) -
           (data.theta[1] - data.theta[0]) * (ts(i) - a0_star);
}

void check_structural(const LeonardData& data, ConditionReport& report) {
    const Scalar zero = Scalar::zero(data.field);

    for (int i = 0; i <= data.d; ++i)
        for (int j = i + 1; j <= data.d; ++j)
            if (data.theta[static_cast<std::size_t>(i)] == data.theta[static_cast<std::size_t>(j)])
                report.add(cond::i, j, std::nullopt,
                           "theta_" + std::to_string(i) + " = theta_" + std::to_string(j));

    for (int i = 1; i <= data.d; ++i)
        if (data.theta_star[static_cast<std::size_t>(i)] == data.theta_star[0])
            report.add(cond::ii, i, std::nullopt, "theta*_" + std::to_string(i) + " = theta*_0");

    for (int i = 1; i <= data.d; ++i)
        if ((data.bi(i - 1) * data.ci(i)).is_zero())
            report.add(cond::iv, i, std::nullopt,
                       "b_" + std::to_string(i - 1) + " c_" + std::to_string(i) + " = 0");

    for (int i = 0; i <= data.d; ++i) {
        const Scalar residual =
            data.ci(i) + data.a[static_cast<std::size_t>(i)] + data.bi(i) - data.theta[0];
        if (residual != zero)
            report.add(cond::v, i, residual,
                       "row sum c_i + a_i + b_i differs from theta_0 at i = " + std::to_string(i));
    }
}

// Solves theta_-1 by equating condition (vii)'s expression at i = 1 and
// i = 2 (the theta_-1 coefficient is theta*_0 - theta*_2, nonzero by
// condition (ii)). For d = 1 the independence requirement is vacuous, so
// theta_-1 is fixed by extending the eigenvalue recurrence with
// gamma = gamma*, which matches every family this library generates.
Scalar solve_theta_m1(const LeonardData& data, const ExtendedDual& ts, const Scalar& beta,
                      const Scalar& gamma_star) {
    if (data.d == 1) return gamma_star + beta * data.theta[0] - data.theta[1];
    const Scalar zero = Scalar::zero(data.field);
    const Scalar denom = ts(0) - ts(2);
    if (denom.is_zero())
        throw derivation_error({cond::ii, 2, std::nullopt,
                                "theta*_0 = theta*_2 makes theta_-1 underivable"});
    const Scalar e1 = vii_expr(data.ci(1), data.bi(0), ts, 1, data.theta[0], zero);
    const Scalar e2 = vii_expr(data.ci(2), data.bi(1), ts, 2, data.theta[0], zero);
    return (e2 - e1) / denom;
}

}  // namespace

CertifyResult certify(const LeonardData& data) {
    data.validate_shape();
    ConditionReport report;
    check_structural(data, report);

    std::optional<RecurrenceConstants> consts;
    try {
        const BetaGammaStar bg = derive_beta_gamma_star(data.theta_star, data.beta_override,
                                                        data.gamma_star_override, &report);
        const auto [ts_m1, ts_dp1] = extend_dual_eigenvalues(data.theta_star, bg.beta, bg.gamma_star);
        const ExtendedDual ts(data.theta_star, ts_m1, ts_dp1);

        std::vector<Scalar> extended;
        extended.reserve(static_cast<std::size_t>(data.d) + 3);
        extended.push_back(ts_m1);
        extended.insert(extended.end(), data.theta_star.begin(), data.theta_star.end());
        extended.push_back(ts_dp1);
        const Scalar delta_star = delta_star_value(extended, bg.beta, bg.gamma_star, &report);

        // a*_0 from condition (vi) at i = 0 (c_0 = 0 leaves the fewest terms)
        const Scalar theta_diff = data.theta[1] - data.theta[0];
        if (theta_diff.is_zero())
            throw derivation_error({cond::i, 1, std::nullopt,
                                    "theta_1 = theta_0 makes a*_0 underivable"});
        const Scalar a0_star =
            data.theta_star[0] + data.bi(0) * (ts(0) - ts(1)) / theta_diff;
        for (int i = 0; i <= data.d; ++i) {
            const Scalar residual = vi_residual(data, ts, i, a0_star);
            if (!residual.is_zero())
                report.add(cond::vi, i, residual,
                           "balance equation for a*_0 fails at i = " + std::to_string(i));
        }

        const Scalar theta_m1 = solve_theta_m1(data, ts, bg.beta, bg.gamma_star);
        const Scalar Omega = vii_expr(data.ci(1), data.bi(0), ts, 1, data.theta[0], theta_m1);
        for (int i = 2; i <= data.d; ++i) {
            const Scalar value = vii_expr(data.ci(i), data.bi(i - 1), ts, i, data.theta[0], theta_m1);
            if (value != Omega)
                report.add(cond::vii, i, value - Omega,
                           "Omega expression is not constant at i = " + std::to_string(i));
        }

        const Scalar gamma = theta_m1 - bg.beta * data.theta[0] + data.theta[1];
        for (int i = 1; i <= data.d - 1; ++i) {
            const Scalar value = data.theta[static_cast<std::size_t>(i - 1)] -
                                 bg.beta * data.theta[static_cast<std::size_t>(i)] +
                                 data.theta[static_cast<std::size_t>(i + 1)];
            if (value != gamma)
                report.add(cond::viii, i, value - gamma,
                           "theta_{i-1} - beta theta_i + theta_{i+1} is not constant at i = " +
                               std::to_string(i));
        }
        const Scalar theta_dp1 = gamma + bg.beta * data.theta[static_cast<std::size_t>(data.d)] -
                                 data.theta[static_cast<std::size_t>(data.d - 1)];

        const OmegaEtaStar oe = derive_omega_eta_star(data, gamma, bg.gamma_star, a0_star, Omega,
                                                       ts_m1, ts_dp1, &report);

        consts = RecurrenceConstants{bg.beta,   gamma,    bg.gamma_star, delta_star,
                                     oe.omega,  oe.eta_star, Omega,      a0_star,
                                     theta_m1,  theta_dp1,  ts_m1,       ts_dp1};
    } catch (const derivation_error& e) {
        report.violations.push_back(e.violation);
    }

    if (report.passed() && consts) return {Certificate{data, *consts, report}, report};
    return {std::nullopt, report};
}

ConditionReport verify_conditions(const LeonardData& data, const RecurrenceConstants& k) {
    data.validate_shape();
    ConditionReport report;
    check_structural(data, report);

    const ExtendedDual ts(data.theta_star, k.theta_star_m1, k.theta_star_dp1);

    // (iii): the dual recurrence with the given beta, gamma*, including the
    // boundary extension equations at i = 0 and i = d.
    for (int i = 0; i <= data.d; ++i) {
        const Scalar value = ts(i - 1) - k.beta * ts(i) + ts(i + 1);
        if (value != k.gamma_star)
            report.add(cond::iii, i, value - k.gamma_star,
                       "dual recurrence fails at i = " + std::to_string(i));
    }

    for (int i = 0; i <= data.d + 1; ++i) {
        const Scalar value = ts(i - 1) * ts(i - 1) - k.beta * ts(i - 1) * ts(i) + ts(i) * ts(i) -
                             k.gamma_star * (ts(i - 1) + ts(i));
        if (value != k.delta_star)
            report.add(cond::delta_star, i, value - k.delta_star,
                       "delta* expression differs at i = " + std::to_string(i));
    }

    for (int i = 0; i <= data.d; ++i) {
        const Scalar residual = vi_residual(data, ts, i, k.a0_star);
        if (!residual.is_zero())
            report.add(cond::vi, i, residual, "balance equation fails at i = " + std::to_string(i));
    }

    for (int i = 1; i <= data.d; ++i) {
        const Scalar value = vii_expr(data.ci(i), data.bi(i - 1), ts, i, data.theta[0], k.theta_m1);
        if (value != k.Omega)
            report.add(cond::vii, i, value - k.Omega,
                       "Omega expression differs at i = " + std::to_string(i));
    }

    // (viii) with the boundary extensions of theta folded in.
    auto th = [&](int i) -> const Scalar& {
        if (i == -1) return k.theta_m1;
        if (i == data.d + 1) return k.theta_dp1;
        return data.theta[static_cast<std::size_t>(i)];
    };
    for (int i = 0; i <= data.d; ++i) {
        const Scalar value = th(i - 1) - k.beta * th(i) + th(i + 1);
        if (value != k.gamma)
            report.add(cond::viii, i, value - k.gamma,
                       "eigenvalue recurrence fails at i = " + std::to_string(i));
    }

    for (int i = 0; i <= data.d; ++i) {
        const Scalar residual = data.a[static_cast<std::size_t>(i)] * (ts(i) - ts(i - 1)) *
                                    (ts(i) - ts(i + 1)) -
                                k.gamma * ts(i) * ts(i) - k.omega * ts(i) - k.eta_star;
        if (!residual.is_zero())
            report.add(cond::eta_star, i, residual,
                       "a_i quadratic identity fails at i = " + std::to_string(i));
    }

    // Omega and omega are tied by the proposition identity.
    const Scalar two = Scalar::of(2, data.field);
    const Scalar omega_check =
        two * data.theta[0] * (k.a0_star - k.gamma_star) - two * data.theta[1] * k.a0_star - k.Omega;
    if (omega_check != k.omega)
        report.add(cond::vii, -1, omega_check - k.omega,
                   "omega does not match 2 theta_0 (a*_0 - gamma*) - 2 theta_1 a*_0 - Omega");

    return report;
}

LeonardData infer_eigenvalues(const PartialLeonardData& partial) {
    const int d = partial.d;
    if (d < 1) throw infer_error("input", "diameter d must be >= 1");
    const auto n = static_cast<std::size_t>(d);
    if (partial.theta_star.size() != n + 1 || partial.a.size() != n + 1 ||
        partial.b.size() != n || partial.c.size() != n)
        throw infer_error("input", "array lengths inconsistent with d");

    LeonardData data;
    data.d = d;
    data.field = partial.field;
    data.theta_star = partial.theta_star;
    data.a = partial.a;
    data.b = partial.b;
    data.c = partial.c;
    data.beta_override = partial.beta_override;
    data.gamma_star_override = partial.gamma_star_override;

    // theta_0 = common row sum (condition (v))
    const Scalar row0 = data.ci(0) + data.a[0] + data.bi(0);
    for (int i = 1; i <= d; ++i) {
        const Scalar row = data.ci(i) + data.a[static_cast<std::size_t>(i)] + data.bi(i);
        if (row != row0)
            throw infer_error("condition (v)",
                              "row sums are not constant: differ at i = " + std::to_string(i));
    }
    const Scalar theta0 = row0;

    // Condition (vi) at i = 0 and i = 1 is linear in X = theta_1 - theta_0
    // and Y = X a*_0:  L_i = X theta*_i - Y. The boundary zeros c_0 and b_d
    // keep the out-of-range dual eigenvalues out of both equations.
    auto tstar = [&](int i) -> const Scalar& { return data.theta_star[static_cast<std::size_t>(i)]; };
    const Scalar L0 = -(data.bi(0) * (tstar(0) - tstar(1)));
    Scalar L1 = data.ci(1) * (tstar(0) - tstar(1));
    if (d >= 2) L1 -= data.bi(1) * (tstar(1) - tstar(2));
    const Scalar denom = tstar(0) - tstar(1);
    if (denom.is_zero())
        throw infer_error("condition (ii)", "theta*_0 = theta*_1: system for theta_1 is singular");
    const Scalar X = (L0 - L1) / denom;
    if (X.is_zero())
        throw infer_error("condition (i)", "solved theta_1 equals theta_0");
    const Scalar theta1 = theta0 + X;

    data.theta.assign(n + 1, Scalar::zero(data.field));
    data.theta[0] = theta0;
    data.theta[1] = theta1;
    if (d == 1) return data;  // theta is complete; beta never enters the solve

    BetaGammaStar bg;
    try {
        bg = derive_beta_gamma_star(data.theta_star, data.beta_override, data.gamma_star_override);
    } catch (const derivation_error& e) {
        throw infer_error("condition " + e.violation.condition, e.what());
    }
    const auto [ts_m1, ts_dp1] = extend_dual_eigenvalues(data.theta_star, bg.beta, bg.gamma_star);
    const ExtendedDual ts(data.theta_star, ts_m1, ts_dp1);

    // theta_-1 pins gamma; the rest of theta follows the recurrence.
    Scalar theta_m1 = Scalar::zero(data.field);
    try {
        theta_m1 = solve_theta_m1(data, ts, bg.beta, bg.gamma_star);
    } catch (const derivation_error& e) {
        throw infer_error("condition " + e.violation.condition, e.what());
    }
    const Scalar gamma = theta_m1 - bg.beta * theta0 + theta1;
    for (int i = 1; i <= d - 1; ++i)
        data.theta[static_cast<std::size_t>(i + 1)] =
            gamma + bg.beta * data.theta[static_cast<std::size_t>(i)] -
            data.theta[static_cast<std::size_t>(i - 1)];

    return data;
}

}  // namespace leonard
