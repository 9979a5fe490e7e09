#include "leonard/data.hpp"

namespace leonard {

void ConditionReport::add(std::string condition, int index, std::optional<Scalar> residual,
                          std::string message) {
    violations.push_back({std::move(condition), index, std::move(residual), std::move(message)});
}

Scalar LeonardData::bi(int i) const {
    if (i < 0 || i > d) throw error("b index " + std::to_string(i) + " out of range");
    return i == d ? Scalar::zero(field) : b[static_cast<std::size_t>(i)];
}

Scalar LeonardData::ci(int i) const {
    if (i < 0 || i > d) throw error("c index " + std::to_string(i) + " out of range");
    return i == 0 ? Scalar::zero(field) : c[static_cast<std::size_t>(i - 1)];
}

void LeonardData::validate_shape() const {
    if (d < 1) throw error("diameter d must be >= 1");
    const auto n = static_cast<std::size_t>(d);
    if (theta.size() != n + 1) throw error("theta must have d+1 entries");
    if (theta_star.size() != n + 1) throw error("theta_star must have d+1 entries");
    if (a.size() != n + 1) throw error("a must have d+1 entries");
    if (b.size() != n) throw error("b must have d entries");
    if (c.size() != n) throw error("c must have d entries");
    auto check = [&](const std::vector<Scalar>& v, const char* name) {
        for (const Scalar& s : v)
            if (s.field() != field) throw error(std::string(name) + " entry not in the declared field");
    };
    check(theta, "theta");
    check(theta_star, "theta_star");
    check(a, "a");
    check(b, "b");
    check(c, "c");
    if (beta_override && beta_override->field() != field)
        throw error("beta override not in the declared field");
    if (gamma_star_override && gamma_star_override->field() != field)
        throw error("gamma_star override not in the declared field");
}

BetaGammaStar derive_beta_gamma_star(std::span<const Scalar> theta_star,
                                     const std::optional<Scalar>& beta_override,
                                     const std::optional<Scalar>& gamma_star_override,
                                     ConditionReport* report) {
    const int d = static_cast<int>(theta_star.size()) - 1;
    if (d < 1) throw error("need at least two dual eigenvalues");
    auto ts = [&](int i) -> const Scalar& { return theta_star[static_cast<std::size_t>(i)]; };

    Scalar beta = Scalar::zero(ts(0).field());
    if (d >= 3) {
        // equate the recurrence at i = 1 and i = 2:
        // ts0 - beta ts1 + ts2 = ts1 - beta ts2 + ts3
        const Scalar denom = ts(2) - ts(1);
        if (denom.is_zero())
            throw derivation_error({cond::iii, 2, std::nullopt,
                                    "cannot solve for beta: theta*_1 = theta*_2"});
        beta = (ts(1) + ts(3) - ts(0) - ts(2)) / denom;
        if (beta_override && *beta_override != beta) {
            ConditionViolation v{cond::iii, -1, beta - *beta_override,
                                 "supplied beta " + beta_override->str() +
                                     " disagrees with derived beta " + beta.str()};
            if (report)
                report->violations.push_back(v);
            else
                throw derivation_error(std::move(v));
        }
    } else {
        if (!beta_override)
            throw derivation_error({cond::iii, -1, std::nullopt,
                                    "beta is arbitrary for d <= 2 and must be supplied"});
        beta = *beta_override;
    }

    Scalar gamma_star = Scalar::zero(ts(0).field());
    if (d >= 2) {
        gamma_star = ts(0) - beta * ts(1) + ts(2);
    } else {
        if (!gamma_star_override)
            throw derivation_error({cond::iii, -1, std::nullopt,
                                    "gamma* is undetermined for d = 1 and must be supplied"});
        gamma_star = *gamma_star_override;
    }
    if (d >= 2 && gamma_star_override && *gamma_star_override != gamma_star) {
        ConditionViolation v{cond::iii, -1, gamma_star - *gamma_star_override,
                             "supplied gamma* " + gamma_star_override->str() +
                                 " disagrees with derived gamma* " + gamma_star.str()};
        if (report)
            report->violations.push_back(v);
        else
            throw derivation_error(std::move(v));
    }

    for (int i = 1; i <= d - 1; ++i) {
        const Scalar value = ts(i - 1) - beta * ts(i) + ts(i + 1);
        if (value != gamma_star) {
            ConditionViolation v{cond::iii, i, value - gamma_star,
                                 "theta*_{i-1} - beta theta*_i + theta*_{i+1} is not constant at i = " +
                                     std::to_string(i)};
            if (report)
                report->violations.push_back(v);
            else
                throw derivation_error(std::move(v));
        }
    }
    return {beta, gamma_star};
}

std::pair<Scalar, Scalar> extend_dual_eigenvalues(std::span<const Scalar> theta_star,
                                                  const Scalar& beta, const Scalar& gamma_star) {
    const std::size_t n = theta_star.size();
    if (n < 2) throw error("need at least two dual eigenvalues");
    const Scalar low = gamma_star + beta * theta_star[0] - theta_star[1];
    const Scalar high = gamma_star + beta * theta_star[n - 1] - theta_star[n - 2];
    return {low, high};
}

Scalar delta_star_value(std::span<const Scalar> theta_star_extended, const Scalar& beta,
                        const Scalar& gamma_star, ConditionReport* report) {
    if (theta_star_extended.size() < 3) throw error("extended sequence too short");
    auto eval = [&](std::size_t k) {
        const Scalar& prev = theta_star_extended[k];
        const Scalar& cur = theta_star_extended[k + 1];
        return prev * prev - beta * prev * cur + cur * cur - gamma_star * (prev + cur);
    };
    const Scalar common = eval(0);
    for (std::size_t k = 1; k + 1 < theta_star_extended.size(); ++k) {
        const Scalar value = eval(k);
        if (value != common) {
            ConditionViolation v{cond::delta_star, static_cast<int>(k), value - common,
                                 "delta* expression is not constant at i = " + std::to_string(k)};
            if (report)
                report->violations.push_back(v);
            else
                throw derivation_error(std::move(v));
        }
    }
    return common;
}

OmegaEtaStar derive_omega_eta_star(const LeonardData& data, const Scalar& gamma,
                                   const Scalar& gamma_star, const Scalar& a0_star,
                                   const Scalar& Omega, const Scalar& theta_star_m1,
                                   const Scalar& theta_star_dp1, ConditionReport* report) {
    const Scalar two = Scalar::of(2, data.field);
    const Scalar omega =
        two * data.theta[0] * (a0_star - gamma_star) - two * data.theta[1] * a0_star - Omega;

    auto ts = [&](int i) -> Scalar {
        if (i == -1) return theta_star_m1;
        if (i == data.d + 1) return theta_star_dp1;
        return data.theta_star[static_cast<std::size_t>(i)];
    };
    auto eval = [&](int i) {
        return data.a[static_cast<std::size_t>(i)] * (ts(i) - ts(i - 1)) * (ts(i) - ts(i + 1)) -
               gamma * ts(i) * ts(i) - omega * ts(i);
    };
    const Scalar eta_star = eval(0);
    for (int i = 1; i <= data.d; ++i) {
        const Scalar value = eval(i);
        if (value != eta_star) {
            ConditionViolation v{cond::eta_star, i, value - eta_star,
                                 "eta* expression is not constant at i = " + std::to_string(i)};
            if (report)
                report->violations.push_back(v);
            else
                throw derivation_error(std::move(v));
        }
    }
    return {omega, eta_star};
}

}  // namespace leonard
