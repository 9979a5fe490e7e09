#include "leonard/families.hpp"

namespace leonard {

namespace {

void compare(std::vector<std::string>& out, const char* name, const std::optional<Scalar>& expected,
             const Scalar& derived) {
    if (expected && *expected != derived)
        out.push_back(std::string(name) + ": expected " + expected->str() + ", derived " +
                      derived.str());
}

}  // namespace

std::vector<std::string> expected_mismatches(const ExpectedConstants& e,
                                             const RecurrenceConstants& k) {
    std::vector<std::string> out;
    compare(out, "beta", e.beta, k.beta);
    compare(out, "gamma", e.gamma, k.gamma);
    compare(out, "gamma_star", e.gamma_star, k.gamma_star);
    compare(out, "delta_star", e.delta_star, k.delta_star);
    compare(out, "omega", e.omega, k.omega);
    compare(out, "eta_star", e.eta_star, k.eta_star);
    compare(out, "Omega", e.Omega, k.Omega);
    compare(out, "a0_star", e.a0_star, k.a0_star);
    compare(out, "theta_m1", e.theta_m1, k.theta_m1);
    compare(out, "theta_dp1", e.theta_dp1, k.theta_dp1);
    compare(out, "theta_star_m1", e.theta_star_m1, k.theta_star_m1);
    compare(out, "theta_star_dp1", e.theta_star_dp1, k.theta_star_dp1);
    return out;
}

FamilyInstance krawtchouk(int d, const FieldDescriptor& field) {
    if (d < 1) throw error("krawtchouk: d must be >= 1");
    if (!field.is_rational() && field.modulus() <= static_cast<std::uint64_t>(d))
        throw error("krawtchouk: field characteristic must be zero or an odd prime greater than d");

    auto s = [&](long long v) { return Scalar::of(v, field); };

    FamilyInstance inst;
    LeonardData& data = inst.data;
    data.d = d;
    data.field = field;
    for (int i = 0; i <= d; ++i) {
        data.theta.push_back(s(d - 2 * i));
        data.theta_star.push_back(s(d - 2 * i));
        data.a.push_back(s(0));
    }
    for (int i = 0; i < d; ++i) data.b.push_back(s(d - i));
    for (int i = 1; i <= d; ++i) data.c.push_back(s(i));
    if (d <= 2) {
        data.beta_override = s(2);
        data.gamma_star_override = s(0);
    }

    ExpectedConstants& e = inst.expected;
    e.beta = s(2);
    e.gamma = s(0);
    e.gamma_star = s(0);
    e.delta_star = s(4);
    e.omega = s(0);
    e.eta_star = s(0);
    e.Omega = s(0);
    e.a0_star = s(0);
    e.theta_m1 = s(d + 2);
    e.theta_dp1 = s(-d - 2);
    e.theta_star_m1 = s(d + 2);
    e.theta_star_dp1 = s(-d - 2);
    return inst;
}

std::vector<std::string> q_racah_violations(const QRacahParams& p) {
    std::vector<std::string> out;
    if (p.d < 1) {
        out.push_back("d must be >= 1");
        return out;
    }
    const FieldDescriptor f = p.q.field();
    if (p.a.field() != f || p.b.field() != f || p.c.field() != f) {
        out.push_back("parameters a, b, c, q must share one field");
        return out;
    }
    for (const auto& [name, value] :
         {std::pair{"a", p.a}, std::pair{"b", p.b}, std::pair{"c", p.c}, std::pair{"q", p.q}}) {
        if (value.is_zero()) out.push_back(std::string(name) + " must be nonzero");
    }
    if (!out.empty()) return out;

    const Scalar one = Scalar::one(f);
    for (int i = 1; i <= p.d; ++i)
        if (p.q.pow(2 * i) == one)
            out.push_back("q^(2i) = 1 at i = " + std::to_string(i) +
                          " (required nonzero for 1 <= i <= d)");

    const Scalar a2 = p.a * p.a;
    const Scalar b2 = p.b * p.b;
    for (int k = 1 - p.d; k <= p.d - 1; ++k) {
        const Scalar power = p.q.pow(2 * k);
        if (a2 == power)
            out.push_back("a^2 is among q^(2d-2), ..., q^(2-2d): a^2 = q^(" +
                          std::to_string(2 * k) + ")");
        if (b2 == power)
            out.push_back("b^2 is among q^(2d-2), ..., q^(2-2d): b^2 = q^(" +
                          std::to_string(2 * k) + ")");
    }

    const std::pair<const char*, Scalar> triples[] = {
        {"abc", p.a * p.b * p.c},
        {"a^(-1)bc", p.b * p.c / p.a},
        {"ab^(-1)c", p.a * p.c / p.b},
        {"abc^(-1)", p.a * p.b / p.c},
    };
    for (int k = 1 - p.d; k <= p.d - 1; k += 2) {
        const Scalar power = p.q.pow(k);
        for (const auto& [name, value] : triples)
            if (value == power)
                out.push_back(std::string(name) + " is among q^(d-1), ..., q^(1-d): equals q^(" +
                              std::to_string(k) + ")");
    }
    return out;
}

FamilyInstance q_racah(const QRacahParams& p) {
    const auto violations = q_racah_violations(p);
    if (!violations.empty()) {
        std::string message = "q_racah: inadmissible parameters:";
        for (const auto& v : violations) message += "\n  " + v;
        throw error(message);
    }

    const FieldDescriptor f = p.q.field();
    const int d = p.d;
    const Scalar a = p.a, b = p.b, c = p.c, q = p.q;
    const Scalar ai = a.inverse(), bi = b.inverse(), ci = c.inverse();
    auto qp = [&](int e) { return q.pow(e); };

    FamilyInstance inst;
    LeonardData& data = inst.data;
    data.d = d;
    data.field = f;
    for (int i = 0; i <= d; ++i) {
        data.theta.push_back(a * qp(2 * i - d) + ai * qp(d - 2 * i));
        data.theta_star.push_back(b * qp(2 * i - d) + bi * qp(d - 2 * i));
    }

    for (int i = 0; i < d; ++i) {
        if (i == 0) {
            data.b.push_back((qp(d) - qp(-d)) * (c * q - ai * bi * qp(d)) *
                             (qp(-1) - a * b * ci * qp(-d)) / (b * qp(1 - d) - bi * qp(d - 1)));
        } else {
            data.b.push_back((qp(d - i) - qp(i - d)) * (b * qp(i - d) - bi * qp(d - i)) *
                             (c * qp(i + 1) - ai * bi * qp(d - i)) *
                             (qp(-i - 1) - a * b * ci * qp(i - d)) /
                             ((b * qp(2 * i - d) - bi * qp(d - 2 * i)) *
                              (b * qp(2 * i - d + 1) - bi * qp(d - 2 * i - 1))));
        }
    }
    for (int i = 1; i <= d; ++i) {
        if (i == d) {
            data.c.push_back((qp(d) - qp(-d)) * (ai * qp(-1) - bi * ci * qp(-d)) *
                             (b * qp(d) - a * c * q) / (b * qp(d - 1) - bi * qp(1 - d)));
        } else {
            data.c.push_back((qp(i) - qp(-i)) * (b * qp(i) - bi * qp(-i)) *
                             (ai * qp(i - d - 1) - bi * ci * qp(-i)) *
                             (b * qp(i) - a * c * qp(d - i + 1)) /
                             ((b * qp(2 * i - d - 1) - bi * qp(d - 2 * i + 1)) *
                              (b * qp(2 * i - d) - bi * qp(d - 2 * i))));
        }
    }
    for (int i = 0; i <= d; ++i)
        data.a.push_back(data.theta[0] - data.bi(i) - data.ci(i));

    const Scalar beta = q * q + (q * q).inverse();
    if (d <= 2) {
        data.beta_override = beta;
        data.gamma_star_override = Scalar::zero(f);
    }

    ExpectedConstants& e = inst.expected;
    e.beta = beta;
    e.gamma = Scalar::zero(f);
    e.gamma_star = Scalar::zero(f);
    e.theta_m1 = a * qp(-d - 2) + ai * qp(d + 2);
    e.theta_dp1 = a * qp(d + 2) + ai * qp(-d - 2);
    e.theta_star_m1 = b * qp(-d - 2) + bi * qp(d + 2);
    e.theta_star_dp1 = b * qp(d + 2) + bi * qp(-d - 2);
    e.a0_star = ((b + bi) * (a * q - ai * qp(-1)) - (c + ci) * (qp(d) - qp(-d))) /
                (a * qp(1 - d) - ai * qp(d - 1));
    e.Omega = (q * q - (q * q).inverse()) *
              ((qp(d + 1) - qp(-d - 1)) * (c + ci) - (a - ai) * (b + bi));
    return inst;
}

FamilyInstance racah_example() {
    const FieldDescriptor f = FieldDescriptor::rational();
    auto r = [&](long long num, long long den) { return Scalar::ratio(num, den, f); };

    FamilyInstance inst;
    LeonardData& data = inst.data;
    data.d = 5;
    data.field = f;
    data.theta_star = {r(3, 1), r(93, 35), r(69, 35), r(33, 35), r(-3, 7), r(-15, 7)};
    data.theta = data.theta_star;
    data.b = {r(3, 1), r(64, 35), r(243, 175), r(48, 49), r(11, 21)};
    data.c = {r(1, 1), r(192, 175), r(243, 245), r(16, 21), r(3, 7)};
    data.a = {r(0, 1), r(6, 35), r(18, 35), r(36, 35), r(12, 7), r(18, 7)};

    ExpectedConstants& e = inst.expected;
    e.beta = r(2, 1);
    e.gamma = r(-12, 35);
    e.gamma_star = r(-12, 35);
    e.delta_star = r(72, 35);
    e.omega = r(72, 35);
    e.eta_star = r(-108, 35);
    e.Omega = r(0, 1);
    e.a0_star = r(0, 1);
    e.theta_m1 = r(3, 1);
    e.theta_dp1 = r(-21, 5);
    e.theta_star_m1 = r(3, 1);
    e.theta_star_dp1 = r(-21, 5);
    return inst;
}

}  // namespace leonard
