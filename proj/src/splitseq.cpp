#include "leonard/splitseq.hpp"

namespace leonard {

SplitSequences split_sequences(const LeonardData& data) {
    data.validate_shape();
    const int d = data.d;
    const auto& ts = data.theta_star;
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            if (ts[static_cast<std::size_t>(i)] == ts[static_cast<std::size_t>(j)])
                throw error("split_sequences: repeated dual eigenvalue theta*_" + std::to_string(i) +
                            " = theta*_" + std::to_string(j));
    auto t = [&](int i) -> const Scalar& { return ts[static_cast<std::size_t>(i)]; };

    SplitSequences out;
    for (int i = 1; i <= d; ++i) {
        if (i == 1) {
            out.varphi.push_back(data.bi(0) * (t(1) - t(0)));
        } else {
            Scalar num = Scalar::one(data.field);
            Scalar den = Scalar::one(data.field);
            for (int k = 0; k <= i - 1; ++k) num *= t(i) - t(k);
            for (int k = 0; k <= i - 2; ++k) den *= t(i - 1) - t(k);
            out.varphi.push_back(data.bi(i - 1) * num / den);
        }
    }
    for (int i = 1; i <= d; ++i) {
        if (i == d) {
            out.phi.push_back(data.ci(d) * (t(d - 1) - t(d)));
        } else {
            Scalar num = Scalar::one(data.field);
            Scalar den = Scalar::one(data.field);
            for (int k = i; k <= d; ++k) num *= t(i - 1) - t(k);
            for (int k = i + 1; k <= d; ++k) den *= t(i) - t(k);
            out.phi.push_back(data.ci(i) * num / den);
        }
    }
    return out;
}

std::pair<Scalar, Scalar> krawtchouk_split_closed_form(int d, int i, const FieldDescriptor& field) {
    if (i < 1 || i > d) throw error("split index out of range");
    const Scalar value = Scalar::of(2LL * i * (d - i + 1), field);
    return {-value, value};
}

std::pair<Scalar, Scalar> q_racah_split_closed_form(const QRacahParams& p, int i) {
    if (i < 1 || i > p.d) throw error("split index out of range");
    const int d = p.d;
    const Scalar a = p.a, b = p.b, c = p.c, q = p.q;
    auto qp = [&](int e) { return q.pow(e); };
    const Scalar shared = (qp(i) - qp(-i)) * (qp(i - d - 1) - qp(d - i + 1));
    const Scalar varphi = qp(d + 1) / (a * b) * shared *
                          (qp(-i) - a * b * c * qp(i - d - 1)) *
                          (qp(-i) - a * b / c * qp(i - d - 1));
    const Scalar phi = a / b * qp(d + 1) * shared *
                       (qp(-i) - b * c / a * qp(i - d - 1)) *
                       (qp(-i) - b / (a * c) * qp(i - d - 1));
    return {varphi, phi};
}

}  // namespace leonard
