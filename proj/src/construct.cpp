#include "leonard/construct.hpp"

namespace leonard {

namespace {

bool pairwise_distinct(std::span<const Scalar> values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (values[i] == values[j]) return false;
    return true;
}

// Tridiagonal entries of A read back out; the off-tridiagonal part of a
// built pair is zero by construction.
Scalar entry_or_zero(const ExactMatrix& M, int r, int c) {
    if (r < 0 || c < 0 || r >= M.rows() || c >= M.cols()) return Scalar::zero(M.field());
    return M(r, c);
}

}  // namespace

MatrixPair build_pair(const Certificate& cert) {
    const LeonardData& data = cert.data;
    const int n = data.d + 1;
    ExactMatrix A(n, n, data.field);
    ExactMatrix A_star(n, n, data.field);
    for (int i = 0; i < n; ++i) {
        A(i, i) = data.a[static_cast<std::size_t>(i)];
        if (i < data.d) {
            A(i, i + 1) = data.bi(i);
            A(i + 1, i) = data.ci(i + 1);
        }
        A_star(i, i) = data.theta_star[static_cast<std::size_t>(i)];
    }
    return {std::move(A), std::move(A_star), data.d};
}

std::optional<IdempotentSystem> try_primitive_idempotents(const ExactMatrix& A,
                                                          std::span<const Scalar> theta,
                                                          std::string& reason) {
    const int n = A.rows();
    if (A.cols() != n) {
        reason = "matrix is not square";
        return std::nullopt;
    }
    if (static_cast<int>(theta.size()) != n) {
        reason = "expected " + std::to_string(n) + " eigenvalues";
        return std::nullopt;
    }
    if (!pairwise_distinct(theta)) {
        reason = "claimed eigenvalues are not pairwise distinct";
        return std::nullopt;
    }
    const FieldDescriptor f = A.field();
    const ExactMatrix I = ExactMatrix::identity(n, f);

    IdempotentSystem sys;
    sys.eigenvalues.assign(theta.begin(), theta.end());
    for (int i = 0; i < n; ++i) {
        ExactMatrix E = I;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const Scalar denom = theta[static_cast<std::size_t>(i)] - theta[static_cast<std::size_t>(j)];
            E = E * (A - I.scaled(theta[static_cast<std::size_t>(j)])).scaled(denom.inverse());
        }
        sys.E.push_back(std::move(E));
    }

    // invariants of a system of mutually orthogonal rank-one idempotents
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const ExactMatrix prod = sys.E[static_cast<std::size_t>(i)] * sys.E[static_cast<std::size_t>(j)];
            const bool ok = (i == j) ? prod == sys.E[static_cast<std::size_t>(i)] : prod.is_zero();
            if (!ok) {
                reason = "E_" + std::to_string(i) + " E_" + std::to_string(j) +
                         " != " + (i == j ? "E_" + std::to_string(i) : "0");
                return std::nullopt;
            }
        }
    for (int i = 0; i < n; ++i)
        if (sys.E[static_cast<std::size_t>(i)].rank() != 1) {
            reason = "rank(E_" + std::to_string(i) + ") != 1";
            return std::nullopt;
        }
    ExactMatrix sum(n, n, f);
    ExactMatrix weighted(n, n, f);
    for (int i = 0; i < n; ++i) {
        sum = sum + sys.E[static_cast<std::size_t>(i)];
        weighted = weighted + sys.E[static_cast<std::size_t>(i)].scaled(theta[static_cast<std::size_t>(i)]);
    }
    if (sum != I) {
        reason = "sum of E_i != I";
        return std::nullopt;
    }
    if (weighted != A) {
        reason = "sum of theta_i E_i != A";
        return std::nullopt;
    }
    for (int i = 0; i < n; ++i) {
        const ExactMatrix lhs = A * sys.E[static_cast<std::size_t>(i)];
        if (lhs != sys.E[static_cast<std::size_t>(i)].scaled(theta[static_cast<std::size_t>(i)])) {
            reason = "A E_" + std::to_string(i) + " != theta_" + std::to_string(i) + " E_" + std::to_string(i);
            return std::nullopt;
        }
    }
    ExactMatrix poly = I;
    for (int i = 0; i < n; ++i) poly = poly * (A - I.scaled(theta[static_cast<std::size_t>(i)]));
    if (!poly.is_zero()) {
        reason = "prod (A - theta_i I) != 0";
        return std::nullopt;
    }
    return sys;
}

IdempotentSystem primitive_idempotents(const ExactMatrix& A, std::span<const Scalar> theta) {
    std::string reason;
    auto sys = try_primitive_idempotents(A, theta, reason);
    if (!sys) throw error("claimed eigenvalues are not the spectrum of A: " + reason);
    return std::move(*sys);
}

bool minimal_polynomial_matches(const ExactMatrix& M, std::span<const Scalar> eigenvalues) {
    const int n = M.rows();
    const ExactMatrix I = ExactMatrix::identity(n, M.field());
    ExactMatrix full = I;
    for (const Scalar& ev : eigenvalues) full = full * (M - I.scaled(ev));
    if (!full.is_zero()) return false;
    // a vanishing strict-subset product would also vanish for some
    // leave-one-out product, so checking those suffices
    for (std::size_t skip = 0; skip < eigenvalues.size(); ++skip) {
        ExactMatrix partial = I;
        for (std::size_t j = 0; j < eigenvalues.size(); ++j)
            if (j != skip) partial = partial * (M - I.scaled(eigenvalues[j]));
        if (partial.is_zero()) return false;
    }
    return true;
}

ConditionReport verify_leonard_system(const MatrixPair& pair, std::span<const Scalar> theta,
                                      std::span<const Scalar> theta_star) {
    ConditionReport report;

    if (!pairwise_distinct(theta))
        report.add("(i)", -1, std::nullopt, "claimed eigenvalues of A repeat");
    if (!pairwise_distinct(theta_star))
        report.add("(i)", -1, std::nullopt, "claimed eigenvalues of A* repeat");

    std::string reason;
    auto E = try_primitive_idempotents(pair.A, theta, reason);
    if (!E)
        report.add("(ii)", -1, std::nullopt,
                   "A is not multiplicity-free with the claimed spectrum: " + reason);
    auto E_star = try_primitive_idempotents(pair.A_star, theta_star, reason);
    if (!E_star)
        report.add("(iii)", -1, std::nullopt,
                   "A* is not multiplicity-free with the claimed spectrum: " + reason);

    auto check_pattern = [&](const std::vector<ExactMatrix>& idems, const ExactMatrix& middle,
                             const char* clause) {
        const int n = static_cast<int>(idems.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const ExactMatrix prod =
                    idems[static_cast<std::size_t>(i)] * middle * idems[static_cast<std::size_t>(j)];
                const int gap = i > j ? i - j : j - i;
                if (gap > 1 && !prod.is_zero())
                    report.add(clause, i, std::nullopt,
                               "E_i X E_j nonzero at (i,j) = (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") with |i-j| > 1");
                if (gap == 1 && prod.is_zero())
                    report.add(clause, i, std::nullopt,
                               "E_i X E_j zero at (i,j) = (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") with |i-j| = 1");
            }
    };
    if (E_star) check_pattern(E_star->E, pair.A, "(iv)");
    if (E) check_pattern(E->E, pair.A_star, "(v)");

    return report;
}

ExactMatrix askey_wilson_residual(const MatrixPair& pair, const RecurrenceConstants& k) {
    const ExactMatrix& A = pair.A;
    const ExactMatrix& S = pair.A_star;
    const ExactMatrix I = ExactMatrix::identity(A.rows(), A.field());
    const ExactMatrix S2 = S * S;
    return S2 * A - (S * A * S).scaled(k.beta) + A * S2 -
           (A * S + S * A).scaled(k.gamma_star) - A.scaled(k.delta_star) - S2.scaled(k.gamma) -
           S.scaled(k.omega) - I.scaled(k.eta_star);
}

DualizedPair dualize(const MatrixPair& pair, const IdempotentSystem& E) {
    const int n = pair.d + 1;
    const FieldDescriptor f = pair.A.field();
    if (static_cast<int>(E.E.size()) != n) throw error("idempotent count does not match d+1");

    // basis w_i = E_i e_0; P has the w_i as columns
    ExactMatrix P(n, n, f);
    for (int i = 0; i < n; ++i) {
        bool nonzero = false;
        for (int r = 0; r < n; ++r) {
            P(r, i) = E.E[static_cast<std::size_t>(i)](r, 0);
            nonzero = nonzero || !P(r, i).is_zero();
        }
        if (!nonzero)
            throw error("E_" + std::to_string(i) + " e_0 = 0: the input is not a Leonard system");
    }
    auto P_inv = P.inverse();
    if (!P_inv) throw error("dual basis vectors are linearly dependent");

    DualizedPair out{*P_inv * pair.A_star * P, *P_inv * pair.A * P, {}, {}, {}, {}};

    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const int gap = r > c ? r - c : c - r;
            if (gap > 1 && !out.B_star(r, c).is_zero())
                out.report.add("tridiagonal", r, out.B_star(r, c),
                               "B* has a nonzero entry at (" + std::to_string(r) + "," +
                                   std::to_string(c) + ")");
            if (gap == 1 && out.B_star(r, c).is_zero())
                out.report.add("irreducible", r, std::nullopt,
                               "B* has a zero sub/superdiagonal entry at (" + std::to_string(r) +
                                   "," + std::to_string(c) + ")");
        }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (r != c && !out.B(r, c).is_zero())
                out.report.add("diagonal", r, out.B(r, c),
                               "A is not diagonal in the dual basis at (" + std::to_string(r) +
                                   "," + std::to_string(c) + ")");

    for (int i = 0; i < n; ++i) out.a_star.push_back(out.B_star(i, i));
    for (int i = 0; i + 1 < n; ++i) {
        out.b_star.push_back(out.B_star(i, i + 1));
        out.c_star.push_back(out.B_star(i + 1, i));
    }

    // dual row sums c*_i + a*_i + b*_i must all equal theta*_0
    const Scalar target = pair.A_star(0, 0);
    for (int i = 0; i < n; ++i) {
        const Scalar row_sum = entry_or_zero(out.B_star, i, i - 1) + out.B_star(i, i) +
                               entry_or_zero(out.B_star, i, i + 1);
        if (row_sum != target)
            out.report.add("row_sum", i, row_sum - target,
                           "dual row sum differs from theta*_0 at i = " + std::to_string(i));
    }
    return out;
}

ConditionReport check_witness_vectors(const MatrixPair& pair, const Scalar& a0_star,
                                      const Scalar& theta0, const Scalar& theta1) {
    ConditionReport report;
    const int n = pair.d + 1;
    const FieldDescriptor f = pair.A.field();

    ExactMatrix v0(n, 1, f);
    ExactMatrix v1(n, 1, f);
    for (int i = 0; i < n; ++i) {
        v0(i, 0) = Scalar::one(f);
        v1(i, 0) = pair.A_star(i, i) - a0_star;
    }

    const ExactMatrix r0 = pair.A * v0 - v0.scaled(theta0);
    for (int i = 0; i < n; ++i)
        if (!r0(i, 0).is_zero())
            report.add("witness_v0", i, r0(i, 0), "A v0 != theta_0 v0 at row " + std::to_string(i));

    const ExactMatrix r1 = pair.A * v1 - v1.scaled(theta1);
    for (int i = 0; i < n; ++i)
        if (!r1(i, 0).is_zero())
            report.add("witness_v1", i, r1(i, 0), "A v1 != theta_1 v1 at row " + std::to_string(i));

    const ExactMatrix r2 = pair.A_star * v0 - v1 - v0.scaled(a0_star);
    for (int i = 0; i < n; ++i)
        if (!r2(i, 0).is_zero())
            report.add("witness_shift", i, r2(i, 0),
                       "A* v0 - v1 != a*_0 v0 at row " + std::to_string(i));

    // c_i(ts_{i-1} - a*_0) + a_i(ts_i - a*_0) + b_i(ts_{i+1} - a*_0)
    //   = theta_1 (ts_i - a*_0), with c_0 = b_d = 0
    for (int i = 0; i < n; ++i) {
        Scalar lhs = pair.A(i, i) * (pair.A_star(i, i) - a0_star);
        if (i > 0) lhs += pair.A(i, i - 1) * (pair.A_star(i - 1, i - 1) - a0_star);
        if (i < pair.d) lhs += pair.A(i, i + 1) * (pair.A_star(i + 1, i + 1) - a0_star);
        const Scalar residual = lhs - theta1 * (pair.A_star(i, i) - a0_star);
        if (!residual.is_zero())
            report.add("witness_ttr", i, residual,
                       "three-term witness identity fails at i = " + std::to_string(i));
    }
    return report;
}

}  // namespace leonard
