// splitseq.hpp -- first and second split sequences of a Leonard system.
//
// The split sequences (varphi_i) and (phi_i), 1 <= i <= d, complete the
// parameter array (theta; theta*; varphi; phi). They are computed from the
// intersection numbers and dual eigenvalues; the boundary indices have
// their own two-factor formulas and the interior indices use telescoping
// products of dual eigenvalue differences.

#ifndef LEONARD_SPLITSEQ_HPP
#define LEONARD_SPLITSEQ_HPP

#include "leonard/data.hpp"
#include "leonard/families.hpp"

namespace leonard {

struct SplitSequences {
    std::vector<Scalar> varphi;  // varphi[i-1] holds varphi_i, 1 <= i <= d
    std::vector<Scalar> phi;     // phi[i-1] holds phi_i
};

/// varphi_1 = b_0(theta*_1 - theta*_0), phi_d = c_d(theta*_{d-1} -
/// theta*_d); interior values are b_{i-1} resp. c_i times a ratio of
/// products of dual eigenvalue differences. Throws when theta* values
/// repeat (a repeated value makes a denominator vanish and the data cannot
/// come from a Leonard system).
SplitSequences split_sequences(const LeonardData& data);

/// Krawtchouk closed form: varphi_i = -2i(d-i+1), phi_i = 2i(d-i+1).
std::pair<Scalar, Scalar> krawtchouk_split_closed_form(int d, int i, const FieldDescriptor& field);

/// q-Racah closed form:
///   varphi_i = a^{-1}b^{-1} q^{d+1} (q^i - q^{-i})(q^{i-d-1} - q^{d-i+1})
///              (q^{-i} - abc q^{i-d-1})(q^{-i} - abc^{-1} q^{i-d-1}),
/// and phi_i likewise with prefactor ab^{-1} and a replaced by a^{-1} in
/// the last two factors.
std::pair<Scalar, Scalar> q_racah_split_closed_form(const QRacahParams& params, int i);

}  // namespace leonard

#endif
