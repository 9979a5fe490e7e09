// field.hpp -- exact scalar arithmetic over Q and GF(p).
//
// A Scalar is an immutable field element tagged with the field it lives in.
// Rational values are arbitrary-precision (GMP) and kept in canonical form
// (reduced, positive denominator); prime-field values are residues in [0, p)
// for an odd prime p < 2^64. All operations are pure and exact.

#ifndef LEONARD_FIELD_HPP
#define LEONARD_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace leonard {

/// Thrown on malformed input, zero divisors, and shape/field mismatches.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_odd_prime(std::uint64_t n);

enum class FieldKind { Rational, Prime };

/// Identifies the field a Scalar belongs to. Prime fields are GF(p) for an
/// odd prime p; characteristic 2 is rejected (beta = 2 degenerates there).
class FieldDescriptor {
public:
    static FieldDescriptor rational() { return FieldDescriptor(FieldKind::Rational, 0); }
    static FieldDescriptor prime(std::uint64_t p);  // throws unless p is an odd prime

    FieldKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == FieldKind::Rational; }
    std::uint64_t modulus() const;  // throws for rational fields

    /// Field characteristic: 0 for Q, p for GF(p).
    std::uint64_t characteristic() const { return kind_ == FieldKind::Prime ? modulus_ : 0; }

    std::string str() const;

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

private:
    FieldDescriptor(FieldKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    FieldKind kind_;
    std::uint64_t modulus_;  // 0 when rational
};

/// An exact field element. Binary operations require both operands to carry
/// the same descriptor and throw otherwise; there is no implicit coercion.
class Scalar {
public:
    Scalar() : desc_(FieldDescriptor::rational()), residue_(0) {}

    static Scalar zero(const FieldDescriptor& f) { return of(0, f); }
    static Scalar one(const FieldDescriptor& f) { return of(1, f); }
    static Scalar of(long long value, const FieldDescriptor& f);
    static Scalar ratio(long long num, long long den, const FieldDescriptor& f);

    /// Parses `-?digits(/digits)?`. Over GF(p) the value num/den is reduced
    /// mod p; a denominator divisible by p is rejected.
    static Scalar parse(std::string_view text, const FieldDescriptor& f);

    const FieldDescriptor& field() const { return desc_; }
    bool is_zero() const;

    /// Canonical text form: "num/den" (or plain "num" for integers) over Q,
    /// the decimal residue over GF(p). parse(str()) round-trips exactly.
    std::string str() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;  // throws on zero divisor
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
    Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

    Scalar inverse() const;       // throws on zero
    Scalar pow(long long e) const;  // negative exponents require a nonzero base

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

private:
    explicit Scalar(const FieldDescriptor& f) : desc_(f), residue_(0) {}

    void require_same_field(const Scalar& rhs) const;

    FieldDescriptor desc_;
    mpq_class rational_;      // payload when kind == Rational
    std::uint64_t residue_;   // payload when kind == Prime
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace leonard

#endif
