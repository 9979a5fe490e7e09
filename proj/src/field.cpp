#include "leonard/field.hpp"

#include <ostream>

namespace leonard {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Extended Euclid; requires gcd(a, m) = 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = m, new_r = a % m;
    while (new_r != 0) {
        std::uint64_t quot = r / new_r;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(quot) * new_t;
        t = new_t;
        new_t = tmp_t;
        std::uint64_t tmp_r = r - quot * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw error("element has no inverse mod " + std::to_string(m));
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(m)) : static_cast<std::uint64_t>(t);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    // a, b < m; avoids overflow near 2^64
    return a >= m - b ? a - (m - b) : a + b;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

// Reduce an arbitrary-precision integer into [0, p). Floor division keeps
// the remainder nonnegative for negative inputs.
std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    return mpz_fdiv_ui(z.get_mpz_t(), p);
}

bool valid_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

bool is_odd_prime(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) return false;
    std::uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    // this witness set decides primality for every n < 2^64
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
    if (!is_odd_prime(p)) throw error("modulus " + std::to_string(p) + " is not an odd prime");
    return FieldDescriptor(FieldKind::Prime, p);
}

std::uint64_t FieldDescriptor::modulus() const {
    if (kind_ != FieldKind::Prime) throw error("rational field has no modulus");
    return modulus_;
}

std::string FieldDescriptor::str() const {
    return kind_ == FieldKind::Rational ? "Q" : "GF(" + std::to_string(modulus_) + ")";
}

Scalar Scalar::of(long long value, const FieldDescriptor& f) {
    Scalar s(f);
    if (f.is_rational()) {
        s.rational_ = mpq_class(mpz_class(std::to_string(value)));
    } else {
        const std::uint64_t p = f.modulus();
        long long v = value % static_cast<long long>(p);
        if (v < 0) v += static_cast<long long>(p);
        s.residue_ = static_cast<std::uint64_t>(v);
    }
    return s;
}

Scalar Scalar::ratio(long long num, long long den, const FieldDescriptor& f) {
    if (den == 0) throw error("zero denominator");
    return of(num, f) / of(den, f);
}

Scalar Scalar::parse(std::string_view text, const FieldDescriptor& f) {
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool neg = !num.empty() && num.front() == '-';
    std::string_view mag = neg ? num.substr(1) : num;
    if (!valid_digits(mag) || (!den.empty() && !valid_digits(den)) ||
        (den.empty() && text.find('/') != std::string_view::npos))
        throw error("malformed scalar '" + std::string(text) + "' (expected -?digits(/digits)?)");

    mpz_class n(std::string(mag), 10);
    if (neg) n = -n;
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0) throw error("zero denominator in '" + std::string(text) + "'");

    Scalar s(f);
    if (f.is_rational()) {
        s.rational_ = mpq_class(n, d);
        s.rational_.canonicalize();
    } else {
        const std::uint64_t p = f.modulus();
        std::uint64_t dr = reduce_mpz(d, p);
        if (dr == 0)
            throw error("denominator of '" + std::string(text) + "' is not invertible mod " + std::to_string(p));
        s.residue_ = mulmod(reduce_mpz(n, p), invmod(dr, p), p);
    }
    return s;
}

bool Scalar::is_zero() const {
    return desc_.is_rational() ? rational_ == 0 : residue_ == 0;
}

std::string Scalar::str() const {
    if (desc_.is_rational()) return rational_.get_str();
    return std::to_string(residue_);
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (desc_ != rhs.desc_)
        throw error("field mismatch: " + desc_.str() + " vs " + rhs.desc_.str());
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(rhs);
    Scalar s(desc_);
    if (desc_.is_rational())
        s.rational_ = rational_ + rhs.rational_;
    else
        s.residue_ = addmod(residue_, rhs.residue_, desc_.modulus());
    return s;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    require_same_field(rhs);
    Scalar s(desc_);
    if (desc_.is_rational())
        s.rational_ = rational_ - rhs.rational_;
    else
        s.residue_ = submod(residue_, rhs.residue_, desc_.modulus());
    return s;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(rhs);
    Scalar s(desc_);
    if (desc_.is_rational())
        s.rational_ = rational_ * rhs.rational_;
    else
        s.residue_ = mulmod(residue_, rhs.residue_, desc_.modulus());
    return s;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    return *this * rhs.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s(desc_);
    if (desc_.is_rational())
        s.rational_ = -rational_;
    else
        s.residue_ = residue_ == 0 ? 0 : desc_.modulus() - residue_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("division by zero in " + desc_.str());
    Scalar s(desc_);
    if (desc_.is_rational())
        s.rational_ = 1 / rational_;
    else
        s.residue_ = invmod(residue_, desc_.modulus());
    return s;
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result = one(desc_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (desc_ != rhs.desc_) return false;
    return desc_.is_rational() ? rational_ == rhs.rational_ : residue_ == rhs.residue_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

}  // namespace leonard
