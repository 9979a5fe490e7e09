#include "leonard/field.hpp"

#include <doctest.h>

#include <random>

using leonard::FieldDescriptor;
using leonard::Scalar;

namespace {

const FieldDescriptor Q = FieldDescriptor::rational();

Scalar random_scalar(std::mt19937& rng, const FieldDescriptor& f) {
    if (f.is_rational()) {
        std::uniform_int_distribution<long long> num(-60, 60);
        std::uniform_int_distribution<long long> den(1, 40);
        return Scalar::ratio(num(rng), den(rng), f);
    }
    std::uniform_int_distribution<long long> res(0, static_cast<long long>(f.modulus()) - 1);
    return Scalar::of(res(rng), f);
}

}  // namespace

TEST_CASE("descriptor accepts odd primes only") {
    CHECK_NOTHROW(FieldDescriptor::prime(3));
    CHECK_NOTHROW(FieldDescriptor::prime(11));
    CHECK_NOTHROW(FieldDescriptor::prime(101));
    CHECK_NOTHROW(FieldDescriptor::prime(4294967311ULL));  // prime > 2^32
    CHECK_THROWS_AS(FieldDescriptor::prime(2), leonard::error);
    CHECK_THROWS_AS(FieldDescriptor::prime(1), leonard::error);
    CHECK_THROWS_AS(FieldDescriptor::prime(9), leonard::error);
    CHECK_THROWS_AS(FieldDescriptor::prime(91), leonard::error);        // 7 * 13
    CHECK_THROWS_AS(FieldDescriptor::prime(3215031751ULL), leonard::error);  // strong pseudoprime
}

TEST_CASE("parse rational") {
    const Scalar x = Scalar::parse("93/35", Q);
    CHECK(x == Scalar::ratio(93, 35, Q));
    CHECK(x.str() == "93/35");

    // zero normalizes regardless of the written denominator
    CHECK(Scalar::parse("0/7", Q) == Scalar::of(0, Q));
    CHECK(Scalar::parse("0/7", Q).str() == "0");

    CHECK(Scalar::parse("-12/35", Q).str() == "-12/35");
    CHECK(Scalar::parse("6/4", Q).str() == "3/2");  // reduced storage
    CHECK(Scalar::parse("7", Q).str() == "7");
}

TEST_CASE("parse prime field") {
    const FieldDescriptor f11 = FieldDescriptor::prime(11);
    // 3/5 = 3 * 5^{-1} = 3 * 9 = 27 = 5 (mod 11); inverse checked by hand
    // with the extended Euclidean algorithm: 5 * 9 = 45 = 1 (mod 11)
    CHECK(Scalar::parse("3/5", f11) == Scalar::of(5, f11));
    CHECK(Scalar::parse("-1", f11) == Scalar::of(10, f11));

    // big literal reduced mod 11; expected value from an independent digit fold
    const std::string big = "123456789012345678901234567890";
    long long folded = 0;
    for (char ch : big) folded = (folded * 10 + (ch - '0')) % 11;
    CHECK(Scalar::parse(big, f11) == Scalar::of(folded, f11));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(Scalar::parse("", Q), leonard::error);
    CHECK_THROWS_AS(Scalar::parse("1/0", Q), leonard::error);
    CHECK_THROWS_AS(Scalar::parse("1/", Q), leonard::error);
    CHECK_THROWS_AS(Scalar::parse("/2", Q), leonard::error);
    CHECK_THROWS_AS(Scalar::parse("1.5", Q), leonard::error);
    CHECK_THROWS_AS(Scalar::parse("1/-2", Q), leonard::error);
    CHECK_THROWS_AS(Scalar::parse("+3", Q), leonard::error);
    CHECK_THROWS_AS(Scalar::parse("a", Q), leonard::error);
    // denominator divisible by p is not invertible
    CHECK_THROWS_AS(Scalar::parse("3/11", FieldDescriptor::prime(11)), leonard::error);
    CHECK_THROWS_AS(Scalar::parse("3/22", FieldDescriptor::prime(11)), leonard::error);
}

TEST_CASE("mixed-field operations are rejected") {
    const Scalar a = Scalar::of(1, Q);
    const Scalar b = Scalar::of(1, FieldDescriptor::prime(11));
    CHECK_THROWS_AS(a + b, leonard::error);
    CHECK_THROWS_AS(a * b, leonard::error);
    CHECK(a != b);
}

TEST_CASE("field axioms on randomized scalars") {
    std::mt19937 rng(20240917);
    for (const FieldDescriptor f : {Q, FieldDescriptor::prime(11), FieldDescriptor::prime(101)}) {
        for (int trial = 0; trial < 200; ++trial) {
            const Scalar x = random_scalar(rng, f);
            const Scalar y = random_scalar(rng, f);
            const Scalar z = random_scalar(rng, f);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            CHECK(x - x == Scalar::zero(f));
            if (!x.is_zero()) {
                CHECK(x * x.inverse() == Scalar::one(f));
                CHECK(x.pow(-3) == (x * x * x).inverse());
            }
            CHECK(Scalar::parse(x.str(), f) == x);  // render/parse round-trip
        }
    }
}

TEST_CASE("pow") {
    const Scalar two = Scalar::of(2, Q);
    CHECK(two.pow(10) == Scalar::of(1024, Q));
    CHECK(two.pow(0) == Scalar::one(Q));
    CHECK(two.pow(-2) == Scalar::ratio(1, 4, Q));
    CHECK_THROWS_AS(Scalar::zero(Q).pow(-1), leonard::error);
    CHECK_THROWS_AS(Scalar::one(Q) / Scalar::zero(Q), leonard::error);
}

TEST_CASE("arithmetic near the 64-bit boundary does not overflow") {
    // p is the largest prime below 2^64; expected values computed with
    // arbitrary-precision integers externally
    const FieldDescriptor f = FieldDescriptor::prime(18446744073709551557ULL);
    const Scalar x = Scalar::parse("18446744073709551556", f);  // p - 1
    const Scalar y = Scalar::parse("12345678901234567890", f);
    CHECK((x + y).str() == "12345678901234567889");
    CHECK((x * y).str() == "6101065172474983667");
    CHECK(y.inverse().str() == "14220650772667176576");
    CHECK(x * x == Scalar::one(f));  // (p-1)^2 = 1 mod p
    CHECK(Scalar::parse("123456789012345678901234567890123456789", f).str() ==
          "1348120302806842766");
    CHECK((x + Scalar::one(f)).is_zero());
}

TEST_CASE("rational arithmetic stays exact with large denominators") {
    // 35^3 turns up already in small idempotent products; make sure nothing
    // silently truncates
    Scalar big = Scalar::one(Q);
    for (int i = 0; i < 20; ++i) big *= Scalar::ratio(1, 35, Q);
    CHECK(big.str() == "1/" + [] {
        mpz_class v = 1;
        for (int i = 0; i < 20; ++i) v *= 35;
        return v.get_str();
    }());
}
