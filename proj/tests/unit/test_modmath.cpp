#include <gtest/gtest.h>

#include "mecsbox/error.hpp"
#include "mecsbox/modmath.hpp"
#include "oracles.hpp"

using namespace mecsbox;

namespace {

ErrorCode validation_error(std::int64_t p) {
    try {
        FieldPrime::validate(p);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << p << " was accepted";
    return ErrorCode::BadFormat;
}

}  // namespace

TEST(FieldPrime, AcceptsPrimesCongruentToTwo) {
    EXPECT_EQ(FieldPrime::validate(1667).value(), 1667u);
    EXPECT_EQ(FieldPrime::validate(101).value(), 101u);
    EXPECT_EQ(FieldPrime::validate(5).value(), 5u);
}

TEST(FieldPrime, RejectsInOrder) {
    EXPECT_EQ(validation_error(7), ErrorCode::WrongResidueClass);
    EXPECT_EQ(validation_error(13), ErrorCode::WrongResidueClass);
    EXPECT_EQ(validation_error(3), ErrorCode::WrongResidueClass);
    EXPECT_EQ(validation_error(2), ErrorCode::TooSmall);
    EXPECT_EQ(validation_error(1), ErrorCode::NotPrime);
    EXPECT_EQ(validation_error(0), ErrorCode::NotPrime);
    EXPECT_EQ(validation_error(-5), ErrorCode::NotPrime);
    EXPECT_EQ(validation_error(9), ErrorCode::NotPrime);
    EXPECT_EQ(validation_error(1665), ErrorCode::NotPrime);
}

TEST(FieldPrime, PrimalityMatchesSieve) {
    constexpr int kLimit = 20000;
    std::vector<bool> composite(kLimit, false);
    composite[0] = composite[1] = true;
    for (int i = 2; i * i < kLimit; ++i)
        if (!composite[i])
            for (int j = i * i; j < kLimit; j += i) composite[j] = true;
    for (int n = 0; n < kLimit; ++n) ASSERT_EQ(is_prime(n), !composite[n]) << n;
}

TEST(FieldElement, ArithmeticWraps) {
    const auto f = FieldPrime::validate(101);
    EXPECT_EQ((f.element(100) + f.element(5)).value(), 4u);
    EXPECT_EQ((f.element(3) - f.element(5)).value(), 99u);
    EXPECT_EQ((f.element(50) * f.element(3)).value(), 49u);
    EXPECT_EQ(f.element(-1).value(), 100u);
    EXPECT_EQ(f.element(202).value(), 0u);
}

TEST(ModPow, Examples) {
    const auto f = FieldPrime::validate(101);
    EXPECT_EQ(mod_pow(f.element(2), 10).value(), 14u);
    EXPECT_EQ(mod_pow(f.element(37), 0).value(), 1u);
    EXPECT_EQ(mod_pow(f.element(0), 5).value(), 0u);
}

TEST(ModPow, MatchesRepeatedMultiplication) {
    for (std::int64_t p : {5, 11, 101, 1667}) {
        const auto f = FieldPrime::validate(p);
        for (std::uint64_t base = 0; base < static_cast<std::uint64_t>(p); base += 7)
            for (std::uint64_t e = 0; e < 60; ++e)
                ASSERT_EQ(mod_pow(f.element(static_cast<std::int64_t>(base)), e).value(), oracle::naive_pow(base, e, p))
                    << p << " " << base << "^" << e;
    }
}

TEST(ModPow, LargePrimeDoesNotOverflow) {
    const auto f = FieldPrime::validate(4294967291);  // largest 32-bit prime, = 2 mod 3
    // Fermat: a^(p-1) = 1
    EXPECT_EQ(mod_pow(f.element(123456789), f.value() - 1).value(), 1u);
}

TEST(CubeRoot, Examples) {
    const auto f5 = FieldPrime::validate(5);
    EXPECT_EQ(cube_root(f5.element(0)).value(), 0u);
    EXPECT_EQ(cube_root(f5.element(1)).value(), 1u);
    EXPECT_EQ(cube_root(f5.element(4)).value(), 4u);
}

TEST(CubeRoot, ExhaustiveUpTo5000) {
    for (std::int64_t p = 5; p <= 5000; ++p) {
        if (!is_prime(p) || p % 3 != 2) continue;
        const auto f = FieldPrime::validate(p);
        std::vector<int> hits(p, 0);
        for (std::int64_t a = 0; a < p; ++a) {
            const auto x = cube_root(f.element(a));
            ASSERT_EQ((x * x * x).value(), static_cast<std::uint64_t>(a)) << "p=" << p << " a=" << a;
            ++hits[x.value()];
        }
        // cubing is a bijection, so the roots must be distinct
        for (std::int64_t x = 0; x < p; ++x) ASSERT_EQ(hits[x], 1) << "p=" << p;
    }
}

TEST(CubeRoot, UniqueBySearch) {
    for (std::uint64_t p : {5u, 11u, 17u, 101u}) {
        const auto f = FieldPrime::validate(static_cast<std::int64_t>(p));
        for (std::uint64_t a = 0; a < p; ++a) {
            const auto roots = oracle::cube_roots_by_search(a, p);
            ASSERT_EQ(roots.size(), 1u);
            EXPECT_EQ(cube_root(f.element(static_cast<std::int64_t>(a))).value(), roots[0]);
        }
    }
}
