#pragma once

#include <compare>
#include <cstdint>

namespace mecsbox {

class FieldElement;

/// A prime p >= 5 with p = 2 (mod 3). Such primes make x -> x^3 a
/// bijection on F_p, which is what every Mordell curve here relies on.
///
/// Primes are limited to 32 bits so that products of two residues fit
/// in 64-bit arithmetic.
class FieldPrime {
public:
    /// Throws Error with NotPrime, WrongResidueClass or TooSmall, checked in
    /// that order.
    static FieldPrime validate(std::int64_t p);

    std::uint64_t value() const noexcept { return p_; }

    /// Canonical representative of `v` in [0, p-1]; negative inputs wrap.
    FieldElement element(std::int64_t v) const noexcept;

    /// Exponent e = (2p-1)/3 with (a^e)^3 = a for every a.
    std::uint64_t cube_root_exponent() const noexcept { return (2 * p_ - 1) / 3; }

    friend bool operator==(const FieldPrime&, const FieldPrime&) = default;

private:
    explicit FieldPrime(std::uint64_t p) noexcept : p_(p) {}

    std::uint64_t p_;
};

bool is_prime(std::int64_t n) noexcept;

class FieldElement {
public:
    FieldElement(const FieldPrime& field, std::uint64_t canonical) noexcept
        : p_(field.value()), v_(canonical) {}

    std::uint64_t value() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return p_; }

    /// The multiplicative identity of the same field.
    FieldElement unit() const noexcept { return FieldElement(p_, 1, 0); }

    FieldElement operator+(FieldElement rhs) const noexcept;
    FieldElement operator-(FieldElement rhs) const noexcept;
    FieldElement operator*(FieldElement rhs) const noexcept;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    FieldElement(std::uint64_t p, std::uint64_t v, int) noexcept : p_(p), v_(v) {}

    std::uint64_t p_;
    std::uint64_t v_;
};

/// Square-and-multiply; 0^0 is 1.
FieldElement mod_pow(FieldElement base, std::uint64_t exp) noexcept;

/// The unique x with x^3 = a (mod p).
FieldElement cube_root(FieldElement a) noexcept;

}  // namespace mecsbox
