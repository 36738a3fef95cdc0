#pragma once

#include <array>
#include <cstdint>

#include "mecsbox/sbox.hpp"

namespace mecsbox {

/// x^8 + x^4 + x^3 + x + 1. Algebraic complexity depends on the field
/// representation; this is the one under which the AES S-box has 9 terms.
inline constexpr std::uint32_t kAesPolynomial = 0x11B;

/// Carry-less product reduced modulo kAesPolynomial.
std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) noexcept;

/// Table-driven product; same result as gf_mul.
std::uint8_t gf_mul_fast(std::uint8_t a, std::uint8_t b) noexcept;

std::uint8_t gf_pow(std::uint8_t a, unsigned exp) noexcept;

/// Multiplicative inverse; gf_inv(0) is defined as 0.
std::uint8_t gf_inv(std::uint8_t a) noexcept;

/// P(x) = sum_k coeffs[k] x^k over GF(2^8), degree at most 255.
struct SboxPolynomial {
    std::array<std::uint8_t, 256> coeffs{};

    std::uint8_t evaluate(std::uint8_t x) const noexcept;
    int nonzero_terms() const noexcept;
};

/// The unique polynomial of degree <= 255 with P(x) = sbox[x] for every x,
/// built from the Lagrange basis L_a(X) = prod_{c != a} (X - c) / (a - c).
SboxPolynomial interpolate(const SBox& sbox);

/// Number of nonzero coefficients of interpolate(sbox).
int algebraic_complexity(const SBox& sbox);

}  // namespace mecsbox
