#include "mecsbox/gf256.hpp"

#include <vector>

namespace mecsbox {

std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) noexcept {
    std::uint32_t acc = 0;
    std::uint32_t shifted = a;
    for (std::uint32_t bits = b; bits != 0; bits >>= 1) {
        if (bits & 1) acc ^= shifted;
        shifted <<= 1;
        if (shifted & 0x100) shifted ^= kAesPolynomial;
    }
    return static_cast<std::uint8_t>(acc);
}

namespace {

const std::vector<std::uint8_t>& mul_table() {
    static const std::vector<std::uint8_t> table = [] {
        std::vector<std::uint8_t> t(256 * 256);
        for (std::uint32_t a = 0; a < 256; ++a)
            for (std::uint32_t b = 0; b < 256; ++b)
                t[(a << 8) | b] = gf_mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b));
        return t;
    }();
    return table;
}

}  // namespace

std::uint8_t gf_mul_fast(std::uint8_t a, std::uint8_t b) noexcept {
    return mul_table()[(static_cast<std::uint32_t>(a) << 8) | b];
}

std::uint8_t gf_pow(std::uint8_t a, unsigned exp) noexcept {
    std::uint8_t result = 1;
    while (exp != 0) {
        if (exp & 1) result = gf_mul_fast(result, a);
        a = gf_mul_fast(a, a);
        exp >>= 1;
    }
    return result;
}

std::uint8_t gf_inv(std::uint8_t a) noexcept {
    // a^254 = a^-1 in GF(2^8)*, and 0^254 = 0.
    return gf_pow(a, 254);
}

std::uint8_t SboxPolynomial::evaluate(std::uint8_t x) const noexcept {
    std::uint8_t acc = 0;
    for (int k = 255; k >= 0; --k) acc = gf_mul_fast(acc, x) ^ coeffs[k];
    return acc;
}

int SboxPolynomial::nonzero_terms() const noexcept {
    int n = 0;
    for (auto c : coeffs) n += c != 0;
    return n;
}

SboxPolynomial interpolate(const SBox& sbox) {
    SboxPolynomial poly;
    std::array<std::uint8_t, 256> basis{};
    for (std::uint32_t a = 0; a < 256; ++a) {
        const auto node = static_cast<std::uint8_t>(a);
        if (sbox[a] == 0) continue;

        // prod_{c != a} (X - c) = (X^256 - X) / (X - a); subtraction is xor.
        // Synthetic division of X^256 + X by X + a, quotient degree 255.
        std::uint8_t carry = 1;
        basis[255] = carry;
        for (int k = 255; k >= 1; --k) {
            const std::uint8_t dividend = (k == 1) ? 1 : 0;
            carry = dividend ^ gf_mul_fast(node, carry);
            basis[k - 1] = carry;
        }

        std::uint8_t denom = 1;
        for (std::uint32_t c = 0; c < 256; ++c)
            if (c != a) denom = gf_mul_fast(denom, static_cast<std::uint8_t>(a ^ c));

        const std::uint8_t scale = gf_mul_fast(sbox[a], gf_inv(denom));
        for (int k = 0; k < 256; ++k) poly.coeffs[k] ^= gf_mul_fast(scale, basis[k]);
    }
    return poly;
}

int algebraic_complexity(const SBox& sbox) { return interpolate(sbox).nonzero_terms(); }

}  // namespace mecsbox
