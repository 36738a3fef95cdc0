#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mecsbox/sbox.hpp"

namespace mecsbox {

/// An exact fraction num/den as produced by the metrics below. Denominators
/// are powers of two (256 or 2048), so values are never reduced.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

    /// Fixed-point rendering with `digits` decimals, rounding half away from zero.
    std::string to_fixed(int digits = 4) const;

    friend bool operator==(const Ratio& a, const Ratio& b) noexcept { return a.num * b.den == b.num * a.den; }
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept {
        return a.num * b.den <=> b.num * a.den;
    }
};

/// Number of set bits.
int hamming_weight(std::uint32_t v) noexcept;

/// GF(2) dot product a.b, i.e. parity of a & b.
int dot(std::uint32_t a, std::uint32_t b) noexcept;

/// w[alpha][beta] = sum_x (-1)^(alpha.x xor beta.S(x)), all 256 x 256 entries.
class WalshSpectrum {
public:
    int at(std::uint32_t alpha, std::uint32_t beta) const noexcept { return w_[(beta << 8) | alpha]; }

    /// max |w[alpha][beta]| over all alpha for one output mask.
    int max_abs_for_output(std::uint32_t beta) const noexcept;

private:
    friend WalshSpectrum walsh_spectrum(const SBox& sbox);

    std::vector<std::int32_t> w_ = std::vector<std::int32_t>(SBox::kSize * SBox::kSize);
};

/// One fast Walsh-Hadamard transform per output mask.
WalshSpectrum walsh_spectrum(const SBox& sbox);

/// Minimum nonlinearity over the eight coordinate Boolean functions
/// S_1..S_8. This is the usual S-box "NL" figure (112 for AES).
int nonlinearity(const SBox& sbox);

/// 128 - max|w[alpha][beta]|/2 over every output mask beta != 0, i.e. the
/// distance of the worst component function to the affine functions.
int component_nonlinearity(const SBox& sbox);

/// Linear approximation probability:
/// (1/256) max_{alpha, beta != 0} |#{x : alpha.x = beta.S(x)} - 128| = max|w|/512.
Ratio lap(const SBox& sbox);

using DifferenceTable = std::array<std::array<std::uint16_t, SBox::kSize>, SBox::kSize>;

/// ddt[dx][dy] = #{x : S(x xor dx) = S(x) xor dy}.
DifferenceTable difference_distribution_table(const SBox& sbox);

/// Differential approximation probability: max over dx != 0 and dy of ddt / 256.
Ratio dap(const SBox& sbox);

/// An 8x8 matrix of counts sharing one denominator. Row/column indices are
/// zero-based bit positions: bit i of v is (v >> i) & 1.
struct BitMatrix {
    std::array<std::array<std::int64_t, 8>, 8> count{};
    std::int64_t den = 1;

    Ratio at(int row, int col) const noexcept { return Ratio{count[row][col], den}; }
    Ratio max(bool skip_diagonal = false) const noexcept;
    Ratio min(bool skip_diagonal = false) const noexcept;
};

/// m[i][j] = (1/256) sum_x bit_i(S(x xor e_j) xor S(x)), e_j = 1 << j.
BitMatrix sac_matrix(const SBox& sbox);

/// (max, min) over all 64 SAC entries.
std::pair<Ratio, Ratio> sac_minmax(const SBox& sbox);

/// Bit independence: for output bits i != k,
///   n[i][k] = (1/2048) sum_j sum_x bit_i(d) xor bit_k(d),  d = S(x xor e_j) xor S(x),
/// the rate at which output bits i and k flip differently, averaged over the
/// eight single-bit input flips. Diagonal entries are 0.
BitMatrix bic_matrix(const SBox& sbox);

/// (max, min) over the off-diagonal entries of bic_matrix.
std::pair<Ratio, Ratio> bic_minmax(const SBox& sbox);

}  // namespace mecsbox
