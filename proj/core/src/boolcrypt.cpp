#include "mecsbox/boolcrypt.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>

namespace mecsbox {

std::string Ratio::to_fixed(int digits) const {
    std::int64_t scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const bool negative = (num < 0) != (den < 0);
    const std::int64_t n = std::llabs(num);
    const std::int64_t d = std::llabs(den);
    const std::int64_t scaled = (2 * n * scale + d) / (2 * d);  // round half up on |value|
    std::string out = std::to_string(scaled / scale);
    if (digits > 0) {
        std::string frac = std::to_string(scaled % scale);
        out += '.' + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
    }
    return (negative && scaled != 0 ? "-" : "") + out;
}

int hamming_weight(std::uint32_t v) noexcept { return std::popcount(v); }

int dot(std::uint32_t a, std::uint32_t b) noexcept { return std::popcount(a & b) & 1; }

int WalshSpectrum::max_abs_for_output(std::uint32_t beta) const noexcept {
    int best = 0;
    for (std::uint32_t alpha = 0; alpha < SBox::kSize; ++alpha) best = std::max(best, std::abs(at(alpha, beta)));
    return best;
}

WalshSpectrum walsh_spectrum(const SBox& sbox) {
    WalshSpectrum spectrum;
    for (std::uint32_t beta = 0; beta < SBox::kSize; ++beta) {
        std::int32_t* row = spectrum.w_.data() + (beta << 8);
        for (std::uint32_t x = 0; x < SBox::kSize; ++x) row[x] = dot(beta, sbox[x]) ? -1 : 1;
        for (std::size_t h = 1; h < SBox::kSize; h <<= 1) {
            for (std::size_t i = 0; i < SBox::kSize; i += 2 * h) {
                for (std::size_t j = i; j < i + h; ++j) {
                    const auto a = row[j];
                    const auto b = row[j + h];
                    row[j] = a + b;
                    row[j + h] = a - b;
                }
            }
        }
    }
    return spectrum;
}

int nonlinearity(const SBox& sbox) {
    const auto spectrum = walsh_spectrum(sbox);
    int worst = 0;
    for (int i = 0; i < 8; ++i) worst = std::max(worst, spectrum.max_abs_for_output(1u << i));
    return 128 - worst / 2;
}

namespace {

int max_abs_walsh(const SBox& sbox) {
    const auto spectrum = walsh_spectrum(sbox);
    int worst = 0;
    for (std::uint32_t beta = 1; beta < SBox::kSize; ++beta) worst = std::max(worst, spectrum.max_abs_for_output(beta));
    return worst;
}

}  // namespace

int component_nonlinearity(const SBox& sbox) { return 128 - max_abs_walsh(sbox) / 2; }

Ratio lap(const SBox& sbox) { return Ratio{max_abs_walsh(sbox) / 2, 256}; }

DifferenceTable difference_distribution_table(const SBox& sbox) {
    DifferenceTable ddt{};
    for (std::uint32_t dx = 0; dx < SBox::kSize; ++dx) {
        for (std::uint32_t x = 0; x < SBox::kSize; ++x) ++ddt[dx][sbox[x ^ dx] ^ sbox[x]];
    }
    return ddt;
}

Ratio dap(const SBox& sbox) {
    const auto ddt = difference_distribution_table(sbox);
    std::int64_t best = 0;
    for (std::uint32_t dx = 1; dx < SBox::kSize; ++dx) {
        best = std::max<std::int64_t>(best, *std::max_element(ddt[dx].begin(), ddt[dx].end()));
    }
    return Ratio{best, 256};
}

Ratio BitMatrix::max(bool skip_diagonal) const noexcept {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            if (!(skip_diagonal && r == c)) best = std::max(best, count[r][c]);
    return Ratio{best, den};
}

Ratio BitMatrix::min(bool skip_diagonal) const noexcept {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            if (!(skip_diagonal && r == c)) best = std::min(best, count[r][c]);
    return Ratio{best, den};
}

BitMatrix sac_matrix(const SBox& sbox) {
    BitMatrix m;
    m.den = 256;
    for (int j = 0; j < 8; ++j) {
        for (std::uint32_t x = 0; x < SBox::kSize; ++x) {
            const std::uint32_t d = sbox[x ^ (1u << j)] ^ sbox[x];
            for (int i = 0; i < 8; ++i) m.count[i][j] += (d >> i) & 1;
        }
    }
    return m;
}

std::pair<Ratio, Ratio> sac_minmax(const SBox& sbox) {
    const auto m = sac_matrix(sbox);
    return {m.max(), m.min()};
}

BitMatrix bic_matrix(const SBox& sbox) {
    BitMatrix n;
    n.den = 8 * 256;
    for (int j = 0; j < 8; ++j) {
        for (std::uint32_t x = 0; x < SBox::kSize; ++x) {
            const std::uint32_t d = sbox[x ^ (1u << j)] ^ sbox[x];
            for (int i = 0; i < 8; ++i)
                for (int k = 0; k < 8; ++k)
                    if (i != k) n.count[i][k] += ((d >> i) ^ (d >> k)) & 1;
        }
    }
    return n;
}

std::pair<Ratio, Ratio> bic_minmax(const SBox& sbox) {
    const auto n = bic_matrix(sbox);
    return {n.max(true), n.min(true)};
}

}  // namespace mecsbox
