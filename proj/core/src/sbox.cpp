#include "mecsbox/sbox.hpp"

#include <algorithm>
#include <bitset>
#include <string>
#include <vector>

#include "mecsbox/error.hpp"

namespace mecsbox {

SBox SBox::from_values(std::span<const std::int64_t> values) {
    if (values.size() != kSize) {
        throw Error(ErrorCode::BadTable, "expected 256 entries, got " + std::to_string(values.size()));
    }
    Table table{};
    for (std::size_t i = 0; i < kSize; ++i) {
        if (values[i] < 0 || values[i] > 255) {
            throw Error(ErrorCode::BadTable,
                        "entry " + std::to_string(i) + " = " + std::to_string(values[i]) + " is outside [0, 255]");
        }
        table[i] = static_cast<std::uint8_t>(values[i]);
    }
    return SBox(table);
}

SBox SBox::identity() noexcept {
    Table table{};
    for (std::size_t i = 0; i < kSize; ++i) table[i] = static_cast<std::uint8_t>(i);
    return SBox(table);
}

bool SBox::is_bijective() const noexcept {
    std::bitset<kSize> seen;
    for (auto v : table_) seen.set(v);
    return seen.all();
}

namespace {

template <typename Solver>
SBox generate_with(const CurveParams& curve, OrderingKind kind, GenerationStats* stats, Solver solve) {
    if (curve.p() < kMinSBoxPrime) {
        throw Error(ErrorCode::PrimeTooSmall,
                    "p = " + std::to_string(curve.p()) + " is below " + std::to_string(kMinSBoxPrime));
    }
    std::vector<AffinePoint> selected;
    selected.reserve(SBox::kSize);
    std::size_t peak = 0;
    for (std::uint64_t y = 0; y < SBox::kSize; ++y) {
        selected.push_back(solve(curve, y));
        peak = std::max(peak, selected.size());
    }
    std::sort(selected.begin(), selected.end(), PointLess{kind});

    SBox::Table table{};
    std::transform(selected.begin(), selected.end(), table.begin(),
                   [](const AffinePoint& pt) { return static_cast<std::uint8_t>(pt.y()); });
    if (stats != nullptr) stats->peak_points_stored = peak;
    return SBox(table, Provenance{curve.p(), curve.b(), kind});
}

}  // namespace

SBox generate(const CurveParams& curve, OrderingKind kind, GenerationStats* stats) {
    if (stats != nullptr) stats->candidates_scanned = 0;
    return generate_with(curve, kind, stats, [](const CurveParams& c, std::uint64_t y) { return solve_x_for_y(c, y); });
}

SBox generate_via_loop(const CurveParams& curve, OrderingKind kind, GenerationStats* stats) {
    std::uint64_t scanned = 0;
    auto sbox = generate_with(curve, kind, stats, [&scanned](const CurveParams& c, std::uint64_t y) {
        auto pt = solve_x_for_y_loop(c, y);
        scanned += pt.x() + 1;
        return pt;
    });
    if (stats != nullptr) stats->candidates_scanned = scanned;
    return sbox;
}

SBox inverse(const SBox& sbox) {
    if (!sbox.is_bijective()) throw Error(ErrorCode::NotBijective, "table is not a permutation of 0..255");
    SBox::Table inv{};
    for (std::size_t i = 0; i < SBox::kSize; ++i) inv[sbox[i]] = static_cast<std::uint8_t>(i);
    return SBox(inv);
}

}  // namespace mecsbox
