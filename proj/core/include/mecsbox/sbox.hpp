#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "mecsbox/curve.hpp"
#include "mecsbox/ordering.hpp"

namespace mecsbox {

struct Provenance {
    std::uint64_t p;
    std::uint64_t b;
    OrderingKind ordering;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// A 256-entry substitution table. Generated tables are always bijective;
/// tables loaded from files may not be, and the analysis code accepts both.
class SBox {
public:
    static constexpr std::size_t kSize = 256;
    using Table = std::array<std::uint8_t, kSize>;

    explicit SBox(const Table& table, std::optional<Provenance> provenance = std::nullopt) noexcept
        : table_(table), provenance_(provenance) {}

    /// Throws Error(BadTable) unless there are exactly 256 values in [0, 255].
    static SBox from_values(std::span<const std::int64_t> values);
    static SBox identity() noexcept;

    std::uint8_t operator[](std::size_t i) const noexcept { return table_[i]; }
    const Table& table() const noexcept { return table_; }
    const std::optional<Provenance>& provenance() const noexcept { return provenance_; }

    bool is_bijective() const noexcept;

    /// Equality is on the table only; provenance is metadata.
    friend bool operator==(const SBox& lhs, const SBox& rhs) noexcept { return lhs.table_ == rhs.table_; }

private:
    Table table_;
    std::optional<Provenance> provenance_;
};

/// Smallest prime for which the curve has 256 points with y <= 255.
inline constexpr std::uint64_t kMinSBoxPrime = 257;

/// Instrumentation filled in by the generators.
struct GenerationStats {
    /// Largest number of curve points held at once.
    std::size_t peak_points_stored = 0;
    /// x values tested by the scanning variant before each match; 0 for the cube-root path.
    std::uint64_t candidates_scanned = 0;
};

/// Take the 256 points with y in [0, 255], sort them under `kind` and read
/// off their y-coordinates. Throws Error(PrimeTooSmall) if p < 257.
SBox generate(const CurveParams& curve, OrderingKind kind, GenerationStats* stats = nullptr);

/// Same output as generate(), but each point is found by scanning all x in
/// [0, p-1], giving O(p) work per S-box.
SBox generate_via_loop(const CurveParams& curve, OrderingKind kind, GenerationStats* stats = nullptr);

/// T with T[s[i]] = i. Throws Error(NotBijective).
SBox inverse(const SBox& sbox);

}  // namespace mecsbox
