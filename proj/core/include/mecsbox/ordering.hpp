#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mecsbox/curve.hpp"

namespace mecsbox {

/// The three total orders on curve points.
///   Natural:         lexicographic on (x, y)
///   Diffusion:       lexicographic on (x + y, x), sum taken over the integers
///   ModuloDiffusion: lexicographic on ((x + y) mod p, x)
/// For two distinct points with equal sums the x-coordinates always differ,
/// so none of the orders ever needs the y tie-break beyond Natural.
enum class OrderingKind { Natural, Diffusion, ModuloDiffusion };

inline constexpr OrderingKind kAllOrderings[] = {OrderingKind::Natural, OrderingKind::Diffusion,
                                                 OrderingKind::ModuloDiffusion};

/// "N", "D" or "M".
std::string_view to_code(OrderingKind kind) noexcept;
std::optional<OrderingKind> parse_ordering(std::string_view code) noexcept;

/// The same orders on raw coordinate pairs in F_p x F_p, without checking
/// curve membership.
std::strong_ordering compare_coordinates(OrderingKind kind, std::uint64_t p, std::uint64_t x1, std::uint64_t y1,
                                         std::uint64_t x2, std::uint64_t y2) noexcept;

/// Throws Error(MixedCurves) if the points live on different curves.
std::strong_ordering compare(OrderingKind kind, const AffinePoint& lhs, const AffinePoint& rhs);

/// Strict-weak-ordering functor for std::sort and friends. Does not check
/// curve membership; callers compare points of one curve.
struct PointLess {
    OrderingKind kind;

    bool operator()(const AffinePoint& lhs, const AffinePoint& rhs) const noexcept;
};

/// Points sorted strictly increasing under `kind`. Throws Error(MixedCurves).
std::vector<AffinePoint> sort_points(OrderingKind kind, std::span<const AffinePoint> points);

}  // namespace mecsbox
