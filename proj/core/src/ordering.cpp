#include "mecsbox/ordering.hpp"

#include <algorithm>
#include <cstdint>
#include <tuple>

#include "mecsbox/error.hpp"

namespace mecsbox {

namespace {

using SortKey = std::pair<std::uint64_t, std::uint64_t>;

SortKey sort_key(OrderingKind kind, std::uint64_t p, std::uint64_t x, std::uint64_t y) noexcept {
    switch (kind) {
        case OrderingKind::Natural: return {x, y};
        case OrderingKind::Diffusion: return {x + y, x};
        case OrderingKind::ModuloDiffusion: return {(x + y) % p, x};
    }
    return {};
}

SortKey sort_key(OrderingKind kind, const AffinePoint& pt) noexcept {
    return sort_key(kind, pt.curve().p(), pt.x(), pt.y());
}

}  // namespace

std::string_view to_code(OrderingKind kind) noexcept {
    switch (kind) {
        case OrderingKind::Natural: return "N";
        case OrderingKind::Diffusion: return "D";
        case OrderingKind::ModuloDiffusion: return "M";
    }
    return "?";
}

std::optional<OrderingKind> parse_ordering(std::string_view code) noexcept {
    if (code == "N") return OrderingKind::Natural;
    if (code == "D") return OrderingKind::Diffusion;
    if (code == "M") return OrderingKind::ModuloDiffusion;
    return std::nullopt;
}

std::strong_ordering compare_coordinates(OrderingKind kind, std::uint64_t p, std::uint64_t x1, std::uint64_t y1,
                                         std::uint64_t x2, std::uint64_t y2) noexcept {
    return sort_key(kind, p, x1, y1) <=> sort_key(kind, p, x2, y2);
}

std::strong_ordering compare(OrderingKind kind, const AffinePoint& lhs, const AffinePoint& rhs) {
    if (!(lhs.curve() == rhs.curve())) {
        throw Error(ErrorCode::MixedCurves, "points belong to different curves");
    }
    return sort_key(kind, lhs) <=> sort_key(kind, rhs);
}

bool PointLess::operator()(const AffinePoint& lhs, const AffinePoint& rhs) const noexcept {
    return sort_key(kind, lhs) < sort_key(kind, rhs);
}

std::vector<AffinePoint> sort_points(OrderingKind kind, std::span<const AffinePoint> points) {
    if (!points.empty()) {
        const auto& curve = points.front().curve();
        if (!std::all_of(points.begin(), points.end(), [&](const AffinePoint& pt) { return pt.curve() == curve; })) {
            throw Error(ErrorCode::MixedCurves, "cannot sort points from different curves");
        }
    }
    std::vector<AffinePoint> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), PointLess{kind});
    return sorted;
}

}  // namespace mecsbox
