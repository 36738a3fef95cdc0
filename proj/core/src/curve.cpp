#include "mecsbox/curve.hpp"

#include <string>

#include "mecsbox/error.hpp"

namespace mecsbox {

CurveParams CurveParams::make(FieldPrime prime, std::int64_t b) {
    if (b < 0 || static_cast<std::uint64_t>(b) >= prime.value()) {
        throw Error(ErrorCode::BOutOfRange, "b = " + std::to_string(b) + " must lie in [0, " +
                                                std::to_string(prime.value() - 1) + "]");
    }
    return CurveParams(prime, static_cast<std::uint64_t>(b));
}

bool CurveParams::contains(std::uint64_t x, std::uint64_t y) const noexcept {
    const auto n = p();
    if (x >= n || y >= n) return false;
    return (x * x % n * x + b_) % n == y * y % n;
}

AffinePoint AffinePoint::at(const CurveParams& curve, std::uint64_t x, std::uint64_t y) {
    if (!curve.contains(x, y)) {
        throw Error(ErrorCode::NotOnCurve, "(" + std::to_string(x) + ", " + std::to_string(y) +
                                               ") is not on y^2 = x^3 + " + std::to_string(curve.b()) +
                                               " mod " + std::to_string(curve.p()));
    }
    return AffinePoint(curve, x, y);
}

AffinePoint solve_x_for_y(const CurveParams& curve, std::uint64_t y) {
    const auto& field = curve.prime();
    const auto ye = field.element(static_cast<std::int64_t>(y % curve.p()));
    const auto rhs = ye * ye - field.element(static_cast<std::int64_t>(curve.b()));
    return AffinePoint(curve, cube_root(rhs).value(), ye.value());
}

AffinePoint solve_x_for_y_loop(const CurveParams& curve, std::uint64_t y) {
    const auto n = curve.p();
    const auto yr = y % n;
    const auto target = yr * yr % n;
    for (std::uint64_t x = 0; x < n; ++x) {
        if ((x * x % n * x + curve.b()) % n == target) return AffinePoint(curve, x, yr);
    }
    // Unreachable for a validated curve: cubing permutes F_p.
    throw Error(ErrorCode::NotOnCurve, "no x found for y = " + std::to_string(yr));
}

std::vector<AffinePoint> enumerate_points(const CurveParams& curve) {
    std::vector<AffinePoint> points;
    points.reserve(curve.p());
    for (std::uint64_t y = 0; y < curve.p(); ++y) points.push_back(solve_x_for_y(curve, y));
    return points;
}

bool within_hasse_bound(std::uint64_t point_count, std::uint64_t p) noexcept {
    const auto expected = p + 1;
    const auto diff = point_count > expected ? point_count - expected : expected - point_count;
    // diff <= 2 sqrt(p)  <=>  diff^2 <= 4p
    return diff * diff <= 4 * p;
}

}  // namespace mecsbox
