#pragma once

#include <cstdint>
#include <vector>

#include "mecsbox/modmath.hpp"

namespace mecsbox {

/// Mordell curve y^2 = x^3 + b over F_p with p = 2 (mod 3).
///
/// Over such a field every y in [0, p-1] belongs to exactly one affine point,
/// so the curve has p affine points plus the point at infinity. The point at
/// infinity is never materialized; it only shows up in point_count().
class CurveParams {
public:
    /// Throws Error(BOutOfRange) unless 0 <= b < p.
    static CurveParams make(FieldPrime prime, std::int64_t b);

    const FieldPrime& prime() const noexcept { return prime_; }
    std::uint64_t p() const noexcept { return prime_.value(); }
    std::uint64_t b() const noexcept { return b_; }

    bool contains(std::uint64_t x, std::uint64_t y) const noexcept;

    /// #E including the point at infinity, i.e. p + 1.
    std::uint64_t point_count() const noexcept { return p() + 1; }

    friend bool operator==(const CurveParams&, const CurveParams&) = default;

private:
    CurveParams(FieldPrime prime, std::uint64_t b) noexcept : prime_(prime), b_(b) {}

    FieldPrime prime_;
    std::uint64_t b_;
};

/// An affine point known to lie on its curve. Only the solvers and
/// AffinePoint::at() construct these, so the curve equation always holds.
class AffinePoint {
public:
    /// Throws Error(NotOnCurve) if (x, y) does not satisfy the equation.
    static AffinePoint at(const CurveParams& curve, std::uint64_t x, std::uint64_t y);

    const CurveParams& curve() const noexcept { return curve_; }
    std::uint64_t x() const noexcept { return x_; }
    std::uint64_t y() const noexcept { return y_; }

    friend bool operator==(const AffinePoint&, const AffinePoint&) = default;

private:
    AffinePoint(const CurveParams& curve, std::uint64_t x, std::uint64_t y) noexcept
        : curve_(curve), x_(x), y_(y) {}

    friend AffinePoint solve_x_for_y(const CurveParams&, std::uint64_t);
    friend AffinePoint solve_x_for_y_loop(const CurveParams&, std::uint64_t);

    CurveParams curve_;
    std::uint64_t x_;
    std::uint64_t y_;
};

/// x = cube_root(y^2 - b). O(log p). `y` is reduced mod p first.
AffinePoint solve_x_for_y(const CurveParams& curve, std::uint64_t y);

/// Same contract as solve_x_for_y, found by scanning x = 0, 1, ..., p-1.
AffinePoint solve_x_for_y_loop(const CurveParams& curve, std::uint64_t y);

/// All p affine points, in increasing y.
std::vector<AffinePoint> enumerate_points(const CurveParams& curve);

/// |#E - p - 1| <= 2 sqrt(p), evaluated in integers.
bool within_hasse_bound(std::uint64_t point_count, std::uint64_t p) noexcept;

}  // namespace mecsbox
