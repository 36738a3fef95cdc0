#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mecsbox/curve.hpp"
#include "mecsbox/error.hpp"
#include "mecsbox/modmath.hpp"
#include "mecsbox/ordering.hpp"

using namespace mecsbox;

namespace {

CurveParams curve(std::int64_t p, std::int64_t b) { return CurveParams::make(FieldPrime::validate(p), b); }

}  // namespace

TEST(Ordering, Codes) {
    for (auto kind : kAllOrderings) EXPECT_EQ(parse_ordering(to_code(kind)), kind);
    EXPECT_FALSE(parse_ordering("X").has_value());
    EXPECT_FALSE(parse_ordering("").has_value());
}

TEST(Ordering, CoordinateExamples) {
    EXPECT_EQ(compare_coordinates(OrderingKind::Natural, 101, 2, 5, 3, 1), std::strong_ordering::less);
    EXPECT_EQ(compare_coordinates(OrderingKind::Diffusion, 101, 3, 1, 2, 5), std::strong_ordering::less);
    EXPECT_EQ(compare_coordinates(OrderingKind::ModuloDiffusion, 101, 100, 3, 1, 5), std::strong_ordering::less);
    // equal sums fall back to x
    EXPECT_EQ(compare_coordinates(OrderingKind::Diffusion, 101, 1, 6, 2, 5), std::strong_ordering::less);
    EXPECT_EQ(compare_coordinates(OrderingKind::ModuloDiffusion, 101, 1, 100, 0, 0), std::strong_ordering::greater);
    EXPECT_EQ(compare_coordinates(OrderingKind::Natural, 101, 4, 4, 4, 4), std::strong_ordering::equal);
}

TEST(Ordering, MixedCurvesRejected) {
    const auto a = solve_x_for_y(curve(101, 1), 3);
    const auto b = solve_x_for_y(curve(101, 2), 3);
    try {
        compare(OrderingKind::Natural, a, b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MixedCurves);
    }
    const std::vector<AffinePoint> pts{a, b};
    EXPECT_THROW(sort_points(OrderingKind::Natural, pts), Error);
}

TEST(Ordering, SingleAndEmpty) {
    const auto a = solve_x_for_y(curve(101, 1), 3);
    const std::vector<AffinePoint> one{a};
    EXPECT_EQ(sort_points(OrderingKind::Diffusion, one), one);
    EXPECT_TRUE(sort_points(OrderingKind::Diffusion, std::vector<AffinePoint>{}).empty());
}

// Distinct points never compare equal: equal sums with equal x force equal y.
TEST(Ordering, NoTiesBetweenDistinctPoints) {
    for (std::int64_t p = 5; p <= 1013; ++p) {
        if (!is_prime(p) || p % 3 != 2) continue;
        for (std::int64_t b : {std::int64_t{1}, p - 1}) {
            const auto pts = enumerate_points(curve(p, b));
            for (auto kind : kAllOrderings) {
                auto sorted = sort_points(kind, pts);
                for (std::size_t i = 1; i < sorted.size(); ++i)
                    ASSERT_EQ(compare(kind, sorted[i - 1], sorted[i]), std::strong_ordering::less)
                        << "p=" << p << " b=" << b << " " << to_code(kind);
            }
        }
    }
}

// The two points sharing an x are (x, y) and (x, p - y); Natural keeps them adjacent.
TEST(Ordering, NaturalKeepsSameXPointsAdjacent) {
    const auto c = curve(101, 1);
    const auto sorted = sort_points(OrderingKind::Natural, enumerate_points(c));
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        ASSERT_LE(sorted[i - 1].x(), sorted[i].x());
        if (sorted[i - 1].x() == sorted[i].x()) {
            EXPECT_LT(sorted[i - 1].y(), sorted[i].y());
            EXPECT_EQ(sorted[i - 1].y() + sorted[i].y(), c.p());
        }
    }
    for (std::size_t i = 2; i < sorted.size(); ++i) EXPECT_FALSE(sorted[i - 2].x() == sorted[i].x());
}

TEST(Ordering, TotalOrderLawsOnSmallCurve) {
    const auto pts = enumerate_points(curve(101, 1));
    for (auto kind : kAllOrderings) {
        std::size_t violations = 0;
        for (const auto& a : pts)
            for (const auto& b : pts) {
                const auto ab = compare(kind, a, b);
                const auto ba = compare(kind, b, a);
                if ((ab == std::strong_ordering::equal) != (a == b)) ++violations;
                if (ab == std::strong_ordering::less && ba != std::strong_ordering::greater) ++violations;
                if (ab == std::strong_ordering::greater && ba != std::strong_ordering::less) ++violations;
            }
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
        for (int t = 0; t < 200000; ++t) {
            const auto& a = pts[pick(rng)];
            const auto& b = pts[pick(rng)];
            const auto& c = pts[pick(rng)];
            if (compare(kind, a, b) <= 0 && compare(kind, b, c) <= 0 && compare(kind, a, c) > 0) ++violations;
        }
        EXPECT_EQ(violations, 0u) << to_code(kind);
    }
}
