#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "mecsbox/error.hpp"
#include "mecsbox/stats.hpp"
#include "reference_values.hpp"

using namespace mecsbox;

namespace {

CurveParams curve(std::int64_t p, std::int64_t b) { return CurveParams::make(FieldPrime::validate(p), b); }

}  // namespace

TEST(Stats, OrderedSequenceSmallCurve) {
    const auto c = curve(5, 1);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> brute;
    for (std::uint64_t x = 0; x < 5; ++x)
        for (std::uint64_t y = 0; y < 5; ++y)
            if (c.contains(x, y)) brute.emplace_back(x, y);
    std::sort(brute.begin(), brute.end());
    std::vector<std::uint64_t> expect;
    for (auto [x, y] : brute) expect.push_back(y);
    EXPECT_EQ(ordered_y_sequence(c, OrderingKind::Natural), expect);
}

TEST(Stats, PearsonBasics) {
    const std::vector<std::uint64_t> a{1, 2, 3, 4, 5};
    const std::vector<std::uint64_t> b{2, 4, 6, 8, 10};
    const std::vector<std::uint64_t> r{5, 4, 3, 2, 1};
    const std::vector<std::uint64_t> k{3, 3, 3, 3, 3};
    EXPECT_DOUBLE_EQ(pearson(a, b), 1.0);
    EXPECT_DOUBLE_EQ(pearson(a, r), -1.0);
    EXPECT_EQ(pearson(a, k), 0.0);
    const std::vector<std::uint64_t> x{1, 2, 3, 4};
    const std::vector<std::uint64_t> y{1, 3, 2, 4};
    EXPECT_NEAR(pearson(x, y), 0.8, 1e-12);
}

TEST(Stats, SelfCorrelationIsOne) {
    for (auto kind : kAllOrderings) EXPECT_EQ(correlation(curve(827, 87), kind, kind), 1.0);
}

TEST(Stats, PublishedCorrelations) {
    for (const auto& r : reference::kCorrelations) {
        const auto rec = correlate_orderings(curve(r.p, r.b));
        EXPECT_NEAR(rec.rho_nd, r.nd, 1e-4) << r.p;
        EXPECT_NEAR(rec.rho_nm, r.nm, 1e-4) << r.p;
        EXPECT_NEAR(rec.rho_dm, r.dm, 1e-4) << r.p;
        EXPECT_DOUBLE_EQ(rec.rho_nd, correlation(curve(r.p, r.b), OrderingKind::Natural, OrderingKind::Diffusion));
    }
}

TEST(Stats, DistinctCountSmall) {
    const auto f = FieldPrime::validate(257);
    for (auto kind : kAllOrderings) EXPECT_EQ(count_distinct_sboxes(f, kind, 2), 256u);
    EXPECT_EQ(count_distinct_sboxes(FieldPrime::validate(263), OrderingKind::Natural, 1), 262u);
    EXPECT_THROW(count_distinct_sboxes(FieldPrime::validate(251), OrderingKind::Natural), Error);
}

TEST(Stats, PowerLawFit) {
    std::vector<double> xs, lin, quad;
    for (double x : {10.0, 20.0, 40.0, 80.0}) {
        xs.push_back(x);
        lin.push_back(3 * x);
        quad.push_back(0.5 * x * x);
    }
    EXPECT_NEAR(fit_power_law_exponent(xs, lin), 1.0, 1e-12);
    EXPECT_NEAR(fit_power_law_exponent(xs, quad), 2.0, 1e-12);
}

TEST(Stats, BenchmarkReportsConstantStorage) {
    const std::vector<FieldPrime> primes{FieldPrime::validate(257), FieldPrime::validate(521)};
    const auto rows = benchmark_generation(primes, OrderingKind::Natural, 1);
    ASSERT_EQ(rows.size(), 2u);
    for (const auto& r : rows) {
        EXPECT_EQ(r.peak_points_stored, 256u);
        EXPECT_GT(r.loop_seconds, 0.0);
        EXPECT_GT(r.fast_seconds, 0.0);
    }
}
