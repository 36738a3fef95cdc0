#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mecsbox/curve.hpp"
#include "mecsbox/ordering.hpp"

namespace mecsbox {

/// y-coordinates of all p affine points, sorted under `kind`. Always a
/// permutation of [0, p-1].
std::vector<std::uint64_t> ordered_y_sequence(const CurveParams& curve, OrderingKind kind);

/// Pearson correlation with population normalization. Sums are exact
/// integers, so identical sequences give exactly 1.0. Returns 0 when either
/// sequence is constant.
double pearson(std::span<const std::uint64_t> xs, std::span<const std::uint64_t> ys);

double correlation(const CurveParams& curve, OrderingKind h, OrderingKind k);

struct CorrelationRecord {
    std::uint64_t p = 0;
    std::uint64_t b = 0;
    double rho_nd = 0;
    double rho_nm = 0;
    double rho_dm = 0;
};

CorrelationRecord correlate_orderings(const CurveParams& curve);

/// Number of distinct S-box tables over b in [1, p-1] for one ordering.
/// Generation is split across `threads` workers (0 = hardware concurrency);
/// the result does not depend on the thread count.
/// Throws Error(PrimeTooSmall) if p < 257.
std::size_t count_distinct_sboxes(const FieldPrime& prime, OrderingKind kind, unsigned threads = 0);

struct GenerationTiming {
    std::uint64_t p = 0;
    double loop_seconds = 0;
    double fast_seconds = 0;
    std::size_t peak_points_stored = 0;
};

/// Wall time of generate_via_loop and generate for each prime (best of
/// `repetitions`), plus the peak number of points held during generation.
/// Runs single-threaded.
std::vector<GenerationTiming> benchmark_generation(std::span<const FieldPrime> primes, OrderingKind kind,
                                                   int repetitions = 5, std::uint64_t b = 1);

/// Least-squares slope of log(ys) against log(xs): the exponent k in y ~ x^k.
double fit_power_law_exponent(std::span<const double> xs, std::span<const double> ys);

}  // namespace mecsbox
