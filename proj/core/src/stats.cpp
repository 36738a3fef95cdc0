#include "mecsbox/stats.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "mecsbox/error.hpp"
#include "mecsbox/sbox.hpp"

namespace mecsbox {

std::vector<std::uint64_t> ordered_y_sequence(const CurveParams& curve, OrderingKind kind) {
    auto points = enumerate_points(curve);
    std::sort(points.begin(), points.end(), PointLess{kind});
    std::vector<std::uint64_t> ys;
    ys.reserve(points.size());
    for (const auto& pt : points) ys.push_back(pt.y());
    return ys;
}

namespace {
__extension__ using Wide = __int128;
}

double pearson(std::span<const std::uint64_t> xs, std::span<const std::uint64_t> ys) {
    const std::size_t n = std::min(xs.size(), ys.size());
    if (n == 0) return 0.0;
    Wide sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Wide x = xs[i];
        const Wide y = ys[i];
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    const auto nn = static_cast<Wide>(n);
    const auto cov = static_cast<long double>(nn * sxy - sx * sy);
    const auto vx = static_cast<long double>(nn * sxx - sx * sx);
    const auto vy = static_cast<long double>(nn * syy - sy * sy);
    if (vx == 0 || vy == 0) return 0.0;
    return static_cast<double>(cov / std::sqrt(vx * vy));
}

double correlation(const CurveParams& curve, OrderingKind h, OrderingKind k) {
    const auto a = ordered_y_sequence(curve, h);
    const auto b = ordered_y_sequence(curve, k);
    return pearson(a, b);
}

CorrelationRecord correlate_orderings(const CurveParams& curve) {
    const auto n = ordered_y_sequence(curve, OrderingKind::Natural);
    const auto d = ordered_y_sequence(curve, OrderingKind::Diffusion);
    const auto m = ordered_y_sequence(curve, OrderingKind::ModuloDiffusion);
    return CorrelationRecord{curve.p(), curve.b(), pearson(n, d), pearson(n, m), pearson(d, m)};
}

std::size_t count_distinct_sboxes(const FieldPrime& prime, OrderingKind kind, unsigned threads) {
    const auto p = prime.value();
    if (p < kMinSBoxPrime) {
        throw Error(ErrorCode::PrimeTooSmall, "p = " + std::to_string(p) + " is below " + std::to_string(kMinSBoxPrime));
    }
    const std::uint64_t jobs = p - 1;  // b = 1 .. p-1
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, jobs));

    std::vector<SBox::Table> tables(jobs);
    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const auto curve = CurveParams::make(prime, static_cast<std::int64_t>(i + 1));
            tables[i] = generate(curve, kind).table();
        }
    };
    {
        std::vector<std::jthread> workers;
        const std::uint64_t chunk = (jobs + threads - 1) / threads;
        for (std::uint64_t begin = 0; begin < jobs; begin += chunk) {
            workers.emplace_back(work, begin, std::min(jobs, begin + chunk));
        }
    }
    std::sort(tables.begin(), tables.end());
    return static_cast<std::size_t>(std::unique(tables.begin(), tables.end()) - tables.begin());
}

namespace {

template <typename Fn>
double best_seconds(int repetitions, Fn&& fn) {
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(1, repetitions); ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        best = std::min(best, elapsed.count());
    }
    return best;
}

}  // namespace

std::vector<GenerationTiming> benchmark_generation(std::span<const FieldPrime> primes, OrderingKind kind,
                                                   int repetitions, std::uint64_t b) {
    std::vector<GenerationTiming> rows;
    for (const auto& prime : primes) {
        const auto curve = CurveParams::make(prime, static_cast<std::int64_t>(b % prime.value()));
        GenerationTiming row;
        row.p = prime.value();
        GenerationStats loop_stats;
        GenerationStats fast_stats;
        volatile std::uint8_t sink = 0;
        row.loop_seconds = best_seconds(repetitions, [&] { sink = generate_via_loop(curve, kind, &loop_stats)[0]; });
        row.fast_seconds = best_seconds(repetitions, [&] { sink = generate(curve, kind, &fast_stats)[0]; });
        (void)sink;
        row.peak_points_stored = std::max(loop_stats.peak_points_stored, fast_stats.peak_points_stored);
        rows.push_back(row);
    }
    return rows;
}

double fit_power_law_exponent(std::span<const double> xs, std::span<const double> ys) {
    const std::size_t n = std::min(xs.size(), ys.size());
    if (n < 2) return 0.0;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log(xs[i]);
        my += std::log(ys[i]);
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log(xs[i]) - mx;
        sxy += dx * (std::log(ys[i]) - my);
        sxx += dx * dx;
    }
    return sxx == 0 ? 0.0 : sxy / sxx;
}

}  // namespace mecsbox
