#pragma once

// Published figures for MEC S-boxes, transcribed at their printed precision
// (4 decimal places unless noted).

#include <array>
#include <cstdint>
#include <filesystem>

#include "mecsbox/ordering.hpp"
#include "mecsbox/sbox_io.hpp"

namespace reference {

using mecsbox::OrderingKind;

struct SboxMetrics {
    std::int64_t p;
    std::int64_t b;
    OrderingKind kind;
    int nl;
    double lap;
    double dap;
    double sac_max;
    double sac_min;
    double bic_max;
    double bic_min;
    int ac;
};

inline constexpr std::array<SboxMetrics, 9> kSboxMetrics{{
    {1667, 351, OrderingKind::Natural, 106, 0.1328, 0.0391, 0.5938, 0.4531, 0.5273, 0.4648, 254},
    {1949, 544, OrderingKind::Natural, 106, 0.1328, 0.0391, 0.625, 0.4219, 0.5293, 0.4629, 254},
    {3023, 626, OrderingKind::Natural, 106, 0.1406, 0.0391, 0.6563, 0.4219, 0.5313, 0.4707, 255},
    {3299, 1451, OrderingKind::Diffusion, 106, 0.1484, 0.0391, 0.6406, 0.4063, 0.5371, 0.4707, 255},
    {3041, 1298, OrderingKind::Diffusion, 106, 0.1328, 0.0391, 0.6094, 0.4219, 0.5273, 0.4844, 254},
    {3347, 2937, OrderingKind::Diffusion, 106, 0.1406, 0.0391, 0.6094, 0.4063, 0.5254, 0.4746, 255},
    {4229, 2422, OrderingKind::ModuloDiffusion, 106, 0.1328, 0.0391, 0.5938, 0.375, 0.5254, 0.4688, 253},
    {4217, 1156, OrderingKind::ModuloDiffusion, 106, 0.1328, 0.0391, 0.6094, 0.3906, 0.5313, 0.4766, 253},
    {3299, 1400, OrderingKind::ModuloDiffusion, 106, 0.1406, 0.0391, 0.625, 0.3594, 0.5449, 0.4727, 255},
}};

/// AES comparison row (LAP printed to 3 decimals, SAC/BIC to 3).
struct AesMetrics {
    int nl = 112;
    double lap = 0.062;
    double dap = 0.0156;
    double sac_max = 0.562;
    double sac_min = 0.453;
    double bic_max = 0.504;
    double bic_min = 0.480;
    int ac = 9;
};
inline constexpr AesMetrics kAes{};

struct Correlation {
    std::int64_t p;
    std::int64_t b;
    double nd;
    double nm;
    double dm;
};

inline constexpr std::array<Correlation, 4> kCorrelations{{
    {101, 1, -0.0588, 0.0550, -0.0497},
    {827, 87, -0.0044, 0.0008, 0.0027},
    {1013, 118, 0.0028, -0.0059, 0.0003},
    {2027, 8, 0.0007, -0.0068, -0.0002},
}};

struct DistinctCount {
    std::int64_t p;
    std::size_t count;
};

inline constexpr std::array<DistinctCount, 11> kDistinctCounts{{
    {257, 256}, {263, 262}, {269, 268}, {281, 280}, {293, 292}, {1013, 1012},
    {1019, 1018}, {1031, 1030}, {1049, 1048}, {1061, 1060}, {1997, 1996},
}};

struct GoldenTable {
    const char* file;
    std::int64_t p;
    std::int64_t b;
    OrderingKind kind;
};

inline constexpr std::array<GoldenTable, 3> kGoldenTables{{
    {"s_n_1667_351.grid", 1667, 351, OrderingKind::Natural},
    {"s_d_3299_1451.grid", 3299, 1451, OrderingKind::Diffusion},
    {"s_m_4229_2422.grid", 4229, 2422, OrderingKind::ModuloDiffusion},
}};

inline std::filesystem::path fixture(const char* name) { return std::filesystem::path(MECSBOX_FIXTURE_DIR) / name; }

/// Published tables are listed column by column.
inline mecsbox::SBox load_golden(const GoldenTable& g) {
    return mecsbox::read_sbox_file(fixture(g.file), mecsbox::TableFormat::Grid, mecsbox::GridLayout::ColumnMajor);
}

inline mecsbox::SBox load_aes() {
    return mecsbox::read_sbox_file(fixture("aes.grid"), mecsbox::TableFormat::Grid, mecsbox::GridLayout::RowMajor);
}

}  // namespace reference
