#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "mecsbox/boolcrypt.hpp"
#include "mecsbox/sbox.hpp"

namespace mecsbox {

/// Every metric for one S-box.
struct AnalysisReport {
    std::optional<Provenance> provenance;
    bool bijective = false;
    int nl = 0;
    int nl_component = 0;
    Ratio lap;
    Ratio dap;
    BitMatrix sac;
    Ratio sac_max;
    Ratio sac_min;
    Ratio bic_max;
    Ratio bic_min;
    int ac = 0;
};

AnalysisReport analyze(const SBox& sbox);

/// "p:b:H" for generated tables, "external" otherwise.
std::string provenance_tag(const std::optional<Provenance>& provenance);

/// Metric names accepted by report_to_json's filter.
inline constexpr std::string_view kMetricNames[] = {"bijective", "nl", "nl_component", "lap",
                                                    "dap",       "sac", "bic",         "ac"};

/// Single-line JSON. Ratios are written as {"num":..,"den":..,"value":"0.0391"}.
/// A non-empty `metrics` keeps only those metrics; the provenance fields are
/// always present.
std::string report_to_json(const AnalysisReport& report, std::span<const std::string> metrics = {});

/// Human-readable multi-line summary.
std::string report_to_text(const AnalysisReport& report);

}  // namespace mecsbox
