#include "mecsbox/report.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "mecsbox/gf256.hpp"

namespace mecsbox {

namespace {

nlohmann::ordered_json ratio_json(const Ratio& r) {
    return nlohmann::ordered_json{{"num", r.num}, {"den", r.den}, {"value", r.to_fixed(4)}};
}

}  // namespace

AnalysisReport analyze(const SBox& sbox) {
    AnalysisReport r;
    r.provenance = sbox.provenance();
    r.bijective = sbox.is_bijective();
    r.nl = nonlinearity(sbox);
    r.nl_component = component_nonlinearity(sbox);
    r.lap = lap(sbox);
    r.dap = dap(sbox);
    r.sac = sac_matrix(sbox);
    r.sac_max = r.sac.max();
    r.sac_min = r.sac.min();
    std::tie(r.bic_max, r.bic_min) = bic_minmax(sbox);
    r.ac = algebraic_complexity(sbox);
    return r;
}

std::string provenance_tag(const std::optional<Provenance>& provenance) {
    if (!provenance) return "external";
    return std::to_string(provenance->p) + ":" + std::to_string(provenance->b) + ":" +
           std::string(to_code(provenance->ordering));
}

std::string report_to_json(const AnalysisReport& report, std::span<const std::string> metrics) {
    nlohmann::ordered_json doc;
    doc["source"] = provenance_tag(report.provenance);
    if (report.provenance) {
        doc["p"] = report.provenance->p;
        doc["b"] = report.provenance->b;
        doc["ordering"] = std::string(to_code(report.provenance->ordering));
    }
    doc["bijective"] = report.bijective;
    doc["nl"] = report.nl;
    doc["nl_component"] = report.nl_component;
    doc["lap"] = ratio_json(report.lap);
    doc["dap"] = ratio_json(report.dap);
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : report.sac.count) rows.push_back(row);
    doc["sac"] = {{"den", report.sac.den}, {"counts", rows}, {"max", ratio_json(report.sac_max)},
                  {"min", ratio_json(report.sac_min)}};
    doc["bic"] = {{"max", ratio_json(report.bic_max)}, {"min", ratio_json(report.bic_min)}};
    doc["ac"] = report.ac;
    if (!metrics.empty()) {
        for (auto name : kMetricNames) {
            if (std::find(metrics.begin(), metrics.end(), name) == metrics.end()) doc.erase(std::string(name));
        }
    }
    return doc.dump();
}

std::string report_to_text(const AnalysisReport& report) {
    std::ostringstream out;
    out << "source        " << provenance_tag(report.provenance) << '\n'
        << "bijective     " << (report.bijective ? "true" : "false") << '\n'
        << "NL            " << report.nl << '\n'
        << "NL component  " << report.nl_component << '\n'
        << "LAP           " << report.lap.to_fixed() << "  (" << report.lap.num << "/" << report.lap.den << ")\n"
        << "DAP           " << report.dap.to_fixed() << "  (" << report.dap.num << "/" << report.dap.den << ")\n"
        << "SAC max/min   " << report.sac_max.to_fixed() << " / " << report.sac_min.to_fixed() << '\n'
        << "BIC max/min   " << report.bic_max.to_fixed() << " / " << report.bic_min.to_fixed() << '\n'
        << "AC            " << report.ac << '\n'
        << "SAC matrix (x/256, row = output bit, column = flipped input bit)\n";
    for (const auto& row : report.sac.count) {
        out << ' ';
        for (auto v : row) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

}  // namespace mecsbox
