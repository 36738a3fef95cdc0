#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mecsbox/mecsbox.hpp"

namespace mecsbox::cli {

namespace {

/// Raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CurveArgs {
    std::int64_t prime = 0;
    std::int64_t b = -1;
};

// Validation order: primality, residue class, S-box size bound, b range.
CurveParams validated_curve(const CurveArgs& args, bool need_sbox_size) {
    const auto prime = FieldPrime::validate(args.prime);
    if (need_sbox_size && prime.value() < kMinSBoxPrime) {
        throw Error(ErrorCode::PrimeTooSmall,
                    "p = " + std::to_string(prime.value()) + " is below " + std::to_string(kMinSBoxPrime));
    }
    return CurveParams::make(prime, args.b);
}

OrderingKind ordering_from(const std::string& code) {
    if (auto kind = parse_ordering(code)) return *kind;
    throw UsageError("--ordering must be N, D or M, got '" + code + "'");
}

std::vector<OrderingKind> orderings_from_list(const std::string& list) {
    std::vector<OrderingKind> kinds;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) kinds.push_back(ordering_from(item));
    if (kinds.empty()) throw UsageError("--ordering needs at least one of N, D, M");
    return kinds;
}

TableFormat format_from(const std::string& name) {
    if (auto f = parse_format(name)) return *f;
    throw UsageError("--format must be grid, json or bin, got '" + name + "'");
}

GridLayout layout_from(const std::string& name) {
    if (auto l = parse_layout(name)) return *l;
    throw UsageError("--layout must be row or column, got '" + name + "'");
}

/// "lo..hi", inclusive. lo > hi is an empty range.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    auto parse = [&](std::string_view part) {
        std::int64_t v = 0;
        const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || end != part.data() + part.size()) {
            throw UsageError("--b-range must look like lo..hi, got '" + text + "'");
        }
        return v;
    };
    if (dots == std::string::npos) throw UsageError("--b-range must look like lo..hi, got '" + text + "'");
    const std::string_view sv(text);
    return {parse(sv.substr(0, dots)), parse(sv.substr(dots + 2))};
}

void write_output(const std::string& data, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << data;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::BadFormat, "cannot write " + path);
    file << data;
}

struct GenerateOpts {
    CurveArgs curve;
    std::string ordering = "N";
    std::string format = "grid";
    std::string layout = "row";
    std::string out;
};

int cmd_generate(const GenerateOpts& o, std::ostream& out) {
    const auto kind = ordering_from(o.ordering);
    const auto format = format_from(o.format);
    const auto layout = layout_from(o.layout);
    const auto curve = validated_curve(o.curve, true);
    write_output(encode(generate(curve, kind), format, layout), o.out, out);
    return kExitOk;
}

struct AnalyzeOpts {
    std::string in;
    std::string format;
    std::string layout = "row";
    CurveArgs curve;
    std::string ordering;
    bool json = false;
    std::string out;
};

int cmd_analyze(const AnalyzeOpts& o, std::ostream& out) {
    std::optional<SBox> sbox;
    if (!o.in.empty()) {
        if (o.curve.prime != 0) throw UsageError("use either --in or --prime/--b/--ordering, not both");
        const auto format = o.format.empty() ? format_for_path(o.in) : format_from(o.format);
        sbox = read_sbox_file(o.in, format, layout_from(o.layout));
    } else {
        if (o.curve.prime == 0 || o.ordering.empty()) {
            throw UsageError("analyze needs --in PATH or --prime, --b and --ordering");
        }
        const auto kind = ordering_from(o.ordering);
        sbox = generate(validated_curve(o.curve, true), kind);
    }
    const auto report = analyze(*sbox);
    write_output(o.json ? report_to_json(report) + "\n" : report_to_text(report), o.out, out);
    return kExitOk;
}

struct BatchOpts {
    std::int64_t prime = 0;
    std::string orderings = "N";
    std::string range;
    std::string metrics;
};

int cmd_batch(const BatchOpts& o, std::ostream& out) {
    const auto kinds = orderings_from_list(o.orderings);
    const auto [lo, hi] = parse_range(o.range);
    std::vector<std::string> metrics;
    if (!o.metrics.empty()) {
        std::stringstream ss(o.metrics);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (std::find(std::begin(kMetricNames), std::end(kMetricNames), item) == std::end(kMetricNames)) {
                throw UsageError("unknown metric '" + item + "'");
            }
            metrics.push_back(item);
        }
    }
    const auto prime = FieldPrime::validate(o.prime);
    if (prime.value() < kMinSBoxPrime) {
        throw Error(ErrorCode::PrimeTooSmall,
                    "p = " + std::to_string(prime.value()) + " is below " + std::to_string(kMinSBoxPrime));
    }
    if (lo > hi) return kExitOk;
    if (lo < 0 || static_cast<std::uint64_t>(hi) >= prime.value()) {
        throw Error(ErrorCode::BOutOfRange, "--b-range " + o.range + " leaves [0, " +
                                                std::to_string(prime.value() - 1) + "]");
    }
    for (std::int64_t b = lo; b <= hi; ++b) {
        const auto curve = CurveParams::make(prime, b);
        for (auto kind : kinds) out << report_to_json(analyze(generate(curve, kind)), metrics) << '\n';
    }
    return kExitOk;
}

struct CountOpts {
    std::int64_t prime = 0;
    std::string ordering = "N";
    unsigned threads = 0;
};

int cmd_count_distinct(const CountOpts& o, std::ostream& out) {
    const auto kind = ordering_from(o.ordering);
    const auto prime = FieldPrime::validate(o.prime);
    out << count_distinct_sboxes(prime, kind, o.threads) << '\n';
    return kExitOk;
}

struct CorrelateOpts {
    CurveArgs curve;
    bool json = false;
};

int cmd_correlate(const CorrelateOpts& o, std::ostream& out) {
    const auto curve = validated_curve(o.curve, false);
    const auto rec = correlate_orderings(curve);
    const double self = correlation(curve, OrderingKind::Natural, OrderingKind::Natural);
    if (o.json) {
        nlohmann::ordered_json doc{{"p", rec.p},           {"b", rec.b},           {"rho_ND", rec.rho_nd},
                                   {"rho_NM", rec.rho_nm}, {"rho_DM", rec.rho_dm}, {"rho_NN", self}};
        out << doc.dump() << '\n';
        return kExitOk;
    }
    out << std::fixed << std::setprecision(4) << "p     " << rec.p << "\nb     " << rec.b << "\nrho_ND " << rec.rho_nd
        << "\nrho_NM " << rec.rho_nm << "\nrho_DM " << rec.rho_dm << "\nrho_NN " << self << '\n';
    return kExitOk;
}

struct BenchOpts {
    std::vector<std::int64_t> primes{257, 521, 1013, 1667, 2027, 3299, 4229};
    std::string ordering = "N";
    int repetitions = 5;
};

int cmd_bench(const BenchOpts& o, std::ostream& out) {
    const auto kind = ordering_from(o.ordering);
    std::vector<FieldPrime> primes;
    for (auto p : o.primes) {
        auto prime = FieldPrime::validate(p);
        if (prime.value() < kMinSBoxPrime) {
            throw Error(ErrorCode::PrimeTooSmall, "p = " + std::to_string(p) + " is below " + std::to_string(kMinSBoxPrime));
        }
        primes.push_back(prime);
    }
    const auto rows = benchmark_generation(primes, kind, o.repetitions);
    std::vector<double> ps, loop_times;
    out << "p,loop_seconds,fast_seconds,peak_points_stored\n";
    for (const auto& row : rows) {
        out << row.p << ',' << std::scientific << std::setprecision(4) << row.loop_seconds << ',' << row.fast_seconds
            << ',' << row.peak_points_stored << '\n';
        ps.push_back(static_cast<double>(row.p));
        loop_times.push_back(row.loop_seconds);
    }
    if (rows.size() >= 2) {
        out << "# loop-variant exponent " << std::fixed << std::setprecision(3)
            << fit_power_law_exponent(ps, loop_times) << '\n';
    }
    return kExitOk;
}

void add_curve_flags(CLI::App* cmd, CurveArgs& c, bool b_required = true) {
    cmd->add_option("--prime,-p", c.prime, "Prime p, p = 2 (mod 3)")->required();
    auto* b = cmd->add_option("--b,-b", c.b, "Curve constant b in [0, p-1]");
    if (b_required) b->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"S-boxes from Mordell elliptic curves y^2 = x^3 + b over F_p"};
    app.require_subcommand(1);

    GenerateOpts gen;
    auto* generate_cmd = app.add_subcommand("generate", "Generate one S-box");
    add_curve_flags(generate_cmd, gen.curve);
    generate_cmd->add_option("--ordering,-H", gen.ordering, "N, D or M")->required();
    generate_cmd->add_option("--format", gen.format, "grid, json or bin")->capture_default_str();
    generate_cmd->add_option("--layout", gen.layout, "Grid layout: row or column")->capture_default_str();
    generate_cmd->add_option("--out,-o", gen.out, "Output path (default stdout)");

    AnalyzeOpts ana;
    auto* analyze_cmd = app.add_subcommand("analyze", "Compute NL, LAP, DAP, SAC, BIC and AC");
    analyze_cmd->add_option("--in,-i", ana.in, "S-box file");
    analyze_cmd->add_option("--format", ana.format, "grid, json or bin (default from extension)");
    analyze_cmd->add_option("--layout", ana.layout, "Grid layout: row or column")->capture_default_str();
    analyze_cmd->add_option("--prime,-p", ana.curve.prime, "Generate from prime p instead of reading a file");
    analyze_cmd->add_option("--b,-b", ana.curve.b, "Curve constant b");
    analyze_cmd->add_option("--ordering,-H", ana.ordering, "N, D or M");
    analyze_cmd->add_flag("--json", ana.json, "Emit JSON");
    analyze_cmd->add_option("--out,-o", ana.out, "Output path (default stdout)");

    BatchOpts bat;
    auto* batch_cmd = app.add_subcommand("batch", "Analyze a range of b values, one JSON line per S-box");
    batch_cmd->add_option("--prime,-p", bat.prime, "Prime p")->required();
    batch_cmd->add_option("--ordering,-H", bat.orderings, "Comma-separated orderings, e.g. N,D,M")->capture_default_str();
    batch_cmd->add_option("--b-range", bat.range, "Inclusive range lo..hi")->required();
    batch_cmd->add_option("--metrics", bat.metrics, "Comma-separated subset of bijective,nl,nl_component,lap,dap,sac,bic,ac");

    CountOpts cnt;
    auto* count_cmd = app.add_subcommand("count-distinct", "Count distinct S-boxes over b in [1, p-1]");
    count_cmd->add_option("--prime,-p", cnt.prime, "Prime p")->required();
    count_cmd->add_option("--ordering,-H", cnt.ordering, "N, D or M")->required();
    count_cmd->add_option("--threads", cnt.threads, "Worker threads (0 = all cores)");

    CorrelateOpts cor;
    auto* correlate_cmd = app.add_subcommand("correlate", "Correlation of the y-sequences under the three orderings");
    add_curve_flags(correlate_cmd, cor.curve);
    correlate_cmd->add_flag("--json", cor.json, "Emit JSON");

    BenchOpts ben;
    auto* bench_cmd = app.add_subcommand("bench", "Time scanning vs cube-root generation");
    bench_cmd->add_option("--primes", ben.primes, "Primes to time")->delimiter(',')->capture_default_str();
    bench_cmd->add_option("--ordering,-H", ben.ordering, "N, D or M")->capture_default_str();
    bench_cmd->add_option("--repetitions", ben.repetitions, "Best-of count")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParamError;
    }

    try {
        if (*generate_cmd) return cmd_generate(gen, out);
        if (*analyze_cmd) return cmd_analyze(ana, out);
        if (*batch_cmd) return cmd_batch(bat, out);
        if (*count_cmd) return cmd_count_distinct(cnt, out);
        if (*correlate_cmd) return cmd_correlate(cor, out);
        if (*bench_cmd) return cmd_bench(ben, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParamError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_format_error(e.code()) ? kExitFormatError : kExitParamError;
    }
    return kExitParamError;
}

}  // namespace mecsbox::cli
