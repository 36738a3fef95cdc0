#include "mecsbox/sbox_io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "mecsbox/error.hpp"

namespace mecsbox {

namespace {

std::size_t grid_index(std::size_t cell, GridLayout layout) noexcept {
    return layout == GridLayout::RowMajor ? cell : (cell % 16) * 16 + cell / 16;
}

}  // namespace

std::optional<TableFormat> parse_format(std::string_view name) noexcept {
    if (name == "grid") return TableFormat::Grid;
    if (name == "json") return TableFormat::Json;
    if (name == "bin") return TableFormat::Bin;
    return std::nullopt;
}

std::optional<GridLayout> parse_layout(std::string_view name) noexcept {
    if (name == "row") return GridLayout::RowMajor;
    if (name == "column") return GridLayout::ColumnMajor;
    return std::nullopt;
}

TableFormat format_for_path(const std::filesystem::path& path) noexcept {
    const auto ext = path.extension().string();
    if (ext == ".json") return TableFormat::Json;
    if (ext == ".bin") return TableFormat::Bin;
    return TableFormat::Grid;
}

std::string to_grid(const SBox& sbox, GridLayout layout) {
    std::string out;
    for (std::size_t cell = 0; cell < SBox::kSize; ++cell) {
        out += std::to_string(sbox[grid_index(cell, layout)]);
        out += (cell % 16 == 15) ? '\n' : ' ';
    }
    return out;
}

std::string to_json(const SBox& sbox) {
    nlohmann::ordered_json doc;
    if (const auto& prov = sbox.provenance()) {
        doc["p"] = prov->p;
        doc["b"] = prov->b;
        doc["ordering"] = std::string(to_code(prov->ordering));
    }
    doc["table"] = sbox.table();
    doc["version"] = 1;
    return doc.dump() + "\n";
}

std::string to_bin(const SBox& sbox) { return std::string(sbox.table().begin(), sbox.table().end()); }

SBox from_grid(std::string_view text, GridLayout layout) {
    std::vector<std::int64_t> cells;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char ch = text[pos];
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == ',') {
            ++pos;
            continue;
        }
        std::int64_t value = 0;
        const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || end == text.data() + pos) {
            throw Error(ErrorCode::BadFormat, "unexpected character '" + std::string(1, ch) + "' in grid at offset " +
                                                  std::to_string(pos));
        }
        cells.push_back(value);
        pos = static_cast<std::size_t>(end - text.data());
    }
    if (cells.size() != SBox::kSize) {
        throw Error(ErrorCode::BadFormat, "grid holds " + std::to_string(cells.size()) + " values, expected 256");
    }
    std::vector<std::int64_t> values(SBox::kSize);
    for (std::size_t cell = 0; cell < SBox::kSize; ++cell) values[grid_index(cell, layout)] = cells[cell];
    return SBox::from_values(values);
}

SBox from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::BadFormat, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("table") || !doc["table"].is_array()) {
        throw Error(ErrorCode::BadFormat, "JSON S-box needs a \"table\" array");
    }
    if (doc.contains("version") && doc["version"] != 1) {
        throw Error(ErrorCode::BadFormat, "unsupported version " + doc["version"].dump());
    }
    std::vector<std::int64_t> values;
    for (const auto& v : doc["table"]) {
        if (!v.is_number_integer()) throw Error(ErrorCode::BadFormat, "table entries must be integers");
        values.push_back(v.get<std::int64_t>());
    }
    if (values.size() != SBox::kSize) {
        throw Error(ErrorCode::BadFormat, "table holds " + std::to_string(values.size()) + " values, expected 256");
    }
    auto sbox = SBox::from_values(values);

    const bool has_p = doc.contains("p"), has_b = doc.contains("b"), has_ord = doc.contains("ordering");
    if (!(has_p || has_b || has_ord)) return sbox;
    if (!(has_p && has_b && has_ord) || !doc["p"].is_number_unsigned() || !doc["b"].is_number_unsigned() ||
        !doc["ordering"].is_string()) {
        throw Error(ErrorCode::BadFormat, "provenance needs unsigned \"p\", \"b\" and string \"ordering\"");
    }
    const auto kind = parse_ordering(doc["ordering"].get<std::string>());
    if (!kind) throw Error(ErrorCode::BadFormat, "ordering must be N, D or M");
    return SBox(sbox.table(), Provenance{doc["p"].get<std::uint64_t>(), doc["b"].get<std::uint64_t>(), *kind});
}

SBox from_bin(std::string_view bytes) {
    if (bytes.size() != SBox::kSize) {
        throw Error(ErrorCode::BadFormat, "binary S-box must be 256 bytes, got " + std::to_string(bytes.size()));
    }
    SBox::Table table{};
    for (std::size_t i = 0; i < SBox::kSize; ++i) table[i] = static_cast<std::uint8_t>(bytes[i]);
    return SBox(table);
}

std::string encode(const SBox& sbox, TableFormat format, GridLayout layout) {
    switch (format) {
        case TableFormat::Grid: return to_grid(sbox, layout);
        case TableFormat::Json: return to_json(sbox);
        case TableFormat::Bin: return to_bin(sbox);
    }
    return {};
}

SBox decode(std::string_view data, TableFormat format, GridLayout layout) {
    switch (format) {
        case TableFormat::Grid: return from_grid(data, layout);
        case TableFormat::Json: return from_json(data);
        case TableFormat::Bin: return from_bin(data);
    }
    throw Error(ErrorCode::BadFormat, "unknown format");
}

SBox read_sbox_file(const std::filesystem::path& path, TableFormat format, GridLayout layout) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::BadFormat, "cannot open " + path.string());
    const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode(data, format, layout);
}

void write_sbox_file(const std::filesystem::path& path, const SBox& sbox, TableFormat format, GridLayout layout) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::BadFormat, "cannot write " + path.string());
    out << encode(sbox, format, layout);
}

}  // namespace mecsbox
