#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "mecsbox/sbox.hpp"

namespace mecsbox {

/// On-disk S-box encodings.
///   grid: 16 lines of 16 space-separated decimals
///   json: {"p":int,"b":int,"ordering":"N|D|M","table":[256 ints],"version":1}
///         (p/b/ordering omitted for tables without provenance)
///   bin:  exactly 256 bytes, table[i] at offset i
enum class TableFormat { Grid, Json, Bin };

/// Grid cell (r, c) holds table[16r + c] in RowMajor and table[16c + r] in
/// ColumnMajor. Published MEC S-box listings use the column layout.
enum class GridLayout { RowMajor, ColumnMajor };

std::optional<TableFormat> parse_format(std::string_view name) noexcept;
std::optional<GridLayout> parse_layout(std::string_view name) noexcept;

/// .json -> Json, .bin -> Bin, anything else -> Grid.
TableFormat format_for_path(const std::filesystem::path& path) noexcept;

std::string to_grid(const SBox& sbox, GridLayout layout = GridLayout::RowMajor);
std::string to_json(const SBox& sbox);
std::string to_bin(const SBox& sbox);

/// Parsers throw Error(BadFormat) on malformed text and Error(BadTable) on
/// out-of-range entries.
SBox from_grid(std::string_view text, GridLayout layout = GridLayout::RowMajor);
SBox from_json(std::string_view text);
SBox from_bin(std::string_view bytes);

std::string encode(const SBox& sbox, TableFormat format, GridLayout layout = GridLayout::RowMajor);
SBox decode(std::string_view data, TableFormat format, GridLayout layout = GridLayout::RowMajor);

/// Throws Error(BadFormat) if the file cannot be read.
SBox read_sbox_file(const std::filesystem::path& path, TableFormat format,
                    GridLayout layout = GridLayout::RowMajor);
void write_sbox_file(const std::filesystem::path& path, const SBox& sbox, TableFormat format,
                     GridLayout layout = GridLayout::RowMajor);

}  // namespace mecsbox
