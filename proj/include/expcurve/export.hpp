#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "expcurve/projection.hpp"

namespace expcurve::io {

/// Structured JSON form of a bundle. Objects are key-sorted, so dumping the
/// same bundle twice gives identical bytes.
nlohmann::json to_json(const projection::ResultBundle& bundle);

std::string dump(const nlohmann::json& doc);

/// One flat CSV table. Column names carry their unit, e.g. total_usd_per_kw.
struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::vector<Table> to_tables(const projection::ResultBundle& bundle);

/// RFC 4180 text with a trailing newline.
std::string to_csv(const Table& table);

/// Writes `bundle.json` into `dir` (created if needed). Returns the file path.
std::filesystem::path write_json(const std::filesystem::path& dir,
                                 const projection::ResultBundle& bundle);

/// Writes one `<table>.csv` per table into `dir`. Returns the file paths.
std::vector<std::filesystem::path> write_csv(const std::filesystem::path& dir,
                                             const projection::ResultBundle& bundle);

/// Reads a JSON export back.
nlohmann::json read_json(const std::filesystem::path& path);

}  // namespace expcurve::io
