#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>

#include "forge/samplers.hpp"

namespace forge {

/// One JSON object, no trailing newline. Keys: task, article_id, query,
/// positive, negatives, provenance. Invalid UTF-8 is replaced, not fatal.
std::string to_json_line(const PseudoInstance& inst);

/// Inverse of to_json_line; throws std::invalid_argument on schema errors.
PseudoInstance parse_json_line(std::string_view line);

/// Writes one line per instance ordered by ascending article_id (stable, so
/// an article's instances keep their provenance order). Returns the count.
std::size_t write_instances(std::span<const PseudoInstance> instances, std::ostream& sink);

/// write_instances into `path`. Writes to a sibling temporary file and
/// renames on success; on I/O failure the partial file is removed and
/// std::runtime_error is thrown.
std::size_t write_instances_file(std::span<const PseudoInstance> instances,
                                 const std::filesystem::path& path);

/// Lower-case hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);
std::string sha256_hex(std::string_view bytes);

}  // namespace forge
