#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace forge {

std::string_view trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
bool istarts_with(std::string_view s, std::string_view prefix);

/// Number of whitespace-separated tokens in `s`.
std::size_t word_count(std::string_view s);

/// Keeps the first `max_words` whitespace tokens of `s`, preserving the
/// original spacing between them. Leading/trailing whitespace is dropped.
std::string truncate_words(std::string_view s, std::size_t max_words);

/// Joins with a single separator, skipping nothing.
std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::vector<std::string_view> split_lines(std::string_view s);

}  // namespace forge
