// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mw {

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);
bool starts_with_icase(std::string_view s, std::string_view prefix);

std::string join(const std::vector<std::string>& items, std::string_view sep);

/// Renders `[a, b, c]`, keeping at most `limit` entries and appending
/// ` (+N more)` when the list was cut.
std::string render_list(const std::vector<std::string>& items, std::size_t limit);

/// Same as render_list but with braces, for sets.
std::string render_set(const std::vector<std::string>& items, std::size_t limit);

std::size_t levenshtein(std::string_view a, std::string_view b);

/// Edit distance divided by the longer length; 0 for two empty strings.
double normalized_edit_distance(std::string_view a, std::string_view b);

/// Whitespace token count, used as the token estimate for prompts.
std::size_t count_whitespace_tokens(std::string_view text);

std::optional<double> parse_number(std::string_view s);
std::optional<long long> parse_integer(std::string_view s);

/// Formats a double without trailing zeros ("210", "185.5").
std::string format_number(double value);

}  // namespace mw
