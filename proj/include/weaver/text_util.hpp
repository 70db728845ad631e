#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace weaver::text {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
bool starts_with(std::string_view s, std::string_view prefix);

// Collapses every run of whitespace (including newlines) to a single space and trims.
std::string collapse_whitespace(std::string_view s);

std::vector<std::string> split_lines(std::string_view s);

// Whitespace-delimited token count.
int word_count(std::string_view s);

// Case-folded, punctuation-stripped, whitespace-collapsed form used for
// textual-equality checks (fact dedup, insight merge).
std::string normalize_for_equality(std::string_view s);

// Lowercased scheme/host, fragment dropped, trailing slash stripped.
std::string normalize_url(std::string_view url);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Lowercase alphanumeric slug with '-' separators, for run ids and paths.
std::string slug(std::string_view s);

std::uint64_t fnv1a64(std::string_view s);
std::string hex64(std::uint64_t v);

// Removes every "[n]" citation marker.
std::string strip_citation_markers(std::string_view s);

}  // namespace weaver::text
