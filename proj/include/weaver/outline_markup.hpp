#pragma once

#include <string>
#include <vector>

#include "weaver/types.hpp"

namespace weaver {

// One line per heading: '#' * level + ' ' + title.
std::string render_outline(const Outline& outline);

struct ParsedHeadings {
  std::vector<Heading> headings;
  std::vector<std::string> warnings;  // level-jump repairs
};

// Extracts hash-prefixed heading lines; anything else is discarded. Level
// jumps are clamped to predecessor + 1 (first heading to level 1) with a
// warning. Throws Error(empty_outline) when no heading line parses.
ParsedHeadings parse_heading_lines(const std::string& markup);

// Builds a valid Outline from parsed headings: headings whose title equals
// the topic text (case-insensitive, trimmed) are dropped with a warning and
// levels are re-clamped. Throws Error(empty_outline) when nothing remains.
Outline make_outline(const Topic& topic, const std::vector<Heading>& headings,
                     std::vector<std::string>* warnings = nullptr);

// parse_heading_lines + make_outline.
Outline parse_outline(const std::string& markup, const Topic& topic,
                      std::vector<std::string>* warnings = nullptr);

}  // namespace weaver
