#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "forge/diagnostics.hpp"

namespace forge {

/// One heading and the text up to the next heading of any level.
struct Section {
  int level = 2;        ///< number of '=' on each side, 1..6
  std::string heading;  ///< cleaned, trimmed, non-empty
  std::string body;

  bool operator==(const Section&) const = default;
};

struct SegmentedText {
  std::string abstract;  ///< text before the first heading
  std::vector<Section> sections;
};

/// Reduces a wikitext fragment to plain text.
///
/// Passes, in order: comments, <ref> elements, {{templates}} (nested, by
/// brace matching up to depth 32), {| tables |}, [[File:]]/[[Image:]]/
/// [[Category:]] links, HTML tags, [[wiki|links]], [external links],
/// bold/italic quotes, magic words, list markers, then whitespace
/// normalization (spaces collapsed, lines trimmed, blank lines dropped).
///
/// An unclosed template or table drops everything from its opening marker
/// to the end of the fragment and counts "unclosed_template" /
/// "unclosed_table".
std::string clean_markup(std::string_view fragment, Warnings* warnings = nullptr);

/// Removes <!-- comments -->. Exposed because segmentation strips comments
/// before looking for heading lines.
std::string strip_comments(std::string_view text, Warnings* warnings = nullptr);

/// Splits wikitext at heading lines without cleaning bodies. The abstract
/// and section bodies are raw (comments already removed); headings are
/// cleaned. A "== X ===" heading gets level min(2, 3) and counts
/// "unbalanced_heading".
SegmentedText split_raw_sections(std::string_view wikitext, Warnings* warnings = nullptr);

/// split_raw_sections followed by clean_markup on the abstract and bodies.
SegmentedText segment_sections(std::string_view wikitext, Warnings* warnings = nullptr);

/// Canonical form of a link target or page title: fragment after '#'
/// removed, '_' as space, whitespace collapsed, first letter upper-case.
std::string normalize_title(std::string_view target);

/// Link targets listed under the first "See also" heading of `raw_sections`
/// (raw, uncleaned bodies), normalized and de-duplicated in first-seen order.
std::vector<std::string> extract_see_also(std::span<const Section> raw_sections);

bool is_disambiguation(std::string_view wikitext);

/// References, External links, Further reading, Notes, Bibliography, Sources.
bool is_non_content_heading(std::string_view heading);

}  // namespace forge
