#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forge/diagnostics.hpp"
#include "forge/dump_reader.hpp"
#include "forge/wikitext.hpp"

namespace forge {

/// A content article ready for tree building and graph construction.
struct ParsedArticle {
  std::uint64_t id = 0;
  std::string title;
  std::string abstract;
  std::vector<Section> sections;      ///< cleaned, non-content sections removed
  std::vector<std::string> see_also;  ///< normalized link targets
};

enum class ArticleFilter { Kept, NonMainNamespace, Redirect, Disambiguation };

struct PreparedArticle {
  ArticleFilter status = ArticleFilter::Kept;
  ParsedArticle article;  ///< meaningful only when status == Kept
};

/// Filters out non-main-namespace, redirect and disambiguation pages, then
/// segments, extracts See also targets and drops citation-apparatus
/// sections (with their subsections).
PreparedArticle prepare_article(const RawArticle& raw, Warnings* warnings = nullptr);

}  // namespace forge
