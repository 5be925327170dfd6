#include "forge/article.hpp"

#include "forge/text_util.hpp"

namespace forge {

PreparedArticle prepare_article(const RawArticle& raw, Warnings* w) {
  PreparedArticle out;
  if (raw.ns != 0) {
    out.status = ArticleFilter::NonMainNamespace;
    return out;
  }
  if (raw.is_redirect || looks_like_redirect(raw.wikitext)) {
    out.status = ArticleFilter::Redirect;
    return out;
  }
  if (is_disambiguation(raw.wikitext)) {
    out.status = ArticleFilter::Disambiguation;
    return out;
  }

  SegmentedText seg = split_raw_sections(raw.wikitext, w);
  ParsedArticle& a = out.article;
  a.id = raw.page_id;
  a.title = std::string(trim(raw.title));
  a.see_also = extract_see_also(seg.sections);
  a.abstract = clean_markup(seg.abstract, w);

  int dropping_below = 0;  // level of a dropped heading whose subsections go too
  for (auto& s : seg.sections) {
    if (dropping_below && s.level > dropping_below) continue;
    dropping_below = 0;
    if (is_non_content_heading(s.heading)) {
      dropping_below = s.level;
      continue;
    }
    s.body = clean_markup(s.body, w);
    a.sections.push_back(std::move(s));
  }
  return out;
}

}  // namespace forge
