#pragma once

#include <cstdint>
#include <deque>
#include <istream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "forge/diagnostics.hpp"

namespace forge {

/// One <page> from a dump, text untouched.
struct RawArticle {
  std::uint64_t page_id = 0;
  std::string title;
  std::string wikitext;
  bool is_redirect = false;
  int ns = 0;

  bool operator==(const RawArticle&) const = default;
};

/// Malformed input. `offset()` is the byte offset reported by the parser
/// (XML) or the 1-based line number (JSONL).
class DumpError : public std::runtime_error {
 public:
  DumpError(const std::string& what, std::uint64_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::uint64_t offset() const { return offset_; }

 private:
  std::uint64_t offset_;
};

bool looks_like_redirect(std::string_view wikitext);

class ArticleSource {
 public:
  virtual ~ArticleSource() = default;
  /// Next article in input order, or nullopt at end of input.
  virtual std::optional<RawArticle> next() = 0;
};

/// Streams pages out of a MediaWiki pages-articles XML export.
///
/// Input is fed to the XML parser in fixed-size chunks and pages are handed
/// out as soon as their closing tag is seen, so memory stays proportional
/// to the largest page rather than the dump. Pages without <text> are
/// skipped and counted under "page_missing_text".
class XmlDumpReader : public ArticleSource {
 public:
  explicit XmlDumpReader(std::istream& in, Warnings* warnings = nullptr,
                         std::size_t chunk_size = 64 * 1024);
  ~XmlDumpReader() override;
  XmlDumpReader(const XmlDumpReader&) = delete;
  XmlDumpReader& operator=(const XmlDumpReader&) = delete;

  std::optional<RawArticle> next() override;

  struct State;

 private:
  void feed();

  std::istream& in_;
  std::size_t chunk_size_;
  std::unique_ptr<State> state_;
  bool finished_ = false;
};

/// Line-delimited JSON records {"title": ..., "wikitext": ...}, with
/// optional "id", "ns" and "redirect" keys. Blank lines are ignored; a
/// missing id defaults to the 1-based record number.
class JsonlArticleReader : public ArticleSource {
 public:
  explicit JsonlArticleReader(std::istream& in) : in_(in) {}
  std::optional<RawArticle> next() override;

 private:
  std::istream& in_;
  std::uint64_t line_no_ = 0;
  std::uint64_t records_ = 0;
};

enum class InputFormat { Auto, Xml, Jsonl };

/// Opens `path` ("-" for stdin) as an article source. Auto picks JSONL for
/// *.jsonl / *.ndjson paths and XML otherwise. The returned source owns
/// the underlying stream.
std::unique_ptr<ArticleSource> open_article_source(const std::string& path, InputFormat format,
                                                   Warnings* warnings = nullptr);

}  // namespace forge
