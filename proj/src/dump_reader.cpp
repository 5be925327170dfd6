#include "forge/dump_reader.hpp"

#include <expat.h>

#include <fstream>
#include <iostream>
#include "json.hpp"

#include "forge/text_util.hpp"

namespace forge {

bool looks_like_redirect(std::string_view wikitext) {
  return istarts_with(trim(wikitext), "#REDIRECT");
}

struct XmlDumpReader::State {
  XML_Parser parser = nullptr;
  Warnings* warnings = nullptr;
  std::vector<std::string> path;
  std::deque<RawArticle> ready;
  std::optional<DumpError> error;  // raised once pages parsed before it are consumed

  RawArticle current;
  bool in_page = false;
  bool have_text = false;
  bool have_id = false;
  std::string* sink = nullptr;
  std::string scratch;

  void start(std::string_view name) {
    const std::string parent = path.empty() ? std::string{} : path.back();
    path.emplace_back(name);
    sink = nullptr;
    if (name == "page") {
      current = RawArticle{};
      in_page = true;
      have_text = false;
      have_id = false;
      return;
    }
    if (!in_page) return;
    if (parent == "page") {
      if (name == "title") {
        current.title.clear();
        sink = &current.title;
      } else if (name == "ns" || (name == "id" && !have_id)) {
        scratch.clear();
        sink = &scratch;
      } else if (name == "redirect") {
        current.is_redirect = true;
      }
    } else if (parent == "revision" && name == "text") {
      // Full-history dumps carry several revisions; the last one wins.
      current.wikitext.clear();
      have_text = true;
      sink = &current.wikitext;
    }
  }

  void end(std::string_view name) {
    if (in_page && path.size() >= 2 && path[path.size() - 2] == "page") {
      if (name == "ns") current.ns = std::atoi(scratch.c_str());
      if (name == "id" && !have_id) {
        current.page_id = std::strtoull(scratch.c_str(), nullptr, 10);
        have_id = true;
      }
    }
    path.pop_back();
    sink = nullptr;
    if (name == "page") {
      in_page = false;
      if (!have_text) {
        if (warnings) warnings->add("page_missing_text");
      } else if (trim(current.title).empty()) {
        if (warnings) warnings->add("page_missing_title");
      } else {
        if (looks_like_redirect(current.wikitext)) current.is_redirect = true;
        ready.push_back(std::move(current));
      }
      current = RawArticle{};
    }
  }

  static void on_start(void* ud, const XML_Char* name, const XML_Char**) {
    static_cast<State*>(ud)->start(name);
  }
  static void on_end(void* ud, const XML_Char* name) { static_cast<State*>(ud)->end(name); }
  static void on_chars(void* ud, const XML_Char* s, int len) {
    auto* st = static_cast<State*>(ud);
    if (st->sink) st->sink->append(s, static_cast<std::size_t>(len));
  }
};

XmlDumpReader::XmlDumpReader(std::istream& in, Warnings* warnings, std::size_t chunk_size)
    : in_(in), chunk_size_(chunk_size), state_(std::make_unique<State>()) {
  state_->parser = XML_ParserCreate("UTF-8");
  if (!state_->parser) throw std::runtime_error("cannot create XML parser");
  state_->warnings = warnings;
  XML_SetUserData(state_->parser, state_.get());
  XML_SetElementHandler(state_->parser, &State::on_start, &State::on_end);
  XML_SetCharacterDataHandler(state_->parser, &State::on_chars);
}

XmlDumpReader::~XmlDumpReader() {
  if (state_ && state_->parser) XML_ParserFree(state_->parser);
}

void XmlDumpReader::feed() {
  void* buf = XML_GetBuffer(state_->parser, static_cast<int>(chunk_size_));
  if (!buf) throw std::runtime_error("XML parser out of memory");
  in_.read(static_cast<char*>(buf), static_cast<std::streamsize>(chunk_size_));
  const auto got = in_.gcount();
  const bool last = got == 0 || in_.eof();
  if (in_.bad()) throw std::runtime_error("read error on dump input");
  if (XML_ParseBuffer(state_->parser, static_cast<int>(got), last) == XML_STATUS_ERROR) {
    const auto offset = static_cast<std::uint64_t>(XML_GetCurrentByteIndex(state_->parser));
    state_->error.emplace("malformed XML at byte " + std::to_string(offset) + ": " +
                              XML_ErrorString(XML_GetErrorCode(state_->parser)),
                          offset);
    finished_ = true;
    return;
  }
  if (last) finished_ = true;
}

std::optional<RawArticle> XmlDumpReader::next() {
  while (state_->ready.empty() && !finished_) feed();
  if (state_->ready.empty()) {
    if (state_->error) throw *state_->error;
    return std::nullopt;
  }
  RawArticle a = std::move(state_->ready.front());
  state_->ready.pop_front();
  return a;
}

std::optional<RawArticle> JsonlArticleReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw DumpError("malformed JSON record on line " + std::to_string(line_no_) + ": " +
                          e.what(),
                      line_no_);
    }
    ++records_;
    if (!j.is_object() || !j.contains("title") || !j.contains("wikitext") ||
        !j["title"].is_string() || !j["wikitext"].is_string()) {
      throw DumpError("record on line " + std::to_string(line_no_) +
                          " needs string \"title\" and \"wikitext\"",
                      line_no_);
    }
    RawArticle a;
    a.title = j["title"].get<std::string>();
    a.wikitext = j["wikitext"].get<std::string>();
    a.page_id = j.value("id", records_);
    a.ns = j.value("ns", 0);
    a.is_redirect = j.value("redirect", false) || looks_like_redirect(a.wikitext);
    return a;
  }
  return std::nullopt;
}

namespace {

template <class Reader>
class OwningSource : public ArticleSource {
 public:
  template <class... Args>
  OwningSource(std::unique_ptr<std::istream> stream, Args&&... args)
      : stream_(std::move(stream)), reader_(*stream_, std::forward<Args>(args)...) {}
  std::optional<RawArticle> next() override { return reader_.next(); }

 private:
  std::unique_ptr<std::istream> stream_;
  Reader reader_;
};

bool has_suffix(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::unique_ptr<ArticleSource> open_article_source(const std::string& path, InputFormat format,
                                                   Warnings* warnings) {
  std::unique_ptr<std::istream> stream;
  if (path == "-") {
    stream = std::make_unique<std::istream>(std::cin.rdbuf());
  } else {
    auto f = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*f) throw std::runtime_error("cannot open input: " + path);
    stream = std::move(f);
  }
  if (format == InputFormat::Auto) {
    format = has_suffix(path, ".jsonl") || has_suffix(path, ".ndjson") ? InputFormat::Jsonl
                                                                       : InputFormat::Xml;
  }
  if (format == InputFormat::Jsonl)
    return std::make_unique<OwningSource<JsonlArticleReader>>(std::move(stream));
  return std::make_unique<OwningSource<XmlDumpReader>>(std::move(stream), warnings);
}

}  // namespace forge
