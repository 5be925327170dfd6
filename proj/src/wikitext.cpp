#include "forge/wikitext.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <unordered_set>

#include "forge/text_util.hpp"

namespace forge {

namespace {

constexpr int kMaxTemplateDepth = 32;

bool at(std::string_view s, std::size_t i, std::string_view token) {
  return s.compare(i, token.size(), token) == 0;
}

bool iat(std::string_view s, std::size_t i, std::string_view token) {
  return i <= s.size() && istarts_with(s.substr(i), token);
}

std::size_t ifind(std::string_view s, std::string_view needle, std::size_t from) {
  for (std::size_t i = from; i + needle.size() <= s.size(); ++i)
    if (iat(s, i, needle)) return i;
  return std::string_view::npos;
}

void warn(Warnings* w, const char* reason) {
  if (w) w->add(reason);
}

/// Drops balanced open/close spans. Unclosed or too-deep spans drop to the
/// end of the input.
std::string remove_nested(std::string_view s, std::string_view open, std::string_view close,
                          const char* unclosed_reason, Warnings* w) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (!at(s, i, open)) {
      out += s[i++];
      continue;
    }
    int depth = 1;
    std::size_t j = i + open.size();
    bool overflow = false;
    while (j < s.size() && depth > 0) {
      if (at(s, j, open)) {
        if (++depth > kMaxTemplateDepth) {
          overflow = true;
          break;
        }
        j += open.size();
      } else if (at(s, j, close)) {
        --depth;
        j += close.size();
      } else {
        ++j;
      }
    }
    if (depth != 0 || overflow) {
      warn(w, overflow ? "nesting_too_deep" : unclosed_reason);
      break;
    }
    i = j;
  }
  return out;
}

std::string remove_refs(std::string_view s, Warnings* w) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    auto open = ifind(s, "<ref", i);
    while (open != std::string_view::npos && open + 4 < s.size()) {
      char c = s[open + 4];
      if (c == '>' || c == '/' || std::isspace(static_cast<unsigned char>(c))) break;
      open = ifind(s, "<ref", open + 4);
    }
    if (open == std::string_view::npos || open + 4 >= s.size()) {
      out.append(s.substr(i));
      break;
    }
    out.append(s.substr(i, open - i));
    auto gt = s.find('>', open);
    if (gt == std::string_view::npos) {
      warn(w, "unclosed_ref");
      break;
    }
    if (s[gt - 1] == '/') {
      i = gt + 1;
      continue;
    }
    auto close = ifind(s, "</ref", gt);
    auto close_gt = close == std::string_view::npos ? close : s.find('>', close);
    if (close_gt == std::string_view::npos) {
      warn(w, "unclosed_ref");
      break;
    }
    i = close_gt + 1;
  }
  return out;
}

bool is_media_or_category(std::string_view target) {
  target = trim(target);
  while (!target.empty() && target.front() == ':') target.remove_prefix(1);
  target = trim(target);
  return istarts_with(target, "file:") || istarts_with(target, "image:") ||
         istarts_with(target, "category:");
}

std::string remove_media_links(std::string_view s, Warnings* w) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (!at(s, i, "[[") || !is_media_or_category(s.substr(i + 2, 16))) {
      out += s[i++];
      continue;
    }
    int depth = 1;
    std::size_t j = i + 2;
    while (j < s.size() && depth > 0) {
      if (at(s, j, "[[")) {
        ++depth;
        j += 2;
      } else if (at(s, j, "]]")) {
        --depth;
        j += 2;
      } else {
        ++j;
      }
    }
    if (depth != 0) {
      warn(w, "unclosed_link");
      break;
    }
    i = j;
  }
  return out;
}

std::string remove_html_tags(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '<' && i + 1 < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '/')) {
      auto gt = s.find('>', i);
      auto next_lt = s.find('<', i + 1);
      if (gt != std::string_view::npos && (next_lt == std::string_view::npos || gt < next_lt)) {
        i = gt + 1;
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

std::string rewrite_wikilinks(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (!at(s, i, "[[")) {
      out += s[i++];
      continue;
    }
    auto close = s.find("]]", i + 2);
    auto inner_open = s.find("[[", i + 2);
    if (close == std::string_view::npos ||
        (inner_open != std::string_view::npos && inner_open < close)) {
      // Not a simple link; emit the brackets and let the inner link resolve.
      out += "[[";
      i += 2;
      continue;
    }
    std::string_view inner = s.substr(i + 2, close - i - 2);
    std::string_view label = inner;
    if (auto bar = inner.rfind('|'); bar != std::string_view::npos) {
      label = trim(inner.substr(bar + 1));
      if (label.empty()) label = inner.substr(0, inner.find('|'));
    }
    label = trim(label);
    while (!label.empty() && label.front() == ':') label.remove_prefix(1);
    out.append(label);
    i = close + 2;
  }
  return out;
}

bool starts_url(std::string_view s) {
  return istarts_with(s, "http://") || istarts_with(s, "https://") ||
         istarts_with(s, "ftp://") || s.starts_with("//");
}

std::string rewrite_external_links(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '[' && starts_url(s.substr(i + 1))) {
      auto close = s.find(']', i + 1);
      if (close != std::string_view::npos) {
        std::string_view inner = s.substr(i + 1, close - i - 1);
        auto sp = inner.find_first_of(" \t");
        if (sp != std::string_view::npos) out.append(trim(inner.substr(sp + 1)));
        i = close + 1;
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

std::string remove_quote_runs(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '\'' && i + 1 < s.size() && s[i + 1] == '\'') {
      while (i < s.size() && s[i] == '\'') ++i;
      continue;
    }
    out += s[i++];
  }
  return out;
}

std::string remove_magic_words(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (at(s, i, "__")) {
      std::size_t j = i + 2;
      while (j < s.size() && std::isupper(static_cast<unsigned char>(s[j]))) ++j;
      if (j > i + 2 && at(s, j, "__")) {
        i = j + 2;
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::string normalize_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::string_view line : split_lines(s)) {
    // List and indent markers carry no text.
    std::size_t b = 0;
    while (b < line.size() && (is_blank(line[b]) || line[b] == '*' || line[b] == '#' ||
                               line[b] == ':' || line[b] == ';'))
      ++b;
    std::string collapsed;
    bool pending_space = false;
    for (std::size_t k = b; k < line.size(); ++k) {
      if (is_blank(line[k])) {
        pending_space = true;
        continue;
      }
      if (pending_space && !collapsed.empty()) collapsed += ' ';
      pending_space = false;
      collapsed += line[k];
    }
    if (collapsed.empty()) continue;
    if (!out.empty()) out += '\n';
    out += collapsed;
  }
  return out;
}

struct HeadingLine {
  int level;
  bool balanced;
  std::string_view title;
};

std::optional<HeadingLine> parse_heading_line(std::string_view line) {
  while (!line.empty() && (is_blank(line.back()))) line.remove_suffix(1);
  if (line.size() < 3 || line.front() != '=' || line.back() != '=') return std::nullopt;
  std::size_t left = 0;
  while (left < line.size() && line[left] == '=') ++left;
  if (left == line.size()) return std::nullopt;
  std::size_t right = 0;
  while (right < line.size() && line[line.size() - 1 - right] == '=') ++right;
  std::string_view inner = trim(line.substr(left, line.size() - left - right));
  if (inner.empty()) return std::nullopt;
  int level = static_cast<int>(std::min({left, right, std::size_t{6}}));
  return HeadingLine{level, left == right, inner};
}

}  // namespace

std::string strip_comments(std::string_view s, Warnings* w) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    auto open = s.find("<!--", i);
    if (open == std::string_view::npos) {
      out.append(s.substr(i));
      break;
    }
    out.append(s.substr(i, open - i));
    auto close = s.find("-->", open + 4);
    if (close == std::string_view::npos) {
      warn(w, "unclosed_comment");
      break;
    }
    i = close + 3;
  }
  return out;
}

std::string clean_markup(std::string_view fragment, Warnings* w) {
  std::string s = strip_comments(fragment, w);
  s = remove_refs(s, w);
  s = remove_nested(s, "{{", "}}", "unclosed_template", w);
  s = remove_nested(s, "{|", "|}", "unclosed_table", w);
  s = remove_media_links(s, w);
  s = remove_html_tags(s);
  s = rewrite_wikilinks(s);
  s = rewrite_external_links(s);
  s = remove_quote_runs(s);
  s = remove_magic_words(s);
  return normalize_whitespace(s);
}

SegmentedText split_raw_sections(std::string_view wikitext, Warnings* w) {
  const std::string text = strip_comments(wikitext, w);
  SegmentedText out;
  std::string* body = &out.abstract;
  bool first_line = true;
  for (std::string_view line : split_lines(text)) {
    if (auto h = parse_heading_line(line)) {
      std::string heading = clean_markup(h->title);
      if (heading.empty()) {
        warn(w, "empty_heading");
        continue;
      }
      if (!h->balanced) warn(w, "unbalanced_heading");
      // Stray '=' left over from an unbalanced marker is not part of the title.
      auto t = std::string_view(heading);
      while (!t.empty() && t.front() == '=') t.remove_prefix(1);
      while (!t.empty() && t.back() == '=') t.remove_suffix(1);
      t = trim(t);
      if (t.empty()) {
        warn(w, "empty_heading");
        continue;
      }
      out.sections.push_back(Section{h->level, std::string(t), {}});
      body = &out.sections.back().body;
      first_line = true;
      continue;
    }
    if (!first_line) *body += '\n';
    body->append(line);
    first_line = false;
  }
  return out;
}

SegmentedText segment_sections(std::string_view wikitext, Warnings* w) {
  SegmentedText raw = split_raw_sections(wikitext, w);
  raw.abstract = clean_markup(raw.abstract, w);
  for (auto& s : raw.sections) s.body = clean_markup(s.body, w);
  return raw;
}

std::string normalize_title(std::string_view target) {
  if (auto hash = target.find('#'); hash != std::string_view::npos)
    target = target.substr(0, hash);
  std::string out;
  bool pending_space = false;
  for (char c : target) {
    if (c == '_' || std::isspace(static_cast<unsigned char>(c))) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out += ' ';
    pending_space = false;
    out += c;
  }
  if (!out.empty())
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::vector<std::string> extract_see_also(std::span<const Section> raw_sections) {
  std::vector<std::string> titles;
  auto it = std::find_if(raw_sections.begin(), raw_sections.end(), [](const Section& s) {
    return iequals(trim(s.heading), "see also");
  });
  if (it == raw_sections.end()) return titles;

  std::unordered_set<std::string> seen;
  std::string_view body = it->body;
  std::size_t i = 0;
  while ((i = body.find("[[", i)) != std::string_view::npos) {
    auto close = body.find("]]", i + 2);
    if (close == std::string_view::npos) break;
    std::string_view inner = body.substr(i + 2, close - i - 2);
    i = close + 2;
    std::string_view target = inner.substr(0, inner.find('|'));
    if (target.find("[[") != std::string_view::npos || is_media_or_category(target)) continue;
    target = trim(target);
    while (!target.empty() && target.front() == ':') target.remove_prefix(1);
    std::string norm = normalize_title(target);
    if (norm.empty() || !seen.insert(norm).second) continue;
    titles.push_back(std::move(norm));
  }
  return titles;
}

bool is_disambiguation(std::string_view wikitext) {
  std::size_t i = 0;
  while ((i = wikitext.find("{{", i)) != std::string_view::npos) {
    i += 2;
    std::string_view rest = trim(wikitext.substr(i, 32));
    if (istarts_with(rest, "disambig")) return true;
  }
  return false;
}

bool is_non_content_heading(std::string_view heading) {
  static constexpr std::array<std::string_view, 6> kNames = {
      "references", "external links", "further reading", "notes", "bibliography", "sources"};
  heading = trim(heading);
  return std::any_of(kNames.begin(), kNames.end(),
                     [&](std::string_view n) { return iequals(heading, n); });
}

}  // namespace forge
