#pragma once

// Synthetic MediaWiki dumps for scale and cap tests.

#include <ostream>
#include <string>

#include "forge/rng.hpp"

namespace forge::test {

inline std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string synthetic_words(Rng& rng, std::size_t n) {
  static const char* kWords[] = {"river", "stone", "garden", "engine", "winter", "signal",
                                 "market", "forest", "bridge", "copper", "harbor", "lantern",
                                 "meadow", "orbit",  "pepper", "quarry", "saddle", "thunder"};
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) s += ' ';
    s += kWords[rng.below(18)];
    s += std::to_string(rng.below(1000));
  }
  return s;
}

/// Wikitext for article `i` of `n`: abstract, `sections` top-level sections
/// with `subsections` children each, a See also list, and `words` words per
/// body.
inline std::string synthetic_article(Rng& rng, std::size_t i, std::size_t n, std::size_t sections,
                                     std::size_t subsections, std::size_t words) {
  std::string t = "'''Topic " + std::to_string(i) + "''' " + synthetic_words(rng, words) +
                  "<ref>{{cite web|url=http://x}}</ref>\n";
  for (std::size_t s = 0; s < sections; ++s) {
    t += "== Part " + std::to_string(s) + " ==\n" + synthetic_words(rng, words) + "\n";
    for (std::size_t c = 0; c < subsections; ++c)
      t += "=== Detail " + std::to_string(s) + "." + std::to_string(c) + " ===\n" +
           synthetic_words(rng, words) + " [[Topic " + std::to_string(rng.below(n)) + "]]\n";
  }
  t += "== See also ==\n";
  for (int l = 0; l < 3; ++l) t += "* [[Topic " + std::to_string(rng.below(n + 5)) + "]]\n";
  return t;
}

inline void write_page(std::ostream& out, std::uint64_t id, const std::string& title,
                       const std::string& text) {
  out << "  <page>\n    <title>" << xml_escape(title) << "</title>\n    <ns>0</ns>\n    <id>" << id
      << "</id>\n    <revision>\n      <id>" << id + 100000
      << "</id>\n      <text xml:space=\"preserve\">" << xml_escape(text)
      << "</text>\n    </revision>\n  </page>\n";
}

inline void write_synthetic_dump(std::ostream& out, std::size_t n, std::uint64_t seed,
                                 std::size_t sections = 3, std::size_t subsections = 3,
                                 std::size_t words = 14) {
  Rng rng(seed);
  out << "<mediawiki xmlns=\"http://www.mediawiki.org/xml/export-0.10/\">\n";
  for (std::size_t i = 0; i < n; ++i)
    write_page(out, i + 1, "Topic " + std::to_string(i),
               synthetic_article(rng, i, n, sections, subsections, words));
  out << "</mediawiki>\n";
}

}  // namespace forge::test
