#include <algorithm>
#include <filesystem>
#include <map>

#include "doctest.h"
#include "forge/article.hpp"
#include "forge/rng.hpp"
#include "forge/text_util.hpp"
#include "forge/wikitext.hpp"
#include "test_support.hpp"

using namespace forge;

TEST_CASE("clean_markup rewrite rules") {
  CHECK(clean_markup("See [[Apple|apples]] {{cn}} today") == "See apples today");
  CHECK(clean_markup("a<ref>x</ref>b") == "ab");
  CHECK(clean_markup("[[Apple]]s and [[Pear|]]") == "Apples and Pear");
  CHECK(clean_markup("x <ref name=\"n\" /> y") == "x y");
  CHECK(clean_markup("") == "");
  CHECK(clean_markup("line one\n\n\n   line two  ") == "line one\nline two");
}

TEST_CASE("clean_markup counts unclosed constructs") {
  Warnings w;
  CHECK(clean_markup("keep {{open", &w) == "keep");
  CHECK(clean_markup("keep {| table\n| cell", &w) == "keep");
  CHECK(w.get("unclosed_template") == 1);
  CHECK(w.get("unclosed_table") == 1);
}

TEST_CASE("template nesting deeper than 32 drops the rest") {
  std::string deep;
  for (int i = 0; i < 40; ++i) deep += "{{";
  for (int i = 0; i < 40; ++i) deep += "}}";
  Warnings w;
  CHECK(clean_markup("ok " + deep + " tail", &w) == "ok");
  CHECK(w.get("nesting_too_deep") == 1);
  std::string ok;
  for (int i = 0; i < 32; ++i) ok += "{{";
  for (int i = 0; i < 32; ++i) ok += "}}";
  CHECK(clean_markup("ok " + ok + " tail") == "ok tail");
}

TEST_CASE("clean_markup golden fragments are reproduced and idempotent") {
  int n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(test::fixture("clean"))) {
    const auto name = entry.path().filename().string();
    if (!name.ends_with(".in.txt")) continue;
    auto golden = entry.path();
    golden.replace_filename(name.substr(0, name.size() - 7) + ".out.txt");
    const std::string cleaned = clean_markup(test::slurp(entry.path()));
    CAPTURE(name);
    CHECK(cleaned == test::slurp(golden));
    CHECK(clean_markup(cleaned) == cleaned);
    ++n;
  }
  CHECK(n == 10);
}

TEST_CASE("segment_sections basic split") {
  auto seg = segment_sections("intro\n== A ==\nbodyA\n=== B ===\nbodyB");
  CHECK(seg.abstract == "intro");
  REQUIRE(seg.sections.size() == 2);
  CHECK(seg.sections[0] == Section{2, "A", "bodyA"});
  CHECK(seg.sections[1] == Section{3, "B", "bodyB"});
}

TEST_CASE("text without headings is all abstract") {
  auto seg = segment_sections("just [[text]]\nmore");
  CHECK(seg.abstract == "just text\nmore");
  CHECK(seg.sections.empty());
}

TEST_CASE("seven headings with hand-listed levels") {
  const char* text =
      "Lead.\n"
      "== One ==\n1\n"
      "=== Two ===\n2\n"
      "==== Three ====\n3\n"
      "== Four ==\n4\n"
      "= Five =\n5\n"
      "====== Six ======\n6\n"
      "===== Seven =====\n7\n";
  auto seg = segment_sections(text);
  std::vector<int> levels;
  std::vector<std::string> headings;
  for (const auto& s : seg.sections) {
    levels.push_back(s.level);
    headings.push_back(s.heading);
  }
  CHECK(levels == std::vector<int>{2, 3, 4, 2, 1, 6, 5});
  CHECK(headings ==
        std::vector<std::string>{"One", "Two", "Three", "Four", "Five", "Six", "Seven"});
  CHECK(seg.sections[6].body == "7");
}

TEST_CASE("unbalanced heading takes the smaller level") {
  Warnings w;
  auto seg = segment_sections("== X ===\nbody\n=== Y ==\nmore", &w);
  REQUIRE(seg.sections.size() == 2);
  CHECK(seg.sections[0].level == 2);
  CHECK(seg.sections[0].heading == "X");
  CHECK(seg.sections[1].level == 2);
  CHECK(w.get("unbalanced_heading") == 2);
}

TEST_CASE("headings are cleaned and commented-out headings ignored") {
  auto seg = segment_sections("a\n== [[Solar cell|Cells]] {{x}} ==\nb\n<!--\n== Hidden ==\n-->c");
  REQUIRE(seg.sections.size() == 1);
  CHECK(seg.sections[0].heading == "Cells");
  CHECK(seg.sections[0].body == "b\nc");
}

TEST_CASE("extract_see_also normalizes and de-duplicates") {
  std::vector<Section> raw{{2, "History", "[[Ignored]]"},
                           {2, "See also", "* [[fruit]]\n* [[Apple pie|pie]]"}};
  CHECK(extract_see_also(raw) == std::vector<std::string>{"Fruit", "Apple pie"});
  CHECK(extract_see_also(std::vector<Section>{{2, "History", "[[X]]"}}).empty());

  std::vector<Section> five{{2, " see ALSO ",
                             "* [[apple_tree]]\n* [[Cider#History|cider]]\n* [[Pear]]\n"
                             "* [[pear]]\n* [[Orchard  design]]\n[[File:x.png|thumb]]"}};
  CHECK(extract_see_also(five) ==
        std::vector<std::string>{"Apple tree", "Cider", "Pear", "Orchard design"});
}

TEST_CASE("normalize_title") {
  CHECK(normalize_title("apple_pie#Recipe") == "Apple pie");
  CHECK(normalize_title("  a   b ") == "A b");
  CHECK(normalize_title("#Only fragment").empty());
}

TEST_CASE("disambiguation and non-content detection") {
  CHECK(is_disambiguation("text\n{{Disambiguation}}"));
  CHECK(is_disambiguation("{{ disambig|geo}}"));
  CHECK_FALSE(is_disambiguation("{{Infobox}}"));
  CHECK(is_non_content_heading("External links"));
  CHECK(is_non_content_heading(" references "));
  CHECK_FALSE(is_non_content_heading("See also"));
}

TEST_CASE("prepare_article filters and drops citation sections with children") {
  RawArticle raw{5, "  Sample ", "Lead words.\n== Body ==\nText.\n== See also ==\n* [[other]]\n"
                                 "== Notes ==\nn\n=== Citations ===\nc\n== Later ==\nl", false, 0};
  auto p = prepare_article(raw);
  REQUIRE(p.status == ArticleFilter::Kept);
  CHECK(p.article.title == "Sample");
  CHECK(p.article.see_also == std::vector<std::string>{"Other"});
  std::vector<std::string> headings;
  for (const auto& s : p.article.sections) headings.push_back(s.heading);
  CHECK(headings == std::vector<std::string>{"Body", "See also", "Later"});

  CHECK(prepare_article({1, "R", "#REDIRECT [[X]]", true, 0}).status == ArticleFilter::Redirect);
  CHECK(prepare_article({1, "D", "x {{disambiguation}}", false, 0}).status ==
        ArticleFilter::Disambiguation);
  CHECK(prepare_article({1, "Talk", "x", false, 1}).status == ArticleFilter::NonMainNamespace);
}

namespace {

std::map<std::string, int> word_bag(std::string_view s) {
  std::map<std::string, int> bag;
  std::string w;
  for (char c : std::string(s) + " ") {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!w.empty()) ++bag[w];
      w.clear();
    } else {
      w += c;
    }
  }
  return bag;
}

}  // namespace

TEST_CASE("property: segmentation partitions the non-heading text") {
  const char* pieces[] = {"alpha beta", "[[link|gamma]]", "{{tmpl|x}} delta", "'''bold''' eps",
                          "<ref>cite</ref>zeta", "* item eta", "theta [http://x.org iota]"};
  const char* headings[] = {"== H ==", "=== Sub ===", "= Top =", "==== Deep ===="};
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::string text, without_headings;
    const int lines = 1 + static_cast<int>(rng.below(12));
    for (int i = 0; i < lines; ++i) {
      if (rng.below(3) == 0) {
        text += std::string(headings[rng.below(4)]) + "\n";
      } else {
        std::string line = pieces[rng.below(7)];
        text += line + "\n";
        without_headings += line + "\n";
      }
    }
    auto seg = segment_sections(text);
    std::string joined = seg.abstract;
    for (const auto& s : seg.sections) joined += "\n" + s.body;
    CAPTURE(text);
    CHECK(word_bag(joined) == word_bag(clean_markup(without_headings)));
    for (const auto& s : seg.sections) {
      CHECK(s.level >= 1);
      CHECK(s.level <= 6);
      CHECK_FALSE(s.heading.empty());
      CHECK(s.body.find("==") == std::string::npos);
    }
  }
}
