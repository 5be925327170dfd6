#include "doctest.h"
#include "forge/article.hpp"
#include "forge/rng.hpp"
#include "forge/wst.hpp"
#include "test_support.hpp"
#include "wst_fixtures.hpp"

using namespace forge;

namespace {

Wst example_tree() {
  std::vector<Section> s{{2, "A", "bodyA"}, {3, "B", "bodyB"}, {2, "C", "bodyC"}};
  return build_wst(1, "T", "abs", s);
}

Wst fixture_tree(const test::ExpectedTree& e) {
  RawArticle raw{1, e.title, test::slurp(test::fixture("wst/" + e.file)), false, 0};
  auto p = prepare_article(raw);
  REQUIRE(p.status == ArticleFilter::Kept);
  return build_wst(1, p.article.title, p.article.abstract, p.article.sections);
}

}  // namespace

TEST_CASE("stack rule on the small example") {
  Wst t = example_tree();
  REQUIRE(t.size() == 4);
  CHECK(t.root().title == "T");
  CHECK(t.root().content == "abs");
  CHECK(t.root().children == std::vector<NodeId>{1, 3});
  CHECK(t.node(1).children == std::vector<NodeId>{2});
  CHECK(t.node(1).depth == 2);
  CHECK(t.node(2).depth == 3);
  CHECK(t.node(3).depth == 2);
}

TEST_CASE("no sections gives a root-only tree") {
  Wst t = build_wst(9, "Only", "text", {});
  CHECK(t.size() == 1);
  CHECK(t.is_leaf(0));
  CHECK(path_titles(t, 0) == std::vector<std::string>{"Only"});
}

TEST_CASE("path_titles and subtree_text") {
  Wst t = example_tree();
  CHECK(path_titles(t, 2) == std::vector<std::string>{"T", "A", "B"});
  CHECK(path_titles(t, 0) == std::vector<std::string>{"T"});
  CHECK(subtree_text(t, 2) == "bodyB");
  CHECK(subtree_text(t, 1) == "bodyA\nbodyB");
  CHECK(subtree_text(t, 0) == "abs\nbodyA\nbodyB\nbodyC");
  CHECK_THROWS_AS(path_titles(t, 7), std::out_of_range);
  CHECK_THROWS_AS(subtree_text(t, 4), std::out_of_range);
}

TEST_CASE("hand-drawn fixture trees") {
  for (const auto& e : test::expected_trees()) {
    CAPTURE(e.file);
    Wst t = fixture_tree(e);
    REQUIRE(t.size() == e.parents.size());
    for (NodeId i = 0; i < t.size(); ++i) {
      CHECK(t.node(i).parent == e.parents[i]);
      CHECK(t.node(i).depth == e.depths[i]);
      CHECK(t.node(i).title == e.titles[i]);
      CHECK(path_titles(t, i).size() == static_cast<std::size_t>(e.depths[i]));
    }
  }
}

TEST_CASE("fixture paths and subtree text") {
  const auto& trees = test::expected_trees();
  Wst deep = fixture_tree(trees[3]);
  CHECK(path_titles(deep, 3) ==
        std::vector<std::string>{"Deep", "History", "Early period", "Founding"});
  CHECK(subtree_text(deep, 1) ==
        "History overview.\nEarly period text.\nFounding text about the origins.\n"
        "Growth text.\nModern text.");

  Wst solar = fixture_tree(trees[1]);
  CHECK(solar.root().content ==
        "Solar power is the conversion of energy from sunlight into electricity.");
  CHECK(subtree_text(solar, 4) ==
        "The cost of solar electricity has fallen.\n"
        "Prices for panels dropped sharply in the last decade.\n"
        "Grid parity is reached when solar costs match the grid.\n"
        "Households consume the power they generate.");
}

TEST_CASE("debug dump") {
  CHECK(debug_dump(example_tree()) == "1\tT\t1\n  2\tA\t1\n    3\tB\t1\n  2\tC\t1\n");
}

TEST_CASE("property: tree invariants on random heading sequences") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Section> sections;
    std::size_t body_chars = 0;
    const auto n = rng.below(15);
    for (std::size_t i = 0; i < n; ++i) {
      std::string body(rng.below(5), 'x');
      body_chars += body.size();
      sections.push_back({1 + static_cast<int>(rng.below(6)), "h" + std::to_string(i), body});
    }
    Wst t = build_wst(1, "Root", "abstract", sections);
    Wst again = build_wst(1, "Root", "abstract", sections);
    REQUIRE(t.size() == n + 1);
    std::size_t content_chars = 0;
    for (NodeId i = 0; i < t.size(); ++i) {
      const auto& node = t.node(i);
      CHECK(node.id == i);
      content_chars += node.content.size();
      CHECK(node.parent == again.node(i).parent);
      if (i > 0) {
        CHECK(node.parent < i);
        CHECK(node.depth == t.node(node.parent).depth + 1);
        CHECK(node.title == sections[i - 1].heading);  // node order = section order
        const auto& siblings = t.node(node.parent).children;
        CHECK(std::count(siblings.begin(), siblings.end(), i) == 1);
      }
      auto path = path_titles(t, i);
      CHECK(path.size() == static_cast<std::size_t>(node.depth));
      CHECK(path.front() == "Root");
    }
    CHECK(content_chars == std::string("abstract").size() + body_chars);
  }
}
