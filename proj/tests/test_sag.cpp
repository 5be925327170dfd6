#include <algorithm>
#include <set>

#include "doctest.h"
#include "forge/sag.hpp"

using namespace forge;

namespace {

std::set<std::pair<ArticleId, ArticleId>> edge_set(const Sag& g) {
  std::set<std::pair<ArticleId, ArticleId>> out;
  for (ArticleId v : g.vertices())
    for (ArticleId t : g.out_neighbors(v)) out.insert({v, t});
  return out;
}

std::vector<ArticleId> ids(std::span<const ArticleId> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("directed construction") {
  std::vector<SagInput> in{{1, "A", {"B"}}, {2, "B", {}}};
  Sag g = Sag::build(in);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(ids(g.out_neighbors(1)) == std::vector<ArticleId>{2});
  CHECK(g.out_neighbors(2).empty());
  CHECK(ids(g.in_neighbors(2)) == std::vector<ArticleId>{1});
}

TEST_CASE("self-loops and unresolved targets are dropped") {
  Warnings w;
  std::vector<SagInput> in{{1, "A", {"A", "C"}}};
  Sag g = Sag::build(in, &w);
  CHECK(g.edge_count() == 0);
  CHECK(w.get("see_also_self_link") == 1);
  CHECK(w.get("unresolved_see_also") == 1);
}

TEST_CASE("five-article fixture: 7 links, 1 unresolved, 1 duplicate, 5 edges") {
  std::vector<SagInput> in{
      {10, "Apple", {"Pear", "Cider", "Pear"}},
      {20, "Pear", {"Apple"}},
      {30, "Cider", {"Perry"}},
      {40, "Quince", {"Pear", "Apple"}},
      {50, "Orchard", {}},
  };
  Warnings w;
  Sag g = Sag::build(in, &w);
  CHECK(g.edge_count() == 5);
  CHECK(edge_set(g) == std::set<std::pair<ArticleId, ArticleId>>{
                           {10, 20}, {10, 30}, {20, 10}, {40, 10}, {40, 20}});
  CHECK(w.get("unresolved_see_also") == 1);
  CHECK(g.edge_list() == "10\t20\n10\t30\n20\t10\n40\t10\n40\t20\n");

  // Hub vertex: in-neighbors of Apple, and symmetric adjacency.
  CHECK(ids(g.in_neighbors(10)) == std::vector<ArticleId>{20, 40});
  CHECK(g.neighbors(10, Adjacency::Symmetric) == std::vector<ArticleId>{20, 30, 40});
  CHECK(g.out_neighbors(50).empty());
  CHECK_THROWS_AS(g.out_neighbors(99), std::out_of_range);
}

TEST_CASE("duplicate titles keep the first article") {
  Warnings w;
  std::vector<SagInput> in{{1, "X", {}}, {2, "X", {}}, {3, "Y", {"X"}}};
  Sag g = Sag::build(in, &w);
  CHECK(w.get("duplicate_title") == 1);
  CHECK(ids(g.out_neighbors(3)) == std::vector<ArticleId>{1});
  CHECK(g.find_title("X") == ArticleId{1});
}

TEST_CASE("edge set is insensitive to input order") {
  std::vector<SagInput> in{{3, "C", {"A", "B"}}, {1, "A", {"C"}}, {2, "B", {"A", "Z"}},
                           {4, "D", {"B"}}};
  Sag g1 = Sag::build(in);
  std::reverse(in.begin(), in.end());
  Sag g2 = Sag::build(in);
  CHECK(g1.edge_list() == g2.edge_list());
  std::rotate(in.begin(), in.begin() + 1, in.end());
  CHECK(Sag::build(in).edge_list() == g1.edge_list());
}

TEST_CASE("non-neighbor sampling edge cases") {
  {
    std::vector<SagInput> in{{1, "A", {"B"}}, {2, "B", {}}};
    Sag g = Sag::build(in);
    Rng rng(1);
    CHECK(g.sample_non_neighbors(1, 1, rng).empty());
  }
  {
    std::vector<SagInput> in{{1, "A", {"B"}}, {2, "B", {}}, {3, "C", {}}};
    Sag g = Sag::build(in);
    Rng rng(1);
    CHECK(g.sample_non_neighbors(1, 1, rng) == std::vector<ArticleId>{3});
    CHECK(g.sample_non_neighbors(1, 5, rng) == std::vector<ArticleId>{3});
  }
}

TEST_CASE("property: sampled negatives avoid the article and its neighbors") {
  // Random graphs, both the enumerating and the rejection sampling paths.
  Rng gen(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + gen.below(trial < 30 ? 10 : 400);
    std::vector<SagInput> in;
    for (std::size_t i = 0; i < n; ++i) in.push_back({i * 3 + 1, "T" + std::to_string(i), {}});
    for (auto& a : in)
      for (int e = 0; e < 3; ++e) a.see_also.push_back("T" + std::to_string(gen.below(n)));
    Sag g = Sag::build(in);
    for (Adjacency mode : {Adjacency::Out, Adjacency::Symmetric}) {
      for (int q = 0; q < 5; ++q) {
        const ArticleId v = g.vertices()[gen.below(n)];
        const std::size_t k = 1 + gen.below(6);
        Rng r1(trial * 31 + q), r2(trial * 31 + q);
        auto picked = g.sample_non_neighbors(v, k, r1, mode);
        CHECK(picked == g.sample_non_neighbors(v, k, r2, mode));
        auto adj = g.neighbors(v, mode);
        const std::size_t pool = n - 1 - adj.size();
        CHECK(picked.size() == std::min(k, pool));
        std::set<ArticleId> uniq(picked.begin(), picked.end());
        CHECK(uniq.size() == picked.size());
        for (ArticleId p : picked) {
          CHECK(p != v);
          CHECK(std::find(adj.begin(), adj.end(), p) == adj.end());
          CHECK(g.contains(p));
        }
      }
    }
  }
}
