#include "forge/sag.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace forge {

Sag Sag::build(std::span<const SagInput> articles, Warnings* w) {
  Sag g;
  std::vector<const SagInput*> accepted;
  accepted.reserve(articles.size());
  for (const auto& a : articles) {
    if (g.index_.count(a.id)) {
      if (w) w->add("duplicate_article_id");
      continue;
    }
    g.index_.emplace(a.id, 0);
    accepted.push_back(&a);
    if (!g.titles_.emplace(a.title, a.id).second && w) w->add("duplicate_title");
  }

  for (const auto* a : accepted) g.ids_.push_back(a->id);
  std::sort(g.ids_.begin(), g.ids_.end());
  for (std::size_t i = 0; i < g.ids_.size(); ++i) g.index_[g.ids_[i]] = i;
  g.out_.resize(g.ids_.size());
  g.in_.resize(g.ids_.size());

  for (const auto* a : accepted) {
    auto& out = g.out_[g.index_.at(a->id)];
    for (const auto& t : a->see_also) {
      auto it = g.titles_.find(t);
      if (it == g.titles_.end()) {
        if (w) w->add("unresolved_see_also");
        continue;
      }
      if (it->second == a->id) {
        if (w) w->add("see_also_self_link");
        continue;
      }
      out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    g.edges_ += out.size();
    for (ArticleId t : out) g.in_[g.index_.at(t)].push_back(a->id);
  }
  for (auto& in : g.in_) std::sort(in.begin(), in.end());
  return g;
}

std::size_t Sag::dense(ArticleId id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw std::out_of_range("article " + std::to_string(id) + " is not a graph vertex");
  return it->second;
}

std::span<const ArticleId> Sag::out_neighbors(ArticleId id) const { return out_[dense(id)]; }

std::span<const ArticleId> Sag::in_neighbors(ArticleId id) const { return in_[dense(id)]; }

std::vector<ArticleId> Sag::neighbors(ArticleId id, Adjacency mode) const {
  auto out = out_neighbors(id);
  if (mode == Adjacency::Out) return {out.begin(), out.end()};
  auto in = in_neighbors(id);
  std::vector<ArticleId> merged;
  std::set_union(out.begin(), out.end(), in.begin(), in.end(), std::back_inserter(merged));
  return merged;
}

std::optional<ArticleId> Sag::find_title(const std::string& normalized_title) const {
  auto it = titles_.find(normalized_title);
  if (it == titles_.end()) return std::nullopt;
  return it->second;
}

std::vector<ArticleId> Sag::sample_non_neighbors(ArticleId id, std::size_t k, Rng& rng,
                                                 Adjacency mode) const {
  std::vector<ArticleId> excluded = neighbors(id, mode);
  excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), id), id);
  const std::size_t pool_size = ids_.size() - excluded.size();
  std::vector<ArticleId> picked;
  if (pool_size == 0 || k == 0) return picked;

  auto is_excluded = [&](ArticleId v) {
    return std::binary_search(excluded.begin(), excluded.end(), v);
  };

  if (k >= pool_size || 2 * excluded.size() >= ids_.size() || 4 * k >= pool_size) {
    std::vector<ArticleId> pool;
    pool.reserve(pool_size);
    for (ArticleId v : ids_)
      if (!is_excluded(v)) pool.push_back(v);
    for (std::size_t i : rng.choose(pool.size(), k)) picked.push_back(pool[i]);
    return picked;
  }

  // Large sparse pool: rejection sampling avoids materializing it.
  std::unordered_set<ArticleId> chosen;
  while (picked.size() < k) {
    ArticleId v = ids_[rng.below(ids_.size())];
    if (is_excluded(v) || !chosen.insert(v).second) continue;
    picked.push_back(v);
  }
  return picked;
}

std::string Sag::edge_list() const {
  std::string out;
  for (std::size_t i = 0; i < ids_.size(); ++i)
    for (ArticleId t : out_[i]) out += std::to_string(ids_[i]) + '\t' + std::to_string(t) + '\n';
  return out;
}

}  // namespace forge
