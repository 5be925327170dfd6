#include "forge/samplers.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "forge/text_util.hpp"

namespace forge {

std::string_view task_name(Task t) {
  switch (t) {
    case Task::SRR: return "SRR";
    case Task::RWI: return "RWI";
    case Task::ATI: return "ATI";
    case Task::LTM: return "LTM";
  }
  return "?";
}

std::string_view task_key(Task t) {
  switch (t) {
    case Task::SRR: return "srr";
    case Task::RWI: return "rwi";
    case Task::ATI: return "ati";
    case Task::LTM: return "ltm";
  }
  return "?";
}

Task parse_task(std::string_view s) {
  for (Task t : kAllTasks)
    if (iequals(s, task_key(t))) return t;
  throw std::invalid_argument("unknown task: " + std::string(s));
}

void SamplerConfig::validate() const {
  const std::pair<const char*, std::size_t> counts[] = {
      {"max_query_words", max_query_words},     {"max_doc_words", max_doc_words},
      {"ltm_max_doc_words", ltm_max_doc_words}, {"min_content_words", min_content_words},
      {"srr_max_negatives", srr_max_negatives}, {"rwi_num_negatives", rwi_num_negatives},
      {"ati_max_negatives", ati_max_negatives}, {"ltm_num_negatives", ltm_num_negatives},
  };
  for (const auto& [name, v] : counts)
    if (v == 0) throw std::invalid_argument(std::string(name) + " must be at least 1");
}

namespace {

bool contentful(std::string_view text, const SamplerConfig& cfg) {
  return word_count(text) >= cfg.min_content_words;
}

/// Random subset of `ids` of size `cap` if over it, kept in original order.
std::vector<NodeId> cap_subset(std::vector<NodeId> ids, std::size_t cap, Rng& rng) {
  if (ids.size() <= cap) return ids;
  auto pick = rng.choose(ids.size(), cap);
  std::sort(pick.begin(), pick.end());
  std::vector<NodeId> out;
  for (auto i : pick) out.push_back(ids[i]);
  return out;
}

/// Adds truncated negatives, skipping empties and anything equal to the
/// positive or an earlier negative. Returns the ids actually kept.
template <class Id>
std::vector<Id> add_negatives(PseudoInstance& inst, const std::vector<Id>& ids,
                              const std::vector<std::string>& texts) {
  std::vector<Id> kept;
  std::unordered_set<std::string> seen{inst.positive};
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (trim(texts[i]).empty() || !seen.insert(texts[i]).second) continue;
    inst.negatives.push_back(texts[i]);
    kept.push_back(ids[i]);
  }
  return kept;
}

}  // namespace

std::vector<PseudoInstance> sample_srr(const Wst& wst, const SamplerConfig& cfg, Rng& rng) {
  std::vector<PseudoInstance> out;
  for (const auto& parent : wst.nodes()) {
    if (parent.children.size() < 2) continue;
    std::vector<NodeId> qualifying;
    for (NodeId c : parent.children)
      if (contentful(wst.node(c).content, cfg)) qualifying.push_back(c);
    if (qualifying.size() < 2) continue;

    const NodeId pos = qualifying[rng.below(qualifying.size())];
    std::vector<NodeId> others;
    for (NodeId c : qualifying)
      if (c != pos) others.push_back(c);
    others = cap_subset(std::move(others), cfg.srr_max_negatives, rng);

    PseudoInstance inst;
    inst.task = Task::SRR;
    inst.article_id = wst.article_id();
    inst.query = truncate_words(join(path_titles(wst, pos), " "), cfg.max_query_words);
    inst.positive = truncate_words(wst.node(pos).content, cfg.max_doc_words);
    std::vector<std::string> texts;
    for (NodeId c : others) texts.push_back(truncate_words(wst.node(c).content, cfg.max_doc_words));
    auto kept = add_negatives(inst, others, texts);
    if (kept.empty() || inst.query.empty()) continue;
    inst.provenance.node_ids = {parent.id, pos};
    inst.provenance.node_ids.insert(inst.provenance.node_ids.end(), kept.begin(), kept.end());
    out.push_back(std::move(inst));
  }
  return out;
}

std::optional<PseudoInstance> sample_rwi(const Wst& wst, const SamplerConfig& cfg, Rng& rng) {
  const std::size_t non_root = wst.size() - 1;
  if (non_root < cfg.rwi_num_negatives + 2) return std::nullopt;

  std::vector<NodeId> docs;
  for (NodeId id = 1; id < wst.size(); ++id)
    if (contentful(wst.node(id).content, cfg)) docs.push_back(id);
  if (docs.empty()) return std::nullopt;

  const NodeId doc = docs[rng.below(docs.size())];
  const auto path = path_nodes(wst, doc);
  const std::size_t per_query = path.size() - 1;  // depth - 1 subtitles

  std::vector<NodeId> candidates;
  for (NodeId id = 1; id < wst.size(); ++id)
    if (std::find(path.begin(), path.end(), id) == path.end()) candidates.push_back(id);
  if (candidates.size() < per_query) return std::nullopt;

  PseudoInstance inst;
  inst.task = Task::RWI;
  inst.article_id = wst.article_id();
  inst.query = truncate_words(join(path_titles(wst, doc), " "), cfg.max_query_words);
  inst.positive = truncate_words(wst.node(doc).content, cfg.max_doc_words);
  inst.provenance.node_ids.push_back(doc);

  constexpr int kMaxAttempts = 20;
  std::unordered_set<std::string> taken{inst.query};
  for (std::size_t n = 0; n < cfg.rwi_num_negatives; ++n) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
      std::vector<std::string> parts{wst.root().title};
      std::vector<NodeId> picked;
      for (auto i : rng.choose(candidates.size(), per_query)) {
        picked.push_back(candidates[i]);
        parts.push_back(wst.node(candidates[i]).title);
      }
      std::string q = truncate_words(join(parts, " "), cfg.max_query_words);
      if (!taken.insert(q).second) continue;
      inst.negatives.push_back(std::move(q));
      inst.provenance.node_ids.insert(inst.provenance.node_ids.end(), picked.begin(), picked.end());
      placed = true;
    }
    if (!placed) return std::nullopt;
  }
  return inst;
}

std::optional<PseudoInstance> sample_ati(const Wst& wst, const SamplerConfig& cfg, Rng& rng) {
  const WstNode& root = wst.root();
  if (!contentful(root.content, cfg)) return std::nullopt;

  std::vector<NodeId> sections;
  for (NodeId c : root.children)
    if (contentful(subtree_text(wst, c), cfg)) sections.push_back(c);
  if (sections.empty()) return std::nullopt;
  sections = cap_subset(std::move(sections), cfg.ati_max_negatives, rng);

  PseudoInstance inst;
  inst.task = Task::ATI;
  inst.article_id = wst.article_id();
  inst.query = truncate_words(root.title, cfg.max_query_words);
  inst.positive = truncate_words(root.content, cfg.max_doc_words);
  std::vector<std::string> texts;
  for (NodeId c : sections) texts.push_back(truncate_words(subtree_text(wst, c), cfg.max_doc_words));
  auto kept = add_negatives(inst, sections, texts);
  if (kept.empty() || inst.query.empty()) return std::nullopt;
  inst.provenance.node_ids = {0};
  inst.provenance.node_ids.insert(inst.provenance.node_ids.end(), kept.begin(), kept.end());
  return inst;
}

std::vector<PseudoInstance> sample_ltm(const Sag& sag, const TextLookup& text_of,
                                       ArticleId article, const SamplerConfig& cfg, Rng& rng,
                                       Warnings* w) {
  std::vector<PseudoInstance> out;
  const auto adjacent = sag.neighbors(article, cfg.ltm_adjacency);
  if (adjacent.empty()) return out;

  auto self = text_of(article);
  if (!self) {
    if (w) w->add("ltm_missing_text");
    return out;
  }
  const std::string query = truncate_words(*self, cfg.ltm_max_doc_words);
  if (query.empty()) return out;

  for (ArticleId nb : adjacent) {
    auto text = text_of(nb);
    if (!text) {
      if (w) w->add("ltm_missing_text");
      continue;
    }
    if (!contentful(*text, cfg)) continue;

    auto negative_ids =
        sag.sample_non_neighbors(article, cfg.ltm_num_negatives, rng, cfg.ltm_adjacency);
    if (negative_ids.empty()) return out;  // pool is the same for every neighbor

    PseudoInstance inst;
    inst.task = Task::LTM;
    inst.article_id = article;
    inst.query = query;
    inst.positive = truncate_words(*text, cfg.ltm_max_doc_words);

    std::vector<ArticleId> ids;
    std::vector<std::string> texts;
    for (ArticleId neg : negative_ids) {
      auto t = text_of(neg);
      if (!t) {
        if (w) w->add("ltm_missing_text");
        continue;
      }
      ids.push_back(neg);
      texts.push_back(truncate_words(*t, cfg.ltm_max_doc_words));
    }
    auto kept = add_negatives(inst, ids, texts);
    if (kept.empty()) continue;
    inst.provenance.neighbor_id = nb;
    inst.provenance.negative_ids = std::move(kept);
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace forge
