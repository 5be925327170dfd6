#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forge/diagnostics.hpp"
#include "forge/rng.hpp"
#include "forge/sag.hpp"
#include "forge/wst.hpp"

namespace forge {

enum class Task { SRR = 0, RWI = 1, ATI = 2, LTM = 3 };

inline constexpr Task kAllTasks[] = {Task::SRR, Task::RWI, Task::ATI, Task::LTM};

/// "SRR", "RWI", "ATI", "LTM".
std::string_view task_name(Task t);
/// "srr", "rwi", "ati", "ltm"; also the output file stem.
std::string_view task_key(Task t);
/// Accepts either case; throws std::invalid_argument otherwise.
Task parse_task(std::string_view s);

/// Which nodes or articles an instance was assembled from.
///
///  - SRR: node_ids = [parent, positive, negative...]
///  - RWI: node_ids = [positive, then depth-1 selected nodes per negative query]
///  - ATI: node_ids = [0, negative top-level section...]
///  - LTM: neighbor_id = positive article, negative_ids = negative articles
struct Provenance {
  std::vector<NodeId> node_ids;
  std::optional<ArticleId> neighbor_id;
  std::vector<ArticleId> negative_ids;

  bool operator==(const Provenance&) const = default;
};

/// One contrastive group. For RWI the roles are inverted: `query` is the
/// positive query, `positive` the fixed document, `negatives` are queries.
struct PseudoInstance {
  Task task = Task::SRR;
  ArticleId article_id = 0;
  std::string query;
  std::string positive;
  std::vector<std::string> negatives;
  Provenance provenance;

  bool operator==(const PseudoInstance&) const = default;
};

struct SamplerConfig {
  std::size_t max_query_words = 30;
  std::size_t max_doc_words = 480;
  std::size_t ltm_max_doc_words = 255;
  std::size_t min_content_words = 10;
  std::size_t srr_max_negatives = 16;
  std::size_t rwi_num_negatives = 4;
  std::size_t ati_max_negatives = 8;
  std::size_t ltm_num_negatives = 4;
  std::uint64_t seed = 0;
  Adjacency ltm_adjacency = Adjacency::Out;

  /// Throws std::invalid_argument if any count is zero.
  void validate() const;
};

/// Per-(article, task) generator; independent of processing order.
inline Rng task_rng(const SamplerConfig& cfg, ArticleId article, Task task) {
  return derive_rng(cfg.seed, article, static_cast<std::uint64_t>(task));
}

/// One instance per internal node with at least two children whose content
/// reaches min_content_words: a random qualifying child is the positive,
/// its qualifying siblings the negatives, the root-to-child titles the query.
std::vector<PseudoInstance> sample_srr(const Wst& wst, const SamplerConfig& cfg, Rng& rng);

/// At most one instance per article. A random contentful node fixes the
/// document and its path titles form the positive query; each negative
/// query is the article title plus depth-1 subtitles of off-path nodes.
std::optional<PseudoInstance> sample_rwi(const Wst& wst, const SamplerConfig& cfg, Rng& rng);

/// Query = article title, positive = abstract, negatives = text of the
/// contentful top-level sections (whole subtrees).
std::optional<PseudoInstance> sample_ati(const Wst& wst, const SamplerConfig& cfg, Rng& rng);

/// Full plain text of an article, or nullopt when unavailable.
using TextLookup = std::function<std::optional<std::string>(ArticleId)>;

/// One instance per contentful neighbor of `article`: query = the article's
/// text, positive = the neighbor's, negatives = random non-neighbors.
/// Missing texts are skipped and counted as "ltm_missing_text".
std::vector<PseudoInstance> sample_ltm(const Sag& sag, const TextLookup& text_of,
                                       ArticleId article, const SamplerConfig& cfg, Rng& rng,
                                       Warnings* warnings = nullptr);

}  // namespace forge
