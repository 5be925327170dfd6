#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "forge/diagnostics.hpp"
#include "forge/rng.hpp"

namespace forge {

using ArticleId = std::uint64_t;

struct SagInput {
  ArticleId id = 0;
  std::string title;                  ///< normalized
  std::vector<std::string> see_also;  ///< normalized
};

/// Which vertices count as adjacent for positive selection.
enum class Adjacency { Out, Symmetric };

/// Directed See Also graph: edge (a, b) when b is listed under a's
/// "See also" heading. No self-loops, no parallel edges.
class Sag {
 public:
  /// Two passes: register every vertex, then resolve targets through the
  /// title index. Counts "unresolved_see_also", "see_also_self_link",
  /// "duplicate_title" (first one keeps the title) and
  /// "duplicate_article_id".
  static Sag build(std::span<const SagInput> articles, Warnings* warnings = nullptr);

  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_; }
  bool contains(ArticleId id) const { return index_.count(id) != 0; }
  /// Ascending.
  std::span<const ArticleId> vertices() const { return ids_; }

  /// Ascending ids; throws std::out_of_range for an unknown vertex.
  std::span<const ArticleId> out_neighbors(ArticleId id) const;
  std::span<const ArticleId> in_neighbors(ArticleId id) const;
  std::vector<ArticleId> neighbors(ArticleId id, Adjacency mode) const;

  std::optional<ArticleId> find_title(const std::string& normalized_title) const;

  /// Up to k distinct vertices drawn uniformly without replacement from
  /// V \ ({id} ∪ neighbors(id, mode)), in draw order. Fewer than k only if
  /// the pool is smaller.
  std::vector<ArticleId> sample_non_neighbors(ArticleId id, std::size_t k, Rng& rng,
                                              Adjacency mode = Adjacency::Out) const;

  /// "source\ttarget" per edge, sorted.
  std::string edge_list() const;

 private:
  std::size_t dense(ArticleId id) const;

  std::vector<ArticleId> ids_;
  std::unordered_map<ArticleId, std::size_t> index_;
  std::unordered_map<std::string, ArticleId> titles_;
  std::vector<std::vector<ArticleId>> out_;
  std::vector<std::vector<ArticleId>> in_;
  std::size_t edges_ = 0;
};

}  // namespace forge
