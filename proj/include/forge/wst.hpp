#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "forge/wikitext.hpp"

namespace forge {

using NodeId = std::size_t;

struct WstNode {
  NodeId id = 0;
  std::string title;    ///< article title at the root, section heading elsewhere
  std::string content;  ///< text directly under the heading, not descendants
  int depth = 1;        ///< root is 1, so a node's path holds `depth` titles
  NodeId parent = 0;    ///< root is its own parent
  std::vector<NodeId> children;
};

/// Heading tree of one article. Node ids are preorder indices, which for
/// this construction coincide with section order (root = 0).
class Wst {
 public:
  Wst() = default;
  Wst(std::uint64_t article_id, std::vector<WstNode> nodes)
      : article_id_(article_id), nodes_(std::move(nodes)) {}

  std::uint64_t article_id() const { return article_id_; }
  std::size_t size() const { return nodes_.size(); }
  const WstNode& root() const { return nodes_.front(); }
  const WstNode& node(NodeId id) const;
  std::span<const WstNode> nodes() const { return nodes_; }

  bool is_leaf(NodeId id) const { return node(id).children.empty(); }

 private:
  std::uint64_t article_id_ = 0;
  std::vector<WstNode> nodes_;
};

/// Builds the tree with a level stack: each section attaches under the
/// nearest preceding section of strictly lower level, or the root.
Wst build_wst(std::uint64_t article_id, std::string_view title, std::string_view abstract,
              std::span<const Section> sections);

/// Titles from the root down to `id`, root first. Throws std::out_of_range
/// on an unknown id.
std::vector<std::string> path_titles(const Wst& wst, NodeId id);

/// Node ids from the root down to `id`.
std::vector<NodeId> path_nodes(const Wst& wst, NodeId id);

/// Content of `id` and all descendants in preorder, newline separated.
/// Empty contents are skipped so no blank lines appear.
std::string subtree_text(const Wst& wst, NodeId id);

/// One line per node: indentation by depth, then "depth<TAB>title<TAB>words".
std::string debug_dump(const Wst& wst);

}  // namespace forge
