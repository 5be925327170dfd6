#include "forge/wst.hpp"

#include <algorithm>

#include "forge/text_util.hpp"

namespace forge {

const WstNode& Wst::node(NodeId id) const {
  if (id >= nodes_.size())
    throw std::out_of_range("node " + std::to_string(id) + " not in tree of article " +
                            std::to_string(article_id_));
  return nodes_[id];
}

Wst build_wst(std::uint64_t article_id, std::string_view title, std::string_view abstract,
              std::span<const Section> sections) {
  std::vector<WstNode> nodes;
  nodes.reserve(sections.size() + 1);
  nodes.push_back(WstNode{0, std::string(title), std::string(abstract), 1, 0, {}});

  struct Open {
    int level;
    NodeId node;
  };
  std::vector<Open> stack{{0, 0}};  // root never pops, whatever the section level
  for (const auto& s : sections) {
    while (stack.size() > 1 && stack.back().level >= s.level) stack.pop_back();
    const NodeId parent = stack.back().node;
    const NodeId id = nodes.size();
    nodes.push_back(WstNode{id, s.heading, s.body, nodes[parent].depth + 1, parent, {}});
    nodes[parent].children.push_back(id);
    stack.push_back({s.level, id});
  }
  return Wst(article_id, std::move(nodes));
}

std::vector<NodeId> path_nodes(const Wst& wst, NodeId id) {
  std::vector<NodeId> path;
  const WstNode* n = &wst.node(id);
  path.push_back(n->id);
  while (n->id != 0) {
    n = &wst.node(n->parent);
    path.push_back(n->id);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::string> path_titles(const Wst& wst, NodeId id) {
  std::vector<std::string> titles;
  for (NodeId n : path_nodes(wst, id)) titles.push_back(wst.node(n).title);
  return titles;
}

std::string subtree_text(const Wst& wst, NodeId id) {
  std::string out;
  std::vector<NodeId> todo{id};
  while (!todo.empty()) {
    const WstNode& n = wst.node(todo.back());
    todo.pop_back();
    if (!n.content.empty()) {
      if (!out.empty()) out += '\n';
      out += n.content;
    }
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) todo.push_back(*it);
  }
  return out;
}

std::string debug_dump(const Wst& wst) {
  std::string out;
  for (const auto& n : wst.nodes()) {
    out.append(static_cast<std::size_t>(2 * (n.depth - 1)), ' ');
    out += std::to_string(n.depth) + '\t' + n.title + '\t' +
           std::to_string(word_count(n.content)) + '\n';
  }
  return out;
}

}  // namespace forge
