#include "weaver/tree.hpp"

#include <algorithm>
#include <set>

#include "weaver/text_util.hpp"

namespace weaver {

std::string make_node_id(std::size_t index) {
  std::string digits = std::to_string(index);
  while (digits.size() < 4) digits.insert(digits.begin(), '0');
  return "n" + digits;
}

InformationTree make_tree(const std::string& root_label,
                          const std::vector<std::string>& root_queries) {
  InformationTree tree;
  InfoNode root;
  root.node_id = make_node_id(0);
  root.label = root_label;
  root.depth = 0;
  root.queries = root_queries;
  tree.root = root.node_id;
  tree.nodes[root.node_id] = root;
  return tree;
}

std::string add_child(InformationTree& tree, const std::string& parent_id,
                      const std::string& label, const std::vector<std::string>& queries) {
  const InfoNode& parent = node_at(tree, parent_id);
  InfoNode child;
  child.node_id = make_node_id(tree.nodes.size());
  child.label = label;
  child.parent = parent_id;
  child.depth = parent.depth + 1;
  child.queries = queries;
  tree.nodes[child.node_id] = child;
  return child.node_id;
}

void attach_document(InformationTree& tree, const std::string& node_id,
                     const RetrievedDocument& doc) {
  auto it = tree.nodes.find(node_id);
  if (it == tree.nodes.end()) throw Error(ErrorCode::internal, "unknown node " + node_id);
  InfoNode& node = it->second;
  std::string url_key = text::normalize_url(doc.url);
  for (const std::string& existing_id : node.document_ids) {
    auto existing = tree.documents.find(existing_id);
    if (existing != tree.documents.end() && text::normalize_url(existing->second.url) == url_key)
      return;
  }
  tree.documents.emplace(doc.doc_id, doc);  // first retrieval of a url wins
  node.document_ids.push_back(doc.doc_id);
}

const InfoNode& node_at(const InformationTree& tree, const std::string& node_id) {
  auto it = tree.nodes.find(node_id);
  if (it == tree.nodes.end()) throw Error(ErrorCode::internal, "unknown node " + node_id);
  return it->second;
}

std::vector<std::string> leaf_ids(const InformationTree& tree) {
  std::set<std::string> parents;
  for (const auto& [id, node] : tree.nodes) {
    if (node.parent) parents.insert(*node.parent);
  }
  std::vector<std::string> leaves;
  for (const auto& [id, node] : tree.nodes) {
    if (!parents.count(id)) leaves.push_back(id);
  }
  return leaves;  // map iteration is already ascending
}

std::vector<std::string> ancestor_labels(const InformationTree& tree,
                                         const std::string& node_id) {
  std::vector<std::string> labels;
  std::set<std::string> seen;
  const InfoNode* cur = &node_at(tree, node_id);
  while (true) {
    labels.push_back(cur->label);
    if (!cur->parent || seen.count(cur->node_id)) break;
    seen.insert(cur->node_id);
    auto it = tree.nodes.find(*cur->parent);
    if (it == tree.nodes.end()) break;
    cur = &it->second;
  }
  return labels;
}

std::vector<const RetrievedDocument*> node_documents(const InformationTree& tree,
                                                     const InfoNode& node) {
  std::vector<const RetrievedDocument*> docs;
  for (const std::string& id : node.document_ids) {
    auto it = tree.documents.find(id);
    if (it != tree.documents.end()) docs.push_back(&it->second);
  }
  return docs;
}

int max_node_depth(const InformationTree& tree) {
  int depth = 0;
  for (const auto& [id, node] : tree.nodes) depth = std::max(depth, node.depth);
  return depth;
}

std::vector<std::string> validate_tree(const InformationTree& tree,
                                       std::optional<int> max_depth) {
  std::vector<std::string> violations;
  auto complain = [&](const std::string& msg) { violations.push_back(msg); };

  if (tree.revision < 0) complain("tree: revision is negative");

  auto root_it = tree.nodes.find(tree.root);
  if (root_it == tree.nodes.end()) {
    complain("tree: root '" + tree.root + "' not present in nodes");
    return violations;
  }
  if (root_it->second.parent) complain("node " + tree.root + ": root must have no parent");
  if (root_it->second.depth != 0) complain("node " + tree.root + ": root depth must be 0");

  for (const auto& [id, node] : tree.nodes) {
    if (node.node_id != id) complain("node " + id + ": key does not match node_id");
    if (!node.parent) {
      if (id != tree.root) complain("node " + id + ": second root (only one root allowed)");
      continue;
    }
    auto parent_it = tree.nodes.find(*node.parent);
    if (parent_it == tree.nodes.end()) {
      complain("node " + id + ": parent '" + *node.parent + "' does not exist");
      continue;
    }
    if (node.depth != parent_it->second.depth + 1)
      complain("node " + id + ": depth " + std::to_string(node.depth) +
               " != parent depth + 1 (" + std::to_string(parent_it->second.depth + 1) + ")");
  }

  // Reachability doubles as the cycle check: a parent chain that loops never
  // reaches the root.
  std::set<std::string> reachable;
  std::vector<std::string> stack{tree.root};
  reachable.insert(tree.root);
  std::multimap<std::string, std::string> children;
  for (const auto& [id, node] : tree.nodes) {
    if (node.parent) children.emplace(*node.parent, id);
  }
  while (!stack.empty()) {
    std::string cur = stack.back();
    stack.pop_back();
    auto range = children.equal_range(cur);
    for (auto it = range.first; it != range.second; ++it) {
      if (reachable.insert(it->second).second) stack.push_back(it->second);
    }
  }
  for (const auto& [id, node] : tree.nodes) {
    if (!reachable.count(id))
      complain("node " + id + ": not reachable from root (orphan or parent cycle)");
  }

  for (const auto& [id, node] : tree.nodes) {
    for (const std::string& doc_id : node.document_ids) {
      if (!tree.documents.count(doc_id))
        complain("node " + id + ": references unknown document " + doc_id);
    }
  }

  if (max_depth) {
    for (const auto& [id, node] : tree.nodes) {
      if (node.depth > *max_depth)
        complain("node " + id + ": depth " + std::to_string(node.depth) +
                 " exceeds max_depth " + std::to_string(*max_depth));
    }
  }

  return violations;
}

}  // namespace weaver
