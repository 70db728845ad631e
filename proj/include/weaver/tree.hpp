#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weaver/types.hpp"

namespace weaver {

std::string make_node_id(std::size_t index);

// Creates a single-root tree at revision 0.
InformationTree make_tree(const std::string& root_label,
                          const std::vector<std::string>& root_queries);

// Adds a child under parent_id and returns its id. Ids are assigned in
// insertion order, so callers that insert in a fixed order get a
// deterministic tree regardless of how work was scheduled.
std::string add_child(InformationTree& tree, const std::string& parent_id,
                      const std::string& label, const std::vector<std::string>& queries);

// Stores the document and references it from the node, deduplicating by
// normalized url within the node.
void attach_document(InformationTree& tree, const std::string& node_id,
                     const RetrievedDocument& doc);

const InfoNode& node_at(const InformationTree& tree, const std::string& node_id);

// Node ids with no children, ascending.
std::vector<std::string> leaf_ids(const InformationTree& tree);

// Labels of the node itself and all its ancestors up to the root.
std::vector<std::string> ancestor_labels(const InformationTree& tree, const std::string& node_id);

std::vector<const RetrievedDocument*> node_documents(const InformationTree& tree,
                                                     const InfoNode& node);

int max_node_depth(const InformationTree& tree);

// Returns one description per violated invariant; empty means the tree is
// well-formed. When max_depth is given, the depth bound is checked too.
std::vector<std::string> validate_tree(const InformationTree& tree,
                                       std::optional<int> max_depth = std::nullopt);

}  // namespace weaver
