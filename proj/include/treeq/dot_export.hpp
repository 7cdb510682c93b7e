#pragma once

#include <string>

#include "treeq/causal_site.hpp"
#include "treeq/hierarchic.hpp"

namespace treeq {

/// Graphviz rendering of a causal site: solid arrows for parent links,
/// dashed arrows for precedence edges, dotted undirected edges for chi.
std::string to_dot(const CausalSite& site);

/// Graphviz rendering of a state's prefix tree with amplitude labels.
std::string to_dot(const HierarchicState& state);

}  // namespace treeq
