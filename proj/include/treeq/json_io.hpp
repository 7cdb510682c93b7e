#pragma once

#include <json.hpp>

#include "treeq/causal_site.hpp"
#include "treeq/hierarchic.hpp"
#include "treeq/padic.hpp"

namespace treeq {

/// Insertion-ordered JSON keeps payloads byte-stable and in schema order.
using Json = nlohmann::ordered_json;

Json complex_to_json(const Amplitude& z);
Amplitude complex_from_json(const Json& j);

/// {"p": 2, "digits": [0, 1, 1, 0]}
Json to_json(const PAdicLabel& label);
PAdicLabel padic_label_from_json(const Json& j);

/// {"num": 1, "den": 4}; denominators beyond 64 bits serialize as a
/// decimal string.
Json to_json(const PNorm& n);

/// {"nodes": [{"id": 0, "parent": null, "step": 0}, ...],
///  "chi": [[0, 1], ...], "prec": [[0, 1], ...]}
/// plus a "rule" key when the precedence rule is not the default.
Json to_json(const CausalSite& site);
CausalSite causal_site_from_json(const Json& j);

/// {"p": 2, "K": 3, "mode": "raw",
///  "terms": [{"prefix": [1], "amp": [1.0, 0.0]}, ...]}
Json to_json(const HierarchicState& state);
HierarchicState hierarchic_state_from_json(const Json& j);

/// {"p": 2, "K": 3, "levels": [{"level": 0,
///  "entries": [{"row": 0, "col": 0, "val": [1.0, 0.0]}]}]}
Json to_json(const OperatorTree& tree);
OperatorTree operator_tree_from_json(const Json& j);

}  // namespace treeq
