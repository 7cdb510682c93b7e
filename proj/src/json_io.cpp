#include "treeq/json_io.hpp"

namespace treeq {

namespace {

void require(bool condition, const std::string& what) {
    if (!condition) throw InvalidArgument("malformed document: " + what);
}

}  // namespace

Json complex_to_json(const Amplitude& z) { return Json::array({z.real(), z.imag()}); }

Amplitude complex_from_json(const Json& j) {
    require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
            "complex values are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const PAdicLabel& label) {
    Json j;
    j["p"] = label.prime();
    j["digits"] = label.digits();
    return j;
}

PAdicLabel padic_label_from_json(const Json& j) {
    require(j.is_object() && j.contains("p") && j.contains("digits"),
            "label needs \"p\" and \"digits\"");
    std::vector<std::uint8_t> digits;
    for (const auto& d : j.at("digits")) {
        require(d.is_number_unsigned(), "digits must be nonnegative integers");
        const auto v = d.get<std::uint64_t>();
        require(v < 256, "digit out of byte range");
        digits.push_back(static_cast<std::uint8_t>(v));
    }
    return PAdicLabel(j.at("p").get<std::uint32_t>(), std::move(digits));
}

Json to_json(const PNorm& n) {
    Json j;
    j["num"] = n.numerator();
    if (const auto den = n.denominator_u64()) {
        j["den"] = *den;
    } else {
        j["den"] = n.denominator_string();
    }
    return j;
}

Json to_json(const CausalSite& site) {
    Json j;
    j["nodes"] = Json::array();
    for (const auto& n : site.nodes()) {
        Json node;
        node["id"] = n.id;
        node["parent"] = n.parent ? Json(*n.parent) : Json(nullptr);
        node["step"] = n.step;
        j["nodes"].push_back(std::move(node));
    }
    j["chi"] = Json::array();
    for (const auto& [a, b] : site.chi_edges()) j["chi"].push_back(Json::array({a, b}));
    j["prec"] = Json::array();
    for (const auto& [a, b] : site.prec_edges()) j["prec"].push_back(Json::array({a, b}));
    if (site.rule() != PrecedenceRule::DescendantOnly) {
        j["rule"] = "all-earlier-cohorts";
    }
    return j;
}

CausalSite causal_site_from_json(const Json& j) {
    require(j.is_object() && j.contains("nodes"), "site needs a \"nodes\" array");
    std::vector<SiteNode> nodes;
    for (const auto& n : j.at("nodes")) {
        require(n.contains("id") && n.contains("step"), "node needs \"id\" and \"step\"");
        SiteNode node;
        node.id = n.at("id").get<NodeId>();
        node.step = n.at("step").get<std::uint32_t>();
        if (n.contains("parent") && !n.at("parent").is_null()) {
            node.parent = n.at("parent").get<NodeId>();
        }
        nodes.push_back(node);
    }
    auto read_pairs = [&](const char* key) {
        std::vector<IdPair> pairs;
        if (!j.contains(key)) return pairs;
        for (const auto& e : j.at(key)) {
            require(e.is_array() && e.size() == 2, std::string(key) + " entries are pairs");
            pairs.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
        }
        return pairs;
    };
    PrecedenceRule rule = PrecedenceRule::DescendantOnly;
    if (j.contains("rule")) {
        const auto text = j.at("rule").get<std::string>();
        if (text == "all-earlier-cohorts") {
            rule = PrecedenceRule::AllEarlierCohorts;
        } else {
            require(text == "descendant", "unknown precedence rule \"" + text + "\"");
        }
    }
    return CausalSite(std::move(nodes), read_pairs("chi"), read_pairs("prec"), rule);
}

Json to_json(const HierarchicState& state) {
    Json j;
    j["p"] = state.prime();
    j["K"] = state.depth();
    j["mode"] = state.mode() == HierarchicState::Mode::Raw ? "raw" : "unit";
    j["terms"] = Json::array();
    for (const auto& [prefix, amp] : state.terms()) {
        Json term;
        term["prefix"] = prefix;
        term["amp"] = complex_to_json(amp);
        j["terms"].push_back(std::move(term));
    }
    return j;
}

HierarchicState hierarchic_state_from_json(const Json& j) {
    require(j.is_object() && j.contains("p") && j.contains("K") && j.contains("terms"),
            "state needs \"p\", \"K\" and \"terms\"");
    auto mode = HierarchicState::Mode::Raw;
    if (j.contains("mode")) {
        const auto text = j.at("mode").get<std::string>();
        require(text == "raw" || text == "unit", "mode must be \"raw\" or \"unit\"");
        if (text == "unit") mode = HierarchicState::Mode::Unit;
    }
    std::map<Prefix, Amplitude> terms;
    for (const auto& term : j.at("terms")) {
        require(term.contains("prefix") && term.contains("amp"),
                "terms need \"prefix\" and \"amp\"");
        Prefix prefix;
        for (const auto& d : term.at("prefix")) {
            prefix.push_back(static_cast<std::uint8_t>(d.get<std::uint64_t>()));
        }
        require(terms.emplace(std::move(prefix), complex_from_json(term.at("amp"))).second,
                "duplicate prefix in terms");
    }
    return HierarchicState(j.at("p").get<std::uint32_t>(), j.at("K").get<std::uint32_t>(), mode,
                           std::move(terms));
}

Json to_json(const OperatorTree& tree) {
    Json j;
    j["p"] = tree.prime();
    j["K"] = tree.depth();
    j["levels"] = Json::array();
    for (const auto& [level, entries] : tree.levels()) {
        Json lj;
        lj["level"] = level;
        lj["entries"] = Json::array();
        for (const auto& e : entries) {
            Json ej;
            ej["row"] = e.row;
            ej["col"] = e.col;
            ej["val"] = complex_to_json(e.value);
            lj["entries"].push_back(std::move(ej));
        }
        j["levels"].push_back(std::move(lj));
    }
    return j;
}

OperatorTree operator_tree_from_json(const Json& j) {
    require(j.is_object() && j.contains("p") && j.contains("K") && j.contains("levels"),
            "operator tree needs \"p\", \"K\" and \"levels\"");
    std::map<std::uint32_t, std::vector<OperatorTree::Entry>> levels;
    for (const auto& lj : j.at("levels")) {
        require(lj.contains("level") && lj.contains("entries"),
                "levels need \"level\" and \"entries\"");
        std::vector<OperatorTree::Entry> entries;
        for (const auto& ej : lj.at("entries")) {
            require(ej.contains("row") && ej.contains("col") && ej.contains("val"),
                    "entries need \"row\", \"col\" and \"val\"");
            entries.push_back({ej.at("row").get<std::uint64_t>(), ej.at("col").get<std::uint64_t>(),
                               complex_from_json(ej.at("val"))});
        }
        require(levels.emplace(lj.at("level").get<std::uint32_t>(), std::move(entries)).second,
                "duplicate operator level");
    }
    return OperatorTree(j.at("p").get<std::uint32_t>(), j.at("K").get<std::uint32_t>(),
                        std::move(levels));
}

}  // namespace treeq
