#include "treeq/dot_export.hpp"

#include <sstream>

namespace treeq {

std::string to_dot(const CausalSite& site) {
    std::ostringstream out;
    out << "digraph site {\n";
    out << "  rankdir=TB;\n";
    for (const auto& n : site.nodes()) {
        out << "  n" << n.id << " [label=\"" << n.id << " (step " << n.step << ")\"];\n";
    }
    for (const auto& n : site.nodes()) {
        if (n.parent) {
            out << "  n" << *n.parent << " -> n" << n.id << " [style=solid];\n";
        }
    }
    for (const auto& [a, b] : site.prec_edges()) {
        out << "  n" << a << " -> n" << b << " [style=dashed, constraint=false];\n";
    }
    for (const auto& [a, b] : site.chi_edges()) {
        out << "  n" << a << " -> n" << b << " [style=dotted, dir=none, constraint=false];\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

std::string prefix_name(const Prefix& prefix) {
    std::string name = "t";
    for (std::uint8_t d : prefix) name += "_" + std::to_string(d);
    return name;
}

std::string prefix_label(const Prefix& prefix) {
    std::string text;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (i) text += " ";
        text += std::to_string(prefix[i]);
    }
    return text;
}

}  // namespace

std::string to_dot(const HierarchicState& state) {
    std::ostringstream out;
    out << "digraph hierarchic_state {\n";
    out << "  rankdir=TB;\n";
    out << "  root [label=\"p=" << state.prime() << " K=" << state.depth() << "\", shape=box];\n";
    for (const auto& [prefix, amp] : state.terms()) {
        out << "  " << prefix_name(prefix) << " [label=\"|" << prefix_label(prefix) << ">  "
            << amp.real();
        if (amp.imag() != 0.0) {
            out << (amp.imag() < 0.0 ? " - " : " + ") << std::abs(amp.imag()) << "i";
        }
        out << "\"];\n";
    }
    for (const auto& [prefix, amp] : state.terms()) {
        (void)amp;
        if (prefix.size() == 1) {
            out << "  root -> " << prefix_name(prefix) << ";\n";
            continue;
        }
        Prefix parent(prefix.begin(), prefix.end() - 1);
        // Attach to the nearest present ancestor, falling back to the root.
        while (!parent.empty() && state.terms().find(parent) == state.terms().end()) {
            parent.pop_back();
        }
        if (parent.empty()) {
            out << "  root -> " << prefix_name(prefix) << ";\n";
        } else {
            out << "  " << prefix_name(parent) << " -> " << prefix_name(prefix) << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace treeq
