#include "treeq/causal_site.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "treeq/rng.hpp"

namespace treeq {

double GenerationConfig::halt_at(std::uint32_t step) const {
    if (halt_schedule.empty()) return halt_prob;
    const std::size_t i = std::min<std::size_t>(step == 0 ? 0 : step - 1, halt_schedule.size() - 1);
    return halt_schedule[i];
}

CausalSite::CausalSite(std::vector<SiteNode> nodes, std::vector<IdPair> chi,
                       std::vector<IdPair> prec, PrecedenceRule rule)
    : nodes_(std::move(nodes)), chi_(std::move(chi)), prec_(std::move(prec)), rule_(rule) {
    if (nodes_.empty()) throw InvalidArgument("a causal site needs at least one node");

    std::sort(nodes_.begin(), nodes_.end(),
              [](const SiteNode& a, const SiteNode& b) { return a.id < b.id; });
    index_.reserve(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!index_.emplace(nodes_[i].id, i).second) {
            throw InvalidArgument("duplicate node id " + std::to_string(nodes_[i].id));
        }
    }

    parent_idx_.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].parent) parent_idx_[i] = index_of(*nodes_[i].parent);
    }

    for (auto& e : chi_) {
        index_of(e.first);
        index_of(e.second);
        if (e.second < e.first) std::swap(e.first, e.second);
    }
    std::sort(chi_.begin(), chi_.end());
    chi_.erase(std::unique(chi_.begin(), chi_.end()), chi_.end());

    for (const auto& e : prec_) {
        index_of(e.first);
        index_of(e.second);
    }
    std::sort(prec_.begin(), prec_.end());
    prec_.erase(std::unique(prec_.begin(), prec_.end()), prec_.end());

    chi_adj_.resize(nodes_.size());
    for (const auto& [a, b] : chi_) {
        const std::size_t ia = index_of(a), ib = index_of(b);
        chi_adj_[ia].push_back(ib);
        if (ib != ia) chi_adj_[ib].push_back(ia);
    }
    prec_out_.resize(nodes_.size());
    for (const auto& [a, b] : prec_) {
        prec_out_[index_of(a)].push_back(index_of(b));
    }
}

std::size_t CausalSite::index_of(NodeId id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) throw UnknownNode("unknown node id " + std::to_string(id));
    return it->second;
}

namespace {

// Deterministic node count of a halt-free run; nullopt on overflow.
std::optional<std::size_t> project_nodes(std::uint32_t branching, std::uint32_t steps) {
    std::size_t total = 1, cohort = 1;
    for (std::uint32_t s = 1; s <= steps; ++s) {
        if (cohort > kNodeBudget / branching + 1) return std::nullopt;
        cohort *= branching;
        total += cohort;
        if (total > 2 * kNodeBudget) return std::nullopt;
    }
    return total;
}

}  // namespace

CausalSite generate_site(const GenerationConfig& config, std::uint64_t seed) {
    if (config.branching < 1) throw InvalidArgument("branching must be >= 1");
    auto check_prob = [](double q) {
        if (q < 0.0 || q > 1.0) throw InvalidArgument("halt probability must lie in [0, 1]");
    };
    check_prob(config.halt_prob);
    for (double q : config.halt_schedule) check_prob(q);

    bool deterministic = true;
    for (std::uint32_t s = 1; s <= config.steps; ++s) {
        if (config.halt_at(s) > 0.0) deterministic = false;
    }
    if (deterministic) {
        const auto projected = project_nodes(config.branching, config.steps);
        if (!projected || *projected > kNodeBudget) {
            throw NodeBudgetExceeded("projected node count exceeds " +
                                     std::to_string(kNodeBudget));
        }
    }

    SeededRng rng(seed);
    std::vector<SiteNode> nodes{{0, std::nullopt, 0}};
    std::vector<IdPair> chi;
    std::vector<IdPair> prec;
    std::vector<NodeId> frontier{0};

    for (std::uint32_t s = 1; s <= config.steps && !frontier.empty(); ++s) {
        const double halt = config.halt_at(s);
        std::vector<NodeId> next;
        for (NodeId parent : frontier) {
            if (halt > 0.0 && rng.uniform01() < halt) continue;
            std::vector<NodeId> batch;
            batch.reserve(config.branching);
            for (std::uint32_t c = 0; c < config.branching; ++c) {
                if (nodes.size() >= kNodeBudget) {
                    throw NodeBudgetExceeded("node count exceeds " + std::to_string(kNodeBudget));
                }
                const NodeId child = static_cast<NodeId>(nodes.size());
                nodes.push_back({child, parent, s});
                chi.emplace_back(parent, child);
                if (config.rule == PrecedenceRule::DescendantOnly) {
                    prec.emplace_back(parent, child);
                }
                for (NodeId sibling : batch) chi.emplace_back(sibling, child);
                batch.push_back(child);
                next.push_back(child);
            }
        }
        frontier = std::move(next);
    }

    if (config.rule == PrecedenceRule::AllEarlierCohorts) {
        std::map<std::uint32_t, std::vector<NodeId>> cohorts;
        for (const auto& n : nodes) cohorts[n.step].push_back(n.id);
        const std::vector<NodeId>* previous = nullptr;
        for (const auto& [step, cohort] : cohorts) {
            if (previous) {
                if (prec.size() + previous->size() * cohort.size() > kPrecEdgeBudget) {
                    throw NodeBudgetExceeded("precedence edge count exceeds " +
                                             std::to_string(kPrecEdgeBudget));
                }
                for (NodeId a : *previous) {
                    for (NodeId b : cohort) prec.emplace_back(a, b);
                }
            }
            previous = &cohort;
        }
    }

    return CausalSite(std::move(nodes), std::move(chi), std::move(prec), config.rule);
}

bool inherits(const CausalSite& site, NodeId a, NodeId b) {
    std::size_t current = site.index_of(a);
    const std::size_t target = site.index_of(b);
    // Bounded walk: a broken parent chain with a cycle terminates after
    // size() hops instead of looping.
    for (std::size_t hops = 0; hops <= site.size(); ++hops) {
        if (current == target) return true;
        const auto& up = site.parent_indices()[current];
        if (!up) return false;
        current = *up;
    }
    return false;
}

bool causally_precedes(const CausalSite& site, NodeId a, NodeId b) {
    const std::size_t source = site.index_of(a);
    const std::size_t target = site.index_of(b);
    if (source == target) return false;
    std::vector<bool> seen(site.size(), false);
    std::deque<std::size_t> queue{source};
    seen[source] = true;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v : site.prec_successors()[u]) {
            if (v == target) return true;
            if (!seen[v]) {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    return false;
}

std::optional<std::uint32_t> metric(const CausalSite& site, NodeId a, NodeId b) {
    const std::size_t source = site.index_of(a);
    const std::size_t target = site.index_of(b);
    if (source == target) return 0;
    std::vector<std::uint32_t> dist(site.size(), UINT32_MAX);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v : site.chi_adjacency()[u]) {
            if (dist[v] != UINT32_MAX) continue;
            dist[v] = dist[u] + 1;
            if (v == target) return dist[v];
            queue.push_back(v);
        }
    }
    return std::nullopt;
}

VerificationReport verify_orders(const CausalSite& site) {
    VerificationReport report;
    auto flag = [&report](std::string text) { report.violations.push_back(std::move(text)); };
    const auto& nodes = site.nodes();

    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes[i].parent) roots.push_back(i);
    }
    if (roots.size() != 1) {
        flag("expected exactly one parentless root, found " + std::to_string(roots.size()));
    }

    // Parent links: step must grow strictly, and chains must be acyclic.
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& up = site.parent_indices()[i];
        if (up && nodes[i].step <= nodes[*up].step) {
            flag("node " + std::to_string(nodes[i].id) + " has step <= its parent's step");
        }
    }
    {
        // 0 unvisited, 1 on current walk, 2 settled.
        std::vector<std::uint8_t> color(nodes.size(), 0);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (color[i] != 0) continue;
            std::vector<std::size_t> trail;
            std::size_t cur = i;
            while (true) {
                if (color[cur] == 1) {
                    flag("inheritance cycle through node " + std::to_string(nodes[cur].id));
                    break;
                }
                if (color[cur] == 2) break;
                color[cur] = 1;
                trail.push_back(cur);
                const auto& up = site.parent_indices()[cur];
                if (!up) break;
                cur = *up;
            }
            for (std::size_t j : trail) color[j] = 2;
        }
    }
    if (roots.size() == 1) {
        const NodeId root = nodes[roots.front()].id;
        for (const auto& n : nodes) {
            if (!inherits(site, n.id, root)) {
                flag("node " + std::to_string(n.id) + " does not inherit from the root");
            }
        }
    }

    for (const auto& [a, b] : site.prec_edges()) {
        if (a == b) {
            flag("precedence self-loop at node " + std::to_string(a));
            continue;
        }
        const auto& na = site.node(a);
        const auto& nb = site.node(b);
        if (na.step >= nb.step) {
            flag("precedence edge (" + std::to_string(a) + ", " + std::to_string(b) +
                 ") does not advance the step order");
        } else if (site.rule() == PrecedenceRule::DescendantOnly && !inherits(site, b, a)) {
            flag("precedence edge (" + std::to_string(a) + ", " + std::to_string(b) +
                 ") joins nodes outside one creation line");
        }
    }
    {
        // Kahn's algorithm; leftover nodes indicate a cycle in the closure.
        std::vector<std::size_t> indegree(nodes.size(), 0);
        for (std::size_t u = 0; u < nodes.size(); ++u) {
            for (std::size_t v : site.prec_successors()[u]) ++indegree[v];
        }
        std::deque<std::size_t> queue;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (indegree[i] == 0) queue.push_back(i);
        }
        std::size_t settled = 0;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            ++settled;
            for (std::size_t v : site.prec_successors()[u]) {
                if (--indegree[v] == 0) queue.push_back(v);
            }
        }
        if (settled != nodes.size()) {
            flag("precedence closure contains a cycle");
        }
    }

    for (const auto& [a, b] : site.chi_edges()) {
        if (a == b) flag("chi self-loop at node " + std::to_string(a));
    }

    return report;
}

std::vector<std::vector<NodeId>> chi_components(const CausalSite& site) {
    std::vector<bool> seen(site.size(), false);
    std::vector<std::vector<NodeId>> components;
    for (std::size_t start = 0; start < site.size(); ++start) {
        if (seen[start]) continue;
        std::vector<NodeId> component;
        std::deque<std::size_t> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            component.push_back(site.nodes()[u].id);
            for (std::size_t v : site.chi_adjacency()[u]) {
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

}  // namespace treeq
