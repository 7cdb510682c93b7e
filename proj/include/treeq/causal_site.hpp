#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treeq/errors.hpp"

namespace treeq {

using NodeId = std::uint32_t;
using IdPair = std::pair<NodeId, NodeId>;

/// One excitation of the multiplicative process. The root (no parent)
/// represents the undifferentiated initial state; every other node records
/// the creation step at which it appeared.
struct SiteNode {
    NodeId id = 0;
    std::optional<NodeId> parent;
    std::uint32_t step = 0;

    bool operator==(const SiteNode&) const = default;
};

/// Which pairs the generator wires into the precedence relation.
///
/// DescendantOnly (default): a precedes b when b descends from a along
/// parent links, i.e. signals follow the creation history. Stored edges are
/// the parent-child covering pairs; paths supply the closure.
///
/// AllEarlierCohorts: a precedes b whenever step(a) < step(b). Stored edges
/// join consecutive occupied generations pairwise.
enum class PrecedenceRule { DescendantOnly, AllEarlierCohorts };

/// Parameters of the multiplicative tree process. At each step every
/// frontier node independently halts with the step's halt probability,
/// otherwise it spawns `branching` children. A halted node never resumes.
struct GenerationConfig {
    std::uint32_t branching = 2;
    std::uint32_t steps = 0;
    double halt_prob = 0.0;
    /// Optional per-step override of halt_prob; entry s-1 applies at step s
    /// and the last entry repeats for later steps.
    std::vector<double> halt_schedule;
    PrecedenceRule rule = PrecedenceRule::DescendantOnly;

    double halt_at(std::uint32_t step) const;
};

inline constexpr std::size_t kNodeBudget = 1'000'000;
inline constexpr std::size_t kPrecEdgeBudget = 5'000'000;

/// Nominal physical duration of one creation step, on the order of the
/// Planck time (~1e-42 s). Recorded for orientation only; nothing in the
/// library evolves in physical time.
inline constexpr double kStepTimeQuantumSeconds = 1e-42;

/// A discrete causal site: nodes with parent links (the inclusion order),
/// a symmetric neighbouring relation chi, and directed precedence edges.
/// Immutable once built; queries are read-only and safe to run concurrently.
///
/// The constructor resolves ids and canonicalizes edge storage but does not
/// enforce the order axioms; verify_orders() reports violations, which makes
/// deliberately broken hand-built sites representable.
class CausalSite {
  public:
    CausalSite(std::vector<SiteNode> nodes, std::vector<IdPair> chi, std::vector<IdPair> prec,
               PrecedenceRule rule = PrecedenceRule::DescendantOnly);

    const std::vector<SiteNode>& nodes() const { return nodes_; }
    /// Chi pairs stored as (min, max), sorted, deduplicated.
    const std::vector<IdPair>& chi_edges() const { return chi_; }
    /// Directed precedence edges, sorted, deduplicated.
    const std::vector<IdPair>& prec_edges() const { return prec_; }
    PrecedenceRule rule() const { return rule_; }

    std::size_t size() const { return nodes_.size(); }
    bool contains(NodeId id) const { return index_.count(id) != 0; }
    const SiteNode& node(NodeId id) const { return nodes_[index_of(id)]; }

    /// Position of a node in nodes(); throws UnknownNode.
    std::size_t index_of(NodeId id) const;

    const std::vector<std::vector<std::size_t>>& chi_adjacency() const { return chi_adj_; }
    const std::vector<std::vector<std::size_t>>& prec_successors() const { return prec_out_; }
    const std::vector<std::optional<std::size_t>>& parent_indices() const { return parent_idx_; }

  private:
    std::vector<SiteNode> nodes_;
    std::vector<IdPair> chi_;
    std::vector<IdPair> prec_;
    PrecedenceRule rule_;
    std::unordered_map<NodeId, std::size_t> index_;
    std::vector<std::vector<std::size_t>> chi_adj_;
    std::vector<std::vector<std::size_t>> prec_out_;
    std::vector<std::optional<std::size_t>> parent_idx_;
};

/// Runs the multiplicative process for the given configuration. Deterministic
/// for fixed (config, seed). Throws NodeBudgetExceeded when the projected or
/// actual node count passes kNodeBudget (or the precedence edge budget under
/// AllEarlierCohorts).
CausalSite generate_site(const GenerationConfig& config, std::uint64_t seed);

/// Inclusion order: a is part of b, i.e. a == b or a descends from b via
/// parent links. Reflexive by convention; the strict variant is
/// inherits(a, b) && a != b.
bool inherits(const CausalSite& site, NodeId a, NodeId b);

/// Strict precedence: a != b and a directed path of precedence edges joins
/// a to b.
bool causally_precedes(const CausalSite& site, NodeId a, NodeId b);

/// Shortest chi-path length between a and b; 0 iff a == b; nullopt when the
/// nodes lie in different neighbouring classes.
std::optional<std::uint32_t> metric(const CausalSite& site, NodeId a, NodeId b);

struct VerificationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the order axioms: unique root, acyclic parent links with
/// increasing steps, every node included in the root, irreflexive and
/// acyclic precedence closure, precedence edges consistent with the site's
/// wiring rule, irreflexive chi. Violations are report content, not errors.
VerificationReport verify_orders(const CausalSite& site);

/// Connected components of the neighbouring relation (the disjoint classes
/// of chi-reachability), each sorted by id, components ordered by least id.
std::vector<std::vector<NodeId>> chi_components(const CausalSite& site);

}  // namespace treeq
