// Acceptance suite: one criterion per run block, each printing a single
// [PASS]/[FAIL] line with its runtime. Exit code is the number of failures.

#include <cfloat>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "treeq/causal_site.hpp"
#include "treeq/cli_app.hpp"
#include "treeq/hierarchic.hpp"
#include "treeq/json_io.hpp"
#include "treeq/quantum.hpp"
#include "treeq/rng.hpp"
#include "treeq/simplicial.hpp"

using namespace treeq;

namespace {

struct Failure {
    std::string reason;
};

void require(bool condition, const std::string& reason) {
    if (!condition) throw Failure{reason};
}

int failures = 0;

void criterion(int id, const std::string& name, double time_limit_seconds,
               const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
        body();
    } catch (const Failure& f) {
        reason = f.reason;
    } catch (const std::exception& e) {
        reason = std::string("unexpected exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && time_limit_seconds > 0.0 && elapsed > time_limit_seconds) {
        reason = "runtime " + std::to_string(elapsed) + "s exceeds " +
                 std::to_string(time_limit_seconds) + "s";
    }
    if (reason.empty()) {
        std::printf("[PASS] criterion %2d: %s (%.3fs)\n", id, name.c_str(), elapsed);
    } else {
        std::printf("[FAIL] criterion %2d: %s (%.3fs) -- %s\n", id, name.c_str(), elapsed,
                    reason.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

std::string run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    require(code == 0, "CLI exited with code " + std::to_string(code) + ": " + err.str());
    return out.str();
}

// Independent all-pairs oracle over the chi graph.
std::vector<std::vector<std::uint32_t>> all_pairs_oracle(const CausalSite& site) {
    constexpr std::uint32_t inf = UINT32_MAX / 4;
    const std::size_t n = site.size();
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const auto& [a, b] : site.chi_edges()) {
        const std::size_t ia = site.index_of(a), ib = site.index_of(b);
        d[ia][ib] = d[ib][ia] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    return d;
}

void check_metric_axioms(const CausalSite& site) {
    constexpr std::uint32_t inf = UINT32_MAX / 4;
    const auto oracle = all_pairs_oracle(site);
    const std::size_t n = site.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto d = metric(site, site.nodes()[i].id, site.nodes()[j].id);
            const bool reachable = oracle[i][j] < inf;
            require(d.has_value() == reachable, "metric reachability disagrees with the oracle");
            if (d) {
                require(*d == oracle[i][j], "metric value disagrees with the oracle");
                require((*d == 0) == (i == j), "metric separates distinct nodes");
            }
            require(metric(site, site.nodes()[j].id, site.nodes()[i].id) == d,
                    "metric is not symmetric");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (oracle[i][j] >= inf) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (oracle[j][k] >= inf) continue;
                require(oracle[i][k] <= oracle[i][j] + oracle[j][k],
                        "triangle inequality violated");
            }
        }
    }
}

void check_inclusion_axioms(const CausalSite& site, SeededRng& rng) {
    const std::size_t n = site.size();
    for (const auto& node : site.nodes()) {
        require(inherits(site, node.id, node.id), "inclusion is not reflexive");
    }
    const std::size_t samples = std::min<std::size_t>(n * n, 20'000);
    for (std::size_t t = 0; t < samples; ++t) {
        const NodeId a = site.nodes()[rng.next() % n].id;
        const NodeId b = site.nodes()[rng.next() % n].id;
        const NodeId c = site.nodes()[rng.next() % n].id;
        if (inherits(site, a, b) && inherits(site, b, a)) {
            require(a == b, "inclusion is not antisymmetric");
        }
        if (inherits(site, a, b) && inherits(site, b, c)) {
            require(inherits(site, a, c), "inclusion is not transitive");
        }
    }
}

}  // namespace

int main() {
    criterion(1, "Landauer estimate at 300 K", 1.0, [] {
        const Json j = Json::parse(run_cli({"landauer", "--temp", "300", "--bits", "1"}));
        const double joules = j.at("joules").get<double>();
        require(std::abs(joules - 3e-21) <= 0.05 * 3e-21,
                "erasure cost " + std::to_string(joules) + " J not within 5% of 3e-21 J");
        require(std::abs(joules - 2.871e-21) < 1e-24, "value drifted from k_B * 300 * ln2");
    });

    criterion(2, "Born statistics over 1e5 seeded collapses", 5.0, [] {
        const Json j = Json::parse(
            run_cli({"collapse", "--amps", "0.6,0.8", "--trials", "100000", "--seed", "7"}));
        const auto counts = j.at("counts").get<std::vector<std::uint64_t>>();
        const double freq = static_cast<double>(counts[0]) / 100000.0;
        const double envelope = 3.0 * std::sqrt(0.36 * 0.64 / 100000.0);
        require(std::abs(freq - 0.36) <= envelope,
                "frequency " + std::to_string(freq) + " outside 0.36 +/- " +
                    std::to_string(envelope));
    });

    criterion(3, "sphere complexes from binary relations", 1.0, [] {
        const auto s1 = make_s1_preset();
        require(euler_characteristic(s1) == 0, "3-point ring is not Euler-equivalent to S1");
        require(s1.count(0) == 3 && s1.count(1) == 3, "unexpected S1 face counts");
        const auto s2 = make_s2_preset();
        require(euler_characteristic(s2) == 2, "4-point boundary is not Euler-equivalent to S2");
        require(s2.count(0) == 4 && s2.count(1) == 6 && s2.count(2) == 4 && s2.count(3) == 0,
                "unexpected S2 face counts");
    });

    criterion(4, "level-weighted inner product values at p=2, K=3", 1.0, [] {
        using Mode = HierarchicState::Mode;
        const auto a = HierarchicState::basis_info_state(PAdicLabel(2, {1, 0, 1}), Mode::Raw);
        const auto b = HierarchicState::basis_info_state(PAdicLabel(2, {1, 0, 0}), Mode::Raw);
        const auto c = HierarchicState::basis_info_state(PAdicLabel(2, {0, 0, 1}), Mode::Raw);
        require(std::abs(hier_inner(a, a) - Amplitude(1.75, 0.0)) <= 1e-12,
                "identical trees should give 1 + 1/2 + 1/4");
        require(std::abs(hier_inner(a, b) - Amplitude(1.5, 0.0)) <= 1e-12,
                "two-digit agreement should give 1 + 1/2");
        require(std::abs(hier_inner(a, c)) <= 1e-12, "distinct leading digits should give 0");
    });

    criterion(5, "Haar quadrature closed form over Z_2 at K=20", 10.0, [] {
        const double one =
            zp_integrate([](const PAdicLabel&) { return 1.0; }, 2, 20);
        require(one == 1.0, "total Haar measure must be exactly 1");
        const double value =
            zp_integrate([](const PAdicLabel& x) { return norm(x).value(); }, 2, 20);
        require(std::abs(value - 2.0 / 3.0) <= 1e-5,
                "integral of |x|_2 is " + std::to_string(value) + ", expected 2/3");
    });

    criterion(6, "entanglement rank and surviving superposition", 1.0, [] {
        const StateVector ready = StateVector::basis(2, 0);
        auto branch = [](double eps) {
            return StateVector({Complex(eps, 0.0), Complex(std::sqrt(1.0 - eps * eps), 0.0)});
        };
        // Discriminating grid: rank 2 exactly when both amplitudes are
        // nonzero and the branches are orthogonal.
        for (const auto& amps : std::vector<std::vector<double>>{{1.0, 0.0}, {0.0, 1.0},
                                                                 {0.6, 0.8}}) {
            for (double eps : {0.0, 1.0}) {
                const StateVector system({amps[0], amps[1]});
                const auto joint = premeasure(system, ready, StateVector::basis(2, 0),
                                              branch(eps));
                const bool expect_rank2 = amps[0] != 0.0 && amps[1] != 0.0 && eps == 0.0;
                require((schmidt_rank(joint, 1e-8) == 2) == expect_rank2,
                        "Schmidt rank disagrees at eps=" + std::to_string(eps));
            }
        }
        // Overlapping pointer branches keep the off-diagonal alive.
        for (double eps : {0.0, 0.1, 0.3, 0.7}) {
            const auto joint = premeasure(StateVector({0.6, 0.8}), ready,
                                          StateVector::basis(2, 0), branch(eps));
            const double off = std::abs(joint.reduced_first()(0, 1));
            require(std::abs(off - 0.6 * 0.8 * eps) <= 1e-10,
                    "reduced off-diagonal is " + std::to_string(off) + " at eps=" +
                        std::to_string(eps));
        }
    });

    criterion(7, "order axioms across 10 seeds x 5 configurations", 60.0, [] {
        const std::vector<GenerationConfig> configs = {
            {.branching = 2, .steps = 10},
            {.branching = 2, .steps = 12, .halt_prob = 0.1},
            {.branching = 3, .steps = 7},
            {.branching = 2, .steps = 5, .halt_prob = 0.25},
            {.branching = 3, .steps = 3, .halt_prob = 0.1, .halt_schedule = {},
             .rule = PrecedenceRule::AllEarlierCohorts},
        };
        SeededRng sampler(20260810);
        for (std::size_t c = 0; c < configs.size(); ++c) {
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                const auto site = generate_site(configs[c], seed);
                require(site.size() <= 10'000, "configuration exceeds the node bound");
                const auto report = verify_orders(site);
                require(report.ok(), "config " + std::to_string(c) + " seed " +
                                         std::to_string(seed) + ": " +
                                         (report.violations.empty() ? ""
                                                                    : report.violations.front()));
                const NodeId root = site.nodes().front().id;
                for (const auto& node : site.nodes()) {
                    require(inherits(site, node.id, root),
                            "node does not inherit from the root");
                }
                check_inclusion_axioms(site, sampler);
                if (site.size() <= 200) check_metric_axioms(site);
            }
        }
    });

    criterion(8, "ultrametric inequality, exhaustive and sampled", 10.0, [] {
        auto strong_triangle = [](const PAdicLabel& x, const PAdicLabel& y,
                                  const PAdicLabel& z) {
            const PNorm xy = distance(x, y);
            const PNorm yz = distance(y, z);
            const PNorm bound = xy < yz ? yz : xy;
            return distance(x, z) <= bound;
        };
        // Exhaustive at K=4: every one of the 16^3 = 4096 triples.
        std::vector<PAdicLabel> small;
        for (std::uint64_t n = 0; n < 16; ++n) {
            small.push_back(PAdicLabel::from_integer(n, 2, 4));
        }
        std::uint64_t violations = 0;
        for (const auto& x : small) {
            for (const auto& y : small) {
                for (const auto& z : small) {
                    if (!strong_triangle(x, y, z)) ++violations;
                }
            }
        }
        require(violations == 0, std::to_string(violations) + " exhaustive violations at K=4");
        // Sampled at K=12: 2e5 random triples over all 4096 labels.
        std::vector<PAdicLabel> large;
        large.reserve(4096);
        for (std::uint64_t n = 0; n < 4096; ++n) {
            large.push_back(PAdicLabel::from_integer(n, 2, 12));
        }
        SeededRng rng(4242);
        for (int t = 0; t < 200'000; ++t) {
            const auto& x = large[rng.next() % 4096];
            const auto& y = large[rng.next() % 4096];
            const auto& z = large[rng.next() % 4096];
            if (!strong_triangle(x, y, z)) ++violations;
        }
        require(violations == 0, std::to_string(violations) + " sampled violations at K=12");
    });

    criterion(9, "pointer overlap realizes e^(-N) and decays strictly", 1.0, [] {
        const double g = std::exp(-1.0);
        for (std::uint32_t n = 0; n <= 700; ++n) {
            const double value = pointer_overlap(n, g);
            const double target = std::exp(-static_cast<double>(n));
            // Full floating precision: first-order propagation of the
            // representation error of e^-1 bounds the gap by N*eps.
            const double tolerance = std::max<double>(1, n) * DBL_EPSILON * target;
            require(std::abs(value - target) <= tolerance,
                    "overlap at N=" + std::to_string(n) + " drifts from e^-N");
        }
        for (double base : {0.01, 0.37, 0.9, 0.999}) {
            double previous = pointer_overlap(0, base);
            for (std::uint32_t n = 1; n <= 700; ++n) {
                const double value = pointer_overlap(n, base);
                if (value < DBL_MIN) break;
                require(value < previous, "overlap is not strictly decreasing");
                previous = value;
            }
        }
    });

    criterion(10, "hierarchic collapse of the two-tree superposition", 10.0, [] {
        using Mode = HierarchicState::Mode;
        const double s = 1.0 / std::sqrt(1.0 + 0.5 + 0.5);
        const HierarchicState tree_a(2, 2, Mode::Unit,
                                     {{{0}, s}, {{0, 0}, s}, {{0, 1}, s}});
        const HierarchicState tree_b(2, 2, Mode::Unit,
                                     {{{1}, s}, {{1, 0}, s}, {{1, 1}, s}});
        const auto psi = hier_superpose({{Amplitude(0.6, 0.0), tree_a},
                                         {Amplitude(0.8, 0.0), tree_b}});
        const std::vector<HierarchicState> alternatives{tree_a, tree_b};
        const auto counts = hier_measure_counts(psi, alternatives, 7, 100'000);
        const double freq = static_cast<double>(counts[0]) / 100'000.0;
        const double envelope = 3.0 * std::sqrt(0.36 * 0.64 / 100'000.0);
        require(std::abs(freq - 0.36) <= envelope,
                "first-tree frequency " + std::to_string(freq) + " outside the 3-sigma band");

        const auto first = hier_measure(psi, alternatives, 7);
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto again = hier_measure(first.post, alternatives, seed);
            require(again.index == first.index, "post-state does not re-measure identically");
        }
    });

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria failed\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
