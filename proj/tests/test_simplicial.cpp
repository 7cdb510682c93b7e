#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "treeq/rng.hpp"
#include "treeq/simplicial.hpp"

using namespace treeq;

namespace {

// Independent clique oracle: test every vertex subset of admissible size
// for pairwise adjacency.
std::set<std::vector<VertexId>> brute_force_cliques(const std::set<VertexId>& vertices,
                                                    const std::set<VertexPair>& relations,
                                                    std::size_t max_dim) {
    auto adjacent = [&relations](VertexId a, VertexId b) {
        return relations.count({std::min(a, b), std::max(a, b)}) != 0;
    };
    const std::vector<VertexId> ordered(vertices.begin(), vertices.end());
    std::set<std::vector<VertexId>> cliques;
    const std::size_t n = ordered.size();
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        std::vector<VertexId> subset;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1ull << i)) subset.push_back(ordered[i]);
        }
        if (subset.size() < 2 || subset.size() > max_dim + 1) continue;
        bool clique = true;
        for (std::size_t i = 0; i < subset.size() && clique; ++i) {
            for (std::size_t j = i + 1; j < subset.size() && clique; ++j) {
                clique = adjacent(subset[i], subset[j]);
            }
        }
        if (clique) cliques.insert(subset);
    }
    return cliques;
}

std::set<VertexPair> random_relations(std::set<VertexId> vertices, double density,
                                      std::uint64_t seed) {
    SeededRng rng(seed);
    std::set<VertexPair> relations;
    const std::vector<VertexId> ordered(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        for (std::size_t j = i + 1; j < ordered.size(); ++j) {
            if (rng.uniform01() < density) relations.insert({ordered[i], ordered[j]});
        }
    }
    return relations;
}

}  // namespace

TEST_CASE("a single point has Euler characteristic 1") {
    const auto complex = clique_complex({4}, {}, 3, false);
    CHECK(complex.count(0) == 1);
    CHECK(complex.simplices().empty());
    CHECK(euler_characteristic(complex) == 1);
}

TEST_CASE("three pairwise-related points form the circle") {
    const auto s1 = make_s1_preset();
    CHECK(s1.count(0) == 3);
    CHECK(s1.count(1) == 3);
    CHECK(s1.count(2) == 0);
    CHECK(s1.max_dimension() == 1);
    CHECK(euler_characteristic(s1) == 0);
}

TEST_CASE("four pairwise-related points minus the top cell form the 2-sphere") {
    const auto s2 = make_s2_preset();
    CHECK(s2.count(0) == 4);
    CHECK(s2.count(1) == 6);
    CHECK(s2.count(2) == 4);
    CHECK(s2.count(3) == 0);  // the solid tetrahedron is excluded
    CHECK(euler_characteristic(s2) == 2);
}

TEST_CASE("keeping the top cell fills the sphere") {
    const auto solid = clique_complex({0, 1, 2, 3},
                                      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 3, false);
    CHECK(solid.count(3) == 1);
    CHECK(euler_characteristic(solid) == 1);  // contractible
}

TEST_CASE("excluding the top cell only removes the whole-vertex-set clique") {
    const auto ring = clique_complex({0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}}, 2, true);
    CHECK(ring.count(1) == 3);
    CHECK(ring.count(2) == 0);
    CHECK(euler_characteristic(ring) == 0);

    // A triangle inside a larger vertex set is not the top cell.
    const auto partial = clique_complex({0, 1, 2, 9}, {{0, 1}, {1, 2}, {2, 0}}, 2, true);
    CHECK(partial.count(2) == 1);
}

TEST_CASE("clique enumeration matches the subset oracle on random graphs") {
    for (std::uint64_t seed : {10ull, 11ull, 12ull, 13ull}) {
        for (double density : {0.2, 0.5, 0.8}) {
            const std::set<VertexId> vertices{0, 1, 2, 3, 4, 5, 6, 7, 8};
            const auto relations = random_relations(vertices, density, seed);
            for (std::size_t max_dim : {1u, 2u, 4u}) {
                const auto complex = clique_complex(vertices, relations, max_dim, false);
                CHECK(complex.simplices() == brute_force_cliques(vertices, relations, max_dim));
            }
        }
    }
}

TEST_CASE("construction enforces downward closure and input hygiene") {
    CHECK_THROWS_AS(SimplicialComplex({0, 1, 2}, {{0, 1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(SimplicialComplex({0, 1}, {{1, 0}}), InvalidArgument);   // unsorted
    CHECK_THROWS_AS(SimplicialComplex({0, 1}, {{0, 5}}), InvalidArgument);   // unknown vertex
    CHECK_THROWS_AS(SimplicialComplex({0}, {{0}}), InvalidArgument);         // dimension 0
    const SimplicialComplex ok({0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
    CHECK(euler_characteristic(ok) == 1);
}

TEST_CASE("clique_complex validates its relations") {
    CHECK_THROWS_AS(clique_complex({0, 1}, {{0, 0}}, 1, false), InvalidArgument);
    CHECK_THROWS_AS(clique_complex({0, 1}, {{0, 7}}, 1, false), InvalidArgument);
}
