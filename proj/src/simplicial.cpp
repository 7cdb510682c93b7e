#include "treeq/simplicial.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace treeq {

namespace {

std::string simplex_text(const std::vector<VertexId>& s) {
    std::string text = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) text += ",";
        text += std::to_string(s[i]);
    }
    return text + "}";
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::set<VertexId> vertices,
                                     std::set<std::vector<VertexId>> simplices)
    : vertices_(std::move(vertices)), simplices_(std::move(simplices)) {
    for (const auto& simplex : simplices_) {
        if (simplex.size() < 2) {
            throw InvalidArgument("simplices below dimension 1 belong to the vertex set");
        }
        if (!std::is_sorted(simplex.begin(), simplex.end()) ||
            std::adjacent_find(simplex.begin(), simplex.end()) != simplex.end()) {
            throw InvalidArgument("simplex " + simplex_text(simplex) +
                                  " must be a strictly sorted vertex list");
        }
        for (VertexId v : simplex) {
            if (!vertices_.count(v)) {
                throw InvalidArgument("simplex " + simplex_text(simplex) +
                                      " uses unknown vertex " + std::to_string(v));
            }
        }
        if (simplex.size() > 2) {
            // Downward closure: all facets must already be present.
            for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
                std::vector<VertexId> facet;
                facet.reserve(simplex.size() - 1);
                for (std::size_t i = 0; i < simplex.size(); ++i) {
                    if (i != skip) facet.push_back(simplex[i]);
                }
                if (!simplices_.count(facet)) {
                    throw InvalidArgument("complex is not downward closed: face " +
                                          simplex_text(facet) + " of " + simplex_text(simplex) +
                                          " is missing");
                }
            }
        }
    }
}

std::size_t SimplicialComplex::count(std::size_t dim) const {
    if (dim == 0) return vertices_.size();
    std::size_t n = 0;
    for (const auto& simplex : simplices_) {
        if (simplex.size() == dim + 1) ++n;
    }
    return n;
}

std::size_t SimplicialComplex::max_dimension() const {
    std::size_t dim = 0;
    for (const auto& simplex : simplices_) {
        dim = std::max(dim, simplex.size() - 1);
    }
    return dim;
}

SimplicialComplex clique_complex(const std::set<VertexId>& vertices,
                                 const std::set<VertexPair>& relations, std::size_t max_dim,
                                 bool exclude_top_cell) {
    std::set<VertexPair> adjacency;
    for (const auto& [a, b] : relations) {
        if (a == b) {
            throw InvalidArgument("relations must be irreflexive, got (" + std::to_string(a) +
                                  ", " + std::to_string(a) + ")");
        }
        if (!vertices.count(a) || !vertices.count(b)) {
            throw InvalidArgument("relation endpoint outside the vertex set");
        }
        adjacency.emplace(std::min(a, b), std::max(a, b));
    }
    auto adjacent = [&adjacency](VertexId a, VertexId b) {
        return adjacency.count({std::min(a, b), std::max(a, b)}) != 0;
    };

    const std::vector<VertexId> ordered(vertices.begin(), vertices.end());
    std::set<std::vector<VertexId>> simplices;

    // Grow cliques in ascending vertex order so each is found exactly once.
    std::vector<VertexId> clique;
    auto extend = [&](auto&& self, std::size_t from) -> void {
        if (clique.size() >= 2) simplices.insert(clique);
        if (clique.size() == max_dim + 1) return;
        for (std::size_t i = from; i < ordered.size(); ++i) {
            const VertexId candidate = ordered[i];
            const bool joins = std::all_of(clique.begin(), clique.end(),
                                           [&](VertexId v) { return adjacent(v, candidate); });
            if (!joins) continue;
            clique.push_back(candidate);
            self(self, i + 1);
            clique.pop_back();
        }
    };
    extend(extend, 0);

    if (exclude_top_cell) {
        simplices.erase(ordered);
    }

    return SimplicialComplex(vertices, std::move(simplices));
}

long long euler_characteristic(const SimplicialComplex& complex) {
    std::map<std::size_t, long long> counts;
    for (const auto& simplex : complex.simplices()) {
        ++counts[simplex.size() - 1];
    }
    long long chi = static_cast<long long>(complex.vertices().size());
    for (const auto& [dim, n] : counts) {
        chi += (dim % 2 == 0) ? n : -n;
    }
    return chi;
}

SimplicialComplex make_s1_preset() {
    return clique_complex({0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}}, 1, false);
}

SimplicialComplex make_s2_preset() {
    return clique_complex({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 3, true);
}

}  // namespace treeq
