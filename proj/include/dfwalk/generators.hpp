// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace dfwalk {

namespace detail {

inline void require_nodes(std::size_t n, std::size_t min, const char* kind) {
    if (n < min) {
        throw DomainError(std::string(kind) + " needs n >= " + std::to_string(min) +
                          ", got " + std::to_string(n));
    }
}

} // namespace detail

/// SplitMix64 output for counter value `counter` under `seed`.
///
/// Stateless and counter-based: the k-th draw is
/// mix(seed + (k + 1) * 0x9E3779B97F4A7C15) with the standard SplitMix64
/// finaliser, so any language can reproduce a stream without sharing state.
constexpr std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t counter) noexcept {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits of a SplitMix64 draw.
constexpr double splitmix64_unit(std::uint64_t seed, std::uint64_t counter) noexcept {
    return static_cast<double>(splitmix64(seed, counter) >> 11) * 0x1.0p-53;
}

inline Graph path_graph(std::size_t n) {
    detail::require_nodes(n, 1, "path");
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return Graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
    detail::require_nodes(n, 1, "complete");
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            e.emplace_back(i, j);
        }
    }
    return Graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
    detail::require_nodes(n, 3, "cycle");
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, e);
}

/// Star on n nodes: centre 0 joined to 1..n-1.
inline Graph star_graph(std::size_t n) {
    detail::require_nodes(n, 1, "star");
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId i = 1; i < n; ++i) {
        e.emplace_back(0, i);
    }
    return Graph(n, e);
}

/// Triangulated rows x cols grid. Vertex (i, j) has index i * cols + j and is
/// joined to (i, j+1), (i+1, j) and (i+1, j+1) when those exist.
inline Graph triangular_lattice(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) {
        throw DomainError("trilattice needs rows >= 1 and cols >= 1");
    }
    auto id = [cols](std::size_t i, std::size_t j) { return i * cols + j; };
    std::vector<std::pair<NodeId, NodeId>> e;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (j + 1 < cols) {
                e.emplace_back(id(i, j), id(i, j + 1));
            }
            if (i + 1 < rows) {
                e.emplace_back(id(i, j), id(i + 1, j));
                if (j + 1 < cols) {
                    e.emplace_back(id(i, j), id(i + 1, j + 1));
                }
            }
        }
    }
    return Graph(rows * cols, e);
}

/// G(n, p) random graph. Pairs are visited in graph6 order (column j = 1..n-1,
/// row i = 0..j-1); the pair with running index k is an edge iff
/// splitmix64_unit(seed, k) < p.
inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    detail::require_nodes(n, 1, "er");
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("er needs 0 <= p <= 1");
    }
    std::vector<std::pair<NodeId, NodeId>> e;
    std::uint64_t k = 0;
    for (NodeId j = 1; j < n; ++j) {
        for (NodeId i = 0; i < j; ++i, ++k) {
            if (splitmix64_unit(seed, k) < p) {
                e.emplace_back(i, j);
            }
        }
    }
    return Graph(n, e);
}

} // namespace dfwalk
