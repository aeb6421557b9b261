// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "io.hpp"

namespace dfwalk {

/// Isomorphism-class key: the graph6 string of the relabeling whose
/// upper-triangle bit string (graph6 order) is lexicographically smallest.
/// For a fixed n, string order equals bit-string order.
struct CanonicalLabel {
    std::string graph6;
    friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
};

inline constexpr std::size_t kMaxCanonicalNodes = 10;
inline constexpr std::size_t kMaxEnumerationNodes = 7;

namespace detail {

/// Branch-and-bound search for the minimal column sequence. Column j holds
/// the bits x(0,j)..x(j-1,j) of positions already placed, first bit most
/// significant, so comparing columns in order is comparing bit strings.
class MinimalOrder {
public:
    MinimalOrder(const std::vector<std::uint32_t>& adj, const std::vector<std::uint32_t>* reference)
        : adj_(adj), n_(adj.size()), order_(n_), cols_(n_, 0), best_order_(n_), best_cols_(n_, 0) {
        if (reference != nullptr) {
            best_cols_ = *reference;
            has_best_ = true;
            stop_on_improvement_ = true;
        }
    }

    /// Runs the search; returns true if a strictly smaller string than the
    /// reference was found (always true without a reference).
    bool run() {
        search(0, 0);
        return improved_;
    }

    const std::vector<NodeId>& best_order() const { return best_order_; }

private:
    // -1 prefix smaller, 0 equal, +1 larger than the best over columns 0..j.
    int compare_prefix(std::size_t j) const {
        for (std::size_t c = 0; c <= j; ++c) {
            if (cols_[c] != best_cols_[c]) {
                return cols_[c] < best_cols_[c] ? -1 : 1;
            }
        }
        return 0;
    }

    void search(std::size_t j, std::uint32_t used) {
        if (done_) {
            return;
        }
        if (j == n_) {
            if (!has_best_ || compare_prefix(n_ - 1) < 0) {
                best_cols_ = cols_;
                best_order_ = order_;
                has_best_ = true;
                improved_ = true;
                done_ = stop_on_improvement_;
            }
            return;
        }
        for (std::size_t v = 0; v < n_; ++v) {
            if ((used >> v) & 1U) {
                continue;
            }
            std::uint32_t col = 0;
            for (std::size_t i = 0; i < j; ++i) {
                col = (col << 1) | ((adj_[order_[i]] >> v) & 1U);
            }
            cols_[j] = col;
            order_[j] = v;
            if (has_best_) {
                const int cmp = compare_prefix(j);
                if (cmp > 0) {
                    continue;
                }
                if (cmp < 0 && stop_on_improvement_) {
                    improved_ = true;
                    done_ = true;
                    return;
                }
            }
            search(j + 1, used | (1U << v));
            if (done_) {
                return;
            }
        }
    }

    const std::vector<std::uint32_t>& adj_;
    std::size_t n_;
    std::vector<NodeId> order_;
    std::vector<std::uint32_t> cols_;
    std::vector<NodeId> best_order_;
    std::vector<std::uint32_t> best_cols_;
    bool has_best_ = false;
    bool improved_ = false;
    bool stop_on_improvement_ = false;
    bool done_ = false;
};

inline std::vector<std::uint32_t> adjacency_rows(const Graph& g) {
    std::vector<std::uint32_t> adj(g.node_count(), 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1U << e.v;
        adj[e.v] |= 1U << e.u;
    }
    return adj;
}

inline std::vector<std::uint32_t> identity_columns(const std::vector<std::uint32_t>& adj) {
    std::vector<std::uint32_t> cols(adj.size(), 0);
    for (std::size_t j = 0; j < adj.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            cols[j] = (cols[j] << 1) | ((adj[i] >> j) & 1U);
        }
    }
    return cols;
}

inline bool connected_rows(const std::vector<std::uint32_t>& adj) {
    const std::size_t n = adj.size();
    if (n == 0) {
        return false;
    }
    const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1U;
    std::uint32_t seen = 1U;
    std::uint32_t frontier = 1U;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
            next |= adj[static_cast<std::size_t>(__builtin_ctz(f))];
        }
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == all;
}

inline void require_canonical_size(const Graph& g) {
    if (g.node_count() > kMaxCanonicalNodes) {
        throw DomainError("canonical_form supports n <= " + std::to_string(kMaxCanonicalNodes) + ", got n = " +
                          std::to_string(g.node_count()));
    }
}

} // namespace detail

/// Relabeling of g with the minimal graph6 bit string. Vertex i of the
/// result is vertex order[i] of g.
inline Graph canonical_graph(const Graph& g) {
    detail::require_canonical_size(g);
    const auto adj = detail::adjacency_rows(g);
    detail::MinimalOrder search(adj, nullptr);
    search.run();
    const auto& order = search.best_order();
    std::vector<NodeId> position(g.node_count());
    for (NodeId i = 0; i < order.size(); ++i) {
        position[order[i]] = i;
    }
    std::vector<std::pair<NodeId, NodeId>> pairs;
    pairs.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        pairs.emplace_back(position[e.u], position[e.v]);
    }
    return Graph(g.node_count(), pairs);
}

/// Label invariant under relabeling; factorial worst case, n <= 10.
inline CanonicalLabel canonical_form(const Graph& g) {
    return {encode_graph6(canonical_graph(g))};
}

/// Calls `emit(const Graph&)` once per isomorphism class of connected graphs
/// on n nodes, in increasing canonical-label order. Each emitted graph is its
/// own canonical representative. Returns the number emitted.
template <class F>
std::size_t enumerate_connected(std::size_t n, F&& emit) {
    if (n < 1 || n > kMaxEnumerationNodes) {
        throw DomainError("enumerate_connected supports 1 <= n <= " + std::to_string(kMaxEnumerationNodes) +
                          ", got " + std::to_string(n));
    }
    // Pair positions in graph6 order; bit (bits - 1 - k) of the mask is pair k,
    // so increasing masks are increasing bit strings.
    std::vector<std::pair<NodeId, NodeId>> slots;
    for (NodeId j = 1; j < n; ++j) {
        for (NodeId i = 0; i < j; ++i) {
            slots.emplace_back(i, j);
        }
    }
    const std::size_t bits = slots.size();
    const std::uint64_t limit = std::uint64_t{1} << bits;
    std::vector<std::uint32_t> adj(n);
    std::vector<std::pair<NodeId, NodeId>> pairs;
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        std::fill(adj.begin(), adj.end(), 0U);
        for (std::size_t k = 0; k < bits; ++k) {
            if ((mask >> (bits - 1 - k)) & 1U) {
                const auto [i, j] = slots[k];
                adj[i] |= 1U << j;
                adj[j] |= 1U << i;
            }
        }
        if (!detail::connected_rows(adj)) {
            continue;
        }
        const auto cols = detail::identity_columns(adj);
        detail::MinimalOrder search(adj, &cols);
        if (search.run()) {
            continue;  // some relabeling is smaller
        }
        pairs.clear();
        for (std::size_t k = 0; k < bits; ++k) {
            if ((mask >> (bits - 1 - k)) & 1U) {
                pairs.push_back(slots[k]);
            }
        }
        emit(Graph(n, pairs));
        ++count;
    }
    return count;
}

inline std::vector<Graph> enumerate_connected(std::size_t n) {
    std::vector<Graph> out;
    enumerate_connected(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

/// Calls `emit(const Graph&)` for each graph6 record in file order; returns
/// the count. Parse errors carry the line number.
template <class F>
std::size_t ingest_graph6_stream(std::istream& in, F&& emit) {
    Graph6Reader reader(in);
    while (auto g = reader.next()) {
        emit(*g);
    }
    return reader.count();
}

} // namespace dfwalk
