// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"

namespace dfwalk {

using NodeId = std::size_t;

/// Unordered node pair, stored with u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on nodes 0..n-1. Immutable after construction.
///
/// Construction validates every edge: self-loops and out-of-range endpoints
/// throw GraphError, duplicates (in either orientation) collapse to one edge.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : n_(n), adjacency_(n) {}

    Graph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> pairs) : Graph(n) {
        edges_.reserve(pairs.size());
        for (auto [a, b] : pairs) {
            if (a == b) {
                throw GraphError("self-loop on node " + std::to_string(a));
            }
            if (a >= n || b >= n) {
                throw GraphError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                 ") has an endpoint >= node count " + std::to_string(n));
            }
            edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        for (const Edge& e : edges_) {
            adjacency_[e.u].push_back(e.v);
            adjacency_[e.v].push_back(e.u);
        }
        for (auto& nbrs : adjacency_) {
            std::sort(nbrs.begin(), nbrs.end());
        }
    }

    Graph(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> pairs)
        : Graph(n, std::span<const std::pair<NodeId, NodeId>>(pairs.begin(), pairs.size())) {}

    std::size_t node_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Edges sorted lexicographically by (u, v).
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Sorted neighbour list of `u`.
    const std::vector<NodeId>& neighbors(NodeId u) const { return adjacency_.at(u); }

    std::size_t degree(NodeId u) const { return adjacency_.at(u).size(); }

    std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> d(n_);
        for (NodeId u = 0; u < n_; ++u) {
            d[u] = adjacency_[u].size();
        }
        return d;
    }

    bool has_edge(NodeId a, NodeId b) const {
        if (a >= n_ || b >= n_ || a == b) {
            return false;
        }
        const auto& nbrs = adjacency_[a];
        return std::binary_search(nbrs.begin(), nbrs.end(), b);
    }

    /// Dense symmetric 0/1 adjacency matrix.
    Eigen::MatrixXd adjacency_matrix() const {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_),
                                                  static_cast<Eigen::Index>(n_));
        for (const Edge& e : edges_) {
            a(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = 1.0;
            a(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = 1.0;
        }
        return a;
    }

    /// Copy of this graph with edge `e` removed (no-op if absent).
    Graph without_edge(Edge e) const {
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        std::vector<std::pair<NodeId, NodeId>> kept;
        kept.reserve(edges_.size());
        for (const Edge& x : edges_) {
            if (x != e) {
                kept.emplace_back(x.u, x.v);
            }
        }
        return Graph(n_, kept);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<NodeId>> adjacency_;
};

/// Optional external names for nodes, bijective with 0..n-1.
class NodeLabelMap {
public:
    NodeLabelMap() = default;

    explicit NodeLabelMap(std::vector<std::string> labels) : labels_(std::move(labels)) {
        for (NodeId i = 0; i < labels_.size(); ++i) {
            if (!index_.emplace(labels_[i], i).second) {
                throw GraphError("duplicate node label '" + labels_[i] + "'");
            }
        }
    }

    bool empty() const noexcept { return labels_.empty(); }
    std::size_t size() const noexcept { return labels_.size(); }

    /// Label of node `i`, or its decimal index when no labels are present.
    std::string label(NodeId i) const {
        return labels_.empty() ? std::to_string(i) : labels_.at(i);
    }

    std::optional<NodeId> find(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
};

struct LabeledGraph {
    Graph graph;
    NodeLabelMap labels;
};

/// Edge density 2m / (n(n-1)).
inline double density(const Graph& g) {
    const auto n = static_cast<double>(g.node_count());
    if (g.node_count() < 2) {
        throw DomainError("density needs at least 2 nodes");
    }
    return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

struct ClusteringStats {
    double watts_strogatz_avg = 0.0;
    double transitivity = 0.0;
    std::uint64_t triangle_count = 0;
};

/// Triangle count, global transitivity (3 * triangles / connected triples) and
/// the mean local clustering coefficient, where nodes of degree < 2
/// contribute 0.
inline ClusteringStats clustering(const Graph& g) {
    const std::size_t n = g.node_count();
    ClusteringStats out;
    if (n == 0) {
        return out;
    }
    std::uint64_t triangle_corners = 0;  // each triangle counted once per corner
    std::uint64_t triples = 0;
    double local_sum = 0.0;
    for (NodeId u = 0; u < n; ++u) {
        const auto& nbrs = g.neighbors(u);
        const std::uint64_t d = nbrs.size();
        if (d < 2) {
            continue;
        }
        std::uint64_t links = 0;
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (g.has_edge(nbrs[i], nbrs[j])) {
                    ++links;
                }
            }
        }
        const std::uint64_t pairs = d * (d - 1) / 2;
        triangle_corners += links;
        triples += pairs;
        local_sum += static_cast<double>(links) / static_cast<double>(pairs);
    }
    out.triangle_count = triangle_corners / 3;
    out.transitivity = triples == 0 ? 0.0
                                    : static_cast<double>(triangle_corners) /
                                          static_cast<double>(triples);
    out.watts_strogatz_avg = local_sum / static_cast<double>(n);
    return out;
}

/// Breadth-first component labels; returns the number of components.
inline std::size_t connected_components(const Graph& g, std::vector<std::size_t>* component = nullptr) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> comp(n, n);
    std::vector<NodeId> queue;
    queue.reserve(n);
    std::size_t count = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[s] != n) {
            continue;
        }
        comp[s] = count;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (NodeId v : g.neighbors(queue[head])) {
                if (comp[v] == n) {
                    comp[v] = count;
                    queue.push_back(v);
                }
            }
        }
        ++count;
    }
    if (component != nullptr) {
        *component = std::move(comp);
    }
    return count;
}

inline bool is_connected(const Graph& g) {
    if (g.node_count() == 0) {
        throw DomainError("is_connected needs at least 1 node");
    }
    return connected_components(g) == 1;
}

/// Breadth-first spanning tree rooted at node 0. Requires a connected graph.
inline Graph bfs_spanning_tree(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0 || !is_connected(g)) {
        throw GraphError("spanning tree requires a connected graph");
    }
    std::vector<bool> seen(n, false);
    std::vector<NodeId> queue{0};
    std::vector<std::pair<NodeId, NodeId>> tree;
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId u = queue[head];
        for (NodeId v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = true;
                tree.emplace_back(u, v);
                queue.push_back(v);
            }
        }
    }
    return Graph(n, tree);
}

} // namespace dfwalk
