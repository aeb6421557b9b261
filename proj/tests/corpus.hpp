// SPDX-License-Identifier: Apache-2.0
// Graph corpus shared by the unit and acceptance tests.
#pragma once

#include <string>
#include <vector>

#include <dfwalk/dfwalk.hpp>

namespace corpus {

using dfwalk::Graph;

/// 20 connected G(n, 0.3) graphs with 7 <= n <= 12 and lambda_1 <= 5, taken
/// in seed order. The radius cap keeps the K = 80 and K = 200 truncated
/// series converged to well below the test tolerances.
inline const std::vector<Graph>& random_graphs() {
    static const std::vector<Graph> graphs = [] {
        std::vector<Graph> out;
        for (std::uint64_t seed = 1; out.size() < 20; ++seed) {
            const std::size_t n = 7 + seed % 6;
            Graph g = dfwalk::erdos_renyi(n, 0.3, seed);
            if (dfwalk::is_connected(g) && dfwalk::spectral_radius(g) <= 5.0) {
                out.push_back(std::move(g));
            }
        }
        return out;
    }();
    return graphs;
}

/// Every connected graph on 4, 5 and 6 nodes (6 + 21 + 112).
inline const std::vector<Graph>& small_graphs() {
    static const std::vector<Graph> graphs = [] {
        std::vector<Graph> out;
        for (std::size_t n = 4; n <= 6; ++n) {
            dfwalk::enumerate_connected(n, [&](const Graph& g) { out.push_back(g); });
        }
        return out;
    }();
    return graphs;
}

inline std::vector<Graph> all_graphs() {
    std::vector<Graph> out = small_graphs();
    out.insert(out.end(), random_graphs().begin(), random_graphs().end());
    return out;
}

inline std::string fixture(const std::string& name) {
    return std::string(DFWALK_TEST_DATA) + "/" + name;
}

} // namespace corpus
