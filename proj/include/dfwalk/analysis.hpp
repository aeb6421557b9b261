// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "indices.hpp"
#include "signed_log.hpp"
#include "spectral.hpp"
#include "weights.hpp"

namespace dfwalk {

/// Strictly increasing map of a SignedLogValue to a double,
/// sign * log(1 + |v|), computed from the log magnitude so it never
/// overflows. Rank statistics are invariant under it.
inline double rank_key(const SignedLogValue& v) {
    if (v.is_zero()) {
        return 0.0;
    }
    const double l = v.log_magnitude();
    const double softplus = l > 0.0 ? l + std::log1p(std::exp(-l)) : std::log1p(std::exp(l));
    return v.sign() * softplus;
}

inline constexpr double kTieTolerance = 1e-10;

/// rank_key of each value, with keys closer than tol * max(1, |key|) to the
/// smallest key of their run merged into it. Spectral sums carry rounding
/// noise, so nodes equal by symmetry would otherwise get arbitrary ranks.
inline std::vector<double> rank_keys(const std::vector<SignedLogValue>& values, double tol = kTieTolerance) {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values) {
        out.push_back(rank_key(v));
    }
    std::vector<std::size_t> idx(out.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return out[a] < out[b]; });
    for (std::size_t i = 0; i < idx.size();) {
        const double head = out[idx[i]];
        std::size_t j = i + 1;
        while (j < idx.size() && out[idx[j]] - head <= tol * std::max(1.0, std::abs(head))) {
            out[idx[j]] = head;
            ++j;
        }
        i = j;
    }
    return out;
}

/// 1-based ranks, ties sharing the average of their positions.
inline std::vector<double> average_ranks(const std::vector<double>& xs) {
    std::vector<std::size_t> idx(xs.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> ranks(xs.size());
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i + 1;
        while (j < idx.size() && xs[idx[j]] == xs[idx[i]]) {
            ++j;
        }
        const double r = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) {
            ranks[idx[k]] = r;
        }
        i = j;
    }
    return ranks;
}

namespace detail {

inline void require_paired(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DomainError(std::string(what) + ": length mismatch (" + std::to_string(a) + " vs " +
                          std::to_string(b) + ")");
    }
    if (a < 2) {
        throw DomainError(std::string(what) + " needs at least 2 items");
    }
}

} // namespace detail

/// Pearson correlation. DegenerateError if either input is constant.
inline double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    detail::require_paired(xs.size(), ys.size(), "pearson");
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw DegenerateError("correlation undefined for a constant sequence");
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

/// Spearman rank correlation with average ranks for ties.
inline double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
    detail::require_paired(xs.size(), ys.size(), "spearman");
    return pearson(average_ranks(xs), average_ranks(ys));
}

inline double spearman(const std::vector<SignedLogValue>& xs, const std::vector<SignedLogValue>& ys) {
    return spearman(rank_keys(xs), rank_keys(ys));
}

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
    double threshold = 0.0;
};

struct RocResult {
    std::vector<RocPoint> curve;  // starts at (0, 0), ends at (1, 1)
    double auc = 0.0;
};

/// ROC curve from a descending threshold sweep; tied scores enter together,
/// which gives them half weight in the trapezoid AUC. Labels are 0/1.
inline RocResult roc_auc(const std::vector<double>& scores, const std::vector<int>& labels) {
    if (scores.size() != labels.size()) {
        throw DomainError("roc_auc: length mismatch");
    }
    std::size_t pos = 0;
    for (int l : labels) {
        if (l != 0 && l != 1) {
            throw DomainError("roc_auc: labels must be 0 or 1");
        }
        pos += static_cast<std::size_t>(l);
    }
    const std::size_t neg = labels.size() - pos;
    if (pos == 0 || neg == 0) {
        throw DegenerateError("roc_auc needs both classes present");
    }
    std::vector<std::size_t> idx(scores.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    RocResult r;
    r.curve.push_back({0.0, 0.0, std::numeric_limits<double>::infinity()});
    std::size_t tp = 0;
    std::size_t fp = 0;
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j < idx.size() && scores[idx[j]] == scores[idx[i]]) {
            (labels[idx[j]] == 1 ? tp : fp) += 1;
            ++j;
        }
        const RocPoint prev = r.curve.back();
        const RocPoint cur{static_cast<double>(fp) / static_cast<double>(neg),
                           static_cast<double>(tp) / static_cast<double>(pos), scores[idx[i]]};
        r.auc += (cur.fpr - prev.fpr) * 0.5 * (cur.tpr + prev.tpr);
        r.curve.push_back(cur);
        i = j;
    }
    return r;
}

/// Positives among the top ceil(fraction * n) items by descending score;
/// equal scores are ordered by ascending index.
inline std::size_t top_fraction_hits(const std::vector<double>& scores, const std::vector<int>& labels,
                                     double fraction) {
    if (scores.size() != labels.size()) {
        throw DomainError("top_fraction_hits: length mismatch");
    }
    if (!(fraction > 0.0 && fraction <= 1.0)) {
        throw DomainError("top_fraction_hits: fraction must lie in (0, 1]");
    }
    const double raw = fraction * static_cast<double>(scores.size());
    // 0.07 * 100 evaluates to 7.000000000000001; keep that at 7.
    const auto take = std::min(scores.size(), static_cast<std::size_t>(std::ceil(raw - 1e-9 * std::max(1.0, raw))));
    std::vector<std::size_t> idx(scores.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    std::size_t hits = 0;
    for (std::size_t i = 0; i < take; ++i) {
        hits += labels[idx[i]] == 1 ? 1 : 0;
    }
    return hits;
}

/// Metric evaluated on the centrality vector at one beta. Throwing
/// DegenerateError marks that grid point as undefined.
using BetaMetric = std::function<double(const CentralityVector&)>;

struct BetaScanResult {
    std::vector<double> grid;
    std::vector<double> values;          // NaN where the metric is undefined
    std::vector<std::size_t> argmax;     // indices into grid
    double max_value = std::numeric_limits<double>::quiet_NaN();

    std::vector<double> argmax_betas() const {
        std::vector<double> out;
        for (std::size_t i : argmax) {
            out.push_back(grid[i]);
        }
        return out;
    }
};

/// Evaluates the metric over a strictly increasing beta grid, reusing one
/// eigendecomposition. argmax lists every grid point attaining the maximum.
inline BetaScanResult beta_scan(const EigenDecomposition& eig, const WeightScheme& scheme,
                                const std::vector<double>& grid, const BetaMetric& metric,
                                DfForm form = DfForm::tanh) {
    if (grid.empty()) {
        throw DomainError("beta_scan needs a non-empty grid");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw DomainError("beta_scan grid must be strictly increasing");
        }
    }
    BetaScanResult r;
    r.grid = grid;
    r.values.reserve(grid.size());
    for (double beta : grid) {
        double v = std::numeric_limits<double>::quiet_NaN();
        try {
            v = metric(subgraph_centrality(eig, scheme, beta, Domain::log, form));
        } catch (const DegenerateError&) {
        }
        r.values.push_back(v);
        if (!std::isnan(v) && (std::isnan(r.max_value) || v > r.max_value)) {
            r.max_value = v;
        }
    }
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        if (!std::isnan(r.values[i]) && r.values[i] == r.max_value) {
            r.argmax.push_back(i);
        }
    }
    return r;
}

inline BetaScanResult beta_scan(const Graph& g, const WeightScheme& scheme, const std::vector<double>& grid,
                                const BetaMetric& metric, DfForm form = DfForm::tanh) {
    return beta_scan(eigendecompose(g), scheme, grid, metric, form);
}

/// Hits metric for beta_scan. Undefined when every node ties, since the
/// ranking is then the index order only.
inline BetaMetric top_fraction_metric(std::vector<int> labels, double fraction) {
    return [labels = std::move(labels), fraction](const CentralityVector& c) {
        const auto keys = rank_keys(c.values);
        if (std::adjacent_find(keys.begin(), keys.end(), std::not_equal_to<>()) == keys.end()) {
            throw DegenerateError("all centralities tied");
        }
        return static_cast<double>(top_fraction_hits(keys, labels, fraction));
    };
}

inline BetaMetric spearman_metric(std::vector<double> other) {
    return [other = std::move(other)](const CentralityVector& c) { return spearman(rank_keys(c.values), other); };
}

struct DegreeEigenvector {
    CentralityVector degree;
    CentralityVector eigenvector;
};

inline CentralityVector degree_centrality(const Graph& g) {
    CentralityVector c;
    c.domain = Domain::linear;
    for (std::size_t d : g.degrees()) {
        c.values.push_back(SignedLogValue::from_double(static_cast<double>(d)));
    }
    return c;
}

/// Perron vector, unit norm, non-negative. Needs a connected graph.
inline CentralityVector eigenvector_centrality(const EigenDecomposition& eig, const Graph& g) {
    if (!is_connected(g)) {
        throw GraphError("eigenvector centrality needs a connected graph");
    }
    CentralityVector c;
    c.domain = Domain::linear;
    const Eigen::VectorXd v = eig.vectors.col(0).cwiseAbs().normalized();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        c.values.push_back(SignedLogValue::from_double(v(i)));
    }
    return c;
}

inline CentralityVector eigenvector_centrality(const Graph& g) {
    return eigenvector_centrality(eigendecompose(g), g);
}

inline DegreeEigenvector degree_and_eigenvector_centrality(const Graph& g) {
    return {degree_centrality(g), eigenvector_centrality(g)};
}

} // namespace dfwalk
