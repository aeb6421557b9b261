// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include <dfwalk/dfwalk.hpp>

#include "corpus.hpp"

using namespace dfwalk;

namespace {

std::vector<SignedLogValue> to_log(const std::vector<double>& xs) {
    std::vector<SignedLogValue> out;
    for (double x : xs) {
        out.push_back(SignedLogValue::from_double(x));
    }
    return out;
}

} // namespace

TEST(Ranks, AverageTies) {
    EXPECT_EQ(average_ranks({10.0, 20.0, 20.0, 5.0}), (std::vector<double>{2.0, 3.5, 3.5, 1.0}));
    EXPECT_EQ(average_ranks({1.0, 1.0, 1.0}), (std::vector<double>{2.0, 2.0, 2.0}));
}

TEST(Ranks, KeysAreMonotone) {
    const std::vector<double> xs{-1e300, -3.0, -1e-300, 0.0, 1e-300, 0.5, 2.0, 1e300};
    const auto keys = rank_keys(to_log(xs), 0.0);
    EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
    EXPECT_EQ(std::adjacent_find(keys.begin(), keys.end()), keys.end());
    const auto huge = SignedLogValue::from_log(1, 5000.0);
    EXPECT_GT(rank_key(huge), rank_key(SignedLogValue::from_log(1, 4999.0)));
}

TEST(Ranks, SnapsRoundingNoise) {
    const auto keys = rank_keys(to_log({1.0, 1.0 + 1e-14, 2.0}));
    EXPECT_EQ(keys[0], keys[1]);
    EXPECT_LT(keys[1], keys[2]);
    const auto exact = rank_keys(to_log({1.0, 1.0 + 1e-14}), 0.0);
    EXPECT_LT(exact[0], exact[1]);
}

TEST(Correlation, Examples) {
    EXPECT_DOUBLE_EQ(spearman(std::vector<double>{1, 2, 3}, std::vector<double>{1, 3, 2}), 0.5);
    EXPECT_DOUBLE_EQ(spearman(std::vector<double>{1, 2, 3}, std::vector<double>{3, 2, 1}), -1.0);
    EXPECT_NEAR(pearson({1, 2, 3, 4}, {1, 2, 3, 5}), 0.9827076298239908, 1e-14);
    EXPECT_NEAR(pearson({1, 2, 3}, {2, 4, 7}), 0.9933992677987828, 1e-14);
    EXPECT_THROW(pearson({1, 1, 1}, {1, 2, 3}), DegenerateError);
    EXPECT_THROW(spearman(std::vector<double>{1, 2, 3}, std::vector<double>{5, 5, 5}), DegenerateError);
    EXPECT_THROW(pearson({1, 2}, {1, 2, 3}), DomainError);
    EXPECT_THROW(pearson({1}, {1}), DomainError);
}

TEST(Correlation, MonotoneInvariance) {
    const std::vector<double> xs{0.3, 1.7, -2.0, 5.5, 0.0, 4.4};
    const std::vector<double> ys{1.0, 0.2, 0.9, 3.0, -1.0, 2.0};
    std::vector<double> warped;
    for (double x : xs) {
        warped.push_back(std::exp(3.0 * x) + 7.0);
    }
    EXPECT_DOUBLE_EQ(spearman(xs, ys), spearman(warped, ys));
    EXPECT_DOUBLE_EQ(spearman(xs, ys), spearman(ys, xs));
    EXPECT_DOUBLE_EQ(spearman(xs, ys), spearman(to_log(xs), to_log(ys)));
}

TEST(Roc, Examples) {
    EXPECT_DOUBLE_EQ(roc_auc({0.9, 0.8, 0.7, 0.6}, {1, 0, 1, 0}).auc, 0.75);
    EXPECT_DOUBLE_EQ(roc_auc({0.9, 0.8, 0.2, 0.1}, {1, 1, 0, 0}).auc, 1.0);
    EXPECT_DOUBLE_EQ(roc_auc({0.5, 0.5, 0.5, 0.5}, {1, 0, 1, 0}).auc, 0.5);
    EXPECT_DOUBLE_EQ(roc_auc({0.1, 0.2, 0.8, 0.9}, {1, 1, 0, 0}).auc, 0.0);
    EXPECT_THROW(roc_auc({1, 2}, {1, 1}), DegenerateError);
    EXPECT_THROW(roc_auc({1, 2}, {1, 2}), DomainError);
    EXPECT_THROW(roc_auc({1, 2}, {1}), DomainError);
}

TEST(Roc, CurveShape) {
    const auto r = roc_auc({3, 2, 2, 1, 0}, {1, 1, 0, 0, 1});
    ASSERT_EQ(r.curve.size(), 5u);
    EXPECT_EQ(r.curve.front().fpr, 0.0);
    EXPECT_EQ(r.curve.front().tpr, 0.0);
    EXPECT_EQ(r.curve.back().fpr, 1.0);
    EXPECT_EQ(r.curve.back().tpr, 1.0);
    for (std::size_t i = 1; i < r.curve.size(); ++i) {
        EXPECT_GE(r.curve[i].fpr, r.curve[i - 1].fpr);
        EXPECT_GE(r.curve[i].tpr, r.curve[i - 1].tpr);
    }
    // Pairwise count: positives above negatives, ties half.
    double wins = 0.0;
    const std::vector<double> s{3, 2, 2, 1, 0};
    const std::vector<int> l{1, 1, 0, 0, 1};
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (l[i] == 1 && l[j] == 0) {
                wins += s[i] > s[j] ? 1.0 : (s[i] == s[j] ? 0.5 : 0.0);
            }
        }
    }
    EXPECT_DOUBLE_EQ(r.auc, wins / 6.0);
}

TEST(TopFraction, Examples) {
    const std::vector<double> s{0.9, 0.1, 0.8, 0.7, 0.2, 0.6, 0.5, 0.4, 0.3, 0.05};
    const std::vector<int> l{1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
    EXPECT_EQ(top_fraction_hits(s, l, 0.1), 1u);
    EXPECT_EQ(top_fraction_hits(s, l, 0.3), 2u);
    EXPECT_EQ(top_fraction_hits(s, l, 0.25), 2u);
    EXPECT_EQ(top_fraction_hits(s, l, 1.0), 3u);
    EXPECT_EQ(top_fraction_hits({1, 1, 1}, {0, 1, 1}, 0.34), 1u);
    EXPECT_EQ(top_fraction_hits({1, 1, 1}, {0, 1, 1}, 0.33), 0u);
    EXPECT_THROW(top_fraction_hits(s, l, 0.0), DomainError);
    EXPECT_THROW(top_fraction_hits(s, l, 1.5), DomainError);
}

TEST(TopFraction, RoundedProductDoesNotAddAnItem) {
    std::vector<double> s(100);
    std::vector<int> l(100, 0);
    for (std::size_t i = 0; i < 100; ++i) {
        s[i] = 100.0 - static_cast<double>(i);
    }
    l[7] = 1;
    ASSERT_GT(0.07 * 100.0, 7.0);
    EXPECT_EQ(top_fraction_hits(s, l, 0.07), 0u);
    EXPECT_EQ(top_fraction_hits(s, l, 0.08), 1u);
}

TEST(BetaScan, FindsPlateau) {
    const Graph g = star_graph(6);
    std::vector<int> labels(6, 0);
    labels[0] = 1;
    const std::vector<double> grid{0.0, 0.5, 1.0};
    const auto r = beta_scan(g, DoubleFactorial{}, grid, top_fraction_metric(labels, 0.2));
    EXPECT_TRUE(std::isnan(r.values[0]));
    EXPECT_EQ(r.values[1], 1.0);
    EXPECT_EQ(r.values[2], 1.0);
    EXPECT_EQ(r.argmax, (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(r.argmax_betas(), (std::vector<double>{0.5, 1.0}));
    EXPECT_EQ(r.max_value, 1.0);
}

TEST(BetaScan, Validation) {
    const Graph g = path_graph(4);
    const auto metric = spearman_metric({1, 2, 2, 1});
    EXPECT_THROW(beta_scan(g, Factorial{}, {}, metric), DomainError);
    EXPECT_THROW(beta_scan(g, Factorial{}, {0.5, 0.5}, metric), DomainError);
    EXPECT_THROW(beta_scan(g, Factorial{}, {0.5, 0.2}, metric), DomainError);
    const auto r = beta_scan(g, Factorial{}, {0.5, 1.0}, metric);
    EXPECT_DOUBLE_EQ(r.values[0], 1.0);
    EXPECT_EQ(r.argmax.size(), 2u);
}

TEST(BetaScan, AllUndefined) {
    const auto r = beta_scan(cycle_graph(5), Factorial{}, {0.5, 1.0}, top_fraction_metric({1, 0, 0, 0, 0}, 0.2));
    EXPECT_TRUE(r.argmax.empty());
    EXPECT_TRUE(std::isnan(r.max_value));
}

TEST(Centralities, DegreeAndEigenvector) {
    const auto both = degree_and_eigenvector_centrality(path_graph(3));
    const auto deg = both.degree.linear();
    EXPECT_DOUBLE_EQ(deg[0], 1.0);
    EXPECT_DOUBLE_EQ(deg[1], 2.0);
    EXPECT_DOUBLE_EQ(deg[2], 1.0);
    const auto ev = both.eigenvector.linear();
    EXPECT_NEAR(ev[0], 0.5, 1e-14);
    EXPECT_NEAR(ev[1], 1.0 / std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(ev[2], 0.5, 1e-14);
    Graph two(4, std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {2, 3}});
    EXPECT_THROW(eigenvector_centrality(two), GraphError);
}

TEST(Centralities, LatticeSchemesDisagree) {
    const auto e = eigendecompose(triangular_lattice(3, 9));
    const auto ee = subgraph_centrality(e, Factorial{}, 1.0);
    const auto gamma = subgraph_centrality(e, DoubleFactorial{}, 1.0);
    const double rho = spearman(ee.values, gamma.values);
    EXPECT_LT(rho, 1.0);
    EXPECT_GT(rho, 0.9);
    // Every node of K_27 ties, so its Spearman value is undefined.
    const auto k = eigendecompose(complete_graph(27));
    EXPECT_THROW(spearman(subgraph_centrality(k, Factorial{}, 1.0).values,
                          subgraph_centrality(k, DoubleFactorial{}, 1.0).values),
                 DegenerateError);
}

TEST(Centralities, SmallBetaFollowsDegree) {
    for (const Graph& g : corpus::random_graphs()) {
        const auto c = subgraph_centrality(eigendecompose(g), DoubleFactorial{}, 1e-2).linear();
        const auto deg = g.degrees();
        for (NodeId p = 0; p < g.node_count(); ++p) {
            for (NodeId q = 0; q < g.node_count(); ++q) {
                if (deg[p] > deg[q]) {
                    EXPECT_GT(c[p], c[q]);
                }
            }
        }
    }
}

TEST(ExampleTables, Correlations) {
    const std::vector<double> xs{0.5, 2.0, -1.0, 3.0};
    std::vector<double> reversed(xs.rbegin(), xs.rend());
    EXPECT_DOUBLE_EQ(spearman(xs, xs), 1.0);
    EXPECT_DOUBLE_EQ(spearman(std::vector<double>{1, 2, 3, 4}, std::vector<double>{4, 3, 2, 1}), -1.0);
    EXPECT_DOUBLE_EQ(spearman(std::vector<double>{1, 2, 3}, std::vector<double>{1, 3, 2}), 0.5);
    std::vector<double> scaled;
    for (double x : xs) {
        scaled.push_back(-2.0 * x);
    }
    EXPECT_DOUBLE_EQ(pearson(xs, xs), 1.0);
    EXPECT_DOUBLE_EQ(pearson(xs, scaled), -1.0);
    EXPECT_NEAR(pearson({0, 1, 2}, {0, 1, 4}), 4.0 / std::sqrt(2.0 * 78.0 / 9.0), 1e-15);
    EXPECT_NEAR(pearson({0, 1, 2}, {0, 1, 4}), 0.9608, 5e-5);
}

TEST(ExampleTables, RocAndTopFraction) {
    EXPECT_DOUBLE_EQ(roc_auc({5, 4, 3, 2, 1}, {1, 1, 0, 0, 0}).auc, 1.0);
    EXPECT_DOUBLE_EQ(roc_auc({2, 2, 2}, {1, 0, 0}).auc, 0.5);
    EXPECT_DOUBLE_EQ(roc_auc({0.9, 0.8, 0.7, 0.6}, {1, 0, 1, 0}).auc, 0.75);
    const std::vector<double> s{0.3, 1.7, -2.0, 5.5, 0.0, 4.4};
    const std::vector<int> l{1, 0, 1, 1, 0, 0};
    std::vector<double> neg;
    std::vector<double> warped;
    for (double x : s) {
        neg.push_back(-x);
        warped.push_back(std::exp(x));
    }
    EXPECT_DOUBLE_EQ(roc_auc(s, l).auc + roc_auc(neg, l).auc, 1.0);
    EXPECT_DOUBLE_EQ(roc_auc(s, l).auc, roc_auc(warped, l).auc);

    std::vector<double> scores(100);
    std::vector<int> top(100, 0);
    for (std::size_t i = 0; i < 100; ++i) {
        scores[i] = static_cast<double>(100 - i);
        top[i] = i < 10 ? 1 : 0;
    }
    EXPECT_EQ(top_fraction_hits(scores, top, 0.1), 10u);
    EXPECT_EQ(top_fraction_hits(scores, std::vector<int>(100, 0), 0.1), 0u);
}

TEST(ExampleTables, BetaScan) {
    const std::vector<double> grid{0.1, 0.2, 0.3};
    const auto r = beta_scan(path_graph(5), Factorial{}, grid, [](const CentralityVector&) { return 4.0; });
    EXPECT_EQ(r.argmax, (std::vector<std::size_t>{0, 1, 2}));
    const auto zero = beta_scan(path_graph(5), DoubleFactorial{}, {0.0}, top_fraction_metric({1, 0, 0, 0, 0}, 0.2));
    EXPECT_TRUE(std::isnan(zero.values[0]));
    EXPECT_TRUE(zero.argmax.empty());
}

TEST(ExampleTables, DegreeAndEigenvector) {
    for (std::size_t n : {2u, 5u, 9u}) {
        const auto both = degree_and_eigenvector_centrality(complete_graph(n));
        for (double d : both.degree.linear()) {
            EXPECT_DOUBLE_EQ(d, static_cast<double>(n - 1));
        }
        for (double v : both.eigenvector.linear()) {
            EXPECT_NEAR(v, 1.0 / std::sqrt(static_cast<double>(n)), 1e-14);
        }
    }
    EXPECT_DOUBLE_EQ(degree_centrality(star_graph(5)).linear()[0], 4.0);
}
