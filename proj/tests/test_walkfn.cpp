// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <dfwalk/dfwalk.hpp>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace dfwalk;

namespace {

double rel_frobenius(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return (a - b).norm() / b.norm();
}

double asymmetry(const Eigen::MatrixXd& m) {
    return (m - m.transpose()).cwiseAbs().maxCoeff();
}

} // namespace

TEST(SignedLog, RoundTrip) {
    for (double x : {1.0, -1.0, 3.5e-300, -2.25e300, 0.1, 123456.789, -7.0}) {
        const auto v = SignedLogValue::from_double(x);
        EXPECT_NEAR(v.to_double(), x, 1e-12 * std::abs(x));
    }
    EXPECT_TRUE(SignedLogValue::from_double(0.0).is_zero());
    EXPECT_EQ(SignedLogValue::from_double(0.0).to_double(), 0.0);
}

TEST(SignedLog, Arithmetic) {
    const auto a = SignedLogValue::from_double(3.0);
    const auto b = SignedLogValue::from_double(-5.0);
    EXPECT_NEAR((a + b).to_double(), -2.0, 1e-14);
    EXPECT_NEAR((a - b).to_double(), 8.0, 1e-14);
    EXPECT_NEAR((a * b).to_double(), -15.0, 1e-13);
    EXPECT_NEAR((a / b).to_double(), -0.6, 1e-15);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_LT(b, a);
    EXPECT_LT(SignedLogValue::zero(), a);
    EXPECT_LT(SignedLogValue::from_double(-10.0), b);

    // Far beyond double range.
    const auto huge = SignedLogValue::from_log(1, 5000.0);
    EXPECT_FALSE(huge.is_finite_as_double());
    EXPECT_NEAR((huge + huge).log_magnitude(), 5000.0 + std::numbers::ln2, 1e-12);
    EXPECT_NEAR((huge * huge).log_magnitude(), 10000.0, 1e-12);
    EXPECT_TRUE(std::isinf(huge.to_double()));
}

TEST(SignedLog, StreamingSum) {
    SignedLogSum s;
    for (int i = 1; i <= 100; ++i) {
        s.add(SignedLogValue::from_double(i % 2 == 0 ? i : -i));
    }
    EXPECT_NEAR(s.result().to_double(), 50.0, 1e-11);
    EXPECT_NEAR(std::exp(s.log_abs_total()), 5050.0, 1e-9);
    EXPECT_TRUE(SignedLogSum().result().is_zero());
}

TEST(DoubleFactorial, Values) {
    EXPECT_EQ(double_factorial(-1).to_double(), 1.0);
    EXPECT_EQ(double_factorial(0).to_double(), 1.0);
    EXPECT_NEAR(double_factorial(5).to_double(), 15.0, 1e-12);
    EXPECT_NEAR(double_factorial(6).to_double(), 48.0, 1e-12);
    EXPECT_NEAR(double_factorial(6).log_magnitude(), std::log(48.0), 1e-14);
    EXPECT_THROW(double_factorial(-2), DomainError);
    double direct = 1.0;
    for (long k = 1; k <= 40; ++k) {
        direct = 1.0;
        for (long i = k; i > 1; i -= 2) {
            direct *= static_cast<double>(i);
        }
        EXPECT_NEAR(double_factorial(k).to_double() / direct, 1.0, 1e-12) << k;
    }
}

TEST(Erf, MatchesSeriesOracle) {
    EXPECT_EQ(erf_scalar(0.0), 0.0);
    EXPECT_EQ(erf_scalar(40.0), 1.0);
    EXPECT_NEAR(erf_scalar(1.0), 0.8427007929, 1e-10);
    for (double x = -6.0; x <= 6.0; x += 0.0625) {
        EXPECT_NEAR(erf_scalar(x), oracle::erf_series(x), 1e-12) << x;
        EXPECT_EQ(erf_scalar(-x), -erf_scalar(x));
    }
}

TEST(Bessel, MatchesSeriesOracle) {
    EXPECT_EQ(bessel_i(0, 0.0), 1.0);
    EXPECT_EQ(bessel_i(1, 0.0), 0.0);
    EXPECT_NEAR(bessel_i(0, 1.0), 1.2660658778, 1e-10);
    for (unsigned p = 0; p <= 5; ++p) {
        for (double x = 0.25; x <= 10.0; x += 0.25) {
            const double ref = oracle::bessel_series(p, x);
            EXPECT_NEAR(bessel_i(p, x), ref, 1e-10 * ref) << p << " " << x;
        }
    }
    EXPECT_THROW(bessel_i(0, -1.0), DomainError);
}

TEST(TanhScale, ClosedFormAndGap) {
    EXPECT_NEAR(kTanhScale, std::sqrt(std::numbers::pi) * std::numbers::ln2, 1e-15);
    double worst = 0.0;
    for (int i = 0; i <= 120000; ++i) {
        const double x = -6.0 + 12.0 * i / 120000.0;
        worst = std::max(worst, std::abs(erf_scalar(x) - std::tanh(kTanhScale * x)));
    }
    EXPECT_LE(worst, 0.03);
    const double gap = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [](double x) { return std::erf(x) - std::tanh(kTanhScale * x); }, 0.0, 40.0, 15, 1e-14);
    EXPECT_LE(std::abs(gap), 1e-6);
}

TEST(Weights, Coefficients) {
    EXPECT_NEAR(coefficient(Factorial{}, 5).to_double(), 1.0 / 120.0, 1e-16);
    EXPECT_NEAR(coefficient(DoubleFactorial{}, 5).to_double(), 1.0 / 15.0, 1e-16);
    EXPECT_NEAR(coefficient(Geometric{0.1}, 3).to_double(), 1e-3, 1e-17);
    EXPECT_TRUE(coefficient(ShiftedFactorial{3}, 2).is_zero());
    EXPECT_NEAR(coefficient(ShiftedFactorial{3}, 5).to_double(), 0.5, 1e-16);
}

TEST(Weights, ParseAndPrint) {
    EXPECT_TRUE(std::holds_alternative<Factorial>(parse_scheme("exp")));
    EXPECT_TRUE(std::holds_alternative<DoubleFactorial>(parse_scheme("double-factorial")));
    EXPECT_EQ(std::get<Geometric>(parse_scheme("katz:0.25")).alpha, 0.25);
    EXPECT_EQ(std::get<ShiftedFactorial>(parse_scheme("shifted:10")).t, 10u);
    for (const char* s : {"exp", "df", "katz:0.25", "shifted:3"}) {
        EXPECT_EQ(to_string(parse_scheme(s)), s);
    }
    for (const char* s : {"", "katz", "katz:-1", "katz:abc", "shifted:-1", "shifted:1.5", "foo"}) {
        EXPECT_THROW(parse_scheme(s), DomainError) << s;
    }
}

TEST(MatrixExp, Examples) {
    const auto e1 = eigendecompose(Graph(1));
    EXPECT_EQ(matrix_exp(e1, 3.0)(0, 0), 1.0);

    const auto k2 = eigendecompose(complete_graph(2));
    const Eigen::MatrixXd m = matrix_exp(k2, 1.0);
    EXPECT_NEAR(m(0, 0), std::cosh(1.0), 1e-14);
    EXPECT_NEAR(m(0, 1), std::sinh(1.0), 1e-14);
    EXPECT_NEAR(m.trace(), 2.0 * std::cosh(1.0), 1e-14);
}

TEST(DfMatrix, Examples) {
    const auto e1 = eigendecompose(Graph(1));
    EXPECT_EQ(df_matrix_exact(e1, 1.0)(0, 0), 1.0);
    EXPECT_EQ(df_matrix_tanh(e1, 1.0)(0, 0), 1.0);

    const auto k2 = eigendecompose(complete_graph(2));
    EXPECT_NEAR(df_matrix_exact(k2, 1.0).trace(), 2.0 * std::sqrt(std::numbers::e), 1e-13);
    EXPECT_NEAR(df_matrix_tanh(k2, 1.0).trace(), 2.0 * std::sqrt(std::numbers::e), 1e-13);

    const auto k3 = eigendecompose(complete_graph(3));
    EXPECT_NEAR(df_matrix_tanh(k3, 1.0).trace(), 16.495101201943914, 1e-11);
    EXPECT_NEAR(df_matrix_exact(k3, 1.0).trace(), 16.704565611965045, 1e-11);
}

TEST(DfMatrix, NegativeScalarEigenvalue) {
    // Single eigenvalue -2: sum_k (-2)^k / k!!, with t_k = t_{k-2} * 4 / k.
    long double prev2 = 1.0L;
    long double prev1 = -2.0L;
    long double sum = prev2 + prev1;
    for (int k = 2; k <= 200; ++k) {
        const long double t = prev2 * 4.0L / static_cast<long double>(k);
        sum += t;
        prev2 = prev1;
        prev1 = t;
    }
    const double closed = spectral_weight(DoubleFactorial{}, -2.0, 1.0, DfForm::erf).to_double();
    EXPECT_NEAR(closed, static_cast<double>(sum), 1e-12);
    EXPECT_NEAR(closed, -1.45038314, 1e-8);
}

TEST(Katz, Examples) {
    const auto k2 = eigendecompose(complete_graph(2));
    const Eigen::MatrixXd m = katz_resolvent(k2, 0.5);
    EXPECT_NEAR(m(0, 0), 4.0 / 3.0, 1e-14);
    EXPECT_NEAR(m(0, 1), 2.0 / 3.0, 1e-14);
    EXPECT_THROW(katz_resolvent(k2, 1.0), DomainError);
    EXPECT_THROW(katz_resolvent(k2, 0.0), DomainError);
    EXPECT_THROW(katz_resolvent(k2, -0.1), DomainError);
    const auto g = eigendecompose(erdos_renyi(12, 0.3, 5));
    EXPECT_LE((katz_resolvent(g, 1e-9) - Eigen::MatrixXd::Identity(12, 12)).cwiseAbs().maxCoeff(), 1e-7);

    const Graph p4 = path_graph(4);
    const auto e = eigendecompose(p4);
    const Eigen::MatrixXd a = p4.adjacency_matrix();
    const Eigen::MatrixXd inv = (Eigen::MatrixXd::Identity(4, 4) - 0.3 * a).inverse();
    EXPECT_LE((katz_resolvent(e, 0.3) - inv).cwiseAbs().maxCoeff(), 1e-12);
    const auto series = series_oracle(p4, Geometric{0.3}, 1.0, 400);
    EXPECT_LE(rel_frobenius(series.sum, inv), 1e-12);
}

TEST(ShiftedFactorial, MatchesSeriesOracle) {
    const auto e1 = eigendecompose(Graph(1));
    EXPECT_EQ(shifted_factorial_closed_form(e1, 0)(0, 0), 0.0);
    EXPECT_EQ(shifted_factorial_matrix(e1, 0)(0, 0), 1.0);

    const Graph k2 = complete_graph(2);
    const auto e = eigendecompose(k2);
    for (unsigned t : {0u, 1u, 2u, 10u}) {
        const auto series = series_oracle(k2, ShiftedFactorial{t}, 1.0, 200);
        EXPECT_LE(rel_frobenius(shifted_factorial_matrix(e, t), series.sum), 1e-10) << t;
    }
    for (const Graph& g : corpus::random_graphs()) {
        const auto eg = eigendecompose(g);
        const auto series = series_oracle(g, ShiftedFactorial{3}, 1.0, 200);
        EXPECT_LE(rel_frobenius(shifted_factorial_matrix(eg, 3), series.sum), 1e-10);
    }
}

TEST(ShiftedFactorial, LiteralClosedFormIsNotTheSeries) {
    const auto e = eigendecompose(complete_graph(2));
    const Eigen::MatrixXd lit = shifted_factorial_closed_form(e, 0);
    const Eigen::MatrixXd sum = shifted_factorial_matrix(e, 0);
    EXPECT_GT((lit - sum).norm(), 0.1);
    // I + A e^A - e^A on the +-1 spectrum: 1 on the lambda=1 branch, 1 - 2/e on lambda=-1.
    EXPECT_NEAR(lit.trace(), 1.0 + (1.0 - 2.0 / std::numbers::e), 1e-14);
}

TEST(SeriesOracle, Basics) {
    const Graph p3 = path_graph(3);
    const auto id = series_oracle(p3, DoubleFactorial{}, 1.0, 0);
    EXPECT_EQ(id.sum, Eigen::MatrixXd::Identity(3, 3));
    const auto ex = series_oracle(p3, Factorial{}, 1.0, 100);
    EXPECT_LE(rel_frobenius(ex.sum, matrix_exp(eigendecompose(p3), 1.0)), 1e-10);
    EXPECT_LT(ex.last_term_max_abs, 1e-100);
    const auto k2 = series_oracle(complete_graph(2), DoubleFactorial{}, 1.0, 200);
    EXPECT_LE(rel_frobenius(k2.sum, df_matrix_exact(eigendecompose(complete_graph(2)), 1.0)), 1e-10);
    EXPECT_THROW(series_oracle(p3, Factorial{}, 1.0, -1), DomainError);
}

TEST(SeriesOracle, ErfClosedFormOnCorpus) {
    for (const Graph& g : corpus::all_graphs()) {
        const auto e = eigendecompose(g);
        const Eigen::MatrixXd exact = df_matrix_exact(e, 1.0);
        const auto series = series_oracle(g, DoubleFactorial{}, 1.0, 200);
        EXPECT_LE(rel_frobenius(series.sum, exact), 1e-10);
        EXPECT_LE(rel_frobenius(df_matrix_tanh(e, 1.0), exact), 0.05);
        EXPECT_LE(asymmetry(exact), 1e-10 * exact.cwiseAbs().maxCoeff());
        EXPECT_LE(asymmetry(df_matrix_tanh(e, 1.0)), 1e-10 * exact.cwiseAbs().maxCoeff());
        EXPECT_LE(asymmetry(matrix_exp(e, 1.0)), 1e-12 * matrix_exp(e, 1.0).cwiseAbs().maxCoeff());
    }
}

TEST(SeriesOracle, OtherBetas) {
    const Graph g = corpus::random_graphs().front();
    const auto e = eigendecompose(g);
    for (double beta : {-1.0, 0.0, 0.3, 0.7}) {
        const auto df = series_oracle(g, DoubleFactorial{}, beta, 200);
        EXPECT_LE(rel_frobenius(df.sum, matrix_function(e, DoubleFactorial{}, beta, DfForm::erf)), 1e-10) << beta;
        const auto ex = series_oracle(g, Factorial{}, beta, 200);
        EXPECT_LE(rel_frobenius(ex.sum, matrix_exp(e, beta)), 1e-10) << beta;
    }
}

TEST(Overflow, MatrixPathsFailLoudly) {
    const auto k60 = eigendecompose(complete_graph(60));
    EXPECT_THROW(df_matrix_tanh(k60, 1.0), OverflowError);
    EXPECT_THROW(df_matrix_exact(k60, 1.0), OverflowError);
    EXPECT_THROW(matrix_exp(k60, 20.0), OverflowError);
    EXPECT_NO_THROW(matrix_exp(k60, 1.0));
}

TEST(TracePower, MatchesExactWalkCounts) {
    for (const Graph& g : corpus::all_graphs()) {
        const auto v = eigenvalues(g);
        for (int k = 0; k <= 8; ++k) {
            const auto exact = oracle::trace_power_exact(g, k);
            const auto t = trace_power(v, k);
            if (exact == 0) {
                EXPECT_TRUE(t.is_zero()) << "k=" << k;
            } else {
                EXPECT_NEAR(t.to_double(), static_cast<double>(exact), 1e-9 * static_cast<double>(exact));
            }
        }
    }
}

TEST(DecayProfile, Examples) {
    const auto k2 = eigendecompose(complete_graph(2));
    const auto df = walk_decay_profile(k2, DoubleFactorial{}, 300);
    ASSERT_EQ(df.size(), 300u);
    EXPECT_EQ(df[3].k, 4);
    EXPECT_NEAR(df[3].value.to_double(), 0.25, 1e-14);
    for (const auto& pt : df) {
        if (pt.k % 2 == 1) {
            EXPECT_EQ(pt.value.sign(), 0) << pt.k;
        }
    }
    const auto shifted = walk_decay_profile(k2, ShiftedFactorial{10}, 20);
    for (long k = 1; k < 10; ++k) {
        EXPECT_TRUE(shifted[static_cast<std::size_t>(k - 1)].value.is_zero());
    }
    EXPECT_NEAR(shifted[9].value.to_double(), 2.0, 1e-12);  // tr(A^10) / 0!
    EXPECT_THROW(walk_decay_profile(k2, Factorial{}, 0), DomainError);
}

TEST(DecayProfile, CoefficientCrossover) {
    const double log_tenth = std::log(0.1);
    for (long k = 1; k <= 250; ++k) {
        EXPECT_GT(coefficient(DoubleFactorial{}, k).log_magnitude(), static_cast<double>(k) * log_tenth) << k;
    }
    EXPECT_LT(coefficient(DoubleFactorial{}, 300).log_magnitude(), 300.0 * log_tenth);
}

TEST(DecayProfile, SeededGraphOrdering) {
    // n = 10, m = 40.
    const Graph g = erdos_renyi(10, 0.9, 4);
    ASSERT_EQ(g.edge_count(), 40u);
    const auto e = eigendecompose(g);
    const auto df = walk_decay_profile(e, DoubleFactorial{}, 300);
    const auto geo = walk_decay_profile(e, Geometric{0.1}, 300);
    const auto fact = walk_decay_profile(e, Factorial{}, 300);
    for (std::size_t i = 0; i < 250; ++i) {
        if (!df[i].value.is_zero()) {
            EXPECT_GT(df[i].value, geo[i].value) << df[i].k;
            EXPECT_GE(df[i].value, fact[i].value) << df[i].k;
        }
    }
    EXPECT_LT(df[299].value, geo[299].value);
}
