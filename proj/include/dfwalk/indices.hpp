// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "graph.hpp"
#include "matrix_functions.hpp"
#include "signed_log.hpp"
#include "special.hpp"
#include "spectral.hpp"
#include "weights.hpp"

namespace dfwalk {

enum class Domain { linear, log };

/// Per-node index values. `scheme` is empty for measures that are not walk
/// sums (degree, eigenvector).
struct CentralityVector {
    std::vector<SignedLogValue> values;
    std::optional<WeightScheme> scheme;
    double beta = 1.0;
    Domain domain = Domain::log;
    DfForm form = DfForm::tanh;

    std::size_t size() const noexcept { return values.size(); }

    /// Linear values; throws OverflowError if any does not fit a double.
    std::vector<double> linear() const {
        std::vector<double> out;
        out.reserve(values.size());
        for (const auto& v : values) {
            if (!v.is_finite_as_double()) {
                throw OverflowError("centrality value exceeds double range; use the log domain");
            }
            out.push_back(v.to_double());
        }
        return out;
    }

    std::vector<double> logs() const {
        std::vector<double> out;
        out.reserve(values.size());
        for (const auto& v : values) {
            out.push_back(v.log_magnitude());
        }
        return out;
    }
};

namespace detail {

inline void require_walk_scheme(const WeightScheme& scheme) {
    if (!std::holds_alternative<Factorial>(scheme) && !std::holds_alternative<DoubleFactorial>(scheme)) {
        throw DomainError("communicability is defined for the exp and df schemes only");
    }
}

inline std::vector<SignedLogValue> spectral_weights(const EigenDecomposition& eig, const WeightScheme& scheme,
                                                    double beta, DfForm form) {
    std::vector<SignedLogValue> w;
    w.reserve(static_cast<std::size_t>(eig.size()));
    for (Eigen::Index j = 0; j < eig.size(); ++j) {
        w.push_back(spectral_weight(scheme, eig.values(j), beta, form));
    }
    return w;
}

} // namespace detail

/// Communicability matrix f(beta A) for the exp or df scheme.
inline Eigen::MatrixXd communicability(const EigenDecomposition& eig, const WeightScheme& scheme, double beta,
                                       DfForm form = DfForm::tanh) {
    detail::require_walk_scheme(scheme);
    return matrix_function(eig, scheme, beta, form);
}

/// Communicability for selected pairs only, each as a signed-log sum.
inline std::vector<SignedLogValue> communicability(const EigenDecomposition& eig, const WeightScheme& scheme,
                                                   double beta,
                                                   const std::vector<std::pair<NodeId, NodeId>>& pairs,
                                                   DfForm form = DfForm::tanh) {
    detail::require_walk_scheme(scheme);
    const auto n = static_cast<NodeId>(eig.size());
    const auto w = detail::spectral_weights(eig, scheme, beta, form);
    std::vector<SignedLogValue> out;
    out.reserve(pairs.size());
    for (const auto& [p, q] : pairs) {
        if (p >= n || q >= n) {
            throw GraphError("communicability pair out of range");
        }
        SignedLogSum s;
        for (Eigen::Index j = 0; j < eig.size(); ++j) {
            const double prod = eig.vectors(static_cast<Eigen::Index>(p), j) * eig.vectors(static_cast<Eigen::Index>(q), j);
            s.add(SignedLogValue::from_double(prod) * w[static_cast<std::size_t>(j)]);
        }
        out.push_back(s.result());
    }
    return out;
}

/// Diagonal of f(beta A): sum_j psi_{j,p}^2 f(lambda_j). Always accumulated
/// in signed-log form; Domain::linear additionally requires every value to
/// fit a double (OverflowError otherwise). At beta = 0 every eigenvalue gets
/// the same weight f(0), so each node gets f(0) exactly.
inline CentralityVector subgraph_centrality(const EigenDecomposition& eig, const WeightScheme& scheme, double beta,
                                            Domain domain = Domain::log, DfForm form = DfForm::tanh) {
    const auto w = detail::spectral_weights(eig, scheme, beta, form);
    CentralityVector out;
    out.scheme = scheme;
    out.beta = beta;
    out.domain = domain;
    out.form = form;
    out.values.reserve(static_cast<std::size_t>(eig.size()));
    if (beta == 0.0) {
        out.values.assign(static_cast<std::size_t>(eig.size()), spectral_weight(scheme, 0.0, 0.0, form));
        return out;
    }
    for (Eigen::Index p = 0; p < eig.size(); ++p) {
        SignedLogSum s;
        for (Eigen::Index j = 0; j < eig.size(); ++j) {
            const double x = eig.vectors(p, j);
            if (x == 0.0) {
                continue;
            }
            s.add(SignedLogValue::from_log(1, 2.0 * std::log(std::abs(x))) * w[static_cast<std::size_t>(j)]);
        }
        out.values.push_back(s.result());
    }
    if (domain == Domain::linear) {
        (void)out.linear();
    }
    return out;
}

/// Trace of f(beta A): EE for exp, Gamma for df.
inline SignedLogValue estrada_index(const EigenDecomposition& eig, const WeightScheme& scheme, double beta,
                                    DfForm form = DfForm::tanh) {
    SignedLogSum s;
    for (const auto& w : detail::spectral_weights(eig, scheme, beta, form)) {
        s.add(w);
    }
    return s.result();
}

/// Gamma(K_n), the largest Gamma(G) over graphs on n nodes:
/// 1/2 (sqrt(2 pi) tanh(kTanhScale (n-1) / sqrt 2) + 2) e^{(n-1)^2 / 2}
///   + (n-1)/2 (sqrt(2 pi) tanh(-kTanhScale / sqrt 2) + 2) e^{1/2}.
inline SignedLogValue gamma_upper_bound(long n) {
    if (n < 1) {
        throw DomainError("gamma_upper_bound needs n >= 1");
    }
    const double m = static_cast<double>(n - 1);
    const double root_2pi = std::sqrt(2.0 * std::numbers::pi);
    const double head = 0.5 * (root_2pi * std::tanh(kTanhScale * m / std::numbers::sqrt2) + 2.0);
    const double tail = 0.5 * m * (root_2pi * std::tanh(-kTanhScale / std::numbers::sqrt2) + 2.0);
    return SignedLogValue::from_log(1, std::log(head) + 0.5 * m * m) +
           SignedLogValue::from_double(tail) * SignedLogValue::from_log(1, 0.5);
}

/// e I_0(1) (n + 1/2) - e^2 / 2, the large-n growth of Gamma(P_n). Not a
/// lower bound for small n: Gamma(P_4) ~ 9.83 is below its value 11.79.
inline double gamma_lower_bound_asymptotic(long n) {
    if (n < 1) {
        throw DomainError("gamma_lower_bound_asymptotic needs n >= 1");
    }
    const double e = std::numbers::e;
    return e * bessel_i(0, 1.0) * (static_cast<double>(n) + 0.5) - 0.5 * e * e;
}

struct IndexBounds {
    SignedLogValue upper;
    double lower_asymptotic = 0.0;
};

struct IndexReport {
    SignedLogValue estrada;
    CentralityVector per_node;
    /// Present for the df scheme at beta = 1 in tanh form.
    std::optional<IndexBounds> bounds;
};

inline IndexReport index_report(const EigenDecomposition& eig, const WeightScheme& scheme, double beta,
                                DfForm form = DfForm::tanh) {
    IndexReport r;
    r.per_node = subgraph_centrality(eig, scheme, beta, Domain::log, form);
    r.estrada = estrada_index(eig, scheme, beta, form);
    if (std::holds_alternative<DoubleFactorial>(scheme) && beta == 1.0 && form == DfForm::tanh) {
        const long n = static_cast<long>(eig.size());
        r.bounds = IndexBounds{gamma_upper_bound(n), gamma_lower_bound_asymptotic(n)};
    }
    return r;
}

/// 1/k!! - 1/k! = ((k-1)!! - 1) / k!, positive for k >= 3 and zero below.
inline SignedLogValue delta_coefficient(long k) {
    if (k < 3) {
        return SignedLogValue::zero();
    }
    const double log_df = double_factorial(k).log_magnitude();
    const double log_df_prev = double_factorial(k - 1).log_magnitude();
    return SignedLogValue::from_log(1, -log_df + std::log1p(-std::exp(-log_df_prev)));
}

struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    friend bool operator==(Rational, Rational) = default;
};

/// delta_coefficient(k) as a reduced fraction, 3 <= k <= 20.
inline Rational delta_coefficient_exact(long k) {
    if (k < 3 || k > 20) {
        throw DomainError("delta_coefficient_exact needs 3 <= k <= 20");
    }
    std::uint64_t df_prev = 1;
    for (long i = k - 1; i > 1; i -= 2) {
        df_prev *= static_cast<std::uint64_t>(i);
    }
    std::uint64_t fact = 1;
    for (long i = 2; i <= k; ++i) {
        fact *= static_cast<std::uint64_t>(i);
    }
    const std::uint64_t num = df_prev - 1;
    const std::uint64_t g = std::gcd(num, fact);
    return {num / g, fact / g};
}

struct DifferenceTerm {
    long k = 0;
    SignedLogValue coefficient;
    SignedLogValue term;
    SignedLogValue partial_sum;
};

struct DifferenceSeries {
    std::vector<DifferenceTerm> terms;  // k = 3..K
    SignedLogValue delta;               // partial sum at K
    SignedLogValue closed_form;         // exact (erf) df value minus exp value
};

/// Delta_p = Gamma_pp - G_pp = sum_{k >= 3} (1/k!! - 1/k!) (A^k)_pp, truncated
/// at K. Walk counts come from repeated matrix-vector products kept in
/// rescaled form; closed_form uses the exact erf form at beta = 1.
inline DifferenceSeries delta_series(const Graph& g, NodeId p, long max_power) {
    if (max_power < 3) {
        throw DomainError("delta_series needs K >= 3");
    }
    if (p >= g.node_count()) {
        throw GraphError("delta_series node out of range");
    }
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    x(static_cast<Eigen::Index>(p)) = 1.0;
    double log_scale = 0.0;

    DifferenceSeries out;
    SignedLogValue partial;
    for (long k = 1; k <= max_power; ++k) {
        Eigen::VectorXd next = Eigen::VectorXd::Zero(n);
        for (Eigen::Index u = 0; u < n; ++u) {
            double acc = 0.0;
            for (NodeId v : g.neighbors(static_cast<NodeId>(u))) {
                acc += x(static_cast<Eigen::Index>(v));
            }
            next(u) = acc;
        }
        x = std::move(next);
        const double m = x.maxCoeff();
        if (m == 0.0) {
            break;  // no walks of this length or longer
        }
        if (m > 1e100) {
            x /= m;
            log_scale += std::log(m);
        }
        if (k < 3) {
            continue;
        }
        const double walks = x(static_cast<Eigen::Index>(p));
        const SignedLogValue c = delta_coefficient(k);
        const SignedLogValue term =
            walks > 0.0 ? c * SignedLogValue::from_log(1, std::log(walks) + log_scale) : SignedLogValue::zero();
        partial += term;
        out.terms.push_back({k, c, term, partial});
    }
    out.delta = partial;

    const auto eig = eigendecompose(g);
    const auto df = subgraph_centrality(eig, DoubleFactorial{}, 1.0, Domain::log, DfForm::erf);
    const auto ex = subgraph_centrality(eig, Factorial{}, 1.0, Domain::log);
    out.closed_form = df.values[p] - ex.values[p];
    return out;
}

/// Gamma(G, beta) - EE(G, beta) = sum_{k >= 3} (1/k!! - 1/k!) beta^k tr(A^k),
/// truncated at K. closed_form uses the exact erf form.
inline DifferenceSeries estrada_difference_series(const EigenDecomposition& eig, double beta, long max_power) {
    if (max_power < 3) {
        throw DomainError("estrada_difference_series needs K >= 3");
    }
    DifferenceSeries out;
    SignedLogValue partial;
    const double log_beta = beta == 0.0 ? 0.0 : std::log(std::abs(beta));
    for (long k = 3; k <= max_power; ++k) {
        const SignedLogValue c = delta_coefficient(k);
        SignedLogValue term;
        if (beta != 0.0) {
            const int beta_sign = (beta < 0.0 && k % 2 == 1) ? -1 : 1;
            term = c * SignedLogValue::from_log(beta_sign, static_cast<double>(k) * log_beta) *
                   trace_power(eig.values, k);
        }
        partial += term;
        out.terms.push_back({k, c, term, partial});
    }
    out.delta = partial;
    out.closed_form =
        estrada_index(eig, DoubleFactorial{}, beta, DfForm::erf) - estrada_index(eig, Factorial{}, beta);
    return out;
}

} // namespace dfwalk
