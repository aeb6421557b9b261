// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graph.hpp"
#include "signed_log.hpp"
#include "spectral.hpp"
#include "weights.hpp"

namespace dfwalk {

namespace detail {

inline OverflowError overflow_error(const char* what) {
    return OverflowError(std::string(what) +
                         " has non-finite entries; use the log-domain index functions or a smaller beta");
}

inline void check_finite(const Eigen::MatrixXd& m, const char* what) {
    if (!m.allFinite()) {
        throw overflow_error(what);
    }
}

} // namespace detail

/// V diag(f(lambda_j)) V^T for a per-eigenvalue function returning
/// SignedLogValue. Throws OverflowError if any weight or entry is not a
/// finite double.
template <class F>
Eigen::MatrixXd spectral_matrix(const EigenDecomposition& eig, F&& weight, const char* what = "matrix function") {
    Eigen::VectorXd w(eig.size());
    for (Eigen::Index j = 0; j < eig.size(); ++j) {
        const SignedLogValue v = weight(eig.values(j));
        if (!v.is_finite_as_double()) {
            throw detail::overflow_error(what);
        }
        w(j) = v.to_double();
    }
    Eigen::MatrixXd m = eig.vectors * w.asDiagonal() * eig.vectors.transpose();
    detail::check_finite(m, what);
    return m;
}

/// f(A) for a walk-weight scheme: sum_k c_k beta^k A^k evaluated spectrally.
inline Eigen::MatrixXd matrix_function(const EigenDecomposition& eig, const WeightScheme& scheme, double beta,
                                       DfForm form = DfForm::tanh) {
    return spectral_matrix(
        eig, [&](double x) { return spectral_weight(scheme, x, beta, form); }, "matrix function");
}

/// exp(beta A).
inline Eigen::MatrixXd matrix_exp(const EigenDecomposition& eig, double beta) {
    return spectral_matrix(
        eig, [beta](double x) { return SignedLogValue::from_log(1, beta * x); }, "exp(beta A)");
}

/// Exact double-factorial function sum_k beta^k A^k / k!!, i.e.
/// 1/2 [sqrt(2 pi) erf(beta A / sqrt 2) + 2I] exp(beta^2 A^2 / 2).
inline Eigen::MatrixXd df_matrix_exact(const EigenDecomposition& eig, double beta) {
    return spectral_matrix(
        eig, [beta](double x) { return spectral_weight(DoubleFactorial{}, x, beta, DfForm::erf); },
        "double-factorial matrix (erf form)");
}

/// Double-factorial function with erf replaced by tanh(kTanhScale * .).
inline Eigen::MatrixXd df_matrix_tanh(const EigenDecomposition& eig, double beta) {
    return spectral_matrix(
        eig, [beta](double x) { return spectral_weight(DoubleFactorial{}, x, beta, DfForm::tanh); },
        "double-factorial matrix (tanh form)");
}

/// Katz resolvent (I - alpha A)^{-1}; needs 0 < alpha < 1 / lambda_1.
/// alpha * lambda_1 within 1e-12 of 1 counts as divergent, since the
/// computed lambda_1 carries rounding error of that order.
inline Eigen::MatrixXd katz_resolvent(const EigenDecomposition& eig, double alpha) {
    const double lambda1 = eig.spectral_radius();
    if (!(alpha > 0.0) || (lambda1 > 0.0 && !(alpha * lambda1 < 1.0 - 1e-12))) {
        throw DomainError("Katz series diverges: alpha must lie in (0, 1/lambda_1) = (0, " +
                          std::to_string(lambda1 > 0.0 ? 1.0 / lambda1 : std::numeric_limits<double>::infinity()) +
                          ")");
    }
    return spectral_matrix(
        eig, [alpha](double x) { return SignedLogValue::from_log(1, -std::log(1.0 - alpha * x)); },
        "Katz resolvent");
}

/// sum_{k >= t} A^k / (k - t)! = A^t exp(A).
inline Eigen::MatrixXd shifted_factorial_matrix(const EigenDecomposition& eig, unsigned t) {
    return spectral_matrix(
        eig, [t](double x) { return spectral_weight(ShiftedFactorial{t}, x, 1.0); }, "shifted factorial matrix");
}

/// A^t (I + A e^A - e^A). Kept for comparison; this is not the sum of the
/// 1/(k - t)! series (see shifted_factorial_matrix).
inline Eigen::MatrixXd shifted_factorial_closed_form(const EigenDecomposition& eig, unsigned t) {
    return spectral_matrix(
        eig,
        [t](double x) {
            const double base = 1.0 + (x - 1.0) * std::exp(x);
            const double power = t == 0 ? 1.0 : std::pow(x, static_cast<double>(t));
            return SignedLogValue::from_double(power * base);
        },
        "shifted factorial closed form");
}

struct SeriesResult {
    Eigen::MatrixXd sum;
    /// max |entry| of the k = K term, to judge truncation.
    double last_term_max_abs = 0.0;
};

/// Brute-force partial sum sum_{k=0}^{K} c_k beta^k A^k by repeated
/// multiplication, in long double with per-entry Kahan compensation.
/// Independent of the eigendecomposition; used as ground truth.
inline SeriesResult series_oracle(const Graph& g, const WeightScheme& scheme, double beta, int max_power) {
    using MatrixXl = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    if (max_power < 0) {
        throw DomainError("series_oracle needs K >= 0");
    }
    const auto n = static_cast<Eigen::Index>(g.node_count());
    const MatrixXl a = g.adjacency_matrix().cast<long double>();
    MatrixXl power = MatrixXl::Identity(n, n);  // A^k / exp(log_scale)
    long double log_scale = 0.0L;
    MatrixXl sum = MatrixXl::Zero(n, n);
    MatrixXl comp = MatrixXl::Zero(n, n);
    long double last_max = 0.0L;
    const long double log_beta = beta == 0.0 ? 0.0L : std::log(std::abs(static_cast<long double>(beta)));

    for (int k = 0; k <= max_power; ++k) {
        if (k > 0) {
            power = power * a;
            const long double m = power.cwiseAbs().maxCoeff();
            if (m > 1e100L) {
                power /= m;
                log_scale += std::log(m);
            }
        }
        const SignedLogValue c = coefficient(scheme, k);
        if (c.is_zero() || (beta == 0.0 && k > 0)) {
            last_max = 0.0L;
            continue;
        }
        const long double beta_sign = (beta < 0.0 && k % 2 == 1) ? -1.0L : 1.0L;
        const long double factor =
            beta_sign * c.sign() *
            std::exp(static_cast<long double>(c.log_magnitude()) + static_cast<long double>(k) * log_beta + log_scale);
        const MatrixXl term = factor * power;
        // Kahan step, entry by entry.
        const MatrixXl y = term - comp;
        const MatrixXl t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        last_max = term.cwiseAbs().maxCoeff();
    }

    SeriesResult out;
    out.sum = sum.cast<double>();
    out.last_term_max_abs = static_cast<double>(last_max);
    detail::check_finite(out.sum, "series partial sum");
    return out;
}

/// tr(A^k) = sum_j lambda_j^k in log form. Closed-walk counts are
/// non-negative integers, so a result below 1/2, or within the rounding noise
/// of the cancelling powers, resolves to exactly zero.
inline SignedLogValue trace_power(const Eigen::VectorXd& eigenvalues, long k) {
    if (k == 0) {
        return SignedLogValue::from_double(static_cast<double>(eigenvalues.size()));
    }
    SignedLogSum s;
    for (Eigen::Index j = 0; j < eigenvalues.size(); ++j) {
        const double x = eigenvalues(j);
        if (x == 0.0) {
            continue;
        }
        const int sign = (x < 0.0 && k % 2 == 1) ? -1 : 1;
        s.add_log(sign, static_cast<double>(k) * std::log(std::abs(x)));
    }
    const SignedLogValue r = s.result();
    const double noise =
        std::max(std::log(0.5), std::log(64.0 * static_cast<double>(k) * std::numeric_limits<double>::epsilon()) +
                                    s.log_abs_total());
    if (r.is_zero() || r.log_magnitude() <= noise) {
        return SignedLogValue::zero();
    }
    return r;
}

struct DecayPoint {
    long k = 0;
    SignedLogValue value;  // c_k tr(A^k)
};

/// c_k tr(A^k) for k = 1..k_max, entirely in log arithmetic.
inline std::vector<DecayPoint> walk_decay_profile(const EigenDecomposition& eig, const WeightScheme& scheme,
                                                  long k_max) {
    if (k_max < 1) {
        throw DomainError("walk_decay_profile needs k_max >= 1");
    }
    std::vector<DecayPoint> out;
    out.reserve(static_cast<std::size_t>(k_max));
    for (long k = 1; k <= k_max; ++k) {
        out.push_back({k, coefficient(scheme, k) * trace_power(eig.values, k)});
    }
    return out;
}

} // namespace dfwalk
