// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include <Eigen/Eigenvalues>

#include "graph.hpp"

namespace dfwalk {

/// Spectrum of a symmetric adjacency matrix, A = V diag(values) V^T.
///
/// `values` is sorted non-increasing; column j of `vectors` pairs with
/// values(j). Each eigenvector is oriented so that its component sum is
/// positive (or, if the sum vanishes, its first non-negligible component is
/// positive); for a connected graph this makes the Perron vector
/// non-negative.
struct EigenDecomposition {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;

    Eigen::Index size() const noexcept { return values.size(); }
    double spectral_radius() const { return values.size() == 0 ? 0.0 : values(0); }
};

namespace detail {

inline void orient_columns(Eigen::MatrixXd& v) {
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
        auto col = v.col(j);
        const double sum = col.sum();
        double sign = 1.0;
        if (std::abs(sum) > 1e-8) {
            sign = sum < 0.0 ? -1.0 : 1.0;
        } else {
            for (Eigen::Index i = 0; i < col.size(); ++i) {
                if (std::abs(col(i)) > 1e-8) {
                    sign = col(i) < 0.0 ? -1.0 : 1.0;
                    break;
                }
            }
        }
        col *= sign;
    }
}

inline void require_nonempty(const Graph& g) {
    if (g.node_count() == 0) {
        throw DomainError("eigendecomposition needs at least 1 node");
    }
}

} // namespace detail

inline EigenDecomposition eigendecompose(const Graph& g) {
    detail::require_nonempty(g);
    const Eigen::MatrixXd a = g.adjacency_matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("symmetric eigensolver did not converge");
    }
    // Eigen returns ascending order.
    EigenDecomposition out;
    out.values = solver.eigenvalues().reverse();
    out.vectors = solver.eigenvectors().rowwise().reverse();
    detail::orient_columns(out.vectors);
    if (g.node_count() > 1 && is_connected(g)) {
        // Perron vector is strictly positive; clear round-off sign noise.
        out.vectors.col(0) = out.vectors.col(0).cwiseMax(0.0);
    }
    return out;
}

/// Eigenvalues only, non-increasing. Cheaper than eigendecompose for large n.
inline Eigen::VectorXd eigenvalues(const Graph& g) {
    detail::require_nonempty(g);
    const Eigen::MatrixXd a = g.adjacency_matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("symmetric eigensolver did not converge");
    }
    return solver.eigenvalues().reverse();
}

inline double spectral_radius(const Graph& g) {
    return eigenvalues(g)(0);
}

} // namespace dfwalk
