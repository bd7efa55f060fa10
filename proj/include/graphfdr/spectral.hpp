#ifndef GRAPHFDR_SPECTRAL_HPP
#define GRAPHFDR_SPECTRAL_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphfdr {

// Orthonormal eigenbasis of a symmetric shift operator, eigenvalues
// ascending, column k paired with eigenvalues[k]. Columns carry a sign
// convention (first entry with |x| > 1e-12 is positive) so decompositions
// are reproducible across runs.
struct SpectralBasis {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;

    int size() const { return static_cast<int>(eigenvalues.size()); }
    int n_vertices() const { return static_cast<int>(eigenvectors.rows()); }
};

namespace detail {

inline double offdiag_frobenius(const Eigen::MatrixXd& a) {
    const int n = static_cast<int>(a.rows());
    double acc = 0.0;
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) acc += a(p, q) * a(p, q);
    }
    return std::sqrt(2.0 * acc);
}

} // namespace detail

// Dense symmetric eigendecomposition by cyclic Jacobi rotations.
// Deterministic: fixed sweep order, off-diagonal Frobenius threshold 1e-12,
// at most 100 sweeps. Eigenpairs are returned sorted ascending with the
// sign convention applied.
inline SpectralBasis jacobi_eigendecomposition(const Eigen::MatrixXd& matrix) {
    const int n = static_cast<int>(matrix.rows());
    if (n < 1 || matrix.cols() != n) {
        throw std::invalid_argument("jacobi_eigendecomposition: matrix must be square");
    }
    if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, matrix.cwiseAbs().maxCoeff())) {
        throw std::invalid_argument("jacobi_eigendecomposition: matrix must be symmetric");
    }

    constexpr double off_threshold = 1e-12;
    constexpr int max_sweeps = 100;

    Eigen::MatrixXd a = matrix;
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (detail::offdiag_frobenius(a) <= off_threshold) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int i = 0; i < n; ++i) {
                    const double aip = a(i, p);
                    const double aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = a(p, i);
                    const double aqi = a(q, i);
                    a(p, i) = c * api - s * aqi;
                    a(q, i) = s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = v(i, p);
                    const double viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int x, int y) { return a(x, x) < a(y, y); });

    SpectralBasis basis;
    basis.eigenvalues.resize(n);
    basis.eigenvectors.resize(n, n);
    for (int k = 0; k < n; ++k) {
        const int src = order[static_cast<std::size_t>(k)];
        basis.eigenvalues(k) = a(src, src);
        basis.eigenvectors.col(k) = v.col(src);
        for (int i = 0; i < n; ++i) {
            const double x = basis.eigenvectors(i, k);
            if (std::abs(x) > 1e-12) {
                if (x < 0.0) basis.eigenvectors.col(k) = -basis.eigenvectors.col(k);
                break;
            }
        }
    }
    return basis;
}

// Graph Fourier basis: the first bandwidth eigenpairs of the Laplacian
// shift operator, lowest graph frequencies first.
inline SpectralBasis graph_fourier_basis(const Eigen::MatrixXd& lap, int bandwidth) {
    const int n = static_cast<int>(lap.rows());
    if (bandwidth < 1 || bandwidth > n) {
        throw std::invalid_argument("graph_fourier_basis: bandwidth must be in [1, n], got " +
                                    std::to_string(bandwidth));
    }
    SpectralBasis full = jacobi_eigendecomposition(lap);
    if (bandwidth == n) return full;
    SpectralBasis truncated;
    truncated.eigenvalues = full.eigenvalues.head(bandwidth);
    truncated.eigenvectors = full.eigenvectors.leftCols(bandwidth);
    return truncated;
}

} // namespace graphfdr

#endif // GRAPHFDR_SPECTRAL_HPP
