#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "chainspec/errors.hpp"
#include "chainspec/graph_matrices.hpp"

namespace chainspec {

// Floating-point eigensolver used to cross-check the exact pipeline: cyclic
// Jacobi rotations sweeping the upper triangle row by row.  Returns the
// eigenvalues sorted descending.  Converged once the off-diagonal Frobenius
// norm drops below tol; raises NoConvergence after 100 full sweeps.
inline std::vector<double> jacobi_eigenvalues(const SymmetricIntMatrix& m, double tol = 1e-10) {
    if (!m.is_symmetric())
        raise(errc::precondition_violated, "jacobi_eigenvalues: matrix is not symmetric");
    const std::size_t n = static_cast<std::size_t>(m.rows());
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = m.at(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j))
                               .convert_to<double>();

    auto off_norm = [&] {
        double sum = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                sum += 2.0 * a[p * n + q] * a[p * n + q];
        return std::sqrt(sum);
    };

    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_norm() < tol) {
            std::vector<double> eig(n);
            for (std::size_t i = 0; i < n; ++i)
                eig[i] = a[i * n + i];
            std::sort(eig.begin(), eig.end(), std::greater<>());
            return eig;
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (apq == 0.0) continue;
                double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                // For |theta| beyond sqrt range the quadratic formula collapses.
                double t;
                if (std::abs(theta) > 1e150)
                    t = 1.0 / (2.0 * theta);
                else if (theta >= 0.0)
                    t = 1.0 / (theta + std::sqrt(theta * theta + 1.0));
                else
                    t = -1.0 / (-theta + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double aip = a[i * n + p];
                    double aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[p * n + i] = a[i * n + p];
                    a[i * n + q] = s * aip + c * aiq;
                    a[q * n + i] = a[i * n + q];
                }
            }
    }
    raise(errc::no_convergence, "jacobi_eigenvalues: off-diagonal norm still above tol after 100 sweeps");
}

} // namespace chainspec
