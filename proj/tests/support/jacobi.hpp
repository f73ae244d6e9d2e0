#pragma once

// Test-only eigenvalue oracle: cyclic Jacobi sweeps, independent of the
// LAPACK path used by the library.

#include <algorithm>
#include <cmath>
#include <vector>

#include "scottlab/core/matrix.hpp"

namespace scottlab::testsupport {

inline std::vector<double> jacobi_eigenvalues(core::SymmetricMatrix a, int max_sweeps = 64,
                                              double tol = 1e-14) {
    const int n = a.order();
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int j = 0; j < n; ++j)
            for (int i = j + 1; i < n; ++i) off += 2.0 * a(i, j) * a(i, j);
        double scale = 0.0;
        for (int i = 0; i < n; ++i) scale = std::max(scale, std::fabs(a(i, i)));
        if (std::sqrt(off) <= tol * std::max(scale, 1.0)) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = a(i, i);
    std::sort(vals.begin(), vals.end());
    return vals;
}

}  // namespace scottlab::testsupport
