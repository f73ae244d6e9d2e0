#include "scottlab/ineq/ims.hpp"

#include <cmath>
#include <stdexcept>

namespace scottlab::ineq {

double ims_identity_test(const core::SymmetricMatrix& h,
                         const std::vector<std::vector<double>>& partition) {
    const int n = h.order();
    if (partition.empty()) throw std::invalid_argument("ims_identity_test: empty partition");
    for (const auto& theta : partition)
        if (static_cast<int>(theta.size()) != n)
            throw std::invalid_argument("ims_identity_test: partition length mismatch");
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (const auto& theta : partition) s += theta[i] * theta[i];
        if (std::fabs(s - 1.0) > 1e-12)
            throw std::invalid_argument("ims_identity_test: partition defect, sum theta^2 != 1");
    }

    // (theta h theta)_ij = theta_i theta_j h_ij and
    // ([theta,[theta,h]])_ij = (theta_i - theta_j)^2 h_ij, so the whole
    // residual is elementwise in h.
    double worst = 0.0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            double factor = -1.0;
            for (const auto& theta : partition) {
                const double d = theta[i] - theta[j];
                factor += theta[i] * theta[j] + 0.5 * d * d;
            }
            worst = std::max(worst, std::fabs(h(i, j) * factor));
        }
    return worst;
}

}  // namespace scottlab::ineq
