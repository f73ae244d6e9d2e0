#pragma once

#include <vector>

#include "scottlab/core/matrix.hpp"

namespace scottlab::ineq {

/// Residual max_ij |(sum_j theta_j h theta_j + 1/2 sum_j [theta_j,[theta_j,h]] - h)_ij|
/// for diagonal partitions theta_j.  An exact operator identity whenever
/// sum_j theta_j^2 = 1; partitions violating that to more than 1e-12 are
/// rejected.
double ims_identity_test(const core::SymmetricMatrix& h,
                         const std::vector<std::vector<double>>& partition);

}  // namespace scottlab::ineq
