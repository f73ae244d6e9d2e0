#include "scottlab/scott/ir.hpp"

#include <stdexcept>
#include <vector>

#include "scottlab/simd/kernels.hpp"
#include "scottlab/tf/energy.hpp"

namespace scottlab::scott {

double i_r(const core::CutoffProfile& profile, double R, const core::RadialGrid& grid) {
    if (!(R > 0.0)) throw std::invalid_argument("i_r: R must be positive");
    const double support = profile.support_scale() * R;
    if (grid.r_last() < support - 0.5 * grid.spacing())
        throw std::invalid_argument("i_r: grid support too small for the cutoff");

    const std::vector<double> phi = profile.sample(grid, R);
    std::vector<double> weight(phi.size());
    kern::vmul(weight.data(), phi.data(), phi.data(), phi.size());
    const std::vector<double> coulomb = grid.sample([](double r) { return 1.0 / r; });
    return tf::sc_energy(coulomb, weight, grid);
}

}  // namespace scottlab::scott
