#include "scottlab/ineq/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace scottlab::ineq {

MonotoneShiftReport monotone_shift_test(int samples, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> a_draw(-10.0, 10.0);
    std::uniform_real_distribution<double> xi_draw(0.0, 20.0);

    MonotoneShiftReport rep;
    rep.samples = samples;
    rep.worst_gap = 1e300;
    for (int k = 0; k < samples; ++k) {
        const double a = a_draw(rng);
        double xi1 = xi_draw(rng), xi2 = xi_draw(rng);
        if (xi1 > xi2) std::swap(xi1, xi2);
        const double f1 = std::sqrt(a * a + xi1 * xi1) - xi1;
        const double f2 = std::sqrt(a * a + xi2 * xi2) - xi2;
        const double gap = f1 - f2;
        rep.worst_gap = std::min(rep.worst_gap, gap);
        if (gap < -1e-14) ++rep.violations;
    }
    return rep;
}

}  // namespace scottlab::ineq
