#include "scottlab/tf/semiclassical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scottlab::tf {

SemiclassicalParams semiclassical_params(double Z_total, std::vector<double> z, double alpha) {
    if (z.empty()) throw std::invalid_argument("semiclassical_params: empty charge vector");
    if (!(Z_total > 0.0)) throw std::invalid_argument("semiclassical_params: Z must be positive");
    if (alpha < 0.0) throw std::invalid_argument("semiclassical_params: alpha must be >= 0");
    double sum = 0.0;
    for (double zk : z) {
        if (!(zk > 0.0)) throw std::invalid_argument("semiclassical_params: z_k must be positive");
        sum += zk;
    }
    if (std::fabs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("semiclassical_params: normalized charges must sum to 1");

    SemiclassicalParams p;
    p.z = std::move(z);
    p.Z_total = Z_total;
    p.alpha = alpha;
    double zmax = 0.0;
    for (double zk : p.z) zmax = std::max(zmax, zk);
    p.kappa = 2.0 / (std::numbers::pi * zmax);  // min_k 2/(pi z_k)
    p.h = std::sqrt(p.kappa) * std::pow(Z_total, -1.0 / 3.0);
    p.beta = std::pow(Z_total, 2.0 / 3.0) * alpha / std::sqrt(p.kappa);
    p.critical = std::fabs(Z_total * zmax * alpha - 2.0 / std::numbers::pi) < 1e-12;
    return p;
}

}  // namespace scottlab::tf
