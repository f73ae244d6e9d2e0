#pragma once

#include <string_view>
#include <vector>

#include "scottlab/core/grid.hpp"

namespace scottlab::core {

/// Radial cutoff profile phi_R(r) = theta(r/R) with theta = 1 on [0,1] and
/// theta = 0 on [2,inf).  theta(t) = cos(pi/2 * sigma(t)) with sigma a smooth
/// monotone switch, so the partner sqrt(1 - theta^2) = sin(pi/2 * sigma(t))
/// is smooth as well.  The `sharp` kind is the indicator of [0,1] (test mode).
class CutoffProfile {
  public:
    enum class Kind { smoothstep5, smoothstep7, sharp, zero };

    explicit CutoffProfile(Kind k = Kind::smoothstep5) : kind_(k) {}
    static CutoffProfile by_id(std::string_view id);

    std::string_view id() const;
    Kind kind() const { return kind_; }

    double theta(double t) const;
    double partner(double t) const;

    /// theta vanishes for t >= support_scale(); chi_R below is the indicator
    /// of [0, support_scale()*R].  The degenerate `zero` profile has empty
    /// support (test mode).
    double support_scale() const {
        if (kind_ == Kind::zero) return 0.0;
        return kind_ == Kind::sharp ? 1.0 : 2.0;
    }

    /// phi_R(r_i) = theta(r_i / R)
    std::vector<double> sample(const RadialGrid& grid, double R) const;
    /// chi_R(r_i), indicator of the support of phi_R
    std::vector<double> sample_support_indicator(const RadialGrid& grid, double R) const;

  private:
    Kind kind_;
};

}  // namespace scottlab::core
