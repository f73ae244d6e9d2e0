#pragma once

#include "scottlab/core/cutoff.hpp"
#include "scottlab/core/grid.hpp"

namespace scottlab::scott {

/// I_R = (2/(2 pi)^3) int int phi_R(x)^2 (p^2/2 - 1/|x|)_- dx dp, evaluated
/// through the closed-form p-integral as the semiclassical energy of V = 1/r
/// weighted by phi_R^2.  Scales like -sqrt(R).  Requires the grid to cover
/// the support of phi_R.
double i_r(const core::CutoffProfile& profile, double R, const core::RadialGrid& grid);

}  // namespace scottlab::scott
