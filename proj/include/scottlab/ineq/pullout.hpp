#pragma once

#include "scottlab/ineq/report.hpp"

namespace scottlab::ineq {

/// Random battery for (sum_n S_n A_n S_n)^a >= sum_n S_n A_n^a S_n with
/// bounded symmetric S_n resolving sum S_n^2 = 1 and PSD A_n.  Margin per
/// trial: min eig(LHS - RHS) / ||LHS||.  Construction: S_n is the PSD square
/// root of Q^{-1/2} G_n Q^{-1/2} for random PSD G_n, Q = sum G_n; draws whose
/// resolution defect exceeds 1e-12 are redrawn and counted.
InequalityReport pullout_test(int n, int parts, double a, int trials, unsigned seed);

}  // namespace scottlab::ineq
