#pragma once

#include <stdexcept>
#include <vector>

namespace scottlab::core {

/// Uniform radial mesh r_i = (i+1)*spacing for i = 0..n_points-1, carrying
/// reduced wavefunctions u(r) = r*psi(r) with implicit Dirichlet zeros at
/// r = 0 and r_max = (n_points+1)*spacing.
class RadialGrid {
  public:
    RadialGrid(double spacing, int n_points) : spacing_(spacing), n_(n_points) {
        if (!(spacing > 0.0)) throw std::invalid_argument("RadialGrid: spacing must be positive");
        if (n_points < 8) throw std::invalid_argument("RadialGrid: need at least 8 points");
    }

    double spacing() const { return spacing_; }
    int n_points() const { return n_; }
    double r(int i) const { return spacing_ * (i + 1); }
    double r_last() const { return spacing_ * n_; }
    double r_max() const { return spacing_ * (n_ + 1); }

    std::vector<double> points() const {
        std::vector<double> p(n_);
        for (int i = 0; i < n_; ++i) p[i] = r(i);
        return p;
    }

    template <class F>
    std::vector<double> sample(F&& f) const {
        std::vector<double> v(n_);
        for (int i = 0; i < n_; ++i) v[i] = f(r(i));
        return v;
    }

  private:
    double spacing_;
    int n_;
};

/// Halves the spacing keeping r_max fixed (nested refinement).
inline RadialGrid refined(const RadialGrid& g) {
    return RadialGrid(g.spacing() / 2.0, 2 * g.n_points() + 1);
}

/// Grid reaching past `extent` with the given spacing.
inline RadialGrid grid_for_extent(double spacing, double extent) {
    int n = static_cast<int>(extent / spacing) + 1;
    return RadialGrid(spacing, n < 8 ? 8 : n);
}

}  // namespace scottlab::core
