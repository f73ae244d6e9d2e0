#include "scottlab/core/cutoff.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scottlab::core {

namespace {

double smoothstep5(double x) { return x * x * x * (10.0 + x * (-15.0 + 6.0 * x)); }
double smoothstep7(double x) { return x * x * x * x * (35.0 + x * (-84.0 + x * (70.0 - 20.0 * x))); }

double switch_sigma(CutoffProfile::Kind k, double t) {
    if (t <= 1.0) return 0.0;
    if (t >= 2.0) return 1.0;
    const double x = t - 1.0;
    return k == CutoffProfile::Kind::smoothstep7 ? smoothstep7(x) : smoothstep5(x);
}

}  // namespace

CutoffProfile CutoffProfile::by_id(std::string_view id) {
    if (id == "cos-smoothstep5") return CutoffProfile(Kind::smoothstep5);
    if (id == "cos-smoothstep7") return CutoffProfile(Kind::smoothstep7);
    if (id == "sharp") return CutoffProfile(Kind::sharp);
    if (id == "zero") return CutoffProfile(Kind::zero);
    throw std::invalid_argument("unknown cutoff profile id: " + std::string(id));
}

std::string_view CutoffProfile::id() const {
    switch (kind_) {
        case Kind::smoothstep5: return "cos-smoothstep5";
        case Kind::smoothstep7: return "cos-smoothstep7";
        case Kind::sharp: return "sharp";
        case Kind::zero: return "zero";
    }
    return "?";
}

double CutoffProfile::theta(double t) const {
    if (kind_ == Kind::zero) return 0.0;
    if (kind_ == Kind::sharp) return t <= 1.0 ? 1.0 : 0.0;
    if (t <= 1.0) return 1.0;
    if (t >= 2.0) return 0.0;  // exact zero: support trimming relies on it
    return std::cos(0.5 * std::numbers::pi * switch_sigma(kind_, t));
}

double CutoffProfile::partner(double t) const {
    if (kind_ == Kind::zero) return 1.0;
    if (kind_ == Kind::sharp) return t <= 1.0 ? 0.0 : 1.0;
    if (t <= 1.0) return 0.0;
    if (t >= 2.0) return 1.0;
    return std::sin(0.5 * std::numbers::pi * switch_sigma(kind_, t));
}

std::vector<double> CutoffProfile::sample(const RadialGrid& grid, double R) const {
    if (!(R > 0.0)) throw std::invalid_argument("CutoffProfile::sample: R must be positive");
    return grid.sample([&](double r) { return theta(r / R); });
}

std::vector<double> CutoffProfile::sample_support_indicator(const RadialGrid& grid,
                                                            double R) const {
    const double edge = support_scale() * R;
    return grid.sample([&](double r) { return r <= edge ? 1.0 : 0.0; });
}

}  // namespace scottlab::core
