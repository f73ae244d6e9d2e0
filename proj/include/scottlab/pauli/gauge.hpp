#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace scottlab::pauli {

/// Periodic N^3 box of side `length`, sites at spacing*(i,j,k).
struct LatticeBox {
    double length = 0.0;
    int sites_per_side = 0;

    LatticeBox(double length, int n);
    double spacing() const { return length / sites_per_side; }
    int n_sites() const { return sites_per_side * sites_per_side * sites_per_side; }
    int index(int i, int j, int k) const {
        const int n = sites_per_side;
        return (k * n + j) * n + i;
    }
};

struct FieldSpec {
    enum class Kind { zero, constant_b, bump };
    Kind kind = Kind::zero;
    int flux_quanta = 0;      // constant B along z: flux per xy plane = 2 pi * quanta
    double amplitude = 0.0;   // bump stream-function amplitude
    double width = 0.0;       // bump Gaussian width

    static FieldSpec zero() { return {}; }
    static FieldSpec constant_b(int quanta) { return {Kind::constant_b, quanta, 0.0, 0.0}; }
    /// From a raw field strength; rejected unless B L^2 is an integer number
    /// of flux quanta (the nearest admissible value is reported).
    static FieldSpec constant_b_strength(double B, const LatticeBox& box);
    static FieldSpec bump(double amplitude, double width) {
        return {Kind::bump, 0, amplitude, width};
    }
    std::string id() const;
};

/// Peierls link phases u_{x,j} (unit modulus) plus the site field B from the
/// discrete curl (plaquette phases), and the field energy sum |B|^2 a^3.
struct GaugeField {
    LatticeBox box{1.0, 8};
    std::array<std::vector<std::complex<double>>, 3> link;
    std::array<std::vector<double>, 3> site_b;
    double field_energy = 0.0;
    std::string spec_id;
};

GaugeField build_gauge(const LatticeBox& box, const FieldSpec& spec);

/// Gauge transform u_{x,j} -> e^{i chi(x)} u_{x,j} e^{-i chi(x+e_j)}; the
/// spectrum of any Pauli operator built on top is invariant.
GaugeField gauge_transformed(const GaugeField& g, const std::vector<double>& chi);

}  // namespace scottlab::pauli
