#include "scottlab/pauli/gauge.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace scottlab::pauli {

namespace {
constexpr double pi = std::numbers::pi;
using cplx = std::complex<double>;
}  // namespace

LatticeBox::LatticeBox(double length_, int n) : length(length_), sites_per_side(n) {
    if (!(length > 0.0)) throw std::invalid_argument("LatticeBox: length must be positive");
    if (n % 2 != 0 || n < 8 || n > 32)
        throw std::invalid_argument("LatticeBox: sites per side must be even and in [8, 32]");
}

FieldSpec FieldSpec::constant_b_strength(double B, const LatticeBox& box) {
    const double quanta = B * box.length * box.length / (2.0 * pi);
    const double nearest = std::round(quanta);
    if (std::fabs(quanta - nearest) > 1e-9 * std::max(1.0, std::fabs(quanta))) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "constant-B flux not quantized: B L^2/(2 pi) = %.6g; nearest admissible "
                      "B = %.9g",
                      quanta, 2.0 * pi * nearest / (box.length * box.length));
        throw std::invalid_argument(buf);
    }
    return constant_b(static_cast<int>(nearest));
}

std::string FieldSpec::id() const {
    switch (kind) {
        case Kind::zero: return "zero";
        case Kind::constant_b: return "constant-b:" + std::to_string(flux_quanta);
        case Kind::bump: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "bump:%.4g:%.4g", amplitude, width);
            return buf;
        }
    }
    return "?";
}

namespace {

// plaquette phase in the (d1, d2) plane based at (i, j, k)
cplx plaquette(const GaugeField& g, int i, int j, int k, int d1, int d2) {
    const int n = g.box.sites_per_side;
    auto shift = [n](int idx[3], int d) {
        idx[d] = (idx[d] + 1) % n;
    };
    int a[3] = {i, j, k};
    const int s0 = g.box.index(a[0], a[1], a[2]);
    int b[3] = {i, j, k};
    shift(b, d1);
    const int s1 = g.box.index(b[0], b[1], b[2]);
    int c[3] = {i, j, k};
    shift(c, d2);
    const int s2 = g.box.index(c[0], c[1], c[2]);
    return g.link[d1][s0] * g.link[d2][s1] * std::conj(g.link[d1][s2]) * std::conj(g.link[d2][s0]);
}

void fill_field_from_plaquettes(GaugeField& g) {
    const int n = g.box.sites_per_side;
    const double a2 = g.box.spacing() * g.box.spacing();
    for (int d = 0; d < 3; ++d) g.site_b[d].assign(g.box.n_sites(), 0.0);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const int s = g.box.index(i, j, k);
                // B_z from the xy plaquette, B_x from yz, B_y from zx
                g.site_b[2][s] = std::arg(plaquette(g, i, j, k, 0, 1)) / a2;
                g.site_b[0][s] = std::arg(plaquette(g, i, j, k, 1, 2)) / a2;
                g.site_b[1][s] = std::arg(plaquette(g, i, j, k, 2, 0)) / a2;
            }
    const double a3 = std::pow(g.box.spacing(), 3);
    double e = 0.0;
    for (int s = 0; s < g.box.n_sites(); ++s)
        e += g.site_b[0][s] * g.site_b[0][s] + g.site_b[1][s] * g.site_b[1][s] +
             g.site_b[2][s] * g.site_b[2][s];
    g.field_energy = a3 * e;
}

}  // namespace

GaugeField build_gauge(const LatticeBox& box, const FieldSpec& spec) {
    GaugeField g;
    g.box = box;
    g.spec_id = spec.id();
    const int n = box.sites_per_side;
    for (int d = 0; d < 3; ++d) g.link[d].assign(box.n_sites(), cplx(1.0, 0.0));

    switch (spec.kind) {
        case FieldSpec::Kind::zero:
            for (int d = 0; d < 3; ++d) g.site_b[d].assign(box.n_sites(), 0.0);
            g.field_energy = 0.0;
            return g;
        case FieldSpec::Kind::constant_b: {
            // 't Hooft twist: uniform flux 2 pi m / N^2 through every xy plaquette
            const double phi_p = 2.0 * pi * spec.flux_quanta / (static_cast<double>(n) * n);
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    for (int i = 0; i < n; ++i) {
                        const int s = box.index(i, j, k);
                        g.link[1][s] = std::polar(1.0, phi_p * i);
                        if (i == n - 1) g.link[0][s] = std::polar(1.0, -phi_p * n * j);
                    }
            break;
        }
        case FieldSpec::Kind::bump: {
            // divergence-free A = curl(0, 0, psi), psi a Gaussian stream
            // function periodized over nearest images so the link phases are
            // smooth across the torus seam
            if (!(spec.width > 0.0)) throw std::invalid_argument("bump field: width must be > 0");
            const double a = box.spacing();
            const double L = box.length;
            const double c = 0.5 * L;
            const double w2 = spec.width * spec.width;
            auto a_field = [&](double x, double y, double z, int dir) {
                double acc = 0.0;
                for (int ix = -1; ix <= 1; ++ix)
                    for (int iy = -1; iy <= 1; ++iy)
                        for (int iz = -1; iz <= 1; ++iz) {
                            const double dx = x - c + L * ix;
                            const double dy = y - c + L * iy;
                            const double dz = z - c + L * iz;
                            const double psi = spec.amplitude *
                                               std::exp(-(dx * dx + dy * dy + dz * dz) / w2);
                            if (dir == 0) acc += -2.0 * dy / w2 * psi;  // d psi / dy
                            if (dir == 1) acc += 2.0 * dx / w2 * psi;   // -d psi / dx
                        }
                return acc;
            };
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    for (int i = 0; i < n; ++i) {
                        const int s = box.index(i, j, k);
                        const double x = a * i, y = a * j, z = a * k;
                        g.link[0][s] = std::polar(1.0, -a * a_field(x + a / 2, y, z, 0));
                        g.link[1][s] = std::polar(1.0, -a * a_field(x, y + a / 2, z, 1));
                        g.link[2][s] = std::polar(1.0, -a * a_field(x, y, z + a / 2, 2));
                    }
            break;
        }
    }
    fill_field_from_plaquettes(g);
    return g;
}

GaugeField gauge_transformed(const GaugeField& g, const std::vector<double>& chi) {
    if (static_cast<int>(chi.size()) != g.box.n_sites())
        throw std::invalid_argument("gauge_transformed: chi length mismatch");
    GaugeField out = g;
    const int n = g.box.sites_per_side;
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const int s = g.box.index(i, j, k);
                const int nb[3] = {g.box.index((i + 1) % n, j, k), g.box.index(i, (j + 1) % n, k),
                                   g.box.index(i, j, (k + 1) % n)};
                for (int d = 0; d < 3; ++d)
                    out.link[d][s] = std::polar(1.0, chi[s]) * g.link[d][s] *
                                     std::polar(1.0, -chi[nb[d]]);
            }
    fill_field_from_plaquettes(out);
    return out;
}

}  // namespace scottlab::pauli
