#include "scottlab/pauli/spinor.hpp"

#include <stdexcept>

namespace scottlab::pauli {

namespace {
using cplx = std::complex<double>;
}

SpinorOperator build_pauli(GaugeField gauge, std::vector<double> potential) {
    if (static_cast<int>(potential.size()) != gauge.box.n_sites())
        throw std::invalid_argument("build_pauli: potential length does not match box");
    return {std::move(gauge), std::move(potential)};
}

void SpinorOperator::apply(const cplx* x, cplx* y) const {
    const int n = gauge.box.sites_per_side;
    const double inv_a2 = 1.0 / (gauge.box.spacing() * gauge.box.spacing());
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const int s = gauge.box.index(i, j, k);
                const int up[3] = {gauge.box.index((i + 1) % n, j, k),
                                   gauge.box.index(i, (j + 1) % n, k),
                                   gauge.box.index(i, j, (k + 1) % n)};
                const int dn[3] = {gauge.box.index((i + n - 1) % n, j, k),
                                   gauge.box.index(i, (j + n - 1) % n, k),
                                   gauge.box.index(i, j, (k + n - 1) % n)};
                for (int spin = 0; spin < 2; ++spin) {
                    cplx acc = (6.0 * inv_a2 + potential[s]) * x[2 * s + spin];
                    for (int d = 0; d < 3; ++d)
                        acc -= inv_a2 * (gauge.link[d][s] * x[2 * up[d] + spin] +
                                         std::conj(gauge.link[d][dn[d]]) * x[2 * dn[d] + spin]);
                    y[2 * s + spin] = acc;
                }
                // Zeeman: -sigma.B
                const double bx = gauge.site_b[0][s], by = gauge.site_b[1][s],
                             bz = gauge.site_b[2][s];
                const cplx x0 = x[2 * s], x1 = x[2 * s + 1];
                y[2 * s] -= bz * x0 + cplx(bx, -by) * x1;
                y[2 * s + 1] -= cplx(bx, by) * x0 - bz * x1;
            }
}

core::CplxMatrix SpinorOperator::dense() const {
    const int d = dim();
    if (d > 6912)
        throw std::invalid_argument("SpinorOperator::dense: dense-eigensolve guard exceeded");
    core::CplxMatrix h(d, d);
    const int n = gauge.box.sites_per_side;
    const double inv_a2 = 1.0 / (gauge.box.spacing() * gauge.box.spacing());
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const int s = gauge.box.index(i, j, k);
                const int up[3] = {gauge.box.index((i + 1) % n, j, k),
                                   gauge.box.index(i, (j + 1) % n, k),
                                   gauge.box.index(i, j, (k + 1) % n)};
                for (int spin = 0; spin < 2; ++spin) {
                    h(2 * s + spin, 2 * s + spin) += 6.0 * inv_a2 + potential[s];
                    for (int dd = 0; dd < 3; ++dd) {
                        h(2 * s + spin, 2 * up[dd] + spin) -= inv_a2 * gauge.link[dd][s];
                        h(2 * up[dd] + spin, 2 * s + spin) -= inv_a2 * std::conj(gauge.link[dd][s]);
                    }
                }
                const double bx = gauge.site_b[0][s], by = gauge.site_b[1][s],
                             bz = gauge.site_b[2][s];
                h(2 * s, 2 * s) -= bz;
                h(2 * s + 1, 2 * s + 1) += bz;
                h(2 * s, 2 * s + 1) -= cplx(bx, -by);
                h(2 * s + 1, 2 * s) -= cplx(bx, by);
            }
    return h;
}

}  // namespace scottlab::pauli
