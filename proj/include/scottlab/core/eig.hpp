#pragma once

#include <span>
#include <vector>

#include "scottlab/core/matrix.hpp"

namespace scottlab::core {

struct EigResult {
    std::vector<double> values;  // ascending
    Matrix vectors;              // orthonormal columns
};

/// Full symmetric eigendecomposition (divide and conquer).  Rejects inputs
/// whose asymmetry exceeds 1e-12 * max|entries|, reporting the defect.
EigResult eig_sym(const SymmetricMatrix& m);

/// Eigenvalues only, ascending.
std::vector<double> eigvals_sym(const SymmetricMatrix& m);

/// Symmetric tridiagonal solvers (MRRR).  `off` has length n-1.
EigResult eig_tridiag(std::span<const double> diag, std::span<const double> off);
std::vector<double> eigvals_tridiag(std::span<const double> diag, std::span<const double> off);
std::vector<double> lowest_eigvals_tridiag(std::span<const double> diag,
                                           std::span<const double> off, int k);

struct HermEigResult {
    std::vector<double> values;
    CplxMatrix vectors;
};

/// Hermitian eigendecomposition; overwrites `a` with the eigenvectors to keep
/// the peak footprint at one matrix.
std::vector<double> eig_herm_inplace(CplxMatrix& a);
std::vector<double> eigvals_herm(CplxMatrix a);

/// Sum of min(lambda, 0) in the given (ascending) order.  Deterministic.
double negative_part_sum(std::span<const double> eigenvalues);

/// C = A * B and C = A * B^T on column-major data.
Matrix gemm(const Matrix& a, const Matrix& b);
Matrix gemm_abt(const Matrix& a, const Matrix& b);
/// C = A * B^H
CplxMatrix gemm_abh(const CplxMatrix& a, const CplxMatrix& b);

}  // namespace scottlab::core
