#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace scottlab::core {

/// Dense column-major matrix (LAPACK native layout).
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(j) * rows_ + i]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(j) * rows_ + i]; }
    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }
    double* col(int j) { return a_.data() + static_cast<std::size_t>(j) * rows_; }
    const double* col(int j) const { return a_.data() + static_cast<std::size_t>(j) * rows_; }
    std::size_t size() const { return a_.size(); }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

/// Dense symmetric matrix; both triangles stored, kept in sync by the caller.
class SymmetricMatrix {
  public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int order) : m_(order, order) {}
    explicit SymmetricMatrix(Matrix m);  // throws unless square

    int order() const { return m_.rows(); }
    double& operator()(int i, int j) { return m_(i, j); }
    double operator()(int i, int j) const { return m_(i, j); }
    double* data() { return m_.data(); }
    const double* data() const { return m_.data(); }
    Matrix& storage() { return m_; }
    const Matrix& storage() const { return m_; }

    double max_abs() const;
    /// max_{ij} |a_ij - a_ji|
    double max_asymmetry() const;
    /// true iff max_asymmetry() <= 1e-12 * max_abs()
    bool is_symmetric() const;
    /// replaces a by (a + a^T)/2
    void symmetrize();

  private:
    Matrix m_;
};

/// Dense column-major complex matrix for Hermitian lattice operators.
class CplxMatrix {
  public:
    using value_type = std::complex<double>;
    CplxMatrix() = default;
    CplxMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    value_type& operator()(int i, int j) { return a_[static_cast<std::size_t>(j) * rows_ + i]; }
    value_type operator()(int i, int j) const { return a_[static_cast<std::size_t>(j) * rows_ + i]; }
    value_type* data() { return a_.data(); }
    const value_type* data() const { return a_.data(); }
    value_type* col(int j) { return a_.data() + static_cast<std::size_t>(j) * rows_; }
    double max_hermiticity_defect() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<value_type> a_;
};

}  // namespace scottlab::core
