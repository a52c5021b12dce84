#pragma once

#include <complex>
#include <initializer_list>
#include <span>

#include <Eigen/Dense>

namespace fremder {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using Vector = Eigen::VectorXcd;
using DenseMatrix = Eigen::MatrixXcd;

/// Dense square complex matrix with finite entries. Column-major storage.
class ComplexMatrix {
public:
    /// Throws DimensionError for non-square or empty input, ValueError for NaN/Inf entries.
    explicit ComplexMatrix(DenseMatrix entries);

    static ComplexMatrix identity(Index n);
    static ComplexMatrix zero(Index n);
    static ComplexMatrix diagonal(std::span<const Complex> values);
    static ComplexMatrix diagonal(std::initializer_list<Complex> values);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    Index dim() const { return entries_.rows(); }
    const DenseMatrix& dense() const { return entries_; }
    Complex operator()(Index row, Index col) const { return entries_(row, col); }

    double frobenius_norm() const { return entries_.norm(); }
    ComplexMatrix adjoint() const;

    /// zI - A, the pencil evaluated at z.
    ComplexMatrix pencil(Complex z) const;

    ComplexMatrix operator*(Complex s) const;
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix& m) { return m * s; }

private:
    DenseMatrix entries_;
};

/// Throws DimensionError unless x has length a.dim().
void require_conformant(const ComplexMatrix& a, const Vector& x);

}  // namespace fremder
