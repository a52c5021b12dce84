#include "fremder/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fremder/kernels.hpp"

namespace fremder {

ComplexMatrix::ComplexMatrix(DenseMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        throw DimensionError("matrix must be square and non-empty, got " +
                             std::to_string(entries_.rows()) + "x" + std::to_string(entries_.cols()));
    }
    if (!entries_.allFinite()) throw ValueError("matrix has non-finite entries");
}

ComplexMatrix ComplexMatrix::identity(Index n) { return ComplexMatrix(DenseMatrix::Identity(n, n)); }

ComplexMatrix ComplexMatrix::zero(Index n) { return ComplexMatrix(DenseMatrix::Zero(n, n)); }

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
    const auto n = static_cast<Index>(values.size());
    DenseMatrix m = DenseMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = values[static_cast<std::size_t>(i)];
    return ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> values) {
    return diagonal(std::span<const Complex>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const auto n = static_cast<Index>(rows.size());
    DenseMatrix m(n, n);
    Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Index>(row.size()) != n) throw DimensionError("ragged row in matrix literal");
        Index j = 0;
        for (const Complex& v : row) m(i, j++) = v;
        ++i;
    }
    return ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(entries_.adjoint()); }

ComplexMatrix ComplexMatrix::pencil(Complex z) const {
    DenseMatrix m = -entries_;
    m.diagonal().array() += z;
    return ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::operator*(Complex s) const { return ComplexMatrix(entries_ * s); }

void require_conformant(const ComplexMatrix& a, const Vector& x) {
    if (x.size() != a.dim()) {
        throw DimensionError("vector length " + std::to_string(x.size()) + " does not match matrix dimension " +
                             std::to_string(a.dim()));
    }
}

void SolverConfig::validate() const {
    if (!(zero_tol > 0.0) || !std::isfinite(zero_tol)) throw PreconditionError("zero_tol must be positive");
    if (!(residual_tol > 0.0) || !std::isfinite(residual_tol)) {
        throw PreconditionError("residual_tol must be positive");
    }
    if (restarts < 1) throw PreconditionError("restarts must be at least 1");
    if (theta_samples < 1) throw PreconditionError("theta_samples must be at least 1");
}

std::string_view to_string(Definiteness d) {
    switch (d) {
        case Definiteness::PositiveDefinite: return "PositiveDefinite";
        case Definiteness::PositiveSemiDefinite: return "PositiveSemiDefinite";
        case Definiteness::NegativeDefinite: return "NegativeDefinite";
        case Definiteness::NegativeSemiDefinite: return "NegativeSemiDefinite";
        case Definiteness::Indefinite: return "Indefinite";
        case Definiteness::Zero: return "Zero";
    }
    return "Unknown";
}

std::string_view to_string(SolutionKind k) {
    switch (k) {
        case SolutionKind::Nontrivial: return "Nontrivial";
        case SolutionKind::TrivialKernel: return "TrivialKernel";
        case SolutionKind::TrivialAdjointKernel: return "TrivialAdjointKernel";
    }
    return "Unknown";
}

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::Nontrivial: return "Nontrivial";
        case Classification::TrivialKernel: return "TrivialKernel";
        case Classification::TrivialAdjointKernel: return "TrivialAdjointKernel";
        case Classification::NotFremder: return "NotFremder";
    }
    return "Unknown";
}

HermitianParts hermitian_parts(const ComplexMatrix& a) {
    const DenseMatrix& m = a.dense();
    DenseMatrix adj = m.adjoint();
    return {ComplexMatrix((m + adj) * 0.5), ComplexMatrix((m - adj) * 0.5)};
}

bool is_hermitian(const ComplexMatrix& a, double rel_tol) {
    return (a.dense() - a.dense().adjoint()).norm() <= rel_tol * a.frobenius_norm();
}

bool is_skew_hermitian(const ComplexMatrix& a, double rel_tol) {
    return (a.dense() + a.dense().adjoint()).norm() <= rel_tol * a.frobenius_norm();
}

bool is_normal(const ComplexMatrix& a, double rel_tol) {
    const DenseMatrix& m = a.dense();
    const double scale = a.frobenius_norm();
    return (m * m.adjoint() - m.adjoint() * m).norm() <= rel_tol * scale * scale;
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
    DenseMatrix h = (m.dense() + m.dense().adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

Definiteness classify_definiteness(const ComplexMatrix& m, Structure kind, const SolverConfig& cfg) {
    cfg.validate();
    constexpr double structure_tol = 1e-12;
    Eigen::VectorXd values;
    if (kind == Structure::Hermitian) {
        if (!is_hermitian(m, structure_tol)) throw StructureError("matrix is not Hermitian");
        values = hermitian_eigenvalues(m);
    } else {
        if (!is_skew_hermitian(m, structure_tol)) throw StructureError("matrix is not skew-Hermitian");
        // Imaginary parts of lambda(M) are the eigenvalues of -iM.
        values = hermitian_eigenvalues(m * Complex(0.0, -1.0));
    }
    const double threshold = cfg.zero_tol * m.frobenius_norm();
    bool positive = false;
    bool negative = false;
    bool zero = false;
    for (double v : values) {
        if (std::abs(v) <= threshold) {
            zero = true;
        } else if (v > 0.0) {
            positive = true;
        } else {
            negative = true;
        }
    }
    if (positive && negative) return Definiteness::Indefinite;
    if (positive) return zero ? Definiteness::PositiveSemiDefinite : Definiteness::PositiveDefinite;
    if (negative) return zero ? Definiteness::NegativeSemiDefinite : Definiteness::NegativeDefinite;
    return Definiteness::Zero;
}

DenseMatrix kernel_basis(const ComplexMatrix& m, const SolverConfig& cfg) {
    cfg.validate();
    const Index n = m.dim();
    Eigen::JacobiSVD<DenseMatrix> svd(m.dense(), Eigen::ComputeFullV);
    const Eigen::VectorXd& sigma = svd.singularValues();  // descending
    const double threshold = cfg.zero_tol * sigma(0);
    Index rank = 0;
    while (rank < n && sigma(rank) > threshold) ++rank;
    return svd.matrixV().rightCols(n - rank);
}

Complex fremder_residual(const ComplexMatrix& a, const Vector& x) {
    require_conformant(a, x);
    Vector ax;
    return kernels::quadratic_form(a.dense(), x, ax);
}

Classification classify_solution(const ComplexMatrix& a, const Vector& x, const SolverConfig& cfg) {
    require_conformant(a, x);
    cfg.validate();
    const double xnorm = x.norm();
    if (!(xnorm > 0.0)) throw PreconditionError("the zero vector is excluded");
    const double anorm = a.frobenius_norm();

    Vector ax;
    const Complex r = kernels::quadratic_form(a.dense(), x, ax);
    if (std::abs(r) > cfg.residual_tol * anorm * xnorm * xnorm) return Classification::NotFremder;
    const double kernel_threshold = cfg.zero_tol * anorm * xnorm;
    if (ax.norm() <= kernel_threshold) return Classification::TrivialKernel;
    Vector ahx;
    kernels::matvec_adjoint(a.dense(), x, ahx);
    if (ahx.norm() <= kernel_threshold) return Classification::TrivialAdjointKernel;
    return Classification::Nontrivial;
}

Spectrum normal_spectrum(const ComplexMatrix& a) {
    if (!is_normal(a)) throw StructureError("matrix is not normal");
    // For a normal matrix the Schur factor is diagonal, so the unitary factor
    // supplies an orthonormal eigenbasis even across repeated eigenvalues.
    Eigen::ComplexSchur<DenseMatrix> schur(a.dense());
    Spectrum s;
    const Index n = a.dim();
    s.vectors = schur.matrixU();
    s.values.resize(static_cast<std::size_t>(n));
    for (Index j = 0; j < n; ++j) {
        const Complex lambda = schur.matrixT()(j, j);
        s.values[static_cast<std::size_t>(j)] = lambda;
        const double res = (a.dense() * s.vectors.col(j) - lambda * s.vectors.col(j)).norm();
        s.residual_bound = std::max(s.residual_bound, res);
    }
    return s;
}

}  // namespace fremder
