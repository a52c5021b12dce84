#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fremder/errors.hpp"
#include "fremder/matrix.hpp"

namespace fremder {

/// Tolerances and search budget shared by every solver.
struct SolverConfig {
    double zero_tol = 1e-10;      // relative eigenvalue / singular value zero threshold
    double residual_tol = 1e-10;  // relative acceptance for |<x, Ax>|
    int restarts = 32;
    std::uint64_t seed = 0;
    int theta_samples = 720;

    /// Throws PreconditionError on non-positive tolerances or budgets.
    void validate() const;
};

enum class Definiteness {
    PositiveDefinite,
    PositiveSemiDefinite,
    NegativeDefinite,
    NegativeSemiDefinite,
    Indefinite,
    Zero,
};

enum class Structure { Hermitian, SkewHermitian };

enum class SolutionKind { Nontrivial, TrivialKernel, TrivialAdjointKernel };

/// Verdict of classify_solution; NotFremder when the residual test fails.
enum class Classification { Nontrivial, TrivialKernel, TrivialAdjointKernel, NotFremder };

std::string_view to_string(Definiteness d);
std::string_view to_string(SolutionKind k);
std::string_view to_string(Classification c);

struct HermitianParts {
    ComplexMatrix b;  // (A + A^dagger) / 2
    ComplexMatrix c;  // (A - A^dagger) / 2
};

/// Eigen-decomposition of a normal matrix with orthonormal eigenvector columns.
struct Spectrum {
    std::vector<Complex> values;
    DenseMatrix vectors;
    double residual_bound = 0.0;  // max_j ||A phi_j - lambda_j phi_j||
};

struct FremderSolution {
    Vector vector;  // unit norm
    Complex residual;
    SolutionKind kind = SolutionKind::Nontrivial;
    // Weights d_j = |c_j|^2 over the eigenbasis used to build the vector, when the
    // solver works in one. Nonnegative and summing to one.
    std::optional<std::vector<double>> coefficients;
};

HermitianParts hermitian_parts(const ComplexMatrix& a);

Definiteness classify_definiteness(const ComplexMatrix& m, Structure kind, const SolverConfig& cfg);

/// Orthonormal basis (as columns) of the numerical null space; n x 0 when m is nonsingular.
DenseMatrix kernel_basis(const ComplexMatrix& m, const SolverConfig& cfg);

/// <x, Ax> with the inner product conjugate-linear in its first argument.
Complex fremder_residual(const ComplexMatrix& a, const Vector& x);

Classification classify_solution(const ComplexMatrix& a, const Vector& x, const SolverConfig& cfg);

// Structure predicates. Tolerances are relative to the Frobenius norm.
bool is_hermitian(const ComplexMatrix& a, double rel_tol = 1e-12);
bool is_skew_hermitian(const ComplexMatrix& a, double rel_tol = 1e-12);
/// ||AA^dagger - A^dagger A||_F <= rel_tol * ||A||_F^2.
bool is_normal(const ComplexMatrix& a, double rel_tol = 1e-10);

/// Spectrum via the complex Schur form; throws StructureError when a is not normal.
Spectrum normal_spectrum(const ComplexMatrix& a);

/// Ascending eigenvalues of the Hermitian matrix (m + m^dagger) / 2.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace fremder
