#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fremder/core.hpp"

namespace fremder {

/// Convex weights expressing the origin as a combination of planar points.
struct SimplexWeights {
    std::vector<double> weights;       // one per input point, nonnegative, summing to 1
    std::vector<std::size_t> support;  // indices with weight > 0, at most three
};

struct GeneigPair {
    Complex z;  // fremdervalue; real on the skew route, imaginary on the dual route
    Vector x;   // unit fremdervector of zI - A
    Complex residual;  // <x, (zI - A) x>
    Classification kind = Classification::Nontrivial;
};

struct GeneigResult {
    std::vector<GeneigPair> pairs;
    Index projector_rank = 0;  // dim of the kernel the problem was restricted to
};

/// Nontrivial fremdervector of an indefinite Hermitian matrix, absent when none exists.
/// Throws StructureError for non-Hermitian input.
std::optional<FremderSolution> solve_hermitian(const ComplexMatrix& a, const SolverConfig& cfg);

/// Same contract for skew-Hermitian input, by way of the Hermitian matrix iA.
std::optional<FremderSolution> solve_skew_hermitian(const ComplexMatrix& a, const SolverConfig& cfg);

/// Origin-in-convex-hull test for points in the complex plane. Returns weights with
/// support of at most three points, or absent when the origin lies outside the hull.
/// Throws PreconditionError on an empty list, ValueError on non-finite points.
std::optional<SimplexWeights> simplex_weights(std::span<const Complex> points);

/// Fremdervector of a normal matrix from nonnegative eigenbasis weights. Prefers a
/// nontrivial solution; falls back to a kernel vector when only those exist.
std::optional<FremderSolution> solve_normal(const ComplexMatrix& a, const SolverConfig& cfg);

/// Projected eigenproblem on ker(C) for a matrix whose skew part C is semi-definite.
/// Throws HypothesisError when C is indefinite. Empty result when ker(C) = {0}.
GeneigResult solve_semidefinite_skew(const ComplexMatrix& a, const SolverConfig& cfg);

/// Dual of the above for a semi-definite Hermitian part B, solved on iA. The pairs
/// carry purely imaginary z. Throws HypothesisError when B is indefinite.
GeneigResult solve_semidefinite_hermitian(const ComplexMatrix& a, const SolverConfig& cfg);

}  // namespace fremder
