#pragma once

// Slow, independent verifiers. Used by the test suites and, for the numerical
// range, as a screen in front of the fremdervalue solver.

#include <cstddef>
#include <optional>
#include <span>

#include "fremder/core.hpp"
#include "fremder/structured.hpp"

namespace fremder {

struct MembershipVerdict {
    bool inside = false;
    double margin = 0.0;  // min over the angle grid of the supporting-line value h(theta)
    int theta_samples = 0;
    std::optional<double> certificate_angle;  // an angle with h(theta) < -tol when outside
};

/// z in W(A) iff lambda_max of the Hermitian part of e^{-i theta}(A - zI) is >= 0 for
/// every theta. Evaluated on a uniform grid of cfg.theta_samples angles; inside means
/// margin >= -zero_tol * ||zI - A||_F.
MembershipVerdict numerical_range_contains(const ComplexMatrix& a, Complex z, const SolverConfig& cfg);

/// Lattice scan of the weight simplex with spacing 1/grid. Feasible when the best
/// |sum d_j p_j| is at most 2 * diameter / grid. Limited to four points.
std::optional<SimplexWeights> brute_force_simplex(std::span<const Complex> points, int grid);

struct SearchResult {
    Vector best_x;
    double best_residual = 0.0;
};

/// Minimum of |<x, Ax>| over `trials` seeded random unit vectors.
SearchResult random_search(const ComplexMatrix& a, const SolverConfig& cfg, std::size_t trials);

}  // namespace fremder
