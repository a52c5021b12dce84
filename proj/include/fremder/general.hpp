#pragma once

#include <optional>
#include <string_view>

#include "fremder/core.hpp"

namespace fremder {

struct NecessaryConditionsReport {
    Definiteness b_class = Definiteness::Zero;
    Definiteness c_class = Definiteness::Zero;
    bool admissible = false;  // false certifies that no nontrivial fremdervector exists
};

/// Bounding rectangle for fremdervalues. A bound attained in one coordinate forces
/// strict interiority in the other (corner rule). For Hermitian or skew-Hermitian
/// input the region degenerates to an open interval and is exact.
struct FremdervalueRegion {
    double re_min = 0.0;
    double re_max = 0.0;
    double im_min = 0.0;
    double im_max = 0.0;
    bool corner_rule = true;
    bool exact = false;

    /// Rectangle membership with the corner rule applied; `tol` decides attainment.
    bool admits(Complex z, double tol) const;
};

enum class SolveStatus { Found, NotFound, ProvedNone };

/// Which decision produced an outcome.
enum class SolveRoute { Hermitian, SkewHermitian, Normal, NecessaryConditions, Optimizer, Region, NumericalRange };

std::string_view to_string(SolveStatus s);
std::string_view to_string(SolveRoute r);

struct SolveOutcome {
    SolveStatus status = SolveStatus::NotFound;
    std::optional<FremderSolution> solution;
    int restarts_used = 0;
    double best_residual = 0.0;  // |<x, Ax>| of the best candidate seen
    SolveRoute route = SolveRoute::Optimizer;
};

NecessaryConditionsReport necessary_conditions(const ComplexMatrix& a, const SolverConfig& cfg);

/// Structured solvers where they apply, then the necessary-condition screen, then a
/// restarted descent on the unit sphere. NotFound is not a proof of nonexistence.
SolveOutcome solve_general(const ComplexMatrix& a, const SolverConfig& cfg);

FremdervalueRegion fremdervalue_region(const ComplexMatrix& a, const SolverConfig& cfg);

/// Decides whether zI - A has a nontrivial fremdervector. Throws ValueError for non-finite z.
SolveOutcome is_fremdervalue(const ComplexMatrix& a, Complex z, const SolverConfig& cfg);

namespace detail {

struct DescentResult {
    Vector x;
    double objective = 0.0;  // |<x, Ax>|^2
    int iterations = 0;
};

/// Local minimization of |<x, Ax>|^2 over unit vectors from the given start.
DescentResult sphere_descent(const DenseMatrix& a, Vector x, double accept_objective, int max_iterations);

}  // namespace detail

}  // namespace fremder
