#include "fremder/general.hpp"

#include <cmath>
#include <limits>

#include "fremder/kernels.hpp"
#include "fremder/oracle.hpp"
#include "fremder/sampling.hpp"
#include "fremder/structured.hpp"

namespace fremder {
namespace {

constexpr int kMaxDescentIterations = 500;

double real_dot(const Vector& u, const Vector& v) { return kernels::dotc(u, v).real(); }

SolveOutcome proved_none(SolveRoute route) {
    SolveOutcome out;
    out.status = SolveStatus::ProvedNone;
    out.route = route;
    return out;
}

SolveOutcome from_structured(const std::optional<FremderSolution>& s, SolveRoute route) {
    if (!s || s->kind != SolutionKind::Nontrivial) return proved_none(route);
    SolveOutcome out;
    out.status = SolveStatus::Found;
    out.solution = s;
    out.best_residual = std::abs(s->residual);
    out.route = route;
    return out;
}

bool within_contract(const ComplexMatrix& a, const std::optional<FremderSolution>& s, const SolverConfig& cfg) {
    return !s || std::abs(s->residual) <= cfg.residual_tol * a.frobenius_norm();
}

SolveOutcome optimize(const ComplexMatrix& a, const SolverConfig& cfg) {
    const double anorm = a.frobenius_norm();
    const double accept = cfg.residual_tol * anorm;
    const double accept_objective = accept * accept;

    SolveOutcome out;
    out.status = SolveStatus::NotFound;
    out.route = SolveRoute::Optimizer;
    out.best_residual = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < cfg.restarts; ++restart) {
        auto engine = seeded_engine(cfg.seed, static_cast<std::uint64_t>(restart));
        Vector start = random_unit_vector(a.dim(), engine);
        detail::DescentResult r =
            detail::sphere_descent(a.dense(), std::move(start), accept_objective, kMaxDescentIterations);
        out.restarts_used = restart + 1;
        const Complex residual = fremder_residual(a, r.x);
        out.best_residual = std::min(out.best_residual, std::abs(residual));
        if (std::abs(residual) <= accept && classify_solution(a, r.x, cfg) == Classification::Nontrivial) {
            out.status = SolveStatus::Found;
            out.solution = FremderSolution{r.x, residual, SolutionKind::Nontrivial, std::nullopt};
            return out;
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Found: return "Found";
        case SolveStatus::NotFound: return "NotFound";
        case SolveStatus::ProvedNone: return "ProvedNone";
    }
    return "Unknown";
}

std::string_view to_string(SolveRoute r) {
    switch (r) {
        case SolveRoute::Hermitian: return "hermitian";
        case SolveRoute::SkewHermitian: return "skew-hermitian";
        case SolveRoute::Normal: return "normal";
        case SolveRoute::NecessaryConditions: return "necessary-conditions";
        case SolveRoute::Optimizer: return "optimizer";
        case SolveRoute::Region: return "region";
        case SolveRoute::NumericalRange: return "numerical-range";
    }
    return "unknown";
}

bool FremdervalueRegion::admits(Complex z, double tol) const {
    const double re = z.real();
    const double im = z.imag();
    if (re < re_min - tol || re > re_max + tol) return false;
    if (im < im_min - tol || im > im_max + tol) return false;
    if (!corner_rule) return true;
    const bool re_attained = std::abs(re - re_min) <= tol || std::abs(re - re_max) <= tol;
    const bool im_attained = std::abs(im - im_min) <= tol || std::abs(im - im_max) <= tol;
    return !(re_attained && im_attained);
}

NecessaryConditionsReport necessary_conditions(const ComplexMatrix& a, const SolverConfig& cfg) {
    const HermitianParts parts = hermitian_parts(a);
    NecessaryConditionsReport report;
    report.b_class = classify_definiteness(parts.b, Structure::Hermitian, cfg);
    report.c_class = classify_definiteness(parts.c, Structure::SkewHermitian, cfg);
    report.admissible = report.b_class == Definiteness::Indefinite || report.c_class == Definiteness::Indefinite;
    return report;
}

SolveOutcome solve_general(const ComplexMatrix& a, const SolverConfig& cfg) {
    cfg.validate();
    // Structured classes are decided exactly; a solution that misses the residual
    // contract (possible for barely-normal input) drops through to the optimizer.
    if (is_hermitian(a)) {
        auto s = solve_hermitian(a, cfg);
        if (within_contract(a, s, cfg)) return from_structured(s, SolveRoute::Hermitian);
    } else if (is_skew_hermitian(a)) {
        auto s = solve_skew_hermitian(a, cfg);
        if (within_contract(a, s, cfg)) return from_structured(s, SolveRoute::SkewHermitian);
    } else if (is_normal(a)) {
        auto s = solve_normal(a, cfg);
        if (within_contract(a, s, cfg)) return from_structured(s, SolveRoute::Normal);
    }
    if (!necessary_conditions(a, cfg).admissible) return proved_none(SolveRoute::NecessaryConditions);
    return optimize(a, cfg);
}

FremdervalueRegion fremdervalue_region(const ComplexMatrix& a, const SolverConfig& cfg) {
    cfg.validate();
    const HermitianParts parts = hermitian_parts(a);
    const Eigen::VectorXd re = hermitian_eigenvalues(parts.b);
    const Eigen::VectorXd im = hermitian_eigenvalues(parts.c * Complex(0.0, -1.0));
    FremdervalueRegion region;
    region.re_min = re.minCoeff();
    region.re_max = re.maxCoeff();
    region.im_min = im.minCoeff();
    region.im_max = im.maxCoeff();
    region.corner_rule = true;
    if (is_hermitian(a)) {
        region.im_min = region.im_max = 0.0;
        region.exact = true;
    } else if (is_skew_hermitian(a)) {
        region.re_min = region.re_max = 0.0;
        region.exact = true;
    }
    return region;
}

SolveOutcome is_fremdervalue(const ComplexMatrix& a, Complex z, const SolverConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ValueError("is_fremdervalue: z is not finite");
    const FremdervalueRegion region = fremdervalue_region(a, cfg);
    if (!region.admits(z, cfg.zero_tol * a.frobenius_norm())) return proved_none(SolveRoute::Region);
    if (!numerical_range_contains(a, z, cfg).inside) return proved_none(SolveRoute::NumericalRange);
    return solve_general(a.pencil(z), cfg);
}

namespace detail {

DescentResult sphere_descent(const DenseMatrix& a, Vector x, double accept_objective, int max_iterations) {
    // f(x) = beta^2 + gamma^2 with beta = <x, Bx>, gamma = <x, Kx>, K = -iC. Both
    // quadratic forms have tangent gradients g = 2(Mx - <x,Mx> x); the step is the
    // minimum-norm Gauss-Newton correction for (beta, gamma) = 0, falling back to
    // steepest descent when the two gradients are nearly parallel.
    const double scale = a.squaredNorm();
    Vector ax(a.rows());
    Vector ahx(a.rows());
    DescentResult result;
    x.normalize();

    auto objective = [&](const Vector& v) {
        Vector tmp;
        return std::norm(kernels::quadratic_form(a, v, tmp));
    };

    for (int it = 0; it < max_iterations; ++it) {
        result.iterations = it;
        kernels::matvec(a, x, ax);
        kernels::matvec_adjoint(a, x, ahx);
        const Complex r = kernels::dotc(x, ax);
        const double f = std::norm(r);
        result.objective = f;
        if (f <= accept_objective) break;

        const double beta = r.real();
        const double gamma = r.imag();
        const Vector bx = (ax + ahx) * 0.5;
        const Vector kx = (ax - ahx) * Complex(0.0, -0.5);
        const Vector g_beta = 2.0 * (bx - beta * x);
        const Vector g_gamma = 2.0 * (kx - gamma * x);
        const Vector grad = 2.0 * (beta * g_beta + gamma * g_gamma);
        const double grad_sq = grad.squaredNorm();
        if (std::sqrt(grad_sq) <= 1e-12 * scale) break;

        const double g00 = g_beta.squaredNorm();
        const double g11 = g_gamma.squaredNorm();
        const double g01 = real_dot(g_beta, g_gamma);
        const double det = g00 * g11 - g01 * g01;
        Vector dir;
        if (det > 1e-10 * g00 * g11) {
            const double p = (g11 * beta - g01 * gamma) / det;
            const double q = (g00 * gamma - g01 * beta) / det;
            dir = -(p * g_beta + q * g_gamma);
        } else {
            dir = -(f / grad_sq) * grad;
        }
        const double slope = real_dot(grad, dir);  // negative

        double step = 1.0;
        bool accepted = false;
        for (int k = 0; k < 60; ++k) {
            Vector trial = (x + step * dir).normalized();
            const double ft = objective(trial);
            if (ft <= f + 1e-4 * step * slope || ft <= accept_objective) {
                x = std::move(trial);
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;
        result.objective = objective(x);
    }
    result.x = std::move(x);
    return result;
}

}  // namespace detail

}  // namespace fremder
