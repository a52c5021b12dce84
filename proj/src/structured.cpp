#include "fremder/structured.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fremder {
namespace {

constexpr Complex kI{0.0, 1.0};

std::optional<SolutionKind> to_kind(Classification c) {
    switch (c) {
        case Classification::Nontrivial: return SolutionKind::Nontrivial;
        case Classification::TrivialKernel: return SolutionKind::TrivialKernel;
        case Classification::TrivialAdjointKernel: return SolutionKind::TrivialAdjointKernel;
        case Classification::NotFremder: return std::nullopt;
    }
    return std::nullopt;
}

/// Normalizes x and tags it; absent if rounding pushed the residual past tolerance.
std::optional<FremderSolution> finish(const ComplexMatrix& a, Vector x, const SolverConfig& cfg,
                                      std::optional<std::vector<double>> coefficients) {
    x.normalize();
    const auto kind = to_kind(classify_solution(a, x, cfg));
    if (!kind) return std::nullopt;
    FremderSolution s;
    s.residual = fremder_residual(a, x);
    s.vector = std::move(x);
    s.kind = *kind;
    s.coefficients = std::move(coefficients);
    return s;
}

double cross(Complex p, Complex q) { return p.real() * q.imag() - p.imag() * q.real(); }

SimplexWeights single(std::size_t n, std::size_t i) {
    SimplexWeights w{std::vector<double>(n, 0.0), {i}};
    w.weights[i] = 1.0;
    return w;
}

SimplexWeights pair(std::span<const Complex> pts, std::size_t i, std::size_t j) {
    // |p_j| p_i + |p_i| p_j vanishes when the two points are antipodal.
    const double ri = std::abs(pts[i]);
    const double rj = std::abs(pts[j]);
    SimplexWeights w{std::vector<double>(pts.size(), 0.0), {std::min(i, j), std::max(i, j)}};
    w.weights[i] = rj / (ri + rj);
    w.weights[j] = ri / (ri + rj);
    return w;
}

}  // namespace

std::optional<FremderSolution> solve_hermitian(const ComplexMatrix& a, const SolverConfig& cfg) {
    cfg.validate();
    if (!is_hermitian(a)) throw StructureError("solve_hermitian: matrix is not Hermitian");
    if (classify_definiteness(a, Structure::Hermitian, cfg) != Definiteness::Indefinite) return std::nullopt;

    const DenseMatrix h = (a.dense() + a.dense().adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(h);
    const Index n = a.dim();
    const double most_negative = eig.eigenvalues()(0);
    const double most_positive = eig.eigenvalues()(n - 1);
    const double spread = most_positive - most_negative;

    // |c_p|^2 lambda_p + |c_n|^2 lambda_n = 0 with |c_p|^2 + |c_n|^2 = 1.
    Vector x = std::sqrt(-most_negative) * eig.eigenvectors().col(n - 1) +
               std::sqrt(most_positive) * eig.eigenvectors().col(0);
    std::vector<double> d(static_cast<std::size_t>(n), 0.0);
    d.front() = most_positive / spread;
    d.back() = -most_negative / spread;
    return finish(a, std::move(x), cfg, std::move(d));
}

std::optional<FremderSolution> solve_skew_hermitian(const ComplexMatrix& a, const SolverConfig& cfg) {
    cfg.validate();
    if (!is_skew_hermitian(a)) throw StructureError("solve_skew_hermitian: matrix is not skew-Hermitian");
    auto rotated = solve_hermitian(a * kI, cfg);
    if (!rotated) return std::nullopt;
    return finish(a, std::move(rotated->vector), cfg, std::move(rotated->coefficients));
}

std::optional<SimplexWeights> simplex_weights(std::span<const Complex> points) {
    if (points.empty()) throw PreconditionError("simplex_weights: empty point list");
    const std::size_t n = points.size();
    double scale = 0.0;
    for (Complex p : points) {
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
            throw ValueError("simplex_weights: non-finite point");
        }
        scale = std::max(scale, std::abs(p));
    }

    constexpr double zero_rel = 1e-13;
    constexpr double angle_tol = 1e-12;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(points[i]) <= zero_rel * scale || scale == 0.0) return single(n, i);
    }

    // Anchor at the largest point and measure the others counter-clockwise from it.
    // The origin is in the hull iff the directions leave no open gap wider than pi,
    // and then -p_anchor lies in the cone of the two points that straddle the
    // antipodal direction.
    const auto anchor = static_cast<std::size_t>(
        std::max_element(points.begin(), points.end(),
                         [](Complex l, Complex r) { return std::abs(l) < std::abs(r); }) -
        points.begin());
    const double base = std::arg(points[anchor]);
    constexpr double pi = std::numbers::pi;

    std::optional<std::size_t> below;  // largest angle in (0, pi)
    std::optional<std::size_t> above;  // smallest angle in (pi, 2pi)
    double below_angle = 0.0;
    double above_angle = 2.0 * pi;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == anchor) continue;
        double phi = std::fmod(std::arg(points[i]) - base, 2.0 * pi);
        if (phi < 0.0) phi += 2.0 * pi;
        if (std::abs(phi - pi) <= angle_tol) return pair(points, anchor, i);
        if (phi > angle_tol && phi < pi && phi > below_angle) {
            below = i;
            below_angle = phi;
        } else if (phi > pi && phi < 2.0 * pi - angle_tol && phi < above_angle) {
            above = i;
            above_angle = phi;
        }
    }
    if (!below || !above) return std::nullopt;
    const double opening = above_angle - below_angle;
    if (opening > pi + angle_tol) return std::nullopt;
    if (opening >= pi - angle_tol) return pair(points, *below, *above);

    // Solve s p_b + t p_c = -p_a; both s and t are nonnegative by the cone argument.
    const Complex pa = points[anchor];
    const Complex pb = points[*below];
    const Complex pc = points[*above];
    const double det = cross(pb, pc);
    const double s = std::max(0.0, cross(-pa, pc) / det);
    const double t = std::max(0.0, cross(pb, -pa) / det);
    const double total = 1.0 + s + t;

    SimplexWeights w{std::vector<double>(n, 0.0), {}};
    w.weights[anchor] = 1.0 / total;
    w.weights[*below] = s / total;
    w.weights[*above] = t / total;
    for (std::size_t i = 0; i < n; ++i) {
        if (w.weights[i] > 0.0) w.support.push_back(i);
    }
    return w;
}

std::optional<FremderSolution> solve_normal(const ComplexMatrix& a, const SolverConfig& cfg) {
    cfg.validate();
    const Spectrum spectrum = normal_spectrum(a);
    const double threshold = cfg.zero_tol * a.frobenius_norm();

    std::vector<std::size_t> nonzero;
    std::vector<Complex> nonzero_values;
    std::optional<std::size_t> first_zero;
    for (std::size_t j = 0; j < spectrum.values.size(); ++j) {
        if (std::abs(spectrum.values[j]) > threshold) {
            nonzero.push_back(j);
            nonzero_values.push_back(spectrum.values[j]);
        } else if (!first_zero) {
            first_zero = j;
        }
    }

    std::vector<double> d(spectrum.values.size(), 0.0);
    std::optional<SimplexWeights> w;
    if (!nonzero_values.empty()) w = simplex_weights(nonzero_values);
    if (w) {
        for (std::size_t k = 0; k < nonzero.size(); ++k) d[nonzero[k]] = w->weights[k];
    } else if (first_zero) {
        d[*first_zero] = 1.0;
    } else {
        return std::nullopt;
    }

    Vector x = Vector::Zero(a.dim());
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (d[j] > 0.0) x += std::sqrt(d[j]) * spectrum.vectors.col(static_cast<Index>(j));
    }
    return finish(a, std::move(x), cfg, std::move(d));
}

GeneigResult solve_semidefinite_skew(const ComplexMatrix& a, const SolverConfig& cfg) {
    cfg.validate();
    const HermitianParts parts = hermitian_parts(a);
    if (classify_definiteness(parts.c, Structure::SkewHermitian, cfg) == Definiteness::Indefinite) {
        throw HypothesisError("skew-Hermitian part is indefinite; the projected eigenproblem does not apply");
    }
    const DenseMatrix q = kernel_basis(parts.c, cfg);
    GeneigResult result;
    result.projector_rank = q.cols();
    if (q.cols() == 0) return result;

    DenseMatrix restricted = q.adjoint() * parts.b.dense() * q;
    restricted = (restricted + restricted.adjoint()).eval() * 0.5;
    Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(restricted);
    for (Index k = 0; k < q.cols(); ++k) {
        GeneigPair p;
        p.z = Complex(eig.eigenvalues()(k), 0.0);
        p.x = (q * eig.eigenvectors().col(k)).normalized();
        const ComplexMatrix shifted = a.pencil(p.z);
        p.residual = fremder_residual(shifted, p.x);
        p.kind = classify_solution(shifted, p.x, cfg);
        result.pairs.push_back(std::move(p));
    }
    return result;
}

GeneigResult solve_semidefinite_hermitian(const ComplexMatrix& a, const SolverConfig& cfg) {
    cfg.validate();
    GeneigResult rotated;
    try {
        // The skew part of iA is iB, classified by the signs of lambda(B).
        rotated = solve_semidefinite_skew(a * kI, cfg);
    } catch (const HypothesisError&) {
        throw HypothesisError("Hermitian part is indefinite; the projected eigenproblem does not apply");
    }
    for (GeneigPair& p : rotated.pairs) {
        // <x, (z'I - iA) x> = 0  <=>  <x, (-iz' I - A) x> = 0
        p.z = -kI * p.z;
        const ComplexMatrix shifted = a.pencil(p.z);
        p.residual = fremder_residual(shifted, p.x);
        p.kind = classify_solution(shifted, p.x, cfg);
    }
    return rotated;
}

}  // namespace fremder
