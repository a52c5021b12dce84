#include "fremder/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fremder/kernels.hpp"
#include "fremder/sampling.hpp"

namespace fremder {
namespace {

constexpr std::uint64_t kSearchStream = 0x5eed5eedULL;

struct LatticeScan {
    std::span<const Complex> points;
    int grid;
    std::vector<int> counts;
    std::vector<int> best_counts;
    double best = std::numeric_limits<double>::infinity();

    // Assigns lattice units to point `k` onward; `partial` is the weighted sum so far.
    void visit(std::size_t k, int remaining, Complex partial) {
        const double unit = 1.0 / grid;
        if (k + 1 == points.size()) {
            counts[k] = remaining;
            const double dist = std::abs(partial + (remaining * unit) * points[k]);
            if (dist < best) {
                best = dist;
                best_counts = counts;
            }
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            counts[k] = c;
            visit(k + 1, remaining - c, partial + (c * unit) * points[k]);
        }
    }
};

}  // namespace

MembershipVerdict numerical_range_contains(const ComplexMatrix& a, Complex z, const SolverConfig& cfg) {
    cfg.validate();
    const HermitianParts parts = hermitian_parts(a);
    const DenseMatrix k = parts.c.dense() * Complex(0.0, -1.0);
    const double tol = cfg.zero_tol * a.pencil(z).frobenius_norm();

    // Hermitian part of e^{-i theta}(A - zI) is cos(theta) B + sin(theta) K - Re(e^{-i theta} z) I.
    MembershipVerdict v;
    v.theta_samples = cfg.theta_samples;
    v.margin = std::numeric_limits<double>::infinity();
    DenseMatrix h;
    Eigen::SelfAdjointEigenSolver<DenseMatrix> eig;
    for (int s = 0; s < cfg.theta_samples; ++s) {
        const double theta = 2.0 * std::numbers::pi * s / cfg.theta_samples;
        const double c = std::cos(theta);
        const double sn = std::sin(theta);
        kernels::real_combination(c, parts.b.dense(), sn, k, h);
        eig.compute(h, Eigen::EigenvaluesOnly);
        const double value = eig.eigenvalues().maxCoeff() - (c * z.real() + sn * z.imag());
        if (value < v.margin) {
            v.margin = value;
            if (value < -tol) v.certificate_angle = theta;
        }
    }
    v.inside = v.margin >= -tol;
    if (v.inside) v.certificate_angle.reset();
    return v;
}

std::optional<SimplexWeights> brute_force_simplex(std::span<const Complex> points, int grid) {
    if (points.empty()) throw PreconditionError("brute_force_simplex: empty point list");
    if (points.size() > 4) throw ScaleError("brute_force_simplex: at most 4 points are supported");
    if (grid < 10) throw PreconditionError("brute_force_simplex: grid must be at least 10");

    double diameter = 0.0;
    for (Complex p : points) {
        for (Complex q : points) diameter = std::max(diameter, std::abs(p - q));
    }
    LatticeScan scan{points, grid, std::vector<int>(points.size(), 0), {}};
    scan.visit(0, grid, Complex(0.0, 0.0));
    if (scan.best > 2.0 * diameter / grid) return std::nullopt;

    SimplexWeights w;
    for (std::size_t i = 0; i < points.size(); ++i) {
        w.weights.push_back(static_cast<double>(scan.best_counts[i]) / grid);
        if (scan.best_counts[i] > 0) w.support.push_back(i);
    }
    return w;
}

SearchResult random_search(const ComplexMatrix& a, const SolverConfig& cfg, std::size_t trials) {
    cfg.validate();
    if (trials == 0) throw PreconditionError("random_search: trials must be positive");
    auto engine = seeded_engine(cfg.seed, kSearchStream);
    SearchResult best;
    best.best_residual = std::numeric_limits<double>::infinity();
    Vector scratch;
    for (std::size_t t = 0; t < trials; ++t) {
        Vector x = random_unit_vector(a.dim(), engine);
        const double r = std::abs(kernels::quadratic_form(a.dense(), x, scratch));
        if (r < best.best_residual) {
            best.best_residual = r;
            best.best_x = std::move(x);
        }
    }
    return best;
}

}  // namespace fremder
