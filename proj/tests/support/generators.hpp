#pragma once

// Random test matrices and independent reference computations. Nothing here calls
// into the solvers under test.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "fremder/matrix.hpp"

namespace fremder::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline DenseMatrix gaussian_matrix(Index n, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    DenseMatrix m(n, n);
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i) m(i, j) = Complex(g(rng), g(rng));
    }
    return m;
}

inline Vector gaussian_vector(Index n, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
    return v;
}

inline DenseMatrix random_unitary(Index n, Rng& rng) {
    Eigen::HouseholderQR<DenseMatrix> qr(gaussian_matrix(n, rng));
    return qr.householderQ() * DenseMatrix::Identity(n, n);
}

/// U diag(values) U^dagger for a random unitary U.
inline DenseMatrix with_spectrum(const std::vector<Complex>& values, Rng& rng) {
    const auto n = static_cast<Index>(values.size());
    const DenseMatrix u = random_unitary(n, rng);
    DenseMatrix d = DenseMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) d(i, i) = values[static_cast<std::size_t>(i)];
    return u * d * u.adjoint();
}

/// Hermitian matrix whose eigenvalues are drawn with random signs; a fraction of
/// cases get all-positive, all-negative or zero eigenvalues so every class shows up.
inline DenseMatrix random_hermitian(Index n, Rng& rng) {
    std::vector<Complex> values(static_cast<std::size_t>(n));
    const int mode = uniform_int(rng, 0, 5);
    for (auto& v : values) {
        double mag = uniform(rng, 0.2, 3.0);
        switch (mode) {
            case 0: v = mag; break;
            case 1: v = -mag; break;
            case 2: v = uniform_int(rng, 0, 2) == 0 ? 0.0 : mag; break;
            case 3: v = uniform_int(rng, 0, 2) == 0 ? 0.0 : -mag; break;
            default: v = uniform_int(rng, 0, 1) == 0 ? mag : -mag; break;
        }
    }
    DenseMatrix h = with_spectrum(values, rng);
    return (h + h.adjoint()) * 0.5;
}

inline DenseMatrix random_skew_hermitian(Index n, Rng& rng) { return random_hermitian(n, rng) * Complex(0.0, 1.0); }

inline DenseMatrix random_normal(Index n, Rng& rng) {
    std::vector<Complex> values(static_cast<std::size_t>(n));
    const double shift_re = uniform(rng, -1.0, 1.0);
    const double shift_im = uniform(rng, -1.0, 1.0);
    for (auto& v : values) v = Complex(uniform(rng, -1.0, 1.0) + shift_re, uniform(rng, -1.0, 1.0) + shift_im);
    return with_spectrum(values, rng);
}

/// A0 - <u, A0 u> u u^dagger: u is a fremdervector by construction.
inline DenseMatrix planted(Index n, Rng& rng, Vector* planted_vector = nullptr) {
    const DenseMatrix a0 = gaussian_matrix(n, rng);
    Vector u = gaussian_vector(n, rng).normalized();
    const Complex q = u.dot(a0 * u);  // Eigen's dot conjugates the first argument
    if (planted_vector != nullptr) *planted_vector = u;
    return a0 - q * u * u.adjoint();
}

enum class SignPattern { Positive, PositiveSemi, Negative, NegativeSemi, Indefinite, Zero };

/// Sign count over eigenvalues from the general (non-Hermitian) eigensolver.
inline SignPattern sign_pattern(const std::vector<double>& values, double threshold) {
    int pos = 0, neg = 0, zero = 0;
    for (double v : values) {
        if (std::abs(v) <= threshold) ++zero;
        else if (v > 0) ++pos;
        else ++neg;
    }
    if (pos > 0 && neg > 0) return SignPattern::Indefinite;
    if (pos > 0) return zero > 0 ? SignPattern::PositiveSemi : SignPattern::Positive;
    if (neg > 0) return zero > 0 ? SignPattern::NegativeSemi : SignPattern::Negative;
    return SignPattern::Zero;
}

inline std::vector<double> real_parts_of_eigenvalues(const DenseMatrix& m) {
    Eigen::ComplexEigenSolver<DenseMatrix> eig(m, false);
    std::vector<double> out;
    for (Index i = 0; i < m.rows(); ++i) out.push_back(eig.eigenvalues()(i).real());
    return out;
}

inline std::vector<double> imag_parts_of_eigenvalues(const DenseMatrix& m) {
    Eigen::ComplexEigenSolver<DenseMatrix> eig(m, false);
    std::vector<double> out;
    for (Index i = 0; i < m.rows(); ++i) out.push_back(eig.eigenvalues()(i).imag());
    return out;
}

inline double cross(Complex p, Complex q) { return p.real() * q.imag() - p.imag() * q.real(); }

inline double point_segment_distance(Complex p, Complex q) {
    const Complex d = q - p;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p);
    const double t = std::clamp(-(p.real() * d.real() + p.imag() * d.imag()) / len2, 0.0, 1.0);
    return std::abs(p + t * d);
}

/// Distance from the origin to the boundary of the convex hull of a small point set.
inline double hull_boundary_distance(const std::vector<Complex>& pts) {
    const std::size_t n = pts.size();
    if (n == 1) return std::abs(pts[0]);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool left = false, right = false;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const double c = cross(pts[j] - pts[i], pts[k] - pts[i]);
                if (c > 0) left = true;
                if (c < 0) right = true;
            }
            if (!(left && right)) best = std::min(best, point_segment_distance(pts[i], pts[j]));
        }
    }
    return best;
}

}  // namespace fremder::testing
