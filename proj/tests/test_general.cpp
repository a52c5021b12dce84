#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fremder/general.hpp"
#include "fremder/oracle.hpp"
#include "support/generators.hpp"

using namespace fremder;
using namespace fremder::testing;

namespace {
const Complex I{0.0, 1.0};
const SolverConfig cfg{};
const auto upper = ComplexMatrix::from_rows({{1.0, 2.0}, {0.0, -1.0}});
}  // namespace

TEST_CASE("necessary_conditions examples") {
    // B = [[1,1],[1,-1]] has eigenvalues +-sqrt2; C = [[0,1],[-1,0]] has +-i.
    auto r = necessary_conditions(upper, cfg);
    CHECK(r.b_class == Definiteness::Indefinite);
    CHECK(r.c_class == Definiteness::Indefinite);
    CHECK(r.admissible);

    r = necessary_conditions(ComplexMatrix::identity(3), cfg);
    CHECK(r.b_class == Definiteness::PositiveDefinite);
    CHECK(r.c_class == Definiteness::Zero);
    CHECK_FALSE(r.admissible);

    r = necessary_conditions(ComplexMatrix::diagonal({1.0, I}), cfg);
    CHECK(r.b_class == Definiteness::PositiveSemiDefinite);
    CHECK(r.c_class == Definiteness::PositiveSemiDefinite);
    CHECK_FALSE(r.admissible);
}

TEST_CASE("solve_general examples") {
    auto out = solve_general(upper, cfg);
    REQUIRE(out.status == SolveStatus::Found);
    REQUIRE(out.solution);
    CHECK(std::abs(out.solution->residual) <= cfg.residual_tol * upper.frobenius_norm());
    CHECK(classify_solution(upper, out.solution->vector, cfg) == Classification::Nontrivial);
    CHECK(out.route == SolveRoute::Optimizer);

    out = solve_general(ComplexMatrix::identity(3), cfg);
    CHECK(out.status == SolveStatus::ProvedNone);
    CHECK(out.route == SolveRoute::Hermitian);

    Rng rng(201);
    for (int t = 0; t < 20; ++t) {
        const ComplexMatrix a(planted(uniform_int(rng, 2, 8), rng));
        const auto p = solve_general(a, cfg);
        REQUIRE(p.status == SolveStatus::Found);
        CHECK(std::abs(fremder_residual(a, p.solution->vector)) <= cfg.residual_tol * a.frobenius_norm());
        CHECK(std::abs(p.solution->vector.norm() - 1.0) <= 1e-12);
    }
}

TEST_CASE("solve_general dispatch routes") {
    CHECK(solve_general(ComplexMatrix::diagonal({I, -I}), cfg).route == SolveRoute::SkewHermitian);
    const auto normal = solve_general(ComplexMatrix::diagonal({1.0, I, -1.0 - I}), cfg);
    CHECK(normal.route == SolveRoute::Normal);
    CHECK(normal.status == SolveStatus::Found);
    // Normal with only a kernel solution available: no nontrivial vector.
    CHECK(solve_general(ComplexMatrix::diagonal({0.0, 1.0, 2.0}), cfg).status == SolveStatus::ProvedNone);
    // Non-normal with both parts semi-definite.
    const auto nc_case = ComplexMatrix::from_rows({{2.0 + I, 0.5}, {0.0, 3.0 + 2.0 * I}});
    const auto out = solve_general(nc_case, cfg);
    CHECK(out.status == SolveStatus::ProvedNone);
    CHECK(out.route == SolveRoute::NecessaryConditions);
}

TEST_CASE("optimizer exhaustion is NotFound, not ProvedNone") {
    // B = diag(1,-1) indefinite, K = [[2,1],[1,2]] positive definite: Im<x,Ax> >= 1.
    const auto a = ComplexMatrix::from_rows({{1.0 + 2.0 * I, I}, {I, -1.0 + 2.0 * I}});
    SolverConfig c = cfg;
    c.restarts = 4;
    const auto out = solve_general(a, c);
    CHECK(out.status == SolveStatus::NotFound);
    CHECK(out.restarts_used == 4);
    CHECK(out.best_residual >= 1.0 - 1e-12);
}

TEST_CASE("solve_general is deterministic for a fixed seed") {
    Rng rng(203);
    const ComplexMatrix a(planted(6, rng));
    SolverConfig c = cfg;
    c.seed = 77;
    const auto first = solve_general(a, c);
    const auto second = solve_general(a, c);
    REQUIRE(first.solution);
    REQUIRE(second.solution);
    CHECK(first.solution->vector == second.solution->vector);
    CHECK(first.restarts_used == second.restarts_used);
}

TEST_CASE("sphere_descent gradient matches finite differences") {
    // The descent is driven by the analytic tangent gradient; check the objective's
    // directional derivative along random tangent directions against central differences.
    Rng rng(205);
    for (int t = 0; t < 20; ++t) {
        const Index n = uniform_int(rng, 2, 6);
        const DenseMatrix a = gaussian_matrix(n, rng);
        const Vector x = gaussian_vector(n, rng).normalized();
        Vector v = gaussian_vector(n, rng);
        v -= x * x.dot(v);  // tangent
        auto f = [&](const Vector& y) { return std::norm(y.dot(a * y)); };
        const double h = 1e-6;
        const double fd = (f(x + h * v) - f(x - h * v)) / (2 * h);
        const Complex r = x.dot(a * x);
        const Vector ax = a * x, ahx = a.adjoint() * x;
        const Vector grad = 2.0 * (std::conj(r) * ax + r * ahx);  // Euclidean gradient of |<x,Ax>|^2
        const double analytic = grad.dot(v).real();
        CHECK(std::abs(fd - analytic) <= 1e-6 * (1.0 + std::abs(analytic)));
    }
}

TEST_CASE("fremdervalue_region examples") {
    auto r = fremdervalue_region(ComplexMatrix::diagonal({0.0, 2.0}), cfg);
    CHECK(r.exact);
    CHECK(r.re_min == doctest::Approx(0.0));
    CHECK(r.re_max == doctest::Approx(2.0));
    CHECK(r.im_min == 0.0);
    CHECK(r.im_max == 0.0);

    r = fremdervalue_region(upper, cfg);
    CHECK_FALSE(r.exact);
    CHECK(r.re_min == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
    CHECK(r.re_max == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(r.im_min == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(r.im_max == doctest::Approx(1.0).epsilon(1e-14));

    r = fremdervalue_region(ComplexMatrix::diagonal({1.0, I, -1.0 - I}), cfg);
    CHECK(r.re_min == doctest::Approx(-1.0));
    CHECK(r.re_max == doctest::Approx(1.0));
    CHECK(r.im_min == doctest::Approx(-1.0));
    CHECK(r.im_max == doctest::Approx(1.0));
    CHECK(r.corner_rule);
}

TEST_CASE("region corner rule") {
    FremdervalueRegion r{-1.0, 1.0, -2.0, 2.0, true, false};
    CHECK(r.admits(Complex(0.0, 0.0), 1e-12));
    CHECK(r.admits(Complex(-1.0, 0.5), 1e-12));
    CHECK(r.admits(Complex(0.3, 2.0), 1e-12));
    CHECK_FALSE(r.admits(Complex(-1.0, 2.0), 1e-12));
    CHECK_FALSE(r.admits(Complex(1.0, -2.0), 1e-12));
    CHECK_FALSE(r.admits(Complex(1.5, 0.0), 1e-12));
}

TEST_CASE("is_fremdervalue examples") {
    const auto a = ComplexMatrix::diagonal({0.0, 2.0});
    auto out = is_fremdervalue(a, 1.0, cfg);
    REQUIRE(out.status == SolveStatus::Found);
    CHECK(std::abs(std::abs(out.solution->vector(0)) - 1 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(std::abs(out.solution->vector(1)) - 1 / std::sqrt(2.0)) < 1e-15);

    CHECK(is_fremdervalue(a, 3.0, cfg).status == SolveStatus::ProvedNone);
    CHECK(is_fremdervalue(a, 0.0, cfg).status == SolveStatus::ProvedNone);
    CHECK_THROWS_AS(is_fremdervalue(a, Complex(std::nan(""), 0.0), cfg), ValueError);
}

TEST_CASE("is_fremdervalue uses the numerical-range screen") {
    // Rectangle [-1,1] x [1,3]; its corner neighbourhood near 1 + i is outside W(A),
    // since reaching it needs a common extreme eigenvector of B and K.
    const auto a = ComplexMatrix::from_rows({{1.0 + 2.0 * I, I}, {I, -1.0 + 2.0 * I}});
    const Complex z(0.95, 1.05);
    REQUIRE(fremdervalue_region(a, cfg).admits(z, 1e-12));
    const auto out = is_fremdervalue(a, z, cfg);
    CHECK(out.status == SolveStatus::ProvedNone);
    CHECK(out.route == SolveRoute::NumericalRange);
}

TEST_CASE("shift covariance: found vectors reproduce z as a Rayleigh quotient") {
    Rng rng(207);
    for (int t = 0; t < 40; ++t) {
        const Index n = uniform_int(rng, 2, 6);
        const ComplexMatrix a(gaussian_matrix(n, rng));
        // A point of the numerical range: z = <u, Au> for random unit u.
        const Vector u = gaussian_vector(n, rng).normalized();
        const Complex z = u.dot(a.dense() * u);
        const auto out = is_fremdervalue(a, z, cfg);
        if (out.status != SolveStatus::Found) continue;
        const Vector& x = out.solution->vector;
        const ComplexMatrix shifted = a.pencil(z);
        CHECK(std::abs(fremder_residual(shifted, x)) <= cfg.residual_tol * shifted.frobenius_norm());
        CHECK(std::abs(x.dot(a.dense() * x) - z) <= 1e-9 * (a.frobenius_norm() + std::abs(z)));
    }
}

TEST_CASE("ProvedNone is corroborated by random sampling") {
    Rng rng(211);
    SolverConfig c = cfg;
    int checked = 0;
    for (int t = 0; t < 30; ++t) {
        const Index n = uniform_int(rng, 2, 6);
        const ComplexMatrix a(t % 2 == 0 ? random_hermitian(n, rng) : gaussian_matrix(n, rng));
        const Complex z(uniform(rng, -4, 4), uniform(rng, -4, 4));
        const auto out = is_fremdervalue(a, z, c);
        if (out.status != SolveStatus::ProvedNone) continue;
        ++checked;
        const ComplexMatrix shifted = a.pencil(z);
        c.seed = static_cast<std::uint64_t>(t);
        const SearchResult s = random_search(shifted, c, 100000);
        const bool hit = s.best_residual <= c.residual_tol * shifted.frobenius_norm() &&
                         classify_solution(shifted, s.best_x, c) == Classification::Nontrivial;
        CHECK_FALSE(hit);
    }
    CHECK(checked > 5);
}
