#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fremder/errors.hpp"
#include "fremder/kernels.hpp"
#include "support/generators.hpp"

using namespace fremder;
using namespace fremder::testing;
namespace k = fremder::kernels;

namespace {

// Naive reference written against Eigen expressions, independent of both variants.
struct Reference {
    static Vector matvec(const DenseMatrix& a, const Vector& x) { return a * x; }
    static Vector matvec_adjoint(const DenseMatrix& a, const Vector& x) { return a.adjoint() * x; }
    static Complex dotc(const Vector& x, const Vector& y) { return x.dot(y); }
};

std::vector<k::Isa> variants() {
    std::vector<k::Isa> out{k::Isa::Scalar};
    if (k::available(k::Isa::Avx2)) out.push_back(k::Isa::Avx2);
    return out;
}

}  // namespace

TEST_CASE("every variant matches the reference on odd and even sizes") {
    Rng rng(31);
    for (k::Isa isa : variants()) {
        CAPTURE(k::to_string(isa));
        const k::KernelTable& t = k::table(isa);
        for (Index n = 1; n <= 17; ++n) {
            const DenseMatrix a = gaussian_matrix(n, rng);
            const Vector x = gaussian_vector(n, rng);
            const Vector y2 = gaussian_vector(n, rng);
            const double tol = 1e-13 * a.norm() * x.norm();

            Vector y(n);
            t.matvec(a.data(), n, x.data(), y.data());
            CHECK((y - Reference::matvec(a, x)).norm() <= tol);
            t.matvec_adjoint(a.data(), n, x.data(), y.data());
            CHECK((y - Reference::matvec_adjoint(a, x)).norm() <= tol);
            CHECK(std::abs(t.dotc(x.data(), y2.data(), n) - Reference::dotc(x, y2)) <= 1e-13 * x.norm() * y2.norm());

            const DenseMatrix b = gaussian_matrix(n, rng);
            DenseMatrix out(n, n);
            t.real_combination(0.3, a.data(), -1.7, b.data(), out.data(), a.size());
            CHECK((out - (0.3 * a - 1.7 * b)).norm() <= 1e-14 * (a.norm() + b.norm()));
        }
    }
}

TEST_CASE("scalar and SIMD variants agree to rounding") {
    if (!k::available(k::Isa::Avx2)) return;
    Rng rng(37);
    const k::KernelTable& s = k::table(k::Isa::Scalar);
    const k::KernelTable& v = k::table(k::Isa::Avx2);
    for (int trial = 0; trial < 200; ++trial) {
        const Index n = uniform_int(rng, 1, 40);
        const DenseMatrix a = gaussian_matrix(n, rng);
        const Vector x = gaussian_vector(n, rng);
        Vector ys(n), yv(n);
        s.matvec(a.data(), n, x.data(), ys.data());
        v.matvec(a.data(), n, x.data(), yv.data());
        CHECK((ys - yv).norm() <= 1e-13 * a.norm() * x.norm());
        s.matvec_adjoint(a.data(), n, x.data(), ys.data());
        v.matvec_adjoint(a.data(), n, x.data(), yv.data());
        CHECK((ys - yv).norm() <= 1e-13 * a.norm() * x.norm());
        CHECK(std::abs(s.dotc(x.data(), ys.data(), n) - v.dotc(x.data(), ys.data(), n)) <=
              1e-13 * x.norm() * ys.norm());
    }
}

TEST_CASE("selection switches the convenience wrappers") {
    const k::Isa before = k::active();
    Rng rng(41);
    const DenseMatrix a = gaussian_matrix(5, rng);
    const Vector x = gaussian_vector(5, rng);
    Vector scratch;
    for (k::Isa isa : variants()) {
        k::select(isa);
        CHECK(k::active() == isa);
        CHECK(std::abs(k::quadratic_form(a, x, scratch) - x.dot(a * x)) <= 1e-13 * a.norm());
    }
    k::select(before);
    if (!k::available(k::Isa::Avx2)) CHECK_THROWS_AS(k::select(k::Isa::Avx2), PreconditionError);
}
