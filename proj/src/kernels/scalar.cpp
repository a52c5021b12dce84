#include "fremder/kernels.hpp"

namespace fremder::kernels {
namespace {

// Plain re/im arithmetic; std::complex multiplication would route through the
// NaN-checking libgcc helpers.

void matvec_scalar(const Complex* a, Index n, const Complex* x, Complex* y) {
    for (Index i = 0; i < n; ++i) y[i] = Complex(0.0, 0.0);
    for (Index j = 0; j < n; ++j) {
        const double xr = x[j].real();
        const double xi = x[j].imag();
        const Complex* col = a + j * n;
        for (Index i = 0; i < n; ++i) {
            const double ar = col[i].real();
            const double ai = col[i].imag();
            y[i] = Complex(y[i].real() + ar * xr - ai * xi, y[i].imag() + ar * xi + ai * xr);
        }
    }
}

Complex dotc_scalar(const Complex* x, const Complex* y, Index len) {
    double re = 0.0;
    double im = 0.0;
    for (Index i = 0; i < len; ++i) {
        const double xr = x[i].real();
        const double xi = x[i].imag();
        const double yr = y[i].real();
        const double yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

void matvec_adjoint_scalar(const Complex* a, Index n, const Complex* x, Complex* y) {
    for (Index j = 0; j < n; ++j) y[j] = dotc_scalar(a + j * n, x, n);
}

void real_combination_scalar(double alpha, const Complex* x, double beta, const Complex* y,
                             Complex* out, Index len) {
    for (Index i = 0; i < len; ++i) {
        out[i] = Complex(alpha * x[i].real() + beta * y[i].real(),
                         alpha * x[i].imag() + beta * y[i].imag());
    }
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable t{matvec_scalar, matvec_adjoint_scalar, dotc_scalar,
                               real_combination_scalar};
    return t;
}

}  // namespace fremder::kernels
