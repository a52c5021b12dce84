// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "fremder/kernels.hpp"

namespace fremder::kernels {
namespace {

inline const double* as_doubles(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }

// Two complex numbers per 256-bit register: [r0 i0 r1 i1].

void matvec_avx2(const Complex* a, Index n, const Complex* x, Complex* y) {
    double* yd = as_doubles(y);
    const Index pairs = n / 2;
    for (Index i = 0; i < n; ++i) y[i] = Complex(0.0, 0.0);
    for (Index j = 0; j < n; ++j) {
        const __m256d xr = _mm256_set1_pd(x[j].real());
        const __m256d xi = _mm256_set1_pd(x[j].imag());
        const double* col = as_doubles(a + j * n);
        for (Index p = 0; p < pairs; ++p) {
            const __m256d av = _mm256_loadu_pd(col + 4 * p);
            const __m256d sw = _mm256_permute_pd(av, 0b0101);
            // even lanes: ar*xr - ai*xi, odd lanes: ai*xr + ar*xi
            const __m256d prod = _mm256_fmaddsub_pd(av, xr, _mm256_mul_pd(sw, xi));
            _mm256_storeu_pd(yd + 4 * p, _mm256_add_pd(_mm256_loadu_pd(yd + 4 * p), prod));
        }
        if (n % 2 != 0) {
            const Index i = n - 1;
            const double ar = col[2 * i];
            const double ai = col[2 * i + 1];
            y[i] = Complex(y[i].real() + ar * x[j].real() - ai * x[j].imag(),
                           y[i].imag() + ar * x[j].imag() + ai * x[j].real());
        }
    }
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

Complex dotc_avx2(const Complex* x, const Complex* y, Index len) {
    const double* xd = as_doubles(x);
    const double* yd = as_doubles(y);
    __m256d acc_re = _mm256_setzero_pd();  // [xr*yr, xi*yi, ...]
    __m256d acc_im = _mm256_setzero_pd();  // [xr*yi, xi*yr, ...]
    const Index pairs = len / 2;
    for (Index p = 0; p < pairs; ++p) {
        const __m256d xv = _mm256_loadu_pd(xd + 4 * p);
        const __m256d yv = _mm256_loadu_pd(yd + 4 * p);
        acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
        acc_im = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), acc_im);
    }
    double re = hsum(acc_re);
    const __m256d sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
    double im = hsum(_mm256_mul_pd(acc_im, sign));
    if (len % 2 != 0) {
        const Index i = len - 1;
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

void matvec_adjoint_avx2(const Complex* a, Index n, const Complex* x, Complex* y) {
    for (Index j = 0; j < n; ++j) y[j] = dotc_avx2(a + j * n, x, n);
}

void real_combination_avx2(double alpha, const Complex* x, double beta, const Complex* y,
                           Complex* out, Index len) {
    const double* xd = as_doubles(x);
    const double* yd = as_doubles(y);
    double* od = as_doubles(out);
    const Index count = 2 * len;
    const __m256d av = _mm256_set1_pd(alpha);
    const __m256d bv = _mm256_set1_pd(beta);
    Index k = 0;
    for (; k + 4 <= count; k += 4) {
        const __m256d r = _mm256_fmadd_pd(av, _mm256_loadu_pd(xd + k),
                                          _mm256_mul_pd(bv, _mm256_loadu_pd(yd + k)));
        _mm256_storeu_pd(od + k, r);
    }
    for (; k < count; ++k) od[k] = alpha * xd[k] + beta * yd[k];
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable t{matvec_avx2, matvec_adjoint_avx2, dotc_avx2, real_combination_avx2};
    return t;
}

}  // namespace fremder::kernels
