#pragma once

// Complex dense kernels behind the residual evaluation, the sphere optimizer and
// the oracles. Each entry point has a scalar reference implementation and, on
// x86-64, an AVX2/FMA variant chosen at runtime. Storage is column-major with
// interleaved (re, im) doubles, i.e. the layout of Eigen::MatrixXcd.

#include <span>
#include <string_view>

#include "fremder/matrix.hpp"

namespace fremder::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
    // y = A x, A is n x n column-major
    void (*matvec)(const Complex* a, Index n, const Complex* x, Complex* y);
    // y = A^dagger x
    void (*matvec_adjoint)(const Complex* a, Index n, const Complex* x, Complex* y);
    // sum_i conj(x_i) y_i
    Complex (*dotc)(const Complex* x, const Complex* y, Index len);
    // out = alpha * x + beta * y with real alpha, beta
    void (*real_combination)(double alpha, const Complex* x, double beta, const Complex* y,
                             Complex* out, Index len);
};

const KernelTable& scalar_table();
#if defined(FREMDER_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

/// True when the variant was compiled in and the CPU supports it.
bool available(Isa isa);

/// Variant used by the convenience wrappers below. Defaults to the best available
/// one; FREMDER_SIMD=scalar in the environment forces the reference path.
Isa active();

/// Throws PreconditionError if the variant is unavailable.
void select(Isa isa);

const KernelTable& table(Isa isa);

void matvec(const DenseMatrix& a, const Vector& x, Vector& y);
void matvec_adjoint(const DenseMatrix& a, const Vector& x, Vector& y);
Complex dotc(const Vector& x, const Vector& y);

/// <x, Ax>; `scratch` receives Ax.
Complex quadratic_form(const DenseMatrix& a, const Vector& x, Vector& scratch);

/// alpha * x + beta * y elementwise over equally sized matrices.
void real_combination(double alpha, const DenseMatrix& x, double beta, const DenseMatrix& y,
                      DenseMatrix& out);

}  // namespace fremder::kernels
