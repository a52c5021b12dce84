#include <atomic>
#include <cstdlib>
#include <string>

#include "fremder/errors.hpp"
#include "fremder/kernels.hpp"

namespace fremder::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(FREMDER_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa initial_isa() {
    if (const char* env = std::getenv("FREMDER_SIMD"); env != nullptr && std::string(env) == "scalar") {
        return Isa::Scalar;
    }
    return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& active_slot() {
    static std::atomic<Isa> slot{initial_isa()};
    return slot;
}

}  // namespace

std::string_view to_string(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool available(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2: return cpu_has_avx2();
    }
    return false;
}

Isa active() { return active_slot().load(std::memory_order_relaxed); }

void select(Isa isa) {
    if (!available(isa)) {
        throw PreconditionError("kernel variant '" + std::string(to_string(isa)) + "' is not available");
    }
    active_slot().store(isa, std::memory_order_relaxed);
}

const KernelTable& table(Isa isa) {
#if defined(FREMDER_HAVE_AVX2)
    if (isa == Isa::Avx2) return avx2_table();
#endif
    (void)isa;
    return scalar_table();
}

void matvec(const DenseMatrix& a, const Vector& x, Vector& y) {
    y.resize(a.rows());
    table(active()).matvec(a.data(), a.rows(), x.data(), y.data());
}

void matvec_adjoint(const DenseMatrix& a, const Vector& x, Vector& y) {
    y.resize(a.rows());
    table(active()).matvec_adjoint(a.data(), a.rows(), x.data(), y.data());
}

Complex dotc(const Vector& x, const Vector& y) {
    return table(active()).dotc(x.data(), y.data(), x.size());
}

Complex quadratic_form(const DenseMatrix& a, const Vector& x, Vector& scratch) {
    const KernelTable& t = table(active());
    scratch.resize(a.rows());
    t.matvec(a.data(), a.rows(), x.data(), scratch.data());
    return t.dotc(x.data(), scratch.data(), x.size());
}

void real_combination(double alpha, const DenseMatrix& x, double beta, const DenseMatrix& y,
                      DenseMatrix& out) {
    out.resize(x.rows(), x.cols());
    table(active()).real_combination(alpha, x.data(), beta, y.data(), out.data(), x.size());
}

}  // namespace fremder::kernels
