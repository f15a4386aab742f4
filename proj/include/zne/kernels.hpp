#pragma once

#include <complex>
#include <cstddef>

namespace zne::kernels {

using cplx = std::complex<double>;

// Vector primitives behind the density-matrix simulator. Each entry has a
// portable scalar implementation and an AVX2+FMA one; the active table is
// chosen once per process. The two implementations are equivalence-tested
// against each other on random data.
//
// Pointer arguments never alias unless stated otherwise.
struct Ops {
    const char* name;

    // x[i] *= a
    void (*scale_real)(cplx* x, std::size_t n, double a);
    void (*scale)(cplx* x, std::size_t n, cplx a);
    // y[i] += a * x[i]
    void (*axpy)(cplx* y, const cplx* x, std::size_t n, cplx a);
    void (*axpy_real)(cplx* y, const cplx* x, std::size_t n, double a);
    // (x[i], y[i]) <- (m00 x[i] + m01 y[i], m10 x[i] + m11 y[i]); m row-major
    void (*rotate2)(cplx* x, cplx* y, std::size_t n, const cplx* m);
    // four-stream version with a row-major 4x4 coefficient matrix
    void (*rotate4)(cplx* v0, cplx* v1, cplx* v2, cplx* v3, std::size_t n, const cplx* m);
    // unconjugated dot product sum_i x[i] y[i]
    cplx (*dotu)(const cplx* x, const cplx* y, std::size_t n);
    // Euclidean distance between two real vectors
    double (*l2_distance)(const double* p, const double* q, std::size_t n);
};

const Ops& scalar_ops();

// nullptr when the build or the CPU does not support AVX2+FMA
const Ops* avx2_ops();

// Table used by the simulator. Honors ZNE_KERNELS=scalar|avx2|auto (default
// auto = best available; avx2 falls back to scalar if unsupported).
const Ops& active_ops();

}  // namespace zne::kernels
