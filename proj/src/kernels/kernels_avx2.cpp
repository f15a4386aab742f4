#include "zne/kernels.hpp"

// AVX2+FMA kernels over interleaved complex<double> arrays. One __m256d
// holds two complex values. Complex products use the fmaddsub idiom:
//   re = ar*br - ai*bi   (even lanes)
//   im = ai*br + ar*bi   (odd lanes)
// This file is compiled with -mavx2 -mfma on x86 and must only be entered
// after a runtime CPU check (see dispatch.cpp).

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cmath>

namespace zne::kernels {
namespace {

// (a.re*b_re - a.im*b_im, a.im*b_re + a.re*b_im) for two packed complex
inline __m256d cmul(__m256d a, __m256d b_re, __m256d b_im) {
    __m256d a_sw = _mm256_permute_pd(a, 0x5);  // swap re/im in each complex
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

inline __m256d cmul_acc(__m256d acc, __m256d a, __m256d b_re, __m256d b_im) {
    return _mm256_add_pd(acc, cmul(a, b_re, b_im));
}

void scale_real_avx2(cplx* x, std::size_t n, double a) {
    double* p = reinterpret_cast<double*>(x);
    std::size_t len = 2 * n, i = 0;
    __m256d va = _mm256_set1_pd(a);
    for (; i + 4 <= len; i += 4) _mm256_storeu_pd(p + i, _mm256_mul_pd(_mm256_loadu_pd(p + i), va));
    for (; i < len; ++i) p[i] *= a;
}

void scale_avx2(cplx* x, std::size_t n, cplx a) {
    double* p = reinterpret_cast<double*>(x);
    __m256d are = _mm256_set1_pd(a.real());
    __m256d aim = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(p + 2 * i);
        _mm256_storeu_pd(p + 2 * i, cmul(v, are, aim));
    }
    for (; i < n; ++i) {
        double re = p[2 * i], im = p[2 * i + 1];
        p[2 * i] = a.real() * re - a.imag() * im;
        p[2 * i + 1] = a.real() * im + a.imag() * re;
    }
}

void axpy_avx2(cplx* y, const cplx* x, std::size_t n, cplx a) {
    double* py = reinterpret_cast<double*>(y);
    const double* px = reinterpret_cast<const double*>(x);
    __m256d are = _mm256_set1_pd(a.real());
    __m256d aim = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(px + 2 * i);
        __m256d vy = _mm256_loadu_pd(py + 2 * i);
        _mm256_storeu_pd(py + 2 * i, cmul_acc(vy, vx, are, aim));
    }
    for (; i < n; ++i) {
        double re = px[2 * i], im = px[2 * i + 1];
        py[2 * i] += a.real() * re - a.imag() * im;
        py[2 * i + 1] += a.real() * im + a.imag() * re;
    }
}

void axpy_real_avx2(cplx* y, const cplx* x, std::size_t n, double a) {
    double* py = reinterpret_cast<double*>(y);
    const double* px = reinterpret_cast<const double*>(x);
    std::size_t len = 2 * n, i = 0;
    __m256d va = _mm256_set1_pd(a);
    for (; i + 4 <= len; i += 4)
        _mm256_storeu_pd(py + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i)));
    for (; i < len; ++i) py[i] += a * px[i];
}

void rotate2_avx2(cplx* x, cplx* y, std::size_t n, const cplx* m) {
    double* px = reinterpret_cast<double*>(x);
    double* py = reinterpret_cast<double*>(y);
    __m256d m0r = _mm256_set1_pd(m[0].real()), m0i = _mm256_set1_pd(m[0].imag());
    __m256d m1r = _mm256_set1_pd(m[1].real()), m1i = _mm256_set1_pd(m[1].imag());
    __m256d m2r = _mm256_set1_pd(m[2].real()), m2i = _mm256_set1_pd(m[2].imag());
    __m256d m3r = _mm256_set1_pd(m[3].real()), m3i = _mm256_set1_pd(m[3].imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(px + 2 * i);
        __m256d vy = _mm256_loadu_pd(py + 2 * i);
        __m256d nx = cmul_acc(cmul(vx, m0r, m0i), vy, m1r, m1i);
        __m256d ny = cmul_acc(cmul(vx, m2r, m2i), vy, m3r, m3i);
        _mm256_storeu_pd(px + 2 * i, nx);
        _mm256_storeu_pd(py + 2 * i, ny);
    }
    if (i < n) scalar_ops().rotate2(x + i, y + i, n - i, m);
}

void rotate4_avx2(cplx* v0, cplx* v1, cplx* v2, cplx* v3, std::size_t n, const cplx* m) {
    double* p[4] = {reinterpret_cast<double*>(v0), reinterpret_cast<double*>(v1),
                    reinterpret_cast<double*>(v2), reinterpret_cast<double*>(v3)};
    alignas(32) double mr[16], mi[16];
    for (int k = 0; k < 16; ++k) {
        mr[k] = m[k].real();
        mi[k] = m[k].imag();
    }
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d in[4], out[4];
        for (int k = 0; k < 4; ++k) in[k] = _mm256_loadu_pd(p[k] + 2 * i);
        for (int r = 0; r < 4; ++r) {
            __m256d acc = cmul(in[0], _mm256_broadcast_sd(mr + 4 * r), _mm256_broadcast_sd(mi + 4 * r));
            for (int k = 1; k < 4; ++k)
                acc = cmul_acc(acc, in[k], _mm256_broadcast_sd(mr + 4 * r + k),
                               _mm256_broadcast_sd(mi + 4 * r + k));
            out[r] = acc;
        }
        for (int k = 0; k < 4; ++k) _mm256_storeu_pd(p[k] + 2 * i, out[k]);
    }
    if (i < n) scalar_ops().rotate4(v0 + i, v1 + i, v2 + i, v3 + i, n - i, m);
}

cplx dotu_avx2(const cplx* x, const cplx* y, std::size_t n) {
    const double* px = reinterpret_cast<const double*>(x);
    const double* py = reinterpret_cast<const double*>(y);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(px + 2 * i);
        __m256d vy = _mm256_loadu_pd(py + 2 * i);
        __m256d vy_re = _mm256_movedup_pd(vy);
        __m256d vy_im = _mm256_permute_pd(vy, 0xF);
        acc = cmul_acc(acc, vx, vy_re, vy_im);
    }
    alignas(32) double buf[4];
    _mm256_store_pd(buf, acc);
    double sr = buf[0] + buf[2], si = buf[1] + buf[3];
    for (; i < n; ++i) {
        double xr = px[2 * i], xi = px[2 * i + 1];
        double yr = py[2 * i], yi = py[2 * i + 1];
        sr += xr * yr - xi * yi;
        si += xr * yi + xi * yr;
    }
    return {sr, si};
}

double l2_distance_avx2(const double* p, const double* q, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(p + i), _mm256_loadu_pd(q + i));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    alignas(32) double buf[4];
    _mm256_store_pd(buf, acc);
    double s = buf[0] + buf[1] + buf[2] + buf[3];
    for (; i < n; ++i) {
        double d = p[i] - q[i];
        s += d * d;
    }
    return std::sqrt(s);
}

constexpr Ops kAvx2Ops = {
    "avx2",       scale_real_avx2, scale_avx2, axpy_avx2,        axpy_real_avx2,
    rotate2_avx2, rotate4_avx2,    dotu_avx2,  l2_distance_avx2,
};

}  // namespace

const Ops* avx2_ops_table() { return &kAvx2Ops; }

}  // namespace zne::kernels

#else

namespace zne::kernels {
const Ops* avx2_ops_table() { return nullptr; }
}  // namespace zne::kernels

#endif
