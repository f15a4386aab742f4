#include "zne/kernels.hpp"

#include <cmath>

// Reference kernels. Complex arithmetic is spelled out on the real and
// imaginary parts so the compiler emits plain mul/add instead of the
// Annex-G library calls behind std::complex operator*.

namespace zne::kernels {
namespace {

void scale_real_scalar(cplx* x, std::size_t n, double a) {
    double* p = reinterpret_cast<double*>(x);
    for (std::size_t i = 0; i < 2 * n; ++i) p[i] *= a;
}

void scale_scalar(cplx* x, std::size_t n, cplx a) {
    const double ar = a.real(), ai = a.imag();
    double* p = reinterpret_cast<double*>(x);
    for (std::size_t i = 0; i < n; ++i) {
        double re = p[2 * i], im = p[2 * i + 1];
        p[2 * i] = ar * re - ai * im;
        p[2 * i + 1] = ar * im + ai * re;
    }
}

void axpy_scalar(cplx* y, const cplx* x, std::size_t n, cplx a) {
    const double ar = a.real(), ai = a.imag();
    double* py = reinterpret_cast<double*>(y);
    const double* px = reinterpret_cast<const double*>(x);
    for (std::size_t i = 0; i < n; ++i) {
        double re = px[2 * i], im = px[2 * i + 1];
        py[2 * i] += ar * re - ai * im;
        py[2 * i + 1] += ar * im + ai * re;
    }
}

void axpy_real_scalar(cplx* y, const cplx* x, std::size_t n, double a) {
    double* py = reinterpret_cast<double*>(y);
    const double* px = reinterpret_cast<const double*>(x);
    for (std::size_t i = 0; i < 2 * n; ++i) py[i] += a * px[i];
}

void rotate2_scalar(cplx* x, cplx* y, std::size_t n, const cplx* m) {
    const double m0r = m[0].real(), m0i = m[0].imag();
    const double m1r = m[1].real(), m1i = m[1].imag();
    const double m2r = m[2].real(), m2i = m[2].imag();
    const double m3r = m[3].real(), m3i = m[3].imag();
    double* px = reinterpret_cast<double*>(x);
    double* py = reinterpret_cast<double*>(y);
    for (std::size_t i = 0; i < n; ++i) {
        double xr = px[2 * i], xi = px[2 * i + 1];
        double yr = py[2 * i], yi = py[2 * i + 1];
        px[2 * i] = m0r * xr - m0i * xi + m1r * yr - m1i * yi;
        px[2 * i + 1] = m0r * xi + m0i * xr + m1r * yi + m1i * yr;
        py[2 * i] = m2r * xr - m2i * xi + m3r * yr - m3i * yi;
        py[2 * i + 1] = m2r * xi + m2i * xr + m3r * yi + m3i * yr;
    }
}

void rotate4_scalar(cplx* v0, cplx* v1, cplx* v2, cplx* v3, std::size_t n, const cplx* m) {
    double* p[4] = {reinterpret_cast<double*>(v0), reinterpret_cast<double*>(v1),
                    reinterpret_cast<double*>(v2), reinterpret_cast<double*>(v3)};
    double mr[16], mi[16];
    for (int k = 0; k < 16; ++k) {
        mr[k] = m[k].real();
        mi[k] = m[k].imag();
    }
    for (std::size_t i = 0; i < n; ++i) {
        double ar[4], ai[4];
        for (int k = 0; k < 4; ++k) {
            ar[k] = p[k][2 * i];
            ai[k] = p[k][2 * i + 1];
        }
        for (int r = 0; r < 4; ++r) {
            double sr = 0.0, si = 0.0;
            for (int k = 0; k < 4; ++k) {
                sr += mr[4 * r + k] * ar[k] - mi[4 * r + k] * ai[k];
                si += mr[4 * r + k] * ai[k] + mi[4 * r + k] * ar[k];
            }
            p[r][2 * i] = sr;
            p[r][2 * i + 1] = si;
        }
    }
}

cplx dotu_scalar(const cplx* x, const cplx* y, std::size_t n) {
    const double* px = reinterpret_cast<const double*>(x);
    const double* py = reinterpret_cast<const double*>(y);
    double sr = 0.0, si = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double xr = px[2 * i], xi = px[2 * i + 1];
        double yr = py[2 * i], yi = py[2 * i + 1];
        sr += xr * yr - xi * yi;
        si += xr * yi + xi * yr;
    }
    return {sr, si};
}

double l2_distance_scalar(const double* p, const double* q, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d = p[i] - q[i];
        s += d * d;
    }
    return std::sqrt(s);
}

constexpr Ops kScalarOps = {
    "scalar",      scale_real_scalar, scale_scalar, axpy_scalar,        axpy_real_scalar,
    rotate2_scalar, rotate4_scalar,   dotu_scalar,  l2_distance_scalar,
};

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

}  // namespace zne::kernels
