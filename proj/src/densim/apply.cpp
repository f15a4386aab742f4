#include "zne/apply.hpp"

#include <cstddef>

#include "zne/errors.hpp"
#include "zne/kernels.hpp"

namespace zne {

namespace {

using kernels::active_ops;

// inline 2x2 update of a single (x, y) pair
inline void rot2_one(cplx& x, cplx& y, const SmallMat& m) {
    cplx a = x, b = y;
    x = m.a[0] * a + m.a[1] * b;
    y = m.a[2] * a + m.a[3] * b;
}

inline void rot4_one(cplx& x0, cplx& x1, cplx& x2, cplx& x3, const SmallMat& m) {
    cplx in[4] = {x0, x1, x2, x3};
    cplx out[4];
    for (int r = 0; r < 4; ++r)
        out[r] = m.at(r, 0) * in[0] + m.at(r, 1) * in[1] + m.at(r, 2) * in[2] + m.at(r, 3) * in[3];
    x0 = out[0];
    x1 = out[1];
    x2 = out[2];
    x3 = out[3];
}

void left_1q(cplx* a, std::size_t dim, std::size_t w, const SmallMat& u) {
    const auto& K = active_ops();
    for (std::size_t base = 0; base < dim; base += 2 * w)
        for (std::size_t r = base; r < base + w; ++r)
            K.rotate2(a + r * dim, a + (r + w) * dim, dim, u.a.data());
}

void right_1q(cplx* a, std::size_t dim, std::size_t w, const SmallMat& uc) {
    const auto& K = active_ops();
    for (std::size_t r = 0; r < dim; ++r) {
        cplx* row = a + r * dim;
        if (w == 1) {
            for (std::size_t c = 0; c < dim; c += 2) rot2_one(row[c], row[c + 1], uc);
        } else {
            for (std::size_t c = 0; c < dim; c += 2 * w) K.rotate2(row + c, row + c + w, w, uc.a.data());
        }
    }
}

void left_2q(cplx* a, std::size_t dim, std::size_t w0, std::size_t w1, const SmallMat& u) {
    const auto& K = active_ops();
    const std::size_t wlo = w0 < w1 ? w0 : w1;
    const std::size_t whi = w0 < w1 ? w1 : w0;
    for (std::size_t h = 0; h < dim; h += 2 * whi)
        for (std::size_t mb = h; mb < h + whi; mb += 2 * wlo)
            for (std::size_t r = mb; r < mb + wlo; ++r)
                K.rotate4(a + r * dim, a + (r + w0) * dim, a + (r + w1) * dim, a + (r + w0 + w1) * dim,
                          dim, u.a.data());
}

void right_2q(cplx* a, std::size_t dim, std::size_t w0, std::size_t w1, const SmallMat& uc) {
    const auto& K = active_ops();
    const std::size_t wlo = w0 < w1 ? w0 : w1;
    const std::size_t whi = w0 < w1 ? w1 : w0;
    for (std::size_t r = 0; r < dim; ++r) {
        cplx* row = a + r * dim;
        for (std::size_t h = 0; h < dim; h += 2 * whi)
            for (std::size_t mb = h; mb < h + whi; mb += 2 * wlo) {
                if (wlo == 1) {
                    rot4_one(row[mb], row[mb + w0], row[mb + w1], row[mb + w0 + w1], uc);
                } else {
                    K.rotate4(row + mb, row + mb + w0, row + mb + w1, row + mb + w0 + w1, wlo,
                              uc.a.data());
                }
            }
    }
}

}  // namespace

void apply_matrix_left(cplx* a, int n_qubits, const SmallMat& u, const std::vector<int>& targets) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (u.dim == 2) {
        left_1q(a, dim, std::size_t{1} << targets[0], u);
    } else if (u.dim == 4) {
        left_2q(a, dim, std::size_t{1} << targets[0], std::size_t{1} << targets[1], u);
    } else {
        throw Error("apply_matrix_left: unsupported matrix dimension");
    }
}

void apply_matrix_right_dag(cplx* a, int n_qubits, const SmallMat& u, const std::vector<int>& targets) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const SmallMat uc = u.conj();
    if (u.dim == 2) {
        right_1q(a, dim, std::size_t{1} << targets[0], uc);
    } else if (u.dim == 4) {
        right_2q(a, dim, std::size_t{1} << targets[0], std::size_t{1} << targets[1], uc);
    } else {
        throw Error("apply_matrix_right_dag: unsupported matrix dimension");
    }
}

}  // namespace zne
