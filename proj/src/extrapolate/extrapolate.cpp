#include "zne/extrapolate.hpp"

#include <algorithm>
#include <cmath>

#include "zne/errors.hpp"

namespace zne {

namespace {

struct LinearSolve {
    std::vector<double> coeffs;
    double cov00 = 0.0;
};

// least squares for sum_i c_i x^i via normal equations in long double;
// returns the coefficient vector and (V^T W V)^{-1}[0][0]
LinearSolve poly_lsq(const std::vector<double>& x, const std::vector<double>& y,
                     const std::vector<double>* w, int degree) {
    const std::size_t m = x.size();
    const int np = degree + 1;
    std::vector<long double> G(static_cast<std::size_t>(np) * np, 0.0L);
    std::vector<long double> rhs(static_cast<std::size_t>(np), 0.0L);

    for (std::size_t k = 0; k < m; ++k) {
        const long double wk = w ? (*w)[k] : 1.0L;
        long double powers[32];
        powers[0] = 1.0L;
        for (int i = 1; i < 2 * np - 1; ++i) powers[i] = powers[i - 1] * x[k];
        for (int i = 0; i < np; ++i) {
            rhs[static_cast<std::size_t>(i)] += wk * powers[i] * y[k];
            for (int j = 0; j < np; ++j)
                G[static_cast<std::size_t>(i * np + j)] += wk * powers[i + j];
        }
    }

    // Gauss-Jordan inversion with partial pivoting
    std::vector<long double> inv(static_cast<std::size_t>(np) * np, 0.0L);
    for (int i = 0; i < np; ++i) inv[static_cast<std::size_t>(i * np + i)] = 1.0L;
    long double scale = 0.0L;
    for (const long double v : G) scale = std::max(scale, std::abs(v));
    if (scale == 0.0L) throw EstimationError("rank-deficient design matrix");

    for (int col = 0; col < np; ++col) {
        int pivot = col;
        for (int r = col + 1; r < np; ++r)
            if (std::abs(G[static_cast<std::size_t>(r * np + col)]) >
                std::abs(G[static_cast<std::size_t>(pivot * np + col)]))
                pivot = r;
        if (std::abs(G[static_cast<std::size_t>(pivot * np + col)]) < 1e-14L * scale)
            throw EstimationError("rank-deficient design matrix");
        if (pivot != col)
            for (int c = 0; c < np; ++c) {
                std::swap(G[static_cast<std::size_t>(pivot * np + c)], G[static_cast<std::size_t>(col * np + c)]);
                std::swap(inv[static_cast<std::size_t>(pivot * np + c)], inv[static_cast<std::size_t>(col * np + c)]);
            }
        const long double d = G[static_cast<std::size_t>(col * np + col)];
        for (int c = 0; c < np; ++c) {
            G[static_cast<std::size_t>(col * np + c)] /= d;
            inv[static_cast<std::size_t>(col * np + c)] /= d;
        }
        for (int r = 0; r < np; ++r) {
            if (r == col) continue;
            const long double f = G[static_cast<std::size_t>(r * np + col)];
            if (f == 0.0L) continue;
            for (int c = 0; c < np; ++c) {
                G[static_cast<std::size_t>(r * np + c)] -= f * G[static_cast<std::size_t>(col * np + c)];
                inv[static_cast<std::size_t>(r * np + c)] -= f * inv[static_cast<std::size_t>(col * np + c)];
            }
        }
    }

    LinearSolve out;
    out.coeffs.resize(static_cast<std::size_t>(np));
    for (int i = 0; i < np; ++i) {
        long double v = 0.0L;
        for (int j = 0; j < np; ++j) v += inv[static_cast<std::size_t>(i * np + j)] * rhs[static_cast<std::size_t>(j)];
        out.coeffs[static_cast<std::size_t>(i)] = static_cast<double>(v);
    }
    out.cov00 = static_cast<double>(inv[0]);
    return out;
}

std::vector<double> lambdas_of(const NoiseCurve& c) {
    std::vector<double> x;
    x.reserve(c.size());
    for (const CurvePoint& p : c.points) x.push_back(p.lambda);
    return x;
}

std::vector<double> values_of(const NoiseCurve& c) {
    std::vector<double> y;
    y.reserve(c.size());
    for (const CurvePoint& p : c.points) y.push_back(p.y);
    return y;
}

}  // namespace

Estimate fit_polynomial(const NoiseCurve& curve, int degree) {
    if (degree < 0 || degree > 12) throw EstimationError("fit_polynomial: unsupported degree");
    const std::size_t m = curve.size();
    if (m < static_cast<std::size_t>(degree) + 1)
        throw EstimationError("fit_polynomial: underdetermined (need at least d+1 points)");
    if (curve.distinct_lambdas() < degree + 1)
        throw EstimationError("fit_polynomial: need at least d+1 distinct lambdas");

    const bool use_weights = curve.all_sigmas_present();
    std::vector<double> w;
    if (use_weights) {
        for (const CurvePoint& p : curve.points) {
            if (*p.sigma <= 0.0) throw EstimationError("fit_polynomial: non-positive sigma");
            w.push_back(1.0 / (*p.sigma * *p.sigma));
        }
    }
    LinearSolve fit = poly_lsq(lambdas_of(curve), values_of(curve), use_weights ? &w : nullptr, degree);

    Estimate e;
    e.value = fit.coeffs[0];
    e.params = fit.coeffs;
    if (use_weights) e.variance = fit.cov00;
    e.model = "poly(" + std::to_string(degree) + ")";
    return e;
}

Estimate extrapolate_linear(const NoiseCurve& curve) {
    const std::size_t m = curve.size();
    if (m < 2) throw EstimationError("extrapolate_linear: need at least two points");
    if (curve.distinct_lambdas() < 2) throw EstimationError("extrapolate_linear: all lambdas equal");

    const bool weighted = curve.all_sigmas_present();
    long double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
    for (const CurvePoint& p : curve.points) {
        const long double wk = weighted ? 1.0L / (static_cast<long double>(*p.sigma) * *p.sigma) : 1.0L;
        sw += wk;
        swx += wk * p.lambda;
        swy += wk * p.y;
        swxx += wk * p.lambda * p.lambda;
        swxy += wk * p.lambda * p.y;
    }
    const long double det = sw * swxx - swx * swx;
    if (std::abs(det) < 1e-14L * std::max<long double>(sw * swxx, 1.0L))
        throw EstimationError("extrapolate_linear: degenerate lambdas");

    const long double slope = (sw * swxy - swx * swy) / det;
    const long double intercept = (swy - slope * swx) / sw;

    Estimate e;
    e.value = static_cast<double>(intercept);
    e.params = {static_cast<double>(intercept), static_cast<double>(slope)};
    // intercept variance; reduces to sigma^2 (1/m + mean^2/S_ll) for a
    // common sigma
    if (weighted) e.variance = static_cast<double>(swxx / det);
    e.model = "linear";
    return e;
}

Estimate extrapolate_richardson(const NoiseCurve& curve) {
    const std::size_t m = curve.size();
    if (m < 1) throw EstimationError("extrapolate_richardson: empty curve");
    const auto x = lambdas_of(curve);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (x[i] == x[j]) throw EstimationError("extrapolate_richardson: duplicate lambda");

    Estimate e;
    e.params.resize(m);
    long double value = 0.0L;
    long double var = 0.0L;
    const bool have_sigmas = curve.all_sigmas_present();
    for (std::size_t k = 0; k < m; ++k) {
        long double wk = 1.0L;
        for (std::size_t i = 0; i < m; ++i)
            if (i != k) wk *= static_cast<long double>(x[i]) / (x[i] - x[k]);
        e.params[k] = static_cast<double>(wk);
        value += wk * curve.points[k].y;
        if (have_sigmas) var += wk * wk * (*curve.points[k].sigma) * (*curve.points[k].sigma);
    }
    e.value = static_cast<double>(value);
    if (have_sigmas) e.variance = static_cast<double>(var);
    e.model = "richardson";
    return e;
}

double richardson_variance(int m, double sigma2) {
    if (m < 1) throw EstimationError("richardson_variance: m must be >= 1");
    long double binom = 1.0L;  // C(2m, m)
    for (int i = 1; i <= m; ++i) binom = binom * (m + i) / i;
    return sigma2 * static_cast<double>(binom - 1.0L);
}

namespace {

int majority_sign(const NoiseCurve& curve, double a) {
    int pos = 0, neg = 0;
    for (const CurvePoint& p : curve.points) (p.y >= a ? pos : neg) += 1;
    return pos >= neg ? 1 : -1;  // ties toward +
}

Estimate polyexp_known_a(const NoiseCurve& curve, int degree, double a, const PolyexpOptions& opt) {
    const std::size_t m = curve.size();
    if (m < static_cast<std::size_t>(degree) + 1)
        throw EstimationError("extrapolate_polyexp: underdetermined (need at least d+1 points)");

    double max_resid = 0.0;
    for (const CurvePoint& p : curve.points) max_resid = std::max(max_resid, std::abs(p.y - a));
    if (max_resid <= opt.epsilon)
        throw EstimationError("extrapolate_polyexp: all values equal the asymptote");

    const int sign = majority_sign(curve, a);
    std::vector<double> logs;
    std::vector<double> w;
    logs.reserve(m);
    const bool have_sigmas = curve.all_sigmas_present();
    for (const CurvePoint& p : curve.points) {
        const double r = std::abs(p.y - a) + opt.epsilon;
        logs.push_back(std::log(r));
        if (opt.weighted) {
            double wk = r * r;
            if (have_sigmas) wk /= (*p.sigma * *p.sigma);
            w.push_back(wk);
        }
    }
    LinearSolve fit = poly_lsq(lambdas_of(curve), logs, opt.weighted ? &w : nullptr, degree);

    Estimate e;
    e.value = a + sign * std::exp(fit.coeffs[0]);
    e.params.reserve(2 + fit.coeffs.size());
    e.params.push_back(a);
    e.params.push_back(static_cast<double>(sign));
    for (double c : fit.coeffs) e.params.push_back(c);
    if (opt.weighted && have_sigmas) {
        const double b = std::exp(fit.coeffs[0]);
        e.variance = b * b * fit.cov00;
    }
    e.model = "polyexp(" + std::to_string(degree) + ")";
    return e;
}

Estimate polyexp_unknown_a(const NoiseCurve& curve, int degree, const PolyexpOptions& opt) {
    const std::size_t m = curve.size();
    const int np = degree + 2;  // a plus d+1 z-coefficients
    if (m < static_cast<std::size_t>(np))
        throw EstimationError("extrapolate_polyexp: underdetermined (need at least d+2 points)");

    // seed: a at the tail of the curve, z from the log-space fit
    std::size_t tail = 0;
    for (std::size_t k = 1; k < m; ++k)
        if (curve.points[k].lambda >= curve.points[tail].lambda) tail = k;
    double a = curve.points[tail].y;
    double max_resid = 0.0;
    for (const CurvePoint& p : curve.points) max_resid = std::max(max_resid, std::abs(p.y - a));
    if (max_resid <= opt.epsilon)
        throw EstimationError("extrapolate_polyexp: data indistinguishable from a constant");
    const int sign = majority_sign(curve, a);

    std::vector<double> z(static_cast<std::size_t>(degree) + 1, 0.0);
    {
        // weights (y - a)^2 keep the zero-residual seed point (a equals one
        // of the y values by construction) from poisoning the line fit
        std::vector<double> logs, w;
        for (const CurvePoint& p : curve.points) {
            const double r = std::abs(p.y - a) + opt.epsilon;
            logs.push_back(std::log(r));
            w.push_back(r * r);
        }
        LinearSolve seed = poly_lsq(lambdas_of(curve), logs, &w, degree);
        z = seed.coeffs;
    }

    // damped Gauss-Newton on (a, z)
    auto sse = [&](double aa, const std::vector<double>& zz) {
        double s = 0.0;
        for (const CurvePoint& p : curve.points) {
            double zl = 0.0, pw = 1.0;
            for (double c : zz) {
                zl += c * pw;
                pw *= p.lambda;
            }
            const double r = aa + sign * std::exp(zl) - p.y;
            s += r * r;
        }
        return s;
    };

    double mu = 1e-3;
    double current = sse(a, z);
    bool converged = false;
    for (int it = 0; it < opt.max_iterations && !converged; ++it) {
        // residuals and Jacobian
        std::vector<long double> JtJ(static_cast<std::size_t>(np) * np, 0.0L);
        std::vector<long double> Jtr(static_cast<std::size_t>(np), 0.0L);
        for (const CurvePoint& p : curve.points) {
            double zl = 0.0, pw = 1.0;
            std::vector<double> powers(static_cast<std::size_t>(degree) + 1);
            for (std::size_t i = 0; i < z.size(); ++i) {
                powers[i] = pw;
                zl += z[i] * pw;
                pw *= p.lambda;
            }
            const double ez = sign * std::exp(zl);
            const double r = a + ez - p.y;
            std::vector<double> row(static_cast<std::size_t>(np));
            row[0] = 1.0;
            for (std::size_t i = 0; i < z.size(); ++i) row[i + 1] = ez * powers[i];
            for (int i = 0; i < np; ++i) {
                Jtr[static_cast<std::size_t>(i)] += static_cast<long double>(row[static_cast<std::size_t>(i)]) * r;
                for (int j = 0; j < np; ++j)
                    JtJ[static_cast<std::size_t>(i * np + j)] +=
                        static_cast<long double>(row[static_cast<std::size_t>(i)]) * row[static_cast<std::size_t>(j)];
            }
        }

        bool stepped = false;
        for (int attempt = 0; attempt < 25 && !stepped; ++attempt) {
            // solve (JtJ + mu diag) delta = -Jtr
            std::vector<long double> A = JtJ;
            for (int i = 0; i < np; ++i) {
                const std::size_t ii = static_cast<std::size_t>(i * np + i);
                A[ii] += mu * (JtJ[ii] > 0.0L ? JtJ[ii] : 1.0L);
            }
            std::vector<long double> rhsv(static_cast<std::size_t>(np));
            for (int i = 0; i < np; ++i) rhsv[static_cast<std::size_t>(i)] = -Jtr[static_cast<std::size_t>(i)];
            // Gaussian elimination
            bool singular = false;
            for (int col = 0; col < np && !singular; ++col) {
                int piv = col;
                for (int r2 = col + 1; r2 < np; ++r2)
                    if (std::abs(A[static_cast<std::size_t>(r2 * np + col)]) >
                        std::abs(A[static_cast<std::size_t>(piv * np + col)]))
                        piv = r2;
                if (std::abs(A[static_cast<std::size_t>(piv * np + col)]) < 1e-30L) {
                    singular = true;
                    break;
                }
                if (piv != col) {
                    for (int c2 = col; c2 < np; ++c2)
                        std::swap(A[static_cast<std::size_t>(piv * np + c2)], A[static_cast<std::size_t>(col * np + c2)]);
                    std::swap(rhsv[static_cast<std::size_t>(piv)], rhsv[static_cast<std::size_t>(col)]);
                }
                for (int r2 = col + 1; r2 < np; ++r2) {
                    const long double f =
                        A[static_cast<std::size_t>(r2 * np + col)] / A[static_cast<std::size_t>(col * np + col)];
                    for (int c2 = col; c2 < np; ++c2)
                        A[static_cast<std::size_t>(r2 * np + c2)] -= f * A[static_cast<std::size_t>(col * np + c2)];
                    rhsv[static_cast<std::size_t>(r2)] -= f * rhsv[static_cast<std::size_t>(col)];
                }
            }
            if (singular) {
                mu *= 10.0;
                continue;
            }
            std::vector<double> delta(static_cast<std::size_t>(np));
            for (int i = np - 1; i >= 0; --i) {
                long double v = rhsv[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < np; ++j)
                    v -= A[static_cast<std::size_t>(i * np + j)] * delta[static_cast<std::size_t>(j)];
                delta[static_cast<std::size_t>(i)] =
                    static_cast<double>(v / A[static_cast<std::size_t>(i * np + i)]);
            }

            const double a_try = a + delta[0];
            std::vector<double> z_try = z;
            for (std::size_t i = 0; i < z.size(); ++i) z_try[i] += delta[i + 1];
            const double next = sse(a_try, z_try);
            if (next <= current) {
                double rel = 0.0;
                rel = std::max(rel, std::abs(delta[0]) / (std::abs(a) + 1e-12));
                for (std::size_t i = 0; i < z.size(); ++i)
                    rel = std::max(rel, std::abs(delta[i + 1]) / (std::abs(z[i]) + 1e-12));
                a = a_try;
                z = z_try;
                current = next;
                mu = std::max(mu / 3.0, 1e-12);
                stepped = true;
                if (rel < opt.rel_tolerance) converged = true;
            } else {
                mu *= 10.0;
            }
        }
        if (!stepped) converged = true;  // no improving step exists at any damping
    }
    if (!converged) throw EstimationError("extrapolate_polyexp: nonlinear fit did not converge");

    Estimate e;
    e.value = a + sign * std::exp(z[0]);
    e.params.push_back(a);
    e.params.push_back(static_cast<double>(sign));
    for (double c : z) e.params.push_back(c);
    e.model = "polyexp(" + std::to_string(degree) + ")";
    return e;
}

}  // namespace

Estimate extrapolate_polyexp(const NoiseCurve& curve, int degree, std::optional<double> a,
                             const PolyexpOptions& options) {
    if (degree < 0 || degree > 8) throw EstimationError("extrapolate_polyexp: unsupported degree");
    return a ? polyexp_known_a(curve, degree, *a, options) : polyexp_unknown_a(curve, degree, options);
}

Estimate extrapolate_exp(const NoiseCurve& curve, std::optional<double> a,
                         const PolyexpOptions& options) {
    Estimate pe = extrapolate_polyexp(curve, 1, a, options);
    Estimate e;
    e.value = pe.value;
    const double asym = pe.params[0];
    const double sign = pe.params[1];
    const double z0 = pe.params[2];
    const double z1 = pe.params[3];
    e.params = {asym, sign * std::exp(z0), -z1};  // a, b, c of a + b exp(-c lambda)
    e.variance = pe.variance;
    e.model = "exp";
    e.fit_warning = pe.fit_warning;
    return e;
}

}  // namespace zne
