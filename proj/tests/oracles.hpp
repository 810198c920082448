// oracles.hpp — Test-only independent oracles: characteristic-polynomial
// eigenvalue bisection, central finite differences, and sample statistics.
// Nothing here may call into the implementation paths it is used to check.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "fluxcal/linalg.hpp"

namespace oracles {

using Complex = std::complex<double>;

// det(H - lambda*I) by complex LU with partial pivoting. Real for Hermitian H
// and real lambda; the real part is returned.
inline double char_poly(const fluxcal::linalg::HermitianMatrix& h, double lambda) {
    const std::size_t n = h.dimension();
    std::vector<Complex> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = h.at(i, j) - (i == j ? Complex{lambda, 0.0} : Complex{0.0, 0.0});

    Complex det{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::abs(a[i * n + k]);
            if (cand > best) { best = cand; piv = i; }
        }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            det = -det;
        }
        det *= a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = a[i * n + k] / a[k * n + k];
            for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
        }
    }
    return det.real();
}

// All eigenvalues of a Hermitian matrix found as sign-change roots of the
// characteristic polynomial, refined by bisection. Assumes distinct
// eigenvalues (true almost surely for the random test matrices).
inline std::vector<double> eigenvalues_by_bisection(const fluxcal::linalg::HermitianMatrix& h,
                                                    double tol = 1e-12) {
    const std::size_t n = h.dimension();
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) r += std::abs(h.at(i, j));
        const double c = h.at(i, i).real();
        if (i == 0 || c - r < lo) lo = c - r;
        if (i == 0 || c + r > hi) hi = c + r;
    }
    const double pad = 1e-9 * (std::abs(lo) + std::abs(hi) + 1.0);
    lo -= pad;
    hi += pad;

    std::vector<std::pair<double, double>> brackets;
    for (std::size_t grid = 1024; grid <= 1024 * 64; grid *= 8) {
        brackets.clear();
        double xprev = lo;
        double pprev = char_poly(h, xprev);
        for (std::size_t k = 1; k <= grid; ++k) {
            const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(grid);
            const double p = char_poly(h, x);
            if ((pprev < 0.0 && p > 0.0) || (pprev > 0.0 && p < 0.0))
                brackets.emplace_back(xprev, x);
            else if (p == 0.0)
                brackets.emplace_back(x, x);
            xprev = x;
            pprev = p;
        }
        if (brackets.size() >= n) break;
    }
    if (brackets.size() != n)
        throw std::runtime_error("eigenvalues_by_bisection: could not isolate all roots");

    std::vector<double> roots;
    roots.reserve(n);
    for (auto [a, b] : brackets) {
        double pa = char_poly(h, a);
        while (b - a > tol * std::max(1.0, std::abs(a) + std::abs(b))) {
            const double m = 0.5 * (a + b);
            const double pm = char_poly(h, m);
            if ((pa < 0.0 && pm < 0.0) || (pa > 0.0 && pm > 0.0)) {
                a = m;
                pa = pm;
            } else {
                b = m;
            }
        }
        roots.push_back(0.5 * (a + b));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Central finite-difference Jacobian of a vector-valued function.
inline fluxcal::linalg::Mat fd_jacobian(
    const std::function<fluxcal::linalg::Vec(const fluxcal::linalg::Vec&)>& f,
    const fluxcal::linalg::Vec& x, double h_scale = 1e-6) {
    const fluxcal::linalg::Vec f0 = f(x);
    fluxcal::linalg::Mat j(f0.size(), x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double h = h_scale * std::max(1.0, std::abs(x[k]));
        fluxcal::linalg::Vec xp = x, xm = x;
        xp[k] += h;
        xm[k] -= h;
        const auto fp = f(xp);
        const auto fm = f(xm);
        for (std::size_t i = 0; i < f0.size(); ++i) j(i, k) = (fp[i] - fm[i]) / (2.0 * h);
    }
    return j;
}

inline double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

inline double sample_stddev(const std::vector<double>& v) {
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

} // namespace oracles
