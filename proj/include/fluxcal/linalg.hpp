// linalg.hpp — Small dense vectors/matrices, complex Hermitian Jacobi
// eigensolver, pivoted linear solve, and 2-norm condition numbers.
//
// Everything here targets the tiny problems this library deals in
// (coil counts and single-excitation manifolds, dimension <= 16 for the
// eigensolver) so the implementations favour clarity over blocking.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "fluxcal/errors.hpp"

namespace fluxcal::linalg {

using Vec = std::vector<double>;
using Complex = std::complex<double>;

// ------------------------------- real matrix ---------------------------------

// Dense row-major real matrix.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return a_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<double>& data() const noexcept { return a_; }
    std::vector<double>& data() noexcept { return a_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> a_;
};

inline Vec mat_vec(const Mat& m, const Vec& v) {
    if (m.cols() != v.size())
        throw DimensionMismatch("mat_vec: matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " but vector has length " +
                                std::to_string(v.size()));
    Vec out(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

inline double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm_inf(const Vec& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// Solve A x = b by Gaussian elimination with partial pivoting. A must be
// square; throws SingularMatrix when a pivot underflows the scale of A.
inline Vec solve(Mat a, Vec b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw DimensionMismatch("solve: need square matrix and matching rhs");
    double scale = 0.0;
    for (double x : a.data()) scale = std::max(scale, std::abs(x));
    const double tiny = std::max(scale, 1.0) * n * std::numeric_limits<double>::epsilon() * 1e-2;

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(perm[k], k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::abs(a(perm[i], k));
            if (cand > best) { best = cand; piv = i; }
        }
        if (!(best > tiny))
            throw SingularMatrix("solve: pivot " + std::to_string(k) + " is numerically zero");
        std::swap(perm[k], perm[piv]);
        const std::size_t pk = perm[k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const std::size_t pi = perm[i];
            const double f = a(pi, k) / a(pk, k);
            if (f == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) a(pi, j) -= f * a(pk, j);
            b[pi] -= f * b[pk];
        }
    }
    Vec x(n, 0.0);
    for (std::size_t k = n; k-- > 0;) {
        const std::size_t pk = perm[k];
        double s = b[pk];
        for (std::size_t j = k + 1; j < n; ++j) s -= a(pk, j) * x[j];
        x[k] = s / a(pk, k);
    }
    return x;
}

// ----------------------------- Hermitian matrix -------------------------------

// Conjugate-symmetric storage: set() mirrors entries so hermiticity holds by
// construction. Dimension is capped at 16 (one cavity mode plus at most 15
// qubits is far beyond anything this library simulates).
class HermitianMatrix {
public:
    static constexpr std::size_t max_dimension = 16;

    HermitianMatrix() = default;

    explicit HermitianMatrix(std::size_t n) : n_(n), a_(n * n, Complex{0.0, 0.0}) {
        if (n == 0 || n > max_dimension)
            throw InvalidArgument("HermitianMatrix: dimension must be in [1, 16], got " +
                                  std::to_string(n));
    }

    // Validates conjugate symmetry of a full complex buffer (row-major) to
    // 1e-12 relative to the Frobenius norm.
    static HermitianMatrix from_full(std::size_t n, const std::vector<Complex>& full) {
        if (full.size() != n * n) throw DimensionMismatch("from_full: buffer size mismatch");
        HermitianMatrix h(n);
        double fro = 0.0;
        for (const Complex& z : full) fro += std::norm(z);
        fro = std::sqrt(fro);
        const double tol = 1e-12 * std::max(fro, 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const Complex z = full[i * n + j];
                const Complex zt = std::conj(full[j * n + i]);
                if (std::abs(z - zt) > tol)
                    throw NotHermitian("from_full: entry (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") breaks conjugate symmetry");
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            h.a_[i * n + i] = Complex{full[i * n + i].real(), 0.0};
            for (std::size_t j = i + 1; j < n; ++j) {
                const Complex z = 0.5 * (full[i * n + j] + std::conj(full[j * n + i]));
                h.a_[i * n + j] = z;
                h.a_[j * n + i] = std::conj(z);
            }
        }
        return h;
    }

    std::size_t dimension() const noexcept { return n_; }

    Complex at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    // Writes (i,j) and its mirror; diagonal entries keep only the real part.
    void set(std::size_t i, std::size_t j, Complex v) {
        if (i == j) {
            a_[i * n_ + i] = Complex{v.real(), 0.0};
        } else {
            a_[i * n_ + j] = v;
            a_[j * n_ + i] = std::conj(v);
        }
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const Complex& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    double trace() const {
        double t = 0.0;
        for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i].real();
        return t;
    }

    const std::vector<Complex>& storage() const noexcept { return a_; }

private:
    std::size_t n_ = 0;
    std::vector<Complex> a_;
};

// Eigen-decomposition of a Hermitian matrix: eigenvalues ascending,
// eigenvector k stored as column k of `vectors` (row-major buffer).
struct EighResult {
    Vec eigenvalues;
    std::vector<Complex> vectors;
    std::size_t dimension = 0;

    Complex vector(std::size_t row, std::size_t k) const { return vectors[row * dimension + k]; }
};

// Cyclic Jacobi rotations on the full complex Hermitian matrix. Converges
// when the off-diagonal Frobenius norm drops below 1e-12 of the matrix norm.
inline EighResult eigh(const HermitianMatrix& h) {
    const std::size_t n = h.dimension();
    if (n == 0) throw InvalidArgument("eigh: empty matrix");

    std::vector<Complex> a = h.a_;
    std::vector<Complex> v(n * n, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    const double fro = std::max(h.frobenius_norm(), std::numeric_limits<double>::min());
    const double stop = 1e-12 * fro;

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a[i * n + j]);
        return std::sqrt(s);
    };

    const int max_sweeps = 64;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (off_norm() <= stop) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex d = a[p * n + q];
                const double ad = std::abs(d);
                if (ad <= 1e-300) {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const double tau = (aqq - app) / (2.0 * ad);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex u = d / ad; // phase of the off-diagonal entry

                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const Complex arp = a[r * n + p];
                    const Complex arq = a[r * n + q];
                    const Complex nrp = c * arp - s * std::conj(u) * arq;
                    const Complex nrq = s * u * arp + c * arq;
                    a[r * n + p] = nrp;
                    a[p * n + r] = std::conj(nrp);
                    a[r * n + q] = nrq;
                    a[q * n + r] = std::conj(nrq);
                }
                const double npp = app * c * c + aqq * s * s - 2.0 * c * s * ad;
                const double nqq = app * s * s + aqq * c * c + 2.0 * c * s * ad;
                a[p * n + p] = npp;
                a[q * n + q] = nqq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                for (std::size_t r = 0; r < n; ++r) {
                    const Complex vrp = v[r * n + p];
                    const Complex vrq = v[r * n + q];
                    v[r * n + p] = c * vrp - s * std::conj(u) * vrq;
                    v[r * n + q] = s * u * vrp + c * vrq;
                }
            }
        }
    }
    if (sweep == max_sweeps && off_norm() > stop)
        throw NoConvergence("eigh: Jacobi sweeps exhausted before reaching tolerance");

    EighResult res;
    res.dimension = n;
    res.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.eigenvalues[i] = a[i * n + i].real();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return res.eigenvalues[x] < res.eigenvalues[y];
    });

    EighResult sorted;
    sorted.dimension = n;
    sorted.eigenvalues.resize(n);
    sorted.vectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        sorted.eigenvalues[k] = res.eigenvalues[order[k]];
        for (std::size_t r = 0; r < n; ++r) sorted.vectors[r * n + k] = v[r * n + order[k]];
    }
    return sorted;
}

// 2-norm condition number of a square real matrix, via the eigenvalues of
// A^T A (so limited to the eigensolver's dimension cap). Returns +inf for
// rank-deficient input.
inline double cond_2(const Mat& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DimensionMismatch("cond_2: matrix must be square");
    if (n > HermitianMatrix::max_dimension)
        throw InvalidArgument("cond_2: dimension exceeds eigensolver cap");
    HermitianMatrix g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += m(k, i) * m(k, j);
            g.set(i, j, Complex{s, 0.0});
        }
    }
    const EighResult e = eigh(g);
    const double lmax = e.eigenvalues.back();
    const double lmin = e.eigenvalues.front();
    if (!(lmax > 0.0) || !(lmin > 0.0)) return std::numeric_limits<double>::infinity();
    return std::sqrt(lmax / lmin);
}

} // namespace fluxcal::linalg
