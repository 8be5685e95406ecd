#include "puresep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "puresep/errors.hpp"

namespace puresep {

namespace {

constexpr int kMaxJacobiSweeps = 60;

double frobenius_norm(const std::vector<Complex>& m) {
    double s = 0.0;
    for (const Complex& e : m) s += std::norm(e);
    return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(std::vector<Complex> a, std::size_t n,
                                          OpCounters* counters) {
    if (n == 0) throw ArgumentError("eigenvalue solve needs a non-empty matrix");
    if (a.size() != n * n) throw ArgumentError("matrix storage does not match its order");

    const double scale = frobenius_norm(a);
    const double sym_tol = 1e-10 * (1.0 + scale);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(a[i * n + i].imag()) > sym_tol)
            throw ArgumentError("matrix is not Hermitian: complex diagonal");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(a[i * n + j] - std::conj(a[j * n + i])) > sym_tol)
                throw ArgumentError("matrix is not Hermitian");
            a[j * n + i] = std::conj(a[i * n + j]);
        }
        a[i * n + i] = Complex{a[i * n + i].real(), 0.0};
    }

    std::vector<double> eig(n);
    if (n == 1) {
        eig[0] = a[0].real();
        return eig;
    }

    const double off_tol = 1e-15 * (scale > 0.0 ? scale : 1.0);
    for (int sweep = 0;; ++sweep) {
        double max_off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (counters) counters->cmp += 1;
                max_off = std::max(max_off, std::abs(a[p * n + q]));
            }
        if (max_off <= off_tol) break;
        if (sweep >= kMaxJacobiSweeps)
            throw NumericalError("Jacobi eigenvalue iteration did not converge after " +
                                 std::to_string(kMaxJacobiSweeps) + " sweeps");

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a[p * n + q];
                const double beta = std::abs(apq);
                if (counters) counters->cmp += 1;
                if (beta <= off_tol) continue;

                // Unitary plane rotation annihilating a_pq. The phase is
                // folded into the rotation so c, s stay real: with
                // w = (a_pp - a_qq) / (2 |a_pq|), t solves t^2 - 2wt - 1 = 0
                // (small root for stability).
                const Complex phase = apq / beta;  // e^{i arg(a_pq)}
                const double w = (a[p * n + p].real() - a[q * n + q].real()) / (2.0 * beta);
                const double t = (w >= 0.0 ? -1.0 : 1.0) / (std::abs(w) + std::hypot(1.0, w));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const Complex aip = a[i * n + p];
                    const Complex aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * std::conj(phase) * aiq;
                    a[i * n + q] = s * phase * aip + c * aiq;
                    a[p * n + i] = std::conj(a[i * n + p]);
                    a[q * n + i] = std::conj(a[i * n + q]);
                    if (counters) {
                        counters->cmul += 4;
                        counters->cadd += 2;
                    }
                }
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                a[p * n + p] = Complex{c * c * app - 2.0 * c * s * beta + s * s * aqq, 0.0};
                a[q * n + q] = Complex{s * s * app + 2.0 * c * s * beta + c * c * aqq, 0.0};
                a[p * n + q] = Complex{0.0, 0.0};
                a[q * n + p] = Complex{0.0, 0.0};
                if (counters) {
                    counters->cmul += 8;
                    counters->cadd += 4;
                }
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i].real();
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

std::vector<double> singular_values(std::vector<Complex> m, std::size_t rows, std::size_t cols,
                                    OpCounters* counters) {
    if (rows == 0 || cols == 0) throw ArgumentError("singular values need a non-empty matrix");
    if (m.size() != rows * cols) throw ArgumentError("matrix storage does not match its shape");

    // Column-major working copy: column j lives at col[j * rows].
    std::vector<Complex> col(rows * cols);
    double fro2 = 0.0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            col[j * rows + i] = m[i * cols + j];
            fro2 += std::norm(m[i * cols + j]);
        }

    // Columns whose norm has collapsed below the rounding floor of the whole
    // matrix carry no information; rotating them against each other only
    // reshuffles noise and prevents the relative orthogonality test below
    // from ever passing on rank-deficient input.
    constexpr double kOrthTol = 1e-15;
    const double col_floor = 1e-30 * fro2;
    for (int sweep = 0;; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                Complex* cp = col.data() + p * rows;
                Complex* cq = col.data() + q * rows;
                double app = 0.0;
                double aqq = 0.0;
                Complex apq{0.0, 0.0};
                for (std::size_t i = 0; i < rows; ++i) {
                    app += std::norm(cp[i]);
                    aqq += std::norm(cq[i]);
                    apq += std::conj(cp[i]) * cq[i];
                }
                if (counters) {
                    counters->cmul += 3 * rows;
                    counters->cadd += 3 * rows;
                    counters->cmp += 1;
                }
                if (app <= col_floor || aqq <= col_floor) continue;
                const double beta = std::abs(apq);
                if (beta <= kOrthTol * std::sqrt(app * aqq)) continue;

                rotated = true;
                const Complex phase = apq / beta;
                const double w = (app - aqq) / (2.0 * beta);
                const double t = (w >= 0.0 ? -1.0 : 1.0) / (std::abs(w) + std::hypot(1.0, w));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t i = 0; i < rows; ++i) {
                    const Complex x = cp[i];
                    const Complex y = cq[i];
                    cp[i] = c * x - s * std::conj(phase) * y;
                    cq[i] = s * phase * x + c * y;
                }
                if (counters) {
                    counters->cmul += 4 * rows;
                    counters->cadd += 2 * rows;
                }
            }
        }
        if (!rotated) break;
        if (sweep >= kMaxJacobiSweeps)
            throw NumericalError("one-sided Jacobi iteration did not converge after " +
                                 std::to_string(kMaxJacobiSweeps) + " sweeps");
    }

    std::vector<double> sigma(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows; ++i) s += std::norm(col[j * rows + i]);
        sigma[j] = std::sqrt(s);
    }
    std::sort(sigma.begin(), sigma.end(), std::greater<>());
    return sigma;
}

Complex lu_determinant(std::vector<Complex> a, std::size_t n, OpCounters* counters) {
    if (n == 0) throw ArgumentError("determinant needs a non-empty matrix");
    if (a.size() != n * n) throw ArgumentError("matrix storage does not match its order");

    double sign = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(a[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::abs(a[i * n + k]);
            if (counters) counters->cmp += 1;
            if (cand > best) {
                best = cand;
                pivot = i;
            }
        }
        if (best == 0.0) return Complex{0.0, 0.0};
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
            sign = -sign;
        }
        const Complex inv = 1.0 / a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex factor = a[i * n + k] * inv;
            if (counters) counters->cmul += 1;
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i * n + j] -= factor * a[k * n + j];
                if (counters) {
                    counters->cmul += 1;
                    counters->cadd += 1;
                }
            }
        }
    }

    Complex det{sign, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        det *= a[k * n + k];
        if (counters) counters->cmul += 1;
    }
    return det;
}

}  // namespace puresep
