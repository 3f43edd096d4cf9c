#include "bhepn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace bhepn::linalg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double abs1(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Unitary plane rotation [c s; -conj(s) c] with real c >= 0 mapping (a, b)
// to (r, 0). Follows the zrotg convention so that r keeps the phase of a.
struct Givens {
    double c;
    Complex s;
    Complex r;
};

Givens make_givens(Complex a, Complex b) {
    if (b == Complex{0.0, 0.0}) {
        return {1.0, Complex{0.0, 0.0}, a};
    }
    if (a == Complex{0.0, 0.0}) {
        return {0.0, Complex{1.0, 0.0}, b};
    }
    const double scale = std::abs(a) + std::abs(b);
    const double norm = scale * std::sqrt(std::norm(a / scale) + std::norm(b / scale));
    const Complex alpha = a / std::abs(a);
    return {std::abs(a) / norm, alpha * std::conj(b) / norm, alpha * norm};
}

// Rows i1, i2 of h over columns [jlo, jhi], h <- G * h.
void apply_givens_left(ComplexMatrix& h, const Givens& g, int i1, int i2, int jlo, int jhi) {
    for (int j = jlo; j <= jhi; ++j) {
        const Complex x = h(i1, j);
        const Complex y = h(i2, j);
        h(i1, j) = g.c * x + g.s * y;
        h(i2, j) = -std::conj(g.s) * x + g.c * y;
    }
}

// Columns j1, j2 of h over rows [ilo, ihi], h <- h * G^H.
void apply_givens_right(ComplexMatrix& h, const Givens& g, int j1, int j2, int ilo, int ihi) {
    for (int i = ilo; i <= ihi; ++i) {
        const Complex x = h(i, j1);
        const Complex y = h(i, j2);
        h(i, j1) = g.c * x + std::conj(g.s) * y;
        h(i, j2) = -g.s * x + g.c * y;
    }
}

// Householder reduction to upper Hessenberg form; u accumulates the
// similarity so that input = u * h * u^H.
void hessenberg_reduce(ComplexMatrix& h, ComplexMatrix* u) {
    const int n = h.rows();
    std::vector<Complex> v(n);
    for (int k = 0; k + 2 < n; ++k) {
        double xnorm = 0.0;
        for (int i = k + 1; i < n; ++i) xnorm += std::norm(h(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;

        const Complex x0 = h(k + 1, k);
        const Complex phase = (x0 == Complex{0.0, 0.0}) ? Complex{1.0, 0.0} : x0 / std::abs(x0);
        const Complex alpha = -phase * xnorm;

        double vnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[i] = h(i, k);
            if (i == k + 1) v[i] -= alpha;
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;

        // Left: h <- (I - beta v v^H) h on rows k+1..n-1.
        for (int j = k; j < n; ++j) {
            Complex dot{0.0, 0.0};
            for (int i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, j);
            dot *= beta;
            for (int i = k + 1; i < n; ++i) h(i, j) -= dot * v[i];
        }
        // Right: h <- h (I - beta v v^H) on columns k+1..n-1.
        for (int i = 0; i < n; ++i) {
            Complex dot{0.0, 0.0};
            for (int j = k + 1; j < n; ++j) dot += h(i, j) * v[j];
            dot *= beta;
            for (int j = k + 1; j < n; ++j) h(i, j) -= dot * std::conj(v[j]);
        }
        if (u != nullptr) {
            for (int i = 0; i < n; ++i) {
                Complex dot{0.0, 0.0};
                for (int j = k + 1; j < n; ++j) dot += (*u)(i, j) * v[j];
                dot *= beta;
                for (int j = k + 1; j < n; ++j) (*u)(i, j) -= dot * std::conj(v[j]);
            }
        }
        h(k + 1, k) = alpha;
        for (int i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

// Eigenvalues of the 2x2 block [[a, b], [c, d]], the one nearer to d first.
std::pair<Complex, Complex> eig2x2(Complex a, Complex b, Complex c, Complex d) {
    const Complex half_tr = 0.5 * (a + d);
    const Complex det = a * d - b * c;
    const Complex disc = std::sqrt(half_tr * half_tr - det);
    const Complex l1 = half_tr + disc;
    const Complex l2 = half_tr - disc;
    if (abs1(l1 - d) <= abs1(l2 - d)) return {l1, l2};
    return {l2, l1};
}

// Implicit single-shift QR with deflation and exceptional shifts. On return h
// is upper triangular (a Schur factor) and u, if given, accumulates the
// unitary similarity.
void hessenberg_qr(ComplexMatrix& h, ComplexMatrix* u) {
    const int n = h.rows();
    if (n < 2) return;
    const double hnorm = frobenius_norm(h);
    if (hnorm == 0.0) return;
    const double tiny = kEps * hnorm;
    const int total_budget = 40 * n + 100;
    int total_iters = 0;

    int hi = n - 1;
    int since_deflation = 0;
    while (hi > 0) {
        if (++total_iters > total_budget) {
            throw ConvergenceError("QR iteration failed to converge within " +
                                   std::to_string(total_budget) + " sweeps for a " +
                                   h.shape_string() + " matrix");
        }

        // Zero out negligible subdiagonals, then find the active block [lo, hi].
        for (int k = 1; k <= hi; ++k) {
            double thresh = kEps * (abs1(h(k - 1, k - 1)) + abs1(h(k, k)));
            if (thresh < tiny) thresh = tiny;
            if (abs1(h(k, k - 1)) <= thresh) h(k, k - 1) = 0.0;
        }
        int lo = hi;
        while (lo > 0 && h(lo, lo - 1) != Complex{0.0, 0.0}) --lo;

        if (lo == hi) {
            --hi;
            since_deflation = 0;
            continue;
        }
        if (lo == hi - 1) {
            // Triangularize the trailing 2x2 directly: rotate so that one exact
            // eigenvalue lands on the diagonal. Handles defective 2x2 blocks
            // that shifted QR only approaches linearly.
            const auto [l1, l2] = eig2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
            (void)l2;
            const Givens g = make_givens(h(lo, lo) - l1, h(hi, lo));
            apply_givens_left(h, g, lo, hi, lo, n - 1);
            apply_givens_right(h, g, lo, hi, 0, hi);
            if (u != nullptr) apply_givens_right(*u, g, lo, hi, 0, n - 1);
            h(hi, lo) = 0.0;
            hi -= 2;
            since_deflation = 0;
            continue;
        }

        Complex shift;
        ++since_deflation;
        if (since_deflation % 20 == 0) {
            shift = h(hi, hi) + Complex{abs1(h(hi, hi - 1)) + abs1(h(lo + 1, lo)), 0.0};
        } else if (since_deflation % 10 == 0) {
            shift = h(hi, hi) + 0.75 * abs1(h(hi, hi - 1));
        } else {
            shift = eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi)).first;
        }

        // Chase the bulge introduced by the shifted first column.
        Complex x = h(lo, lo) - shift;
        Complex y = h(lo + 1, lo);
        for (int k = lo; k < hi; ++k) {
            const Givens g = make_givens(x, y);
            apply_givens_left(h, g, k, k + 1, std::max(lo, k - 1), n - 1);
            apply_givens_right(h, g, k, k + 1, 0, std::min(hi, k + 2));
            if (u != nullptr) apply_givens_right(*u, g, k, k + 1, 0, n - 1);
            if (k + 1 < hi) {
                x = h(k + 1, k);
                y = h(k + 2, k);
            }
        }
    }
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) h(i, j) = 0.0;
}

void require_square_eig(const ComplexMatrix& m) {
    if (!m.is_square()) {
        throw DimensionError("eigen decomposition requires a square matrix, got " +
                             m.shape_string());
    }
    if (m.rows() > kMaxEigenDim) {
        throw DimensionError("eigen decomposition limited to dimension " +
                             std::to_string(kMaxEigenDim) + ", got " + m.shape_string());
    }
}

}  // namespace

SchurDecomposition schur_decompose(const ComplexMatrix& m, bool want_vectors) {
    require_square_eig(m);
    SchurDecomposition result;
    result.t = m;
    if (want_vectors) result.u = ComplexMatrix::identity(m.rows());
    ComplexMatrix* u = want_vectors ? &result.u : nullptr;
    hessenberg_reduce(result.t, u);
    hessenberg_qr(result.t, u);
    return result;
}

std::vector<Complex> eigenvalues(const ComplexMatrix& m) {
    const SchurDecomposition s = schur_decompose(m, false);
    std::vector<Complex> values(m.rows());
    for (int i = 0; i < m.rows(); ++i) values[i] = s.t(i, i);
    return values;
}

EigenDecomposition eigen_decompose(const ComplexMatrix& m) {
    const int n = m.rows();
    const SchurDecomposition s = schur_decompose(m, true);
    const double tnorm = frobenius_norm(s.t);
    const double smallnum = std::max(kEps * tnorm, std::numeric_limits<double>::min());

    EigenDecomposition result;
    result.values.resize(n);
    result.vectors = ComplexMatrix(n, n);
    std::vector<Complex> y(n);
    for (int i = 0; i < n; ++i) {
        const Complex lambda = s.t(i, i);
        result.values[i] = lambda;
        std::fill(y.begin(), y.end(), Complex{0.0, 0.0});
        y[i] = 1.0;
        for (int j = i - 1; j >= 0; --j) {
            Complex rhs{0.0, 0.0};
            for (int k = j + 1; k <= i; ++k) rhs += s.t(j, k) * y[k];
            Complex denom = s.t(j, j) - lambda;
            if (abs1(denom) < smallnum) denom = smallnum;
            y[j] = -rhs / denom;
        }
        // Back-transform and normalize.
        double norm2 = 0.0;
        for (int r = 0; r < n; ++r) {
            Complex acc{0.0, 0.0};
            for (int k = 0; k <= i; ++k) acc += s.u(r, k) * y[k];
            result.vectors(r, i) = acc;
            norm2 += std::norm(acc);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (int r = 0; r < n; ++r) result.vectors(r, i) *= inv;
    }
    return result;
}

SingularValueDecomposition svd(const ComplexMatrix& m) {
    if (m.rows() < m.cols()) {
        // One-sided Jacobi wants at least as many rows as columns.
        SingularValueDecomposition t = svd(m.adjoint());
        return {t.v, t.singular_values, t.u};
    }
    const int rows = m.rows();
    const int cols = m.cols();
    ComplexMatrix w = m;
    ComplexMatrix v = ComplexMatrix::identity(cols);

    // Columns ground down to eps^2 of the matrix scale are rounding debris;
    // their Gram data is no longer Cauchy-Schwarz consistent and rotations
    // against them cycle. Flushing them to zero perturbs m well below the
    // backward-error level.
    const double flush_norm = frobenius_norm(m) * kEps * kEps;
    const double flush2 = flush_norm * flush_norm;

    const int max_sweeps = 60;
    bool converged = (cols < 2);
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        converged = true;
        for (int p = 0; p < cols - 1; ++p) {
            for (int q = p + 1; q < cols; ++q) {
                double app = 0.0, aqq = 0.0;
                Complex apq{0.0, 0.0};
                for (int i = 0; i < rows; ++i) {
                    app += std::norm(w(i, p));
                    aqq += std::norm(w(i, q));
                    apq += std::conj(w(i, p)) * w(i, q);
                }
                if (app <= flush2) {
                    for (int i = 0; i < rows; ++i) w(i, p) = 0.0;
                    app = 0.0;
                }
                if (aqq <= flush2) {
                    for (int i = 0; i < rows; ++i) w(i, q) = 0.0;
                    aqq = 0.0;
                }
                if (app == 0.0 || aqq == 0.0) continue;
                const double off = std::abs(apq);
                if (off <= kEps * std::sqrt(app) * std::sqrt(aqq)) continue;
                converged = false;

                // Diagonalize the 2x2 Gram block [[app, apq], [conj(apq), aqq]]
                // with the unitary D * J, D = diag(1, conj(phase)).
                const Complex phase = apq / off;
                const double tau = (aqq - app) / (2.0 * off);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                const Complex zc = std::conj(phase);
                for (int i = 0; i < rows; ++i) {
                    const Complex wp = w(i, p);
                    const Complex wq = w(i, q);
                    w(i, p) = c * wp - s * (zc * wq);
                    w(i, q) = s * wp + c * (zc * wq);
                }
                for (int i = 0; i < cols; ++i) {
                    const Complex vp = v(i, p);
                    const Complex vq = v(i, q);
                    v(i, p) = c * vp - s * (zc * vq);
                    v(i, q) = s * vp + c * (zc * vq);
                }
            }
        }
    }
    if (!converged) {
        throw ConvergenceError("Jacobi SVD failed to converge for a " + m.shape_string() +
                               " matrix");
    }

    std::vector<double> sigma(cols);
    for (int j = 0; j < cols; ++j) {
        double norm2 = 0.0;
        for (int i = 0; i < rows; ++i) norm2 += std::norm(w(i, j));
        sigma[j] = std::sqrt(norm2);
    }
    std::vector<int> order(cols);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sigma[a] > sigma[b]; });

    SingularValueDecomposition result;
    result.singular_values.resize(cols);
    result.u = ComplexMatrix(rows, cols);
    result.v = ComplexMatrix(cols, cols);
    for (int j = 0; j < cols; ++j) {
        const int src = order[j];
        result.singular_values[j] = sigma[src];
        for (int i = 0; i < cols; ++i) result.v(i, j) = v(i, src);
        if (sigma[src] > 0.0) {
            const double inv = 1.0 / sigma[src];
            for (int i = 0; i < rows; ++i) result.u(i, j) = w(i, src) * inv;
        }
    }
    // Columns with zero singular value: complete to an orthonormal set so u
    // stays unitary for square input.
    for (int j = 0; j < cols; ++j) {
        if (result.singular_values[j] > 0.0) continue;
        for (int cand = 0; cand < rows; ++cand) {
            std::vector<Complex> col(rows, Complex{0.0, 0.0});
            col[cand] = 1.0;
            for (int k = 0; k < cols; ++k) {
                if (k == j) continue;
                Complex dot{0.0, 0.0};
                for (int i = 0; i < rows; ++i) dot += std::conj(result.u(i, k)) * col[i];
                for (int i = 0; i < rows; ++i) col[i] -= dot * result.u(i, k);
            }
            double norm2 = 0.0;
            for (int i = 0; i < rows; ++i) norm2 += std::norm(col[i]);
            if (norm2 > 0.25) {
                const double inv = 1.0 / std::sqrt(norm2);
                for (int i = 0; i < rows; ++i) result.u(i, j) = col[i] * inv;
                break;
            }
        }
    }
    return result;
}

int numerical_rank(const ComplexMatrix& m, double tol) {
    if (tol <= 0.0) {
        throw DimensionError("numerical_rank: tolerance must be positive");
    }
    const SingularValueDecomposition dec = svd(m);
    if (dec.singular_values.empty()) return 0;
    const double cutoff = tol * dec.singular_values.front();
    int rank = 0;
    for (double s : dec.singular_values) {
        if (s > cutoff) ++rank;
    }
    return rank;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& rhs) {
    if (!a.is_square()) {
        throw DimensionError("solve requires a square matrix, got " + a.shape_string());
    }
    if (a.rows() != rhs.rows()) {
        throw DimensionError("solve: shape mismatch, " + a.shape_string() + " vs rhs " +
                             rhs.shape_string());
    }
    const int n = a.rows();
    const SingularValueDecomposition dec = svd(a);
    const double cutoff =
        dec.singular_values.empty() ? 0.0 : kDefaultRankTol * dec.singular_values.front();

    // Minimum-norm particular solution x = V diag(1/sigma) U^H rhs over the
    // numerically nonzero singular directions.
    ComplexMatrix x(n, rhs.cols());
    for (int k = 0; k < n; ++k) {
        if (dec.singular_values[k] <= cutoff) continue;
        const double inv = 1.0 / dec.singular_values[k];
        for (int c = 0; c < rhs.cols(); ++c) {
            Complex proj{0.0, 0.0};
            for (int i = 0; i < n; ++i) proj += std::conj(dec.u(i, k)) * rhs(i, c);
            proj *= inv;
            for (int i = 0; i < n; ++i) x(i, c) += dec.v(i, k) * proj;
        }
    }

    const double residual = frobenius_norm(matmul(a, x) - rhs);
    const double thresh =
        1e-9 * (frobenius_norm(a) * frobenius_norm(x) + frobenius_norm(rhs));
    if (residual > thresh) {
        throw NumericalError("solve: inconsistent system, residual " +
                             std::to_string(residual) + " exceeds " +
                             std::to_string(thresh));
    }
    return x;
}

}  // namespace bhepn::linalg
