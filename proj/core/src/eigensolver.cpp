#include "semicircle_lab/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "semicircle_lab/error.hpp"

namespace semicircle_lab {

namespace {

struct Reflector {
    std::size_t k = 0;      // acts on indices k+1 .. n-1
    double beta = 0.0;      // H = I - beta v v^T
    std::vector<double> v;  // length n-k-1
};

// Reduces `a` (full row-major n x n, destroyed) to tridiagonal form with
// Householder reflections H_k, k = 0..n-3, so that
// T = H_{n-3} ... H_0 A H_0 ... H_{n-3}.
Tridiagonal householder(std::vector<double>& a, std::size_t n, std::vector<Reflector>* reflectors)
{
    Tridiagonal t;
    t.diag.assign(n, 0.0);
    t.off.assign(n > 0 ? n - 1 : 0, 0.0);
    std::vector<double> v(n), p(n);

    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m = n - k - 1;
        const double* x = a.data() + k * n + k + 1;
        t.diag[k] = a[k * n + k];

        double tail = 0.0;
        for (std::size_t r = 1; r < m; ++r) {
            tail += x[r] * x[r];
        }
        if (tail == 0.0) {
            t.off[k] = x[0];
            continue;
        }
        const double sigma = std::sqrt(x[0] * x[0] + tail);
        const double alpha = x[0] > 0.0 ? -sigma : sigma;
        t.off[k] = alpha;

        for (std::size_t r = 0; r < m; ++r) {
            v[r] = x[r];
        }
        v[0] -= alpha;
        const double vtv = v[0] * v[0] + tail;
        const double beta = 2.0 / vtv;

        // p = beta * S v with S the trailing block.
        double* s = a.data() + (k + 1) * n + (k + 1);
        double vp = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
            const double* row = s + r * n;
            double acc = 0.0;
            for (std::size_t c = 0; c < m; ++c) {
                acc += row[c] * v[c];
            }
            p[r] = beta * acc;
            vp += v[r] * p[r];
        }
        // w = p - (beta/2)(v.p) v, stored in p
        const double kfac = 0.5 * beta * vp;
        for (std::size_t r = 0; r < m; ++r) {
            p[r] -= kfac * v[r];
        }
        // S -= v w^T + w v^T
        for (std::size_t r = 0; r < m; ++r) {
            double* row = s + r * n;
            const double vr = v[r];
            const double wr = p[r];
            for (std::size_t c = 0; c < m; ++c) {
                row[c] -= vr * p[c] + wr * v[c];
            }
        }

        if (reflectors) {
            reflectors->push_back({k, beta, std::vector<double>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m))});
        }
    }

    if (n >= 2) {
        t.diag[n - 2] = a[(n - 2) * n + (n - 2)];
        t.off[n - 2] = a[(n - 2) * n + (n - 1)];
    }
    t.diag[n - 1] = a[(n - 1) * n + (n - 1)];
    return t;
}

// Implicit-shift QL on (d, e) where e[i] couples i and i+1 and e[n-1] = 0.
// If `w` is non-null its rows are rotated alongside, so that starting from
// Q^T the rows end up as eigenvectors.
void implicit_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>* w)
{
    const std::size_t n = d.size();
    const double eps = std::numeric_limits<double>::epsilon();
    const std::size_t cap = 30 * n;
    std::size_t iterations = 0;

    for (std::size_t l = 0; l < n; ++l) {
        std::size_t m = l;
        while (true) {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) {
                    break;
                }
            }
            if (m == l) {
                break;
            }
            if (++iterations > cap) {
                throw std::runtime_error("implicit_ql: no convergence after " +
                                         std::to_string(cap) + " iterations");
            }
            // Wilkinson shift from the leading 2x2 block.
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool deflated = false;
            for (std::size_t ii = m; ii-- > l;) {
                const double f = s * e[ii];
                const double b = c * e[ii];
                r = std::hypot(f, g);
                e[ii + 1] = r;
                if (r == 0.0) {
                    d[ii + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[ii + 1] - p;
                r = (d[ii] - g) * s + 2.0 * c * b;
                p = s * r;
                d[ii + 1] = g + p;
                g = c * r - b;
                if (w) {
                    double* row0 = w->data() + ii * n;
                    double* row1 = row0 + n;
                    for (std::size_t col = 0; col < n; ++col) {
                        const double f1 = row1[col];
                        row1[col] = s * row0[col] + c * f1;
                        row0[col] = c * row0[col] - s * f1;
                    }
                }
            }
            if (deflated) {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

void require_finite(const SymmetricMatrix& m)
{
    if (m.size() == 0) {
        throw SizeError("eigenvalues: empty matrix");
    }
    if (!m.all_finite()) {
        throw ValidationError("eigenvalues: matrix has non-finite entries");
    }
}

}  // namespace

Tridiagonal tridiagonalize(const SymmetricMatrix& m)
{
    require_finite(m);
    std::vector<double> a(m.data().begin(), m.data().end());
    return householder(a, m.size(), nullptr);
}

std::vector<double> tridiagonal_eigenvalues(Tridiagonal t)
{
    const std::size_t n = t.diag.size();
    if (t.off.size() + 1 != n && !(n == 0 && t.off.empty())) {
        throw SizeError("tridiagonal_eigenvalues: off-diagonal must have n-1 entries");
    }
    std::vector<double> d = std::move(t.diag);
    std::vector<double> e = std::move(t.off);
    e.push_back(0.0);
    implicit_ql(d, e, nullptr);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> eigenvalues(const SymmetricMatrix& m)
{
    return tridiagonal_eigenvalues(tridiagonalize(m));
}

EigenDecomposition eigen_decompose(const SymmetricMatrix& m)
{
    require_finite(m);
    const std::size_t n = m.size();
    std::vector<double> a(m.data().begin(), m.data().end());
    std::vector<Reflector> reflectors;
    Tridiagonal t = householder(a, n, &reflectors);

    // W = H_{n-3} ... H_0 = Q^T, built by left-multiplying in order.
    std::vector<double> w(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        w[i * n + i] = 1.0;
    }
    std::vector<double> u(n);
    for (const auto& h : reflectors) {
        std::fill(u.begin(), u.end(), 0.0);
        for (std::size_t r = 0; r < h.v.size(); ++r) {
            const double* row = w.data() + (h.k + 1 + r) * n;
            for (std::size_t c = 0; c < n; ++c) {
                u[c] += h.v[r] * row[c];
            }
        }
        for (std::size_t r = 0; r < h.v.size(); ++r) {
            double* row = w.data() + (h.k + 1 + r) * n;
            const double scale = h.beta * h.v[r];
            for (std::size_t c = 0; c < n; ++c) {
                row[c] -= scale * u[c];
            }
        }
    }

    std::vector<double> d = std::move(t.diag);
    std::vector<double> e = std::move(t.off);
    e.push_back(0.0);
    implicit_ql(d, e, &w);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });

    EigenDecomposition out;
    out.n = n;
    out.values.resize(n);
    out.vectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = d[order[k]];
        std::copy_n(w.begin() + static_cast<std::ptrdiff_t>(order[k] * n), n,
                    out.vectors.begin() + static_cast<std::ptrdiff_t>(k * n));
    }
    return out;
}

}  // namespace semicircle_lab
