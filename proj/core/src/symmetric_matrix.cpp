#include "semicircle_lab/symmetric_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "semicircle_lab/error.hpp"

namespace semicircle_lab {

SymmetricMatrix::SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0)
{
    if (n == 0) {
        throw SizeError("SymmetricMatrix: dimension must be positive");
    }
}

SymmetricMatrix SymmetricMatrix::from_upper(std::size_t n, std::span<const double> upper)
{
    if (n == 0) {
        throw SizeError("from_upper: dimension must be positive");
    }
    if (upper.size() != upper_size(n)) {
        throw SizeError("from_upper: expected " + std::to_string(upper_size(n)) +
                        " values for n=" + std::to_string(n) + ", got " +
                        std::to_string(upper.size()));
    }
    SymmetricMatrix m(n);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j, ++idx) {
            if (!std::isfinite(upper[idx])) {
                throw ValidationError("from_upper: non-finite value at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
            }
            m.set(i, j, upper[idx]);
        }
    }
    return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> diag)
{
    SymmetricMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m.set(i, i, diag[i]);
    }
    return m;
}

std::vector<double> SymmetricMatrix::upper() const
{
    std::vector<double> out;
    out.reserve(upper_size(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i; j < n_; ++j) {
            out.push_back((*this)(i, j));
        }
    }
    return out;
}

double SymmetricMatrix::max_abs() const noexcept
{
    double best = 0.0;
    for (double v : data_) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

bool SymmetricMatrix::all_finite() const noexcept
{
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

double SymmetricMatrix::frobenius_squared() const noexcept
{
    double sum = 0.0;
    for (double v : data_) {
        sum += v * v;
    }
    return sum;
}

namespace {

void require_same_size(const SymmetricMatrix& a, const SymmetricMatrix& b, const char* op)
{
    if (a.size() != b.size()) {
        throw SizeError(std::string(op) + ": dimension mismatch " + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()));
    }
}

template <class Op>
SymmetricMatrix combine(const SymmetricMatrix& a, const SymmetricMatrix& b, Op op)
{
    const std::size_t n = a.size();
    SymmetricMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            out.set(i, j, op(a(i, j), b(i, j)));
        }
    }
    return out;
}

}  // namespace

SymmetricMatrix SymmetricMatrix::operator+(const SymmetricMatrix& other) const
{
    require_same_size(*this, other, "operator+");
    return combine(*this, other, [](double a, double b) { return a + b; });
}

SymmetricMatrix SymmetricMatrix::operator-(const SymmetricMatrix& other) const
{
    require_same_size(*this, other, "operator-");
    return combine(*this, other, [](double a, double b) { return a - b; });
}

SymmetricMatrix SymmetricMatrix::operator-() const
{
    return scaled(-1.0);
}

SymmetricMatrix SymmetricMatrix::scaled(double factor) const
{
    SymmetricMatrix out = *this;
    for (double& v : out.data_) {
        v *= factor;
    }
    return out;
}

}  // namespace semicircle_lab
