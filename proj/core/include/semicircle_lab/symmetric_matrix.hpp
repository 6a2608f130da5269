#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace semicircle_lab {

/// Dense real symmetric n x n matrix.
///
/// Storage is the full row-major square so rows can be handed out as
/// contiguous spans; every mutation goes through set(), which writes both
/// (i,j) and (j,i), so the two triangles never disagree.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;

    /// Zero matrix of dimension n (n >= 1).
    explicit SymmetricMatrix(std::size_t n);

    /// Builds from the upper triangle (diagonal included) listed row by row:
    /// (0,0), (0,1), ..., (0,n-1), (1,1), ... Throws SizeError when the
    /// length is not n(n+1)/2 and ValidationError on non-finite values.
    static SymmetricMatrix from_upper(std::size_t n, std::span<const double> upper);

    static SymmetricMatrix diagonal(std::span<const double> diag);

    std::size_t size() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

    void set(std::size_t i, std::size_t j, double value) noexcept
    {
        data_[i * n_ + j] = value;
        data_[j * n_ + i] = value;
    }

    std::span<const double> row(std::size_t i) const noexcept
    {
        return {data_.data() + i * n_, n_};
    }

    /// Full row-major storage, n*n values.
    std::span<const double> data() const noexcept { return data_; }

    /// Upper triangle in the same order from_upper() consumes.
    std::vector<double> upper() const;

    double max_abs() const noexcept;
    bool all_finite() const noexcept;

    /// Sum of squares over all n^2 entries, i.e. Tr(M^2).
    double frobenius_squared() const noexcept;

    SymmetricMatrix operator+(const SymmetricMatrix& other) const;
    SymmetricMatrix operator-(const SymmetricMatrix& other) const;
    SymmetricMatrix operator-() const;
    SymmetricMatrix scaled(double factor) const;

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// Number of entries in the upper triangle including the diagonal.
constexpr std::size_t upper_size(std::size_t n) noexcept { return n * (n + 1) / 2; }

/// Position of (i,j), i <= j, in the row-major upper-triangle order.
constexpr std::size_t upper_index(std::size_t n, std::size_t i, std::size_t j) noexcept
{
    return i * n - i * (i - 1) / 2 + (j - i);
}

}  // namespace semicircle_lab
