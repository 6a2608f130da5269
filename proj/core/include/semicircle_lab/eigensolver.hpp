#pragma once

#include <cstddef>
#include <vector>

#include "semicircle_lab/symmetric_matrix.hpp"

namespace semicircle_lab {

/// Real symmetric tridiagonal matrix: diag[0..n-1], off[i] couples i and i+1
/// (off has n-1 entries).
struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off;
};

struct EigenDecomposition {
    std::vector<double> values;   ///< ascending
    std::vector<double> vectors;  ///< row k (length n) is the unit eigenvector for values[k]
    std::size_t n = 0;
};

/// Householder reduction to tridiagonal form, values only.
Tridiagonal tridiagonalize(const SymmetricMatrix& m);

/// Eigenvalues of a symmetric tridiagonal matrix by implicit-shift QL with
/// Wilkinson shifts. Throws std::runtime_error if a value fails to converge
/// within 30*n iterations.
std::vector<double> tridiagonal_eigenvalues(Tridiagonal t);

/// Sorted spectrum of m (unscaled). Throws ValidationError on non-finite
/// entries.
std::vector<double> eigenvalues(const SymmetricMatrix& m);

/// Full decomposition m = sum_k values[k] v_k v_k^T.
EigenDecomposition eigen_decompose(const SymmetricMatrix& m);

}  // namespace semicircle_lab
