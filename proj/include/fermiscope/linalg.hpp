#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fermiscope/errors.hpp"

namespace fermiscope {

using Vec = std::vector<double>;

// Tolerances on unit-scaled matrices; checks scale them by max(1, ||M||_inf).
inline constexpr double kSymTol = 1e-10;
inline constexpr double kSpdTol = 1e-10;
inline constexpr double kPairingTol = 1e-6;
// Dense O(d^3) kernel; larger problems are out of scope.
inline constexpr std::size_t kMaxDim = 512;

/// Dense real square matrix, row-major.
class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t dim);
    SquareMatrix(std::size_t dim, Vec entries);

    static SquareMatrix identity(std::size_t dim);
    static SquareMatrix diagonal(std::span<const double> d);
    /// 2x2 block layout [[a, b], [c, d]] of equally sized blocks.
    static SquareMatrix from_blocks(const SquareMatrix& a, const SquareMatrix& b,
                                    const SquareMatrix& c, const SquareMatrix& d);

    std::size_t dim() const noexcept { return dim_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    std::span<const double> entries() const noexcept { return a_; }

    /// Largest absolute entry.
    double max_norm() const;
    SquareMatrix transposed() const;
    Vec apply(std::span<const double> v) const;

    friend SquareMatrix operator*(const SquareMatrix& l, const SquareMatrix& r);
    friend SquareMatrix operator+(const SquareMatrix& l, const SquareMatrix& r);
    friend SquareMatrix operator-(const SquareMatrix& l, const SquareMatrix& r);
    friend SquareMatrix operator*(double c, const SquareMatrix& m);

private:
    std::size_t dim_;
    Vec a_;
};

/// Square matrix validated symmetric at construction; storage is symmetrized.
class SymmetricMatrix : public SquareMatrix {
public:
    explicit SymmetricMatrix(const SquareMatrix& m);
    SymmetricMatrix(std::size_t dim, Vec entries);

    static SymmetricMatrix identity(std::size_t dim);
    static SymmetricMatrix diagonal(std::span<const double> d);
};

/// Symmetric matrix with all eigenvalues above the scaled SPD tolerance,
/// verified at construction.
class SpdMatrix : public SymmetricMatrix {
public:
    explicit SpdMatrix(const SymmetricMatrix& m);
    SpdMatrix(std::size_t dim, Vec entries);

    static SpdMatrix identity(std::size_t dim);
    static SpdMatrix diagonal(std::span<const double> d);
};

double dot(std::span<const double> a, std::span<const double> b);
/// z . M z
double quadratic_form(const SquareMatrix& m, std::span<const double> z);

struct SymmetricEigen {
    Vec values;            // ascending
    SquareMatrix vectors;  // eigenvectors as columns, orthonormal
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
SymmetricEigen symmetric_eigen(const SymmetricMatrix& m);

/// Q f(Lambda) Q^T for M = Q Lambda Q^T. f must map the spectrum into (0, inf)
/// for the result to be SPD-constructible by the caller.
SymmetricMatrix spectral_map(const SpdMatrix& m, double (*f)(double));

SpdMatrix spd_sqrt(const SpdMatrix& m);
SpdMatrix spd_inverse(const SpdMatrix& m);
SpdMatrix spd_inverse_sqrt(const SpdMatrix& m);
double spd_determinant(const SpdMatrix& m);

/// Standard symplectic form J = [[0, I], [-I, 0]] of size 2n x 2n.
SquareMatrix standard_symplectic(std::size_t n);
/// True iff ||S^T J S - J||_inf <= tol. Throws DimensionError on odd dimension.
bool is_symplectic(const SquareMatrix& s, double tol);
/// Inverse of a symplectic matrix via S^{-1} = -J S^T J.
SquareMatrix symplectic_inverse(const SquareMatrix& s);

/// Symplectic eigenvalues of an SPD matrix, descending. Computed from the
/// skew-symmetric K = M^{1/2} J M^{1/2} through the symmetric K^T K, whose
/// eigenvalues are the squared symplectic eigenvalues, each twice.
Vec symplectic_eigenvalues(const SpdMatrix& m);

}  // namespace fermiscope
