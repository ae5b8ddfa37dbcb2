#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fermiscope/linalg.hpp"

namespace fermiscope {

/// Squeezed coherent state Psi_{X,Y}(x) proportional to
/// exp[-(X + iY) x.x / 2 hbar], X positive definite, Y symmetric.
struct SqueezedState {
    SpdMatrix X;
    SymmetricMatrix Y;
    double hbar;

    SqueezedState(SpdMatrix x, SymmetricMatrix y, double hb);
    std::size_t dof() const noexcept { return X.dim(); }
};

/// Quadric form of the Fermi function: g_F(z) = mF z.z - constant.
struct FermiQuadric {
    SpdMatrix mF;
    double constant;  // hbar * Tr X
};

/// M_F = s^T d s with s symplectic and d = diag(X, X).
struct FermiFactorization {
    SquareMatrix s;
    SpdMatrix d;
};

std::complex<double> evaluate_state(const SqueezedState& state, std::span<const double> x);

FermiQuadric fermi_quadric(const SqueezedState& state);

/// g_F(x, p) = (p + Yx).(p + Yx) + X^2 x.x - hbar Tr X at z = (x, p).
double fermi_value(const SqueezedState& state, std::span<const double> z);

FermiFactorization fermi_factorization(const SqueezedState& state);

/// Wigner Gaussian matrix G = [[X + Y X^-1 Y, Y X^-1], [X^-1 Y, X^-1]] = S^T S.
SpdMatrix wigner_matrix(const SqueezedState& state);

/// W(z) = (1 / pi hbar)^n exp(-G z.z / hbar).
double wigner_value(const SqueezedState& state, std::span<const double> z);

/// Max over samples of |W(z) - (1/pi hbar)^n e^{-Tr X} exp(-g_F(S^-1 D^-1/2 S z)/hbar)|
/// normalized by the Wigner peak (1/pi hbar)^n.
double wigner_fermi_identity_residual(const SqueezedState& state,
                                      std::span<const Vec> samples);

}  // namespace fermiscope
