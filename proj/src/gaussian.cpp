#include "fermiscope/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace fermiscope {

SqueezedState::SqueezedState(SpdMatrix x, SymmetricMatrix y, double hb)
    : X(std::move(x)), Y(std::move(y)), hbar(hb) {
    if (X.dim() != Y.dim()) throw DimensionError("X and Y dimensions differ");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw Error("hbar must be positive and finite");
}

namespace {

double trace(const SquareMatrix& m) {
    double t = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
    return t;
}

std::pair<std::span<const double>, std::span<const double>> split_phase_point(
    const SqueezedState& state, std::span<const double> z) {
    const std::size_t n = state.dof();
    if (z.size() != 2 * n) throw DimensionError("phase-space point has wrong dimension");
    return {z.subspan(0, n), z.subspan(n, n)};
}

}  // namespace

std::complex<double> evaluate_state(const SqueezedState& state, std::span<const double> x) {
    const std::size_t n = state.dof();
    if (x.size() != n) throw DimensionError("position vector has wrong dimension");
    const double prefactor = std::pow(1.0 / (std::numbers::pi * state.hbar), 0.25 * n) *
                             std::pow(spd_determinant(state.X), 0.25);
    const double re = -quadratic_form(state.X, x) / (2.0 * state.hbar);
    const double im = -quadratic_form(state.Y, x) / (2.0 * state.hbar);
    return prefactor * std::exp(std::complex<double>(re, im));
}

FermiQuadric fermi_quadric(const SqueezedState& state) {
    const SquareMatrix upper_left = state.X * state.X + state.Y * state.Y;
    const SquareMatrix blocks = SquareMatrix::from_blocks(
        upper_left, state.Y, state.Y, SquareMatrix::identity(state.dof()));
    return FermiQuadric{SpdMatrix(SymmetricMatrix(blocks)), state.hbar * trace(state.X)};
}

double fermi_value(const SqueezedState& state, std::span<const double> z) {
    const auto [x, p] = split_phase_point(state, z);
    const Vec yx = state.Y.apply(x);
    const Vec xx = state.X.apply(x);
    double value = -state.hbar * trace(state.X);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double q = p[i] + yx[i];
        value += q * q + xx[i] * xx[i];
    }
    return value;
}

FermiFactorization fermi_factorization(const SqueezedState& state) {
    const SpdMatrix root = spd_sqrt(state.X);
    const SpdMatrix inv_root = spd_inverse_sqrt(state.X);
    const SquareMatrix s = SquareMatrix::from_blocks(
        root, SquareMatrix(state.dof()), inv_root * state.Y, inv_root);
    const SpdMatrix d(SymmetricMatrix(SquareMatrix::from_blocks(
        state.X, SquareMatrix(state.dof()), SquareMatrix(state.dof()), state.X)));

    if (!is_symplectic(s, 1e-10 * std::max(1.0, s.max_norm())))
        throw Error("factorization matrix failed the symplectic check");
    const SquareMatrix m_f = fermi_quadric(state).mF;
    const double residual = (s.transposed() * d * s - m_f).max_norm();
    if (residual > 1e-10 * std::max(1.0, m_f.max_norm()))
        throw Error("factorization residual exceeds tolerance");
    return FermiFactorization{s, d};
}

SpdMatrix wigner_matrix(const SqueezedState& state) {
    const SpdMatrix x_inv = spd_inverse(state.X);
    const SquareMatrix yxy = state.Y * x_inv * state.Y;
    const SquareMatrix g = SquareMatrix::from_blocks(state.X + yxy, state.Y * x_inv,
                                                     x_inv * state.Y, x_inv);
    return SpdMatrix(SymmetricMatrix(g));
}

double wigner_value(const SqueezedState& state, std::span<const double> z) {
    const std::size_t n = state.dof();
    if (z.size() != 2 * n) throw DimensionError("phase-space point has wrong dimension");
    const SpdMatrix g = wigner_matrix(state);
    return std::pow(1.0 / (std::numbers::pi * state.hbar), static_cast<double>(n)) *
           std::exp(-quadratic_form(g, z) / state.hbar);
}

double wigner_fermi_identity_residual(const SqueezedState& state,
                                      std::span<const Vec> samples) {
    if (samples.empty()) throw Error("sample list is empty");
    const std::size_t n = state.dof();

    const FermiFactorization fact = fermi_factorization(state);
    const SpdMatrix x_inv_root = spd_inverse_sqrt(state.X);
    const SquareMatrix d_inv_root = SquareMatrix::from_blocks(
        x_inv_root, SquareMatrix(n), SquareMatrix(n), x_inv_root);
    const SquareMatrix s_inv = symplectic_inverse(fact.s);

    const double peak = std::pow(1.0 / (std::numbers::pi * state.hbar), static_cast<double>(n));
    const double tr_factor = std::exp(-trace(state.X));

    double worst = 0.0;
    for (const Vec& z : samples) {
        if (z.size() != 2 * n) throw DimensionError("sample point has wrong dimension");
        // Transform as three explicit products: S^-1 (D^-1/2 (S z)).
        const Vec tz = s_inv.apply(d_inv_root.apply(fact.s.apply(z)));
        const double rhs = peak * tr_factor * std::exp(-fermi_value(state, tz) / state.hbar);
        const double w = wigner_value(state, z);
        worst = std::max(worst, std::abs(w - rhs) / peak);
    }
    return worst;
}

}  // namespace fermiscope
