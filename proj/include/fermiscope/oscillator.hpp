#pragma once

#include <span>
#include <vector>

#include "fermiscope/capacity.hpp"

namespace fermiscope {

/// Tensor product of unnormalized Hermite functions with indices N_1..N_n.
struct OscillatorEigenstate {
    std::vector<int> indices;
    double hbar;

    OscillatorEigenstate(std::vector<int> idx, double hb);
    std::size_t dof() const noexcept { return indices.size(); }
};

/// Physicists' Hermite polynomial H_N(x) by the three-term recurrence.
double hermite_polynomial(int n, double x);

/// prod_j exp(-x_j^2 / 2 hbar) H_{N_j}(x_j / sqrt(hbar)); real, unnormalized.
double eigenfunction_value(const OscillatorEigenstate& state, std::span<const double> x);

/// Total energy sum_j (2 N_j + 1) hbar.
double oscillator_energy(const OscillatorEigenstate& state);

/// g_F(z) = |p|^2 + |x|^2 - E.
double oscillator_fermi_value(const OscillatorEigenstate& state, std::span<const double> z);

/// Fermi ball |z|^2 <= E: shape identity, bound E, center 0.
PhaseSpaceEllipsoid fermi_ball(const OscillatorEigenstate& state);

}  // namespace fermiscope
