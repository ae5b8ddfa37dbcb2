#include "fermiscope/oscillator.hpp"

#include <cmath>
#include <utility>

namespace fermiscope {

OscillatorEigenstate::OscillatorEigenstate(std::vector<int> idx, double hb)
    : indices(std::move(idx)), hbar(hb) {
    if (indices.empty()) throw DimensionError("at least one oscillator index is required");
    for (int n : indices)
        if (n < 0) throw Error("oscillator indices must be nonnegative");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw Error("hbar must be positive and finite");
}

double hermite_polynomial(int n, double x) {
    if (n < 0) throw Error("Hermite index must be nonnegative");
    double h_prev = 1.0;
    if (n == 0) return h_prev;
    double h = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double h_next = 2.0 * x * h - 2.0 * k * h_prev;
        h_prev = h;
        h = h_next;
    }
    return h;
}

double eigenfunction_value(const OscillatorEigenstate& state, std::span<const double> x) {
    if (x.size() != state.dof()) throw DimensionError("position vector has wrong dimension");
    const double root_hbar = std::sqrt(state.hbar);
    double value = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j)
        value *= std::exp(-x[j] * x[j] / (2.0 * state.hbar)) *
                 hermite_polynomial(state.indices[j], x[j] / root_hbar);
    return value;
}

double oscillator_energy(const OscillatorEigenstate& state) {
    double e = 0.0;
    for (int n : state.indices) e += (2.0 * n + 1.0) * state.hbar;
    return e;
}

double oscillator_fermi_value(const OscillatorEigenstate& state, std::span<const double> z) {
    if (z.size() != 2 * state.dof())
        throw DimensionError("phase-space point has wrong dimension");
    double value = -oscillator_energy(state);
    for (double c : z) value += c * c;
    return value;
}

PhaseSpaceEllipsoid fermi_ball(const OscillatorEigenstate& state) {
    return PhaseSpaceEllipsoid(Vec(2 * state.dof(), 0.0), SpdMatrix::identity(2 * state.dof()),
                               oscillator_energy(state));
}

}  // namespace fermiscope
