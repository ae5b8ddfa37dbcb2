#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fermiscope/errors.hpp"

namespace fermiscope {

/// Uniformly sampled 1D wavefunction psi(x_k), x_k = x_min + k dx.
struct GridWavefunction {
    double x_min;
    double dx;
    std::vector<std::complex<double>> samples;
    double hbar;

    GridWavefunction(double xmin, double spacing, std::vector<std::complex<double>> s,
                     double hb);

    std::size_t size() const noexcept { return samples.size(); }
    double x_at(std::size_t k) const noexcept { return x_min + static_cast<double>(k) * dx; }
    double max_abs() const;
    /// |psi| at both ends <= 1e-6 max|psi|; callers warn when false.
    bool boundary_decay_ok() const;
};

/// psi = r e^{i phi / hbar}; node_mask marks samples too small for stable division.
struct PolarFields {
    std::vector<double> r;
    std::vector<double> phi;
    std::vector<bool> node_mask;
};

/// Per-grid-point values with an undefined-entry mask.
struct MaskedSeries {
    std::vector<double> values;
    std::vector<bool> masked;
};

/// Real scalar field over a uniform (x, p) grid, row-major in x.
struct PhaseSpaceField {
    std::vector<double> x_axis;
    std::vector<double> p_axis;
    std::vector<double> values;
    std::vector<bool> masked;

    PhaseSpaceField(std::vector<double> xs, std::vector<double> ps);

    std::size_t nx() const noexcept { return x_axis.size(); }
    std::size_t np() const noexcept { return p_axis.size(); }
    double at(std::size_t k, std::size_t m) const { return values[k * np() + m]; }
    void set(std::size_t k, std::size_t m, double v) { values[k * np() + m] = v; }
    bool masked_at(std::size_t k, std::size_t m) const { return masked[k * np() + m]; }
    void set_mask(std::size_t k, std::size_t m, bool b) { masked[k * np() + m] = b; }
};

std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace fermiscope
