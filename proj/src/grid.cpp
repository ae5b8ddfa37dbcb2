#include "fermiscope/grid.hpp"

#include <cmath>
#include <utility>

namespace fermiscope {

GridWavefunction::GridWavefunction(double xmin, double spacing,
                                   std::vector<std::complex<double>> s, double hb)
    : x_min(xmin), dx(spacing), samples(std::move(s)), hbar(hb) {
    if (samples.size() < 16) throw GridError("at least 16 samples are required");
    if (!(dx > 0.0) || !std::isfinite(dx)) throw GridError("grid spacing must be positive");
    if (!std::isfinite(x_min)) throw GridError("grid origin must be finite");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw GridError("hbar must be positive");
    bool any = false;
    for (const auto& v : samples) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw GridError("wavefunction sample is not finite");
        if (std::abs(v) > 0.0) any = true;
    }
    if (!any) throw EmptyWavefunction("all wavefunction samples are zero");
}

double GridWavefunction::max_abs() const {
    double m = 0.0;
    for (const auto& v : samples) m = std::max(m, std::abs(v));
    return m;
}

bool GridWavefunction::boundary_decay_ok() const {
    const double limit = 1e-6 * max_abs();
    return std::abs(samples.front()) <= limit && std::abs(samples.back()) <= limit;
}

PhaseSpaceField::PhaseSpaceField(std::vector<double> xs, std::vector<double> ps)
    : x_axis(std::move(xs)),
      p_axis(std::move(ps)),
      values(x_axis.size() * p_axis.size(), 0.0),
      masked(x_axis.size() * p_axis.size(), false) {
    if (x_axis.empty() || p_axis.empty()) throw GridError("field axes must be nonempty");
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count < 2) throw GridError("linspace needs at least two points");
    if (!(hi > lo)) throw GridError("linspace interval is empty");
    std::vector<double> out(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) out[i] = lo + static_cast<double>(i) * step;
    return out;
}

}  // namespace fermiscope
