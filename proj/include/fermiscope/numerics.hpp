#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "fermiscope/grid.hpp"

namespace fermiscope {

inline constexpr double kNodeThreshold = 1e-6;

enum class PolarMode {
    automatic,    // signed_real when the samples are numerically real, else modulus
    modulus,      // r = |psi|, phi = hbar * unwrapped arg
    signed_real,  // r = Re psi (sign-changing allowed), phi = 0
};

/// Split psi into r, phi with phi unwrapped along unmasked runs; each run is
/// re-anchored so its largest-|psi| sample keeps its principal-branch phase.
PolarFields polar_decompose(const GridWavefunction& psi, PolarMode mode = PolarMode::automatic,
                            double node_threshold = kNodeThreshold);

/// hbar^2 (second difference of r) / r; one-sided second-order stencils at the
/// ends; masked at nodes and wherever |r| < node_threshold * max|r|.
MaskedSeries quantum_potential_term(const PolarFields& fields, double dx, double hbar,
                                    double node_threshold = kNodeThreshold);

/// g_F(x_k, p_m) = (p_m - phi'(x_k))^2 + Q_k on the requested p grid.
PhaseSpaceField fermi_field(const GridWavefunction& psi, double p_min, double p_max,
                            std::size_t p_count, PolarMode mode = PolarMode::automatic,
                            double node_threshold = kNodeThreshold);

struct OperatorResidual {
    double fermi;  // ||g_F^ psi||_2 / ||psi||_2, centered differences
    double gauge;  // residual of (-hbar^2 D2 + hbar^2 D2 r / r) r, same stencil
};

/// Discrete residual of the Fermi operator applied to psi. The squared gauge
/// term is applied as two passes of the first-difference operator so the
/// discretization error survives for real states; the gauge-equivalent trivial
/// equation reuses the compact second difference and cancels to roundoff.
OperatorResidual fermi_operator_residual(const GridWavefunction& psi,
                                         PolarMode mode = PolarMode::automatic,
                                         double node_threshold = kNodeThreshold);

/// Discrete Wigner transform over a y-grid spanning the x-domain, evaluated by
/// FFT per x sample on a band-limited half-step refinement of psi. The p axis
/// is set by the transform: p_m = 2 pi hbar (m - K/2) / (K dx).
PhaseSpaceField wigner_transform(const GridWavefunction& psi);

struct Polyline {
    std::vector<std::array<double, 2>> points;
    bool closed = false;
};

/// Marching-squares polylines of {values == level}; cells touching masked
/// corners are skipped; empty result when the level set is empty.
std::vector<Polyline> zero_contour(const PhaseSpaceField& field, double level);

/// Signed shoelace area (0 for open polylines).
double polyline_area(const Polyline& line);

struct WignerContourMetrics {
    double fraction;
    double level;
    std::vector<Polyline> contours;
    double area;                       // total |shoelace| over closed polylines
    double mean_radial_distance;       // to the Fermi contour, about its centroid
    double symmetric_area_difference;  // radial integration about the same centroid
};

struct FermiWignerReport {
    std::vector<Polyline> fermi_contour;
    double fermi_area;
    double wigner_peak;
    std::vector<WignerContourMetrics> wigner;
    /// Mean Wigner value on the Fermi contour / peak; the fraction whose level
    /// set rides the Fermi surface when the spread below is small.
    std::optional<double> fermi_level_fraction;
    double fermi_level_spread;
};

/// Fermi zero-contour vs Wigner level sets at fraction * peak, both extracted
/// on the Wigner transform's (x, p) grid.
FermiWignerReport compare_fermi_wigner(const GridWavefunction& psi,
                                       std::span<const double> fractions,
                                       PolarMode mode = PolarMode::automatic,
                                       double node_threshold = kNodeThreshold);

}  // namespace fermiscope
