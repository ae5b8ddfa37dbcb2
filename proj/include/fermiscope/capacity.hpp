#pragma once

#include <span>
#include <vector>

#include "fermiscope/gaussian.hpp"
#include "fermiscope/linalg.hpp"

namespace fermiscope {

/// The set { z : shape (z - center).(z - center) <= bound }.
struct PhaseSpaceEllipsoid {
    Vec center;
    SpdMatrix shape;
    double bound;

    PhaseSpaceEllipsoid(Vec c, SpdMatrix s, double b);
};

/// Image of the ball B(center, radius) under a linear symplectic map.
struct QuantumBlob {
    SquareMatrix symplectic;
    Vec center;
    double radius;
};

/// c = pi * bound / lambda_max^sigma(shape). Center-independent.
double ellipsoid_capacity(const PhaseSpaceEllipsoid& e);

/// Region g_F <= 0 of a squeezed state: shape M_F, bound hbar Tr X, center 0.
PhaseSpaceEllipsoid fermi_ellipsoid(const SqueezedState& state);

/// c(W_F) = pi hbar Tr X / lambda_max(X).
double fermi_capacity(const SqueezedState& state);

struct CapacityBounds {
    double capacity;
    double lower;  // pi hbar = h/2
    double upper;  // n pi hbar = n h/2
    bool within_bounds;
};

CapacityBounds capacity_bounds_report(const SqueezedState& state);

/// Quantum blob S^-1 B(0, sqrt(hbar)) contained in the Fermi ellipsoid.
QuantumBlob quantum_blob_inside(const SqueezedState& state);

/// Ellipsoid { z : (T T^T)^-1 (z - center).(z - center) <= radius^2 } swept by the blob.
PhaseSpaceEllipsoid blob_image_ellipsoid(const QuantumBlob& blob);

/// Deterministic low-discrepancy unit directions on S^{dim-1} (dim even):
/// Kronecker lattice driven through Box-Muller pairs, then normalized.
std::vector<Vec> sphere_directions(std::size_t dim, std::size_t count);

}  // namespace fermiscope
