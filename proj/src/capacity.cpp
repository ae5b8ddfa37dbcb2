#include "fermiscope/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace fermiscope {

PhaseSpaceEllipsoid::PhaseSpaceEllipsoid(Vec c, SpdMatrix s, double b)
    : center(std::move(c)), shape(std::move(s)), bound(b) {
    if (center.size() != shape.dim())
        throw DimensionError("ellipsoid center does not match shape dimension");
    if (!(bound > 0.0) || !std::isfinite(bound)) throw Error("ellipsoid bound must be positive");
}

double ellipsoid_capacity(const PhaseSpaceEllipsoid& e) {
    const Vec lambdas = symplectic_eigenvalues(e.shape);
    return std::numbers::pi * e.bound / lambdas.front();
}

PhaseSpaceEllipsoid fermi_ellipsoid(const SqueezedState& state) {
    FermiQuadric quadric = fermi_quadric(state);
    return PhaseSpaceEllipsoid(Vec(2 * state.dof(), 0.0), std::move(quadric.mF),
                               quadric.constant);
}

double fermi_capacity(const SqueezedState& state) {
    const auto eig = symmetric_eigen(state.X);
    double tr = 0.0;
    for (double v : eig.values) tr += v;
    return std::numbers::pi * state.hbar * tr / eig.values.back();
}

CapacityBounds capacity_bounds_report(const SqueezedState& state) {
    const double capacity = fermi_capacity(state);
    const double lower = std::numbers::pi * state.hbar;
    const double upper = static_cast<double>(state.dof()) * std::numbers::pi * state.hbar;
    const bool within = (lower - 1e-9 <= capacity) && (capacity <= upper + 1e-9);
    return CapacityBounds{capacity, lower, upper, within};
}

QuantumBlob quantum_blob_inside(const SqueezedState& state) {
    const FermiFactorization fact = fermi_factorization(state);
    QuantumBlob blob{symplectic_inverse(fact.s), Vec(2 * state.dof(), 0.0),
                     std::sqrt(state.hbar)};
    if (!is_symplectic(blob.symplectic, 1e-10 * std::max(1.0, blob.symplectic.max_norm())))
        throw Error("blob map failed the symplectic check");
    const double cap = ellipsoid_capacity(blob_image_ellipsoid(blob));
    const double expected = std::numbers::pi * state.hbar;
    if (std::abs(cap - expected) > 1e-9 * std::max(1.0, expected))
        throw Error("blob capacity deviates from pi hbar");
    return blob;
}

PhaseSpaceEllipsoid blob_image_ellipsoid(const QuantumBlob& blob) {
    const SquareMatrix ttt = blob.symplectic * blob.symplectic.transposed();
    const SpdMatrix shape = spd_inverse(SpdMatrix(SymmetricMatrix(ttt)));
    return PhaseSpaceEllipsoid(blob.center, shape, blob.radius * blob.radius);
}

std::vector<Vec> sphere_directions(std::size_t dim, std::size_t count) {
    if (dim < 2 || dim % 2 != 0)
        throw DimensionError("sphere directions require even dimension >= 2");

    // Generalized golden ratio: unique positive root of x^(dim+1) = x + 1.
    double phi = 1.5;
    for (int i = 0; i < 64; ++i) phi = std::pow(1.0 + phi, 1.0 / (dim + 1));
    Vec alpha(dim);
    double power = 1.0;
    for (std::size_t j = 0; j < dim; ++j) {
        power /= phi;
        alpha[j] = power;
    }

    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<Vec> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Vec g(dim);
        double norm_sq = 0.0;
        for (std::size_t j = 0; j + 1 < dim; j += 2) {
            double u = std::fmod(alpha[j] * static_cast<double>(i + 1) + 0.5, 1.0);
            double v = std::fmod(alpha[j + 1] * static_cast<double>(i + 1), 1.0);
            u = std::clamp(u, 1e-12, 1.0 - 1e-12);
            const double radial = std::sqrt(-2.0 * std::log(u));
            g[j] = radial * std::cos(two_pi * v);
            g[j + 1] = radial * std::sin(two_pi * v);
            norm_sq += g[j] * g[j] + g[j + 1] * g[j + 1];
        }
        const double norm = std::sqrt(norm_sq);
        for (double& c : g) c /= norm;
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace fermiscope
