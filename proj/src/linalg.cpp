#include "fermiscope/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace fermiscope {

namespace {

void check_dim(std::size_t dim) {
    if (dim < 1) throw DimensionError("matrix dimension must be >= 1");
    if (dim > kMaxDim)
        throw DimensionError("matrix dimension " + std::to_string(dim) + " exceeds limit " +
                             std::to_string(kMaxDim));
}

void check_finite(const Vec& a) {
    for (double v : a)
        if (!std::isfinite(v)) throw Error("matrix entry is not finite");
}

}  // namespace

SquareMatrix::SquareMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) { check_dim(dim); }

SquareMatrix::SquareMatrix(std::size_t dim, Vec entries) : dim_(dim), a_(std::move(entries)) {
    check_dim(dim);
    if (a_.size() != dim * dim) throw DimensionError("entry count does not match dimension");
    check_finite(a_);
}

SquareMatrix SquareMatrix::identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

SquareMatrix SquareMatrix::diagonal(std::span<const double> d) {
    SquareMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

SquareMatrix SquareMatrix::from_blocks(const SquareMatrix& a, const SquareMatrix& b,
                                       const SquareMatrix& c, const SquareMatrix& d) {
    const std::size_t n = a.dim();
    if (b.dim() != n || c.dim() != n || d.dim() != n)
        throw DimensionError("block dimensions differ");
    SquareMatrix m(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = a(i, j);
            m(i, n + j) = b(i, j);
            m(n + i, j) = c(i, j);
            m(n + i, n + j) = d(i, j);
        }
    return m;
}

double SquareMatrix::max_norm() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

SquareMatrix SquareMatrix::transposed() const {
    SquareMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vec SquareMatrix::apply(std::span<const double> v) const {
    if (v.size() != dim_) throw DimensionError("vector length does not match matrix dimension");
    Vec out(dim_, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) s += a_[i * dim_ + j] * v[j];
        out[i] = s;
    }
    return out;
}

SquareMatrix operator*(const SquareMatrix& l, const SquareMatrix& r) {
    if (l.dim() != r.dim()) throw DimensionError("matrix dimensions differ in product");
    const std::size_t n = l.dim();
    SquareMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double lik = l(i, k);
            if (lik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += lik * r(k, j);
        }
    return out;
}

SquareMatrix operator+(const SquareMatrix& l, const SquareMatrix& r) {
    if (l.dim() != r.dim()) throw DimensionError("matrix dimensions differ in sum");
    SquareMatrix out(l.dim());
    for (std::size_t i = 0; i < l.a_.size(); ++i) out.a_[i] = l.a_[i] + r.a_[i];
    return out;
}

SquareMatrix operator-(const SquareMatrix& l, const SquareMatrix& r) {
    if (l.dim() != r.dim()) throw DimensionError("matrix dimensions differ in difference");
    SquareMatrix out(l.dim());
    for (std::size_t i = 0; i < l.a_.size(); ++i) out.a_[i] = l.a_[i] - r.a_[i];
    return out;
}

SquareMatrix operator*(double c, const SquareMatrix& m) {
    SquareMatrix out(m.dim());
    for (std::size_t i = 0; i < m.a_.size(); ++i) out.a_[i] = c * m.a_[i];
    return out;
}

namespace {

SquareMatrix symmetrized(const SquareMatrix& m) {
    const double scale = std::max(1.0, m.max_norm());
    SquareMatrix s(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            if (std::abs(m(i, j) - m(j, i)) > kSymTol * scale)
                throw Error("matrix is not symmetric within tolerance");
            s(i, j) = s(j, i) = 0.5 * (m(i, j) + m(j, i));
        }
    return s;
}

void check_spd(const SymmetricMatrix& m) {
    const auto eig = symmetric_eigen(m);
    const double threshold = kSpdTol * std::max(1.0, m.max_norm());
    if (eig.values.front() <= threshold)
        throw NotPositiveDefinite("matrix is not positive definite (min eigenvalue " +
                                  std::to_string(eig.values.front()) + ")");
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(const SquareMatrix& m) : SquareMatrix(symmetrized(m)) {}

SymmetricMatrix::SymmetricMatrix(std::size_t dim, Vec entries)
    : SymmetricMatrix(SquareMatrix(dim, std::move(entries))) {}

SymmetricMatrix SymmetricMatrix::identity(std::size_t dim) {
    return SymmetricMatrix(SquareMatrix::identity(dim));
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> d) {
    return SymmetricMatrix(SquareMatrix::diagonal(d));
}

SpdMatrix::SpdMatrix(const SymmetricMatrix& m) : SymmetricMatrix(m) { check_spd(*this); }

SpdMatrix::SpdMatrix(std::size_t dim, Vec entries)
    : SpdMatrix(SymmetricMatrix(dim, std::move(entries))) {}

SpdMatrix SpdMatrix::identity(std::size_t dim) {
    return SpdMatrix(SymmetricMatrix::identity(dim));
}

SpdMatrix SpdMatrix::diagonal(std::span<const double> d) {
    return SpdMatrix(SymmetricMatrix::diagonal(d));
}

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionError("vector lengths differ in dot product");
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double quadratic_form(const SquareMatrix& m, std::span<const double> z) {
    return dot(m.apply(z), z);
}

SymmetricEigen symmetric_eigen(const SymmetricMatrix& m) {
    const std::size_t n = m.dim();
    SquareMatrix a = m;
    SquareMatrix v = SquareMatrix::identity(n);

    double frob = 0.0;
    for (double e : a.entries()) frob += e * e;
    frob = std::sqrt(frob);
    const double target = 1e-15 * std::max(frob, 1e-300);

    constexpr int kMaxSweeps = 64;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (std::sqrt(2.0 * off) <= target) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    SymmetricEigen out{Vec(n), SquareMatrix(n)};
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

SymmetricMatrix spectral_map(const SpdMatrix& m, double (*f)(double)) {
    const auto eig = symmetric_eigen(m);
    const std::size_t n = m.dim();
    SquareMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double fk = f(eig.values[k]);
        for (std::size_t i = 0; i < n; ++i) {
            const double w = fk * eig.vectors(i, k);
            for (std::size_t j = 0; j <= i; ++j) out(i, j) += w * eig.vectors(j, k);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) out(j, i) = out(i, j);
    return SymmetricMatrix(out);
}

SpdMatrix spd_sqrt(const SpdMatrix& m) {
    return SpdMatrix(spectral_map(m, [](double x) { return std::sqrt(x); }));
}

SpdMatrix spd_inverse(const SpdMatrix& m) {
    return SpdMatrix(spectral_map(m, [](double x) { return 1.0 / x; }));
}

SpdMatrix spd_inverse_sqrt(const SpdMatrix& m) {
    return SpdMatrix(spectral_map(m, [](double x) { return 1.0 / std::sqrt(x); }));
}

double spd_determinant(const SpdMatrix& m) {
    const auto eig = symmetric_eigen(m);
    double det = 1.0;
    for (double v : eig.values) det *= v;
    return det;
}

SquareMatrix standard_symplectic(std::size_t n) {
    if (n < 1) throw DimensionError("degrees of freedom must be >= 1");
    SquareMatrix j(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, n + i) = 1.0;
        j(n + i, i) = -1.0;
    }
    return j;
}

bool is_symplectic(const SquareMatrix& s, double tol) {
    if (s.dim() % 2 != 0) throw DimensionError("symplectic matrices have even dimension");
    const SquareMatrix j = standard_symplectic(s.dim() / 2);
    const SquareMatrix residual = s.transposed() * j * s - j;
    return residual.max_norm() <= tol;
}

SquareMatrix symplectic_inverse(const SquareMatrix& s) {
    if (s.dim() % 2 != 0) throw DimensionError("symplectic matrices have even dimension");
    const SquareMatrix j = standard_symplectic(s.dim() / 2);
    return -1.0 * (j * s.transposed() * j);
}

Vec symplectic_eigenvalues(const SpdMatrix& m) {
    if (m.dim() % 2 != 0)
        throw DimensionError("symplectic eigenvalues require even dimension");
    const std::size_t n = m.dim() / 2;

    const SpdMatrix root = spd_sqrt(m);
    const SquareMatrix k = root * standard_symplectic(n) * root;
    const SymmetricMatrix ktk(k.transposed() * k);

    auto eig = symmetric_eigen(ktk);  // (lambda_j^sigma)^2, each with multiplicity 2
    std::sort(eig.values.begin(), eig.values.end(), std::greater<>());

    const double pair_tol = kPairingTol * std::max(1.0, m.max_norm());
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::sqrt(std::max(eig.values[2 * i], 0.0));
        const double b = std::sqrt(std::max(eig.values[2 * i + 1], 0.0));
        if (std::abs(a - b) > pair_tol)
            throw NumericalPairingError("eigenvalues of K^T K do not pair: " +
                                        std::to_string(a) + " vs " + std::to_string(b));
        out[i] = 0.5 * (a + b);
    }
    return out;
}

}  // namespace fermiscope
