#include "difb/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace difb {

namespace {

void require_finite(const std::vector<double>& xs, const char* what) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i])) {
            throw std::invalid_argument(std::string(what) + ": non-finite entry at index " +
                                        std::to_string(i));
        }
    }
}

}  // namespace

Vector::Vector(std::initializer_list<double> xs) : v_(xs) {
    require_finite(v_, "Vector");
}

Vector Vector::from(std::vector<double> xs) {
    require_finite(xs, "Vector");
    Vector v;
    v.v_ = std::move(xs);
    return v;
}

bool Vector::all_finite() const {
    for (double x : v_) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), v_(std::move(data)) {
    if (v_.size() != rows_ * cols_) {
        throw std::invalid_argument("Matrix: data length " + std::to_string(v_.size()) +
                                    " does not match " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_));
    }
    require_finite(v_, "Matrix");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool Matrix::all_finite() const {
    for (double x : v_) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Vector +: length mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Vector -: length mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector operator*(double s, const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Vector& operator+=(Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Vector +=: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vector& operator-=(Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Vector -=: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

Vector matvec(const Matrix& m, const Vector& x) {
    if (m.cols() != x.size()) {
        throw std::invalid_argument("matvec: shape mismatch, matrix is " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                    " but vector has length " + std::to_string(x.size()));
    }
    Vector y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Vector matvec_transposed(const Matrix& m, const Vector& x) {
    if (m.rows() != x.size()) {
        throw std::invalid_argument("matvec_transposed: shape mismatch, matrix is " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                    " but vector has length " + std::to_string(x.size()));
    }
    Vector y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) y[j] += m(i, j) * x[i];
    }
    return y;
}

SpectralNormEstimate spectral_norm_gram(const Matrix& m, double tol, std::size_t max_iter) {
    if (tol <= 0.0) throw std::invalid_argument("spectral_norm_gram: tol must be positive");
    if (max_iter == 0) throw std::invalid_argument("spectral_norm_gram: max_iter must be >= 1");

    bool zero = true;
    for (double x : m.values()) {
        if (x != 0.0) {
            zero = false;
            break;
        }
    }
    if (zero || m.rows() == 0 || m.cols() == 0) return {0.0, true, 0};

    const std::size_t n = m.cols();
    Vector u(n);
    const double inv = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) u[i] = inv;

    double lam_prev = 0.0;
    bool perturbed = false;
    for (std::size_t it = 1; it <= max_iter; ++it) {
        Vector z = matvec_transposed(m, matvec(m, u));
        double lam = dot(u, z);  // Rayleigh quotient, u is unit
        double nz = norm2(z);
        if (nz == 0.0 || (lam == 0.0 && it > 1)) {
            // start vector orthogonal to every nonzero direction of the Gram map
            if (!perturbed) {
                u[0] += 1e-12;
                double nu = norm2(u);
                for (std::size_t i = 0; i < n; ++i) u[i] /= nu;
                perturbed = true;
                continue;
            }
            return {0.0, true, it};
        }
        if (it > 1 && std::abs(lam - lam_prev) <= tol * std::abs(lam)) {
            return {lam, true, it};
        }
        lam_prev = lam;
        for (std::size_t i = 0; i < n; ++i) u[i] = z[i] / nz;
    }
    return {lam_prev, false, max_iter};
}

CholeskyFactor::CholeskyFactor(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("CholeskyFactor: matrix not square");
    const std::size_t n = a.rows();

    double max_abs = 0.0;
    for (double x : a.values()) max_abs = std::max(max_abs, std::abs(x));
    const double sym_tol = 1e-10 * std::max(1.0, max_abs);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(a(i, j) - a(j, i)) > sym_tol) {
                throw std::invalid_argument("CholeskyFactor: matrix not symmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }

    l_ = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l_(j, k) * l_(j, k);
        if (!(d > 0.0)) {
            throw std::invalid_argument("CholeskyFactor: non-positive pivot at row " +
                                        std::to_string(j) + " (matrix not positive definite)");
        }
        l_(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l_(i, k) * l_(j, k);
            l_(i, j) = s / l_(j, j);
        }
    }
}

Vector CholeskyFactor::solve(const Vector& b) const {
    const std::size_t n = l_.rows();
    if (b.size() != n) throw std::invalid_argument("CholeskyFactor::solve: length mismatch");

    Vector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= l_(i, k) * y[k];
        y[i] = s / l_(i, i);
    }
    Vector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = y[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= l_(k, ii) * x[k];
        x[ii] = s / l_(ii, ii);
    }
    return x;
}

Vector solve_spd(const Matrix& a, const Vector& b) { return CholeskyFactor(a).solve(b); }

}  // namespace difb
