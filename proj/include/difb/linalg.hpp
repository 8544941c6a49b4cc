// Dense vectors and matrices, just enough for the splitting solvers:
// matvec, transposed matvec, a power-iteration spectral norm of the Gram
// operator, and a Cholesky solve for symmetric positive definite systems.
#ifndef DIFB_LINALG_HPP
#define DIFB_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace difb {

// Fixed-size vector of doubles. Construction from user-supplied data
// rejects non-finite entries; internally computed values are unchecked.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n) : v_(n, 0.0) {}
    Vector(std::initializer_list<double> xs);
    static Vector from(std::vector<double> xs);

    std::size_t size() const { return v_.size(); }
    double operator[](std::size_t i) const { return v_[i]; }
    double& operator[](std::size_t i) { return v_[i]; }

    const std::vector<double>& values() const { return v_; }
    bool all_finite() const;

    auto begin() { return v_.begin(); }
    auto end() { return v_.end(); }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

private:
    std::vector<double> v_;
};

// Row-major dense matrix. Same validation split as Vector.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), v_(rows * cols, 0.0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }

    const std::vector<double>& values() const { return v_; }
    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> v_;
};

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& a);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& a);
Vector& operator+=(Vector& a, const Vector& b);
Vector& operator-=(Vector& a, const Vector& b);

// y = M x
Vector matvec(const Matrix& m, const Vector& x);
// y = M^T x
Vector matvec_transposed(const Matrix& m, const Vector& x);

struct SpectralNormEstimate {
    double value = 0.0;
    bool converged = false;
    std::size_t iterations = 0;
};

// Largest eigenvalue of M^T M (the squared largest singular value of M),
// by power iteration with Rayleigh-quotient stopping at relative tol.
// The start vector is all-ones; a stagnant zero quotient gets a one-off
// 1e-12 perturbation of the first coordinate so an orthogonal start
// cannot wedge the iteration.
SpectralNormEstimate spectral_norm_gram(const Matrix& m, double tol = 1e-8,
                                        std::size_t max_iter = 10000);

// Cholesky factorization A = L L^T of a symmetric positive definite matrix.
// Factor once, solve many right-hand sides.
class CholeskyFactor {
public:
    explicit CholeskyFactor(const Matrix& a);
    Vector solve(const Vector& b) const;
    std::size_t dim() const { return l_.rows(); }

private:
    Matrix l_;
};

// One-shot SPD solve, A x = b.
Vector solve_spd(const Matrix& a, const Vector& b);

}  // namespace difb

#endif
