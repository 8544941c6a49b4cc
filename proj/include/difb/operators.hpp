// Monotone-operator building blocks for problems 0 in A z + B z with A
// cocoercive and B reached through its resolvent, plus the concrete
// least-squares / l1 instances the solvers are benchmarked on.
#ifndef DIFB_OPERATORS_HPP
#define DIFB_OPERATORS_HPP

#include <cstddef>
#include <functional>

#include "difb/linalg.hpp"

namespace difb {

// Single-valued map A with cocoercivity constant alpha:
// <A p - A y, p - y> >= alpha * ||A p - A y||^2 for all p, y.
struct CocoerciveMap {
    std::function<Vector(const Vector&)> eval;
    double alpha = 0.0;
};

// Resolvent (I + step * B)^{-1} of a maximal monotone map B,
// evaluated at (point, step).
struct ResolventMap {
    std::function<Vector(const Vector&, double)> resolvent;
};

struct SplitProblem {
    CocoerciveMap a;
    ResolventMap b;
    std::size_t dimension = 0;
};

// Least-squares data for 0.5 * ||H beta - t||^2; lipschitz is the spectral
// norm of H^T H, so the gradient is (1/lipschitz)-cocoercive.
struct LeastSquaresData {
    Matrix h;
    Vector t;
    double lipschitz = 0.0;
};

// Computes lipschitz once via power iteration (tol 1e-8, max_iter 10000).
LeastSquaresData make_least_squares(Matrix h, Vector t);

// H^T (H beta - t)
Vector least_squares_gradient(const LeastSquaresData& data, const Vector& beta);

// Componentwise sign(x) * max(|x| - tau, 0); the resolvent of the scaled
// l1 subdifferential.
Vector soft_threshold(const Vector& x, double tau);

// argmin_z 0.5 * ||H z - t||^2 + (1 / (2 rho)) * ||z - x||^2, i.e. the
// solution of (I + rho H^T H) z = x + rho H^T t.
Vector least_squares_resolvent(const LeastSquaresData& data, const Vector& x, double rho);

// A == 0 with infinite slack; usable wherever a CocoerciveMap is expected.
CocoerciveMap zero_operator(std::size_t dimension);

// LASSO instance min 0.5 * ||H beta - t||^2 + mu * ||beta||_1 as a split
// problem: A = least-squares gradient (alpha = 1/lipschitz), B = l1
// subdifferential with resolvent soft_threshold(., step * mu).
SplitProblem lasso_problem(LeastSquaresData data, double mu);

// 0.5 * ||H beta - t||^2 + mu * ||beta||_1
double lasso_objective(const LeastSquaresData& data, double mu, const Vector& beta);

}  // namespace difb

#endif
