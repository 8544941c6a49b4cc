#include "difb/operators.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace difb {

LeastSquaresData make_least_squares(Matrix h, Vector t) {
    if (h.rows() != t.size()) {
        throw std::invalid_argument("make_least_squares: H rows and t length differ");
    }
    SpectralNormEstimate est = spectral_norm_gram(h, 1e-8, 10000);
    return {std::move(h), std::move(t), est.value};
}

Vector least_squares_gradient(const LeastSquaresData& data, const Vector& beta) {
    if (beta.size() != data.h.cols()) {
        throw std::invalid_argument("least_squares_gradient: beta length mismatch");
    }
    Vector r = matvec(data.h, beta);
    r -= data.t;
    return matvec_transposed(data.h, r);
}

Vector soft_threshold(const Vector& x, double tau) {
    if (tau < 0.0) throw std::invalid_argument("soft_threshold: negative threshold");
    Vector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > tau) {
            r[i] = x[i] - tau;
        } else if (x[i] < -tau) {
            r[i] = x[i] + tau;
        } else {
            r[i] = 0.0;
        }
    }
    return r;
}

Vector least_squares_resolvent(const LeastSquaresData& data, const Vector& x, double rho) {
    if (rho <= 0.0) throw std::invalid_argument("least_squares_resolvent: step must be positive");
    if (x.size() != data.h.cols()) {
        throw std::invalid_argument("least_squares_resolvent: point length mismatch");
    }
    const std::size_t d = data.h.cols();
    Matrix g(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < data.h.rows(); ++k) s += data.h(k, i) * data.h(k, j);
            s *= rho;
            if (i == j) s += 1.0;
            g(i, j) = s;
            g(j, i) = s;
        }
    }
    Vector rhs = matvec_transposed(data.h, data.t);
    for (std::size_t i = 0; i < d; ++i) rhs[i] = x[i] + rho * rhs[i];
    return solve_spd(g, rhs);
}

CocoerciveMap zero_operator(std::size_t dimension) {
    return {[dimension](const Vector& x) {
                if (x.size() != dimension) {
                    throw std::invalid_argument("zero_operator: dimension mismatch");
                }
                return Vector(dimension);
            },
            std::numeric_limits<double>::infinity()};
}

SplitProblem lasso_problem(LeastSquaresData data, double mu) {
    if (mu < 0.0) throw std::invalid_argument("lasso_problem: mu must be nonnegative");
    auto shared = std::make_shared<const LeastSquaresData>(std::move(data));
    const double alpha = shared->lipschitz > 0.0 ? 1.0 / shared->lipschitz : 1.0;
    SplitProblem p;
    p.dimension = shared->h.cols();
    p.a = {[shared](const Vector& beta) { return least_squares_gradient(*shared, beta); }, alpha};
    p.b = {[mu](const Vector& x, double step) { return soft_threshold(x, step * mu); }};
    return p;
}

double lasso_objective(const LeastSquaresData& data, double mu, const Vector& beta) {
    Vector r = matvec(data.h, beta);
    r -= data.t;
    double l1 = 0.0;
    for (std::size_t i = 0; i < beta.size(); ++i) l1 += std::abs(beta[i]);
    return 0.5 * dot(r, r) + mu * l1;
}

}  // namespace difb
