#include "difb/solvers.hpp"

#include <chrono>
#include <cmath>
#include <memory>

namespace difb {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Vector initial_point(const SolverConfig& cfg, std::size_t dim, const char* who) {
    if (cfg.max_iters == 0) {
        throw std::invalid_argument(std::string(who) + ": max_iters must be >= 1");
    }
    if (cfg.initial.size() == 0) return Vector(dim);
    if (cfg.initial.size() != dim) {
        throw std::invalid_argument(std::string(who) + ": initial point length mismatch");
    }
    return cfg.initial;
}

void guard_iterate(const Vector& x, std::size_t k, const char* who) {
    if (!x.all_finite()) {
        throw DivergenceError(k, std::string(who) + ": iterate became non-finite");
    }
    if (norm2(x) > kDivergenceNormCap) {
        throw DivergenceError(k, std::string(who) + ": iterate norm exceeded 1e12");
    }
}

double sqdist(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

// kappa = 2 alpha / (4 alpha - lambda), written so alpha = +inf gives 1/2
double kappa_of(double alpha, double lambda) { return 2.0 / (4.0 - lambda / alpha); }

struct InertiaBounds {
    double kappa = 0.0;
    double theta_cap = 0.0;
};

InertiaBounds inertia_bounds(double alpha, double lambda, double eps_lo) {
    InertiaBounds b;
    b.kappa = kappa_of(alpha, lambda);
    const double e1k = eps_lo * (1.0 - b.kappa);
    b.theta_cap = std::min(1.0 / 3.0, e1k / (e1k + 2.0 * b.kappa));
    return b;
}

// Closed-form lower bounds on delta for a fixed theta.
double delta_bound_a(double theta, double kappa, double eps_lo) {
    const double e1k = eps_lo * (1.0 - kappa);
    return -(e1k * (1.0 - theta) - 2.0 * kappa * theta) / e1k;
}

double delta_bound_b(double theta, double kappa, double eps_lo) {
    const double ratio = eps_lo * (1.0 - kappa) / kappa;
    return (theta * (1.0 + theta) - ratio * (1.0 - theta) * (1.0 - theta)) /
           ((1.0 + theta) * (1.0 + ratio));
}

bool quadratic_margin_ok(double theta, double delta, double kappa, double eps_lo) {
    const double e1k = eps_lo * (1.0 - kappa);
    const double lhs = kappa * theta * (1.0 + theta) - e1k * (1.0 - theta) * (1.0 - theta);
    const double rhs = kappa * delta * (1.0 + 2.0 * theta - delta) +
                       2.0 * e1k * (1.0 + theta) * delta + e1k * delta * delta;
    return lhs < rhs;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

}  // namespace

ValidationReport validate_assumption_b(double alpha, const DifbParams& p) {
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("validate_assumption_b: alpha must be positive");
    }
    ValidationReport rep;

    const bool step_ok = std::isfinite(p.lambda) && p.lambda > 0.0 && p.lambda < 2.0 * alpha;
    rep.clauses.push_back({"step-size", step_ok,
                           "lambda=" + fmt(p.lambda) + " must lie in (0, " + fmt(2.0 * alpha) + ")"});

    bool relax_ok = p.eps_lo > 0.0 && p.eps_lo < p.eps_hi && p.eps_hi < 1.0;
    std::string relax_detail =
        "bounds eps_lo=" + fmt(p.eps_lo) + ", eps_hi=" + fmt(p.eps_hi) + " must satisfy 0 < lo < hi < 1";
    if (relax_ok) {
        for (std::size_t k = 1; k <= 256; ++k) {
            const double e = p.eps_at(k);
            if (!(e >= p.eps_lo && e <= p.eps_hi)) {
                relax_ok = false;
                relax_detail = "schedule value " + fmt(e) + " at k=" + std::to_string(k) +
                               " escapes [eps_lo, eps_hi]";
                break;
            }
        }
    }
    rep.clauses.push_back({"relaxation-bounds", relax_ok, relax_detail});

    if (!step_ok || !relax_ok) {
        // the inertia caps below are meaningless without a valid step and bounds
        rep.clauses.push_back({"theta-bound", false, "not evaluated: step or relaxation invalid"});
        rep.clauses.push_back({"delta-bound", false, "not evaluated: step or relaxation invalid"});
        rep.clauses.push_back({"delta-quadratic", false, "not evaluated: step or relaxation invalid"});
        rep.ok = false;
        return rep;
    }

    const InertiaBounds ib = inertia_bounds(alpha, p.lambda, p.eps_lo);
    const bool theta_ok = std::isfinite(p.theta) && p.theta >= 0.0 && p.theta < ib.theta_cap;
    rep.clauses.push_back({"theta-bound", theta_ok,
                           "theta=" + fmt(p.theta) + " must lie in [0, " + fmt(ib.theta_cap) + ")"});

    const double lb = std::max(delta_bound_a(p.theta, ib.kappa, p.eps_lo),
                               delta_bound_b(p.theta, ib.kappa, p.eps_lo));
    const bool delta_ok = std::isfinite(p.delta) && p.delta <= 0.0 && p.delta > lb;
    rep.clauses.push_back({"delta-bound", delta_ok,
                           "delta=" + fmt(p.delta) + " must lie in (" + fmt(lb) + ", 0]"});

    const bool quad_ok = quadratic_margin_ok(p.theta, p.delta, ib.kappa, p.eps_lo);
    rep.clauses.push_back({"delta-quadratic", quad_ok,
                           "inertia margin inequality must hold strictly at theta=" + fmt(p.theta) +
                               ", delta=" + fmt(p.delta)});

    rep.ok = theta_ok && delta_ok && quad_ok;
    return rep;
}

DifbParams suggest_params(double alpha, double lambda, double eps_lo, double eps_hi) {
    if (!(alpha > 0.0)) throw std::invalid_argument("suggest_params: alpha must be positive");
    if (!(lambda > 0.0 && lambda < 2.0 * alpha)) {
        throw std::invalid_argument("suggest_params: lambda must lie in (0, 2 alpha)");
    }
    if (!(eps_lo > 0.0 && eps_lo < eps_hi && eps_hi < 1.0)) {
        throw std::invalid_argument("suggest_params: need 0 < eps_lo < eps_hi < 1");
    }

    const InertiaBounds ib = inertia_bounds(alpha, lambda, eps_lo);
    double theta = 0.9 * ib.theta_cap;
    for (int outer = 0; outer < 200; ++outer) {
        const double lb =
            std::max(delta_bound_a(theta, ib.kappa, eps_lo), delta_bound_b(theta, ib.kappa, eps_lo));
        double delta = std::min(0.5 * lb, 0.0);
        for (int halvings = 0; halvings <= 60; ++halvings) {
            DifbParams p{lambda, theta, delta, eps_lo, eps_hi, {}};
            if (validate_assumption_b(alpha, p).ok) return p;
            delta *= 0.5;
        }
        theta *= 0.5;
    }
    DifbParams p{lambda, 0.0, 0.0, eps_lo, eps_hi, {}};
    if (!validate_assumption_b(alpha, p).ok) {
        throw std::logic_error("suggest_params: no feasible inertia found");
    }
    return p;
}

Vector forward_backward_map(const SplitProblem& problem, double lambda, const Vector& w) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("forward_backward_map: step must be positive and finite");
    }
    if (w.size() != problem.dimension) {
        throw std::invalid_argument("forward_backward_map: point length mismatch");
    }
    Vector aw = problem.a.eval(w);
    Vector shifted(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) shifted[i] = w[i] - lambda * aw[i];
    return problem.b.resolvent(shifted, lambda);
}

SolverTrace solve_difb(const SplitProblem& problem, const DifbParams& params,
                       const SolverConfig& cfg) {
    const std::size_t n = problem.dimension;
    Vector p = initial_point(cfg, n, "solve_difb");
    if (!(params.lambda > 0.0) || !std::isfinite(params.lambda)) {
        throw std::invalid_argument("solve_difb: lambda must be positive and finite");
    }

    SolverTrace trace;
    trace.params_valid =
        problem.a.alpha > 0.0 && validate_assumption_b(problem.a.alpha, params).ok;
    trace.residuals.reserve(cfg.max_iters);
    trace.step_diffs.reserve(cfg.max_iters);

    Vector pm2 = p;
    Vector pm1 = p;
    std::vector<Vector> history;
    if (cfg.record_iterates) {
        history.reserve(cfg.max_iters + 3);
        history.push_back(p);  // p_{-1}
        history.push_back(p);  // p_0
        history.push_back(p);  // p_1
    }

    const double theta = params.theta;
    const double delta = params.delta;
    const auto t0 = Clock::now();
    for (std::size_t k = 1; k <= cfg.max_iters; ++k) {
        const double eps = params.eps_at(k);
        Vector w(n);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = p[i] + theta * (p[i] - pm1[i]) + delta * (pm1[i] - pm2[i]);
        }
        Vector tw = forward_backward_map(problem, params.lambda, w);

        double res_sq = 0.0;
        Vector pnext(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double d = w[i] - tw[i];
            res_sq += d * d;
            pnext[i] = (1.0 - eps) * w[i] + eps * tw[i];
        }
        const double residual = std::sqrt(res_sq);
        trace.residuals.push_back(residual);
        trace.step_diffs.push_back(std::sqrt(sqdist(pnext, p)));

        guard_iterate(pnext, k, "solve_difb");
        pm2 = std::move(pm1);
        pm1 = std::move(p);
        p = std::move(pnext);
        if (cfg.record_iterates) history.push_back(p);
        trace.iterations_run = k;
        if (residual <= cfg.residual_tol) {
            trace.converged = true;
            break;
        }
    }
    trace.elapsed_seconds = seconds_since(t0);
    trace.final_point = p;

    if (cfg.record_iterates) {
        if (problem.a.alpha > 0.0) {
            const Vector& anchor = cfg.reference_point ? *cfg.reference_point : trace.final_point;
            trace.lyapunov = lyapunov_series(history, anchor, problem.a.alpha, params);
        }
        trace.iterates = std::move(history);
    }
    return trace;
}

SolverTrace solve_fista(const LeastSquaresData& data, double mu, const SolverConfig& cfg) {
    if (!(data.lipschitz > 0.0)) {
        throw std::invalid_argument("solve_fista: needs a positive Lipschitz constant");
    }
    if (mu < 0.0) throw std::invalid_argument("solve_fista: mu must be nonnegative");
    const std::size_t n = data.h.cols();
    Vector x = initial_point(cfg, n, "solve_fista");
    Vector x_prev = x;

    const double step = 1.0 / data.lipschitz;
    const double thr = mu / data.lipschitz;

    SolverTrace trace;
    trace.residuals.reserve(cfg.max_iters);
    trace.step_diffs.reserve(cfg.max_iters);

    double t = 1.0;
    const auto t0 = Clock::now();
    for (std::size_t k = 1; k <= cfg.max_iters; ++k) {
        const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
        const double beta = (t - 1.0) / t_next;
        Vector y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + beta * (x[i] - x_prev[i]);

        Vector grad = least_squares_gradient(data, y);
        for (std::size_t i = 0; i < n; ++i) y[i] -= step * grad[i];
        Vector x_next = soft_threshold(y, thr);

        const double residual = std::sqrt(sqdist(x_next, x));
        trace.residuals.push_back(residual);
        trace.step_diffs.push_back(residual);

        guard_iterate(x_next, k, "solve_fista");
        x_prev = std::move(x);
        x = std::move(x_next);
        t = t_next;
        trace.iterations_run = k;
        if (residual <= cfg.residual_tol) {
            trace.converged = true;
            break;
        }
    }
    trace.elapsed_seconds = seconds_since(t0);
    trace.final_point = std::move(x);
    return trace;
}

SolverTrace solve_tseng_fbf(const SplitProblem& problem, const CocoerciveMap& a_eval, double rho,
                            double shrink, double gamma0, const SolverConfig& cfg) {
    if (!(rho > 0.0 && rho < 1.0)) {
        throw std::invalid_argument("solve_tseng_fbf: rho must lie in (0, 1)");
    }
    if (!(shrink > 0.0 && shrink < 1.0)) {
        throw std::invalid_argument("solve_tseng_fbf: shrink factor must lie in (0, 1)");
    }
    if (!(gamma0 > 0.0)) throw std::invalid_argument("solve_tseng_fbf: gamma0 must be positive");

    const std::size_t n = problem.dimension;
    Vector x = initial_point(cfg, n, "solve_tseng_fbf");

    SolverTrace trace;
    trace.residuals.reserve(cfg.max_iters);
    trace.step_diffs.reserve(cfg.max_iters);

    const auto t0 = Clock::now();
    for (std::size_t k = 1; k <= cfg.max_iters; ++k) {
        Vector ax = a_eval.eval(x);
        double gamma = gamma0;
        Vector y, ay;
        bool accepted = false;
        for (int m = 0; m <= 100; ++m) {
            Vector shifted(n);
            for (std::size_t i = 0; i < n; ++i) shifted[i] = x[i] - gamma * ax[i];
            y = problem.b.resolvent(shifted, gamma);
            ay = a_eval.eval(y);
            double diff_a = 0.0, diff_x = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double da = ay[i] - ax[i];
                const double dx = y[i] - x[i];
                diff_a += da * da;
                diff_x += dx * dx;
            }
            if (gamma * std::sqrt(diff_a) <= rho * std::sqrt(diff_x)) {
                accepted = true;
                break;
            }
            gamma *= shrink;
        }
        if (!accepted) {
            throw std::runtime_error("solve_tseng_fbf: backtracking failed after 100 shrink steps");
        }

        Vector x_next(n);
        for (std::size_t i = 0; i < n; ++i) x_next[i] = y[i] - gamma * (ay[i] - ax[i]);

        const double residual = std::sqrt(sqdist(y, x));
        trace.residuals.push_back(residual);
        trace.step_diffs.push_back(std::sqrt(sqdist(x_next, x)));

        guard_iterate(x_next, k, "solve_tseng_fbf");
        x = std::move(x_next);
        trace.iterations_run = k;
        if (residual <= cfg.residual_tol) {
            trace.converged = true;
            break;
        }
    }
    trace.elapsed_seconds = seconds_since(t0);
    trace.final_point = std::move(x);
    return trace;
}

SolverTrace solve_suantai_difbf(const SplitProblem& problem, const CocoerciveMap& a_eval,
                                double rho, double v1,
                                const std::function<double(std::size_t)>& alpha_seq,
                                const std::function<double(std::size_t)>& beta_seq,
                                const std::function<double(std::size_t)>& inc_seq,
                                const SolverConfig& cfg) {
    if (!(rho > 0.0 && rho < 1.0)) {
        throw std::invalid_argument("solve_suantai_difbf: rho must lie in (0, 1)");
    }
    if (!(v1 > 0.0)) throw std::invalid_argument("solve_suantai_difbf: v1 must be positive");

    const std::size_t n = problem.dimension;
    Vector th = initial_point(cfg, n, "solve_suantai_difbf");
    Vector th_prev = th;
    Vector p_prev = th;  // p_0, taken equal to p_1

    SolverTrace trace;
    trace.residuals.reserve(cfg.max_iters);
    trace.step_diffs.reserve(cfg.max_iters);

    double v = v1;
    const auto t0 = Clock::now();
    for (std::size_t k = 1; k <= cfg.max_iters; ++k) {
        const double an = alpha_seq(k);
        const double bn = beta_seq(k);
        const double inc = inc_seq(k);
        if (an < 0.0 || bn < 0.0 || inc < 0.0) {
            throw std::invalid_argument("solve_suantai_difbf: sequences must be nonnegative");
        }

        Vector pn(n), rn(n);
        for (std::size_t i = 0; i < n; ++i) pn[i] = th[i] + an * (th[i] - th_prev[i]);
        for (std::size_t i = 0; i < n; ++i) rn[i] = pn[i] + bn * (pn[i] - p_prev[i]);

        Vector ar = a_eval.eval(rn);
        Vector shifted(n);
        for (std::size_t i = 0; i < n; ++i) shifted[i] = rn[i] - v * ar[i];
        Vector sn = problem.b.resolvent(shifted, v);

        const double residual = std::sqrt(sqdist(sn, rn));
        trace.residuals.push_back(residual);

        if (residual <= 1e-15 * (1.0 + norm2(rn))) {
            // s_n == r_n up to machine zero: r_n already solves the inclusion
            trace.step_diffs.push_back(std::sqrt(sqdist(sn, th)));
            trace.iterations_run = k;
            trace.converged = true;
            th = std::move(sn);
            break;
        }

        Vector as = a_eval.eval(sn);
        Vector th_next(n);
        for (std::size_t i = 0; i < n; ++i) th_next[i] = sn[i] - v * (as[i] - ar[i]);

        double diff_a = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = ar[i] - as[i];
            diff_a += d * d;
        }
        diff_a = std::sqrt(diff_a);
        v = diff_a > 0.0 ? std::min(rho * residual / diff_a, v + inc) : v + inc;

        trace.step_diffs.push_back(std::sqrt(sqdist(th_next, th)));
        guard_iterate(th_next, k, "solve_suantai_difbf");

        th_prev = std::move(th);
        th = std::move(th_next);
        p_prev = std::move(pn);
        trace.iterations_run = k;
        if (residual <= cfg.residual_tol) {
            trace.converged = true;
            break;
        }
    }
    trace.elapsed_seconds = seconds_since(t0);
    trace.final_point = std::move(th);
    return trace;
}

SolverTrace solve_dong_mann(const std::function<Vector(const Vector&)>& t_map, std::size_t dimension,
                            const std::function<double(std::size_t)>& alpha_seq,
                            const std::function<double(std::size_t)>& beta_seq,
                            const std::function<double(std::size_t)>& gamma_seq,
                            const SolverConfig& cfg) {
    const std::size_t n = dimension;
    Vector v = initial_point(cfg, n, "solve_dong_mann");
    Vector v_prev = v;

    SolverTrace trace;
    trace.residuals.reserve(cfg.max_iters);
    trace.step_diffs.reserve(cfg.max_iters);
    if (cfg.record_iterates) {
        trace.iterates.reserve(cfg.max_iters + 1);
        trace.iterates.push_back(v);
    }

    const auto t0 = Clock::now();
    for (std::size_t k = 1; k <= cfg.max_iters; ++k) {
        const double an = alpha_seq(k);
        const double bn = beta_seq(k);
        const double gn = gamma_seq(k);
        if (k == 1 && (an != 0.0 || bn != 0.0)) {
            throw std::invalid_argument("solve_dong_mann: inertia must start at zero (n = 1)");
        }
        if (!(an >= 0.0 && an < 1.0 && bn >= 0.0 && bn < 1.0)) {
            throw std::invalid_argument("solve_dong_mann: inertia weights must lie in [0, 1)");
        }
        if (!(gn > 0.0 && gn <= 1.0)) {
            throw std::invalid_argument("solve_dong_mann: relaxation must lie in (0, 1]");
        }

        Vector z(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double d = v[i] - v_prev[i];
            z[i] = v[i] + an * d;
            y[i] = v[i] + bn * d;
        }
        Vector ty = t_map(y);
        // y == v exactly when bn == 0, so the residual map value can be reused
        Vector tv = bn == 0.0 ? ty : t_map(v);
        trace.residuals.push_back(std::sqrt(sqdist(v, tv)));

        Vector v_next(n);
        for (std::size_t i = 0; i < n; ++i) v_next[i] = (1.0 - gn) * z[i] + gn * ty[i];
        trace.step_diffs.push_back(std::sqrt(sqdist(v_next, v)));

        guard_iterate(v_next, k, "solve_dong_mann");
        if (cfg.record_iterates) trace.iterates.push_back(v_next);
        v_prev = std::move(v);
        v = std::move(v_next);
        trace.iterations_run = k;
        if (trace.residuals.back() <= cfg.residual_tol) {
            trace.converged = true;
            break;
        }
    }
    trace.elapsed_seconds = seconds_since(t0);
    trace.final_point = std::move(v);
    return trace;
}

SolverTrace solve_iyiola_dr(const LeastSquaresData& data, double mu, double alpha, double beta,
                            double rho, const SolverConfig& cfg) {
    if (!(alpha >= 0.0 && alpha < 1.0 / 3.0)) {
        throw std::invalid_argument("solve_iyiola_dr: alpha must lie in [0, 1/3)");
    }
    const double beta_lb = (3.0 * alpha - 1.0) / (3.0 + 4.0 * alpha);
    if (!(beta > beta_lb && beta <= 0.0)) {
        throw std::invalid_argument("solve_iyiola_dr: beta must lie in (" + std::to_string(beta_lb) +
                                    ", 0]");
    }
    if (!(rho > 0.0)) throw std::invalid_argument("solve_iyiola_dr: rho must be positive");
    if (mu < 0.0) throw std::invalid_argument("solve_iyiola_dr: mu must be nonnegative");

    const std::size_t n = data.h.cols();
    Vector g = initial_point(cfg, n, "solve_iyiola_dr");
    Vector th = g;
    Vector th_prev = g;

    // (I + rho H^T H) z = x + rho H^T t, factorized once
    Matrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < data.h.rows(); ++r) s += data.h(r, i) * data.h(r, j);
            s *= rho;
            if (i == j) s += 1.0;
            gram(i, j) = s;
            gram(j, i) = s;
        }
    }
    const CholeskyFactor factor(gram);
    Vector pre = matvec_transposed(data.h, data.t);
    for (std::size_t i = 0; i < n; ++i) pre[i] *= rho;

    const double thr = rho * mu;

    SolverTrace trace;
    trace.residuals.reserve(cfg.max_iters);
    trace.step_diffs.reserve(cfg.max_iters);
    if (cfg.record_iterates) {
        // governing sequence, not the shadow: g_1, g_2, ...
        trace.iterates.reserve(cfg.max_iters + 1);
        trace.iterates.push_back(g);
    }

    const auto t0 = Clock::now();
    for (std::size_t k = 1; k <= cfg.max_iters; ++k) {
        Vector jb = soft_threshold(g, thr);
        Vector refl(n);
        for (std::size_t i = 0; i < n; ++i) refl[i] = 2.0 * jb[i] - g[i] + pre[i];
        Vector ja = factor.solve(refl);

        Vector th_next(n);
        for (std::size_t i = 0; i < n; ++i) th_next[i] = ja[i] + g[i] - jb[i];
        Vector g_next(n);
        for (std::size_t i = 0; i < n; ++i) {
            g_next[i] = th_next[i] + alpha * (th_next[i] - th[i]) + beta * (th[i] - th_prev[i]);
        }

        trace.residuals.push_back(std::sqrt(sqdist(g_next, g)));
        trace.step_diffs.push_back(std::sqrt(sqdist(th_next, th)));

        guard_iterate(g_next, k, "solve_iyiola_dr");
        if (cfg.record_iterates) trace.iterates.push_back(g_next);
        th_prev = std::move(th);
        th = std::move(th_next);
        g = std::move(g_next);
        trace.iterations_run = k;
        if (trace.residuals.back() <= cfg.residual_tol) {
            trace.converged = true;
            break;
        }
    }
    trace.elapsed_seconds = seconds_since(t0);
    trace.final_point = soft_threshold(g, thr);  // shadow point carries the solution
    return trace;
}

LyapunovDiagnostics lyapunov_series(const std::vector<Vector>& history, const Vector& p_star,
                                    double alpha, const DifbParams& params) {
    if (history.size() < 3) {
        throw std::invalid_argument("lyapunov_series: history must hold p_{-1}, p_0, p_1");
    }
    LyapunovDiagnostics d;
    d.kappa = kappa_of(alpha, params.lambda);
    const double ratio = params.eps_lo * (1.0 - d.kappa) / d.kappa;
    const double t = params.theta;
    const double del = params.delta;
    const double ad = std::abs(del);

    d.c1 = -((1.0 + t) * (t - del) - ratio * (t * t - 2.0 * t - ad * t - ad + 1.0));
    d.c2 = d.c1 + del * (t - del) + ratio * (del * del - ad - ad * t);

    const std::size_t count = history.size() - 2;
    d.gamma.reserve(count);
    d.gamma_bar.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) {
        const Vector& pk = history[k + 1];
        const Vector& pk1 = history[k];
        const Vector& pk2 = history[k - 1];
        const double g = sqdist(pk, p_star) - t * sqdist(pk1, p_star) - del * sqdist(pk2, p_star) +
                         ratio * (1.0 - ad - t) * sqdist(pk, pk1);
        d.gamma.push_back(g);
        d.gamma_bar.push_back(g + d.c1 * sqdist(pk1, pk2));
    }
    return d;
}

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::difb: return "difb";
        case Algorithm::fista: return "fista";
        case Algorithm::tseng: return "tseng";
        case Algorithm::suantai: return "suantai";
        case Algorithm::dong_mann: return "dong_mann";
        case Algorithm::iyiola_dr: return "iyiola_dr";
    }
    return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "difb") return Algorithm::difb;
    if (name == "fista") return Algorithm::fista;
    if (name == "tseng") return Algorithm::tseng;
    if (name == "suantai") return Algorithm::suantai;
    if (name == "dong_mann") return Algorithm::dong_mann;
    if (name == "iyiola_dr") return Algorithm::iyiola_dr;
    throw std::invalid_argument("unknown algorithm: " + name);
}

SolverTrace run_lasso_solver(const SolverSpec& spec, const LeastSquaresData& data, double mu,
                             const SolverConfig& cfg) {
    const double alpha = data.lipschitz > 0.0 ? 1.0 / data.lipschitz : 1.0;
    switch (spec.algo) {
        case Algorithm::difb: {
            const double lambda = spec.lambda.value_or(alpha);
            DifbParams params;
            if (lambda > 0.0 && lambda < 2.0 * alpha) {
                params = suggest_params(alpha, lambda, spec.eps_lo, spec.eps_hi);
            } else {
                // a step override beyond the guaranteed window still runs;
                // solve_difb flags it through trace.params_valid
                params.lambda = lambda;
                params.eps_lo = spec.eps_lo;
                params.eps_hi = spec.eps_hi;
            }
            if (spec.theta) params.theta = *spec.theta;
            if (spec.delta) params.delta = *spec.delta;
            return solve_difb(lasso_problem(data, mu), params, cfg);
        }
        case Algorithm::fista:
            return solve_fista(data, mu, cfg);
        case Algorithm::tseng: {
            SplitProblem p = lasso_problem(data, mu);
            const double gamma0 = spec.tseng_gamma0.value_or(alpha);
            return solve_tseng_fbf(p, p.a, spec.tseng_rho, spec.tseng_shrink, gamma0, cfg);
        }
        case Algorithm::suantai: {
            SplitProblem p = lasso_problem(data, mu);
            const double v1 = spec.suantai_v1.value_or(alpha);
            const double ca = spec.suantai_alpha;
            const double cb = spec.suantai_beta;
            return solve_suantai_difbf(
                p, p.a, spec.suantai_rho, v1, [ca](std::size_t) { return ca; },
                [cb](std::size_t) { return cb; },
                [](std::size_t k) { return 1.0 / (static_cast<double>(k) * static_cast<double>(k)); },
                cfg);
        }
        case Algorithm::dong_mann: {
            SplitProblem p = lasso_problem(data, mu);
            const double lambda = spec.lambda.value_or(alpha);
            auto t_map = [p, lambda](const Vector& w) { return forward_backward_map(p, lambda, w); };
            const double ma = spec.mann_alpha;
            const double mb = spec.mann_beta;
            const double mg = spec.mann_gamma;
            return solve_dong_mann(
                t_map, p.dimension, [ma](std::size_t k) { return k == 1 ? 0.0 : ma; },
                [mb](std::size_t k) { return k == 1 ? 0.0 : mb; }, [mg](std::size_t) { return mg; },
                cfg);
        }
        case Algorithm::iyiola_dr: {
            const double rho = spec.dr_rho.value_or(alpha);
            return solve_iyiola_dr(data, mu, spec.dr_alpha, spec.dr_beta, rho, cfg);
        }
    }
    throw std::logic_error("run_lasso_solver: unhandled algorithm");
}

}  // namespace difb
