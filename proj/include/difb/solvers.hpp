// Fixed-point solvers for 0 in A z + B z. The lead method is a relaxed
// forward-backward iteration with two inertial terms:
//
//   w_k     = p_k + theta (p_k - p_{k-1}) + delta (p_{k-1} - p_{k-2})
//   p_{k+1} = (1 - e_k) w_k + e_k J_lambda^B (w_k - lambda A w_k)
//
// with theta in [0, 1), delta <= 0, lambda in (0, 2 alpha) and relaxation
// weights e_k in (0, 1). The feasibility conditions on (theta, delta) are
// checked by validate_assumption_b and met constructively by suggest_params.
// Five reference methods ship alongside for benchmarking.
#ifndef DIFB_SOLVERS_HPP
#define DIFB_SOLVERS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "difb/operators.hpp"

namespace difb {

// Iterate norm above which a run is declared divergent.
inline constexpr double kDivergenceNormCap = 1e12;

class DivergenceError : public std::runtime_error {
public:
    DivergenceError(std::size_t iteration, const std::string& what)
        : std::runtime_error(what + " (iteration " + std::to_string(iteration) + ")"),
          iteration_(iteration) {}
    std::size_t iteration() const { return iteration_; }

private:
    std::size_t iteration_;
};

// Parameters of the double-inertial iteration. eps_schedule maps the
// 1-based iteration index to a relaxation weight; when empty, the constant
// (eps_lo + eps_hi) / 2 is used.
struct DifbParams {
    double lambda = 0.0;
    double theta = 0.0;
    double delta = 0.0;
    double eps_lo = 0.0;
    double eps_hi = 0.0;
    std::function<double(std::size_t)> eps_schedule;

    double eps_at(std::size_t k) const {
        return eps_schedule ? eps_schedule(k) : 0.5 * (eps_lo + eps_hi);
    }
};

struct SolverConfig {
    std::size_t max_iters = 1000;
    double residual_tol = 0.0;  // 0 runs the full budget
    Vector initial;             // empty means the zero vector
    bool record_iterates = false;
    std::optional<Vector> reference_point;  // Lyapunov anchor; default final iterate
};

struct LyapunovDiagnostics {
    double kappa = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    std::vector<double> gamma;      // gamma[k-1] = Gamma_k, k >= 1
    std::vector<double> gamma_bar;  // gamma_bar[k-1] = Gamma_k + c1 ||p_{k-1} - p_{k-2}||^2
};

struct SolverTrace {
    Vector final_point;
    std::vector<double> residuals;   // one fixed-point residual per iteration
    std::vector<double> step_diffs;  // ||p_{k+1} - p_k|| per iteration
    double elapsed_seconds = 0.0;
    std::size_t iterations_run = 0;
    bool converged = false;
    bool params_valid = true;
    std::optional<LyapunovDiagnostics> lyapunov;
    // Filled only when cfg.record_iterates, by the methods whose identities
    // the tests replay: solve_difb ([p_{-1}, p_0, p_1, ...], the Lyapunov
    // input), solve_dong_mann (v_1, v_2, ...) and solve_iyiola_dr (the
    // governing sequence g_1, g_2, ...).
    std::vector<Vector> iterates;
};

struct ClauseCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct ValidationReport {
    bool ok = false;
    std::vector<ClauseCheck> clauses;
};

// Feasibility of (lambda, theta, delta, eps bounds) for the convergence
// guarantee, with kappa = 2 alpha / (4 alpha - lambda):
//   step size: lambda in (0, 2 alpha)
//   (i)   0 < eps_lo <= e_k <= eps_hi < 1 (schedule sampled on a prefix)
//   (ii)  0 <= theta < min{1/3, E(1-kappa) / (E(1-kappa) + 2 kappa)}, E = eps_lo
//   (iii) delta <= 0, delta above both closed-form lower bounds, and the
//         quadratic margin inequality holds.
ValidationReport validate_assumption_b(double alpha, const DifbParams& params);

// Feasible (theta, delta) for given lambda and relaxation bounds:
// theta = 0.9 x the clause (ii) cap, delta = 0.5 x the larger clause (iii)
// lower bound (clamped to <= 0), then |delta| and theta are halved until
// validate_assumption_b accepts. Always terminates: (0, 0) is feasible.
DifbParams suggest_params(double alpha, double lambda, double eps_lo, double eps_hi);

// J_lambda^B (w - lambda A w)
Vector forward_backward_map(const SplitProblem& problem, double lambda, const Vector& w);

// The double-inertial relaxed forward-backward iteration. Infeasible
// parameters run anyway with trace.params_valid = false so sweeps can
// probe outside the guaranteed region; lambda <= 0 is refused outright.
SolverTrace solve_difb(const SplitProblem& problem, const DifbParams& params,
                       const SolverConfig& cfg);

// Proximal gradient with Nesterov acceleration on the LASSO objective
// 0.5 ||H b - t||^2 + mu ||b||_1; step 1/L, t_1 = 1,
// t_{n+1} = (1 + sqrt(1 + 4 t_n^2)) / 2, y = x_n + ((t_n-1)/t_{n+1})(x_n - x_{n-1}).
SolverTrace solve_fista(const LeastSquaresData& data, double mu, const SolverConfig& cfg);

// Forward-backward-forward iteration with geometric backtracking:
// the step gamma = gamma0 * shrink^m takes the smallest m >= 0 with
// gamma ||A y - A x|| <= rho ||y - x||, then
//   y = J_gamma^B (x - gamma A x),  x_next = y - gamma (A y - A x).
SolverTrace solve_tseng_fbf(const SplitProblem& problem, const CocoerciveMap& a_eval, double rho,
                            double shrink, double gamma0, const SolverConfig& cfg);

// Double-inertial forward-backward-forward with an adaptive step that
// never needs the Lipschitz constant:
//   p_n = th_n + a_n (th_n - th_{n-1}),  r_n = p_n + b_n (p_n - p_{n-1})
//   s_n = J_{v_n}^B (r_n - v_n A r_n),   th_{n+1} = s_n - v_n (A s_n - A r_n)
//   v_{n+1} = min{rho ||r_n - s_n|| / ||A r_n - A s_n||, v_n + inc_n}
// Stops exactly when s_n == r_n up to machine zero.
SolverTrace solve_suantai_difbf(const SplitProblem& problem, const CocoerciveMap& a_eval,
                                double rho, double v1,
                                const std::function<double(std::size_t)>& alpha_seq,
                                const std::function<double(std::size_t)>& beta_seq,
                                const std::function<double(std::size_t)>& inc_seq,
                                const SolverConfig& cfg);

// Mann iteration of a nonexpansive map with two inertial extrapolations:
//   z_n = v_n + a_n (v_n - v_{n-1}),  y_n = v_n + b_n (v_n - v_{n-1})
//   v_{n+1} = (1 - g_n) z_n + g_n T(y_n)
// a_1 = b_1 = 0 is required; both sequences must stay in [0, 1).
SolverTrace solve_dong_mann(const std::function<Vector(const Vector&)>& t_map, std::size_t dimension,
                            const std::function<double(std::size_t)>& alpha_seq,
                            const std::function<double(std::size_t)>& beta_seq,
                            const std::function<double(std::size_t)>& gamma_seq,
                            const SolverConfig& cfg);

// Douglas-Rachford splitting on the LASSO objective with a two-step
// inertial correction on the governing sequence:
//   th_{n+1} = J_rho^A (2 J_rho^B - I)(g_n) + (I - J_rho^B)(g_n)
//   g_{n+1}  = th_{n+1} + alpha (th_{n+1} - th_n) + beta (th_n - th_{n-1})
// with 0 <= alpha < 1/3 and (3 alpha - 1) / (3 + 4 alpha) < beta <= 0.
// J^A is the least-squares resolvent, J^B the soft threshold at rho * mu;
// the reported solution is the shadow point J_rho^B(g_final).
SolverTrace solve_iyiola_dr(const LeastSquaresData& data, double mu, double alpha, double beta,
                            double rho, const SolverConfig& cfg);

// Lyapunov diagnostics of a recorded double-inertial run. history must be
// the full iterate list [p_{-1}, p_0, p_1, ...]; for k >= 1,
//   Gamma_k = ||p_k - p*||^2 - theta ||p_{k-1} - p*||^2 - delta ||p_{k-2} - p*||^2
//             + E ((1-kappa)/kappa) (1 - |delta| - theta) ||p_k - p_{k-1}||^2
//   GammaBar_k = Gamma_k + c1 ||p_{k-1} - p_{k-2}||^2
// with E = eps_lo. Under feasible parameters and an exact anchor p*,
// Gamma_k >= 0 and GammaBar is non-increasing with per-step drop at least
// c2 ||p_{k-1} - p_{k-2}||^2.
LyapunovDiagnostics lyapunov_series(const std::vector<Vector>& history, const Vector& p_star,
                                    double alpha, const DifbParams& params);

enum class Algorithm { difb, fista, tseng, suantai, dong_mann, iyiola_dr };

const char* algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

// One record per benchmark method with every tunable the dispatcher needs;
// unset optionals fall back to the problem-derived defaults noted inline.
struct SolverSpec {
    Algorithm algo = Algorithm::difb;

    // difb (also the Mann operator step)
    std::optional<double> lambda;  // default alpha = 1/L
    std::optional<double> theta;   // default from suggest_params
    std::optional<double> delta;   // default from suggest_params
    double eps_lo = 0.9;
    double eps_hi = 0.99;

    // tseng
    double tseng_rho = 0.5;
    double tseng_shrink = 0.5;
    std::optional<double> tseng_gamma0;  // default 1/L

    // suantai
    double suantai_rho = 0.5;
    std::optional<double> suantai_v1;  // default 1/L
    double suantai_alpha = 0.1;
    double suantai_beta = 0.1;

    // dong_mann
    double mann_gamma = 0.5;
    double mann_alpha = 0.1;  // applied from n = 2; n = 1 uses 0
    double mann_beta = 0.1;

    // iyiola_dr
    double dr_alpha = 0.2;
    double dr_beta = -0.05;
    std::optional<double> dr_rho;  // default 1/L
};

// Runs the selected method on min 0.5 ||H b - t||^2 + mu ||b||_1.
SolverTrace run_lasso_solver(const SolverSpec& spec, const LeastSquaresData& data, double mu,
                             const SolverConfig& cfg);

}  // namespace difb

#endif
