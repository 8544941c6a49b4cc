// Experiment harness behind the command-line tool: sine-curve regression
// benchmarks, iris classification, parameter feasibility reports and
// per-iteration trace dumps. Everything here is deterministic for a fixed
// RunSpec; only cpu_time fields vary between runs.
#ifndef DIFB_EXPERIMENTS_HPP
#define DIFB_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "difb/elm.hpp"
#include "difb/solvers.hpp"

namespace difb {

struct RunSpec {
    std::optional<Activation> activation;   // default linear (regress/trace), sigmoid (classify)
    std::size_t n_samples = 10;
    std::optional<std::size_t> n_hidden;    // default 20 (regress/trace), 50 (classify)
    std::optional<std::size_t> iterations;  // default 1000 linear, 5000 sigmoid
    std::uint64_t seed = 42;
    double mu = 1e-4;
    std::vector<Algorithm> algorithms;      // empty: all six (regress/trace), difb (classify)
    std::string data_path;
    double split_fraction = 0.8;
    std::string out_path = "results.csv";

    // double-inertial overrides; unset values come from suggest_params
    std::optional<double> lambda;
    std::optional<double> theta;
    std::optional<double> delta;
    double eps_lo = 0.9;
    double eps_hi = 0.99;
};

// Trains one model per algorithm on a fresh sine sample, scores each on a
// 200-point grid over the sine domain plus the training points, and writes
//   <out>                 algorithm,cpu_time_s,mse,rmse,r2,mae  (ascending mse)
//   <out stem>_predictions.csv   x,y_true,<one column per algorithm>
// A diverging algorithm yields a nan row sorted last; the run continues.
int cmd_regress(const RunSpec& spec);

// Stratified 80/20 split (by default) of the iris file, one-hot training,
// then per algorithm and partition
//   <out stem>_<algo>_{train,test}_confusion.csv
//   <out stem>_<algo>_{train,test}_report.csv
int cmd_classify(const RunSpec& spec);

// Per-iteration series, one file per algorithm:
//   <out stem>_<algo>.csv with columns iter,residual,step_diff,gamma,gamma_bar
// The gamma columns are filled for difb only. A zero iteration budget
// writes just the header line.
int cmd_trace(const RunSpec& spec);

struct ValidateArgs {
    double alpha = 1.0;
    double lambda = 1.0;
    double theta = 0.0;
    double delta = 0.0;
    double eps_lo = 0.9;
    double eps_hi = 0.99;
};

// Clause-by-clause feasibility report; exit 0 when feasible, 2 otherwise.
int cmd_validate(const ValidateArgs& args, std::ostream& out);

// Shared CSV number format: scientific, 9 significant digits, '.' decimal.
std::string sci(double v);

}  // namespace difb

#endif
