// Command-line front end. Subcommands: regress, classify, validate, trace.
// Exit codes: 0 success, 1 usage error, 2 runtime or divergence error
// (validate exits 2 when the parameters are infeasible).
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "difb/experiments.hpp"

namespace {

void add_run_options(CLI::App* sub, difb::RunSpec& spec, std::string& activation,
                     std::vector<std::string>& algorithms) {
    sub->add_option("--activation", activation, "hidden-layer activation")
        ->check(CLI::IsMember({"linear", "sigmoid"}));
    sub->add_option("--samples", spec.n_samples, "number of sine training samples");
    sub->add_option("--hidden", spec.n_hidden, "hidden nodes (default 20 regress, 50 classify)");
    sub->add_option("--iters", spec.iterations, "iteration budget (default 1000 linear, 5000 sigmoid)");
    sub->add_option("--seed", spec.seed, "seed for data, weights and splits");
    sub->add_option("--mu", spec.mu, "l1 regularization weight");
    sub->add_option("--algorithms", algorithms,
                    "comma-separated: difb,fista,tseng,suantai,dong_mann,iyiola_dr")
        ->delimiter(',');
    sub->add_option("--data", spec.data_path, "input data CSV (classify)");
    sub->add_option("--split", spec.split_fraction, "training fraction of the data");
    sub->add_option("--out", spec.out_path, "output CSV path; derived files share its stem");
    sub->add_option("--lambda", spec.lambda, "forward step (default 1/L)");
    sub->add_option("--theta", spec.theta, "first inertia weight (default suggested)");
    sub->add_option("--delta", spec.delta, "second inertia weight, <= 0 (default suggested)");
    sub->add_option("--eps-lo", spec.eps_lo, "relaxation lower bound");
    sub->add_option("--eps-hi", spec.eps_hi, "relaxation upper bound");
    sub->set_config("--config", "", "key=value file mirroring the flags; flags win");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"inertial splitting solvers with an ELM benchmark harness"};
    app.require_subcommand(1);

    difb::RunSpec spec;
    std::string activation;
    std::vector<std::string> algorithms;

    CLI::App* reg = app.add_subcommand("regress", "sine-curve regression benchmark");
    add_run_options(reg, spec, activation, algorithms);
    CLI::App* cls = app.add_subcommand("classify", "iris classification benchmark");
    add_run_options(cls, spec, activation, algorithms);
    cls->get_option("--data")->required();
    CLI::App* trc = app.add_subcommand("trace", "per-iteration solver traces");
    add_run_options(trc, spec, activation, algorithms);

    difb::ValidateArgs vargs;
    CLI::App* val = app.add_subcommand("validate", "feasibility report for solver parameters");
    val->add_option("--alpha", vargs.alpha, "cocoercivity constant")->required();
    val->add_option("--lambda", vargs.lambda, "forward step")->required();
    val->add_option("--theta", vargs.theta, "first inertia weight");
    val->add_option("--delta", vargs.delta, "second inertia weight");
    val->add_option("--eps-lo", vargs.eps_lo, "relaxation lower bound");
    val->add_option("--eps-hi", vargs.eps_hi, "relaxation upper bound");
    val->set_config("--config", "", "key=value file mirroring the flags; flags win");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (!activation.empty()) spec.activation = difb::parse_activation(activation);
        for (const std::string& name : algorithms) {
            spec.algorithms.push_back(difb::parse_algorithm(name));
        }
        if (reg->parsed()) return difb::cmd_regress(spec);
        if (cls->parsed()) return difb::cmd_classify(spec);
        if (trc->parsed()) return difb::cmd_trace(spec);
        if (val->parsed()) return difb::cmd_validate(vargs, std::cout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
