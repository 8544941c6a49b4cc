#include "difb/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "difb/datasets.hpp"
#include "difb/metrics.hpp"

namespace difb {

namespace {

namespace fs = std::filesystem;

constexpr std::size_t kEvalGridPoints = 200;

std::vector<Algorithm> all_algorithms() {
    return {Algorithm::difb,    Algorithm::fista,     Algorithm::tseng,
            Algorithm::suantai, Algorithm::dong_mann, Algorithm::iyiola_dr};
}

std::vector<Algorithm> resolve_algorithms(const RunSpec& spec, bool classify) {
    if (!spec.algorithms.empty()) return spec.algorithms;
    if (classify) return {Algorithm::difb};
    return all_algorithms();
}

std::size_t resolve_iterations(const RunSpec& spec, Activation act) {
    if (spec.iterations) return *spec.iterations;
    return act == Activation::linear ? 1000 : 5000;
}

SolverSpec make_solver_spec(Algorithm algo, const RunSpec& spec) {
    SolverSpec s;
    s.algo = algo;
    s.lambda = spec.lambda;
    s.theta = spec.theta;
    s.delta = spec.delta;
    s.eps_lo = spec.eps_lo;
    s.eps_hi = spec.eps_hi;
    return s;
}

// results.csv -> results_<tag>.csv, alongside the original
std::string derived_path(const std::string& out_path, const std::string& tag) {
    fs::path p(out_path);
    fs::path name = p.stem();
    name += "_" + tag;
    name += p.extension();
    return (p.parent_path() / name).string();
}

std::ofstream open_out(const std::string& path) {
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    return out;
}

struct ResultRow {
    std::string algorithm;
    RegressionReport report;
    bool failed = false;
};

void write_result_rows(const std::string& path, std::vector<ResultRow> rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
        if (a.failed != b.failed) return !a.failed;
        return a.report.mse < b.report.mse;
    });
    std::ofstream out = open_out(path);
    out << "algorithm,cpu_time_s,mse,rmse,r2,mae\n";
    const std::string nan = sci(std::numeric_limits<double>::quiet_NaN());
    for (const ResultRow& r : rows) {
        if (r.failed) {
            out << r.algorithm << ',' << nan << ',' << nan << ',' << nan << ',' << nan << ','
                << nan << '\n';
            continue;
        }
        out << r.algorithm << ',' << sci(r.report.cpu_time_s) << ',' << sci(r.report.mse) << ','
            << sci(r.report.rmse) << ',' << (r.report.r2_defined ? sci(r.report.r2) : nan) << ','
            << sci(r.report.mae) << '\n';
    }
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace

std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.8e", v);
    return buf;
}

int cmd_regress(const RunSpec& spec) {
    const Activation act = spec.activation.value_or(Activation::linear);
    const std::size_t hidden = spec.n_hidden.value_or(20);
    const std::size_t iters = resolve_iterations(spec, act);
    const std::vector<Algorithm> algos = resolve_algorithms(spec, false);
    if (iters == 0) throw std::invalid_argument("cmd_regress: iteration budget must be >= 1");

    const SineDataset data = gen_sine_dataset(spec.n_samples, spec.seed);
    const ElmModel base = elm_init({1, hidden, act, spec.seed + 1});

    Matrix targets(spec.n_samples, 1);
    for (std::size_t i = 0; i < spec.n_samples; ++i) targets(i, 0) = data.y[i];

    // scoring set: uniform grid over the sine domain plus the training points
    std::vector<double> eval_x;
    eval_x.reserve(kEvalGridPoints + spec.n_samples);
    for (std::size_t j = 0; j < kEvalGridPoints; ++j) {
        eval_x.push_back(static_cast<double>(j) * kSineDomainHi /
                         static_cast<double>(kEvalGridPoints - 1));
    }
    for (std::size_t i = 0; i < spec.n_samples; ++i) eval_x.push_back(data.x(i, 0));
    std::stable_sort(eval_x.begin(), eval_x.end());

    Matrix eval_m(eval_x.size(), 1);
    Vector y_true(eval_x.size());
    for (std::size_t i = 0; i < eval_x.size(); ++i) {
        eval_m(i, 0) = eval_x[i];
        y_true[i] = std::sin(eval_x[i]);
    }

    SolverConfig cfg;
    cfg.max_iters = iters;

    std::vector<ResultRow> rows;
    std::vector<std::vector<double>> pred_columns;  // aligned with algos
    for (Algorithm algo : algos) {
        ResultRow row;
        row.algorithm = algorithm_name(algo);
        std::vector<double> column;
        try {
            TrainResult tr = elm_train(base, data.x, targets, spec.mu, make_solver_spec(algo, spec), cfg);
            Matrix scores = elm_predict(tr.model, eval_m);
            Vector y_pred(scores.rows());
            for (std::size_t i = 0; i < scores.rows(); ++i) y_pred[i] = scores(i, 0);
            row.report = regression_metrics(y_true, y_pred, tr.traces[0].elapsed_seconds);
            column.assign(y_pred.begin(), y_pred.end());
        } catch (const DivergenceError&) {
            row.failed = true;
            column.assign(eval_x.size(), std::numeric_limits<double>::quiet_NaN());
        }
        rows.push_back(std::move(row));
        pred_columns.push_back(std::move(column));
    }

    write_result_rows(spec.out_path, rows);

    std::ofstream pred = open_out(derived_path(spec.out_path, "predictions"));
    pred << "x,y_true";
    for (Algorithm algo : algos) pred << ',' << algorithm_name(algo);
    pred << '\n';
    for (std::size_t i = 0; i < eval_x.size(); ++i) {
        pred << sci(eval_x[i]) << ',' << sci(y_true[i]);
        for (const auto& column : pred_columns) pred << ',' << sci(column[i]);
        pred << '\n';
    }
    if (!pred) throw std::runtime_error("write failed for predictions file");
    return 0;
}

namespace {

void write_confusion(const std::string& path, const ClassificationReport& rep,
                     const std::vector<std::string>& names) {
    std::ofstream out = open_out(path);
    out << "class";
    for (const auto& n : names) out << ',' << n;
    out << '\n';
    for (std::size_t i = 0; i < rep.n_classes; ++i) {
        out << names[i];
        for (std::size_t j = 0; j < rep.n_classes; ++j) out << ',' << rep.at(i, j);
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed for " + path);
}

void write_report(const std::string& path, const ClassificationReport& rep,
                  const std::vector<std::string>& names) {
    std::ofstream out = open_out(path);
    out << "class,precision,recall,f1,support\n";
    for (std::size_t i = 0; i < rep.n_classes; ++i) {
        const ClassScore& s = rep.per_class[i];
        out << names[i] << ',' << sci(s.precision) << ',' << sci(s.recall) << ',' << sci(s.f1)
            << ',' << s.support << '\n';
    }
    out << "accuracy," << sci(rep.accuracy) << ",,," << rep.total_support << '\n';
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace

int cmd_classify(const RunSpec& spec) {
    const Activation act = spec.activation.value_or(Activation::sigmoid);
    const std::size_t hidden = spec.n_hidden.value_or(50);
    const std::size_t iters = resolve_iterations(spec, act);
    const std::vector<Algorithm> algos = resolve_algorithms(spec, true);
    if (spec.data_path.empty()) throw std::invalid_argument("cmd_classify: data path is required");
    if (iters == 0) throw std::invalid_argument("cmd_classify: iteration budget must be >= 1");

    const LabeledDataset data = load_iris_csv(spec.data_path);
    const std::size_t n_classes = data.class_names.size();
    const SplitIndices split =
        split_dataset_stratified(data.labels, n_classes, spec.split_fraction, spec.seed);

    const Matrix x_train = take_rows(data.x, split.train);
    const Matrix x_test = take_rows(data.x, split.test);
    const std::vector<int> y_train = take(data.labels, split.train);
    const std::vector<int> y_test = take(data.labels, split.test);

    const ElmModel base = elm_init({data.x.cols(), hidden, act, spec.seed + 1});
    const Matrix targets = one_hot(y_train, n_classes);

    SolverConfig cfg;
    cfg.max_iters = iters;

    for (Algorithm algo : algos) {
        TrainResult tr = elm_train(base, x_train, targets, spec.mu, make_solver_spec(algo, spec), cfg);
        const std::vector<int> pred_train = argmax_decode(elm_predict(tr.model, x_train));
        const std::vector<int> pred_test = argmax_decode(elm_predict(tr.model, x_test));
        const ClassificationReport rep_train = classification_metrics(y_train, pred_train, n_classes);
        const ClassificationReport rep_test = classification_metrics(y_test, pred_test, n_classes);

        const std::string tag = algorithm_name(algo);
        write_confusion(derived_path(spec.out_path, tag + "_train_confusion"), rep_train,
                        data.class_names);
        write_report(derived_path(spec.out_path, tag + "_train_report"), rep_train, data.class_names);
        write_confusion(derived_path(spec.out_path, tag + "_test_confusion"), rep_test,
                        data.class_names);
        write_report(derived_path(spec.out_path, tag + "_test_report"), rep_test, data.class_names);
    }
    return 0;
}

int cmd_trace(const RunSpec& spec) {
    const Activation act = spec.activation.value_or(Activation::linear);
    const std::size_t hidden = spec.n_hidden.value_or(20);
    const std::size_t iters = spec.iterations ? *spec.iterations : resolve_iterations(spec, act);
    const std::vector<Algorithm> algos = resolve_algorithms(spec, false);

    const SineDataset data = gen_sine_dataset(spec.n_samples, spec.seed);
    const ElmModel base = elm_init({1, hidden, act, spec.seed + 1});
    const Matrix h = hidden_matrix(base, data.x);
    const LeastSquaresData ls = make_least_squares(h, data.y);

    for (Algorithm algo : algos) {
        std::ofstream out = open_out(derived_path(spec.out_path, algorithm_name(algo)));
        out << "iter,residual,step_diff,gamma,gamma_bar\n";
        if (iters == 0) continue;  // an empty budget still documents its header

        SolverConfig cfg;
        cfg.max_iters = iters;
        cfg.record_iterates = algo == Algorithm::difb;
        SolverTrace trace = run_lasso_solver(make_solver_spec(algo, spec), ls, spec.mu, cfg);
        for (std::size_t k = 1; k <= trace.iterations_run; ++k) {
            out << k << ',' << sci(trace.residuals[k - 1]) << ',' << sci(trace.step_diffs[k - 1]);
            if (trace.lyapunov) {
                out << ',' << sci(trace.lyapunov->gamma[k - 1]) << ','
                    << sci(trace.lyapunov->gamma_bar[k - 1]);
            } else {
                out << ",,";
            }
            out << '\n';
        }
        if (!out) throw std::runtime_error("write failed for trace file");
    }
    return 0;
}

int cmd_validate(const ValidateArgs& args, std::ostream& out) {
    DifbParams params{args.lambda, args.theta, args.delta, args.eps_lo, args.eps_hi, {}};
    const ValidationReport rep = validate_assumption_b(args.alpha, params);
    for (const ClauseCheck& c : rep.clauses) {
        out << (c.ok ? "ok       " : "VIOLATED ") << c.name << ": " << c.detail << '\n';
    }
    out << (rep.ok ? "feasible" : "infeasible") << '\n';
    return rep.ok ? 0 : 2;
}

}  // namespace difb
