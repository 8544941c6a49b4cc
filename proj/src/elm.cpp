#include "difb/elm.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "difb/operators.hpp"
#include "difb/rng.hpp"

namespace difb {

const char* activation_name(Activation a) {
    return a == Activation::linear ? "linear" : "sigmoid";
}

Activation parse_activation(const std::string& name) {
    if (name == "linear") return Activation::linear;
    if (name == "sigmoid") return Activation::sigmoid;
    throw std::invalid_argument("unknown activation: " + name);
}

double apply_activation(Activation a, double x) {
    return a == Activation::linear ? x : 1.0 / (1.0 + std::exp(-x));
}

ElmModel elm_init(const ElmArchitecture& arch) {
    if (arch.n_inputs == 0 || arch.n_hidden == 0) {
        throw std::invalid_argument("elm_init: architecture needs inputs and hidden nodes");
    }
    ElmModel m;
    m.arch = arch;
    m.input_weights = Matrix(arch.n_hidden, arch.n_inputs);
    m.biases = Vector(arch.n_hidden);
    Rng rng(arch.seed);
    for (std::size_t i = 0; i < arch.n_hidden; ++i) {
        for (std::size_t j = 0; j < arch.n_inputs; ++j) {
            m.input_weights(i, j) = rng.next_uniform(-1.0, 1.0);
        }
    }
    for (std::size_t i = 0; i < arch.n_hidden; ++i) m.biases[i] = rng.next_uniform(-1.0, 1.0);
    return m;
}

Matrix hidden_matrix(const ElmModel& model, const Matrix& x) {
    if (x.cols() != model.arch.n_inputs) {
        throw std::invalid_argument("hidden_matrix: sample width does not match n_inputs");
    }
    Matrix h(x.rows(), model.arch.n_hidden);
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < model.arch.n_hidden; ++j) {
            double s = model.biases[j];
            for (std::size_t k = 0; k < x.cols(); ++k) s += model.input_weights(j, k) * x(i, k);
            h(i, j) = apply_activation(model.arch.activation, s);
        }
    }
    return h;
}

TrainResult elm_train(const ElmModel& model, const Matrix& x, const Matrix& targets, double mu,
                      const SolverSpec& solver, const SolverConfig& cfg) {
    if (x.rows() != targets.rows()) {
        throw std::invalid_argument("elm_train: sample and target row counts differ");
    }
    if (x.rows() == 0) throw std::invalid_argument("elm_train: no samples");
    if (mu < 0.0) throw std::invalid_argument("elm_train: mu must be nonnegative");

    Matrix h = hidden_matrix(model, x);
    const double lipschitz = spectral_norm_gram(h, 1e-8, 10000).value;  // shared across columns

    TrainResult result;
    result.model = model;
    result.model.output_weights = Matrix(model.arch.n_hidden, targets.cols());
    result.traces.reserve(targets.cols());

    for (std::size_t c = 0; c < targets.cols(); ++c) {
        Vector t(targets.rows());
        for (std::size_t i = 0; i < targets.rows(); ++i) t[i] = targets(i, c);
        LeastSquaresData data{h, std::move(t), lipschitz};
        try {
            SolverTrace trace = run_lasso_solver(solver, data, mu, cfg);
            for (std::size_t j = 0; j < model.arch.n_hidden; ++j) {
                result.model.output_weights(j, c) = trace.final_point[j];
            }
            result.traces.push_back(std::move(trace));
        } catch (const DivergenceError& e) {
            throw DivergenceError(e.iteration(), "elm_train: divergence on output column " +
                                                     std::to_string(c) + ": " + e.what());
        }
    }
    result.model.trained = true;
    return result;
}

Matrix elm_predict(const ElmModel& model, const Matrix& x) {
    if (!model.trained) throw std::logic_error("elm_predict: model has no trained output weights");
    Matrix h = hidden_matrix(model, x);
    Matrix scores(x.rows(), model.output_weights.cols());
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t c = 0; c < model.output_weights.cols(); ++c) {
            double s = 0.0;
            for (std::size_t j = 0; j < h.cols(); ++j) s += h(i, j) * model.output_weights(j, c);
            scores(i, c) = s;
        }
    }
    return scores;
}

Matrix one_hot(const std::vector<int>& labels, std::size_t n_classes) {
    Matrix m(labels.size(), n_classes);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0 || static_cast<std::size_t>(labels[i]) >= n_classes) {
            throw std::invalid_argument("one_hot: label " + std::to_string(labels[i]) +
                                        " outside [0, " + std::to_string(n_classes) + ")");
        }
        m(i, static_cast<std::size_t>(labels[i])) = 1.0;
    }
    return m;
}

std::vector<int> argmax_decode(const Matrix& scores) {
    if (scores.cols() == 0) throw std::invalid_argument("argmax_decode: no columns");
    std::vector<int> out(scores.rows());
    for (std::size_t i = 0; i < scores.rows(); ++i) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < scores.cols(); ++j) {
            if (scores(i, j) > scores(i, best)) best = j;
        }
        out[i] = static_cast<int>(best);
    }
    return out;
}

namespace {

void write_block(std::ofstream& out, const std::vector<double>& xs, std::size_t per_line) {
    char buf[40];
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", xs[i]);
        out << buf << ((i + 1) % per_line == 0 || i + 1 == xs.size() ? '\n' : ' ');
    }
}

}  // namespace

void save_model(const ElmModel& model, const std::string& path) {
    if (!model.trained) throw std::logic_error("save_model: refusing to save an untrained model");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_model: cannot open " + path);
    out << "elm " << model.arch.n_inputs << ' ' << model.arch.n_hidden << ' '
        << model.output_weights.cols() << ' ' << activation_name(model.arch.activation) << ' '
        << model.arch.seed << '\n';
    write_block(out, model.input_weights.values(), model.arch.n_inputs);
    write_block(out, model.biases.values(), model.arch.n_hidden);
    write_block(out, model.output_weights.values(), model.output_weights.cols());
    if (!out) throw std::runtime_error("save_model: write failed for " + path);
}

ElmModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_model: cannot open " + path);
    std::string tag, act;
    std::size_t n_inputs = 0, n_hidden = 0, n_outputs = 0;
    std::uint64_t seed = 0;
    if (!(in >> tag >> n_inputs >> n_hidden >> n_outputs >> act >> seed) || tag != "elm") {
        throw std::runtime_error("load_model: malformed header in " + path);
    }

    ElmModel m;
    m.arch = {n_inputs, n_hidden, parse_activation(act), seed};
    auto read_block = [&](std::size_t count, const char* what) {
        std::vector<double> xs(count);
        for (std::size_t i = 0; i < count; ++i) {
            if (!(in >> xs[i])) {
                throw std::runtime_error(std::string("load_model: truncated ") + what + " in " + path);
            }
        }
        return xs;
    };
    m.input_weights = Matrix(n_hidden, n_inputs, read_block(n_hidden * n_inputs, "input weights"));
    m.biases = Vector::from(read_block(n_hidden, "biases"));
    m.output_weights = Matrix(n_hidden, n_outputs, read_block(n_hidden * n_outputs, "output weights"));
    m.trained = true;
    return m;
}

}  // namespace difb
