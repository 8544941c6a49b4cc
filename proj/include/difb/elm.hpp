// Extreme learning machine: a single hidden layer whose input weights and
// biases are frozen at random values, with only the output weights trained,
// one l1-regularized least-squares problem per output column.
#ifndef DIFB_ELM_HPP
#define DIFB_ELM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "difb/linalg.hpp"
#include "difb/solvers.hpp"

namespace difb {

enum class Activation { linear, sigmoid };

const char* activation_name(Activation a);
Activation parse_activation(const std::string& name);
double apply_activation(Activation a, double x);

struct ElmArchitecture {
    std::size_t n_inputs = 0;
    std::size_t n_hidden = 0;
    Activation activation = Activation::linear;
    std::uint64_t seed = 0;
};

struct ElmModel {
    ElmArchitecture arch;
    Matrix input_weights;   // n_hidden x n_inputs
    Vector biases;          // n_hidden
    Matrix output_weights;  // n_hidden x n_outputs, zero until trained
    bool trained = false;
};

// Draws input_weights (row-major) then biases, i.i.d. uniform on [-1, 1]
// from the seeded generator in rng.hpp. Output weights start empty.
ElmModel elm_init(const ElmArchitecture& arch);

// H[i][j] = activation(<input_weights[j], x[i]> + biases[j]) for samples in
// the rows of x.
Matrix hidden_matrix(const ElmModel& model, const Matrix& x);

struct TrainResult {
    ElmModel model;
    std::vector<SolverTrace> traces;  // one per output column
};

// Fits output weights by solving, per target column c,
//   min_b 0.5 ||H b - targets[:,c]||^2 + mu ||b||_1
// with the selected solver. The hidden matrix and its Lipschitz constant
// are built once and shared across columns.
TrainResult elm_train(const ElmModel& model, const Matrix& x, const Matrix& targets, double mu,
                      const SolverSpec& solver, const SolverConfig& cfg);

// Scores = hidden_matrix(model, x) * output_weights. Requires a trained model.
Matrix elm_predict(const ElmModel& model, const Matrix& x);

// Rows are unit vectors: one_hot(labels, k)[i][labels[i]] = 1.
Matrix one_hot(const std::vector<int>& labels, std::size_t n_classes);

// Index of the row maximum, first winner on ties.
std::vector<int> argmax_decode(const Matrix& scores);

// Flat text format, documented in README.md: a header line
//   elm <n_inputs> <n_hidden> <n_outputs> <activation> <seed>
// followed by input_weights (row-major), biases, output_weights (row-major),
// whitespace-separated with round-trip-exact precision.
void save_model(const ElmModel& model, const std::string& path);
ElmModel load_model(const std::string& path);

}  // namespace difb

#endif
