// Parameter sweep behind the sigmoid sine-regression acceptance check.
// Prints training R2 after a fixed 5000-iteration budget across hidden
// widths and step sizes so the pinned configuration can be re-derived.

#include <cstdio>

#include "difb/datasets.hpp"
#include "difb/elm.hpp"
#include "difb/metrics.hpp"
#include "difb/operators.hpp"
#include "difb/solvers.hpp"

using namespace difb;

namespace {

double train_r2(std::size_t n, std::size_t hidden, double step_fraction, std::uint64_t seed) {
    const auto ds = gen_sine_dataset(n, seed);
    const ElmModel base = elm_init({1, hidden, Activation::sigmoid, seed + 1});
    Matrix targets(n, 1);
    for (std::size_t i = 0; i < n; ++i) targets(i, 0) = ds.y[i];

    SolverSpec spec;
    if (step_fraction > 0.0) {
        const Matrix h = hidden_matrix(base, ds.x);
        Vector y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = ds.y[i];
        spec.lambda = step_fraction / make_least_squares(h, y).lipschitz;
    }
    SolverConfig cfg;
    cfg.max_iters = 5000;
    const auto tr = elm_train(base, ds.x, targets, 1e-4, spec, cfg);

    const Matrix pred = elm_predict(tr.model, ds.x);
    Vector y_pred(n);
    for (std::size_t i = 0; i < n; ++i) y_pred[i] = pred(i, 0);
    return regression_metrics(ds.y, y_pred, 0.0).r2;
}

}  // namespace

int main() {
    std::puts("n=10, seed=42, 5000 iterations, lead algorithm");
    std::puts("hidden  step/alpha  train_R2");
    for (std::size_t hidden : {8, 9, 10, 11, 12, 14, 16, 20, 50}) {
        for (double frac : {1.0, 1.5, 1.9}) {
            std::printf("%6zu  %10.2f  %.6f\n", hidden, frac, train_r2(10, hidden, frac, 42));
        }
    }
    return 0;
}
