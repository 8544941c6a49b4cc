// Fit-quality summaries: regression error statistics and a confusion-matrix
// based classification report. Degenerate denominators are reported with
// flags instead of NaN so downstream CSV stays parseable.
#ifndef DIFB_METRICS_HPP
#define DIFB_METRICS_HPP

#include <cstddef>
#include <vector>

#include "difb/linalg.hpp"

namespace difb {

struct RegressionReport {
    double mse = 0.0;
    double rmse = 0.0;
    double mae = 0.0;
    double r2 = 0.0;
    bool r2_defined = true;  // false when y_true has zero variance
    double cpu_time_s = 0.0;
};

// Needs at least two points so the variance in R^2 means something.
RegressionReport regression_metrics(const Vector& y_true, const Vector& y_pred, double cpu_time_s);

struct ClassScore {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t support = 0;
    bool degenerate = false;  // some denominator was zero; the value 0 is by policy
};

struct ClassificationReport {
    std::vector<std::size_t> confusion;  // row-major n_classes x n_classes, rows = true
    std::size_t n_classes = 0;
    std::vector<ClassScore> per_class;
    double accuracy = 0.0;
    std::size_t total_support = 0;

    std::size_t at(std::size_t true_class, std::size_t predicted) const {
        return confusion[true_class * n_classes + predicted];
    }
};

ClassificationReport classification_metrics(const std::vector<int>& y_true,
                                            const std::vector<int>& y_pred, std::size_t n_classes);

}  // namespace difb

#endif
