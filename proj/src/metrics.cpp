#include "difb/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace difb {

RegressionReport regression_metrics(const Vector& y_true, const Vector& y_pred, double cpu_time_s) {
    if (y_true.size() != y_pred.size()) {
        throw std::invalid_argument("regression_metrics: length mismatch");
    }
    if (y_true.size() < 2) {
        throw std::invalid_argument("regression_metrics: need at least two points");
    }

    const double n = static_cast<double>(y_true.size());
    double sse = 0.0, sae = 0.0, mean = 0.0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const double d = y_pred[i] - y_true[i];
        sse += d * d;
        sae += std::abs(d);
        mean += y_true[i];
    }
    mean /= n;
    double sst = 0.0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const double d = y_true[i] - mean;
        sst += d * d;
    }

    RegressionReport r;
    r.mse = sse / n;
    r.rmse = std::sqrt(r.mse);
    r.mae = sae / n;
    r.cpu_time_s = cpu_time_s;
    if (sst > 0.0) {
        r.r2 = 1.0 - sse / sst;
        r.r2_defined = true;
    } else {
        r.r2 = 0.0;
        r.r2_defined = false;
    }
    return r;
}

ClassificationReport classification_metrics(const std::vector<int>& y_true,
                                            const std::vector<int>& y_pred,
                                            std::size_t n_classes) {
    if (y_true.size() != y_pred.size()) {
        throw std::invalid_argument("classification_metrics: length mismatch");
    }
    if (y_true.empty()) throw std::invalid_argument("classification_metrics: no samples");
    if (n_classes == 0) throw std::invalid_argument("classification_metrics: n_classes must be >= 1");

    ClassificationReport rep;
    rep.n_classes = n_classes;
    rep.confusion.assign(n_classes * n_classes, 0);
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const int t = y_true[i];
        const int p = y_pred[i];
        if (t < 0 || static_cast<std::size_t>(t) >= n_classes || p < 0 ||
            static_cast<std::size_t>(p) >= n_classes) {
            throw std::invalid_argument("classification_metrics: label outside [0, " +
                                        std::to_string(n_classes) + ") at index " +
                                        std::to_string(i));
        }
        ++rep.confusion[static_cast<std::size_t>(t) * n_classes + static_cast<std::size_t>(p)];
    }

    std::size_t correct = 0;
    rep.per_class.resize(n_classes);
    for (std::size_t c = 0; c < n_classes; ++c) {
        std::size_t tp = rep.at(c, c);
        std::size_t actual = 0, predicted = 0;
        for (std::size_t j = 0; j < n_classes; ++j) {
            actual += rep.at(c, j);
            predicted += rep.at(j, c);
        }
        correct += tp;

        ClassScore& s = rep.per_class[c];
        s.support = actual;
        if (predicted > 0) {
            s.precision = static_cast<double>(tp) / static_cast<double>(predicted);
        } else {
            s.precision = 0.0;
            s.degenerate = true;
        }
        if (actual > 0) {
            s.recall = static_cast<double>(tp) / static_cast<double>(actual);
        } else {
            s.recall = 0.0;
            s.degenerate = true;
        }
        if (s.precision + s.recall > 0.0) {
            s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
        } else {
            s.f1 = 0.0;
            s.degenerate = true;
        }
    }
    rep.total_support = y_true.size();
    rep.accuracy = static_cast<double>(correct) / static_cast<double>(rep.total_support);
    return rep;
}

}  // namespace difb
