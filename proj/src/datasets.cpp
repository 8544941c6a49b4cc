#include "difb/datasets.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "difb/rng.hpp"

namespace difb {

SineDataset gen_sine_dataset(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("gen_sine_dataset: n must be >= 1");
    SineDataset d;
    d.x = Matrix(n, 1);
    d.y = Vector(n);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = rng.next_uniform(0.0, kSineDomainHi);
        d.x(i, 0) = xi;
        d.y[i] = std::sin(xi);
    }
    return d;
}

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

int species_id(std::string name, std::size_t line_no) {
    name = lower(trim(name));
    if (name.rfind("iris-", 0) == 0) name = name.substr(5);
    if (name == "setosa") return 0;
    if (name == "versicolor") return 1;
    if (name == "virginica") return 2;
    throw std::runtime_error("load_iris_csv: unknown species '" + name + "' on line " +
                             std::to_string(line_no));
}

}  // namespace

LabeledDataset load_iris_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_iris_csv: cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("load_iris_csv: empty file " + path);

    std::vector<double> features;
    std::vector<int> labels;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::stringstream row(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (cells.size() != 5) {
            throw std::runtime_error("load_iris_csv: expected 5 columns on line " +
                                     std::to_string(line_no) + ", got " +
                                     std::to_string(cells.size()));
        }
        for (std::size_t j = 0; j < 4; ++j) {
            std::size_t used = 0;
            double v = 0.0;
            const std::string text = trim(cells[j]);
            try {
                v = std::stod(text, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != text.size() || text.empty() || !std::isfinite(v)) {
                throw std::runtime_error("load_iris_csv: bad numeric value '" + cells[j] +
                                         "' on line " + std::to_string(line_no));
            }
            features.push_back(v);
        }
        labels.push_back(species_id(cells[4], line_no));
    }
    if (labels.empty()) throw std::runtime_error("load_iris_csv: no data rows in " + path);

    LabeledDataset d;
    d.x = Matrix(labels.size(), 4, std::move(features));
    d.labels = std::move(labels);
    d.class_names = {"setosa", "versicolor", "virginica"};
    return d;
}

namespace {

void shuffle_indices(std::vector<std::size_t>& idx, Rng& rng) {
    for (std::size_t i = idx.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(idx[i - 1], idx[j]);
    }
}

// floor with a tolerance so exact products like 0.2 * 50 land on 10
std::size_t floor_scaled(double fraction, std::size_t n) {
    return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n) + 1e-9));
}

}  // namespace

SplitIndices split_dataset(std::size_t n, double fraction, std::uint64_t seed) {
    if (!(fraction > 0.0 && fraction < 1.0)) {
        throw std::invalid_argument("split_dataset: fraction must lie in (0, 1)");
    }
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    Rng rng(seed);
    shuffle_indices(idx, rng);

    const std::size_t cut = floor_scaled(fraction, n);
    SplitIndices s;
    s.train.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(cut));
    s.test.assign(idx.begin() + static_cast<std::ptrdiff_t>(cut), idx.end());
    if (s.train.empty() || s.test.empty()) {
        throw std::invalid_argument("split_dataset: a partition came out empty");
    }
    return s;
}

SplitIndices split_dataset_stratified(const std::vector<int>& labels, std::size_t n_classes,
                                      double fraction, std::uint64_t seed) {
    if (!(fraction > 0.0 && fraction < 1.0)) {
        throw std::invalid_argument("split_dataset_stratified: fraction must lie in (0, 1)");
    }
    Rng rng(seed);
    SplitIndices s;
    for (std::size_t c = 0; c < n_classes; ++c) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == static_cast<int>(c)) idx.push_back(i);
        }
        if (idx.empty()) continue;
        shuffle_indices(idx, rng);
        // test takes its floor share, rounding remainders stay in train
        const std::size_t n_test = floor_scaled(1.0 - fraction, idx.size());
        const std::size_t n_train = idx.size() - n_test;
        s.train.insert(s.train.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
        s.test.insert(s.test.end(), idx.begin() + static_cast<std::ptrdiff_t>(n_train), idx.end());
    }
    if (s.train.empty() || s.test.empty()) {
        throw std::invalid_argument("split_dataset_stratified: a partition came out empty");
    }
    return s;
}

Matrix take_rows(const Matrix& m, const std::vector<std::size_t>& idx) {
    Matrix out(idx.size(), m.cols());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(idx[i], j);
    }
    return out;
}

}  // namespace difb
