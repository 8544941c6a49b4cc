// Data plumbing for the experiment harness: the synthetic sine regression
// set, the iris CSV loader (file is fetched, never bundled; see
// scripts/fetch_iris.sh) and seeded train/test splits.
#ifndef DIFB_DATASETS_HPP
#define DIFB_DATASETS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "difb/linalg.hpp"

namespace difb {

struct SineDataset {
    Matrix x;  // n x 1, i.i.d. uniform on [0, 2 pi]
    Vector y;  // y[i] = sin(x[i])
};

SineDataset gen_sine_dataset(std::size_t n, std::uint64_t seed);

inline constexpr double kSineDomainHi = 6.283185307179586476925286766559;  // 2 pi

struct LabeledDataset {
    Matrix x;                 // n x 4 feature rows
    std::vector<int> labels;  // 0 setosa, 1 versicolor, 2 virginica
    std::vector<std::string> class_names;
};

// CSV with a header line and rows of four numeric features plus a species
// name (setosa / versicolor / virginica, case-insensitive, an optional
// "Iris-" prefix tolerated). Malformed rows raise with their line number.
LabeledDataset load_iris_csv(const std::string& path);

struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

// Seeded Fisher-Yates shuffle, then the first floor(fraction * n) indices
// train and the rest test. Both parts must end up nonempty.
SplitIndices split_dataset(std::size_t n, double fraction, std::uint64_t seed);

// Same, but shuffled and cut class by class so the class mix is preserved;
// rounding remainders go to the training side.
SplitIndices split_dataset_stratified(const std::vector<int>& labels, std::size_t n_classes,
                                      double fraction, std::uint64_t seed);

Matrix take_rows(const Matrix& m, const std::vector<std::size_t>& idx);

template <typename T>
std::vector<T> take(const std::vector<T>& xs, const std::vector<std::size_t>& idx) {
    std::vector<T> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(xs[i]);
    return out;
}

}  // namespace difb

#endif
