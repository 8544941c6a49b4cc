// Deterministic instance builders shared by the test binaries.
#ifndef DIFB_TESTS_TESTUTIL_HPP
#define DIFB_TESTS_TESTUTIL_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

#include "difb/linalg.hpp"
#include "difb/operators.hpp"
#include "difb/rng.hpp"

namespace testutil {

inline difb::Matrix random_matrix(std::size_t rows, std::size_t cols, difb::Rng& rng,
                                  double lo = -1.0, double hi = 1.0) {
    difb::Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.next_uniform(lo, hi);
    }
    return m;
}

inline difb::Vector random_vector(std::size_t n, difb::Rng& rng, double lo = -1.0,
                                  double hi = 1.0) {
    difb::Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.next_uniform(lo, hi);
    return v;
}

// Over-determined least-squares instance; rows >= cols keeps the Gram
// matrix comfortably nonsingular for the sizes used in tests.
inline difb::LeastSquaresData random_least_squares(std::size_t rows, std::size_t cols,
                                                   std::uint64_t seed) {
    difb::Rng rng(seed);
    difb::Matrix h = random_matrix(rows, cols, rng);
    difb::Vector t = random_vector(rows, rng);
    return difb::make_least_squares(std::move(h), std::move(t));
}

inline std::vector<double> to_std(const difb::Vector& v) {
    return std::vector<double>(v.begin(), v.end());
}

inline difb::Vector to_vec(const std::vector<double>& v) { return difb::Vector::from(v); }

}  // namespace testutil

#endif
