#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "difb/linalg.hpp"
#include "difb/rng.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using difb::Matrix;
using difb::Vector;

namespace {

template <typename F>
std::string thrown_message(F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("vector construction rejects non-finite user data") {
    CHECK_THROWS_AS(Vector({1.0, std::numeric_limits<double>::quiet_NaN()}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Vector::from({std::numeric_limits<double>::infinity()}),
                    std::invalid_argument);
    CHECK(Vector({1.0, 2.0}).all_finite());
    CHECK(Vector({1.0, 2.0}).size() == 2);
}

TEST_CASE("matrix construction validates payload size and finiteness") {
    CHECK_THROWS_AS(Matrix(2, 2, {1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(Matrix(1, 2, {1.0, std::numeric_limits<double>::quiet_NaN()}),
                    std::invalid_argument);
    const Matrix m(2, 3, {1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
    CHECK(m(0, 2) == 3.0);
    CHECK(m(1, 0) == 4.0);
}

TEST_CASE("matvec identity and hand-checked products") {
    const Vector v{3.0, 4.0};
    const Vector r = matvec(Matrix::identity(2), v);
    CHECK(r[0] == 3.0);
    CHECK(r[1] == 4.0);

    const Matrix m(2, 2, {1.0, 2.0, 3.0, 4.0});
    const Vector s = matvec(m, Vector{1.0, 1.0});
    CHECK(s[0] == 3.0);
    CHECK(s[1] == 7.0);
}

TEST_CASE("matvec dimension mismatch names both shapes") {
    const Matrix m(2, 2, {1.0, 2.0, 3.0, 4.0});
    const std::string msg = thrown_message([&] { matvec(m, Vector{1.0, 2.0, 3.0}); });
    CHECK(msg.find('2') != std::string::npos);
    CHECK(msg.find('3') != std::string::npos);
}

TEST_CASE("matvec matches the brute-force loop on random instances") {
    difb::Rng rng(101);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix m = testutil::random_matrix(5, 3, rng);
        const Vector v = testutil::random_vector(3, rng);
        const Vector got = matvec(m, v);
        const oracle::Vec want = oracle::matvec(m, testutil::to_std(v));
        for (std::size_t i = 0; i < 5; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-14));
    }
}

TEST_CASE("matvec is linear") {
    difb::Rng rng(102);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix m = testutil::random_matrix(4, 6, rng);
        const Vector u = testutil::random_vector(6, rng);
        const Vector v = testutil::random_vector(6, rng);
        const double a = rng.next_uniform(-2.0, 2.0);
        const double b = rng.next_uniform(-2.0, 2.0);
        const Vector lhs = matvec(m, a * u + b * v);
        const Vector rhs = a * matvec(m, u) + b * matvec(m, v);
        CHECK(difb::norm2(lhs - rhs) <= 1e-10 * (1.0 + difb::norm2(rhs)));
    }
}

TEST_CASE("matvec_transposed hand cases and oracle agreement") {
    const Vector v{1.0, -2.0, 0.5};
    const Vector r = matvec_transposed(Matrix::identity(3), v);
    CHECK(r[0] == 1.0);
    CHECK(r[1] == -2.0);
    CHECK(r[2] == 0.5);

    const Matrix m(2, 2, {1.0, 2.0, 3.0, 4.0});
    const Vector s = matvec_transposed(m, Vector{1.0, 1.0});
    CHECK(s[0] == 4.0);
    CHECK(s[1] == 6.0);

    difb::Rng rng(103);
    for (int rep = 0; rep < 10; ++rep) {
        const Matrix a = testutil::random_matrix(5, 3, rng);
        const Vector x = testutil::random_vector(5, rng);
        Matrix tr(3, 5);
        for (std::size_t i = 0; i < 5; ++i) {
            for (std::size_t j = 0; j < 3; ++j) tr(j, i) = a(i, j);
        }
        const Vector got = matvec_transposed(a, x);
        const oracle::Vec want = oracle::matvec(tr, testutil::to_std(x));
        for (std::size_t j = 0; j < 3; ++j) CHECK(got[j] == doctest::Approx(want[j]).epsilon(1e-14));
    }
}

TEST_CASE("norm2 hand cases and the dot identity") {
    CHECK(difb::norm2(Vector{0.0, 0.0, 0.0}) == 0.0);
    CHECK(difb::norm2(Vector{3.0, 4.0}) == 5.0);

    difb::Rng rng(104);
    for (int rep = 0; rep < 20; ++rep) {
        const Vector v = testutil::random_vector(7, rng, -5.0, 5.0);
        const double n = difb::norm2(v);
        const double d = difb::dot(v, v);
        CHECK(n * n == doctest::Approx(d).epsilon(1e-12));
    }
}

TEST_CASE("spectral_norm_gram on identity and diagonal matrices") {
    const auto id = difb::spectral_norm_gram(Matrix::identity(3));
    CHECK(id.converged);
    CHECK(id.value == doctest::Approx(1.0).epsilon(1e-10));

    const Matrix d(2, 2, {1.0, 0.0, 0.0, 2.0});
    const auto est = difb::spectral_norm_gram(d);
    CHECK(est.converged);
    CHECK(est.value == doctest::Approx(4.0).epsilon(1e-6));
}

TEST_CASE("spectral_norm_gram of the zero matrix is zero") {
    const auto est = difb::spectral_norm_gram(Matrix(3, 2));
    CHECK(est.value == 0.0);
    CHECK(est.converged);
}

TEST_CASE("spectral_norm_gram matches a dense symmetric eigensolver") {
    difb::Rng rng(105);
    for (int rep = 0; rep < 10; ++rep) {
        const Matrix m = testutil::random_matrix(6, 4, rng);
        Matrix gram(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                double s = 0.0;
                for (std::size_t r = 0; r < 6; ++r) s += m(r, i) * m(r, j);
                gram(i, j) = s;
            }
        }
        const oracle::Vec eig = oracle::symmetric_eigenvalues(gram);
        const auto est = difb::spectral_norm_gram(m, 1e-10, 20000);
        CHECK(est.value == doctest::Approx(eig[0]).epsilon(1e-6));
    }
}

TEST_CASE("spectral_norm_gram dominates the Rayleigh quotient of any unit vector") {
    difb::Rng rng(106);
    const Matrix m = testutil::random_matrix(5, 5, rng);
    const auto est = difb::spectral_norm_gram(m, 1e-10, 20000);
    for (int rep = 0; rep < 50; ++rep) {
        Vector u = testutil::random_vector(5, rng);
        const double nu = difb::norm2(u);
        if (nu == 0.0) continue;
        u = (1.0 / nu) * u;
        const double rq = difb::norm2(matvec_transposed(m, matvec(m, u)));
        CHECK(rq <= est.value + 1e-6);
    }
}

TEST_CASE("solve_spd identity and diagonal hand cases") {
    const Vector b{5.0, -1.0};
    const Vector x = difb::solve_spd(Matrix::identity(2), b);
    CHECK(x[0] == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(x[1] == doctest::Approx(-1.0).epsilon(1e-14));

    const Matrix d(2, 2, {2.0, 0.0, 0.0, 4.0});
    const Vector y = difb::solve_spd(d, Vector{2.0, 8.0});
    CHECK(y[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(y[1] == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("solve_spd reconstructs the right-hand side on random SPD systems") {
    difb::Rng rng(107);
    for (int rep = 0; rep < 10; ++rep) {
        const Matrix g = testutil::random_matrix(5, 5, rng);
        Matrix a(5, 5);
        for (std::size_t i = 0; i < 5; ++i) {
            for (std::size_t j = 0; j < 5; ++j) {
                double s = 0.0;
                for (std::size_t r = 0; r < 5; ++r) s += g(r, i) * g(r, j);
                a(i, j) = s + (i == j ? 1.0 : 0.0);
            }
        }
        const Vector b = testutil::random_vector(5, rng);
        const Vector x = difb::solve_spd(a, b);
        CHECK(difb::norm2(matvec(a, x) - b) <= 1e-8 * (1.0 + difb::norm2(b)));
    }
}

TEST_CASE("cholesky factorization rejects bad inputs") {
    CHECK_THROWS_AS(difb::CholeskyFactor(Matrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(difb::CholeskyFactor(Matrix(2, 2, {1.0, 0.5, 0.0, 1.0})),
                    std::invalid_argument);
    const std::string msg = thrown_message([] {
        difb::CholeskyFactor(Matrix(2, 2, {1.0, 2.0, 2.0, 1.0}));  // eigenvalues 3, -1
    });
    CHECK(msg.find("pivot") != std::string::npos);
}

TEST_CASE("cholesky factor solves several right-hand sides") {
    const Matrix a(2, 2, {4.0, 1.0, 1.0, 3.0});
    const difb::CholeskyFactor f(a);
    for (const Vector& b : {Vector{1.0, 0.0}, Vector{0.0, 1.0}, Vector{2.0, -3.0}}) {
        const Vector x = f.solve(b);
        CHECK(difb::norm2(matvec(a, x) - b) <= 1e-12 * (1.0 + difb::norm2(b)));
    }
}

TEST_CASE("vector arithmetic operators") {
    const Vector a{1.0, 2.0};
    const Vector b{3.0, -1.0};
    const Vector sum = a + b;
    CHECK(sum[0] == 4.0);
    CHECK(sum[1] == 1.0);
    const Vector diff = a - b;
    CHECK(diff[0] == -2.0);
    CHECK(diff[1] == 3.0);
    const Vector scaled = 2.0 * a;
    CHECK(scaled[0] == 2.0);
    CHECK(scaled[1] == 4.0);
    Vector acc = a;
    acc += b;
    acc -= a;
    CHECK(acc[0] == 3.0);
    CHECK(acc[1] == -1.0);
}
