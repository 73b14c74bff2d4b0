#include "bmcover/int_matrix.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace bmcover;
using testutil::im;
using testutil::lp;

TEST_CASE("mat_mul basics") {
    const IntMatrix a = im(3, {1, 0, 0, 1, 1, -1, 0, 0, 1});
    const IntMatrix b = im(3, {1, -1, 0, 0, 1, 0, 0, 0, 1});
    CHECK(mat_mul(IntMatrix::identity(3), a) == a);
    CHECK(mat_mul(a, b) == im(3, {1, -1, 0, 1, 0, -1, 0, 0, 1}));
    CHECK_THROWS_AS(mat_mul(a, IntMatrix::identity(2)), DomainError);
}

TEST_CASE("parallel product equals serial reference") {
    testutil::Rng rng(0x5eed10);
    for (int trial = 0; trial < 10; ++trial) {
        const int rank = static_cast<int>(rng.range(1, 24));
        const IntMatrix a = testutil::random_matrix(rng, rank, 1000);
        const IntMatrix b = testutil::random_matrix(rng, rank, 1000);
        const IntMatrix ref = mat_mul_serial(a, b);
        CHECK(mat_mul_parallel(a, b) == ref);
        CHECK(mat_mul(a, b) == ref);
    }
}

TEST_CASE("mat_pow") {
    const IntMatrix a = im(3, {-1, -2, 2, 0, -1, 0, 0, 0, 1});
    CHECK(mat_pow(a, 0) == IntMatrix::identity(3));
    CHECK(mat_pow(a, 1) == a);
    CHECK(mat_pow(a, 2) == im(3, {1, 4, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(mat_mul(mat_pow(a, 3), mat_pow(a, -3)) == IntMatrix::identity(3));
    CHECK_THROWS_AS(mat_pow(im(2, {2, 0, 0, 1}), -1), DomainError);
}

TEST_CASE("determinant") {
    CHECK(det(IntMatrix::identity(4)) == 1);
    CHECK(det(im(3, {-10, -17, 11, 46, 73, -46, 7, 10, -6})) == 1);
    CHECK(det(im(2, {0, 1, 1, 0})) == -1); // pivoting path
    CHECK(det(im(2, {0, 1, 0, 3})) == 0);

    testutil::Rng rng(0x5eed11);
    for (int trial = 0; trial < 40; ++trial) {
        const int rank = static_cast<int>(rng.range(1, 5));
        const IntMatrix a = testutil::random_matrix(rng, rank, 9);
        const IntMatrix b = testutil::random_matrix(rng, rank, 9);
        CHECK(det(mat_mul(a, b)) == det(a) * det(b));
    }
}

TEST_CASE("char_poly basics") {
    CHECK(char_poly(IntMatrix::identity(2)) == lp({{2, 1}, {1, -2}, {0, 1}}));
    CHECK(char_poly(IntMatrix(3)) == lp({{3, 1}}));
    CHECK(char_poly(im(3, {-10, -17, 11, 46, 73, -46, 7, 10, -6})) ==
          lp({{3, 1}, {2, -57}, {1, 57}, {0, -1}}));
}

TEST_CASE("char_poly structure on random matrices") {
    testutil::Rng rng(0x5eed12);
    for (int trial = 0; trial < 30; ++trial) {
        const int rank = static_cast<int>(rng.range(1, 6));
        const IntMatrix a = testutil::random_matrix(rng, rank, 9);
        const LaurentPoly p = char_poly(a);
        CHECK(p.coeff(rank) == 1);
        const Int sign = rank % 2 == 0 ? 1 : -1;
        CHECK(p.coeff(0) == sign * det(a));
        CHECK(p.coeff(rank - 1) == -trace(a));
    }
}

TEST_CASE("char_poly similarity invariance") {
    testutil::Rng rng(0x5eed13);
    for (int trial = 0; trial < 20; ++trial) {
        const int rank = static_cast<int>(rng.range(2, 6));
        const IntMatrix a = testutil::random_matrix(rng, rank, 9);
        const IntMatrix p = testutil::random_unimodular(rng, rank, 8);
        const IntMatrix conj = mat_mul(mat_mul(p, a), mat_inverse_unimodular(p));
        CHECK(char_poly(conj) == char_poly(a));
    }
}
