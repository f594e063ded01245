#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coind/linalg/matrix.hpp"

using namespace coind::linalg;

namespace {

Matrix random_matrix(const Field& f, std::mt19937_64& rng, std::size_t r, std::size_t c, int density) {
    Matrix m(f, r, c);
    std::uniform_int_distribution<int> coin(0, 99), val(-3, 3);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (coin(rng) < density) m.set(i, j, Scalar(val(rng)));
    return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    Field f3 = Field::prime(3);
    CHECK(f3.reduce(Scalar(1, 2)) == 2);
    CHECK(f3.reduce(Scalar(-1)) == 2);
    CHECK(f3.inv(Scalar(2)) == 2);
    CHECK_THROWS(f3.inv(Scalar(3)));
    CHECK_THROWS(Field::prime(4));
    CHECK(Field::parse("f5").characteristic() == 5);
    CHECK(Field::parse("q").is_rational());
    CHECK_THROWS(Field::parse("f"));
    CHECK(to_string(Scalar(3, 6)) == "1/2");
}

TEST_CASE("rank plus nullity, kernel is killed") {
    std::mt19937_64 rng(7);
    for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
            Matrix a = random_matrix(f, rng, r, c, 40);
            Matrix n = nullspace(a);
            CHECK(rank(a) + n.cols() == c);
            CHECK((a * n).is_zero());
            CHECK(rank(n) == n.cols());
            CHECK(rank(a) == rank(a.transpose()));
            CHECK(column_space(a).cols() == rank(a));
        }
    }
}

TEST_CASE("solve consistent and inconsistent systems") {
    std::mt19937_64 rng(11);
    for (Field f : {Field::rationals(), Field::prime(3)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            Matrix a = random_matrix(f, rng, r, c, 50);
            Vector x0(c);
            for (auto& v : x0) v = f.from_int(static_cast<long>(rng() % 5) - 2);
            Vector b = a * x0;
            auto x = solve(a, b);
            REQUIRE(x.has_value());
            CHECK(a * *x == b);
        }
    }
    Matrix a = Matrix::from_dense(Field::rationals(), {{1, 1}, {2, 2}});
    CHECK_FALSE(solve(a, Vector{Scalar(1), Scalar(3)}).has_value());
}

TEST_CASE("inverse") {
    std::mt19937_64 rng(5);
    int found = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Matrix a = random_matrix(Field::rationals(), rng, 4, 4, 70);
        auto inv = inverse(a);
        CHECK(inv.has_value() == (rank(a) == 4));
        if (inv) {
            ++found;
            CHECK((a * *inv).is_identity());
            CHECK((*inv * a).is_identity());
        }
    }
    CHECK(found > 10);
}

TEST_CASE("echelon form is reduced and deterministic") {
    Matrix a = Matrix::from_dense(Field::rationals(), {{0, 2, 4}, {1, 1, 1}, {1, 2, 3}});
    Echelon e = row_echelon(a);
    REQUIRE(e.rank() == 2);
    CHECK(e.pivots() == std::vector<std::size_t>{0, 1});
    CHECK(dense_from_sparse(e.rows()[0], 3) == Vector{Scalar(1), Scalar(0), Scalar(-1)});
    CHECK(dense_from_sparse(e.rows()[1], 3) == Vector{Scalar(0), Scalar(1), Scalar(2)});
}

TEST_CASE("products and stacking") {
    Field q = Field::rationals();
    Matrix a = Matrix::from_dense(q, {{1, 2}, {3, 4}});
    Matrix b = Matrix::from_dense(q, {{0, 1}, {1, 0}});
    CHECK(a * b == Matrix::from_dense(q, {{2, 1}, {4, 3}}));
    CHECK(Matrix::block_diagonal(q, {a, b}).rows() == 4);
    CHECK(Matrix::hstack(q, 2, {a, b}).at(0, 3) == 1);
    CHECK(Matrix::vstack(q, 2, {a, b}).at(3, 0) == 1);
    CHECK(a.trace() == 5);
    CHECK((a - a).is_zero());
}
