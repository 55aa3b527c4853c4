#include <gtest/gtest.h>

#include <random>

#include "grassbal/binary_form.hpp"
#include "grassbal/fp_matrix.hpp"
#include "grassbal/poly_matrix.hpp"
#include "grassbal/prime_field.hpp"

using namespace grassbal;

namespace {

BinaryForm form(const PrimeField& f, std::vector<Residue> c) {
    const int deg = int(c.size()) - 1;
    return BinaryForm(f, deg, std::move(c));
}

BinaryForm random_form(const PrimeField& f, int deg, std::mt19937_64& rng) {
    std::vector<Residue> c(deg + 1);
    for (auto& x : c) x = Residue(rng() % f.modulus());
    return BinaryForm(f, deg, c);
}

FpMatrix random_matrix(const PrimeField& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
    FpMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = (rng() % 4 < unsigned(zero_bias)) ? 0 : Residue(rng() % f.modulus());
    return m;
}

std::vector<Residue> mat_vec(const FpMatrix& m, const std::vector<Residue>& v) {
    std::vector<Residue> out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] = m.field().add(out[i], m.field().mul(m.at(i, j), v[j]));
    return out;
}

}  // namespace

TEST(PrimeField, Axioms) {
    const PrimeField f(1009);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 2000; ++i) {
        const Residue x = Residue(rng() % 1009), y = Residue(rng() % 1009), z = Residue(rng() % 1009);
        EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        EXPECT_EQ(f.add(f.sub(x, y), y), x);
        EXPECT_EQ(f.add(x, f.neg(x)), 0u);
        if (x != 0) EXPECT_EQ(f.mul(x, f.inv(x)), 1u);
        EXPECT_EQ(f.reduce(std::int64_t(x) - 1009 * 7), x);
    }
    EXPECT_THROW(f.inv(0), std::domain_error);
    EXPECT_EQ(f.pow(3, 1008), 1u);
    EXPECT_THROW(PrimeField(1000), std::invalid_argument);
    EXPECT_TRUE(is_prime(1009));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(561));
}

TEST(BinaryForm, GcdExamples) {
    const PrimeField f(1009);
    const BinaryForm s2t = BinaryForm::monomial(f, 3, 1);
    const BinaryForm st2 = BinaryForm::monomial(f, 3, 2);
    EXPECT_EQ(s2t, form(f, {0, 1, 0, 0}));
    EXPECT_EQ(gcd(s2t, st2), BinaryForm::monomial(f, 2, 1));
    EXPECT_EQ(gcd(BinaryForm::monomial(f, 4, 0), BinaryForm::monomial(f, 4, 4)), BinaryForm::constant(f, 1));

    // s^2 + t^2 = (s + t)^2 over F_2.
    const PrimeField f2(2);
    EXPECT_EQ(gcd(form(f2, {1, 0, 1}), form(f2, {1, 1})), form(f2, {1, 1}));
}

TEST(BinaryForm, DerivativeAndEuler) {
    const PrimeField f(1009);
    const BinaryForm s2t = BinaryForm::monomial(f, 3, 1);
    EXPECT_EQ(s2t.derivative_s(), BinaryForm::monomial(f, 2, 1, 2));
    EXPECT_EQ(s2t.derivative_t(), BinaryForm::monomial(f, 2, 0));

    const BinaryForm s = BinaryForm::monomial(f, 1, 0), t = BinaryForm::monomial(f, 1, 1);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 500; ++i) {
        const int e = 1 + int(rng() % 12);
        const BinaryForm g = random_form(f, e, rng);
        EXPECT_EQ(s * g.derivative_s() + t * g.derivative_t(), g.scaled(Residue(e)));
        EXPECT_EQ(g.derivative_s().degree(), e - 1);
    }
}

TEST(BinaryForm, EvalAndValuations) {
    const PrimeField f(7);
    const BinaryForm g = form(f, {1, 2, 3});  // s^2 + 2st + 3t^2
    EXPECT_EQ(g.eval({1, 1}), 6u);
    EXPECT_EQ(g.eval({0, 1}), 3u);
    EXPECT_EQ(g.eval({2, 1}), Residue((4 + 4 + 3) % 7));
    EXPECT_EQ(BinaryForm::monomial(f, 5, 2).s_valuation(), 3);
    EXPECT_EQ(BinaryForm::monomial(f, 5, 2).t_valuation(), 2);
}

TEST(BinaryForm, GcdDividesAndIsMaximal) {
    const PrimeField f(1009);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        // Plant a common factor so the gcd is usually nontrivial.
        const BinaryForm h = random_form(f, int(rng() % 3), rng);
        const BinaryForm x = random_form(f, int(rng() % 4), rng) * h;
        const BinaryForm y = random_form(f, int(rng() % 4), rng) * h;
        if (x.is_zero() || y.is_zero()) continue;
        const BinaryForm g = gcd(x, y);
        ASSERT_TRUE(divide_exact(x, g)) << x.str() << " / " << g.str();
        ASSERT_TRUE(divide_exact(y, g));
        if (!h.is_zero()) EXPECT_TRUE(divide_exact(g, h)) << g.str() << " vs " << h.str();
        // Cofactors are coprime.
        EXPECT_EQ(gcd(*divide_exact(x, g), *divide_exact(y, g)).degree(), 0);
    }
}

TEST(BinaryForm, ExactDivision) {
    const PrimeField f(1009);
    const BinaryForm a = form(f, {1, 1}), b = form(f, {1, 1008});  // s+t, s-t
    EXPECT_EQ(*divide_exact(a * b, b), a);
    EXPECT_FALSE(divide_exact(a * a, b));
}

TEST(MatrixKernel, Examples) {
    const PrimeField f5(5);
    const auto id = matrix_kernel(FpMatrix::identity(f5, 3));
    EXPECT_EQ(id.dimension, 0u);
    EXPECT_EQ(id.rank, 3u);

    const auto z = matrix_kernel(FpMatrix(f5, 2, 2));
    EXPECT_EQ(z.dimension, 2u);

    // s f + t g = 0 for linear f = f0 s + f1 t, g = g0 s + g1 t.
    // Unknowns (f0, f1, g0, g1); coefficients of s^2, st, t^2.
    FpMatrix m(f5, 3, 4);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    m.at(1, 2) = 1;
    m.at(2, 3) = 1;
    const auto k = matrix_kernel(m);
    ASSERT_EQ(k.dimension, 1u);
    const auto& v = k.basis.front();
    // Proportional to (f, g) = (t, -s).
    EXPECT_EQ(v[0], 0u);
    EXPECT_EQ(v[3], 0u);
    EXPECT_EQ(f5.add(v[1], v[2]), 0u);
    EXPECT_NE(v[1], 0u);
}

TEST(MatrixKernel, RankNullityAndBasis) {
    const PrimeField f(1009);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        const FpMatrix m = random_matrix(f, r, c, rng, int(rng() % 4));
        const auto k = matrix_kernel(m);
        EXPECT_EQ(k.rank + k.dimension, c);
        EXPECT_EQ(rank(m), k.rank);
        ASSERT_EQ(k.basis.size(), k.dimension);
        for (const auto& v : k.basis) EXPECT_EQ(mat_vec(m, v), std::vector<Residue>(r, 0));
        // Basis independence: the basis stacked as rows has full rank.
        if (k.dimension > 0) {
            FpMatrix bm(f, k.dimension, c);
            for (std::size_t a = 0; a < k.dimension; ++a)
                for (std::size_t j = 0; j < c; ++j) bm.at(a, j) = k.basis[a][j];
            EXPECT_EQ(rank(bm), k.dimension);
        }
    }
}

TEST(MatrixKernel, DimensionMatchesBruteForceCount) {
    // |ker| = p^dim, counted by enumerating every vector over F_3.
    const PrimeField f(3);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
        const FpMatrix m = random_matrix(f, r, c, rng, 1);
        std::size_t total = 1, zeros = 0;
        for (std::size_t j = 0; j < c; ++j) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<Residue> v(c);
            std::size_t x = code;
            for (std::size_t j = 0; j < c; ++j, x /= 3) v[j] = Residue(x % 3);
            zeros += mat_vec(m, v) == std::vector<Residue>(r, 0);
        }
        std::size_t expect = 1;
        for (std::size_t j = 0; j < matrix_kernel(m).dimension; ++j) expect *= 3;
        EXPECT_EQ(zeros, expect);
    }
}

TEST(PolyMatrix, MinorsGcdExamples) {
    const PrimeField f(1009);
    const BinaryForm s = BinaryForm::monomial(f, 1, 0), t = BinaryForm::monomial(f, 1, 1);

    PolyMatrix col(f, 2, 1);
    col.at(0, 0) = s;
    col.at(1, 0) = t;
    EXPECT_TRUE(minors_gcd(col, 1).is_unit());

    PolyMatrix col2(f, 2, 1);
    col2.at(0, 0) = s * s;
    col2.at(1, 0) = s * t;
    EXPECT_EQ(minors_gcd(col2, 1), s);

    // Rows (s, t, 0), (0, s, t); 2x2 minors s^2, st, t^2.
    PolyMatrix m(f, 2, 3);
    m.at(0, 0) = s;
    m.at(0, 1) = t;
    m.at(0, 2) = BinaryForm(f, 1);
    m.at(1, 0) = BinaryForm(f, 1);
    m.at(1, 1) = s;
    m.at(1, 2) = t;
    EXPECT_EQ(minor(m, {0, 1}, {0, 1}), s * s);
    EXPECT_EQ(minor(m, {0, 1}, {0, 2}), s * t);
    EXPECT_EQ(minor(m, {0, 1}, {1, 2}), t * t);
    EXPECT_TRUE(minors_gcd(m, 2).is_unit());

    PolyMatrix zero = PolyMatrix::with_column_degrees(f, 3, {1, 1});
    EXPECT_THROW(minors_gcd(zero, 2), AllMinorsZero);
}

TEST(PolyMatrix, EvalAndRowDeletion) {
    const PrimeField f(1009);
    std::mt19937_64 rng(6);
    PolyMatrix m = PolyMatrix::with_column_degrees(f, 3, {2, 1});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = random_form(f, j == 0 ? 2 : 1, rng);
    const LinePoint x{5, 1};
    const FpMatrix v = m.eval(x);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(v.at(i, j), m.at(i, j).eval(x));
    const PolyMatrix r = m.without_row(1);
    EXPECT_EQ(r.rows(), 2u);
    EXPECT_EQ(r.at(1, 0), m.at(2, 0));
    EXPECT_EQ(m.derivative_s().at(0, 0), m.at(0, 0).derivative_s());
}
