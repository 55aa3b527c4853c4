#include <gtest/gtest.h>

#include <algorithm>

#include "grassbal/predictor.hpp"

using namespace grassbal;

namespace {

// Closed form written out directly, independent of tensor().
SplittingType tangent_oracle(std::int64_t a, std::int64_t b, std::int64_t d) {
    const std::int64_t q1 = d / a, r1 = d % a, q2 = d / b, r2 = d % b;
    std::vector<Degree> v;
    for (std::int64_t i = 0; i < r1 * r2; ++i) v.push_back(q1 + q2 + 2);
    for (std::int64_t i = 0; i < r1 * (b - r2) + r2 * (a - r1); ++i) v.push_back(q1 + q2 + 1);
    for (std::int64_t i = 0; i < (a - r1) * (b - r2); ++i) v.push_back(q1 + q2);
    return SplittingType(v);
}

SplittingType char2_oracle(std::int64_t b, std::int64_t d) {
    const std::int64_t q = (d - 1) / (b - 1), r = (d - 1) % (b - 1);
    std::vector<Degree> v;
    for (std::int64_t i = 0; i < r; ++i) v.push_back(d + 2 * q + 2);
    for (std::int64_t i = 0; i < b - 1 - r; ++i) v.push_back(d + 2 * q);
    return SplittingType(v);
}

}  // namespace

TEST(Params, NormalizationSwaps) {
    const auto p = GrassmannianParams::normalized(5, 2, 3, 0);
    EXPECT_EQ(p.a, 2);
    EXPECT_EQ(p.b, 5);
    EXPECT_TRUE(p.swapped);
    EXPECT_FALSE(GrassmannianParams::normalized(2, 5, 3).swapped);
    EXPECT_THROW(GrassmannianParams::normalized(0, 3, 1), std::invalid_argument);
    EXPECT_THROW(GrassmannianParams::normalized(1, 1, 1), std::invalid_argument);
    EXPECT_THROW(GrassmannianParams::normalized(2, 3, 0), std::invalid_argument);
    EXPECT_THROW(GrassmannianParams::normalized(2, 3, 1, 4), std::invalid_argument);
}

TEST(TangentType, Examples) {
    EXPECT_EQ(tangent_restriction_type(2, 3, 7),
              (SplittingType{7, 6, 6, 6, 5, 5}));
    EXPECT_EQ(tangent_restriction_type(2, 2, 4), (SplittingType{4, 4, 4, 4}));
    for (std::int64_t b = 2; b <= 6; ++b)
        for (std::int64_t d = 0; d <= 9; ++d)
            EXPECT_EQ(tangent_restriction_type(1, b, d), twist(balanced_type(b, d), d));
}

TEST(TangentType, ClosedFormAndTensorAgree) {
    for (std::int64_t a = 1; a <= 30; ++a)
        for (std::int64_t b = 1; b <= 30; ++b)
            for (std::int64_t d = 0; d <= 100; d += (a + b > 20 ? 7 : 1)) {
                const SplittingType t = tangent_restriction_type(a, b, d);
                ASSERT_EQ(t, tangent_oracle(a, b, d)) << a << " " << b << " " << d;
                ASSERT_EQ(t, tensor(balanced_type(a, d), balanced_type(b, d)));
                ASSERT_EQ(t.rank(), std::size_t(a * b));
                ASSERT_EQ(t.degree(), (a + b) * d);
            }
}

TEST(Slope, Examples) {
    EXPECT_EQ(normal_slope(2, 3, 7), Rational(33, 5));
    EXPECT_EQ(normal_slope(2, 2, 3), Rational(10, 3));
    EXPECT_EQ(normal_slope(1, 2, 1), Rational(1));
    EXPECT_EQ(normal_slope(2, 2, 2, 5), Rational(16, 3));
    EXPECT_THROW(normal_slope(1, 1, 3), DegenerateGrassmannian);
}

TEST(Char2, Examples) {
    EXPECT_EQ(char2_projective_type(3, 4), (SplittingType{8, 6}));
    EXPECT_EQ(char2_projective_type(3, 5), (SplittingType{9, 9}));
    for (std::int64_t d = 1; d <= 10; ++d) EXPECT_EQ(char2_projective_type(2, d), (SplittingType{3 * d - 2}));
}

TEST(Char2, MatchesParityTypeAndFormula) {
    for (std::int64_t b = 2; b <= 12; ++b)
        for (std::int64_t d = 1; d <= 40; ++d) {
            const SplittingType t = char2_projective_type(b, d);
            EXPECT_EQ(t, char2_oracle(b, d));
            EXPECT_EQ(t.rank(), std::size_t(b - 1));
            EXPECT_EQ(t.degree(), (b + 1) * d - 2);
            EXPECT_EQ(t, parity_two_balanced_type(b - 1, (b + 1) * d - 2, int(d % 2)));
            for (Degree x : t.degrees()) EXPECT_EQ((x - d) % 2, 0);
        }
}

TEST(Degeneracy, Examples) {
    EXPECT_EQ(degeneracy_decomposition(2, 5, 3), (SplittingType{3, 3, 3, 2, 2, 2, 2, 1, 1}));
    EXPECT_EQ(degeneracy_decomposition(1, 3, 2), (SplittingType{4, 2}));
    EXPECT_THROW(degeneracy_decomposition(3, 3, 3), NotDegenerateRange);
    EXPECT_THROW(degeneracy_decomposition(2, 5, 1), NotDegenerateRange);
    EXPECT_THROW(degeneracy_decomposition(2, 5, 5), NotDegenerateRange);
}

TEST(Degeneracy, RankDegreeAndNeverBalanced) {
    int cells = 0;
    for (std::int64_t a = 1; a <= 10; ++a)
        for (std::int64_t b = a; b <= 12; ++b)
            for (std::int64_t d = 2; d < b; ++d) {
                if (!((1 < d && d < a) || (a < d && d < b))) continue;
                ++cells;
                const SplittingType t = degeneracy_decomposition(a, b, d);
                EXPECT_EQ(t.rank(), std::size_t(a * b - 1));
                EXPECT_EQ(t.degree(), (a + b) * d - 2);
                EXPECT_FALSE(t.is_balanced()) << a << " " << b << " " << d;
            }
    EXPECT_GT(cells, 50);
}

TEST(Classify, Examples) {
    using C = Classification;
    EXPECT_EQ(classify_conjecture(GrassmannianParams::normalized(2, 5, 3, 0)).front(), C::Degeneracy);
    EXPECT_EQ(classify_conjecture(GrassmannianParams::normalized(1, 3, 4, 2)).front(), C::Char2);
    EXPECT_EQ(classify_conjecture(GrassmannianParams::normalized(3, 3, 4, 0)).front(), C::TangentException);
    EXPECT_EQ(classify_conjecture(GrassmannianParams::normalized(2, 2, 3, 0)),
              std::vector<C>{C::Balanced});
}

TEST(Classify, MatchesDirectConditionsAndSwapInvariance) {
    using C = Classification;
    for (std::int64_t a = 1; a <= 8; ++a)
        for (std::int64_t b = std::max<std::int64_t>(a, 2); b <= 8; ++b)
            for (std::int64_t d = 1; d <= 25; ++d)
                for (std::uint32_t ch : {0u, 2u, 3u, 1009u}) {
                    const auto got = classify_conjecture(GrassmannianParams::normalized(a, b, d, ch));
                    const auto swapped = classify_conjecture(GrassmannianParams::normalized(b, a, d, ch));
                    EXPECT_EQ(got, swapped);
                    std::vector<C> want;
                    if (d < b && d != 1 && d != a) want.push_back(C::Degeneracy);
                    if (ch == 2 && a == 1 && (d - 1) % (b - 1) != 0) want.push_back(C::Char2);
                    const std::int64_t r1 = d % a, r2 = d % b;
                    if (r1 * r2 != 0 && d / a + d / b <= (a - r1) * (b - r2)) want.push_back(C::TangentException);
                    if (want.empty()) want.push_back(C::Balanced);
                    EXPECT_EQ(got, want) << a << " " << b << " " << d << " " << ch;
                    // Guards.
                    const bool has_deg = std::count(got.begin(), got.end(), C::Degeneracy) > 0;
                    const bool has_c2 = std::count(got.begin(), got.end(), C::Char2) > 0;
                    if (d >= b || d == 1 || d == a) EXPECT_FALSE(has_deg);
                    if (ch != 2 || a != 1) EXPECT_FALSE(has_c2);
                }
}

TEST(Predict, Examples) {
    auto r = predict_report(2, 2, 3);
    EXPECT_EQ(r.primary(), Classification::Balanced);
    EXPECT_EQ(*r.predicted_type, (SplittingType{4, 3, 3}));
    EXPECT_FALSE(r.proven_unbalanced);
    EXPECT_EQ(r.theorem_guarantee, "2-balanced");

    r = predict_report(3, 3, 4);
    EXPECT_EQ(r.primary(), Classification::TangentException);
    EXPECT_FALSE(r.predicted_type);
    const std::vector<ForcedSummand> want{{ForcedSummand::Relation::Equal, 2},
                                          {ForcedSummand::Relation::AtLeast, 4}};
    EXPECT_EQ(r.forced_summands, want);
    EXPECT_TRUE(r.proven_unbalanced);

    r = predict_report(1, 3, 4, 2);
    EXPECT_EQ(r.primary(), Classification::Char2);
    EXPECT_EQ(*r.predicted_type, (SplittingType{8, 6}));
    EXPECT_TRUE(r.proven_unbalanced);

    r = predict_report(5, 2, 3);
    EXPECT_TRUE(r.params.swapped);
    EXPECT_EQ(r.primary(), Classification::Degeneracy);
    EXPECT_FALSE(r.assumptions.empty());
}

TEST(Predict, LinesKeepOnlyTheLowerForcedSummand) {
    // d = 1: the tangent condition holds but the line's normal bundle is balanced.
    for (std::int64_t a = 2; a <= 5; ++a)
        for (std::int64_t b = a; b <= 6; ++b) {
            const auto r = predict_report(a, b, 1);
            ASSERT_EQ(r.primary(), Classification::TangentException);
            EXPECT_EQ(r.forced_summands, (std::vector<ForcedSummand>{{ForcedSummand::Relation::Equal, 0}}));
            EXPECT_FALSE(r.proven_unbalanced);
            // Known line type O(1)^(a+b-2) + O^((a-1)(b-1)) meets the forced summand and is balanced.
            const SplittingType line = direct_sum(power_sum({1}, a + b - 2), power_sum({0}, (a - 1) * (b - 1)));
            EXPECT_TRUE(satisfies(line, r.forced_summands.front()));
            EXPECT_TRUE(line.is_balanced());
        }
}

TEST(Predict, PredictedTypeHasNormalRankAndDegree) {
    for (std::int64_t a = 1; a <= 7; ++a)
        for (std::int64_t b = std::max<std::int64_t>(a, 2); b <= 8; ++b)
            for (std::int64_t d = 1; d <= 20; ++d)
                for (std::uint32_t ch : {0u, 2u}) {
                    const auto r = predict_report(a, b, d, ch);
                    EXPECT_EQ(r.slope, Rational((a + b) * d - 2, a * b - 1));
                    if (!r.predicted_type) continue;
                    EXPECT_EQ(r.predicted_type->rank(), std::size_t(a * b - 1));
                    EXPECT_EQ(r.predicted_type->degree(), (a + b) * d - 2);
                }
}

TEST(ForcedSummand, Satisfies) {
    EXPECT_TRUE(satisfies({4, 3, 2}, {ForcedSummand::Relation::Equal, 3}));
    EXPECT_FALSE(satisfies({4, 2}, {ForcedSummand::Relation::Equal, 3}));
    EXPECT_TRUE(satisfies({4, 2}, {ForcedSummand::Relation::AtLeast, 4}));
    EXPECT_FALSE(satisfies({3, 3}, {ForcedSummand::Relation::AtLeast, 4}));
}
