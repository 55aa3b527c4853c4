#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "grassbal/rational.hpp"
#include "grassbal/splitting_type.hpp"

using namespace grassbal;

namespace {

SplittingType random_type(std::mt19937_64& rng, int max_rank, int lo, int hi) {
    const int r = 1 + int(rng() % max_rank);
    std::vector<Degree> v(r);
    for (auto& x : v) x = lo + Degree(rng() % (hi - lo + 1));
    return SplittingType(v);
}

// Oracle for dominance: raw prefix sums.
Dominance prefix_oracle(const SplittingType& x, const SplittingType& y) {
    Degree sx = 0, sy = 0;
    bool le = true, ge = true;
    for (std::size_t i = 0; i < x.rank(); ++i) {
        sx += x.degrees()[i];
        sy += y.degrees()[i];
        le = le && sx <= sy;
        ge = ge && sx >= sy;
    }
    if (le && ge) return Dominance::Equal;
    if (le) return Dominance::MoreBalanced;
    if (ge) return Dominance::LessBalanced;
    return Dominance::Incomparable;
}

}  // namespace

TEST(SplittingType, SortedAndDerived) {
    SplittingType t{2, 4, 3};
    EXPECT_EQ(t.degrees(), (std::vector<Degree>{4, 3, 2}));
    EXPECT_EQ(t.degree(), 9);
    EXPECT_EQ(t.slope(), Rational(3));
    EXPECT_EQ(t.spread(), 2);
    EXPECT_FALSE(t.is_balanced());
    EXPECT_TRUE(t.is_balanced(2));
    EXPECT_EQ(t.multiplicity(3), 1);
    EXPECT_EQ(t.str(), "[4,3,2]");
}

TEST(TypeArithmetic, Examples) {
    EXPECT_EQ(twist({3, 2, 2}, 1), (SplittingType{4, 3, 3}));
    EXPECT_EQ(tensor({1, 0}, {1, 0}), (SplittingType{2, 1, 1, 0}));
    EXPECT_EQ(dual({1, 1, 0}), (SplittingType{0, -1, -1}));
    EXPECT_EQ(direct_sum({3}, {4, 1}), (SplittingType{4, 3, 1}));
    EXPECT_EQ(power_sum({2, 1}, 3), (SplittingType{2, 2, 2, 1, 1, 1}));
}

TEST(TypeArithmetic, FunctorialIdentities) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 300; ++i) {
        const SplittingType x = random_type(rng, 6, -8, 8);
        const SplittingType y = random_type(rng, 6, -8, 8);
        const Degree m = Degree(rng() % 11) - 5;
        EXPECT_EQ(dual(dual(x)), x);
        EXPECT_EQ(twist(twist(x, m), -m), x);
        const SplittingType t = tensor(x, y);
        EXPECT_EQ(t.rank(), x.rank() * y.rank());
        EXPECT_EQ(t.degree(), Degree(x.rank()) * y.degree() + Degree(y.rank()) * x.degree());
        EXPECT_EQ(twist(x, m).degree(), x.degree() + m * Degree(x.rank()));
        EXPECT_EQ(direct_sum(x, y).degree(), x.degree() + y.degree());
    }
}

TEST(BalancedType, Examples) {
    EXPECT_EQ(balanced_type(3, 10), (SplittingType{4, 3, 3}));
    EXPECT_EQ(balanced_type(2, 14), (SplittingType{7, 7}));
    EXPECT_EQ(balanced_type(5, 13), (SplittingType{3, 3, 3, 2, 2}));
    EXPECT_EQ(balanced_type(3, -4), (SplittingType{-1, -1, -2}));
}

TEST(BalancedType, UniqueByEnumeration) {
    // Every spread <= 1 vector of length r with entries in a window and sum deg.
    for (int r = 1; r <= 4; ++r) {
        for (Degree deg = -6; deg <= 10; ++deg) {
            int found = 0;
            const Degree lo = deg / r - 2;
            for (Degree base = lo; base <= lo + 4; ++base) {
                for (int k = 0; k < r; ++k) {  // k entries equal base+1
                    if (base * r + k == deg) {
                        ++found;
                        std::vector<Degree> v(r, base);
                        for (int i = 0; i < k; ++i) v[i] = base + 1;
                        EXPECT_EQ(balanced_type(r, deg), SplittingType(v));
                    }
                }
            }
            EXPECT_EQ(found, 1);
        }
    }
}

TEST(ParityTwoBalanced, Examples) {
    EXPECT_EQ(parity_two_balanced_type(2, 14, 0), (SplittingType{8, 6}));
    EXPECT_EQ(parity_two_balanced_type(2, 14, 1), (SplittingType{7, 7}));
    EXPECT_THROW(parity_two_balanced_type(3, 10, 1), NoSuchType);
}

TEST(ParityTwoBalanced, MatchesExhaustiveEnumeration) {
    for (int r = 1; r <= 4; ++r) {
        for (Degree deg = -8; deg <= 10; ++deg) {
            for (int parity = 0; parity <= 1; ++parity) {
                // Oracle: all non-increasing r-tuples in [-10, 10], right parity, spread <= 2.
                std::vector<SplittingType> hits;
                std::vector<Degree> v(r, -10);
                while (true) {
                    bool ok = std::is_sorted(v.rbegin(), v.rend());
                    Degree s = 0;
                    for (Degree x : v) {
                        s += x;
                        ok = ok && ((x % 2 + 2) % 2) == parity;
                    }
                    if (ok && s == deg && v.front() - v.back() <= 2) hits.emplace_back(v);
                    int i = 0;
                    while (i < r && v[i] == 10) v[i++] = -10;
                    if (i == r) break;
                    ++v[i];
                }
                std::sort(hits.begin(), hits.end());
                hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
                if (hits.empty()) {
                    EXPECT_THROW(parity_two_balanced_type(r, deg, parity), NoSuchType) << r << " " << deg;
                } else {
                    ASSERT_EQ(hits.size(), 1u);
                    EXPECT_EQ(parity_two_balanced_type(r, deg, parity), hits.front());
                }
            }
        }
    }
}

TEST(Hilbert, Examples) {
    const SplittingType t{1, 1, 0};
    EXPECT_EQ(hilbert_function(t, -2), 0);
    EXPECT_EQ(hilbert_function(t, -1), 2);
    EXPECT_EQ(hilbert_function(t, 0), 5);
    EXPECT_EQ(hilbert_function(t, 1), 8);
    const std::vector<HilbertSample> w{{-2, 0}, {-1, 2}, {0, 5}, {1, 8}};
    EXPECT_EQ(type_from_hilbert(w), t);
    EXPECT_EQ(type_from_hilbert(w, 3), t);

    const SplittingType seven{7};
    EXPECT_EQ(hilbert_function(seven, -8), 0);
    EXPECT_EQ(hilbert_function(seven, -7), 1);
    const auto w7 = hilbert_window(seven, -8, -6);
    EXPECT_EQ(w7[0].h0, 0);
    EXPECT_EQ(w7[1].h0, 1);
    EXPECT_EQ(w7[2].h0, 2);
    EXPECT_EQ(type_from_hilbert(w7), seven);
}

TEST(Hilbert, RejectsBadWindows) {
    EXPECT_THROW(type_from_hilbert(std::vector<HilbertSample>{{0, 1}, {1, 3}, {2, 5}}), InconsistentWindow);
    EXPECT_THROW(type_from_hilbert(std::vector<HilbertSample>{{-1, 0}, {0, 3}, {1, 4}, {2, 6}}),
                 InconsistentWindow);
    const SplittingType t{1, 1, 0};
    EXPECT_THROW(type_from_hilbert(hilbert_window(t, -2, 1), 4), InconsistentWindow);
}

TEST(Hilbert, RoundTripAndDifferences) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 1000; ++i) {
        const SplittingType t = random_type(rng, 12, -10, 10);
        for (Degree m = -12; m <= 12; ++m) {
            std::int64_t count = 0;
            for (Degree x : t.degrees()) count += x >= -m;
            ASSERT_EQ(hilbert_function(t, m) - hilbert_function(t, m - 1), count);
        }
        const auto w = hilbert_window(t, -t.max() - 2 - Degree(rng() % 3), -t.min() + 1 + Degree(rng() % 3));
        ASSERT_EQ(type_from_hilbert(w), t);
    }
}

TEST(GenericModUp, Examples) {
    auto r = generic_mod_up({2, 0}, 1, true);
    ASSERT_TRUE(r.type);
    EXPECT_EQ(*r.type, (SplittingType{2, 1}));
    EXPECT_FALSE(r.heuristic);

    r = generic_mod_up({7, 7}, 1, true);
    EXPECT_EQ(*r.type, (SplittingType{8, 7}));

    r = generic_mod_up({2, 1}, 1, false);
    EXPECT_FALSE(r.type);
    EXPECT_EQ(r.envelope, (DegreeInterval{1, 3}));

    r = generic_mod_up({3, 0, 0}, 2, true);
    EXPECT_TRUE(r.heuristic);
    EXPECT_EQ(*r.type, (SplittingType{3, 1, 1}));
}

TEST(GenericModUp, SingleStepProperties) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const SplittingType t = random_type(rng, 8, -5, 5);
        const auto r = generic_mod_up(t, 1, true);
        ASSERT_TRUE(r.type);
        EXPECT_EQ(r.type->degree(), t.degree() + 1);
        EXPECT_EQ(r.type->rank(), t.rank());
        EXPECT_LE(r.type->spread(), std::max<Degree>(1, t.spread()));
    }
}

TEST(IntervalCombine, Examples) {
    EXPECT_EQ(interval_combine(DegreeInterval{2, 3}, DegreeInterval{2, 4}), (DegreeInterval{2, 4}));
    EXPECT_EQ(interval_combine(SplittingType{3, 3}, DegreeInterval{3, 3}), (DegreeInterval{3, 3}));
    EXPECT_EQ(interval_combine(DegreeInterval{1, 2}, DegreeInterval{4, 5}), (DegreeInterval{1, 5}));
    EXPECT_THROW(DegreeInterval(3, 2), std::invalid_argument);
}

TEST(Dominance, Examples) {
    EXPECT_EQ(dominance_compare({4, 3, 3}, {4, 4, 2}), Dominance::MoreBalanced);
    EXPECT_EQ(dominance_compare({3, 3}, {3, 3}), Dominance::Equal);
    EXPECT_EQ(dominance_compare({5, 3, 2}, {4, 4, 2}), Dominance::LessBalanced);
    EXPECT_EQ(dominance_compare({3, 3, 0}, {4, 1, 1}), Dominance::Incomparable);
    EXPECT_THROW(dominance_compare({3, 3}, {3, 2}), RankDegreeMismatch);
    EXPECT_THROW(dominance_compare({3, 3}, {2, 2, 2}), RankDegreeMismatch);
}

TEST(Dominance, PartialOrderOnRandomTriples) {
    std::mt19937_64 rng(4);
    // Random types of rank 4 and degree 6.
    auto draw = [&] {
        std::vector<Degree> v(4);
        Degree s = 0;
        for (int i = 0; i < 3; ++i) s += v[i] = Degree(rng() % 7) - 1;
        v[3] = 6 - s;
        return SplittingType(v);
    };
    for (int i = 0; i < 2000; ++i) {
        const SplittingType x = draw(), y = draw(), z = draw();
        const Dominance xy = dominance_compare(x, y);
        EXPECT_EQ(xy, prefix_oracle(x, y));
        if (xy == Dominance::Equal) EXPECT_EQ(x, y);
        if (xy == Dominance::MoreBalanced) EXPECT_EQ(dominance_compare(y, x), Dominance::LessBalanced);
        const auto le = [](Dominance d) { return d == Dominance::MoreBalanced || d == Dominance::Equal; };
        if (le(xy) && le(dominance_compare(y, z))) EXPECT_TRUE(le(dominance_compare(x, z)));
    }
}

TEST(Dominance, Maxima) {
    const std::vector<SplittingType> ts{{4, 3, 3}, {4, 4, 2}, {5, 3, 2}, {4, 3, 3}};
    // Most balanced is dominance-maximal in the genericity sense.
    EXPECT_EQ(dominance_maxima(ts), (std::vector<SplittingType>{{4, 3, 3}}));
    const std::vector<SplittingType> inc{{3, 3, 0}, {4, 1, 1}};
    EXPECT_EQ(dominance_maxima(inc).size(), 2u);
}

TEST(Rational, ArithmeticAndOrder) {
    EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
    EXPECT_EQ(Rational(-3, 2).floor(), -2);
    EXPECT_EQ(Rational(-3, 2).ceil(), -1);
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
    EXPECT_LT(Rational(10, 3), Rational(7, 2));
    EXPECT_EQ(Rational(33, 5).str(), "33/5");
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, OrderAgreesWithCrossMultiplication) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 5000; ++i) {
        const std::int64_t a = std::int64_t(rng() % 2001) - 1000, b = 1 + std::int64_t(rng() % 1000);
        const std::int64_t c = std::int64_t(rng() % 2001) - 1000, e = 1 + std::int64_t(rng() % 1000);
        EXPECT_EQ(Rational(a, b) < Rational(c, e), a * e < c * b);
        EXPECT_EQ(Rational(a, b) == Rational(c, e), a * e == c * b);
    }
}

TEST(Rational, OverflowIsAnError) {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
    EXPECT_THROW(Rational(big) + Rational(big), ArithmeticOverflow);
    EXPECT_THROW(Rational(big) * Rational(3), ArithmeticOverflow);
    EXPECT_THROW(checked::mul(big, 2), ArithmeticOverflow);
    // Comparison of large values stays exact.
    EXPECT_LT(Rational(big - 1, big), Rational(big, big + 1));
}
