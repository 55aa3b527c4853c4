#include "grassbal/predictor.hpp"

#include <algorithm>

#include "grassbal/prime_field.hpp"

namespace grassbal {

GrassmannianParams GrassmannianParams::normalized(std::int64_t a, std::int64_t b, std::int64_t d,
                                                  std::uint32_t characteristic) {
    GrassmannianParams p;
    if (a > b) {
        std::swap(a, b);
        p.swapped = true;
    }
    if (a < 1 || b < 2) throw std::invalid_argument("need a >= 1 and b >= 2 after ordering a <= b");
    if (d < 1) throw std::invalid_argument("need curve degree d >= 1");
    if (characteristic != 0 && !is_prime(characteristic)) {
        throw std::invalid_argument("characteristic must be 0 or a prime");
    }
    p.a = a;
    p.b = b;
    p.d = d;
    p.characteristic = characteristic;
    return p;
}

DivisionData division_data(std::int64_t a, std::int64_t b, std::int64_t d) {
    if (a < 1 || b < 1 || d < 0) throw std::invalid_argument("division data needs a, b >= 1, d >= 0");
    return {d / a, d % a, d / b, d % b};
}

SplittingType tangent_restriction_type(std::int64_t a, std::int64_t b, std::int64_t d) {
    const auto [q1, r1, q2, r2] = division_data(a, b, d);
    const std::pair<Degree, std::int64_t> parts[] = {
        {q1 + q2 + 2, r1 * r2},
        {q1 + q2 + 1, r1 * (b - r2) + r2 * (a - r1)},
        {q1 + q2, (a - r1) * (b - r2)},
    };
    return SplittingType::from_multiplicities(parts);
}

Rational normal_slope(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t n) {
    const std::int64_t rank = checked::sub(checked::mul(a, b), 1);
    if (rank == 0) throw DegenerateGrassmannian("ab = 1: the Grassmannian is a point");
    const std::int64_t degree =
        checked::add(checked::sub(checked::mul(checked::add(a, b), d), 2), checked::mul(a, n));
    return Rational(degree, rank);
}

SplittingType char2_projective_type(std::int64_t b, std::int64_t d) {
    if (b < 2 || d < 1) throw std::invalid_argument("char2_projective_type needs b >= 2, d >= 1");
    const std::int64_t q = (d - 1) / (b - 1);
    const std::int64_t r = (d - 1) % (b - 1);
    const std::pair<Degree, std::int64_t> parts[] = {{d + 2 * q + 2, r}, {d + 2 * q, b - 1 - r}};
    return SplittingType::from_multiplicities(parts);
}

SplittingType degeneracy_decomposition(std::int64_t a, std::int64_t b, std::int64_t d) {
    if (a > b) throw std::invalid_argument("degeneracy_decomposition expects a <= b");
    auto inner_normal = [](std::int64_t a_in, std::int64_t b_in, std::int64_t d_in) {
        return balanced_type(a_in * b_in - 1, (a_in + b_in) * d_in - 2);
    };
    if (1 < d && d < a) {
        // C sits in Gr(d, d+b); the remaining a - d directions contribute Q|_C.
        return direct_sum(inner_normal(d, b, d), power_sum(balanced_type(b, d), a - d));
    }
    if (a < d && d < b) {
        // C sits in Gr(a, a+d); the remaining b - d directions contribute S^dual|_C.
        return direct_sum(inner_normal(a, d, d), power_sum(balanced_type(a, d), b - d));
    }
    throw NotDegenerateRange("d = " + std::to_string(d) + " is outside 1 < d < a and a < d < b for (a, b) = (" +
                             std::to_string(a) + ", " + std::to_string(b) + ")");
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Balanced: return "Balanced";
        case Classification::Degeneracy: return "Degeneracy";
        case Classification::Char2: return "Char2";
        case Classification::TangentException: return "TangentException";
    }
    return "?";
}

std::vector<Classification> classify_conjecture(const GrassmannianParams& params) {
    const auto [a, b, d, characteristic, swapped] = params;
    (void)swapped;
    if (a > b) throw std::invalid_argument("classify_conjecture expects a <= b");
    std::vector<Classification> out;
    if (d < b && d != 1 && d != a) out.push_back(Classification::Degeneracy);
    if (characteristic == 2 && a == 1 && (d - 1) % (b - 1) != 0) out.push_back(Classification::Char2);
    const auto [q1, r1, q2, r2] = division_data(a, b, d);
    if (r1 * r2 != 0 && q1 + q2 <= (a - r1) * (b - r2)) out.push_back(Classification::TangentException);
    if (out.empty()) out.push_back(Classification::Balanced);
    return out;
}

bool satisfies(const SplittingType& type, const ForcedSummand& forced) {
    return std::any_of(type.degrees().begin(), type.degrees().end(), [&](Degree x) {
        return forced.relation == ForcedSummand::Relation::Equal ? x == forced.degree
                                                                 : x >= forced.degree;
    });
}

bool PredictionReport::has(Classification c) const {
    return std::find(classification.begin(), classification.end(), c) != classification.end();
}

std::vector<ForcedSummand> tangent_forced_summands(std::int64_t a, std::int64_t b, std::int64_t d) {
    const auto [q1, r1, q2, r2] = division_data(a, b, d);
    std::vector<ForcedSummand> out;
    if (q1 + q2 - 1 < (a - r1) * (b - r2)) {
        out.push_back({ForcedSummand::Relation::Equal, q1 + q2});
    }
    // T_C = O(2) can absorb one copy of O(q1 + q2 + 2) when q1 + q2 = 0.
    const std::int64_t absorbed = q1 + q2 == 0 ? 1 : 0;
    if (r1 * r2 > absorbed) out.push_back({ForcedSummand::Relation::AtLeast, q1 + q2 + 2});
    return out;
}

PredictionReport predict_report(std::int64_t a, std::int64_t b, std::int64_t d,
                                std::uint32_t characteristic) {
    PredictionReport report;
    report.params = GrassmannianParams::normalized(a, b, d, characteristic);
    a = report.params.a;
    b = report.params.b;
    report.slope = normal_slope(a, b, d);
    report.tangent_type = tangent_restriction_type(a, b, d);
    report.classification = classify_conjecture(report.params);
    if (report.has(Classification::TangentException)) {
        report.forced_summands = tangent_forced_summands(a, b, d);
    }
    report.proven_unbalanced = report.has(Classification::Degeneracy) || report.has(Classification::Char2) ||
                               report.forced_summands.size() == 2;
    switch (report.primary()) {
        case Classification::Balanced:
            report.predicted_type = balanced_type(a * b - 1, (a + b) * d - 2);
            report.assumptions.push_back("conjectured: no exception family applies");
            break;
        case Classification::Degeneracy:
            report.predicted_type = degeneracy_decomposition(a, b, d);
            report.assumptions.push_back("normal bundle in the smaller Grassmannian is balanced");
            break;
        case Classification::Char2:
            report.predicted_type = char2_projective_type(b, d);
            break;
        case Classification::TangentException:
            break;
    }
    return report;
}

}  // namespace grassbal
