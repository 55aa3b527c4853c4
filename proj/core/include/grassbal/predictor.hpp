#pragma once

// Closed-form predictions for normal bundles of general rational curves in
// Gr(a, a+b): the restricted tangent bundle, the slope, the three families of
// non-balanced cases, and the conjectured classification.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grassbal/rational.hpp"
#include "grassbal/splitting_type.hpp"

namespace grassbal {

/// (a, b, d, char) with the duality swap applied so that a <= b.
struct GrassmannianParams {
    std::int64_t a = 1;
    std::int64_t b = 2;
    std::int64_t d = 1;
    /// 0 for characteristic zero, otherwise a prime.
    std::uint32_t characteristic = 0;
    /// True when the caller's (a, b) arrived with a > b.
    bool swapped = false;

    /// Validates and normalizes; throws std::invalid_argument.
    static GrassmannianParams normalized(std::int64_t a, std::int64_t b, std::int64_t d,
                                         std::uint32_t characteristic = 0);
};

/// d = a q1 + r1 = b q2 + r2.
struct DivisionData {
    std::int64_t q1, r1, q2, r2;
};
DivisionData division_data(std::int64_t a, std::int64_t b, std::int64_t d);

/// Splitting type of T_Gr restricted to a general curve (tensor of the
/// balanced S^dual and Q types).
SplittingType tangent_restriction_type(std::int64_t a, std::int64_t b, std::int64_t d);

class DegenerateGrassmannian : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// ((a+b)d - 2 + a n) / (ab - 1), the slope of N_C after n lower modifications.
Rational normal_slope(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t n = 0);

/// Normal bundle type of a general degree-d rational curve in P^b in
/// characteristic 2.
SplittingType char2_projective_type(std::int64_t b, std::int64_t d);

class NotDegenerateRange : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Splitting of N_C when the curve is forced into a smaller Grassmannian
/// (1 < d < a or a < d < b, with a <= b). The inner normal bundle is taken to
/// be balanced.
SplittingType degeneracy_decomposition(std::int64_t a, std::int64_t b, std::int64_t d);

enum class Classification { Balanced, Degeneracy, Char2, TangentException };

std::string to_string(Classification c);

/// Every exception family that applies, in listing order (Degeneracy, Char2,
/// TangentException); {Balanced} when none does. Expects a <= b.
std::vector<Classification> classify_conjecture(const GrassmannianParams& params);

/// A summand degree the normal bundle is forced to contain.
struct ForcedSummand {
    enum class Relation { Equal, AtLeast };
    Relation relation;
    std::int64_t degree;

    friend bool operator==(const ForcedSummand&, const ForcedSummand&) = default;
};

/// True when `type` contains a summand meeting the constraint.
bool satisfies(const SplittingType& type, const ForcedSummand& forced);

struct PredictionReport {
    GrassmannianParams params;
    Rational slope;
    SplittingType tangent_type;
    /// Primary label first.
    std::vector<Classification> classification;
    /// Absent when the type is not determined (tangent splitting exceptions).
    std::optional<SplittingType> predicted_type;
    std::vector<ForcedSummand> forced_summands;
    /// True when non-balancedness is proven: degeneracy and characteristic 2
    /// cases, and tangent cases where both forced summands are present.
    bool proven_unbalanced = false;
    /// Assumptions the predicted type rests on (empty if none).
    std::vector<std::string> assumptions;
    /// Always "2-balanced": what holds for every (a, b, d).
    std::string theorem_guarantee = "2-balanced";

    Classification primary() const { return classification.front(); }
    bool has(Classification c) const;
};

/// Forced summands from comparing cohomology of the tangent sequence. The
/// lower one is O(q1+q2) exactly; the upper one is dropped when T_C itself
/// could be the only summand of that degree (lines).
std::vector<ForcedSummand> tangent_forced_summands(std::int64_t a, std::int64_t b, std::int64_t d);

PredictionReport predict_report(std::int64_t a, std::int64_t b, std::int64_t d,
                                std::uint32_t characteristic = 0);

}  // namespace grassbal
