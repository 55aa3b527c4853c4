#pragma once

// Splitting types of vector bundles on the projective line, their Hilbert
// functions, and the degree-interval rules used to combine bounds across
// short exact sequences.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grassbal/rational.hpp"

namespace grassbal {

using Degree = std::int64_t;

/// Closed interval [lo, hi] bounding every summand degree of a bundle.
struct DegreeInterval {
    Degree lo = 0;
    Degree hi = 0;

    DegreeInterval() = default;
    DegreeInterval(Degree lo_, Degree hi_);

    Degree length() const { return hi - lo; }
    bool contains(Degree x) const { return lo <= x && x <= hi; }
    friend bool operator==(const DegreeInterval&, const DegreeInterval&) = default;
};

std::ostream& operator<<(std::ostream& os, const DegreeInterval& iv);

/// Multiset of summand degrees a_1 >= ... >= a_r of a bundle on P^1.
///
/// Entries are kept sorted non-increasing, so equality is multiset equality.
class SplittingType {
public:
    SplittingType() = default;
    explicit SplittingType(std::vector<Degree> degrees);
    SplittingType(std::initializer_list<Degree> degrees);

    /// Builds a type from (degree, multiplicity) pairs, skipping zero counts.
    static SplittingType from_multiplicities(
        std::span<const std::pair<Degree, std::int64_t>> parts);

    const std::vector<Degree>& degrees() const { return degrees_; }
    std::size_t rank() const { return degrees_.size(); }
    bool empty() const { return degrees_.empty(); }
    Degree max() const;
    Degree min() const;
    Degree degree() const;
    Rational slope() const;
    Degree spread() const { return max() - min(); }
    bool is_balanced(Degree j = 1) const { return spread() <= j; }
    DegreeInterval interval() const { return {min(), max()}; }

    /// Number of summands of exactly the given degree.
    std::int64_t multiplicity(Degree value) const;

    std::string str() const;

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
    /// Lexicographic on the sorted entries; only meant for ordered containers.
    friend auto operator<=>(const SplittingType& a, const SplittingType& b) {
        return a.degrees_ <=> b.degrees_;
    }

private:
    std::vector<Degree> degrees_;
};

std::ostream& operator<<(std::ostream& os, const SplittingType& t);

// --- type arithmetic -------------------------------------------------------

SplittingType twist(const SplittingType& t, Degree m);
SplittingType dual(const SplittingType& t);
SplittingType direct_sum(const SplittingType& a, const SplittingType& b);
SplittingType tensor(const SplittingType& a, const SplittingType& b);
/// `copies` copies of t.
SplittingType power_sum(const SplittingType& t, std::int64_t copies);

/// The unique type with spread <= 1 and the given rank and degree.
SplittingType balanced_type(std::int64_t rank, Degree degree);

class NoSuchType : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Unique type of spread <= 2 with every entry congruent to `parity` mod 2.
/// Throws NoSuchType when degree - rank * parity is odd.
SplittingType parity_two_balanced_type(std::int64_t rank, Degree degree, int parity);

// --- Hilbert functions -----------------------------------------------------

/// h^0(E(m)) = sum_i max(0, a_i + m + 1).
std::int64_t hilbert_function(const SplittingType& t, std::int64_t m);

struct HilbertSample {
    std::int64_t twist;
    std::int64_t h0;
};

class InconsistentWindow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Hilbert samples h(m) for m in [m_lo, m_hi].
std::vector<HilbertSample> hilbert_window(const SplittingType& t, std::int64_t m_lo,
                                          std::int64_t m_hi);

/// Recovers a type from consecutive Hilbert samples. The window must start at a
/// twist with h = 0 and end where the first difference has reached the rank.
/// When `rank` is given, the final difference must equal it; otherwise the rank
/// is read off the final difference.
SplittingType type_from_hilbert(std::span<const HilbertSample> window,
                                std::optional<std::int64_t> rank = std::nullopt);

// --- modifications and interval rules --------------------------------------

struct ModUpResult {
    /// Present when the outcome is a definite type (general modifications).
    std::optional<SplittingType> type;
    /// Guaranteed envelope of all summand degrees.
    DegreeInterval envelope;
    /// True when the type comes from iterating the rank-one rule k > 1 times,
    /// which is not a proven statement.
    bool heuristic = false;
};

/// Effect of k successive positive rank-one modifications at general points.
/// With `general` the smallest entry rises at each step; otherwise only the
/// envelope [min, max + k] is guaranteed.
ModUpResult generic_mod_up(const SplittingType& t, std::int64_t k, bool general);

/// Envelope [min(lo), max(hi)] for the middle term of an extension of G by E.
DegreeInterval interval_combine(const DegreeInterval& e, const DegreeInterval& g);
DegreeInterval interval_combine(const SplittingType& e, const DegreeInterval& g);

enum class Dominance { MoreBalanced, LessBalanced, Equal, Incomparable };

std::string to_string(Dominance d);

class RankDegreeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dominance (prefix-sum) order on types of equal rank and degree. Smaller
/// prefix sums mean more balanced.
Dominance dominance_compare(const SplittingType& lhs, const SplittingType& rhs);

/// Maximal elements of `types` under dominance (deduplicated, sorted).
std::vector<SplittingType> dominance_maxima(std::span<const SplittingType> types);

}  // namespace grassbal
