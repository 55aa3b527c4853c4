#include "grassbal/splitting_type.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace grassbal {

DegreeInterval::DegreeInterval(Degree lo_, Degree hi_) : lo(lo_), hi(hi_) {
    if (lo > hi) throw std::invalid_argument("degree interval with lo > hi");
}

std::ostream& operator<<(std::ostream& os, const DegreeInterval& iv) {
    return os << '[' << iv.lo << ',' << iv.hi << ']';
}

SplittingType::SplittingType(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

SplittingType::SplittingType(std::initializer_list<Degree> degrees)
    : SplittingType(std::vector<Degree>(degrees)) {}

SplittingType SplittingType::from_multiplicities(
    std::span<const std::pair<Degree, std::int64_t>> parts) {
    std::vector<Degree> out;
    for (const auto& [value, count] : parts) {
        if (count < 0) throw std::invalid_argument("negative multiplicity");
        out.insert(out.end(), static_cast<std::size_t>(count), value);
    }
    return SplittingType(std::move(out));
}

Degree SplittingType::max() const {
    if (empty()) throw std::logic_error("max of empty splitting type");
    return degrees_.front();
}

Degree SplittingType::min() const {
    if (empty()) throw std::logic_error("min of empty splitting type");
    return degrees_.back();
}

Degree SplittingType::degree() const {
    Degree total = 0;
    for (Degree x : degrees_) total = checked::add(total, x);
    return total;
}

Rational SplittingType::slope() const {
    if (empty()) throw std::logic_error("slope of rank-zero type");
    return Rational(degree(), static_cast<std::int64_t>(rank()));
}

std::int64_t SplittingType::multiplicity(Degree value) const {
    return std::count(degrees_.begin(), degrees_.end(), value);
}

std::string SplittingType::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i) os << ',';
        os << degrees_[i];
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SplittingType& t) { return os << t.str(); }

SplittingType twist(const SplittingType& t, Degree m) {
    std::vector<Degree> out;
    out.reserve(t.rank());
    for (Degree x : t.degrees()) out.push_back(checked::add(x, m));
    return SplittingType(std::move(out));
}

SplittingType dual(const SplittingType& t) {
    std::vector<Degree> out;
    out.reserve(t.rank());
    for (Degree x : t.degrees()) out.push_back(checked::sub(0, x));
    return SplittingType(std::move(out));
}

SplittingType direct_sum(const SplittingType& a, const SplittingType& b) {
    std::vector<Degree> out = a.degrees();
    out.insert(out.end(), b.degrees().begin(), b.degrees().end());
    return SplittingType(std::move(out));
}

SplittingType tensor(const SplittingType& a, const SplittingType& b) {
    std::vector<Degree> out;
    out.reserve(a.rank() * b.rank());
    for (Degree x : a.degrees()) {
        for (Degree y : b.degrees()) out.push_back(checked::add(x, y));
    }
    return SplittingType(std::move(out));
}

SplittingType power_sum(const SplittingType& t, std::int64_t copies) {
    if (copies < 0) throw std::invalid_argument("negative number of copies");
    std::vector<Degree> out;
    for (std::int64_t i = 0; i < copies; ++i) {
        out.insert(out.end(), t.degrees().begin(), t.degrees().end());
    }
    return SplittingType(std::move(out));
}

SplittingType balanced_type(std::int64_t rank, Degree degree) {
    if (rank < 1) throw std::invalid_argument("balanced_type needs rank >= 1");
    const Degree q = checked::floor_div(degree, rank);
    const std::int64_t r = degree - q * rank;
    const std::pair<Degree, std::int64_t> parts[] = {{q + 1, r}, {q, rank - r}};
    return SplittingType::from_multiplicities(parts);
}

SplittingType parity_two_balanced_type(std::int64_t rank, Degree degree, int parity) {
    if (rank < 1) throw std::invalid_argument("parity type needs rank >= 1");
    if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
    const Degree excess = checked::sub(degree, checked::mul(rank, parity));
    if (excess % 2 != 0) {
        throw NoSuchType("no 2-balanced type of rank " + std::to_string(rank) + ", degree " +
                         std::to_string(degree) + " with all entries of parity " +
                         std::to_string(parity));
    }
    // Entries are c and c + 2 with c = parity + 2j; half the excess splits as
    // rank * j + (number of c + 2 entries).
    const Degree half = excess / 2;
    const Degree j = checked::floor_div(half, rank);
    const std::int64_t upper = half - j * rank;
    const Degree base = parity + 2 * j;
    const std::pair<Degree, std::int64_t> parts[] = {{base + 2, upper}, {base, rank - upper}};
    return SplittingType::from_multiplicities(parts);
}

std::int64_t hilbert_function(const SplittingType& t, std::int64_t m) {
    std::int64_t h = 0;
    for (Degree x : t.degrees()) {
        const Degree v = checked::add(checked::add(x, m), 1);
        if (v > 0) h = checked::add(h, v);
    }
    return h;
}

std::vector<HilbertSample> hilbert_window(const SplittingType& t, std::int64_t m_lo,
                                          std::int64_t m_hi) {
    std::vector<HilbertSample> out;
    for (std::int64_t m = m_lo; m <= m_hi; ++m) out.push_back({m, hilbert_function(t, m)});
    return out;
}

SplittingType type_from_hilbert(std::span<const HilbertSample> window,
                                std::optional<std::int64_t> rank) {
    if (window.size() < 2) throw InconsistentWindow("Hilbert window needs at least two samples");
    if (window.front().h0 != 0) {
        throw InconsistentWindow("Hilbert window must start at a twist with no sections");
    }
    // First difference at m counts entries >= -m; its jumps locate the entries.
    std::vector<Degree> entries;
    std::int64_t previous_diff = 0;
    for (std::size_t i = 1; i < window.size(); ++i) {
        if (window[i].twist != window[i - 1].twist + 1) {
            throw InconsistentWindow("Hilbert window twists are not consecutive");
        }
        const std::int64_t diff = window[i].h0 - window[i - 1].h0;
        if (diff < previous_diff) {
            throw InconsistentWindow("Hilbert first differences decrease at m = " +
                                     std::to_string(window[i].twist));
        }
        entries.insert(entries.end(), static_cast<std::size_t>(diff - previous_diff),
                       -window[i].twist);
        previous_diff = diff;
    }
    if (previous_diff == 0) throw InconsistentWindow("Hilbert window never reaches a positive rank");
    if (rank && previous_diff != *rank) {
        throw InconsistentWindow("Hilbert window ends at difference " +
                                 std::to_string(previous_diff) + ", expected rank " +
                                 std::to_string(*rank));
    }
    return SplittingType(std::move(entries));
}

ModUpResult generic_mod_up(const SplittingType& t, std::int64_t k, bool general) {
    if (k < 1 || static_cast<std::size_t>(k) > t.rank()) {
        throw std::invalid_argument("generic_mod_up needs 1 <= k <= rank");
    }
    ModUpResult out;
    if (!general) {
        out.envelope = DegreeInterval(t.min(), checked::add(t.max(), k));
        return out;
    }
    std::vector<Degree> entries = t.degrees();
    for (std::int64_t step = 0; step < k; ++step) {
        // bumping the first entry of the minimal block keeps the order
        auto first_min = std::find(entries.begin(), entries.end(), entries.back());
        *first_min = checked::add(*first_min, 1);
    }
    out.type = SplittingType(std::move(entries));
    out.envelope = out.type->interval();
    out.heuristic = k > 1;
    return out;
}

DegreeInterval interval_combine(const DegreeInterval& e, const DegreeInterval& g) {
    return {std::min(e.lo, g.lo), std::max(e.hi, g.hi)};
}

DegreeInterval interval_combine(const SplittingType& e, const DegreeInterval& g) {
    return interval_combine(e.interval(), g);
}

std::string to_string(Dominance d) {
    switch (d) {
        case Dominance::MoreBalanced: return "MoreBalanced";
        case Dominance::LessBalanced: return "LessBalanced";
        case Dominance::Equal: return "Equal";
        case Dominance::Incomparable: return "Incomparable";
    }
    return "?";
}

Dominance dominance_compare(const SplittingType& lhs, const SplittingType& rhs) {
    if (lhs.rank() != rhs.rank() || lhs.degree() != rhs.degree()) {
        throw RankDegreeMismatch("dominance_compare of " + lhs.str() + " and " + rhs.str());
    }
    bool some_less = false;
    bool some_greater = false;
    Degree left = 0;
    Degree right = 0;
    for (std::size_t i = 0; i < lhs.rank(); ++i) {
        left += lhs.degrees()[i];
        right += rhs.degrees()[i];
        if (left < right) some_less = true;
        if (left > right) some_greater = true;
    }
    if (some_less && some_greater) return Dominance::Incomparable;
    if (some_less) return Dominance::MoreBalanced;
    if (some_greater) return Dominance::LessBalanced;
    return Dominance::Equal;
}

std::vector<SplittingType> dominance_maxima(std::span<const SplittingType> types) {
    const std::set<SplittingType> distinct(types.begin(), types.end());
    std::vector<SplittingType> out;
    for (const auto& candidate : distinct) {
        bool beaten = false;
        for (const auto& other : distinct) {
            if (dominance_compare(other, candidate) == Dominance::MoreBalanced) {
                beaten = true;
                break;
            }
        }
        if (!beaten) out.push_back(candidate);
    }
    return out;
}

}  // namespace grassbal
