#include <algorithm>
#include <thread>

#include "grassbal/induction.hpp"

namespace grassbal {

namespace {

__extension__ using i128 = __int128;

i128 floor_div(i128 num, i128 den) {
    i128 q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

i128 ceil_div(i128 num, i128 den) { return -floor_div(-num, den); }

enum LemmaId {
    kDm1,
    kSingleIneq,
    kExceptions,
    kDpos,
    kEpsilon2Nfc,
    kDelta1,
    kEpsilon2,
    kPartition,
    kLemmaCount
};

const char* const kLemmaNames[kLemmaCount] = {"dm1",    "single_ineq", "exceptions", "dpos",
                                              "epsilon2_nfc", "delta1", "epsilon2", "partition"};

struct Tally {
    std::int64_t checked[kLemmaCount] = {};
    std::vector<InstanceParams> violations[kLemmaCount];
};

// All inequalities cleared of denominators, with P = (a+b)d - 2 + an and R = ab - 1.
void sweep_tuple(i128 a, i128 b, i128 d, i128 n, Tally& tally) {
    const InstanceParams inst{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                              static_cast<std::int64_t>(d), static_cast<std::int64_t>(n)};
    auto record = [&](LemmaId id, bool ok) {
        ++tally.checked[id];
        if (!ok) tally.violations[id].push_back(inst);
    };

    const i128 P = (a + b) * d - 2 + a * n;
    const i128 R = a * b - 1;
    const i128 X = d + a * n;  // a * (d/a + n)
    const i128 Y = d + n;      // b * (d+n)/b

    record(kDm1, a * P <= R * (X + a * (d - 1)) && R * Y < b * P);

    const bool case1 = R * X > a * P;
    const bool case2 = a * Y <= b * X && R * X <= a * P;
    const bool case3 = b * X < a * Y && R * Y < b * P;
    record(kPartition, int(case1) + int(case2) + int(case3) == 1);

    if (case2) {
        // delta = (aP - R X) / (aR)
        const i128 dnum = a * P - R * X;
        const i128 dden = a * R;
        if (exception_e1(inst) || exception_e2(inst)) {
            record(kExceptions, dnum > 0 && dnum < dden &&
                                    (b * b - 2 * b + 2) * (d - 1) + (b - 2) * (b - 2) >= 0 &&
                                    (b - a - 1) * d + (a * b - a) * n + a >= 0);
        } else {
            record(kSingleIneq, ((b - a) * (a * b - a - 1) + 2) * d +
                                        (a * a * (b - 1) * (b - 1) - a * b + 2 * a) * n >=
                                    2 * a);
        }
        const i128 f = floor_div(dnum, dden);
        const i128 c = ceil_div(dnum, dden);
        record(kDelta1, (d + (b - 2) * f) * (a * (b - 1) - 1) <= ((a + b - 1) * d - a * f - 2) * (b - 1) &&
                            a * (d - c) <= (b - 1) * X);
    }
    if (case3) {
        // Cleared form of the second epsilon2 inequality at fractional epsilon.
        // The d-coefficient is (a-b)(ab-b-1)+2; with ab-a-1 in its place the
        // form fails, e.g. at (4,2,5,2).
        record(kDpos, ((a - b) * (a * b - b - 1) + 2) * d -
                              (a * a * b * b - a * a * b - a * b * b + a + b - 2) * n >=
                          2 * b);
        // epsilon = (bP - R Y) / (bR)
        const i128 enum_ = b * P - R * Y;
        const i128 eden = b * R;
        // Both epsilon2 inequalities before rounding epsilon, times eden.
        record(kEpsilon2Nfc,
               ((d * eden + (a - 2) * enum_) + n * (a - 1) * eden) * ((a - 1) * b - 1) <=
                       (((a + b - 1) * d + (a - 1) * n - 2) * eden - b * enum_) * (a - 1) &&
                   b * (d * eden - enum_) + b * (a - 1) * n * eden <= (a - 1) * Y * eden);
        const i128 f = floor_div(enum_, eden);
        const i128 c = ceil_div(enum_, eden);
        record(kEpsilon2,
               ((d + (a - 2) * f) + n * (a - 1)) * ((a - 1) * b - 1) <=
                       ((a + b - 1) * d + (a - 1) * n - b * f - 2) * (a - 1) &&
                   b * (d - c) + b * (a - 1) * n <= (a - 1) * Y);
    }
}

void sweep_range(const ParamBox& box, const std::vector<std::int64_t>& a_values, Tally& tally) {
    for (std::int64_t a : a_values) {
        for (std::int64_t b = box.b_min; b <= box.b_max; ++b) {
            for (std::int64_t d = box.d_min; d <= box.d_max; ++d) {
                for (std::int64_t n = box.n_min; n <= box.n_max; ++n) {
                    if (d == 1 && n == 0) continue;
                    sweep_tuple(a, b, d, n, tally);
                }
            }
        }
    }
}

}  // namespace

std::vector<std::string> sweep_lemma_ids() { return {std::begin(kLemmaNames), std::end(kLemmaNames)}; }

std::vector<LemmaReport> sweep_lemmas(const ParamBox& box, unsigned jobs) {
    if (box.a_min < 2 || box.b_min < 2 || box.d_min < 1 || box.n_min < 0) {
        throw std::invalid_argument("lemma sweep box needs a, b >= 2, d >= 1, n >= 0");
    }
    if (box.a_max > 100000 || box.b_max > 100000 || box.d_max > 1000000 || box.n_max > 1000000) {
        throw std::invalid_argument("lemma sweep box too large for exact 128-bit evaluation");
    }
    jobs = std::max(1u, jobs);
    std::vector<std::vector<std::int64_t>> shards(jobs);
    for (std::int64_t a = box.a_min; a <= box.a_max; ++a) shards[(a - box.a_min) % jobs].push_back(a);

    std::vector<Tally> tallies(jobs);
    if (jobs == 1) {
        sweep_range(box, shards[0], tallies[0]);
    } else {
        std::vector<std::thread> workers;
        for (unsigned j = 0; j < jobs; ++j) {
            workers.emplace_back([&, j] { sweep_range(box, shards[j], tallies[j]); });
        }
        for (auto& w : workers) w.join();
    }

    std::vector<LemmaReport> out;
    for (int id = 0; id < kLemmaCount; ++id) {
        LemmaReport rep;
        rep.lemma = kLemmaNames[id];
        rep.box = box;
        for (const Tally& t : tallies) {
            rep.tuples_checked += t.checked[id];
            rep.violations.insert(rep.violations.end(), t.violations[id].begin(), t.violations[id].end());
        }
        std::sort(rep.violations.begin(), rep.violations.end());
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace grassbal
