#pragma once

// Cross-checks engine witnesses against the classifier and the induction
// certificates, one parameter cell at a time.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "grassbal/cohomology.hpp"
#include "grassbal/induction.hpp"
#include "grassbal/json_io.hpp"
#include "grassbal/predictor.hpp"

namespace grassbal {

enum class Verdict { Confirmed, ProvenExceptionConfirmed, Inconclusive, Mismatch };
std::string to_string(Verdict v);

struct VerificationRecord {
    std::int64_t a = 0, b = 0, d = 0, n = 0;
    std::uint32_t p = 0;
    PredictionReport prediction;
    /// Absent when certification failed (see proof_error).
    std::optional<Conclusion> certificate;
    std::string proof_error;
    /// Every accepted sample, in draw order.
    std::vector<ComputedBundle> samples;
    std::vector<SplittingType> maxima;
    int rejected = 0;
    bool balanced_witness = false;
    bool two_balanced_witness = false;
    bool riemann_roch_ok = true;
    /// A 2-balanced maximal witness leaves the certificate interval.
    bool outside_interval = false;
    bool char0_proxy = false;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> notes;
    double seconds = 0;

    bool failed() const { return verdict == Verdict::Mismatch || !proof_error.empty(); }
};

struct CellRequest {
    std::int64_t a = 1, b = 2, d = 1;
    std::uint32_t p = PrimeField::kGeneralModulus;
    int samples = 10;
    std::uint64_t seed = 1;
    std::vector<ModKind> mods;
};

/// Samples one cell and assigns a verdict. Predictions use (a, b) ordered
/// a <= b; the engine runs on the caller's (a, b).
VerificationRecord verify_cell(const CellRequest& request);

struct VerifyBox {
    std::int64_t a_min = 1, a_max = 2;
    std::int64_t b_max = 3;
    std::int64_t d_min = 1, d_max = 3;
    /// Upper bound on a + b; 0 means none.
    std::int64_t ab_sum_max = 0;
    std::uint32_t p = PrimeField::kGeneralModulus;
    int samples = 10;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
};

/// Cells 1 <= a <= b, 2 <= b, inside the box, sorted by (a, b, d).
std::vector<CellRequest> box_cells(const VerifyBox& box);

/// Runs every cell (concurrently when jobs > 1); records come back sorted.
std::vector<VerificationRecord> verify_box(const VerifyBox& box);

Json to_json(const VerificationRecord& record, bool with_timing = false);
Json run_header(const VerifyBox& box, const std::string& version);

}  // namespace grassbal
