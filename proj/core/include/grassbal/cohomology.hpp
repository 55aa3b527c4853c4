#pragma once

// Splitting types of normal bundles of random rational curves in Gr(a, a+b)
// over F_p, computed from h^0 of twists of the conormal bundle.
//
// A curve is a chart phi: (a+b) x a matrix of forms, column i of degree e_i,
// presenting S|_C = sum O(-e_i) inside V (x) O. Sections of N^dual(m) are the
// a x (a+b) matrices psi (row i of degree m - e_i) with psi phi = 0 and
// trace(psi d_s phi) = 0.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "grassbal/binary_form.hpp"
#include "grassbal/poly_matrix.hpp"
#include "grassbal/prime_field.hpp"
#include "grassbal/splitting_type.hpp"

namespace grassbal {

struct CurveChart {
    std::int64_t a = 1;
    std::int64_t b = 2;
    std::int64_t d = 1;
    PrimeField field;
    /// Column degrees, non-increasing, summing to d.
    std::vector<int> e;
    PolyMatrix phi{PrimeField(), 0, 0};
    std::uint64_t seed = 0;
};

class SamplingExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class InvalidChart : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class InvalidModification : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class InvalidProjection : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class Ramified : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class WindowOverrun : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deterministic generator used everywhere in the engine.
using Rng = std::mt19937_64;

/// splitmix64 finalizer, used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t x);
/// Seed for one (a, b, d, p, index) job under a global seed.
std::uint64_t job_seed(std::uint64_t global, std::int64_t a, std::int64_t b, std::int64_t d,
                       std::uint32_t p, std::uint64_t index);

/// Balanced partition of d into `parts` non-negative parts, non-increasing.
std::vector<int> balanced_partition(std::int64_t d, std::int64_t parts);

/// True when the a x a minors of phi have constant gcd.
bool chart_is_valid(const PolyMatrix& phi);

/// Wraps an explicit matrix; throws InvalidChart if the shape or degrees do
/// not match or the minors have a common zero.
CurveChart make_chart(std::int64_t a, std::int64_t b, PolyMatrix phi, std::uint64_t seed = 0);

/// Uniform random chart with balanced column degrees, resampled until valid.
/// Needs a >= 1, b >= 1, ab >= 2, d >= 1.
CurveChart sample_chart(std::int64_t a, std::int64_t b, std::int64_t d, std::uint32_t p,
                        std::uint64_t seed, int max_attempts = 200);

enum class ModKind { Lower, Upper };
std::string to_string(ModKind k);

/// Lower: vec is a point p of V with p not in the column span of phi(x).
/// Upper: vec is a covector h with h phi(x) != 0.
struct ModificationSpec {
    LinePoint point;
    ModKind kind = ModKind::Lower;
    std::vector<Residue> vec;
};

/// Throws InvalidModification when `mod` violates its genericity condition.
void validate_modification(const CurveChart& chart, const ModificationSpec& mod);

/// Fresh random vector/covector at `point`, redrawn until valid.
ModificationSpec random_modification(const CurveChart& chart, ModKind kind, LinePoint point, Rng& rng);

/// Specs of the given kinds at the distinct points (j : 1), j = 0, 1, ...
std::vector<ModificationSpec> random_modifications(const CurveChart& chart,
                                                   const std::vector<ModKind>& kinds, Rng& rng);

/// Rank and expected degree of the modified normal bundle.
std::int64_t normal_rank(const CurveChart& chart);
std::int64_t modified_normal_degree(const CurveChart& chart, const std::vector<ModificationSpec>& mods);

/// h^0 of N'^dual(m), N' the modified normal bundle.
std::int64_t normal_sections_dim(const CurveChart& chart, const std::vector<ModificationSpec>& mods,
                                 std::int64_t m);

struct BundleDiagnostics {
    bool rank_ok = false;
    bool degree_ok = false;
    /// Riemann-Roch identity at the top two twists of the window.
    bool riemann_roch_ok = false;
    std::int64_t m_lo = 0;
    std::int64_t m_hi = 0;
    std::vector<HilbertSample> window;
};

struct ComputedBundle {
    std::int64_t a = 0, b = 0, d = 0;
    std::uint32_t p = 0;
    std::int64_t n_lower = 0, n_upper = 0;
    std::uint64_t seed = 0;
    SplittingType type;
    BundleDiagnostics diagnostics;
};

struct WindowOptions {
    /// Twists scanned past the expected degree before giving up.
    std::int64_t overrun_slack = 2;
};

/// Splitting type of the modified normal bundle. Throws Ramified when the
/// rank or degree diagnostics fail, WindowOverrun when the Hilbert function
/// does not stabilize in time.
ComputedBundle normal_splitting(const CurveChart& chart, const std::vector<ModificationSpec>& mods = {},
                                const WindowOptions& options = {});

enum class RestrictedBundle { Q, SdualCheck };

/// Q: type of Q|_C from covector rows r with r phi = 0. SdualCheck: type of
/// S^dual|_C from the rank of c -> phi c, which should be e.
SplittingType restricted_bundle_splitting(const CurveChart& chart, RestrictedBundle which);

/// Deletes one ambient coordinate: projection from a coordinate point to
/// Gr(a, a+b-1). Throws InvalidProjection if the result is not a valid chart.
CurveChart project_chart(const CurveChart& chart, std::size_t coordinate_index);

// --- sampling driver -------------------------------------------------------

struct SampleRequest {
    std::int64_t a = 1, b = 2, d = 1;
    std::uint32_t p = PrimeField::kGeneralModulus;
    int samples = 5;
    std::uint64_t seed = 1;
    std::vector<ModKind> mods;
    /// Extra draws allowed to replace ramified or degenerate samples.
    int max_rejections = 200;
};

struct SampleOutcome {
    std::vector<ComputedBundle> bundles;
    /// Dominance-maximal observed types.
    std::vector<SplittingType> maxima;
    int rejected = 0;
};

SampleOutcome sample_normal_bundles(const SampleRequest& request);

}  // namespace grassbal
