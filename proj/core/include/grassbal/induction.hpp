#pragma once

// Exact replay of the inductive argument that N_C[x_1 -> p_1]...[x_n -> p_n]
// is 2-balanced (or bounded above) for a general curve in Gr(a, a+b).
//
// Each instance (a, b, d, n) falls into a base case or one of three regimes
// according to where d/a + n sits relative to the slope mu and to (d+n)/b.
// The regimes recurse to smaller Grassmannians; every inequality the argument
// relies on is evaluated exactly and recorded in the certificate.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "grassbal/rational.hpp"
#include "grassbal/splitting_type.hpp"

namespace grassbal {

struct InstanceParams {
    std::int64_t a = 1;
    std::int64_t b = 2;
    std::int64_t d = 1;
    std::int64_t n = 0;

    auto key() const { return std::tie(a, b, d, n); }
    friend bool operator==(const InstanceParams&, const InstanceParams&) = default;
    friend bool operator<(const InstanceParams& x, const InstanceParams& y) { return x.key() < y.key(); }
    std::string str() const;
};

enum class Regime { BaseLine, BaseProjective, Case1, Case2, Case3 };
std::string to_string(Regime r);

struct RegimeInfo {
    Regime regime;
    /// mu - d/a - n, set in Case2.
    std::optional<Rational> delta;
    /// mu - (d+n)/b, set in Case3.
    std::optional<Rational> epsilon;
};

/// Validates a >= 1, b >= 2, d >= 1, n >= 0.
void validate(const InstanceParams& inst);

/// mu(N') = ((a+b)d - 2 + an) / (ab - 1).
Rational instance_slope(const InstanceParams& inst);

RegimeInfo classify_regime(const InstanceParams& inst);

enum class Relation { Less, LessEq, Equal, Greater, GreaterEq };
std::string to_string(Relation r);

struct CheckResult {
    std::string name;
    Rational lhs;
    Relation relation;
    Rational rhs;
    bool pass;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

CheckResult make_check(std::string name, Rational lhs, Relation rel, Rational rhs);

/// Which part of a regime's argument to replay.
enum class Branch { Shared, Floor, Ceil };

struct CheckContext {
    Regime regime;
    Branch branch = Branch::Shared;
};

/// Which of the two exceptional families of the Case2 argument applies.
bool exception_e1(const InstanceParams& inst);
bool exception_e2(const InstanceParams& inst);

class ProofStepFailed : public std::runtime_error {
public:
    ProofStepFailed(std::string step, InstanceParams inst);
    const std::string& step() const { return step_; }
    const InstanceParams& instance() const { return inst_; }

private:
    std::string step_;
    InstanceParams inst_;
};

class RecursionInvariantBroken : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluates the named inequalities for one regime/branch without throwing.
std::vector<CheckResult> evaluate_inequalities(const InstanceParams& inst, const CheckContext& context);

/// As evaluate_inequalities, but throws ProofStepFailed on the first failure.
std::vector<CheckResult> check_inequalities(const InstanceParams& inst, const CheckContext& context);

struct TwoBalanced {
    DegreeInterval interval;
};
struct BoundedAbove {
    std::int64_t cap;
};
using Conclusion = std::variant<TwoBalanced, BoundedAbove>;

struct Certificate {
    InstanceParams instance;
    Regime regime;
    std::optional<Rational> delta;
    std::optional<Rational> epsilon;
    Rational slope;
    std::vector<CheckResult> checks;
    std::vector<std::shared_ptr<const Certificate>> children;
    Conclusion conclusion;
    /// Splitting type recorded for the line base case.
    std::optional<SplittingType> base_type;

    bool two_balanced() const { return std::holds_alternative<TwoBalanced>(conclusion); }
    const DegreeInterval& interval() const { return std::get<TwoBalanced>(conclusion).interval; }
};

/// Memoizing certifier. Not thread-safe; use one per job.
class Certifier {
public:
    std::shared_ptr<const Certificate> certify(const InstanceParams& inst);
    std::size_t memo_size() const { return memo_.size(); }

private:
    std::shared_ptr<const Certificate> build(const InstanceParams& inst, int depth_budget);
    std::map<InstanceParams, std::shared_ptr<const Certificate>> memo_;
};

/// One-shot convenience wrapper around Certifier.
std::shared_ptr<const Certificate> certify(const InstanceParams& inst);

/// Re-evaluates every node's checks and regime and compares them with the
/// stored ones. Returns the offending instance, if any.
std::optional<InstanceParams> revalidate(const Certificate& cert);

/// Depth of the certificate tree (a leaf has depth 1).
std::size_t certificate_depth(const Certificate& cert);

// --- exhaustive sweeps -----------------------------------------------------

struct ParamBox {
    std::int64_t a_min = 2, a_max = 2;
    std::int64_t b_min = 2, b_max = 2;
    std::int64_t d_min = 1, d_max = 1;
    std::int64_t n_min = 0, n_max = 0;
};

struct LemmaReport {
    std::string lemma;
    ParamBox box;
    std::int64_t tuples_checked = 0;
    std::vector<InstanceParams> violations;

    bool pass() const { return violations.empty(); }
};

/// Lemma ids reported by sweep_lemmas, in output order.
std::vector<std::string> sweep_lemma_ids();

/// Exhaustive integer-arithmetic sweep of every inequality of the argument
/// over a finite box (a, b >= 2). `jobs` > 1 splits the a-range across threads.
std::vector<LemmaReport> sweep_lemmas(const ParamBox& box, unsigned jobs = 1);

}  // namespace grassbal
