#include "grassbal/induction.hpp"

#include <algorithm>
#include <sstream>

#include "grassbal/predictor.hpp"

namespace grassbal {

std::string InstanceParams::str() const {
    std::ostringstream os;
    os << "(a=" << a << ", b=" << b << ", d=" << d << ", n=" << n << ")";
    return os.str();
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::BaseLine: return "BaseLine";
        case Regime::BaseProjective: return "BaseProjective";
        case Regime::Case1: return "Case1";
        case Regime::Case2: return "Case2";
        case Regime::Case3: return "Case3";
    }
    return "?";
}

std::string to_string(Relation r) {
    switch (r) {
        case Relation::Less: return "<";
        case Relation::LessEq: return "<=";
        case Relation::Equal: return "==";
        case Relation::Greater: return ">";
        case Relation::GreaterEq: return ">=";
    }
    return "?";
}

void validate(const InstanceParams& inst) {
    if (inst.a < 1 || inst.b < 2 || inst.d < 1 || inst.n < 0) {
        throw std::invalid_argument("instance " + inst.str() + " needs a >= 1, b >= 2, d >= 1, n >= 0");
    }
}

Rational instance_slope(const InstanceParams& inst) {
    const auto [a, b, d, n] = inst;
    return Rational(checked::add(checked::sub(checked::mul(a + b, d), 2), checked::mul(a, n)),
                    checked::sub(checked::mul(a, b), 1));
}

namespace {

// d/a + n, the slope of S^dual(n).
Rational sub_slope(const InstanceParams& inst) { return Rational(inst.d, inst.a) + inst.n; }
// (d+n)/b, the slope of Q with n modifications.
Rational quot_slope(const InstanceParams& inst) { return Rational(inst.d + inst.n, inst.b); }

bool is_base_line(const InstanceParams& inst) { return inst.d == 1 && inst.n == 0; }

}  // namespace

RegimeInfo classify_regime(const InstanceParams& inst) {
    validate(inst);
    if (is_base_line(inst)) return {Regime::BaseLine, std::nullopt, std::nullopt};
    if (inst.a == 1) return {Regime::BaseProjective, std::nullopt, std::nullopt};
    const Rational mu = instance_slope(inst);
    const Rational x = sub_slope(inst);
    const Rational y = quot_slope(inst);
    if (x > mu) return {Regime::Case1, std::nullopt, std::nullopt};
    if (y <= x) return {Regime::Case2, mu - x, std::nullopt};
    return {Regime::Case3, std::nullopt, mu - y};
}

CheckResult make_check(std::string name, Rational lhs, Relation rel, Rational rhs) {
    bool pass = false;
    switch (rel) {
        case Relation::Less: pass = lhs < rhs; break;
        case Relation::LessEq: pass = lhs <= rhs; break;
        case Relation::Equal: pass = lhs == rhs; break;
        case Relation::Greater: pass = lhs > rhs; break;
        case Relation::GreaterEq: pass = lhs >= rhs; break;
    }
    return {std::move(name), lhs, rel, rhs, pass};
}

bool exception_e1(const InstanceParams& inst) {
    return inst.n == 0 && inst.b == inst.a && inst.d <= inst.a - 1;
}

bool exception_e2(const InstanceParams& inst) {
    const auto [a, b, d, n] = inst;
    return n == 1 && 3 * b <= a + 1 && d * (a - b) == a * (b - 1);
}

ProofStepFailed::ProofStepFailed(std::string step, InstanceParams inst)
    : std::runtime_error("proof step '" + step + "' failed at " + inst.str()),
      step_(std::move(step)),
      inst_(inst) {}

namespace {

// Base case a = 1: the characteristic-2 type after n general modifications
// (each raising a smallest entry). Its range has length <= 2 and contains the
// balanced type of the same slope, so it bounds the characteristic != 2 case too.
SplittingType projective_envelope_type(const InstanceParams& inst) {
    SplittingType t = char2_projective_type(inst.b, inst.d);
    for (std::int64_t i = 0; i < inst.n; ++i) t = *generic_mod_up(t, 1, true).type;
    return t;
}

}  // namespace

std::vector<CheckResult> evaluate_inequalities(const InstanceParams& inst, const CheckContext& context) {
    validate(inst);
    const auto [a, b, d, n] = inst;
    const Rational mu = instance_slope(inst);
    const Rational x = sub_slope(inst);
    const Rational y = quot_slope(inst);
    std::vector<CheckResult> out;
    auto add = [&](std::string name, Rational lhs, Relation rel, Rational rhs) {
        out.push_back(make_check(std::move(name), lhs, rel, rhs));
    };
    auto add_dm1 = [&] {
        add("dm1.first", mu - x, Relation::LessEq, Rational(d - 1));
        add("dm1.second", y, Relation::Less, mu);
    };

    switch (context.regime) {
        case Regime::BaseLine:
            break;

        case Regime::BaseProjective: {
            if (context.branch != Branch::Shared) break;
            const SplittingType t = projective_envelope_type(inst);
            add("base_projective.spread", Rational(t.spread()), Relation::LessEq, Rational(2));
            add("base_projective.degree", Rational(t.degree()), Relation::Equal,
                mu * Rational(b - 1));
            add("base_projective.floor_inside", Rational(t.min()), Relation::LessEq, Rational(mu.floor()));
            add("base_projective.ceil_inside", Rational(mu.ceil()), Relation::LessEq, Rational(t.max()));
            break;
        }

        case Regime::Case1:
            if (context.branch != Branch::Shared) break;
            add("case1.regime", x, Relation::Greater, mu);
            // quotient (b-1, a, d, 0) is 2-balanced since d/(b-1) <= its slope
            add("case1.quotient_n0", Rational(d, b - 1), Relation::LessEq,
                instance_slope({b - 1, a, d, 0}));
            break;

        case Regime::Case2: {
            const Rational delta = mu - x;
            if (context.branch == Branch::Shared) {
                add_dm1();
                add("case2.regime_lower", y, Relation::LessEq, x);
                add("case2.regime_upper", x, Relation::LessEq, mu);
                add("delta.nonnegative", delta, Relation::GreaterEq, Rational(0));
                add("delta.at_most_d_minus_1", delta, Relation::LessEq, Rational(d - 1));
                if (exception_e1(inst) || exception_e2(inst)) {
                    add("exception.regime_equality", y, Relation::Equal, x);
                    add("exception.delta_positive", delta, Relation::Greater, Rational(0));
                    add("exception.delta_below_one", delta, Relation::Less, Rational(1));
                    add("exception.final_first",
                        Rational((b * b - 2 * b + 2) * (d - 1) + (b - 2) * (b - 2)), Relation::GreaterEq,
                        Rational(0));
                    add("exception.final_second", Rational((b - a - 1) * d + (a * b - a) * n + a),
                        Relation::GreaterEq, Rational(0));
                } else {
                    const std::int64_t lhs = ((b - a) * (a * b - a - 1) + 2) * d +
                                             (a * a * (b - 1) * (b - 1) - a * b + 2 * a) * n;
                    add("single_ineq", Rational(lhs), Relation::GreaterEq, Rational(2 * a));
                }
            } else if (context.branch == Branch::Floor) {
                const std::int64_t f = delta.floor();
                add("ineq_floor", Rational(d - f, b - 1) + f, Relation::LessEq,
                    instance_slope({b - 1, a, d - f, f}));
                add("delta1.floor", Rational(d + (b - 2) * f, b - 1), Relation::LessEq,
                    Rational((a + b - 1) * d - a * f - 2, a * (b - 1) - 1));
            } else {
                const std::int64_t c = delta.ceil();
                add("ineq_ceil", Rational((Rational(d - c, b - 1) + c).ceil()), Relation::LessEq,
                    Rational(x.ceil() + c));
                add("delta1.ceil", Rational(d - c, b - 1), Relation::LessEq, x);
            }
            break;
        }

        case Regime::Case3: {
            const Rational epsilon = mu - y;
            if (context.branch == Branch::Shared) {
                add_dm1();
                add("case3.regime", x, Relation::Less, y);
                add("epsilon.positive", epsilon, Relation::Greater, Rational(0));
                add("epsilon.at_most_d_minus_1", epsilon, Relation::LessEq, Rational(d - 1));
                add("dpos.coefficient", Rational((a - b) * (a * b - b - 1) + 2), Relation::Greater,
                    Rational(0));
                const std::int64_t lhs = ((a - b) * (a * b - b - 1) + 2) * d -
                                         (a * a * b * b - a * a * b - a * b * b + a + b - 2) * n;
                add("dpos", Rational(lhs), Relation::GreaterEq, Rational(2 * b));
            } else if (context.branch == Branch::Floor) {
                const std::int64_t f = epsilon.floor();
                add("ineq_eps_floor", Rational(d - f, a - 1) + n + f, Relation::LessEq,
                    instance_slope({a - 1, b, d - f, n + f}));
                add("epsilon2.floor", Rational(d + (a - 2) * f, a - 1) + n, Relation::LessEq,
                    Rational((a + b - 1) * d + (a - 1) * n - b * f - 2, (a - 1) * b - 1));
            } else {
                const std::int64_t c = epsilon.ceil();
                add("ineq_eps_ceil", Rational((Rational(d - c, a - 1) + n + c).ceil()), Relation::LessEq,
                    Rational(y.ceil() + c));
                add("epsilon2.ceil", Rational(d - c, a - 1) + n, Relation::LessEq, y);
            }
            break;
        }
    }
    return out;
}

std::vector<CheckResult> check_inequalities(const InstanceParams& inst, const CheckContext& context) {
    auto out = evaluate_inequalities(inst, context);
    for (const auto& c : out) {
        if (!c.pass) throw ProofStepFailed(c.name, inst);
    }
    return out;
}

namespace {

struct ChildPlan {
    InstanceParams floor_child;
    InstanceParams ceil_child;
    DegreeInterval interval;
    std::int64_t ceil_cap_bound;
};

void require_recursion(const InstanceParams& parent, const InstanceParams& child) {
    if (child.d < 1) {
        throw RecursionInvariantBroken("child " + child.str() + " of " + parent.str() + " has degree < 1");
    }
    if (child.a + child.b >= parent.a + parent.b) {
        throw RecursionInvariantBroken("child " + child.str() + " of " + parent.str() +
                                       " does not decrease a + b");
    }
}

ChildPlan plan_children(const InstanceParams& inst, const RegimeInfo& info) {
    const auto [a, b, d, n] = inst;
    if (info.regime == Regime::Case2) {
        const Rational x = sub_slope(inst);
        const std::int64_t f = info.delta->floor();
        const std::int64_t c = info.delta->ceil();
        return {{b - 1, a, d - f, f},
                {b - 1, a, d - c, c},
                DegreeInterval(x.floor() + f, x.ceil() + c),
                x.ceil() + c};
    }
    const Rational y = quot_slope(inst);
    const std::int64_t f = info.epsilon->floor();
    const std::int64_t c = info.epsilon->ceil();
    return {{a - 1, b, d - f, n + f},
            {a - 1, b, d - c, n + c},
            DegreeInterval(y.floor() + f, y.ceil() + c),
            y.ceil() + c};
}

// Checks tying a node to its children's conclusions.
std::vector<CheckResult> child_checks(const RegimeInfo& info, const ChildPlan* plan,
                                      const std::vector<std::shared_ptr<const Certificate>>& children) {
    std::vector<CheckResult> out;
    if (info.regime == Regime::Case1) {
        out.push_back(make_check("quotient.two_balanced", Rational(children[0]->two_balanced() ? 1 : 0),
                                 Relation::GreaterEq, Rational(1)));
    } else if (plan) {
        out.push_back(make_check("floor_child.two_balanced",
                                 Rational(children[0]->two_balanced() ? 1 : 0), Relation::GreaterEq,
                                 Rational(1)));
        if (const auto* bounded = std::get_if<BoundedAbove>(&children[1]->conclusion)) {
            out.push_back(make_check("ceil_child.cap", Rational(bounded->cap), Relation::LessEq,
                                     Rational(plan->ceil_cap_bound)));
        }
    }
    return out;
}

std::vector<CheckResult> node_checks(const InstanceParams& inst, const RegimeInfo& info) {
    std::vector<CheckResult> out;
    for (Branch br : {Branch::Shared, Branch::Floor, Branch::Ceil}) {
        auto part = evaluate_inequalities(inst, {info.regime, br});
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace

std::shared_ptr<const Certificate> Certifier::certify(const InstanceParams& inst) {
    validate(inst);
    return build(inst, static_cast<int>(inst.a + inst.b) + 1);
}

std::shared_ptr<const Certificate> Certifier::build(const InstanceParams& inst, int depth_budget) {
    if (auto it = memo_.find(inst); it != memo_.end()) return it->second;
    if (depth_budget <= 0) throw RecursionInvariantBroken("recursion depth exceeded at " + inst.str());

    const RegimeInfo info = classify_regime(inst);
    auto cert = std::make_shared<Certificate>();
    cert->instance = inst;
    cert->regime = info.regime;
    cert->delta = info.delta;
    cert->epsilon = info.epsilon;
    cert->slope = instance_slope(inst);
    cert->checks = node_checks(inst, info);
    for (const auto& c : cert->checks) {
        if (!c.pass) throw ProofStepFailed(c.name, inst);
    }

    const auto [a, b, d, n] = inst;
    std::optional<ChildPlan> plan;
    switch (info.regime) {
        case Regime::BaseLine: {
            const std::pair<Degree, std::int64_t> parts[] = {{1, a + b - 2}, {0, (a - 1) * (b - 1)}};
            cert->base_type = SplittingType::from_multiplicities(parts);
            cert->conclusion = TwoBalanced{cert->base_type->interval()};
            break;
        }
        case Regime::BaseProjective:
            cert->conclusion = TwoBalanced{projective_envelope_type(inst).interval()};
            break;
        case Regime::Case1: {
            const InstanceParams quotient{b - 1, a, d, 0};
            require_recursion(inst, quotient);
            cert->children.push_back(build(quotient, depth_budget - 1));
            cert->conclusion = BoundedAbove{sub_slope(inst).ceil()};
            break;
        }
        case Regime::Case2:
        case Regime::Case3: {
            plan = plan_children(inst, info);
            require_recursion(inst, plan->floor_child);
            require_recursion(inst, plan->ceil_child);
            cert->children.push_back(build(plan->floor_child, depth_budget - 1));
            cert->children.push_back(build(plan->ceil_child, depth_budget - 1));
            cert->conclusion = TwoBalanced{plan->interval};
            break;
        }
    }

    for (auto& c : child_checks(info, plan ? &*plan : nullptr, cert->children)) {
        if (!c.pass) throw ProofStepFailed(c.name, inst);
        cert->checks.push_back(std::move(c));
    }
    if (cert->two_balanced() && cert->interval().length() > 2) {
        throw ProofStepFailed("conclusion.interval_length", inst);
    }
    memo_.emplace(inst, cert);
    return cert;
}

std::shared_ptr<const Certificate> certify(const InstanceParams& inst) {
    Certifier certifier;
    return certifier.certify(inst);
}

std::optional<InstanceParams> revalidate(const Certificate& cert) {
    const RegimeInfo info = classify_regime(cert.instance);
    if (info.regime != cert.regime || info.delta != cert.delta || info.epsilon != cert.epsilon) {
        return cert.instance;
    }
    std::vector<CheckResult> expected = node_checks(cert.instance, info);
    std::optional<ChildPlan> plan;
    if (info.regime == Regime::Case2 || info.regime == Regime::Case3) plan = plan_children(cert.instance, info);
    auto extra = child_checks(info, plan ? &*plan : nullptr, cert.children);
    expected.insert(expected.end(), extra.begin(), extra.end());
    if (expected != cert.checks) return cert.instance;
    if (!std::all_of(expected.begin(), expected.end(), [](const CheckResult& c) { return c.pass; })) {
        return cert.instance;
    }
    for (const auto& child : cert.children) {
        if (auto bad = revalidate(*child)) return bad;
    }
    return std::nullopt;
}

std::size_t certificate_depth(const Certificate& cert) {
    std::size_t deepest = 0;
    for (const auto& child : cert.children) deepest = std::max(deepest, certificate_depth(*child));
    return deepest + 1;
}

}  // namespace grassbal
