#include "grassbal/json_io.hpp"

namespace grassbal {

Json to_json(const SplittingType& t) { return Json(t.degrees()); }

Json to_json(const DegreeInterval& iv) { return Json::array({iv.lo, iv.hi}); }

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const ForcedSummand& f) {
    return {{"relation", f.relation == ForcedSummand::Relation::Equal ? "=" : ">="}, {"degree", f.degree}};
}

Json to_json(const PredictionReport& report) {
    Json classification = Json::array();
    for (auto c : report.classification) classification.push_back(to_string(c));
    Json forced = Json::array();
    for (const auto& f : report.forced_summands) forced.push_back(to_json(f));
    return {
        {"params",
         {{"a", report.params.a},
          {"b", report.params.b},
          {"d", report.params.d},
          {"char", report.params.characteristic},
          {"swapped", report.params.swapped}}},
        {"mu", to_json(report.slope)},
        {"tangent_type", to_json(report.tangent_type)},
        {"classification", classification},
        {"predicted_type", report.predicted_type ? to_json(*report.predicted_type) : Json(nullptr)},
        {"forced_summands", forced},
        {"proven_unbalanced", report.proven_unbalanced},
        {"assumptions", report.assumptions},
        {"theorem_guarantee", report.theorem_guarantee},
    };
}

Json to_json(const CheckResult& check) {
    return {{"name", check.name},
            {"lhs", to_json(check.lhs)},
            {"relation", to_string(check.relation)},
            {"rhs", to_json(check.rhs)},
            {"pass", check.pass}};
}

Json to_json(const Conclusion& conclusion) {
    if (const auto* tb = std::get_if<TwoBalanced>(&conclusion)) {
        return {{"kind", "TwoBalanced"}, {"interval", to_json(tb->interval)}};
    }
    return {{"kind", "BoundedAbove"}, {"cap", std::get<BoundedAbove>(conclusion).cap}};
}

Json to_json(const InstanceParams& inst) {
    return {{"a", inst.a}, {"b", inst.b}, {"d", inst.d}, {"n", inst.n}};
}

Json to_json(const Certificate& cert) {
    Json j = {{"instance", to_json(cert.instance)}, {"regime", to_string(cert.regime)}};
    if (cert.delta) j["delta"] = to_json(*cert.delta);
    if (cert.epsilon) j["epsilon"] = to_json(*cert.epsilon);
    j["slope"] = to_json(cert.slope);
    Json checks = Json::array();
    for (const auto& c : cert.checks) checks.push_back(to_json(c));
    j["checks"] = checks;
    if (cert.base_type) j["base_type"] = to_json(*cert.base_type);
    Json children = Json::array();
    for (const auto& child : cert.children) children.push_back(to_json(*child));
    j["children"] = children;
    j["conclusion"] = to_json(cert.conclusion);
    return j;
}

Json to_json(const LemmaReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations) violations.push_back(to_json(v));
    return {{"lemma", report.lemma},
            {"box",
             {{"a", {report.box.a_min, report.box.a_max}},
              {"b", {report.box.b_min, report.box.b_max}},
              {"d", {report.box.d_min, report.box.d_max}},
              {"n", {report.box.n_min, report.box.n_max}}}},
            {"tuples_checked", report.tuples_checked},
            {"pass", report.pass()},
            {"violations", violations}};
}

Json to_json(const ComputedBundle& bundle) {
    Json window = Json::array();
    for (const auto& s : bundle.diagnostics.window) window.push_back({s.twist, s.h0});
    return {{"params",
             {{"a", bundle.a},
              {"b", bundle.b},
              {"d", bundle.d},
              {"p", bundle.p},
              {"lower_mods", bundle.n_lower},
              {"upper_mods", bundle.n_upper}}},
            {"seed", bundle.seed},
            {"type", to_json(bundle.type)},
            {"diagnostics",
             {{"rank_ok", bundle.diagnostics.rank_ok},
              {"degree_ok", bundle.diagnostics.degree_ok},
              {"riemann_roch_ok", bundle.diagnostics.riemann_roch_ok},
              {"window", {bundle.diagnostics.m_lo, bundle.diagnostics.m_hi}},
              {"hilbert", window}}}};
}

Json to_json(const CurveChart& chart) {
    Json phi = Json::array();
    for (std::size_t i = 0; i < chart.phi.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < chart.phi.cols(); ++j) row.push_back(chart.phi.at(i, j).coeffs());
        phi.push_back(row);
    }
    return {{"a", chart.a},          {"b", chart.b},   {"d", chart.d}, {"p", chart.field.modulus()},
            {"column_degrees", chart.e}, {"seed", chart.seed}, {"phi", phi}};
}

SplittingType splitting_type_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("splitting type must be a non-empty array");
    return SplittingType(j.get<std::vector<Degree>>());
}

Rational rational_from_json(const Json& j) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace grassbal
