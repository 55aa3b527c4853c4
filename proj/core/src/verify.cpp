#include "grassbal/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace grassbal {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Confirmed: return "Confirmed";
        case Verdict::ProvenExceptionConfirmed: return "ProvenExceptionConfirmed";
        case Verdict::Inconclusive: return "Inconclusive";
        case Verdict::Mismatch: return "Mismatch";
    }
    return "?";
}

namespace {

bool inside(const SplittingType& t, const DegreeInterval& iv) { return iv.lo <= t.min() && t.max() <= iv.hi; }

}  // namespace

VerificationRecord verify_cell(const CellRequest& req) {
    const auto start = std::chrono::steady_clock::now();
    VerificationRecord rec;
    rec.a = req.a;
    rec.b = req.b;
    rec.d = req.d;
    rec.p = req.p;
    rec.n = std::count(req.mods.begin(), req.mods.end(), ModKind::Lower);
    const bool has_upper = std::find(req.mods.begin(), req.mods.end(), ModKind::Upper) != req.mods.end();
    const bool plain = req.mods.empty();
    rec.char0_proxy = req.p >= PrimeField::kGeneralModulus;
    rec.prediction = predict_report(req.a, req.b, req.d, req.p);

    if (!has_upper) {
        // n = 0 is symmetric under duality; lower modifications are not.
        InstanceParams inst{rec.prediction.params.a, rec.prediction.params.b, req.d, 0};
        if (!plain) inst = {req.a, req.b, req.d, rec.n};
        if (inst.b < 2) {
            rec.notes.push_back("no certificate for b < 2");
        } else {
            try {
                Certifier certifier;
                rec.certificate = certifier.certify(inst)->conclusion;
            } catch (const ProofStepFailed& e) {
                rec.proof_error = e.what();
            } catch (const RecursionInvariantBroken& e) {
                rec.proof_error = e.what();
            }
        }
    } else {
        rec.notes.push_back("no prediction for upper modifications");
    }

    SampleRequest sreq;
    sreq.a = req.a;
    sreq.b = req.b;
    sreq.d = req.d;
    sreq.p = req.p;
    sreq.samples = req.samples;
    sreq.seed = req.seed;
    sreq.mods = req.mods;
    try {
        SampleOutcome outcome = sample_normal_bundles(sreq);
        rec.samples = std::move(outcome.bundles);
        rec.maxima = std::move(outcome.maxima);
        rec.rejected = outcome.rejected;
    } catch (const SamplingExhausted& e) {
        rec.notes.push_back(e.what());
    }

    for (const auto& s : rec.samples) {
        rec.balanced_witness |= s.type.is_balanced(1);
        rec.two_balanced_witness |= s.type.is_balanced(2);
        rec.riemann_roch_ok &= s.diagnostics.riemann_roch_ok;
    }

    bool mismatch = false;
    const auto* two_bal = rec.certificate ? std::get_if<TwoBalanced>(&*rec.certificate) : nullptr;
    const auto* bounded = rec.certificate ? std::get_if<BoundedAbove>(&*rec.certificate) : nullptr;
    bool certificate_consistent = rec.certificate.has_value();
    for (const auto& m : rec.maxima) {
        // The interval bounds N' only when neither specialization is already
        // 2-balanced, so leaving it is recorded but is not a contradiction.
        if (two_bal && m.is_balanced(2) && !inside(m, two_bal->interval)) {
            rec.outside_interval = true;
            rec.notes.push_back("witness " + m.str() + " outside certificate interval");
        }
        if (bounded && m.max() > bounded->cap) {
            certificate_consistent = false;
            rec.notes.push_back("witness " + m.str() + " exceeds certificate cap " + std::to_string(bounded->cap));
        }
    }
    if (!rec.two_balanced_witness) rec.notes.push_back("no 2-balanced witness within the sample budget");

    const Classification primary = rec.prediction.primary();
    if (plain) {
        if (rec.prediction.proven_unbalanced && rec.balanced_witness) {
            mismatch = true;
            rec.notes.push_back("balanced witness for a proven exception");
        }
        if (primary == Classification::Char2) {
            for (const auto& m : rec.maxima) {
                const Dominance cmp = dominance_compare(m, *rec.prediction.predicted_type);
                if (cmp == Dominance::MoreBalanced || cmp == Dominance::Incomparable) {
                    mismatch = true;
                    rec.notes.push_back("witness " + m.str() + " is not dominated by the characteristic 2 type");
                }
            }
        }
    }

    const bool exact_match = rec.prediction.predicted_type && rec.maxima.size() == 1 &&
                             rec.maxima.front() == *rec.prediction.predicted_type;
    if (mismatch) {
        rec.verdict = Verdict::Mismatch;
    } else if (!plain) {
        rec.verdict = (!has_upper && certificate_consistent && rec.two_balanced_witness) ? Verdict::Confirmed
                                                                                        : Verdict::Inconclusive;
    } else if (primary == Classification::TangentException && !rec.prediction.proven_unbalanced) {
        rec.verdict = Verdict::Inconclusive;
        if (rec.balanced_witness) rec.notes.push_back("balanced witness where the tangent condition holds but forces nothing");
    } else if (primary == Classification::Degeneracy || primary == Classification::TangentException) {
        rec.verdict = rec.two_balanced_witness ? Verdict::ProvenExceptionConfirmed : Verdict::Inconclusive;
        if (primary == Classification::Degeneracy && !exact_match) {
            rec.verdict = Verdict::Inconclusive;
            rec.notes.push_back("dominance-maximal type differs from the degeneracy decomposition");
        }
        if (primary == Classification::TangentException) {
            for (const auto& f : rec.prediction.forced_summands) {
                for (const auto& m : rec.maxima) {
                    if (!satisfies(m, f)) rec.notes.push_back("witness " + m.str() + " lacks a forced summand");
                }
            }
        }
    } else if (primary == Classification::Char2) {
        rec.verdict = exact_match ? Verdict::Confirmed : Verdict::Inconclusive;
    } else {
        rec.verdict = rec.balanced_witness ? Verdict::Confirmed : Verdict::Inconclusive;
    }
    if (!rec.proof_error.empty() && rec.verdict != Verdict::Mismatch) rec.verdict = Verdict::Inconclusive;

    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

std::vector<CellRequest> box_cells(const VerifyBox& box) {
    std::vector<CellRequest> cells;
    for (std::int64_t a = std::max<std::int64_t>(1, box.a_min); a <= box.a_max; ++a) {
        for (std::int64_t b = std::max<std::int64_t>(a, 2); b <= box.b_max; ++b) {
            if (box.ab_sum_max > 0 && a + b > box.ab_sum_max) continue;
            for (std::int64_t d = std::max<std::int64_t>(1, box.d_min); d <= box.d_max; ++d) {
                cells.push_back({a, b, d, box.p, box.samples, box.seed, {}});
            }
        }
    }
    return cells;
}

std::vector<VerificationRecord> verify_box(const VerifyBox& box) {
    const auto cells = box_cells(box);
    std::vector<VerificationRecord> out(cells.size());
    const unsigned jobs = std::max(1u, std::min<unsigned>(box.jobs, static_cast<unsigned>(cells.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) out[i] = verify_cell(cells[i]);
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return out;
}

Json to_json(const VerificationRecord& rec, bool with_timing) {
    Json classification = Json::array();
    for (auto c : rec.prediction.classification) classification.push_back(to_string(c));
    Json forced = Json::array();
    for (const auto& f : rec.prediction.forced_summands) forced.push_back(to_json(f));
    Json observed = Json::array();
    for (const auto& m : rec.maxima) observed.push_back(to_json(m));
    Json sample_types = Json::array();
    Json seeds = Json::array();
    for (const auto& s : rec.samples) {
        sample_types.push_back(to_json(s.type));
        seeds.push_back(s.seed);
    }
    Json j = {
        {"params", {{"a", rec.a}, {"b", rec.b}, {"d", rec.d}, {"p", rec.p}, {"n", rec.n}}},
        {"char0_proxy", rec.char0_proxy},
        {"classification", classification},
        {"proven_unbalanced", rec.prediction.proven_unbalanced},
        {"predicted_type",
         rec.prediction.predicted_type ? to_json(*rec.prediction.predicted_type) : Json(nullptr)},
        {"forced_summands", forced},
        {"certificate", rec.certificate ? to_json(*rec.certificate) : Json(nullptr)},
    };
    if (!rec.proof_error.empty()) j["proof_error"] = rec.proof_error;
    j["observed"] = observed;
    j["sample_types"] = sample_types;
    j["seeds"] = seeds;
    j["rejected"] = rec.rejected;
    j["balanced_witness"] = rec.balanced_witness;
    j["two_balanced_witness"] = rec.two_balanced_witness;
    j["riemann_roch_ok"] = rec.riemann_roch_ok;
    j["outside_interval"] = rec.outside_interval;
    j["verdict"] = to_string(rec.verdict);
    j["notes"] = rec.notes;
    if (with_timing) j["seconds"] = rec.seconds;
    return j;
}

Json run_header(const VerifyBox& box, const std::string& version) {
    return {{"run",
             {{"tool", "grassbal"},
              {"version", version},
              {"seed", box.seed},
              {"p", box.p},
              {"samples", box.samples},
              {"box",
               {{"a", {box.a_min, box.a_max}},
                {"b_max", box.b_max},
                {"d", {box.d_min, box.d_max}},
                {"ab_sum_max", box.ab_sum_max}}}}}};
}

}  // namespace grassbal
