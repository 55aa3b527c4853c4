#include "grassbal/command.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>

#include "grassbal/json_io.hpp"
#include "grassbal/verify.hpp"

#ifndef GRASSBAL_VERSION
#define GRASSBAL_VERSION "dev"
#endif

namespace grassbal {

unsigned long long seed_from_environment(unsigned long long fallback) {
    const char* env = std::getenv("GB_SEED");
    if (!env || !*env) return fallback;
    try {
        std::size_t used = 0;
        const unsigned long long value = std::stoull(env, &used);
        return used == std::char_traits<char>::length(env) ? value : fallback;
    } catch (const std::exception&) {
        return fallback;
    }
}

namespace {

struct PredictArgs {
    std::int64_t a = 0, b = 0, d = 0;
    std::uint32_t characteristic = 0;
};
struct CertifyArgs {
    std::int64_t a = 0, b = 0, d = 0, n = 0;
};
struct SweepArgs {
    ParamBox box;
    unsigned jobs = 1;
};
struct ComputeArgs {
    std::int64_t a = 0, b = 0, d = 0;
    std::uint32_t p = PrimeField::kGeneralModulus;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::vector<std::string> mods;
    bool charts = false;
};
struct VerifyArgs {
    VerifyBox box;
    std::optional<std::uint64_t> seed;
    std::string out;
    bool timing = false;
};

int do_predict(const PredictArgs& args, std::ostream& out) {
    out << to_json(predict_report(args.a, args.b, args.d, args.characteristic)).dump(2) << "\n";
    return kExitOk;
}

int do_certify(const CertifyArgs& args, std::ostream& out) {
    try {
        Certifier certifier;
        out << to_json(*certifier.certify({args.a, args.b, args.d, args.n})).dump(2) << "\n";
        return kExitOk;
    } catch (const ProofStepFailed& e) {
        out << Json{{"error", "ProofStepFailed"}, {"step", e.step()}, {"instance", to_json(e.instance())}}.dump(2)
            << "\n";
    } catch (const RecursionInvariantBroken& e) {
        out << Json{{"error", "RecursionInvariantBroken"}, {"message", e.what()}}.dump(2) << "\n";
    }
    return kExitFailure;
}

int do_sweep(const SweepArgs& args, std::ostream& out) {
    const auto reports = sweep_lemmas(args.box, args.jobs);
    bool clean = true;
    Json summary = Json::array();
    for (const auto& rep : reports) {
        for (const auto& v : rep.violations) {
            out << Json{{"lemma", rep.lemma}, {"instance", to_json(v)}}.dump() << "\n";
        }
        clean &= rep.pass();
        summary.push_back({{"lemma", rep.lemma},
                           {"tuples_checked", rep.tuples_checked},
                           {"violations", rep.violations.size()}});
    }
    out << Json{{"summary", summary}, {"pass", clean}}.dump() << "\n";
    return clean ? kExitOk : kExitFailure;
}

int do_compute(const ComputeArgs& args, std::ostream& out) {
    CellRequest req;
    req.a = args.a;
    req.b = args.b;
    req.d = args.d;
    req.p = args.p;
    req.seed = args.seed ? *args.seed : seed_from_environment();
    req.samples = args.samples ? *args.samples : (args.p == 2 ? 50 : 5);
    for (const auto& m : args.mods) req.mods.push_back(m == "lower" ? ModKind::Lower : ModKind::Upper);
    const VerificationRecord rec = verify_cell(req);

    Json j = to_json(rec);
    j["type"] = rec.maxima.size() == 1 ? to_json(rec.maxima.front()) : Json(nullptr);
    j["prediction"] = to_json(rec.prediction);
    Json bundles = Json::array();
    for (const auto& s : rec.samples) bundles.push_back(to_json(s));
    j["bundles"] = bundles;
    if (args.charts) {
        Json charts = Json::array();
        for (const auto& s : rec.samples) charts.push_back(to_json(sample_chart(req.a, req.b, req.d, req.p, s.seed)));
        j["charts"] = charts;
    }
    out << j.dump(2) << "\n";
    return rec.failed() ? kExitFailure : kExitOk;
}

int do_verify(VerifyArgs args, std::ostream& out, std::ostream& err) {
    args.box.seed = args.seed ? *args.seed : seed_from_environment();
    std::ofstream file;
    if (!args.out.empty()) {
        file.open(args.out, std::ios::app);
        if (!file) {
            err << "error: cannot open " << args.out << " for appending\n";
            return kExitUsage;
        }
    }
    std::ostream& sink = args.out.empty() ? out : file;
    const auto records = verify_box(args.box);
    sink << run_header(args.box, GRASSBAL_VERSION).dump() << "\n";
    std::map<std::string, int> tally;
    bool failed = false;
    for (const auto& rec : records) {
        sink << to_json(rec, args.timing).dump() << "\n";
        ++tally[to_string(rec.verdict)];
        failed |= rec.failed();
    }
    sink.flush();
    if (!sink) {
        err << "error: write failed\n";
        return kExitUsage;
    }
    err << "cells: " << records.size();
    for (const auto& [name, count] : tally) err << ", " << name << ": " << count;
    err << "\n";
    return failed ? kExitFailure : kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal bundles of rational curves in Grassmannians: predictions, certificates, computations"};
    app.set_version_flag("--version", std::string(GRASSBAL_VERSION));
    app.require_subcommand(1);

    PredictArgs pa;
    auto* predict = app.add_subcommand("predict", "closed-form predictions and classification");
    predict->add_option("--a", pa.a, "subspace dimension")->required();
    predict->add_option("--b", pa.b, "quotient dimension")->required();
    predict->add_option("--d", pa.d, "curve degree")->required();
    predict->add_option("--char", pa.characteristic, "characteristic (0 or a prime)");

    CertifyArgs ca;
    auto* certify_cmd = app.add_subcommand("certify", "replay the induction for one instance");
    certify_cmd->add_option("--a", ca.a)->required();
    certify_cmd->add_option("--b", ca.b)->required();
    certify_cmd->add_option("--d", ca.d)->required();
    certify_cmd->add_option("--n", ca.n, "number of lower modifications");

    SweepArgs sa;
    auto* sweep = app.add_subcommand("sweep-lemmas", "exhaustive check of the induction inequalities");
    sweep->add_option("--a-min", sa.box.a_min);
    sweep->add_option("--a-max", sa.box.a_max)->required();
    sweep->add_option("--b-min", sa.box.b_min);
    sweep->add_option("--b-max", sa.box.b_max)->required();
    sweep->add_option("--d-min", sa.box.d_min);
    sweep->add_option("--d-max", sa.box.d_max)->required();
    sweep->add_option("--n-min", sa.box.n_min);
    sweep->add_option("--n-max", sa.box.n_max)->required();
    sweep->add_option("--jobs", sa.jobs)->check(CLI::PositiveNumber);

    ComputeArgs ka;
    auto* compute = app.add_subcommand("compute", "sample curves and compute normal bundle types");
    compute->add_option("--a", ka.a)->required();
    compute->add_option("--b", ka.b)->required();
    compute->add_option("--d", ka.d)->required();
    compute->add_option("--p", ka.p, "prime modulus");
    compute->add_option("--seed", ka.seed, "global seed (else GB_SEED, else 1)");
    compute->add_option("--samples", ka.samples, "curves to sample (default 5, 50 at p = 2)")
        ->check(CLI::PositiveNumber);
    compute->add_option("--mod", ka.mods, "add a modification at a new point")
        ->check(CLI::IsMember({"lower", "upper"}));
    compute->add_flag("--charts", ka.charts, "include the sampled charts");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "cross-check engine, classifier and certificates over a box");
    verify->add_option("--a-min", va.box.a_min);
    verify->add_option("--a-max", va.box.a_max)->required();
    verify->add_option("--b-max", va.box.b_max)->required();
    verify->add_option("--d-min", va.box.d_min);
    verify->add_option("--d-max", va.box.d_max)->required();
    verify->add_option("--ab-sum-max", va.box.ab_sum_max, "only cells with a + b <= this");
    verify->add_option("--p", va.box.p, "prime modulus");
    verify->add_option("--samples", va.box.samples)->check(CLI::PositiveNumber);
    verify->add_option("--jobs", va.box.jobs)->check(CLI::PositiveNumber);
    verify->add_option("--seed", va.seed, "global seed (else GB_SEED, else 1)");
    verify->add_option("--out", va.out, "append JSONL here instead of stdout");
    verify->add_flag("--timing", va.timing, "add per-cell wall time to records");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << GRASSBAL_VERSION << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*predict) return do_predict(pa, out);
        if (*certify_cmd) return do_certify(ca, out);
        if (*sweep) return do_sweep(sa, out);
        if (*compute) return do_compute(ka, out);
        if (*verify) return do_verify(va, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace grassbal
