// weightforge command-line interface: construct codes, verify spectra,
// report reachable distinct-weight counts.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "weightforge/codefile.hpp"
#include "weightforge/construct.hpp"

namespace wf = weightforge;
using nlohmann::json;

namespace {

json trace_to_json(const wf::ConstructionTrace& trace) {
    json steps = json::array();
    for (const wf::TraceStep& st : trace.steps) {
        json s;
        s["kind"] = wf::to_string(st.kind);
        using Kind = wf::TraceStep::Kind;
        switch (st.kind) {
            case Kind::BaseDim1:
            case Kind::BaseSimplex:
            case Kind::ExtendLemma3:
                s["new_len"] = st.new_len;
                break;
            case Kind::Widen:
                s["old_len"] = st.old_len;
                s["new_len"] = st.new_len;
                break;
            case Kind::FindTranslate:
                s["samples_tried"] = st.samples_tried;
                s["best_count"] = st.best_count;
                break;
            case Kind::Refine:
                s["old_count"] = st.old_count;
                s["new_count"] = st.new_count;
                s["old_len"] = st.old_len;
                s["new_len"] = st.new_len;
                break;
            case Kind::ExtendLemma1:
            case Kind::ExtendLemma4:
                s["m"] = st.m;
                s["new_len"] = st.new_len;
                break;
        }
        steps.push_back(std::move(s));
    }
    return json{{"q", trace.q},
                {"seed", trace.seed},
                {"final_len", trace.final_len},
                {"final_k", trace.final_k},
                {"final_distinct", trace.final_distinct},
                {"steps", steps}};
}

json report_json(const wf::LinearCode& code, const wf::ConstructionTrace& trace) {
    wf::WeightSpectrum sp = wf::spectrum(code);
    uint64_t bound = wf::mws_bound(sp.q, sp.k);
    return json{{"q", sp.q},
                {"k", sp.k},
                {"n", sp.n},
                {"distinct_total", sp.distinct_total()},
                {"distinct_nonzero", sp.distinct_nonzero()},
                {"bound", bound},
                {"is_mws", sp.distinct_total() == bound},
                {"trace", trace_to_json(trace)}};
}

struct ConstructArgs {
    std::string kind;
    unsigned q = 0;
    unsigned k = 0;
    uint64_t s = 0;
    uint64_t seed = 0;
    std::string in_path;
    std::string out_path;
    std::string report_path;
    bool q_set = false, k_set = false, s_set = false;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw wf::Error(msg);
}

int run_construct(const ConstructArgs& a) {
    wf::ConstructionResult result = [&]() -> wf::ConstructionResult {
        if (a.kind == "simplex") {
            require(a.q_set && a.k_set, "construct simplex requires --q and --k");
            wf::LinearCode code = wf::simplex(a.q, a.k);
            wf::ConstructionTrace trace;
            trace.q = a.q;
            trace.seed = a.seed;
            wf::TraceStep st{};
            st.kind = wf::TraceStep::Kind::BaseSimplex;
            st.new_len = code.length();
            trace.steps.push_back(st);
            trace.final_len = code.length();
            trace.final_k = code.dim();
            trace.final_distinct = wf::spectrum(code).distinct_total();
            return {std::move(code), std::move(trace)};
        }
        if (a.kind == "mws") {
            require(a.q_set && a.k_set, "construct mws requires --q and --k");
            return wf::mws_construct(a.q, a.k, a.seed);
        }
        if (a.kind == "weights") {
            require(a.k_set && a.s_set, "construct weights requires --k and --s");
            require(!a.q_set || a.q == 2, "construct weights is binary only (q = 2)");
            return wf::binary_weight_count_code(a.k, a.s, a.seed);
        }
        if (a.kind == "lemma3") {
            require(!a.in_path.empty(), "construct lemma3 requires --in <codefile>");
            wf::LinearCode input = wf::read_code_file(a.in_path);
            wf::LinearCode code = wf::lemma3_extend(input);
            wf::ConstructionTrace trace;
            trace.q = code.field().q();
            trace.seed = a.seed;
            wf::TraceStep st{};
            st.kind = wf::TraceStep::Kind::ExtendLemma3;
            st.new_len = code.length();
            trace.steps.push_back(st);
            trace.final_len = code.length();
            trace.final_k = code.dim();
            trace.final_distinct = wf::spectrum(code).distinct_total();
            return {std::move(code), std::move(trace)};
        }
        if (a.kind == "lemma4") {
            require(!a.in_path.empty(), "construct lemma4 requires --in <codefile>");
            wf::LinearCode input = wf::read_code_file(a.in_path);
            return wf::lemma4_extend(input, a.seed);
        }
        throw wf::Error("unknown construct kind '" + a.kind +
                        "' (expected simplex, mws, weights, lemma3 or lemma4)");
    }();

    require(!a.out_path.empty(), "construct requires --out <codefile>");
    wf::write_code_file(a.out_path, result.code);
    json report = report_json(result.code, result.trace);
    std::string text = report.dump(2);
    std::cout << text << "\n";
    if (!a.report_path.empty()) {
        std::ofstream out(a.report_path, std::ios::binary);
        require(bool(out), "cannot open report file '" + a.report_path + "'");
        out << text << "\n";
    }
    return 0;
}

int run_verify(const std::string& path, std::optional<int64_t> expect_distinct,
               bool expect_mws) {
    wf::LinearCode code = wf::read_code_file(path);
    wf::WeightSpectrum sp = wf::spectrum(code);
    uint64_t bound = wf::mws_bound(sp.q, sp.k);
    bool mws = sp.distinct_total() == bound;

    std::cout << "q=" << sp.q << " k=" << sp.k << " n=" << sp.n << "\n";
    std::cout << "spectrum:\n";
    for (const auto& [w, mult] : sp.entries) std::cout << "  " << w << ": " << mult << "\n";
    std::cout << "distinct_total=" << sp.distinct_total() << "\n";
    std::cout << "distinct_nonzero=" << sp.distinct_nonzero() << "\n";
    std::cout << "bound=" << bound << "\n";
    std::cout << "is_mws=" << (mws ? "true" : "false") << "\n";

    int rc = 0;
    if (expect_distinct && uint64_t(*expect_distinct) != sp.distinct_total()) {
        std::cerr << "expectation failed: distinct_total is " << sp.distinct_total()
                  << ", expected " << *expect_distinct << "\n";
        rc = 1;
    }
    if (expect_mws && !mws) {
        std::cerr << "expectation failed: code is not MWS (distinct_total "
                  << sp.distinct_total() << " < bound " << bound << ")\n";
        rc = 1;
    }
    return rc;
}

int run_reachable(uint64_t q, uint64_t k) {
    std::vector<uint64_t> reach;
    uint64_t max_s = 0;
    try {
        reach = wf::reachable_counts(q, k);
        max_s = wf::mws_bound(q, k) - 1;
    } catch (const wf::CapExceeded& e) {
        // parameter too large for the closure arithmetic: usage error
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << "q=" << q << " k=" << k << " max_s=" << max_s << "\n";
    std::cout << "reachable:";
    for (uint64_t s : reach) std::cout << " " << s;
    std::cout << "\n";
    std::cout << "gaps:";
    size_t idx = 0;
    bool any_gap = false;
    for (uint64_t s = 1; s <= max_s; ++s) {
        if (idx < reach.size() && reach[idx] == s) {
            ++idx;
        } else {
            std::cout << " " << s;
            any_gap = true;
        }
    }
    if (!any_gap) std::cout << " (none)";
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weightforge: linear codes with prescribed distinct-weight counts"};
    app.require_subcommand(1);

    ConstructArgs cargs;
    CLI::App* construct = app.add_subcommand(
        "construct", "Build a code (simplex | mws | weights | lemma3 | lemma4)");
    construct->add_option("kind", cargs.kind, "construction kind")->required();
    construct->add_option("--q", cargs.q, "field order");
    construct->add_option("--k", cargs.k, "dimension");
    construct->add_option("--s", cargs.s, "distinct nonzero weight count (weights)");
    construct->add_option("--seed", cargs.seed, "PRNG seed (default 0)");
    construct->add_option("--in", cargs.in_path, "input code file (lemma3/lemma4)");
    construct->add_option("--out", cargs.out_path, "output code file")->required();
    construct->add_option("--report", cargs.report_path, "also write the JSON report here");

    std::string verify_path;
    std::optional<int64_t> expect_distinct;
    bool expect_mws = false;
    CLI::App* verify = app.add_subcommand("verify", "Enumerate and print a code's spectrum");
    verify->add_option("file", verify_path, "code file")->required();
    verify->add_option("--expect-distinct", expect_distinct,
                       "fail unless distinct_total equals this");
    verify->add_flag("--expect-mws", expect_mws, "fail unless the code is MWS");

    uint64_t rq = 0, rk = 0;
    CLI::App* reachable =
        app.add_subcommand("reachable", "Nonzero-weight counts reachable by the lemmas");
    reachable->add_option("--q", rq, "field order")->required();
    reachable->add_option("--k", rk, "dimension")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        // the construct subcommand tracks which options were provided
        if (construct->parsed()) {
            cargs.q_set = construct->count("--q") > 0;
            cargs.k_set = construct->count("--k") > 0;
            cargs.s_set = construct->count("--s") > 0;
            return run_construct(cargs);
        }
        if (verify->parsed()) return run_verify(verify_path, expect_distinct, expect_mws);
        if (reachable->parsed()) return run_reachable(rq, rk);
    } catch (const wf::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
