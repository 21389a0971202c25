#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "slicedepth/slicedepth.hpp"

namespace {

using namespace slicedepth;

constexpr int kExitConditionNotMet = 1;
constexpr int kExitInputError = 2;

#ifndef SLICEDEPTH_DEFAULT_TABLE
#define SLICEDEPTH_DEFAULT_TABLE "data/two_bridge_rolfsen.csv"
#endif

std::string word_display(const OEWord& w) { return w.empty() ? "(empty)" : w; }

void print_verdict(std::ostream& os, const SliceDepthVerdict& v) {
    os << "twist: " << v.twist << "\n";
    auto line = [&](Bound bound, const std::optional<int>& value, const char* label) {
        os << label << ": ";
        if (!value) {
            os << "none\n";
            return;
        }
        os << *value;
        for (const Justification& j : v.justifications)
            if (j.bound == bound) os << "  (" << j.citation << ")";
        os << "\n";
    };
    line(Bound::Lower, v.lower, "lower");
    line(Bound::Upper, v.upper, "upper");
    os << "exact: " << (v.exact ? "yes" : "no") << "\n";
    if (v.exact)
        os << "slice depth: " << *v.lower << "\n";
    else if (v.lower && v.upper)
        os << "slice depth: between " << *v.lower << " and " << *v.upper << "\n";
    else if (v.upper)
        os << "slice depth: at most " << *v.upper << "\n";
    else if (v.lower)
        os << "slice depth: at least " << *v.lower << "\n";
    else
        os << "slice depth: no bound established\n";
}

std::vector<Int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<Int> out;
    for (const std::string& part : detail::split(text, ',')) {
        std::string t = detail::trim(part);
        if (t.empty()) throw Error(flag + ": empty entry in \"" + text + "\"");
        try {
            out.push_back(Int(t));
        } catch (const std::exception&) {
            throw Error(flag + ": \"" + t + "\" is not an integer");
        }
    }
    return out;
}

int run_two_bridge(const std::string& notation, unsigned twist, bool no_rep_search,
                   bool require) {
    NotationInput input = parse_notation(notation);
    TwoBridgeOptions opts{!no_rep_search};
    SliceDepthVerdict verdict;
    OEWord word;
    bool accepted = false;
    if (const EvenCF* cf = std::get_if<EvenCF>(&input.parsed)) {
        if (cf->size() % 2 != 0) throw OddLengthError();
        word = build_word(*cf);
        Fraction f = eval_cf(*cf);
        std::cout << "knot: " << render_notation(input) << " = " << f << "\n";
        accepted = opts.representative_search ? two_bridge_word_condition(f, opts).accepted
                                              : reduces(word).accepted;
        verdict = classify_two_bridge(*cf, twist, opts);
    } else if (const Fraction* f = std::get_if<Fraction>(&input.parsed)) {
        std::cout << "knot: " << f->str() << "\n";
        TwoBridgeWordCondition cond = two_bridge_word_condition(*f, opts);
        word = cond.word;
        accepted = cond.accepted;
        verdict = classify_two_bridge(*f, twist, opts);
    } else {
        throw Error("two-bridge expects C(a1,...,am) or p/q notation");
    }
    std::cout << "word: " << word_display(word) << "\n";
    std::cout << "word condition: " << (accepted ? "satisfied" : "not satisfied") << "\n";
    print_verdict(std::cout, verdict);
    return (require && !verdict.upper) ? kExitConditionNotMet : 0;
}

int run_pretzel(const std::string& notation, unsigned twist, bool allow_i_zero, bool require) {
    NotationInput input = parse_notation(notation);
    const PretzelParams* params = std::get_if<PretzelParams>(&input.parsed);
    if (!params) throw Error("pretzel expects P(p,q,r) notation");
    std::cout << "knot: " << render_notation(input) << "\n";
    SliceDepthVerdict verdict =
        classify_pretzel(params->p, params->q, params->r, twist, {allow_i_zero});
    std::cout << "pattern (4i+1, 8i+1, 8i+3): "
              << (pretzel_pattern_matches(params->p, params->q, params->r, {allow_i_zero})
                      ? "matched"
                      : "not matched")
              << "\n";
    print_verdict(std::cout, verdict);
    return (require && !verdict.upper) ? kExitConditionNotMet : 0;
}

int run_ribbon(const std::string& a, long long sigma, long long w, unsigned twist, bool require) {
    RibbonOneFusionData data{parse_int_list(a, "--a"), Int(sigma), Int(w)};
    SliceDepthVerdict verdict = classify_ribbon_one_fusion(data, twist);
    print_verdict(std::cout, verdict);
    return (require && !verdict.upper) ? kExitConditionNotMet : 0;
}

int run_unknotting(const std::vector<std::string>& bands, unsigned twist, bool require) {
    UnknottingBandData data;
    for (const std::string& band : bands) {
        std::vector<Int> parts = parse_int_list(band, "--band");
        if (parts.size() != 3) throw Error("--band expects sigma,w,lambda, got \"" + band + "\"");
        data.bands.push_back({parts[0], parts[1], parts[2]});
    }
    SliceDepthVerdict verdict = classify_unknotting(data, twist);
    print_verdict(std::cout, verdict);
    return (require && !verdict.upper) ? kExitConditionNotMet : 0;
}

int run_pell(int d, std::size_t count) {
    for (const PellRecord& r : pell_family(d, count)) {
        std::cout << "n=" << r.index << ": x/y = " << r.convergent_x << "/" << r.convergent_y
                  << ", p/q = " << r.shifted_p << "/" << r.shifted_q << "\n";
    }
    return 0;
}

int run_survey(const std::string& table_path, const std::string& format) {
    std::ifstream in(table_path);
    if (!in) throw Error("cannot open table file " + table_path);
    std::vector<KnotRecord> records = load_table(in);
    SurveyReport report = run_survey(records);
    ReportFormat fmt = ReportFormat::Text;
    if (format == "json") fmt = ReportFormat::Json;
    else if (format == "csv") fmt = ReportFormat::Csv;
    std::cout << emit_report(report, fmt);
    if (report.warning) std::cerr << "warning: " << *report.warning << "\n";
    return 0;
}

int run_word(const std::string& notation, bool trace) {
    NotationInput input = parse_notation(notation);
    OEWord word;
    if (const EvenCF* cf = std::get_if<EvenCF>(&input.parsed)) {
        word = build_word(*cf);
    } else if (const Fraction* f = std::get_if<Fraction>(&input.parsed)) {
        word = build_word(even_cf(*f));
    } else {
        throw Error("word expects C(a1,...,am) or p/q notation");
    }
    ReductionResult result = reduces(word);
    std::cout << "word: " << word_display(word) << "\n";
    std::cout << "accepted: " << (result.accepted ? "true" : "false") << "\n";
    if (trace && result.witness) {
        if (!replay_witness(word, *result.witness)) throw Error("witness failed to replay");
        std::cout << "trace, " << result.witness->steps.size() << " step(s):\n";
        std::size_t i = 0;
        for (const ReductionStep& s : result.witness->steps) {
            std::cout << "  " << ++i << ". delete " << rule_name(s.rule) << " at position "
                      << s.position << " -> " << word_display(s.word_after) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"slice-depth bounds for twist-spun knots"};
    app.require_subcommand(1);

    std::string notation;
    unsigned twist = 2;
    bool require = false;
    bool no_rep_search = false;
    bool allow_i_zero = false;
    bool trace = false;
    std::string ribbon_a;
    long long ribbon_sigma = 0, ribbon_w = 0;
    std::vector<std::string> bands;
    int pell_d = 5;
    std::size_t pell_count = 3;
    std::string table_path = SLICEDEPTH_DEFAULT_TABLE;
    std::string format = "text";

    CLI::App* two_bridge =
        app.add_subcommand("two-bridge", "classify the n-twist spin of a 2-bridge knot");
    two_bridge->add_option("notation", notation, "C(a1,...,am) or p/q")->required();
    two_bridge->add_option("--twist", twist, "twist parameter n (default 2)");
    two_bridge->add_flag("--no-representative-search", no_rep_search,
                         "try only the given presentation");
    two_bridge->add_flag("--require", require, "exit 1 when the word condition fails");

    CLI::App* pretzel =
        app.add_subcommand("pretzel", "classify the n-twist spin of a pretzel knot");
    pretzel->add_option("notation", notation, "P(p,q,r)")->required();
    pretzel->add_option("--twist", twist, "twist parameter n (default 2)");
    pretzel->add_flag("--allow-i-zero", allow_i_zero, "accept the i = 0 pattern member P(1,1,3)");
    pretzel->add_flag("--require", require, "exit 1 when the pattern does not match");

    CLI::App* ribbon =
        app.add_subcommand("ribbon", "classify the n-twist spin of a ribbon knot of 1-fusion");
    ribbon->add_option("--a", ribbon_a, "winding counts a1,...,am")->required();
    ribbon->add_option("--sigma", ribbon_sigma, "signed sum of full twists in the ribbon band")
        ->required();
    ribbon->add_option("--w", ribbon_w, "crossing-sign sum of the unknotted band core")
        ->required();
    ribbon->add_option("--twist", twist, "twist parameter n (default 2)");
    ribbon->add_flag("--require", require, "exit 1 when the parity condition fails");

    CLI::App* unknotting = app.add_subcommand(
        "unknotting", "classify the n-twist spin of a knot given by unknotting bands");
    unknotting->add_option("--band", bands, "one band as sigma,w,lambda (repeatable)")
        ->required();
    unknotting->add_option("--twist", twist, "twist parameter n (default 2)");
    unknotting->add_flag("--require", require, "exit 1 when the parity condition fails");

    CLI::App* pell = app.add_subcommand("pell", "convergent families for sqrt(5) and sqrt(6)");
    pell->add_option("--d", pell_d, "radicand, 5 or 6")->required();
    pell->add_option("--count", pell_count, "number of odd-index convergents (default 3)");

    CLI::App* survey =
        app.add_subcommand("survey", "run the reduction condition over a knot table");
    survey->add_option("--table", table_path, "knot table CSV (default: bundled table)");
    survey->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* word = app.add_subcommand("word", "O/E word of a 2-bridge knot and its reduction");
    word->add_option("notation", notation, "C(a1,...,am) or p/q")->required();
    word->add_flag("--trace", trace, "print a reduction witness when accepted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (*two_bridge) return run_two_bridge(notation, twist, no_rep_search, require);
        if (*pretzel) return run_pretzel(notation, twist, allow_i_zero, require);
        if (*ribbon) return run_ribbon(ribbon_a, ribbon_sigma, ribbon_w, twist, require);
        if (*unknotting) return run_unknotting(bands, twist, require);
        if (*pell) return run_pell(pell_d, pell_count);
        if (*survey) return run_survey(table_path, format);
        if (*word) return run_word(notation, trace);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return 0;
}
